#include "lspace/treedoc.hpp"

#include <json.hpp>

#include <limits>
#include <memory>

namespace lspace {

namespace {

using nlohmann::json;

Rational parse_slope(const json& j, const std::string& path) {
    if (!j.is_string()) throw ParseError(path, "expected a slope string");
    try {
        return Rational::parse(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
        throw ParseError(path, e.what());
    }
}

Integer parse_entry(const json& j, const std::string& path) {
    if (j.is_number_integer()) return Integer(j.get<long long>());
    if (j.is_string()) {
        try {
            return Integer(j.get<std::string>());
        } catch (const std::exception&) {
        }
    }
    throw ParseError(path, "expected an integer matrix entry");
}

LInterval parse_interval(const json& j, const std::string& path) {
    if (!j.is_object()) throw ParseError(path, "expected an interval object");
    if (!j.contains("kind") || !j.at("kind").is_string())
        throw ParseError(path + ".kind", "expected \"empty\", \"point\" or \"bracket\"");
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "empty") return LInterval::empty();
    if (kind == "point") {
        if (!j.contains("value")) throw ParseError(path + ".value", "required for a point");
        return LInterval::point(parse_slope(j.at("value"), path + ".value"));
    }
    if (kind == "bracket") {
        if (!j.contains("left") || !j.contains("right"))
            throw ParseError(path, "bracket needs \"left\" and \"right\"");
        return LInterval::bracket(parse_slope(j.at("left"), path + ".left"),
                                  parse_slope(j.at("right"), path + ".right"));
    }
    throw ParseError(path + ".kind", "expected \"empty\", \"point\" or \"bracket\"");
}

GluingMatrix parse_gluing(const json& j, const std::string& path) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_array() || !j[1].is_array() ||
        j[0].size() != 2 || j[1].size() != 2)
        throw ParseError(path, "expected [[a,b],[c,d]]");
    GluingMatrix m{parse_entry(j[0][0], path), parse_entry(j[0][1], path),
                   parse_entry(j[1][0], path), parse_entry(j[1][1], path)};
    if (!m.unimodular()) throw ParseError(path, "determinant ±1 required");
    return m;
}

TreeManifold parse_manifold(const json& j, const std::string& path) {
    if (!j.is_object()) throw ParseError(path, "expected a manifold object");
    TreeManifold tree;

    if (!j.contains("base") || !j.at("base").is_string())
        throw ParseError(path + ".base", "expected \"S2\" or \"RP2\"");
    const std::string base = j.at("base").get<std::string>();
    if (base == "S2")
        tree.base = Base::Orientable;
    else if (base == "RP2")
        tree.base = Base::NonOrientable;
    else
        throw ParseError(path + ".base", "expected \"S2\" or \"RP2\"");

    if (!j.contains("slopes") || !j.at("slopes").is_array())
        throw ParseError(path + ".slopes", "expected an array of slope strings");
    for (size_t i = 0; i < j.at("slopes").size(); ++i) {
        const std::string spath = path + ".slopes[" + std::to_string(i) + "]";
        Rational y = parse_slope(j.at("slopes")[i], spath);
        if (y.is_infinite())
            throw ParseError(spath, "infinite filling slope is not allowed (non-prime piece)");
        tree.slopes.push_back(std::move(y));
    }

    if (j.contains("daughters")) {
        if (!j.at("daughters").is_array())
            throw ParseError(path + ".daughters", "expected an array");
        for (size_t i = 0; i < j.at("daughters").size(); ++i) {
            const json& dj = j.at("daughters")[i];
            const std::string dpath = path + ".daughters[" + std::to_string(i) + "]";
            if (!dj.is_object()) throw ParseError(dpath, "expected an object");
            const bool has_interval = dj.contains("interval");
            const bool has_gluing = dj.contains("gluing") || dj.contains("manifold");
            if (has_interval == has_gluing)
                throw ParseError(dpath,
                                 "expected either {\"interval\": ...} or "
                                 "{\"gluing\": ..., \"manifold\": ...}");
            if (has_interval) {
                tree.daughters.push_back(parse_interval(dj.at("interval"), dpath + ".interval"));
            } else {
                if (!dj.contains("gluing"))
                    throw ParseError(dpath + ".gluing", "required for a subtree daughter");
                if (!dj.contains("manifold"))
                    throw ParseError(dpath + ".manifold", "required for a subtree daughter");
                Subtree sub;
                sub.gluing = parse_gluing(dj.at("gluing"), dpath + ".gluing");
                sub.manifold = std::make_shared<const TreeManifold>(
                    parse_manifold(dj.at("manifold"), dpath + ".manifold"));
                if (sub.manifold->is_solid_torus())
                    throw ParseError(dpath + ".manifold",
                                     "solid torus daughter; absorb it into the parent as a "
                                     "Dehn filling at the image of its longitude");
                tree.daughters.push_back(std::move(sub));
            }
        }
    }
    return tree;
}

json interval_json(const LInterval& interval) {
    json j;
    switch (interval.kind()) {
        case LInterval::Kind::Empty:
            j["kind"] = "empty";
            break;
        case LInterval::Kind::Point:
            j["kind"] = "point";
            j["value"] = interval.value().str();
            break;
        case LInterval::Kind::Bracket:
            j["kind"] = "bracket";
            j["left"] = interval.left().str();
            j["right"] = interval.right().str();
            break;
    }
    return j;
}

json matrix_entry_json(const Integer& v) {
    if (v >= std::numeric_limits<long long>::min() &&
        v <= std::numeric_limits<long long>::max())
        return json(static_cast<long long>(v));
    return json(v.str());
}

json manifold_json(const TreeManifold& tree) {
    json j;
    j["base"] = tree.base == Base::Orientable ? "S2" : "RP2";
    j["slopes"] = json::array();
    for (const Rational& y : tree.slopes) j["slopes"].push_back(y.str());
    j["daughters"] = json::array();
    for (const Daughter& d : tree.daughters) {
        json dj;
        if (const LInterval* leaf = std::get_if<LInterval>(&d)) {
            dj["interval"] = interval_json(*leaf);
        } else {
            const Subtree& sub = std::get<Subtree>(d);
            dj["gluing"] = json::array(
                {json::array({matrix_entry_json(sub.gluing.a), matrix_entry_json(sub.gluing.b)}),
                 json::array({matrix_entry_json(sub.gluing.c), matrix_entry_json(sub.gluing.d)})});
            dj["manifold"] = manifold_json(*sub.manifold);
        }
        j["daughters"].push_back(std::move(dj));
    }
    return j;
}

}  // namespace

TreeManifold parse_tree(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError("document", std::string("invalid JSON: ") + e.what());
    }
    TreeManifold tree = parse_manifold(j, "manifold");
    tree.validate();
    return tree;
}

std::string render_tree(const TreeManifold& tree, int indent) {
    return manifold_json(tree).dump(indent);
}

}  // namespace lspace
