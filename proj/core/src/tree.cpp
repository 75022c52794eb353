#include "lspace/tree.hpp"

namespace lspace {

namespace {

size_t count_nonintegers(const std::vector<Rational>& slopes) {
    size_t c = 0;
    for (const Rational& y : slopes)
        if (!y.is_integer()) ++c;
    return c;
}

}  // namespace

bool TreeManifold::is_solid_torus() const {
    return base == Base::Orientable && daughters.empty() && count_nonintegers(slopes) <= 1;
}

void TreeManifold::validate(const std::string& path) const {
    for (size_t i = 0; i < slopes.size(); ++i) {
        if (slopes[i].is_infinite())
            throw ValidationError(path + ".slopes[" + std::to_string(i) + "]",
                                  "infinite filling slope is not allowed (non-prime piece)");
    }
    for (size_t i = 0; i < daughters.size(); ++i) {
        const std::string dpath = path + ".daughters[" + std::to_string(i) + "]";
        if (const Subtree* sub = std::get_if<Subtree>(&daughters[i])) {
            if (!sub->gluing.unimodular())
                throw ValidationError(dpath + ".gluing", "determinant ±1 required");
            if (!sub->manifold)
                throw ValidationError(dpath + ".manifold", "missing subtree");
            if (sub->manifold->is_solid_torus())
                throw ValidationError(dpath + ".manifold",
                                      "solid torus daughter; absorb it into the parent as a "
                                      "Dehn filling at the image of its longitude");
            sub->manifold->validate(dpath + ".manifold");
        }
    }
}

bool operator==(const Subtree& a, const Subtree& b) {
    if (!(a.gluing == b.gluing)) return false;
    if (a.manifold == b.manifold) return true;
    if (!a.manifold || !b.manifold) return false;
    return *a.manifold == *b.manifold;
}

bool operator==(const TreeManifold& a, const TreeManifold& b) {
    return a.base == b.base && a.slopes == b.slopes && a.daughters == b.daughters;
}

}  // namespace lspace
