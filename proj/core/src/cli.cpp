#include "lspace/cli.hpp"

#include "lspace/cabling.hpp"
#include "lspace/gluing.hpp"
#include "lspace/graph.hpp"
#include "lspace/treedoc.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <ostream>
#include <sstream>

namespace lspace::cli {

namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot read file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

TreeManifold load_tree(const std::string& path) { return parse_tree(read_file(path)); }

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

json endpoints_json(const Endpoints& e) {
    json j;
    j["y_minus"] = e.y_minus.str();
    j["y_plus"] = e.y_plus.str();
    j["k_minus"] = e.k_minus.str();
    j["k_plus"] = e.k_plus.str();
    return j;
}

json classification_json(const Classification& c) {
    json j;
    j["verdict"] = verdict_name(c.verdict);
    if (c.special_daughter) j["special_daughter"] = *c.special_daughter;
    if (!c.i_minus_infinity.empty() || !c.i_plus_infinity.empty() ||
        c.verdict == Verdict::FS3 || c.verdict == Verdict::NFS3) {
        j["i_minus_infinity"] = c.i_minus_infinity;
        j["i_plus_infinity"] = c.i_plus_infinity;
    }
    if (c.endpoints) j["endpoints"] = endpoints_json(*c.endpoints);
    if (c.daughter_point) j["daughter_point"] = c.daughter_point->str();
    if (c.longitude) j["longitude"] = c.longitude->str();
    if (!c.note.empty()) j["note"] = c.note;
    return j;
}

json closed_set_json(const ClosedSet& s) {
    json j;
    if (s.is_whole()) {
        j["kind"] = "whole";
    } else if (s.is_point()) {
        j["kind"] = "point";
        j["value"] = s.from().str();
    } else {
        j["kind"] = "arc";
        j["from"] = s.from().str();
        j["to"] = s.to().str();
    }
    return j;
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

// Consistency guard: rerun every endpoint search to ten times the lcm bound
// and require the same answer.
void check_oracle(const TreeManifold& tree) {
    EvalOptions wide{10};
    Classification base = classify(tree);
    Classification rerun = classify(tree, wide);
    bool same = base.verdict == rerun.verdict;
    if (same && base.endpoints && rerun.endpoints)
        same = base.endpoints->y_minus == rerun.endpoints->y_minus &&
               base.endpoints->y_plus == rerun.endpoints->y_plus &&
               base.endpoints->k_minus == rerun.endpoints->k_minus &&
               base.endpoints->k_plus == rerun.endpoints->k_plus;
    if (!same || lspace_interval(tree) != lspace_interval(tree, wide))
        throw std::logic_error("oracle check failed: wider k search changed the result");
}

std::string render_circle(const LInterval& interval) {
    // A fixed probe line around the circle, inf at both ends.
    static const char* probes[] = {"inf", "-8",  "-4",  "-2",  "-3/2", "-1", "-2/3",
                                   "-1/2", "-1/3", "0",   "1/3", "1/2",  "2/3", "1",
                                   "3/2",  "2",   "4",   "8",   "inf"};
    std::string marks, axis = "  ";
    marks = "  ";
    for (const char* p : probes) {
        marks += interval.contains(Rational::parse(p)) ? '#' : '.';
        axis += (std::string(p) == "0") ? '0' : (std::string(p) == "inf" ? '*' : ' ');
    }
    return marks + "   (# in L, . out; * = inf, 0 at center)\n" + axis;
}

struct CommonFlags {
    bool as_json = false;
    bool oracle = false;
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
    cmd->add_flag("--json", flags.as_json, "machine-readable output");
    cmd->add_flag("--oracle", flags.oracle,
                  "rerun every endpoint search to 10x the lcm bound and assert equality");
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    try {
        return dispatch(args, out, err);
    } catch (const CLI::CallForHelp&) {
        return 0;  // help already printed by dispatch
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::logic_error& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

namespace {

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"L-space Dehn-filling intervals for graph manifolds with torus boundary"};
    app.require_subcommand(1);

    std::string file, file2, slope_text;
    CommonFlags flags;
    bool render_circle_flag = false;
    bool s3_basis = false;
    long long cable_p = 0, cable_q = 0;
    std::vector<std::string> interval_args, gluing_args;

    CLI::App* cmd_interval = app.add_subcommand("interval", "L-space interval of a tree");
    cmd_interval->add_option("file", file, "tree document")->required();
    cmd_interval->add_flag("--render-circle", render_circle_flag, "ASCII sketch");
    add_common(cmd_interval, flags);

    CLI::App* cmd_classify = app.add_subcommand("classify", "classification with witnesses");
    cmd_classify->add_option("file", file, "tree document")->required();
    add_common(cmd_classify, flags);

    CLI::App* cmd_filling = app.add_subcommand("filling", "is the filling an L-space?");
    cmd_filling->add_option("file", file, "tree document")->required();
    cmd_filling->add_option("slope", slope_text, "filling slope")->required();
    add_common(cmd_filling, flags);

    CLI::App* cmd_foliation =
        app.add_subcommand("foliation", "foliation slopes and the slope-inf decomposition");
    cmd_foliation->add_option("file", file, "tree document")->required();
    add_common(cmd_foliation, flags);

    CLI::App* cmd_glue = app.add_subcommand("glue", "L-space decision for a closed union");
    cmd_glue->add_option("file1", file, "first tree document")->required();
    cmd_glue->add_option("file2", file2, "second tree document")->required();
    cmd_glue->add_option("--gluing", gluing_args, "matrix entries a b c d")
        ->expected(4)
        ->required();
    add_common(cmd_glue, flags);

    CLI::App* cmd_cable = app.add_subcommand("cable", "cable a knot complement");
    cmd_cable->add_option("--p", cable_p, "cable parameter p > 1")->required();
    cmd_cable->add_option("--q", cable_q, "cable parameter q, coprime to p")->required();
    cmd_cable->add_option("--interval", interval_args,
                          "surgery-basis endpoints of the input interval")
        ->expected(2);
    cmd_cable->add_option("--tree", file2, "tree document to cable");
    cmd_cable->add_flag("--s3-basis", s3_basis, "re-express in the S^3 surgery basis");
    add_common(cmd_cable, flags);

    CLI::App* cmd_gst = app.add_subcommand("gst", "generalized solid torus detection");
    cmd_gst->add_option("file", file, "tree document")->required();
    add_common(cmd_gst, flags);

    std::vector<std::string> argv_strings;
    argv_strings.reserve(args.size() + 1);
    argv_strings.push_back("lspace");
    argv_strings.insert(argv_strings.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (std::string& s : argv_strings) argv.push_back(s.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    if (cmd_interval->parsed()) {
        TreeManifold tree = load_tree(file);
        if (flags.oracle) check_oracle(tree);
        Classification c = classify(tree);
        LInterval interval = lspace_interval(tree);
        if (flags.as_json) {
            json j;
            j["command"] = "interval";
            j["classification"] = verdict_name(c.verdict);
            j["interval"] = interval_json(interval);
            j["rendered"] = render_interval(interval);
            if (c.endpoints) j["endpoints"] = endpoints_json(*c.endpoints);
            emit(out, j);
        } else {
            out << "L(Y) = " << render_interval(interval) << "  (" << verdict_name(c.verdict)
                << ")\n";
            if (render_circle_flag) out << render_circle(interval) << "\n";
        }
        return 0;
    }

    if (cmd_classify->parsed()) {
        TreeManifold tree = load_tree(file);
        if (flags.oracle) check_oracle(tree);
        Classification c = classify(tree);
        if (flags.as_json) {
            json j;
            j["command"] = "classify";
            j["classification"] = classification_json(c);
            emit(out, j);
        } else {
            out << "classification: " << verdict_name(c.verdict) << "\n";
            if (c.endpoints)
                out << "endpoints: y- = " << c.endpoints->y_minus.str()
                    << " (k = " << c.endpoints->k_minus.str()
                    << "), y+ = " << c.endpoints->y_plus.str()
                    << " (k = " << c.endpoints->k_plus.str() << ")\n";
            if (c.special_daughter) out << "special daughter: " << *c.special_daughter << "\n";
            if (c.longitude) out << "longitude: " << c.longitude->str() << "\n";
            if (!c.note.empty()) out << "note: " << c.note << "\n";
        }
        return 0;
    }

    if (cmd_filling->parsed()) {
        TreeManifold tree = load_tree(file);
        if (flags.oracle) check_oracle(tree);
        Rational slope = Rational::parse(slope_text);
        bool yes = is_lspace_filling(tree, slope);
        if (flags.as_json) {
            json j;
            j["command"] = "filling";
            j["slope"] = slope.str();
            j["lspace"] = yes;
            emit(out, j);
        } else {
            out << "L-space: " << (yes ? "yes" : "no") << "\n";
        }
        return 0;
    }

    if (cmd_foliation->parsed()) {
        TreeManifold tree = load_tree(file);
        if (flags.oracle) check_oracle(tree);
        FoliationReport report = foliation_sets(tree);
        if (flags.as_json) {
            json j;
            j["command"] = "foliation";
            j["foliation"] = closed_set_json(report.foliation_slopes);
            j["interval"] = interval_json(report.lspace);
            j["infinity_is_lspace"] = report.infinity_is_lspace;
            j["infinity_reducible"] = report.infinity_reducible;
            j["nontrivial_summands"] = report.nontrivial_summands;
            json summands = json::array();
            for (const InfinitySummand& s : report.infinity_summands) {
                json sj;
                if (s.kind == InfinitySummand::Kind::LensSpace) {
                    sj["kind"] = "lens_space";
                    sj["s"] = s.lens_s.str();
                    sj["r"] = s.lens_r.str();
                } else {
                    sj["kind"] = "daughter_filling";
                    if (s.daughter_slope) sj["slope"] = s.daughter_slope->str();
                    sj["lspace"] = s.is_lspace;
                }
                sj["index"] = s.index;
                summands.push_back(std::move(sj));
            }
            if (report.infinity_has_s1_x_s2)
                summands.push_back(json{{"kind", "s1_x_s2"}});
            j["summands"] = std::move(summands);
            emit(out, j);
        } else {
            out << "F(Y) = " << render_closed_set(report.foliation_slopes) << "\n";
            out << "L(Y) = " << render_interval(report.lspace)
                << "  [[.]] = " << render_interval_bracket(report.lspace) << "\n";
            out << "F^D(Y) and L(Y) u R(Y) partition the slope circle; R(Y) is analyzed "
                   "at slope inf only:\n";
            out << "Y(inf): " << (report.infinity_is_lspace ? "L-space" : "not an L-space")
                << "; connected summands:\n";
            for (const InfinitySummand& s : report.infinity_summands) {
                if (s.kind == InfinitySummand::Kind::LensSpace)
                    out << "  lens space L(" << s.lens_s.str() << ", " << s.lens_r.str()
                        << ")" << (s.lens_s == 1 ? "  [S^3]" : "") << "\n";
                else
                    out << "  daughter " << s.index << " filled at "
                        << (s.daughter_slope ? s.daughter_slope->str() : std::string("?"))
                        << (s.is_lspace ? "  [L-space]" : "  [not an L-space]") << "\n";
            }
            if (report.infinity_has_s1_x_s2) out << "  S^1 x S^2\n";
            out << (report.infinity_reducible ? "Y(inf) is reducible\n"
                                              : "no reducible decomposition certified\n");
        }
        return 0;
    }

    if (cmd_glue->parsed()) {
        TreeManifold y1 = load_tree(file);
        TreeManifold y2 = load_tree(file2);
        if (flags.oracle) {
            check_oracle(y1);
            check_oracle(y2);
        }
        GluingMatrix m{Integer(gluing_args[0]), Integer(gluing_args[1]),
                       Integer(gluing_args[2]), Integer(gluing_args[3])};
        GlueDecision d = closed_union_is_lspace(y1, y2, m);
        if (flags.as_json) {
            json j;
            j["command"] = "glue";
            j["lspace"] = d.is_lspace;
            j["case"] = glue_case_name(d.kase);
            if (d.filling_slope) j["filling_slope"] = d.filling_slope->str();
            if (d.pushed_longitude_1) j["pushed_longitude_1"] = d.pushed_longitude_1->str();
            if (d.longitude_2) j["longitude_2"] = d.longitude_2->str();
            emit(out, j);
        } else {
            out << "L-space: " << (d.is_lspace ? "yes" : "no") << "  ("
                << glue_case_name(d.kase) << ")\n";
        }
        return 0;
    }

    if (cmd_cable->parsed()) {
        if (interval_args.empty() == file2.empty())
            throw std::invalid_argument("cable: provide exactly one of --interval or --tree");
        LInterval result;
        json detail;
        if (!interval_args.empty()) {
            Rational a_minus = Rational::parse(interval_args[0]);
            Rational a_plus = Rational::parse(interval_args[1]);
            CableComputation c = cable_interval_ex(a_minus, a_plus, cable_p, cable_q);
            if (flags.oracle) {
                CableComputation wide =
                    cable_interval_ex(a_minus, a_plus, cable_p, cable_q, EvalOptions{10});
                if (!(wide.interval == c.interval))
                    throw std::logic_error(
                        "oracle check failed: wider k search changed the cable interval");
            }
            result = c.interval;
            detail["y1_minus"] = c.y1_minus.str();
            detail["y1_plus"] = c.y1_plus.str();
            detail["y_minus"] = c.y_minus.str();
            detail["y_plus"] = c.y_plus.str();
            if (c.mixed_infinity) detail["mixed_infinity"] = true;
        } else {
            TreeManifold tree = load_tree(file2);
            TreeManifold cabled = cable_construct_tree(tree, cable_p, cable_q);
            if (flags.oracle) check_oracle(cabled);
            // Align the recursion's output with the cabling surgery basis.
            result = mobius_push(lspace_interval(cabled), GluingMatrix::slope_inversion());
        }
        if (s3_basis) result = cable_interval_s3_basis(result, cable_p, cable_q);
        if (flags.as_json) {
            json j;
            j["command"] = "cable";
            j["p"] = cable_p;
            j["q"] = cable_q;
            j["basis"] = s3_basis ? "s3" : "cabling";
            j["interval"] = interval_json(result);
            j["rendered"] = render_interval(result);
            if (!detail.empty()) j["detail"] = std::move(detail);
            emit(out, j);
        } else {
            out << render_interval(result) << "\n";
        }
        return 0;
    }

    if (cmd_gst->parsed()) {
        TreeManifold tree = load_tree(file);
        if (flags.oracle) check_oracle(tree);
        GstResult r = is_generalized_solid_torus(tree);
        if (flags.as_json) {
            json j;
            j["command"] = "gst";
            j["gst"] = r.is_gst;
            j["interval"] = interval_json(r.interval);
            if (r.longitude) j["longitude"] = r.longitude->str();
            if (r.structural) j["structural"] = *r.structural;
            emit(out, j);
        } else {
            out << "generalized solid torus: " << (r.is_gst ? "yes" : "no");
            if (r.longitude) out << "  (l = " << r.longitude->str() << ")";
            out << "\n";
        }
        return 0;
    }

    err << "error: no command\n";
    return 2;
}

}  // namespace

}  // namespace lspace::cli
