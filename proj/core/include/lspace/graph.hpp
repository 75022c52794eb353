#ifndef LSPACE_GRAPH_HPP
#define LSPACE_GRAPH_HPP

#include "lspace/interval.hpp"
#include "lspace/rational.hpp"
#include "lspace/seifert.hpp"
#include "lspace/tree.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lspace {

struct EvalOptions {
    /// Rerun every endpoint search up to this multiple of the lcm bound.
    /// The extrema are always realized within the bound itself; a larger
    /// multiplier only serves as a consistency check.
    int k_bound_multiplier = 1;
};

enum class Verdict {
    SolidTorus,
    FS0,
    FS1,
    FS2,
    FS3,
    NFS1,
    NFS2,
    NFS3,
    NFS4,
    Empty,
};

const char* verdict_name(Verdict v);

/// Classification of a tree manifold, with the data certifying the clause
/// that fired.
struct Classification {
    Verdict verdict = Verdict::Empty;
    /// Index of the distinguished daughter for FS1/FS2/NFS2/NFS4.
    std::optional<size_t> special_daughter;
    /// Daughters whose interval is [-inf, y+] resp. [y-, +inf] (FS3/NFS3).
    std::vector<size_t> i_minus_infinity;
    std::vector<size_t> i_plus_infinity;
    /// Endpoint data, whenever the clause consulted the endpoint formulas.
    std::optional<Endpoints> endpoints;
    /// NFS1: the daughter point value and the closed-form filling slope.
    std::optional<Rational> daughter_point;
    /// SolidTorus: the rational longitude.
    std::optional<Rational> longitude;
    /// Human-readable notes (empty-daughter flag and the like).
    std::string note;
};

/// Each clause evaluated independently (no gating); used to check mutual
/// exclusivity. FS/NFS flags are only meaningful for non-solid-torus input.
struct ClauseFlags {
    bool solid_torus = false;
    bool fs0 = false, fs1 = false, fs2 = false, fs3 = false;
    bool nfs1 = false, nfs2 = false, nfs3 = false, nfs4 = false;
    int count_fs_nfs() const {
        return int(fs0) + int(fs1) + int(fs2) + int(fs3) + int(nfs1) + int(nfs2) +
               int(nfs3) + int(nfs4);
    }
};

/// Pushed-forward daughter intervals, in root coordinates: subtree daughters
/// are evaluated recursively and pushed through their gluing matrices, leaf
/// daughters pass through unchanged.
std::vector<LInterval> daughter_intervals(const TreeManifold& tree, EvalOptions opts = {});

/// The recursion's endpoint formulas: Point daughters contribute (v, v),
/// brackets contribute (left, right). Rejects solid-torus configurations
/// (no pairs and fewer than two non-integer slopes); the caller handles
/// those directly.
Endpoints y_endpoints(std::span<const Rational> seifert_slopes,
                      std::span<const std::pair<Rational, Rational>> daughter_pairs,
                      EvalOptions opts = {});

Classification classify(const TreeManifold& tree, EvalOptions opts = {});
ClauseFlags evaluate_clauses(const TreeManifold& tree, EvalOptions opts = {});

/// The L-space Dehn-filling interval of the tree.
LInterval lspace_interval(const TreeManifold& tree, EvalOptions opts = {});

/// Non-orientable base: inf. Orientable: -Σ slopes - Σ pushed daughter
/// longitudes. Throws LongitudeUnknown when a daughter is only known by its
/// interval.
Rational rational_longitude(const TreeManifold& tree);

bool is_lspace_filling(const TreeManifold& tree, const Rational& slope, EvalOptions opts = {});

/// One connected summand of the slope-infinity filling.
struct InfinitySummand {
    enum class Kind { LensSpace, DaughterFilling } kind;
    size_t index = 0;
    /// LensSpace: L(s, r) from the filling slope r/s; trivial (S^3) iff s = 1.
    Integer lens_s, lens_r;
    /// DaughterFilling: the slope pulled back into daughter coordinates
    /// (absent for leaf daughters) and whether that filling is an L-space.
    std::optional<Rational> daughter_slope;
    bool is_lspace = false;
};

struct FoliationReport {
    /// F(Y): the complement of the open L-space interval.
    ClosedSet foliation_slopes;
    LInterval lspace;
    /// Decomposition of the slope-infinity filling into connected summands.
    std::vector<InfinitySummand> infinity_summands;
    /// Non-orientable base contributes an S^1 x S^2 summand at infinity.
    bool infinity_has_s1_x_s2 = false;
    bool infinity_is_lspace = false;
    /// Provably nontrivial summand count (lens spaces with s >= 2, plus the
    /// S^1 x S^2 summand); daughter fillings may or may not be S^3, so the
    /// filling is reported reducible only on this lower bound.
    size_t nontrivial_summands = 0;
    bool infinity_reducible = false;
};

/// F(Y) together with the reducible-filling analysis at slope infinity. No
/// claim is made about reducible fillings at other slopes.
FoliationReport foliation_sets(const TreeManifold& tree, EvalOptions opts = {});

struct GstResult {
    bool is_gst = false;
    LInterval interval;
    /// Present whenever the comparison consulted the longitude.
    std::optional<Rational> longitude;
    /// Result of the structural iterated-cable recognizer; present when the
    /// longitude is computable and finite and no non-orientable piece puts
    /// the input outside the recognizer's scope.
    std::optional<bool> structural;
};

/// True iff the L-space interval is the complement of the rational
/// longitude. When the interval is not a co-point the longitude is not
/// needed; otherwise LongitudeUnknown propagates. For computable longitudes
/// other than the fiber slope, a structural iterated-cable recognizer is run
/// and its agreement with the interval test is asserted.
GstResult is_generalized_solid_torus(const TreeManifold& tree, EvalOptions opts = {});

}  // namespace lspace

#endif
