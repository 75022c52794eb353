#ifndef LSPACE_GLUING_HPP
#define LSPACE_GLUING_HPP

#include "lspace/graph.hpp"
#include "lspace/interval.hpp"
#include "lspace/tree.hpp"

#include <optional>

namespace lspace {

enum class GlueCase {
    /// Both pieces boundary incompressible: L-space iff the pushed open
    /// interval of the first and the open interval of the second cover the
    /// circle.
    CoverTest,
    /// First piece a solid torus: Dehn filling of the second at the pushed
    /// longitude.
    FillSecond,
    /// Second piece a solid torus: Dehn filling of the first at the pulled
    /// back longitude.
    FillFirst,
    /// Both solid tori: a lens space, an L-space unless the longitudes match
    /// up (which gives S^1 x S^2).
    LensSpace,
};

const char* glue_case_name(GlueCase c);

struct GlueDecision {
    bool is_lspace = false;
    GlueCase kase = GlueCase::CoverTest;
    /// Filling slope for the Dehn-filling cases, in the coordinates of the
    /// piece being filled.
    std::optional<Rational> filling_slope;
    /// Longitudes consulted, in the second piece's coordinates.
    std::optional<Rational> pushed_longitude_1;
    std::optional<Rational> longitude_2;
};

/// L-space decision for the closed manifold glued from two tree manifolds.
/// The matrix carries slopes of the first boundary to slopes of the second.
GlueDecision closed_union_is_lspace(const TreeManifold& y1, const TreeManifold& y2,
                                    const GluingMatrix& m, EvalOptions opts = {});

/// L-space decision for the N̄-filling along mu: membership of mu in the
/// open interior of the L-space interval.
bool nbar_filling_is_lspace(const TreeManifold& tree, const Rational& mu,
                            EvalOptions opts = {});

}  // namespace lspace

#endif
