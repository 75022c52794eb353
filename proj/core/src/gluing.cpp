#include "lspace/gluing.hpp"

#include <stdexcept>

namespace lspace {

const char* glue_case_name(GlueCase c) {
    switch (c) {
        case GlueCase::CoverTest: return "cover_test";
        case GlueCase::FillSecond: return "fill_second";
        case GlueCase::FillFirst: return "fill_first";
        case GlueCase::LensSpace: return "lens_space";
    }
    return "?";
}

GlueDecision closed_union_is_lspace(const TreeManifold& y1, const TreeManifold& y2,
                                    const GluingMatrix& m, EvalOptions opts) {
    if (!m.unimodular())
        throw std::domain_error("closed_union_is_lspace: determinant ±1 required");

    GlueDecision d;
    const bool st1 = y1.is_solid_torus();
    const bool st2 = y2.is_solid_torus();

    if (st1 && st2) {
        d.kase = GlueCase::LensSpace;
        d.pushed_longitude_1 = m.apply(rational_longitude(y1));
        d.longitude_2 = rational_longitude(y2);
        d.is_lspace = *d.pushed_longitude_1 != *d.longitude_2;
        return d;
    }
    if (st1) {
        d.kase = GlueCase::FillSecond;
        d.filling_slope = m.apply(rational_longitude(y1));
        d.pushed_longitude_1 = d.filling_slope;
        d.is_lspace = is_lspace_filling(y2, *d.filling_slope, opts);
        return d;
    }
    if (st2) {
        d.kase = GlueCase::FillFirst;
        d.longitude_2 = rational_longitude(y2);
        d.filling_slope = m.inverse().apply(*d.longitude_2);
        d.is_lspace = is_lspace_filling(y1, *d.filling_slope, opts);
        return d;
    }

    d.kase = GlueCase::CoverTest;
    OpenSet pushed = interior(mobius_push(lspace_interval(y1, opts), m));
    OpenSet other = interior(lspace_interval(y2, opts));
    d.is_lspace = covers_circle(pushed, other);
    return d;
}

bool nbar_filling_is_lspace(const TreeManifold& tree, const Rational& mu, EvalOptions opts) {
    return interior(lspace_interval(tree, opts)).contains(mu);
}

}  // namespace lspace
