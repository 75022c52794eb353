#include "lspace/cabling.hpp"

#include <memory>
#include <numeric>
#include <stdexcept>

namespace lspace {

namespace {

long long positive_mod(long long a, long long m) {
    long long r = a % m;
    return r < 0 ? r + m : r;
}

}  // namespace

CableParams cable_coeffs(long long p, long long q) {
    if (p <= 1 || std::gcd(p, q) != 1)
        throw std::invalid_argument(
            "cable: require p > 1 with gcd(p, q) = 1; the 0-cable is a connected sum "
            "with an unknot complement, the 1/q-cable is just a change of framing, and "
            "the 1/0-cable is the identity");
    // q·q* ≡ -1 (mod p) has a unique solution with 0 < q* < p.
    long long qstar = 0;
    for (long long t = 1; t < p; ++t) {
        if (positive_mod(q * t + 1, p) == 0) {
            qstar = t;
            break;
        }
    }
    if (qstar == 0) throw std::logic_error("cable_coeffs: no inverse found");
    long long pstar = (1 + q * qstar) / p;
    CableParams params{p, q, pstar, qstar};
    if (p * pstar - q * qstar != 1)
        throw std::logic_error("cable_coeffs: normalization failed");
    return params;
}

GluingMatrix cable_surgery_matrix(const CableParams& params) {
    return {Integer(-params.qstar), Integer(params.pstar), Integer(-params.p),
            Integer(params.q)};
}

GluingMatrix cable_tree_gluing(const CableParams& params) {
    return cable_surgery_matrix(params) * GluingMatrix::slope_inversion();
}

GluingMatrix s3_framing_matrix(long long p, long long q) {
    return GluingMatrix::translation(Integer(p) * q);
}

CableComputation cable_interval_ex(const Rational& a_minus, const Rational& a_plus,
                                   long long p, long long q, EvalOptions opts) {
    CableComputation r;
    r.params = cable_coeffs(p, q);
    const GluingMatrix push = cable_surgery_matrix(r.params);
    r.y1_minus = push.apply(a_minus);
    r.y1_plus = push.apply(a_plus);
    r.mixed_infinity = r.y1_minus.is_infinite() != r.y1_plus.is_infinite();

    const Rational base(Integer(r.params.qstar), Integer(r.params.p));

    if (r.y1_plus.is_infinite()) {
        r.y_minus = Rational::infinity();
    } else {
        Integer bound = boost::multiprecision::lcm(Integer(p), r.y1_plus.den());
        bound *= opts.k_bound_multiplier;
        bool have = false;
        for (Integer k = 1; k <= bound; ++k) {
            Rational candidate(ceil_mul(base, k) - ceil_mul(r.y1_plus, k), k);
            if (!have || candidate > r.y_minus) {
                r.y_minus = candidate;
                r.k_minus = k;
                have = true;
            }
        }
    }

    if (r.y1_minus.is_infinite()) {
        r.y_plus = Rational::infinity();
    } else {
        Integer bound = boost::multiprecision::lcm(Integer(p), r.y1_minus.den());
        bound *= opts.k_bound_multiplier;
        bool have = false;
        for (Integer k = 1; k <= bound; ++k) {
            Rational candidate(floor_mul(base, k) - floor_mul(r.y1_minus, k), k);
            if (!have || candidate < r.y_plus) {
                r.y_plus = candidate;
                r.k_plus = k;
                have = true;
            }
        }
    }

    const bool closed_arc_input = !r.y1_minus.is_infinite() && !r.y1_plus.is_infinite() &&
                                  r.y1_minus < r.y1_plus;
    if (closed_arc_input && r.y_minus > r.y_plus)
        r.interval = LInterval::empty();
    else if (closed_arc_input && r.y_minus == r.y_plus)
        r.interval = LInterval::point(reciprocal(r.y_minus));
    else
        r.interval = LInterval::bracket(reciprocal(r.y_plus), reciprocal(r.y_minus));
    return r;
}

LInterval cable_interval(const Rational& a_minus, const Rational& a_plus, long long p,
                         long long q, EvalOptions opts) {
    return cable_interval_ex(a_minus, a_plus, p, q, opts).interval;
}

LInterval cable_interval_s3_basis(const LInterval& interval, long long p, long long q) {
    return mobius_push(interval, s3_framing_matrix(p, q));
}

CableComputation cable_interval_lspace_ambient(const Rational& a_minus,
                                               const Rational& a_plus, long long p,
                                               long long q, EvalOptions opts) {
    // The ambient is the meridian filling; it is an L-space exactly when the
    // meridian slope lies in the input interval.
    if (!LInterval::bracket(a_minus, a_plus).contains(Rational::infinity()))
        throw std::invalid_argument(
            "cable: the ambient is not an L-space (the meridian slope inf is not in "
            "the input interval)");
    CableComputation r = cable_interval_ex(a_minus, a_plus, p, q, opts);
    const Rational left_threshold(Integer(r.params.pstar), Integer(r.params.qstar));
    const Rational right_low(Integer(r.params.q - r.params.pstar),
                             Integer(r.params.p - r.params.qstar));
    const Rational right_high(Integer(r.params.q), Integer(r.params.p));
    bool cond_minus = a_minus.is_infinite() || a_minus >= left_threshold;
    bool cond_plus =
        a_plus.is_infinite() || (right_low <= a_plus && a_plus < right_high);
    bool predicted_isolated = cond_minus && cond_plus;
    bool isolated = r.interval == LInterval::point(Rational::infinity());
    if (predicted_isolated != isolated)
        throw std::logic_error(
            "cable: ambient L-space isolated-filling predicate disagrees with the "
            "computed interval");
    return r;
}

TreeManifold cable_construct_tree(const TreeManifold& manifold, long long p, long long q) {
    CableParams params = cable_coeffs(p, q);
    TreeManifold root;
    root.slopes = {Rational(Integer(-params.qstar), Integer(params.p))};
    const GluingMatrix gluing = cable_tree_gluing(params);
    if (manifold.is_solid_torus()) {
        // Gluing a solid torus is a Dehn filling at the image of its disk
        // slope (= its rational longitude); absorb it into the root.
        Rational filled = gluing.apply(rational_longitude(manifold));
        if (filled.is_infinite())
            throw std::domain_error(
                "cable: solid torus absorbs to an infinite filling slope (non-prime piece)");
        root.slopes.push_back(std::move(filled));
        return root;
    }
    root.daughters.push_back(
        Subtree{gluing, std::make_shared<const TreeManifold>(manifold)});
    return root;
}

TreeManifold cable_construct_tree(const LInterval& surgery_interval, long long p,
                                  long long q) {
    CableParams params = cable_coeffs(p, q);
    TreeManifold root;
    root.slopes = {Rational(Integer(-params.qstar), Integer(params.p))};
    root.daughters.push_back(mobius_push(surgery_interval, cable_surgery_matrix(params)));
    return root;
}

}  // namespace lspace
