#ifndef LSPACE_TESTS_SUPPORT_HPP
#define LSPACE_TESTS_SUPPORT_HPP

#include "lspace/graph.hpp"
#include "lspace/interval.hpp"
#include "lspace/rational.hpp"
#include "lspace/tree.hpp"

#include <algorithm>
#include <memory>
#include <random>
#include <vector>

namespace testsupport {

using lspace::Base;
using lspace::Daughter;
using lspace::GluingMatrix;
using lspace::Integer;
using lspace::LInterval;
using lspace::OpenSet;
using lspace::Rational;
using lspace::Subtree;
using lspace::TreeManifold;

struct Rng {
    explicit Rng(uint64_t seed) : eng(seed) {}
    std::mt19937_64 eng;

    int range(int lo, int hi) {  // inclusive
        return std::uniform_int_distribution<int>(lo, hi)(eng);
    }
    bool chance(int percent) { return range(1, 100) <= percent; }
};

inline Rational rand_finite(Rng& rng, int max_abs_num = 12, int max_den = 8) {
    return Rational(Integer(rng.range(-max_abs_num, max_abs_num)),
                    Integer(rng.range(1, max_den)));
}

inline Rational rand_noninteger(Rng& rng, int max_abs_num = 12, int max_den = 8) {
    for (;;) {
        Rational y = rand_finite(rng, max_abs_num, std::max(2, max_den));
        if (!y.is_integer()) return y;
    }
}

inline Rational rand_slope(Rng& rng, int percent_infinite = 15) {
    if (rng.chance(percent_infinite)) return Rational::infinity();
    return rand_finite(rng);
}

inline LInterval rand_leaf(Rng& rng) {
    int roll = rng.range(1, 100);
    if (roll <= 8) return LInterval::empty();
    if (roll <= 25) return LInterval::point(rand_slope(rng, 25));
    return LInterval::bracket(rand_slope(rng), rand_slope(rng));
}

inline GluingMatrix rand_unimodular(Rng& rng, int ops = 3, int shear = 2) {
    GluingMatrix m = GluingMatrix::identity();
    for (int i = 0, n = rng.range(1, ops); i < n; ++i) {
        switch (rng.range(0, 2)) {
            case 0:
                m = m * GluingMatrix::translation(Integer(rng.range(-shear, shear)));
                break;
            case 1:
                m = m * GluingMatrix{1, 0, Integer(rng.range(-shear, shear)), 1};
                break;
            default:
                m = m * GluingMatrix::slope_inversion();
                break;
        }
    }
    return m;
}

inline TreeManifold rand_tree(Rng& rng, int height, int max_daughters = 4,
                              int max_slopes = 3) {
    TreeManifold tree;
    tree.base = rng.chance(12) ? Base::NonOrientable : Base::Orientable;
    for (int i = 0, n = rng.range(0, max_slopes); i < n; ++i)
        tree.slopes.push_back(rand_finite(rng, 6, 8));
    for (int i = 0, n = rng.range(0, max_daughters); i < n; ++i) {
        if (height == 0 || rng.chance(55)) {
            tree.daughters.push_back(rand_leaf(rng));
        } else {
            auto sub = rand_tree(rng, height - 1, std::max(1, max_daughters - 1), max_slopes);
            if (sub.is_solid_torus()) {
                sub.slopes.push_back(Rational(1, 2));
                sub.slopes.push_back(Rational(1, 3));
            }
            tree.daughters.push_back(Subtree{
                rand_unimodular(rng), std::make_shared<const TreeManifold>(std::move(sub))});
        }
    }
    return tree;
}

// ---------------------------------------------------------------------------
// Independent decision machinery: cyclic order from 2x2 determinant signs of
// slope coordinate pairs, distinct from the comparison-case implementation.

inline int det_sign(const Rational& u, const Rational& v) {
    Integer d = u.num() * v.den() - u.den() * v.num();
    return d == 0 ? 0 : (d > 0 ? 1 : -1);
}

// x strictly inside the open counterclockwise arc from a to b (all distinct).
inline bool oracle_between(const Rational& a, const Rational& x, const Rational& b) {
    if (det_sign(a, b) < 0) return det_sign(a, x) < 0 && det_sign(x, b) < 0;
    return det_sign(a, x) < 0 || det_sign(x, b) < 0;
}

inline bool oracle_member(const LInterval& interval, const Rational& x) {
    switch (interval.kind()) {
        case LInterval::Kind::Empty:
            return false;
        case LInterval::Kind::Point:
            return x == interval.value();
        case LInterval::Kind::Bracket:
            break;
    }
    const Rational& l = interval.left();
    const Rational& r = interval.right();
    if (l == r) return x != l;  // open co-point (covers <-inf,+inf> as well)
    if (x == l || x == r) return true;
    return oracle_between(l, x, r);
}

inline bool oracle_open_member(const OpenSet& s, const Rational& x) {
    switch (s.kind()) {
        case OpenSet::Kind::Empty:
            return false;
        case OpenSet::Kind::CoPoint:
            return x != s.excluded();
        case OpenSet::Kind::Arc:
            return x != s.from() && x != s.to() && oracle_between(s.from(), x, s.to());
    }
    return false;
}

// Sound witness set for the cover test: any maximal uncovered closed arc is
// bounded by endpoints of the two open sets, so it contains an endpoint, a
// mediant of two cyclically adjacent finite endpoints, inf, or a point
// beyond the extreme finite endpoints.
inline std::vector<Rational> cover_witnesses(const OpenSet& a, const OpenSet& b) {
    std::vector<Rational> pts;
    auto add_endpoints = [&](const OpenSet& s) {
        if (s.kind() == OpenSet::Kind::CoPoint) pts.push_back(s.excluded());
        if (s.kind() == OpenSet::Kind::Arc) {
            pts.push_back(s.from());
            pts.push_back(s.to());
        }
    };
    add_endpoints(a);
    add_endpoints(b);
    std::vector<Rational> witnesses = pts;
    witnesses.push_back(Rational::infinity());

    std::vector<Rational> finite;
    for (const Rational& p : pts)
        if (!p.is_infinite()) finite.push_back(p);
    std::sort(finite.begin(), finite.end());
    finite.erase(std::unique(finite.begin(), finite.end()), finite.end());
    for (size_t i = 0; i + 1 < finite.size(); ++i)
        witnesses.push_back(Rational(finite[i].num() + finite[i + 1].num(),
                                     finite[i].den() + finite[i + 1].den()));
    if (!finite.empty()) {
        witnesses.push_back(finite.front() - Rational(1));
        witnesses.push_back(finite.back() + Rational(1));
    }
    return witnesses;
}

inline bool oracle_covers(const OpenSet& a, const OpenSet& b) {
    for (const Rational& w : cover_witnesses(a, b))
        if (!oracle_open_member(a, w) && !oracle_open_member(b, w)) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Tree transforms used by the invariance suites.

inline LInterval negate_swap(const LInterval& interval) {
    switch (interval.kind()) {
        case LInterval::Kind::Empty:
            return interval;
        case LInterval::Kind::Point:
            return LInterval::point(-interval.value());
        case LInterval::Kind::Bracket:
            return LInterval::bracket(-interval.right(), -interval.left());
    }
    return interval;
}

inline TreeManifold negate_tree(const TreeManifold& tree) {
    TreeManifold result;
    result.base = tree.base;
    for (const Rational& y : tree.slopes) result.slopes.push_back(-y);
    const GluingMatrix neg = GluingMatrix::negation();
    for (const Daughter& d : tree.daughters) {
        if (const LInterval* leaf = std::get_if<LInterval>(&d)) {
            result.daughters.push_back(negate_swap(*leaf));
        } else {
            const Subtree& sub = std::get<Subtree>(d);
            result.daughters.push_back(Subtree{
                neg * sub.gluing * neg,
                std::make_shared<const TreeManifold>(negate_tree(*sub.manifold))});
        }
    }
    return result;
}

inline LInterval translate_interval(const LInterval& interval, const Integer& z) {
    auto shift = [&](const Rational& y) { return y + Rational(z); };
    switch (interval.kind()) {
        case LInterval::Kind::Empty:
            return interval;
        case LInterval::Kind::Point:
            return LInterval::point(shift(interval.value()));
        case LInterval::Kind::Bracket:
            return LInterval::bracket(shift(interval.left()), shift(interval.right()));
    }
    return interval;
}

// Integer shifts across slopes and daughters summing to zero leave the
// L-space interval unchanged.
inline TreeManifold reparameterize(Rng& rng, const TreeManifold& tree) {
    std::vector<Integer> shifts(tree.slopes.size() + tree.daughters.size(), 0);
    if (shifts.size() >= 2) {
        for (size_t i = 0; i + 1 < shifts.size(); ++i) shifts[i] = rng.range(-3, 3);
        Integer total = 0;
        for (const Integer& z : shifts) total += z;
        shifts.back() = -total;
    }
    TreeManifold result;
    result.base = tree.base;
    for (size_t i = 0; i < tree.slopes.size(); ++i)
        result.slopes.push_back(tree.slopes[i] + Rational(shifts[i]));
    for (size_t i = 0; i < tree.daughters.size(); ++i) {
        const Integer& w = shifts[tree.slopes.size() + i];
        if (const LInterval* leaf = std::get_if<LInterval>(&tree.daughters[i])) {
            result.daughters.push_back(translate_interval(*leaf, w));
        } else {
            const Subtree& sub = std::get<Subtree>(tree.daughters[i]);
            result.daughters.push_back(
                Subtree{GluingMatrix::translation(w) * sub.gluing, sub.manifold});
        }
    }
    return result;
}

// The complement of the last daughter inside the filling of slope y: the
// root keeps the remaining daughters and acquires y as one more filling
// slope; its boundary is the last daughter's attaching torus.
inline TreeManifold detach_last_daughter(const TreeManifold& tree, const Rational& y) {
    TreeManifold hat;
    hat.base = tree.base;
    hat.slopes = tree.slopes;
    hat.slopes.push_back(y);
    hat.daughters.assign(tree.daughters.begin(), tree.daughters.end() - 1);
    return hat;
}

// x*a + y*b = gcd(a, b)
inline void ext_gcd(Integer a, Integer b, Integer& x, Integer& y) {
    Integer x0 = 1, y0 = 0, x1 = 0, y1 = 1;
    while (b != 0) {
        Integer q = a / b;
        Integer t = a - q * b; a = b; b = t;
        t = x0 - q * x1; x0 = x1; x1 = t;
        t = y0 - q * y1; y0 = y1; y1 = t;
    }
    if (a < 0) { x0 = -x0; y0 = -y0; }
    x = x0;
    y = y0;
}

// A unimodular matrix carrying the slope 0 to mu (second column = mu's
// primitive coordinates, first column from a Bezout partner).
inline GluingMatrix matrix_sending_zero_to(const Rational& mu) {
    if (mu.is_infinite()) return GluingMatrix{0, 1, -1, 0};
    Integer x, y;
    ext_gcd(mu.den(), mu.num(), x, y);  // x*den + y*num = 1
    GluingMatrix m{x, mu.num(), -y, mu.den()};
    return m;
}

inline TreeManifold nbar_tree() {
    TreeManifold tree;
    tree.slopes = {Rational(0), Rational(-1, 2), Rational(1, 2)};
    return tree;
}

inline TreeManifold solid_torus_tree(Rational slope) {
    TreeManifold tree;
    tree.slopes = {std::move(slope)};
    return tree;
}

}  // namespace testsupport

#endif
