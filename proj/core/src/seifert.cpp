#include "lspace/seifert.hpp"

#include "lspace/interval.hpp"

#include <algorithm>
#include <stdexcept>

namespace lspace {

namespace {

Integer lcm_of_denominators(std::span<const Rational> floors,
                            std::span<const std::pair<Rational, Rational>> pairs,
                            bool plus_side) {
    Integer s = 1;
    for (const Rational& y : floors) s = boost::multiprecision::lcm(s, y.den());
    for (const auto& p : pairs) {
        const Rational& y = plus_side ? p.second : p.first;
        if (!y.is_infinite()) s = boost::multiprecision::lcm(s, y.den());
    }
    return s;
}

size_t count_nonintegers(std::span<const Rational> slopes) {
    size_t c = 0;
    for (const Rational& y : slopes)
        if (!y.is_integer()) ++c;
    return c;
}

}  // namespace

Endpoints endpoint_search(std::span<const Rational> floor_slopes,
                          std::span<const std::pair<Rational, Rational>> daughter_pairs,
                          int bound_multiplier) {
    if (bound_multiplier < 1)
        throw std::domain_error("endpoint_search: bound multiplier must be positive");
    for (const Rational& y : floor_slopes)
        if (y.is_infinite())
            throw std::domain_error("endpoint_search: infinite Seifert slope");

    Endpoints result;

    bool minus_infinite = false;
    bool plus_infinite = false;
    for (const auto& p : daughter_pairs) {
        if (p.second.is_infinite()) minus_infinite = true;  // ⌈y_{i+}·k⌉ summand
        if (p.first.is_infinite()) plus_infinite = true;    // ⌊y_{i-}·k⌋ summand
    }

    if (minus_infinite) {
        result.y_minus = Rational::infinity();
        result.k_minus = 1;
    } else {
        Integer bound = lcm_of_denominators(floor_slopes, daughter_pairs, true);
        bound *= bound_multiplier;
        bool have = false;
        for (Integer k = 1; k <= bound; ++k) {
            Integer sum = 1;
            for (const Rational& y : floor_slopes) sum += floor_mul(y, k);
            for (const auto& p : daughter_pairs) sum += ceil_mul(p.second, k) - 1;
            Rational candidate(-sum, k);
            if (!have || candidate > result.y_minus) {
                result.y_minus = candidate;
                result.k_minus = k;
                have = true;
            }
        }
    }

    if (plus_infinite) {
        result.y_plus = Rational::infinity();
        result.k_plus = 1;
    } else {
        Integer bound = lcm_of_denominators(floor_slopes, daughter_pairs, false);
        bound *= bound_multiplier;
        bool have = false;
        for (Integer k = 1; k <= bound; ++k) {
            Integer sum = -1;
            for (const Rational& y : floor_slopes) sum += ceil_mul(y, k);
            for (const auto& p : daughter_pairs) sum += floor_mul(p.first, k) + 1;
            Rational candidate(-sum, k);
            if (!have || candidate < result.y_plus) {
                result.y_plus = candidate;
                result.k_plus = k;
                have = true;
            }
        }
    }

    return result;
}

Endpoints jn_endpoints(std::span<const Rational> slopes, int bound_multiplier) {
    if (slopes.empty())
        throw std::invalid_argument("jn_endpoints: empty slope list");
    for (const Rational& y : slopes)
        if (y.is_infinite())
            throw std::domain_error("jn_endpoints: infinite slope");
    if (count_nonintegers(slopes) < 2)
        throw std::domain_error(
            "jn_endpoints: solid torus configuration (fewer than two non-integer "
            "slopes); the extrema are not attained at any k, handle it as a solid torus");
    return endpoint_search(slopes, {}, bound_multiplier);
}

Endpoints j_realizable_endpoints(std::span<const Rational> slopes,
                                 std::span<const std::size_t> j_set,
                                 int bound_multiplier) {
    if (slopes.size() < 3)
        throw std::invalid_argument(
            "j_realizable_endpoints: need at least two non-integer entries besides y_0");
    for (size_t i = 0; i < slopes.size(); ++i) {
        if (slopes[i].is_infinite())
            throw std::domain_error("j_realizable_endpoints: infinite slope");
        if (i == 0 && !slopes[0].is_integer())
            throw std::domain_error("j_realizable_endpoints: y_0 must be an integer");
        if (i > 0 && slopes[i].is_integer())
            throw std::domain_error("j_realizable_endpoints: y_i must be non-integer for i > 0");
    }
    std::vector<bool> in_j(slopes.size(), false);
    for (size_t j : j_set) {
        if (j >= slopes.size())
            throw std::invalid_argument("j_realizable_endpoints: index out of range");
        in_j[j] = true;
    }
    if (!in_j[0])
        throw std::invalid_argument("j_realizable_endpoints: J must contain 0");

    std::vector<Rational> floors;
    std::vector<std::pair<Rational, Rational>> pairs;
    for (size_t i = 0; i < slopes.size(); ++i) {
        if (in_j[i])
            floors.push_back(slopes[i]);
        else
            pairs.emplace_back(slopes[i], slopes[i]);
    }
    return endpoint_search(floors, pairs, bound_multiplier);
}

bool jn_admits_taut_foliation(const Endpoints& e) {
    return !LInterval::bracket(e.y_minus, e.y_plus).contains(Rational(0));
}

Rational seifert_longitude(std::span<const Rational> slopes) {
    return -sum_ext(slopes);
}

}  // namespace lspace
