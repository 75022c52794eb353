#ifndef LSPACE_SEIFERT_HPP
#define LSPACE_SEIFERT_HPP

#include "lspace/rational.hpp"

#include <span>
#include <utility>
#include <vector>

namespace lspace {

/// Extremal values of the endpoint search together with the least k
/// realizing each of them. An infinite endpoint carries witness k = 1.
struct Endpoints {
    Rational y_minus;
    Rational y_plus;
    Integer k_minus = 1;
    Integer k_plus = 1;
};

/// The shared endpoint kernel.
///
///   y-(k) = -(1/k)(1 + Σ ⌊f·k⌋ + Σ (⌈p.second·k⌉ - 1))
///   y+(k) = -(1/k)(-1 + Σ ⌈f·k⌉ + Σ (⌊p.first·k⌋ + 1))
///
/// y- is maximized and y+ minimized over 1 <= k <= s·bound_multiplier, where
/// s is the least common multiple of the denominators of the finite entries
/// entering the respective sum. The extrema are realized within the s bound
/// for all non-solid-torus configurations; callers enforce that hypothesis.
/// An infinite pair entry makes the corresponding endpoint infinite, k = 1.
/// The floor entries must all be finite.
Endpoints endpoint_search(std::span<const Rational> floor_slopes,
                          std::span<const std::pair<Rational, Rational>> daughter_pairs,
                          int bound_multiplier = 1);

/// Jankins-Neumann endpoints of a Seifert fibered regular fiber complement
/// over the disk:
///   y- = max_k -(1/k)(1 + Σ ⌊y_i·k⌋),  y+ = min_k -(1/k)(-1 + Σ ⌈y_i·k⌉).
/// Requires a nonempty list of finite slopes with at least two non-integer
/// entries; the solid-torus case is handled by the caller (there the extrema
/// degenerate to an unattained supremum).
Endpoints jn_endpoints(std::span<const Rational> slopes, int bound_multiplier = 1);

/// J-realizability endpoints for a tuple (y_0, ..., y_n) with y_0 an integer,
/// the rest non-integer, n >= 2, and an index subset J containing 0: floor
/// terms for j in J, (ceiling - 1) terms for the complement in y-, dually in
/// y+, extremized over k up to the lcm of all denominators.
Endpoints j_realizable_endpoints(std::span<const Rational> slopes,
                                 std::span<const std::size_t> j_set,
                                 int bound_multiplier = 1);

/// The foliation verdict attached to a J-realizability pair: the slope-0
/// filling of the configuration admits a co-oriented taut foliation iff
/// 0 = y- = y+ or 0 lies in the open arc from y+ counterclockwise to y-,
/// i.e. iff 0 is not in the bracket interval [[y-, y+]].
bool jn_admits_taut_foliation(const Endpoints& e);

/// Rational longitude -Σ y_i of the fiber complement (infinity absorbing).
Rational seifert_longitude(std::span<const Rational> slopes);

}  // namespace lspace

#endif
