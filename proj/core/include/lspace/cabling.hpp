#ifndef LSPACE_CABLING_HPP
#define LSPACE_CABLING_HPP

#include "lspace/graph.hpp"
#include "lspace/interval.hpp"
#include "lspace/rational.hpp"
#include "lspace/tree.hpp"

#include <string>

namespace lspace {

/// Cabling coefficients: p·pstar - q·qstar = 1 with 0 < qstar < p.
struct CableParams {
    long long p = 2;
    long long q = 1;
    long long pstar = 1;
    long long qstar = 1;
};

/// The unique normalized coefficients for a (p, q) cable, p > 1, gcd(p,q)=1.
CableParams cable_coeffs(long long p, long long q);

/// Pushforward from the knot's surgery basis (mu, lambda) to the cabling
/// piece's slope coordinates: columns mu ↦ (-q*, -p), lambda ↦ (p*, q),
/// determinant +1. Sends a/b to (a·q* - b·p*)/(a·p - b·q).
GluingMatrix cable_surgery_matrix(const CableParams& params);

/// Gluing used when the daughter is a tree manifold: the surgery matrix
/// composed with the fixed meridian-longitude identification of the
/// daughter's slope coordinates (mu = slope 0, lambda = slope inf), i.e. the
/// cable of Y inside its slope-0 filling. Determinant -1.
GluingMatrix cable_tree_gluing(const CableParams& params);

/// Basis change from the cabling surgery basis to the standard basis for
/// knot complements in S^3 (Seifert-framed longitude): y ↦ y + p·q.
GluingMatrix s3_framing_matrix(long long p, long long q);

struct CableComputation {
    LInterval interval;  // in the cabling surgery basis
    CableParams params;
    Rational y1_minus, y1_plus;  // pushed input endpoints
    Rational y_minus, y_plus;    // extrema of the endpoint search
    Integer k_minus = 1, k_plus = 1;
    /// Exactly one pushed endpoint infinite: the case analysis falls through
    /// to the bracket branch, flagged here for the caller.
    bool mixed_infinity = false;
};

/// The cabling interval computed directly from the endpoint formulas:
///   y1± = (a±·q* - b±·p*)/(a±·p - b±·q),
///   y-(k) = (1/k)(⌈(q*/p)k⌉ - ⌈y1+·k⌉),  y- = max over k,
///   y+(k) = (1/k)(⌊(q*/p)k⌋ - ⌊y1-·k⌋),  y+ = min over k,
/// searched up to the lcm of p and the denominator of the finite y1±. The
/// result is Empty when finite y1- < y1+ and y- > y+, the single point
/// {1/y-} when finite y1- < y1+ and y- = y+, and the bracket [[1/y+, 1/y-]]
/// otherwise (an infinite extremum inverts to 0).
CableComputation cable_interval_ex(const Rational& a_minus, const Rational& a_plus,
                                   long long p, long long q, EvalOptions opts = {});
LInterval cable_interval(const Rational& a_minus, const Rational& a_plus, long long p,
                         long long q, EvalOptions opts = {});

/// The same output re-expressed in the conventional S^3 knot-complement
/// basis.
LInterval cable_interval_s3_basis(const LInterval& interval, long long p, long long q);

/// Convenience wrapper for cables inside an ambient L-space (the meridian
/// slope inf must lie in the input interval): evaluates the isolated-filling
/// predicate
///   a-/b- in [p*/q*, inf]  and  a+/b+ in [(q-p*)/(p-q*), q/p) ∪ {inf}
/// and asserts that it holds exactly when the general computation returns
/// the single point {inf}.
CableComputation cable_interval_lspace_ambient(const Rational& a_minus,
                                               const Rational& a_plus, long long p,
                                               long long q, EvalOptions opts = {});

/// The cable as a tree: a new root with Seifert slope -q*/p over the
/// twice-punctured disk and the input attached as its daughter. A solid-torus
/// input is absorbed as a Dehn filling of the root (a solid-torus subtree is
/// not a valid daughter).
TreeManifold cable_construct_tree(const TreeManifold& manifold, long long p, long long q);

/// Leaf flavor: the interval is the knot complement's L-space interval in
/// its surgery basis; it is pushed into root coordinates and stored as a
/// leaf daughter.
TreeManifold cable_construct_tree(const LInterval& surgery_interval, long long p,
                                  long long q);

}  // namespace lspace

#endif
