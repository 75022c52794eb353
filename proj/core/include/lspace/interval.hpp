#ifndef LSPACE_INTERVAL_HPP
#define LSPACE_INTERVAL_HPP

#include "lspace/rational.hpp"

#include <optional>
#include <string>

namespace lspace {

/// An L-space interval on the circle Q ∪ {inf}.
///
/// Bracket(l, r) is the unique interval with left endpoint l and right
/// endpoint r: closed when l != r, open when l == r. In particular
///   Bracket(v, v), v finite   = Q ∪ {inf} minus {v}   (open co-point),
///   Bracket(inf, inf)         = Q                     (open co-point at inf),
///   Bracket(l, r), l < r      = [l, r],
///   Bracket(l, r), l > r      = [l, +inf] ∪ [-inf, r],
///   Bracket(inf, r)           = [-inf, r],
///   Bracket(l, inf)           = [l, +inf].
/// The whole circle is not representable and never arises as an L-space
/// interval. Point(v) is the singleton {v}, distinct from Bracket(v, v).
class LInterval {
public:
    enum class Kind { Empty, Point, Bracket };

    static LInterval empty() { return LInterval(); }
    static LInterval point(Rational v) {
        LInterval i;
        i.kind_ = Kind::Point;
        i.left_ = i.right_ = std::move(v);
        return i;
    }
    static LInterval bracket(Rational l, Rational r) {
        LInterval i;
        i.kind_ = Kind::Bracket;
        i.left_ = std::move(l);
        i.right_ = std::move(r);
        return i;
    }

    Kind kind() const { return kind_; }
    bool is_empty() const { return kind_ == Kind::Empty; }
    bool is_point() const { return kind_ == Kind::Point; }
    bool is_bracket() const { return kind_ == Kind::Bracket; }

    /// Bracket intervals are exactly the ones with nonempty interior.
    bool is_floer_simple() const { return kind_ == Kind::Bracket; }

    /// Co-point: the complement of one point (open).
    bool is_copoint() const { return kind_ == Kind::Bracket && left_ == right_; }

    /// Closed finite arc [l, r] with l < r.
    bool is_closed_finite_arc() const {
        return kind_ == Kind::Bracket && !left_.is_infinite() && !right_.is_infinite() &&
               left_ < right_;
    }

    const Rational& left() const { return left_; }
    const Rational& right() const { return right_; }
    const Rational& value() const { return left_; }  // Point payload

    bool contains(const Rational& x) const;

    /// inf lies in the open interior: true for Bracket(v, v) with v finite and
    /// for Bracket(l, r) with finite l > r; false when inf is an endpoint.
    bool infinity_interior() const;

    friend bool operator==(const LInterval& a, const LInterval& b) {
        if (a.kind_ != b.kind_) return false;
        if (a.kind_ == Kind::Empty) return true;
        return a.left_ == b.left_ && a.right_ == b.right_;
    }
    friend bool operator!=(const LInterval& a, const LInterval& b) { return !(a == b); }

private:
    Kind kind_ = Kind::Empty;
    Rational left_;
    Rational right_;
};

/// Unimodular change of slope coordinates. Acts on column vectors (r, s)
/// written in the (f̃, -h̃) basis: (r, s) ↦ (a·r + b·s, c·r + d·s).
struct GluingMatrix {
    Integer a = 1, b = 0, c = 0, d = 1;

    static GluingMatrix identity() { return {}; }
    /// y ↦ y + z.
    static GluingMatrix translation(const Integer& z) { return {1, z, 0, 1}; }
    /// y ↦ 1/y (det -1).
    static GluingMatrix slope_inversion() { return {0, 1, 1, 0}; }
    /// y ↦ -y (det -1).
    static GluingMatrix negation() { return {-1, 0, 0, 1}; }

    Integer det() const { return a * d - b * c; }
    bool unimodular() const {
        Integer t = det();
        return t == 1 || t == -1;
    }

    GluingMatrix inverse() const;
    Rational apply(const Rational& x) const;

    friend GluingMatrix operator*(const GluingMatrix& m, const GluingMatrix& n) {
        return {m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d,
                m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d};
    }
    friend bool operator==(const GluingMatrix& m, const GluingMatrix& n) {
        return m.a == n.a && m.b == n.b && m.c == n.c && m.d == n.d;
    }
};

/// Image of an interval under the fractional-linear action. det > 0 keeps the
/// endpoints in place; det < 0 reverses the cyclic order, so the endpoint
/// roles swap and closed/open arcs map to closed/open arcs.
LInterval mobius_push(const LInterval& interval, const GluingMatrix& m);

/// True iff x lies strictly inside the open arc from a counterclockwise to b
/// (a != b required). The cyclic order is the one induced by the orientation
/// of the projective circle: increasing finite slopes, then inf between the
/// two unbounded ends.
bool ccw_strictly_between(const Rational& a, const Rational& x, const Rational& b);

/// An open subset of the circle arising as the interior of an LInterval:
/// empty, the complement of one point, or an open arc with distinct endpoints.
class OpenSet {
public:
    enum class Kind { Empty, CoPoint, Arc };

    static OpenSet empty() { return OpenSet(); }
    static OpenSet copoint(Rational v) {
        OpenSet s;
        s.kind_ = Kind::CoPoint;
        s.from_ = s.to_ = std::move(v);
        return s;
    }
    static OpenSet arc(Rational from, Rational to);

    Kind kind() const { return kind_; }
    bool is_empty() const { return kind_ == Kind::Empty; }
    const Rational& from() const { return from_; }
    const Rational& to() const { return to_; }
    const Rational& excluded() const { return from_; }  // CoPoint payload

    bool contains(const Rational& x) const;

    friend bool operator==(const OpenSet& a, const OpenSet& b) {
        if (a.kind_ != b.kind_) return false;
        if (a.kind_ == Kind::Empty) return true;
        return a.from_ == b.from_ && a.to_ == b.to_;
    }

private:
    Kind kind_ = Kind::Empty;
    Rational from_;
    Rational to_;
};

/// A closed subset of the circle arising as the complement of an OpenSet:
/// the whole circle, or a closed arc (a single point when from == to).
class ClosedSet {
public:
    enum class Kind { Whole, Arc };

    static ClosedSet whole() { return ClosedSet(); }
    static ClosedSet arc(Rational from, Rational to) {
        ClosedSet s;
        s.kind_ = Kind::Arc;
        s.from_ = std::move(from);
        s.to_ = std::move(to);
        return s;
    }

    Kind kind() const { return kind_; }
    bool is_whole() const { return kind_ == Kind::Whole; }
    bool is_point() const { return kind_ == Kind::Arc && from_ == to_; }
    const Rational& from() const { return from_; }
    const Rational& to() const { return to_; }

    bool contains(const Rational& x) const;

    friend bool operator==(const ClosedSet& a, const ClosedSet& b) {
        if (a.kind_ != b.kind_) return false;
        if (a.kind_ == Kind::Whole) return true;
        return a.from_ == b.from_ && a.to_ == b.to_;
    }

private:
    Kind kind_ = Kind::Whole;
    Rational from_;
    Rational to_;
};

OpenSet interior(const LInterval& interval);
ClosedSet complement_closed(const OpenSet& open);

/// True iff the two open sets together cover all of Q ∪ {inf}, decided as
/// disjointness of the complementary closed arcs.
bool covers_circle(const OpenSet& a, const OpenSet& b);

/// Fixed textual rendering:
///   empty, {v}, <-inf, +inf>, Q \ {v}, [-inf, b], [a, +inf], [a, b],
///   [a, +inf] u [-inf, b].
std::string render_interval(const LInterval& interval);
std::string render_closed_set(const ClosedSet& set);

/// Endpoint notation: [[a, b]] for brackets, {v} for points, empty.
std::string render_interval_bracket(const LInterval& interval);

}  // namespace lspace

#endif
