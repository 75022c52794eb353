#include "lspace/interval.hpp"

#include <stdexcept>

namespace lspace {

bool LInterval::contains(const Rational& x) const {
    switch (kind_) {
        case Kind::Empty:
            return false;
        case Kind::Point:
            return x == left_;
        case Kind::Bracket:
            break;
    }
    const bool linf = left_.is_infinite();
    const bool rinf = right_.is_infinite();
    if (linf && rinf) return !x.is_infinite();           // <-inf, +inf> = Q
    if (left_ == right_) return x != left_;              // Q ∪ {inf} minus a point
    if (linf) return x.is_infinite() || x <= right_;     // [-inf, r]
    if (rinf) return x.is_infinite() || x >= left_;      // [l, +inf]
    if (left_ < right_)                                  // [l, r]
        return !x.is_infinite() && left_ <= x && x <= right_;
    return x.is_infinite() || x >= left_ || x <= right_; // [l, +inf] ∪ [-inf, r]
}

bool LInterval::infinity_interior() const {
    if (kind_ != Kind::Bracket) return false;
    if (left_.is_infinite() || right_.is_infinite()) return false;
    return left_ >= right_;  // co-point at a finite value, or the wrap arc
}

GluingMatrix GluingMatrix::inverse() const {
    Integer t = det();
    if (t == 1) return {d, -b, -c, a};
    if (t == -1) return {-d, b, c, -a};
    throw std::domain_error("gluing matrix: determinant ±1 required");
}

Rational GluingMatrix::apply(const Rational& x) const {
    return Rational(a * x.num() + b * x.den(), c * x.num() + d * x.den());
}

LInterval mobius_push(const LInterval& interval, const GluingMatrix& m) {
    if (!m.unimodular())
        throw std::domain_error("mobius_push: determinant ±1 required");
    switch (interval.kind()) {
        case LInterval::Kind::Empty:
            return LInterval::empty();
        case LInterval::Kind::Point:
            return LInterval::point(m.apply(interval.value()));
        case LInterval::Kind::Bracket: {
            Rational l = m.apply(interval.left());
            Rational r = m.apply(interval.right());
            if (m.det() > 0) return LInterval::bracket(std::move(l), std::move(r));
            return LInterval::bracket(std::move(r), std::move(l));
        }
    }
    throw std::logic_error("unreachable");
}

namespace {

// Position of x on the circle when traveling counterclockwise starting just
// after `base`: first the finite slopes above base in increasing order, then
// inf, then the finite slopes below base. All comparisons reduce to signs of
// 2x2 determinants of slope coordinate pairs.
struct CcwKey {
    int category;
    const Rational* value;  // ordering key within category 0/2; unused otherwise
};

CcwKey ccw_key(const Rational& base, const Rational& x) {
    if (base.is_infinite()) return {0, &x};  // all finite slopes, in order
    if (x.is_infinite()) return {1, nullptr};
    return x > base ? CcwKey{0, &x} : CcwKey{2, &x};
}

bool ccw_key_less(const CcwKey& p, const CcwKey& q) {
    if (p.category != q.category) return p.category < q.category;
    if (p.value == nullptr) return false;
    return *p.value < *q.value;
}

}  // namespace

bool ccw_strictly_between(const Rational& a, const Rational& x, const Rational& b) {
    if (a == b) throw std::domain_error("ccw_strictly_between: degenerate arc");
    if (x == a || x == b) return false;
    return ccw_key_less(ccw_key(a, x), ccw_key(a, b));
}

OpenSet OpenSet::arc(Rational from, Rational to) {
    if (from == to) throw std::domain_error("open arc needs distinct endpoints");
    OpenSet s;
    s.kind_ = Kind::Arc;
    s.from_ = std::move(from);
    s.to_ = std::move(to);
    return s;
}

bool OpenSet::contains(const Rational& x) const {
    switch (kind_) {
        case Kind::Empty:
            return false;
        case Kind::CoPoint:
            return x != from_;
        case Kind::Arc:
            return ccw_strictly_between(from_, x, to_);
    }
    throw std::logic_error("unreachable");
}

bool ClosedSet::contains(const Rational& x) const {
    if (kind_ == Kind::Whole) return true;
    if (x == from_ || x == to_) return true;
    if (from_ == to_) return false;
    return ccw_strictly_between(from_, x, to_);
}

OpenSet interior(const LInterval& interval) {
    switch (interval.kind()) {
        case LInterval::Kind::Empty:
        case LInterval::Kind::Point:
            return OpenSet::empty();
        case LInterval::Kind::Bracket:
            if (interval.left() == interval.right())
                return OpenSet::copoint(interval.left());
            return OpenSet::arc(interval.left(), interval.right());
    }
    throw std::logic_error("unreachable");
}

ClosedSet complement_closed(const OpenSet& open) {
    switch (open.kind()) {
        case OpenSet::Kind::Empty:
            return ClosedSet::whole();
        case OpenSet::Kind::CoPoint:
            return ClosedSet::arc(open.excluded(), open.excluded());
        case OpenSet::Kind::Arc:
            return ClosedSet::arc(open.to(), open.from());
    }
    throw std::logic_error("unreachable");
}

bool covers_circle(const OpenSet& a, const OpenSet& b) {
    ClosedSet ca = complement_closed(a);
    ClosedSet cb = complement_closed(b);
    if (ca.is_whole() || cb.is_whole()) return false;
    // Two closed arcs meet iff an endpoint of one lies in the other.
    if (cb.contains(ca.from()) || cb.contains(ca.to())) return false;
    if (ca.contains(cb.from()) || ca.contains(cb.to())) return false;
    return true;
}

std::string render_interval(const LInterval& interval) {
    switch (interval.kind()) {
        case LInterval::Kind::Empty:
            return "empty";
        case LInterval::Kind::Point:
            return "{" + interval.value().str() + "}";
        case LInterval::Kind::Bracket:
            break;
    }
    const Rational& l = interval.left();
    const Rational& r = interval.right();
    if (l.is_infinite() && r.is_infinite()) return "<-inf, +inf>";
    if (l == r) return "Q \\ {" + l.str() + "}";
    if (l.is_infinite()) return "[-inf, " + r.str() + "]";
    if (r.is_infinite()) return "[" + l.str() + ", +inf]";
    if (l < r) return "[" + l.str() + ", " + r.str() + "]";
    return "[" + l.str() + ", +inf] u [-inf, " + r.str() + "]";
}

std::string render_interval_bracket(const LInterval& interval) {
    switch (interval.kind()) {
        case LInterval::Kind::Empty:
            return "empty";
        case LInterval::Kind::Point:
            return "{" + interval.value().str() + "}";
        case LInterval::Kind::Bracket:
            return "[[" + interval.left().str() + ", " + interval.right().str() + "]]";
    }
    throw std::logic_error("unreachable");
}

std::string render_closed_set(const ClosedSet& set) {
    if (set.is_whole()) return "Q u {inf}";
    if (set.is_point()) return "{" + set.from().str() + "}";
    const Rational& a = set.from();
    const Rational& b = set.to();
    if (a.is_infinite()) return "[-inf, " + b.str() + "]";
    if (b.is_infinite()) return "[" + a.str() + ", +inf]";
    if (a < b) return "[" + a.str() + ", " + b.str() + "]";
    return "[" + a.str() + ", +inf] u [-inf, " + b.str() + "]";
}

}  // namespace lspace
