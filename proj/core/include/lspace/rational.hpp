#ifndef LSPACE_RATIONAL_HPP
#define LSPACE_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

namespace lspace {

using Integer = boost::multiprecision::cpp_int;

/// A reduced fraction in Q ∪ {inf}.
///
/// Invariants: gcd(|num|, den) == 1, den >= 0, and den == 0 only for the
/// single infinite value, which is stored as 1/0. Zero is 0/1. There is one
/// unsigned infinity; slope arithmetic on the projective circle never needs
/// signed infinities.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(Integer n) : num_(std::move(n)), den_(1) {}

    Rational(Integer num, Integer den) {
        if (den == 0) {
            if (num == 0)
                throw std::invalid_argument("rational: 0/0 is not a slope");
            num_ = 1;
            den_ = 0;
            return;
        }
        if (den < 0) {
            num = -num;
            den = -den;
        }
        Integer g = boost::multiprecision::gcd(num < 0 ? Integer(-num) : num, den);
        num_ = num / g;
        den_ = den / g;
    }

    static Rational infinity() {
        Rational r;
        r.num_ = 1;
        r.den_ = 0;
        return r;
    }

    /// Parses `inf | [+-]?digits(/digits)?`; the denominator, when present,
    /// must be a nonzero digit string.
    static Rational parse(std::string_view text);

    const Integer& num() const { return num_; }
    const Integer& den() const { return den_; }

    bool is_infinite() const { return den_ == 0; }
    bool is_integer() const { return den_ == 1; }
    bool is_zero() const { return den_ == 1 && num_ == 0; }

    std::string str() const {
        if (is_infinite()) return "inf";
        std::string s = num_.str();
        if (den_ != 1) s += "/" + den_.str();
        return s;
    }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }

    // Order comparisons are only defined on finite values; the circle
    // Q ∪ {inf} carries a cyclic order, not a linear one.
    friend bool operator<(const Rational& a, const Rational& b) {
        require_finite(a, b);
        return a.num_ * b.den_ < b.num_ * a.den_;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    // Addition and negation absorb infinity (inf + x = inf); there is no
    // signed-infinity cancellation.
    friend Rational operator+(const Rational& a, const Rational& b) {
        if (a.is_infinite() || b.is_infinite()) return infinity();
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a) {
        if (a.is_infinite()) return a;
        Rational r;
        r.num_ = -a.num_;
        r.den_ = a.den_;
        return r;
    }
    friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

private:
    static void require_finite(const Rational& a, const Rational& b) {
        if (a.is_infinite() || b.is_infinite())
            throw std::domain_error("rational: infinite slopes are not linearly ordered");
    }

    Integer num_;
    Integer den_;
};

/// ⌊a/b⌋ for b > 0 (floor toward -inf).
inline Integer floor_div(const Integer& a, const Integer& b) {
    Integer q = a / b;
    if (a % b != 0 && a < 0) --q;
    return q;
}

/// ⌊y·k⌋ for finite y and k >= 1.
inline Integer floor_mul(const Rational& y, const Integer& k) {
    if (y.is_infinite()) throw std::domain_error("floor_mul: infinite slope");
    if (k < 1) throw std::domain_error("floor_mul: k must be positive");
    return floor_div(y.num() * k, y.den());
}

/// ⌈y·k⌉ for finite y and k >= 1; equals -floor_mul(-y, k).
inline Integer ceil_mul(const Rational& y, const Integer& k) {
    if (y.is_infinite()) throw std::domain_error("ceil_mul: infinite slope");
    if (k < 1) throw std::domain_error("ceil_mul: k must be positive");
    return -floor_div(-(y.num() * k), y.den());
}

/// Exact sum; infinity is absorbing.
inline Rational sum_ext(std::span<const Rational> terms) {
    for (const Rational& t : terms)
        if (t.is_infinite()) return Rational::infinity();
    Rational acc;
    for (const Rational& t : terms) acc = acc + t;
    return acc;
}

/// 1/y on the circle: 0 ↦ inf, inf ↦ 0.
inline Rational reciprocal(const Rational& y) {
    return Rational(y.den(), y.num());
}

inline Rational Rational::parse(std::string_view text) {
    if (text == "inf") return infinity();
    auto fail = [&] {
        throw std::invalid_argument("slope '" + std::string(text) +
                                    "': expected inf or [+-]?digits(/digits)? with nonzero denominator");
    };
    size_t i = 0;
    bool neg = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
        neg = text[i] == '-';
        ++i;
    }
    size_t num_begin = i;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
    if (i == num_begin) fail();
    Integer num(std::string(text.substr(num_begin, i - num_begin)));
    Integer den = 1;
    if (i < text.size()) {
        if (text[i] != '/') fail();
        ++i;
        size_t den_begin = i;
        while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
        if (i == den_begin || i != text.size()) fail();
        den = Integer(std::string(text.substr(den_begin)));
        if (den == 0) fail();
    }
    return Rational(neg ? Integer(-num) : num, den);
}

}  // namespace lspace

#endif
