#pragma once

// Exact rational numbers over 64-bit integers.
//
// Every intermediate product is formed in 128 bits and reduced before it is
// narrowed back; a result that still does not fit throws rational_overflow
// instead of wrapping.

#include <compare>
#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace gsc {

class rational_overflow : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

namespace detail {

using i128 = __int128;

inline i128 abs128(i128 v) { return v < 0 ? -v : v; }

inline i128 gcd128(i128 a, i128 b) {
    a = abs128(a);
    b = abs128(b);
    while (b != 0) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

inline std::int64_t narrow(i128 v) {
    if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
        throw rational_overflow("rational: value exceeds 64-bit range");
    return static_cast<std::int64_t>(v);
}

// floor division for a signed numerator and positive denominator
inline i128 floor_div(i128 a, i128 b) {
    i128 q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

}  // namespace detail

class Rational {
public:
    using int_type = std::int64_t;

    constexpr Rational() = default;
    constexpr Rational(int_type n) : num_(n), den_(1) {}  // NOLINT(implicit)
    Rational(int_type n, int_type d) { assign(n, d); }

    static Rational from_wide(detail::i128 n, detail::i128 d) {
        Rational r;
        r.assign(n, d);
        return r;
    }

    int_type num() const { return num_; }
    int_type den() const { return den_; }

    bool is_integer() const { return den_ == 1; }
    bool is_zero() const { return num_ == 0; }

    explicit operator double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
    double to_double() const { return static_cast<double>(*this); }

    Rational operator-() const { return from_wide(-detail::i128{num_}, den_); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        using detail::i128;
        return from_wide(i128{a.num_} * b.den_ + i128{b.num_} * a.den_, i128{a.den_} * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
    friend Rational operator*(const Rational& a, const Rational& b) {
        using detail::i128;
        // cross-reduce first so the 128-bit product stays small
        i128 g1 = detail::gcd128(a.num_, b.den_);
        i128 g2 = detail::gcd128(b.num_, a.den_);
        if (g1 == 0) g1 = 1;
        if (g2 == 0) g2 = 1;
        return from_wide((i128{a.num_} / g1) * (i128{b.num_} / g2), (i128{a.den_} / g2) * (i128{b.den_} / g1));
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw std::domain_error("rational: division by zero");
        return a * from_wide(b.den_, b.num_);
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational&, const Rational&) = default;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        using detail::i128;
        return i128{a.num_} * b.den_ <=> i128{b.num_} * a.den_;
    }

    /// Largest integer not greater than the value.
    int_type floor() const { return detail::narrow(detail::floor_div(num_, den_)); }

    /// Fractional part, always in [0, 1).
    Rational frac() const { return *this - Rational(floor()); }

    /// Reduce into [0, m) for a positive modulus m.
    Rational mod(const Rational& m) const {
        if (m.num_ <= 0) throw std::domain_error("rational: modulus must be positive");
        Rational q = *this / m;
        return *this - m * Rational(q.floor());
    }

    /// Reduce into [lo, lo + width).
    Rational wrap(const Rational& lo, const Rational& width) const { return (*this - lo).mod(width) + lo; }

    Rational abs() const { return num_ < 0 ? -*this : *this; }

    std::string str() const { return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_); }

    /// Parse "p", "p/q" or "-p/q". Decimal points are rejected.
    static Rational parse(std::string_view text);

private:
    void assign(detail::i128 n, detail::i128 d) {
        if (d == 0) throw std::domain_error("rational: zero denominator");
        if (d < 0) {
            n = -n;
            d = -d;
        }
        detail::i128 g = detail::gcd128(n, d);
        if (g > 1) {
            n /= g;
            d /= g;
        }
        if (n == 0) d = 1;
        num_ = detail::narrow(n);
        den_ = detail::narrow(d);
    }

    int_type num_ = 0;
    int_type den_ = 1;
};

inline std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

namespace detail {

inline std::int64_t parse_int(std::string_view s, std::string_view whole) {
    if (s.empty()) throw std::invalid_argument("rational: empty component in '" + std::string(whole) + "'");
    bool neg = false;
    std::size_t i = 0;
    if (s[0] == '-' || s[0] == '+') {
        neg = s[0] == '-';
        i = 1;
    }
    if (i == s.size()) throw std::invalid_argument("rational: missing digits in '" + std::string(whole) + "'");
    i128 v = 0;
    for (; i < s.size(); ++i) {
        char c = s[i];
        if (c < '0' || c > '9') {
            throw std::invalid_argument("rational: expected integer or p/q, got '" + std::string(whole) + "'");
        }
        v = v * 10 + (c - '0');
        if (v > i128{std::numeric_limits<std::int64_t>::max()}) throw rational_overflow("rational: literal too large");
    }
    return static_cast<std::int64_t>(neg ? -v : v);
}

}  // namespace detail

inline Rational Rational::parse(std::string_view text) {
    auto b = text.find_first_not_of(" \t");
    auto e = text.find_last_not_of(" \t");
    if (b == std::string_view::npos) throw std::invalid_argument("rational: empty string");
    std::string_view s = text.substr(b, e - b + 1);
    auto slash = s.find('/');
    if (slash == std::string_view::npos) return Rational(detail::parse_int(s, text));
    auto n = detail::parse_int(s.substr(0, slash), text);
    auto d = detail::parse_int(s.substr(slash + 1), text);
    if (d == 0) throw std::invalid_argument("rational: zero denominator in '" + std::string(text) + "'");
    return Rational(n, d);
}

inline std::int64_t lcm_checked(std::int64_t a, std::int64_t b) {
    if (a == 0 || b == 0) return 0;
    detail::i128 g = std::gcd(a, b);
    return detail::narrow(detail::abs128(detail::i128{a} / g * b));
}

}  // namespace gsc

template <>
struct std::hash<gsc::Rational> {
    std::size_t operator()(const gsc::Rational& r) const noexcept {
        return std::hash<std::int64_t>{}(r.num()) * 1000003u ^ std::hash<std::int64_t>{}(r.den());
    }
};
