#pragma once

#include <cstdint>
#include <iosfwd>
#include <numeric>
#include <stdexcept>
#include <string>

namespace irc {

// Exact rational on int64. All channel-exponent arithmetic goes through this
// type so regime conditions like alpha == 1 are decided exactly.
class Rational {
public:
    constexpr Rational() = default;
    constexpr Rational(long long n) : num_(n), den_(1) {}
    Rational(long long n, long long d);

    long long num() const { return num_; }
    long long den() const { return den_; }

    bool is_integer() const { return den_ == 1; }
    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);
    Rational operator-() const { Rational r; r.num_ = -num_; r.den_ = den_; return r; }

    Rational& operator+=(const Rational& o) { *this = *this + o; return *this; }
    Rational& operator-=(const Rational& o) { *this = *this - o; return *this; }
    Rational& operator*=(const Rational& o) { *this = *this * o; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b);
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    // floor(*this) as integer
    long long floor() const;

    std::string str() const;  // "p/q" or "p" when integral

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    void normalize();
    long long num_ = 0;
    long long den_ = 1;
};

inline Rational rat_min(const Rational& a, const Rational& b) { return a < b ? a : b; }
inline Rational rat_max(const Rational& a, const Rational& b) { return a < b ? b : a; }
// (x)^+ = max{0, x}
inline Rational rat_pos(const Rational& a) { return a < Rational(0) ? Rational(0) : a; }

// Parses "p", "p/q" or a decimal literal. Decimals are converted through a
// continued-fraction expansion with denominators capped at 10^6.
Rational parse_rational(const std::string& s);

// Nearest rational with denominator <= max_den (continued fractions).
Rational rational_from_double(double x, long long max_den = 1000000);

long long lcm_ll(long long a, long long b);

}  // namespace irc
