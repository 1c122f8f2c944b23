#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace mwbis {

// Exact rational on 64-bit integers, normalized (den > 0, coprime).
// Intermediates go through 128-bit arithmetic; results that do not fit in
// 64 bits throw. Plenty for ratio bookkeeping at desk scale.
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n) : num(n), den(1) {}
    Rational(long long n, long long d);

    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
    std::string str() const {
        return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
    }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b);
    friend bool operator<=(const Rational& a, const Rational& b) { return a < b || a == b; }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator>=(const Rational& a, const Rational& b) { return b <= a; }

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);
};

// k^3 / (2k^3 - 3k^2 + 3k - 1): the integrality-gap upper bound of the gap
// family at budget k. Strictly decreasing in k, tends to 1/2. k >= 2.
Rational gap_upper_bound_formula(long long k);

}  // namespace mwbis
