#include "mwbis/rational.hpp"

#include <numeric>

namespace mwbis {

namespace {

long long narrow(__int128 v) {
    if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error("Rational: 64-bit overflow");
    return static_cast<long long>(v);
}

__int128 gcd128(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        __int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

Rational make(__int128 n, __int128 d) {
    if (d == 0) throw std::invalid_argument("Rational: zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    __int128 g = gcd128(n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    Rational r;
    r.num = narrow(n);
    r.den = narrow(d);
    return r;
}

}  // namespace

Rational::Rational(long long n, long long d) { *this = make(n, d); }

bool operator<(const Rational& a, const Rational& b) {
    return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
}

Rational operator+(const Rational& a, const Rational& b) {
    return make(static_cast<__int128>(a.num) * b.den + static_cast<__int128>(b.num) * a.den,
                static_cast<__int128>(a.den) * b.den);
}

Rational operator-(const Rational& a, const Rational& b) {
    return make(static_cast<__int128>(a.num) * b.den - static_cast<__int128>(b.num) * a.den,
                static_cast<__int128>(a.den) * b.den);
}

Rational operator*(const Rational& a, const Rational& b) {
    return make(static_cast<__int128>(a.num) * b.num, static_cast<__int128>(a.den) * b.den);
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.num == 0) throw std::invalid_argument("Rational: division by zero");
    return make(static_cast<__int128>(a.num) * b.den, static_cast<__int128>(a.den) * b.num);
}

Rational gap_upper_bound_formula(long long k) {
    if (k < 2) throw std::invalid_argument("gap_upper_bound_formula: k must be >= 2");
    if (k > 1'000'000) throw std::invalid_argument("gap_upper_bound_formula: k too large");
    __int128 k3 = static_cast<__int128>(k) * k * k;
    __int128 den = 2 * k3 - 3 * static_cast<__int128>(k) * k + 3 * k - 1;
    return Rational(static_cast<long long>(k3), static_cast<long long>(den));
}

}  // namespace mwbis
