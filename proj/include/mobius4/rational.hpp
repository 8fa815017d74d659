#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace mobius4 {

// Exact rational arithmetic on 64-bit words. All input data lives on the
// quarter-integer lattice in [0,3]^3, so values stay tiny; intermediate
// products go through 128-bit anyway so derived quantities (areas, state
// sums, determinants) cannot silently wrap.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational() = default;
    Rational(std::int64_t n) : num(n), den(1) {}
    Rational(std::int64_t n, std::int64_t d) { *this = make(n, d); }

    static Rational make(__int128 n, __int128 d) {
        if (d == 0) throw std::domain_error("Rational: zero denominator");
        if (d < 0) { n = -n; d = -d; }
        __int128 g = gcd128(n < 0 ? -n : n, d);
        if (g > 1) { n /= g; d /= g; }
        Rational r;
        r.num = narrow(n);
        r.den = narrow(d);
        return r;
    }

    int sign() const { return num < 0 ? -1 : (num > 0 ? 1 : 0); }
    bool is_zero() const { return num == 0; }
    bool is_integer() const { return den == 1; }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return make((__int128)a.num * b.den + (__int128)b.num * a.den,
                    (__int128)a.den * b.den);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return make((__int128)a.num * b.den - (__int128)b.num * a.den,
                    (__int128)a.den * b.den);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return make((__int128)a.num * b.num, (__int128)a.den * b.den);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num == 0) throw std::domain_error("Rational: division by zero");
        return make((__int128)a.num * b.den, (__int128)a.den * b.num);
    }
    Rational operator-() const {
        Rational r;
        r.num = -num;
        r.den = den;
        return r;
    }
    Rational& operator+=(const Rational& b) { return *this = *this + b; }
    Rational& operator-=(const Rational& b) { return *this = *this - b; }
    Rational& operator*=(const Rational& b) { return *this = *this * b; }
    Rational& operator/=(const Rational& b) { return *this = *this / b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return (__int128)a.num * b.den < (__int128)b.num * a.den;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    Rational abs() const { return num < 0 ? -*this : *this; }

    // "3", "-1/2"
    std::string str() const {
        std::string s = std::to_string(num);
        if (den != 1) s += "/" + std::to_string(den);
        return s;
    }

    // Exact decimal ("1.5", "0.75", "2"); throws if the denominator is not
    // of the form 2^a 5^b.
    std::string decimal_str() const {
        std::int64_t d = den;
        int twos = 0, fives = 0;
        while (d % 2 == 0) { d /= 2; ++twos; }
        while (d % 5 == 0) { d /= 5; ++fives; }
        if (d != 1) throw std::domain_error("Rational: no finite decimal for " + str());
        int digits = twos > fives ? twos : fives;
        __int128 scaled = num;
        for (int i = 0; i < digits; ++i) scaled *= 10;
        scaled /= den;
        bool neg = scaled < 0;
        if (neg) scaled = -scaled;
        std::string raw;
        do { raw.insert(raw.begin(), char('0' + int(scaled % 10))); scaled /= 10; } while (scaled > 0);
        while ((int)raw.size() <= digits) raw.insert(raw.begin(), '0');
        std::string out = raw;
        if (digits > 0) {
            out = raw.substr(0, raw.size() - digits) + "." + raw.substr(raw.size() - digits);
            while (out.back() == '0') out.pop_back();
            if (out.back() == '.') out.pop_back();
        }
        return neg ? "-" + out : out;
    }

private:
    static __int128 gcd128(__int128 a, __int128 b) {
        while (b != 0) { __int128 t = a % b; a = b; b = t; }
        return a < 0 ? -a : a;
    }
    static std::int64_t narrow(__int128 v) {
        if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error("Rational: 64-bit overflow");
        return (std::int64_t)v;
    }
};

inline Rational rat(std::int64_t n, std::int64_t d = 1) { return Rational(n, d); }

// 3/2, the cube center coordinate
inline Rational half_of(std::int64_t n) { return Rational(n, 2); }

}  // namespace mobius4
