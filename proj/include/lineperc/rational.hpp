#ifndef LINEPERC_RATIONAL_HPP
#define LINEPERC_RATIONAL_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace lineperc {

/// Exact rational over 128-bit integers, always reduced, denominator > 0.
/// Arithmetic checks for overflow and throws instead of wrapping; the
/// magnitudes in the percolation bounds stay far below the 2^127 limit.
class Rational {
public:
    using Int = __int128;

    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(long long n, long long d) : num_(n), den_(d) { normalize(); }
    static Rational make(Int n, Int d) {
        Rational r;
        r.num_ = n;
        r.den_ = d;
        r.normalize();
        return r;
    }

    Rational operator+(const Rational& o) const {
        return make(checked_add(checked_mul(num_, o.den_), checked_mul(o.num_, den_)),
                    checked_mul(den_, o.den_));
    }
    Rational operator-(const Rational& o) const {
        return make(checked_sub(checked_mul(num_, o.den_), checked_mul(o.num_, den_)),
                    checked_mul(den_, o.den_));
    }
    Rational operator*(const Rational& o) const {
        return make(checked_mul(num_, o.num_), checked_mul(den_, o.den_));
    }
    Rational operator/(const Rational& o) const {
        if (o.num_ == 0) throw std::domain_error("rational division by zero");
        return make(checked_mul(num_, o.den_), checked_mul(den_, o.num_));
    }
    Rational operator-() const { return make(-num_, den_); }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const {
        return checked_mul(num_, o.den_) < checked_mul(o.num_, den_);
    }
    bool operator<=(const Rational& o) const { return !(o < *this); }
    bool operator>(const Rational& o) const { return o < *this; }
    bool operator>=(const Rational& o) const { return !(*this < o); }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }

    long long floor_ll() const {
        Int q = num_ / den_;
        if (num_ % den_ != 0 && num_ < 0) --q;
        return to_ll(q);
    }
    long long ceil_ll() const {
        Int q = num_ / den_;
        if (num_ % den_ != 0 && num_ > 0) ++q;
        return to_ll(q);
    }

    double to_double() const { return double(num_) / double(den_); }

    std::string str() const {
        std::string s = int_str(num_);
        if (den_ != 1) s += "/" + int_str(den_);
        return s;
    }

private:
    static Int checked_add(Int a, Int b) {
        Int r;
        if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("rational overflow");
        return r;
    }
    static Int checked_sub(Int a, Int b) {
        Int r;
        if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("rational overflow");
        return r;
    }
    static Int checked_mul(Int a, Int b) {
        Int r;
        if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("rational overflow");
        return r;
    }
    static Int gcd_int(Int a, Int b) {
        if (a < 0) a = -a;
        if (b < 0) b = -b;
        while (b) {
            Int t = b;
            b = a % b;
            a = t;
        }
        return a;
    }
    static long long to_ll(Int v) {
        if (v > Int(INT64_MAX) || v < Int(INT64_MIN))
            throw std::overflow_error("rational does not fit in 64 bits");
        return (long long)v;
    }
    static std::string int_str(Int v) {
        if (v == 0) return "0";
        bool neg = v < 0;
        std::string s;
        while (v != 0) {
            int d = int(neg ? -(v % 10) : (v % 10));
            s.push_back(char('0' + d));
            v /= 10;
        }
        if (neg) s.push_back('-');
        return {s.rbegin(), s.rend()};
    }

    void normalize() {
        if (den_ == 0) throw std::domain_error("zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        Int g = gcd_int(num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
        if (num_ == 0) den_ = 1;
    }

    Int num_, den_;
};

} // namespace lineperc

#endif
