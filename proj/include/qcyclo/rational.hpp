#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>

namespace qcyclo {

using Int = mpz_class;

/// Exact rational number, always reduced, denominator always >= 1.
///
/// num() is the signed numerator n(alpha) and den() the exact positive
/// denominator d(alpha); alpha is an integer iff den() == 1.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}
    Rational(long n) : v_(static_cast<signed long>(n)) {}
    Rational(const Int& n) : v_(n) {}
    Rational(const Int& num, const Int& den);
    Rational(long num, long den);
    explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }

    Int num() const { return v_.get_num(); }
    Int den() const { return v_.get_den(); }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    std::string str() const; // canonical "p/q" form

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ + b.v_)); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ - b.v_)); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ * b.v_)); }
    friend Rational operator/(const Rational& a, const Rational& b);
    Rational operator-() const { return Rational(mpq_class(-v_)); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    const mpq_class& raw() const { return v_; }

private:
    mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& x);

/// Greatest integer <= x.
Int floor(const Rational& x);

/// Least integer >= x.
Int ceil(const Rational& x);

/// True fractional part x - floor(x), in [0, 1); zero on integers.
Rational frac(const Rational& x);

/// <x>: the fractional part for non-integers, 1 on integers.  Always in
/// (0, 1], and <x> = 1 - frac(1 - x).
Rational angle(const Rational& x);

/// <x>*: the fractional part for non-integers, 1 on positive integers,
/// 0 otherwise.  Always in [0, 1].
Rational angle_star(const Rational& x);

/// n_alpha: n(alpha) for alpha >= 0, |n(alpha)| + 1 otherwise.
Int frak_n(const Rational& x);

} // namespace qcyclo
