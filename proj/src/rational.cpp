#include "qcyclo/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace qcyclo {

Rational::Rational(const Int& num, const Int& den) {
    if (den == 0)
        throw std::invalid_argument("rational with zero denominator");
    v_ = mpq_class(num) / mpq_class(den);
}

Rational::Rational(long num, long den) : Rational(Int(num), Int(den)) {}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.v_ == 0)
        throw std::invalid_argument("rational division by zero");
    return Rational(mpq_class(a.v_ / b.v_));
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.v_ == 0)
        throw std::invalid_argument("rational division by zero");
    v_ /= o.v_;
    return *this;
}

std::string Rational::str() const {
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& x) {
    return os << x.str();
}

Int floor(const Rational& x) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), x.num().get_mpz_t(), x.den().get_mpz_t());
    return q;
}

Int ceil(const Rational& x) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), x.num().get_mpz_t(), x.den().get_mpz_t());
    return q;
}

Rational frac(const Rational& x) {
    return x - Rational(floor(x));
}

Rational angle(const Rational& x) {
    return x.is_integer() ? Rational(1) : frac(x);
}

Rational angle_star(const Rational& x) {
    if (!x.is_integer())
        return frac(x);
    return x.sign() > 0 ? Rational(1) : Rational(0);
}

Int frak_n(const Rational& x) {
    if (x.sign() >= 0)
        return x.num();
    return abs(x.num()) + 1;
}

} // namespace qcyclo
