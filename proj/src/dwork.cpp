#include "qcyclo/dwork.hpp"

#include "qcyclo/errors.hpp"

#include <stdexcept>

namespace qcyclo {

namespace {

void require_positive(long b) {
    if (b < 1)
        throw std::invalid_argument("b must be a positive integer");
}

} // namespace

bool in_localization(long b, const Rational& alpha) {
    require_positive(b);
    Int g;
    mpz_gcd_ui(g.get_mpz_t(), alpha.den().get_mpz_t(), static_cast<unsigned long>(b));
    return g == 1;
}

Int inverse_witness(long b, const Int& m) {
    if (m < 1)
        throw std::invalid_argument("modulus must be positive");
    if (m == 1)
        return 1;
    Int a;
    Int bb(b);
    mpz_mod(bb.get_mpz_t(), bb.get_mpz_t(), m.get_mpz_t());
    if (mpz_invert(a.get_mpz_t(), bb.get_mpz_t(), m.get_mpz_t()) == 0)
        throw invalid_multiplier("no inverse of " + std::to_string(b) + " modulo " + m.get_str());
    return a; // mpz_invert yields a in [1, m-1] here
}

Rational dwork_map(long b, const Rational& alpha) {
    if (!in_localization(b, alpha))
        throw not_in_localization("denominator of " + alpha.str() + " shares a factor with " +
                                  std::to_string(b));
    Int a = inverse_witness(b, alpha.den());
    Rational aa = Rational(a) * alpha;
    return aa + Rational(floor((alpha - 1) / b - aa)) + 1;
}

Rational dwork_map_large_b(long b, const Rational& alpha, const Int& a) {
    if (!in_localization(b, alpha))
        throw not_in_localization("denominator of " + alpha.str() + " shares a factor with " +
                                  std::to_string(b));
    if ((a * b - 1) % alpha.den() != 0)
        throw invalid_multiplier("a*b != 1 mod d(alpha)");
    Rational t = angle(Rational(a) * alpha);
    return t - Rational(floor(t - alpha / b));
}

} // namespace qcyclo
