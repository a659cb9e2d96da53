#include "qcyclo/poch.hpp"

#include "qcyclo/dwork.hpp"
#include "qcyclo/errors.hpp"

#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace qcyclo {

namespace {

void require_positive(long b) {
    if (b < 1)
        throw std::invalid_argument("b must be a positive integer");
}

// alpha in Z_{<=0}
bool is_nonpositive_integer(const Rational& x) {
    return x.is_integer() && x.sign() <= 0;
}

// alpha in Z_{>0}
bool is_positive_integer(const Rational& x) {
    return x.is_integer() && x.sign() > 0;
}

void check_term_domain(const HypergeomSpec& h, long n) {
    for (const auto& p : h.num()) {
        if (!poch_defined(p, n))
            throw undefined_pochhammer("numerator factor (" + std::to_string(p.r) + "," +
                                       std::to_string(p.s) + ") undefined at n=" + std::to_string(n));
        if (!poch_nonzero(p, n))
            throw zero_pochhammer("numerator factor (" + std::to_string(p.r) + "," +
                                  std::to_string(p.s) + ") vanishes at n=" + std::to_string(n));
    }
    for (const auto& p : h.den()) {
        if (!poch_defined(p, n) || !poch_nonzero(p, n))
            throw undefined_pochhammer("denominator factor (" + std::to_string(p.r) + "," +
                                       std::to_string(p.s) + ") undefined or zero at n=" +
                                       std::to_string(n));
    }
}

} // namespace

PochParams::PochParams(long r_, long s_) : r(r_), s(s_) {
    if (s == 0)
        throw zero_modulus("pochhammer modulus s must be non-zero");
}

bool poch_defined(const PochParams& p, long n) {
    if (n >= 0)
        return true;
    Rational a = p.alpha();
    return !is_positive_integer(a) || Rational(n) > -a;
}

bool poch_nonzero(const PochParams& p, long n) {
    if (!poch_defined(p, n))
        return false;
    if (n <= 0)
        return true; // reciprocal of a product of non-zero factors
    Rational a = p.alpha();
    return !is_nonpositive_integer(a) || Rational(n) <= -a;
}

Int delta_small(long b, const PochParams& p, const Rational& x) {
    require_positive(b);
    long c = std::gcd(std::gcd(std::abs(p.r), std::abs(p.s)), b);
    long bp = b / c;
    long sp = p.s / c;
    if (std::gcd(std::abs(sp), bp) != 1)
        return 0;
    Rational alpha = p.alpha();
    Rational gamma = dwork_map(bp, alpha) + Rational(floor(Rational(1) - alpha), Int(bp));
    if (!(gamma > Rational(0) && gamma <= Rational(1)))
        throw error("internal: step offset gamma outside (0,1]"); // never fires
    return floor(Rational(c) * x - gamma) + 1;
}

Int poch_phi_valuation(long b, const PochParams& p, long n) {
    require_positive(b);
    if (!poch_defined(p, n))
        throw undefined_pochhammer("(q^" + std::to_string(p.r) + ";q^" + std::to_string(p.s) +
                                   ")_n undefined at n=" + std::to_string(n));
    if (!poch_nonzero(p, n))
        throw zero_pochhammer("(q^" + std::to_string(p.r) + ";q^" + std::to_string(p.s) +
                              ")_n is zero at n=" + std::to_string(n));
    return delta_small(b, p, Rational(n, b));
}

Int poch_q_valuation(const PochParams& p, long n) {
    if (!poch_defined(p, n))
        throw undefined_pochhammer("(q^" + std::to_string(p.r) + ";q^" + std::to_string(p.s) +
                                   ")_n undefined at n=" + std::to_string(n));
    if (!poch_nonzero(p, n))
        throw zero_pochhammer("(q^" + std::to_string(p.r) + ";q^" + std::to_string(p.s) +
                              ")_n is zero at n=" + std::to_string(n));
    if (n == 0)
        return 0;
    if (n < 0)
        return -poch_q_valuation(PochParams(p.r - p.s, -p.s), -n);
    Int total = 0;
    for (long i = 0; i < n; ++i) {
        Int e = Int(p.r) + Int(p.s) * i;
        if (e < 0)
            total += e;
    }
    return total;
}

HypergeomSpec::HypergeomSpec(std::vector<PochParams> num, std::vector<PochParams> den)
    : num_(std::move(num)), den_(std::move(den)) {}

long HypergeomSpec::modulus() const {
    Int l = 1;
    for (const auto& p : num_)
        mpz_lcm_ui(l.get_mpz_t(), l.get_mpz_t(), static_cast<unsigned long>(std::abs(p.s)));
    for (const auto& p : den_)
        mpz_lcm_ui(l.get_mpz_t(), l.get_mpz_t(), static_cast<unsigned long>(std::abs(p.s)));
    if (!l.fits_slong_p())
        throw error("lcm of moduli does not fit a machine integer");
    return l.get_si();
}

bool HypergeomSpec::defined_nonneg() const {
    for (const auto& p : den_)
        if (is_nonpositive_integer(p.alpha()))
            return false;
    return true;
}

bool HypergeomSpec::nonvanishing() const {
    for (const auto& p : num_)
        if (is_nonpositive_integer(p.alpha()))
            return false;
    return true;
}

bool HypergeomSpec::defined_neg() const {
    for (const auto& p : num_)
        if (is_positive_integer(p.alpha()))
            return false;
    return true;
}

HypergeomSpec HypergeomSpec::reflected() const {
    auto transform = [](const std::vector<PochParams>& v) {
        std::vector<PochParams> out;
        out.reserve(v.size());
        for (const auto& p : v)
            out.emplace_back(p.r - p.s, -p.s);
        return out;
    };
    return HypergeomSpec(transform(den_), transform(num_));
}

Int hyper_phi_valuation(long b, const HypergeomSpec& h, long n) {
    require_positive(b);
    check_term_domain(h, n);
    Int total = 0;
    Rational x(n, b);
    for (const auto& p : h.num())
        total += delta_small(b, p, x);
    for (const auto& p : h.den())
        total -= delta_small(b, p, x);
    return total;
}

long hyper_q_valuation_slope(const HypergeomSpec& h) {
    long s = 0;
    for (const auto& p : h.num())
        if (p.s < 0)
            s += p.s;
    for (const auto& p : h.den())
        if (p.s < 0)
            s -= p.s;
    return s;
}

Int hyper_q_valuation(const HypergeomSpec& h, long n) {
    check_term_domain(h, n);
    Int total = 0;
    for (const auto& p : h.num())
        total += poch_q_valuation(p, n);
    for (const auto& p : h.den())
        total -= poch_q_valuation(p, n);
    return total;
}

} // namespace qcyclo
