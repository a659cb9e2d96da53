#include "qcyclo/cyclo_factor.hpp"

#include "qcyclo/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <mutex>
#include <stdexcept>

namespace qcyclo {

namespace {

void check_term_domain(const HypergeomSpec& h, long n) {
    for (const auto& p : h.num()) {
        if (!poch_defined(p, n))
            throw undefined_pochhammer("numerator factor undefined at n=" + std::to_string(n));
        if (!poch_nonzero(p, n))
            throw zero_pochhammer("numerator factor vanishes at n=" + std::to_string(n));
    }
    for (const auto& p : h.den())
        if (!poch_defined(p, n) || !poch_nonzero(p, n))
            throw undefined_pochhammer("denominator factor undefined or zero at n=" +
                                       std::to_string(n));
}

// Euler's totient, the degree of phi_b.
long totient(long b) {
    long result = b;
    for (long p = 2; p * p <= b; ++p) {
        if (b % p == 0) {
            result -= result / p;
            while (b % p == 0)
                b /= p;
        }
    }
    if (b > 1)
        result -= result / b;
    return result;
}

} // namespace

void CycloFactorization::mul_phi(long b, long k) {
    if (k == 0)
        return;
    long& v = factors[b];
    v += k;
    if (v == 0)
        factors.erase(b);
}

CycloFactorization& CycloFactorization::operator*=(const CycloFactorization& o) {
    sign *= o.sign;
    q_exp += o.q_exp;
    for (const auto& [b, v] : o.factors)
        mul_phi(b, v);
    return *this;
}

CycloFactorization CycloFactorization::inverse() const {
    CycloFactorization out;
    out.sign = sign;
    out.q_exp = -q_exp;
    for (const auto& [b, v] : factors)
        out.factors[b] = -v;
    return out;
}

std::vector<long> divisors(long a) {
    if (a < 1)
        throw std::invalid_argument("divisors of a non-positive integer");
    std::vector<long> out;
    for (long d = 1; d * d <= a; ++d) {
        if (a % d == 0) {
            out.push_back(d);
            if (d != a / d)
                out.push_back(a / d);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

std::map<long, LaurentPoly> g_cyclo_cache;
std::mutex g_cyclo_mutex;

// Assumes g_cyclo_mutex is held; recursion only descends to proper divisors.
const LaurentPoly& cyclotomic_poly_locked(long b) {
    auto it = g_cyclo_cache.find(b);
    if (it != g_cyclo_cache.end())
        return it->second;
    // q^b - 1 divided by the product of phi_d over proper divisors d.
    LaurentPoly numerator = LaurentPoly::monomial(1, b) - LaurentPoly::one();
    for (long d : divisors(b)) {
        if (d == b)
            continue;
        auto q = LaurentPoly::try_divide(numerator, cyclotomic_poly_locked(d));
        if (!q)
            throw error("internal: cyclotomic division failed");
        numerator = std::move(*q);
    }
    return g_cyclo_cache.emplace(b, std::move(numerator)).first->second;
}

} // namespace

const LaurentPoly& cyclotomic_poly(long b) {
    if (b < 1)
        throw std::invalid_argument("cyclotomic index must be positive");
    std::lock_guard<std::mutex> lock(g_cyclo_mutex);
    return cyclotomic_poly_locked(b);
}

LaurentPoly poch_poly(const PochParams& p, long n) {
    if (n < 0)
        throw std::invalid_argument("poch_poly requires n >= 0");
    LaurentPoly out = LaurentPoly::one();
    for (long i = 0; i < n; ++i) {
        long a = p.r + i * p.s;
        if (a == 0)
            return LaurentPoly::zero();
        out *= LaurentPoly::one_minus_q_pow(a);
    }
    return out;
}

CycloFactorization one_minus_q_pow_factors(long a) {
    if (a == 0)
        throw std::invalid_argument("1 - q^0 is zero");
    CycloFactorization f;
    if (a > 0) {
        f.sign = -1;
    } else {
        f.q_exp = a;
        a = -a;
    }
    for (long b : divisors(a))
        f.mul_phi(b, 1);
    return f;
}

CycloFactorization poch_factorization(const PochParams& p, long n) {
    if (!poch_defined(p, n))
        throw undefined_pochhammer("(q^" + std::to_string(p.r) + ";q^" + std::to_string(p.s) +
                                   ")_n undefined at n=" + std::to_string(n));
    if (!poch_nonzero(p, n))
        throw zero_pochhammer("(q^" + std::to_string(p.r) + ";q^" + std::to_string(p.s) +
                              ")_n is zero at n=" + std::to_string(n));
    if (n < 0)
        return poch_factorization(PochParams(p.r - p.s, -p.s), -n).inverse();
    CycloFactorization f;
    for (long i = 0; i < n; ++i)
        f *= one_minus_q_pow_factors(p.r + i * p.s);
    return f;
}

CycloFactorization hyper_factorization(const HypergeomSpec& h, long n) {
    check_term_domain(h, n);
    CycloFactorization f;
    for (const auto& p : h.num())
        f *= poch_factorization(p, n);
    for (const auto& p : h.den())
        f *= poch_factorization(p, n).inverse();
    return f;
}

CycloFactorization factor_cyclotomic(const LaurentPoly& poly) {
    if (poly.is_zero())
        throw not_decomposable("the zero polynomial has no decomposition");
    CycloFactorization f;
    f.q_exp = poly.min_exp();
    LaurentPoly rest = poly.shifted(-poly.min_exp());
    // phi(b) >= sqrt(b/2), so any remaining cyclotomic factor has
    // b <= 2*deg^2 for deg the remaining degree; the bound shrinks as
    // factors are stripped.
    for (long b = 1; rest.max_exp() > 0 && b <= 2 * rest.max_exp() * rest.max_exp() + 1; ++b) {
        if (totient(b) > rest.max_exp())
            continue;
        const LaurentPoly& phi = cyclotomic_poly(b);
        while (true) {
            auto q = LaurentPoly::try_divide(rest, phi);
            if (!q)
                break;
            rest = std::move(*q);
            f.mul_phi(b, 1);
        }
    }
    if (rest.max_exp() != 0 || rest.min_exp() != 0)
        throw not_decomposable("non-cyclotomic factor of degree " +
                               std::to_string(rest.max_exp()) + " remains");
    if (rest.coeff(0) == 1)
        f.sign = 1;
    else if (rest.coeff(0) == -1)
        f.sign = -1;
    else
        throw not_decomposable("non-unit content " + rest.coeff(0).get_str() + " remains");
    return f;
}

LaurentPoly reconstruct(const CycloFactorization& f) {
    std::vector<LaurentPoly> leaves;
    for (const auto& [b, v] : f.factors) {
        if (v < 0)
            throw std::invalid_argument("reconstruct requires non-negative exponents");
        for (long i = 0; i < v; ++i)
            leaves.push_back(cyclotomic_poly(b));
    }
    LaurentPoly out = product_tree(std::move(leaves)).shifted(f.q_exp);
    return f.sign < 0 ? -out : out;
}

std::pair<LaurentPoly, LaurentPoly> reconstruct_ratio(const CycloFactorization& f) {
    CycloFactorization num, den;
    num.sign = f.sign;
    if (f.q_exp >= 0)
        num.q_exp = f.q_exp;
    else
        den.q_exp = -f.q_exp;
    for (const auto& [b, v] : f.factors) {
        if (v > 0)
            num.factors[b] = v;
        else
            den.factors[b] = -v;
    }
    return {reconstruct(num), reconstruct(den)};
}

LaurentPoly gaussian_binomial(long m, long k) {
    if (k < 0 || m < k)
        throw std::invalid_argument("gaussian_binomial requires 0 <= k <= m");
    CycloFactorization f;
    for (long b = 2; b <= m; ++b) {
        long v = m / b - k / b - (m - k) / b;
        f.mul_phi(b, v);
    }
    return reconstruct(f);
}

} // namespace qcyclo
