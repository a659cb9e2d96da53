#pragma once

#include "qcyclo/laurent.hpp"
#include "qcyclo/poch.hpp"

#include <map>
#include <vector>

namespace qcyclo {

/// Unique decomposition sign * q^q_exp * prod phi_b(q)^{factors[b]} of a
/// non-zero element of Q(q) lying in the multiplicative span of +-q^m
/// and cyclotomic polynomials.
struct CycloFactorization {
    int sign = 1;
    long q_exp = 0;
    std::map<long, long> factors; // b -> v_b, zero entries dropped

    long exponent(long b) const {
        auto it = factors.find(b);
        return it == factors.end() ? 0 : it->second;
    }

    void mul_phi(long b, long k); // multiply by phi_b^k
    CycloFactorization& operator*=(const CycloFactorization& o);
    CycloFactorization inverse() const;

    friend bool operator==(const CycloFactorization&, const CycloFactorization&) = default;
};

/// Sorted positive divisors of a >= 1.
std::vector<long> divisors(long a);

/// The b-th cyclotomic polynomial, by exact division of q^b - 1 by the
/// product of the phi_d for proper divisors d.  Cached; thread-safe.
const LaurentPoly& cyclotomic_poly(long b);

/// The expanded product prod_{i=0}^{n-1} (1 - q^{r+si}); may be zero.
LaurentPoly poch_poly(const PochParams& p, long n);

/// Decomposition of 1 - q^a for a != 0 via 1-q^a = -prod_{b|a} phi_b and
/// 1-q^{-a} = q^{-a} prod_{b|a} phi_b.
CycloFactorization one_minus_q_pow_factors(long a);

/// Decomposition of (q^r;q^s)_n for any n in the symbol's domain,
/// factor by factor; never expands the product.
CycloFactorization poch_factorization(const PochParams& p, long n);

/// Decomposition of the full term Q(q;n); throws the same domain errors
/// as hyper_phi_valuation.
CycloFactorization hyper_factorization(const HypergeomSpec& h, long n);

/// Factorization of a non-zero Laurent polynomial in the decomposable
/// class, by trial division; throws not_decomposable when a non-trivial
/// remainder survives.
CycloFactorization factor_cyclotomic(const LaurentPoly& poly);

/// Expands sign * q^q_exp * prod phi_b^{v_b}; requires all v_b >= 0.
LaurentPoly reconstruct(const CycloFactorization& f);

/// Numerator / denominator expansion of a factorization with mixed-sign
/// exponents; both parts have non-negative exponents only.
std::pair<LaurentPoly, LaurentPoly> reconstruct_ratio(const CycloFactorization& f);

/// The Gaussian binomial [m k]_q, computed as the cyclotomic
/// factorization of (q;q)_m / ((q;q)_k (q;q)_{m-k}) and expanded.
LaurentPoly gaussian_binomial(long m, long k);

} // namespace qcyclo
