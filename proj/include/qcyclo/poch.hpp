#pragma once

#include "qcyclo/rational.hpp"

#include <vector>

namespace qcyclo {

/// Parameter pair (r, s) of the q-Pochhammer symbol (q^r;q^s)_n.
///
/// Kept exactly as given, never reduced: (1,2), (3,6) and (-1,-2) are
/// three distinct q-analogs of the same ratio 1/2.
struct PochParams {
    long r;
    long s;

    PochParams(long r_, long s_);

    Rational alpha() const { return Rational(r, s); }

    friend bool operator==(const PochParams&, const PochParams&) = default;
};

/// True iff (q^r;q^s)_n is well-defined (vacuous for n >= 0; for n < 0
/// requires r/s not in Z_{>0} or n > -r/s).
bool poch_defined(const PochParams& p, long n);

/// True iff (q^r;q^s)_n is defined and non-zero (for n >= 0: r/s not in
/// Z_{<=0} or n <= -r/s).
bool poch_nonzero(const PochParams& p, long n);

/// The step function delta_b(r, s, x).  With c = gcd(r, s, b), b' = b/c,
/// s' = s/c: zero unless gcd(s', b') = 1, in which case the value is
/// floor(c*x - gamma) + 1 where gamma = D_{b'}(r/s) + floor(1 - r/s)/b'
/// lies in (0, 1].
Int delta_small(long b, const PochParams& p, const Rational& x);

/// v_{phi_b}((q^r;q^s)_n) = delta_b(r, s, n/b).
///
/// Throws undefined_pochhammer / zero_pochhammer outside the domain.
Int poch_phi_valuation(long b, const PochParams& p, long n);

/// v_q((q^r;q^s)_n): the sum of the negative exponents r + i*s over
/// i in {0, ..., n-1}; negative n via (q^r;q^s)_n = 1/(q^{r-s};q^{-s})_{-n}.
Int poch_q_valuation(const PochParams& p, long n);

/// Two vectors of Pochhammer parameter pairs defining the term
/// Q(q;n) = prod (q^{r_i};q^{s_i})_n / prod (q^{t_j};q^{u_j})_n.
class HypergeomSpec {
public:
    HypergeomSpec() = default;
    HypergeomSpec(std::vector<PochParams> num, std::vector<PochParams> den);

    const std::vector<PochParams>& num() const { return num_; }
    const std::vector<PochParams>& den() const { return den_; }

    /// d_{r,t}: lcm of the |s_i| and |u_j| (1 for the empty spec).
    long modulus() const;

    /// All beta_j outside Z_{<=0}: the sequence n >= 0 is everywhere defined.
    bool defined_nonneg() const;
    /// All alpha_i outside Z_{<=0}: the sequence is not eventually zero.
    bool nonvanishing() const;
    /// All alpha_i outside Z_{>0}: the extension to n <= 0 is everywhere defined.
    bool defined_neg() const;

    /// The parameter vectors of Q(q;-n): numerator and denominator are
    /// swapped and every pair (r, s) becomes (r - s, -s).
    HypergeomSpec reflected() const;

    friend bool operator==(const HypergeomSpec&, const HypergeomSpec&) = default;

private:
    std::vector<PochParams> num_;
    std::vector<PochParams> den_;
};

/// v_{phi_b}(Q(q;n)) = Delta_b(n/b), the signed sum of per-factor delta values.
Int hyper_phi_valuation(long b, const HypergeomSpec& h, long n);

/// The integer slope s governing v_q(Q(q;n)) = s*binom(n,2) + O(n):
/// the sum of the negative s_i minus the sum of the negative u_j.
long hyper_q_valuation_slope(const HypergeomSpec& h);

/// Exact v_q(Q(q;n)) as a signed sum of per-factor q-valuations.
Int hyper_q_valuation(const HypergeomSpec& h, long n);

} // namespace qcyclo
