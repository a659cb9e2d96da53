#pragma once

#include "qcyclo/poch.hpp"
#include "qcyclo/rational.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace qcyclo {

/// A point where a step function turned negative: for the q-criteria b
/// indexes Xi(b, .); for the classical criterion it is the multiplier a;
/// for factorial ratios it is 0 (unused).
struct Witness {
    long b = 0;
    Rational abscissa;
    Int value;

    friend bool operator==(const Witness&, const Witness&) = default;
};

/// Outcome of a decision procedure.  decision is false exactly when
/// witnesses is non-empty or the slope check failed; witnesses record the
/// first negative crossing per failing index.
struct Verdict {
    bool decision = true;
    std::vector<Witness> witnesses;
    std::optional<long> slope;                    // v_q slope s, where applicable
    bool slope_ok = true;
    std::vector<std::pair<long, Int>> period_slopes; // per-b Delta_b(1), bidirectional mode
    bool general_s = false;                       // some s_i < 0: slope+xi route
};

/// q-integrality of (Q(q;n))_{n>=0}: Xi(b, .) >= 0 for every b in
/// {1, ..., d} and slope s >= 0.  Throws degenerate_parameter when some
/// beta_j (undefined sequence) or alpha_i (eventually zero) lies in Z_{<=0}.
Verdict decide_q_integral(const HypergeomSpec& h);

/// Existence of C(q) with C(q)^n Q(q;n) in Z[q^-1, q] for all n >= 0:
/// the same Xi criterion without the slope condition.
Verdict decide_laurent_integral(const HypergeomSpec& h);

/// The criterion for the sequence n <= 0, via the reflection
/// Q(q;n) = Q'(q;-n) with numerator and denominator swapped and
/// (r, s) -> (r - s, -s).
Verdict decide_negative_q_integral(const HypergeomSpec& h);

/// Q(q;n) in Z[q^-1, q] for every n in Z: Xi(b, .) >= 0 and
/// Delta_b(1) = 0 for every b in {1, ..., d}.
Verdict decide_bidirectional(const HypergeomSpec& h);

/// Classical N-integrality of the hypergeometric sequence with rational
/// parameters: xi(a, .) >= 0 for every a in {1, ..., d} coprime to d.
Verdict decide_n_integral_classical(const std::vector<Rational>& alpha,
                                    const std::vector<Rational>& beta);

/// q-integrality of the q-factorial ratio with positive integer
/// parameters e, f: the classical Landau function is non-negative at
/// every jump abscissa in (0, 1].
Verdict decide_factorial_ratio(const std::vector<long>& e, const std::vector<long>& f);

/// The Pochhammer expansion of the q-factorial ratio: numerator pairs
/// (l, e_i) for 1 <= l <= e_i, denominator pairs (l, f_j).  When
/// sum e_i = sum f_j the term equals Q_{e,f}(q;n) exactly.
HypergeomSpec factorial_ratio_spec(const std::vector<long>& e, const std::vector<long>& f);

/// Best-effort lifting of an Xi witness to a concrete (b, n) with
/// v_{phi_b}(Q(q;n)) < 0, scanning b == w.b (mod d) up to the
/// jump-ordering threshold plus 3d.  Diagnostics only; verdicts never
/// depend on it.
std::optional<std::pair<long, long>> lift_witness(const HypergeomSpec& h, const Witness& w);

/// The search bound used by lift_witness: the largest pairwise
/// jump-ordering threshold over all parameter pairs, at least
/// 2d * (max floor-difference + 1).
long witness_search_bound(const HypergeomSpec& h);

} // namespace qcyclo
