#pragma once

#include "qcyclo/poch.hpp"
#include "qcyclo/rational.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace qcyclo {

/// Christol order: x <= y iff <x> < <y>, or <x> = <y> and x >= y (the
/// standard order reversed on ties of the adjusted fractional part).
bool christol_leq(const Rational& x, const Rational& y);
bool christol_less(const Rational& x, const Rational& y);

/// The classical Landau step function sum floor(e_i x) - sum floor(f_j x).
Int classical_landau(const std::vector<long>& e, const std::vector<long>& f, const Rational& x);

/// Christol's step function xi(a, x) = #{i : a*alpha_i <= x} - #{j : a*beta_j <= x}
/// under the Christol order; requires gcd(a, d) = 1 for d the lcm of the
/// parameter denominators.
Int classical_xi(const std::vector<Rational>& alpha, const std::vector<Rational>& beta, long a,
                 const Rational& x);

enum class JumpOrder { standard, christol };

struct Jump {
    Rational abscissa;
    Int amplitude; // net multiplicity, never zero

    friend bool operator==(const Jump&, const Jump&) = default;
};

/// A step function represented by its jumps, sorted strictly increasing
/// under the declared order, plus a period slope for Delta-type tables
/// (Delta_b(x+k) = Delta_b(x) + k*period_slope).  The raw multisets keep
/// the individual jump abscissas before merging, for diagnostics.
struct JumpTable {
    JumpOrder order = JumpOrder::standard;
    std::vector<Jump> jumps;
    Int period_slope = 0;
    std::vector<Rational> raw_plus;
    std::vector<Rational> raw_minus;

    /// Prefix-sum evaluation.  Standard tables hold abscissas in (0, 1]
    /// and reduce x by the period law; Christol tables sum the
    /// amplitudes of all jumps <=_christol x.
    Int value_at(const Rational& x) const;

    /// Minimum of all prefix sums (including the empty prefix, 0) and
    /// the first jump abscissa attaining it; nullopt witness when only
    /// the empty prefix attains the minimum.  For standard tables this
    /// is the minimum over one period [0, 1].
    std::pair<Int, std::optional<Rational>> minimum() const;

    /// First abscissa at which the running prefix sum turns negative,
    /// with the value there.
    std::optional<std::pair<Rational, Int>> first_negative() const;

    /// All values taken: {0} plus every prefix sum, deduplicated and sorted.
    std::vector<Int> value_set() const;

    friend bool operator==(const JumpTable&, const JumpTable&) = default;
};

/// Per-factor witnesses at a given b: c = gcd(r, s, b); the factor is
/// active (contributes jumps) iff gcd(s, b) = c; for active factors e is
/// the least positive solution of b*e == c (mod s).
struct FactorWitness {
    long c = 1;
    bool active = false;
    long e = 0;
};

/// Everything needed to build the step function Xi(b, .): per-factor
/// witnesses, the greatest divisor b~ of b coprime to d, and the unique
/// a in {1, ..., d} with a*b~ == 1 (mod d).
struct XiContext {
    long b = 1;
    long d = 1;
    std::vector<FactorWitness> num;
    std::vector<FactorWitness> den;
    long b_tilde = 1;
    long a = 1;
};

/// Builds the witness context for b in {1, ..., d}.
XiContext xi_context(long b, const HypergeomSpec& h);

/// The jump table of Delta_b on (0, 1]: a jump at
/// (D_{b/c}(alpha) + k)/c + floor(1-alpha)/b for each active factor and
/// each k in {0, ..., c-1}, positive for numerator factors and negative
/// for denominator ones.  Exact for every b >= 1.
JumpTable delta_jump_table(long b, const HypergeomSpec& h);

/// The jump table of Xi(b, .), Christol-ordered: a jump at
/// (<e*alpha> + k)/c - floor(1 - a*alpha) for each active factor.
/// Requires every ratio outside Z_{<=0} (degenerate_parameter otherwise)
/// and b in {1, ..., d}.
JumpTable xi_jump_table(long b, const HypergeomSpec& h);
JumpTable xi_jump_table(const XiContext& ctx, const HypergeomSpec& h);

/// Minimum of Xi(b, .) over R with a witness abscissa (see JumpTable::minimum).
std::pair<Int, std::optional<Rational>> xi_min(long b, const HypergeomSpec& h);

/// Largest gcd(r, s) over all parameter pairs (1 for the empty spec).
long frak_a(const HypergeomSpec& h);

/// Largest n_alpha over all ratios (at least 1).
long frak_n_bound(const HypergeomSpec& h);

/// The threshold frak_a * frak_n_bound past which the simplified
/// evaluation below is valid.
long frak_b(const HypergeomSpec& h);

/// Alternate evaluation of Delta_b(x) avoiding Dwork maps, valid for
/// b >= frak_b(h): per active factor floor(c*x - <e*alpha>* - c*floor(1-alpha)/b) + 1.
Int delta_eval_simplified(long b, const HypergeomSpec& h, const Rational& x);

} // namespace qcyclo
