#include "qcyclo/integrality.hpp"

#include "qcyclo/errors.hpp"
#include "qcyclo/stepfun.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace qcyclo {

namespace {

bool is_nonpositive_integer(const Rational& x) {
    return x.is_integer() && x.sign() <= 0;
}

void check_not_degenerate(const HypergeomSpec& h) {
    if (!h.defined_nonneg())
        throw degenerate_parameter("some beta_j lies in Z_{<=0}: sequence undefined");
    if (!h.nonvanishing())
        throw degenerate_parameter("some alpha_i lies in Z_{<=0}: sequence eventually zero");
}

// Xi(b, .) >= 0 for every b in {1, ..., d}; records one first-crossing
// witness per failing b.
void check_xi_nonnegative(const HypergeomSpec& h, Verdict& v) {
    long d = h.modulus();
    for (long b = 1; b <= d; ++b) {
        JumpTable table = xi_jump_table(b, h);
        if (auto neg = table.first_negative()) {
            v.decision = false;
            v.witnesses.push_back({b, neg->first, neg->second});
        }
    }
}

} // namespace

Verdict decide_laurent_integral(const HypergeomSpec& h) {
    check_not_degenerate(h);
    Verdict v;
    check_xi_nonnegative(h, v);
    return v;
}

Verdict decide_q_integral(const HypergeomSpec& h) {
    Verdict v = decide_laurent_integral(h);
    long s = hyper_q_valuation_slope(h);
    v.slope = s;
    v.slope_ok = s >= 0;
    if (!v.slope_ok)
        v.decision = false;
    v.general_s = std::any_of(h.num().begin(), h.num().end(),
                              [](const PochParams& p) { return p.s < 0; });
    return v;
}

Verdict decide_negative_q_integral(const HypergeomSpec& h) {
    return decide_laurent_integral(h.reflected());
}

Verdict decide_bidirectional(const HypergeomSpec& h) {
    check_not_degenerate(h);
    Verdict v;
    check_xi_nonnegative(h, v);
    long d = h.modulus();
    for (long b = 1; b <= d; ++b) {
        XiContext ctx = xi_context(b, h);
        Int slope_b = 0;
        for (const auto& w : ctx.num)
            if (w.active)
                slope_b += w.c;
        for (const auto& w : ctx.den)
            if (w.active)
                slope_b -= w.c;
        v.period_slopes.emplace_back(b, slope_b);
        if (slope_b != 0) {
            v.slope_ok = false;
            v.decision = false;
        }
    }
    return v;
}

Verdict decide_n_integral_classical(const std::vector<Rational>& alpha,
                                    const std::vector<Rational>& beta) {
    for (const auto& x : alpha)
        if (is_nonpositive_integer(x))
            throw degenerate_parameter("parameter " + x.str() + " lies in Z_{<=0}");
    for (const auto& x : beta)
        if (is_nonpositive_integer(x))
            throw degenerate_parameter("parameter " + x.str() + " lies in Z_{<=0}");
    Int dz = 1;
    for (const auto& x : alpha)
        mpz_lcm(dz.get_mpz_t(), dz.get_mpz_t(), x.den().get_mpz_t());
    for (const auto& x : beta)
        mpz_lcm(dz.get_mpz_t(), dz.get_mpz_t(), x.den().get_mpz_t());
    if (!dz.fits_slong_p())
        throw error("lcm of denominators does not fit a machine integer");
    long d = dz.get_si();

    struct ChristolCmp {
        bool operator()(const Rational& x, const Rational& y) const { return christol_less(x, y); }
    };
    Verdict v;
    for (long a = 1; a <= d; ++a) {
        if (std::gcd(a, d) != 1)
            continue;
        std::map<Rational, Int, ChristolCmp> net;
        for (const auto& x : alpha)
            net[Rational(a) * x] += 1;
        for (const auto& x : beta)
            net[Rational(a) * x] -= 1;
        Int running = 0;
        for (const auto& [abscissa, amplitude] : net) {
            running += amplitude;
            if (running < 0) {
                v.decision = false;
                v.witnesses.push_back({a, abscissa, running});
                break;
            }
        }
    }
    return v;
}

Verdict decide_factorial_ratio(const std::vector<long>& e, const std::vector<long>& f) {
    for (long x : e)
        if (x < 1)
            throw std::invalid_argument("factorial parameters must be positive");
    for (long x : f)
        if (x < 1)
            throw std::invalid_argument("factorial parameters must be positive");
    std::set<Rational> abscissas;
    for (long x : e)
        for (long k = 1; k <= x; ++k)
            abscissas.insert(Rational(k, x));
    for (long x : f)
        for (long k = 1; k <= x; ++k)
            abscissas.insert(Rational(k, x));
    Verdict v;
    for (const auto& x : abscissas) {
        Int value = classical_landau(e, f, x);
        if (value < 0) {
            v.decision = false;
            v.witnesses.push_back({0, x, value});
        }
    }
    return v;
}

HypergeomSpec factorial_ratio_spec(const std::vector<long>& e, const std::vector<long>& f) {
    std::vector<PochParams> num, den;
    for (long x : e)
        for (long l = 1; l <= x; ++l)
            num.emplace_back(l, x);
    for (long x : f)
        for (long l = 1; l <= x; ++l)
            den.emplace_back(l, x);
    return HypergeomSpec(std::move(num), std::move(den));
}

long witness_search_bound(const HypergeomSpec& h) {
    std::vector<PochParams> all(h.num());
    all.insert(all.end(), h.den().begin(), h.den().end());
    long d = h.modulus();
    long bound = 1;
    std::vector<Int> floors;
    floors.reserve(all.size());
    for (const auto& p : all)
        floors.push_back(floor(Rational(1) - p.alpha()));
    for (std::size_t i = 0; i < all.size(); ++i) {
        for (std::size_t j = 0; j < all.size(); ++j) {
            long pair_lcm = std::lcm(std::abs(all[i].s), std::abs(all[j].s));
            Int diff = abs(floors[i] - floors[j]);
            Int candidate = std::max<Int>(
                {Int(std::abs(all[i].r)), Int(std::abs(all[j].r)), Int(pair_lcm) * diff,
                 Int(2) * d * (diff + 1)});
            if (!candidate.fits_slong_p())
                throw error("witness search bound does not fit a machine integer");
            bound = std::max(bound, candidate.get_si());
        }
    }
    return bound;
}

std::optional<std::pair<long, long>> lift_witness(const HypergeomSpec& h, const Witness& w) {
    long d = h.modulus();
    long limit = witness_search_bound(h) + 3 * d;
    for (long b = w.b; b <= limit; b += d) {
        JumpTable table = delta_jump_table(b, h);
        auto neg = table.first_negative();
        if (!neg)
            continue;
        Int n = ceil(Rational(b) * neg->first);
        if (!n.fits_slong_p())
            continue;
        long nn = n.get_si();
        if (nn < 0)
            continue;
        if (hyper_phi_valuation(b, h, nn) < 0)
            return std::make_pair(b, nn);
    }
    return std::nullopt;
}

} // namespace qcyclo
