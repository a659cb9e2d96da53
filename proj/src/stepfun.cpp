#include "qcyclo/stepfun.hpp"

#include "qcyclo/dwork.hpp"
#include "qcyclo/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <stdexcept>

namespace qcyclo {

namespace {

void require_positive(long b) {
    if (b < 1)
        throw std::invalid_argument("b must be a positive integer");
}

bool is_nonpositive_integer(const Rational& x) {
    return x.is_integer() && x.sign() <= 0;
}

struct ChristolLess {
    bool operator()(const Rational& x, const Rational& y) const { return christol_less(x, y); }
};

struct StandardLess {
    bool operator()(const Rational& x, const Rational& y) const { return x < y; }
};

// Merge raw jump multisets into net amplitudes under the given strict order.
template <typename Less>
std::vector<Jump> merge_jumps(const std::vector<Rational>& plus, const std::vector<Rational>& minus) {
    std::map<Rational, Int, Less> net;
    for (const auto& g : plus)
        net[g] += 1;
    for (const auto& g : minus)
        net[g] -= 1;
    std::vector<Jump> out;
    out.reserve(net.size());
    for (auto& [abscissa, amplitude] : net)
        if (amplitude != 0)
            out.push_back({abscissa, amplitude});
    return out;
}

// Least positive e with b*e == c (mod |s|); requires gcd(s, b) == c.
long least_multiplier(long b, long c, long s) {
    long m = std::abs(s) / c;
    Int e = inverse_witness(b / c, Int(m));
    return e.get_si();
}

FactorWitness make_witness(long b, const PochParams& p) {
    FactorWitness w;
    w.c = std::gcd(std::gcd(std::abs(p.r), std::abs(p.s)), b);
    w.active = std::gcd(std::abs(p.s), b) == w.c;
    if (w.active)
        w.e = least_multiplier(b, w.c, p.s);
    return w;
}

} // namespace

bool christol_leq(const Rational& x, const Rational& y) {
    Rational ax = angle(x);
    Rational ay = angle(y);
    return ax < ay || (ax == ay && x >= y);
}

bool christol_less(const Rational& x, const Rational& y) {
    return x != y && christol_leq(x, y);
}

Int classical_landau(const std::vector<long>& e, const std::vector<long>& f, const Rational& x) {
    Int total = 0;
    for (long ei : e)
        total += floor(Rational(ei) * x);
    for (long fj : f)
        total -= floor(Rational(fj) * x);
    return total;
}

Int classical_xi(const std::vector<Rational>& alpha, const std::vector<Rational>& beta, long a,
                 const Rational& x) {
    Int d = 1;
    for (const auto& r : alpha)
        mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), r.den().get_mpz_t());
    for (const auto& r : beta)
        mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), r.den().get_mpz_t());
    Int g;
    Int aa(a);
    mpz_gcd(g.get_mpz_t(), aa.get_mpz_t(), d.get_mpz_t());
    if (a < 1 || g != 1)
        throw invalid_multiplier("multiplier " + std::to_string(a) + " not coprime to " + d.get_str());
    Int total = 0;
    for (const auto& r : alpha)
        if (christol_leq(Rational(a) * r, x))
            total += 1;
    for (const auto& r : beta)
        if (christol_leq(Rational(a) * r, x))
            total -= 1;
    return total;
}

Int JumpTable::value_at(const Rational& x) const {
    Int v = 0;
    if (order == JumpOrder::christol) {
        for (const auto& j : jumps)
            if (christol_leq(j.abscissa, x))
                v += j.amplitude;
        return v;
    }
    Int k = floor(x);
    Rational y = x - Rational(k);
    v = k * period_slope;
    for (const auto& j : jumps) {
        if (j.abscissa > y)
            break;
        v += j.amplitude;
    }
    return v;
}

std::pair<Int, std::optional<Rational>> JumpTable::minimum() const {
    Int best = 0;
    std::optional<Rational> witness;
    Int running = 0;
    for (const auto& j : jumps) {
        running += j.amplitude;
        if (running < best) {
            best = running;
            witness = j.abscissa;
        } else if (running == best && !witness.has_value()) {
            witness = j.abscissa;
        }
    }
    return {best, witness};
}

std::optional<std::pair<Rational, Int>> JumpTable::first_negative() const {
    Int running = 0;
    for (const auto& j : jumps) {
        running += j.amplitude;
        if (running < 0)
            return std::make_pair(j.abscissa, running);
    }
    return std::nullopt;
}

std::vector<Int> JumpTable::value_set() const {
    std::vector<Int> values{0};
    Int running = 0;
    for (const auto& j : jumps) {
        running += j.amplitude;
        values.push_back(running);
    }
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    return values;
}

XiContext xi_context(long b, const HypergeomSpec& h) {
    long d = h.modulus();
    if (b < 1 || b > d)
        throw std::invalid_argument("b must lie in {1, ..., d}");
    XiContext ctx;
    ctx.b = b;
    ctx.d = d;
    for (const auto& p : h.num())
        ctx.num.push_back(make_witness(b, p));
    for (const auto& p : h.den())
        ctx.den.push_back(make_witness(b, p));
    long t = b;
    for (long g = std::gcd(t, d); g > 1; g = std::gcd(t, d))
        t /= g;
    ctx.b_tilde = t;
    ctx.a = inverse_witness(ctx.b_tilde, Int(d)).get_si();
    return ctx;
}

JumpTable delta_jump_table(long b, const HypergeomSpec& h) {
    require_positive(b);
    JumpTable t;
    t.order = JumpOrder::standard;
    auto emit = [&](const std::vector<PochParams>& params, std::vector<Rational>& raw, long sign) {
        for (const auto& p : params) {
            FactorWitness w = make_witness(b, p);
            if (!w.active)
                continue;
            t.period_slope += sign * w.c;
            Rational alpha = p.alpha();
            Rational dw = dwork_map(b / w.c, alpha);
            Rational shift(floor(Rational(1) - alpha), Int(b));
            for (long k = 0; k < w.c; ++k)
                raw.push_back((dw + Rational(k)) / Rational(w.c) + shift);
        }
    };
    emit(h.num(), t.raw_plus, +1);
    emit(h.den(), t.raw_minus, -1);
    std::sort(t.raw_plus.begin(), t.raw_plus.end());
    std::sort(t.raw_minus.begin(), t.raw_minus.end());
    t.jumps = merge_jumps<StandardLess>(t.raw_plus, t.raw_minus);
    return t;
}

JumpTable xi_jump_table(const XiContext& ctx, const HypergeomSpec& h) {
    JumpTable t;
    t.order = JumpOrder::christol;
    auto emit = [&](const std::vector<PochParams>& params, const std::vector<FactorWitness>& ws,
                    std::vector<Rational>& raw) {
        for (std::size_t i = 0; i < params.size(); ++i) {
            Rational alpha = params[i].alpha();
            if (is_nonpositive_integer(alpha))
                throw degenerate_parameter("ratio " + alpha.str() + " lies in Z_{<=0}");
            const FactorWitness& w = ws[i];
            if (!w.active)
                continue;
            Rational head = angle(Rational(w.e) * alpha);
            Int shift = floor(Rational(1) - Rational(ctx.a) * alpha);
            for (long k = 0; k < w.c; ++k)
                raw.push_back((head + Rational(k)) / Rational(w.c) - Rational(shift));
        }
    };
    emit(h.num(), ctx.num, t.raw_plus);
    emit(h.den(), ctx.den, t.raw_minus);
    std::sort(t.raw_plus.begin(), t.raw_plus.end(), christol_less);
    std::sort(t.raw_minus.begin(), t.raw_minus.end(), christol_less);
    t.jumps = merge_jumps<ChristolLess>(t.raw_plus, t.raw_minus);
    return t;
}

JumpTable xi_jump_table(long b, const HypergeomSpec& h) {
    return xi_jump_table(xi_context(b, h), h);
}

std::pair<Int, std::optional<Rational>> xi_min(long b, const HypergeomSpec& h) {
    return xi_jump_table(b, h).minimum();
}

long frak_a(const HypergeomSpec& h) {
    long m = 1;
    for (const auto& p : h.num())
        m = std::max(m, std::gcd(std::abs(p.r), std::abs(p.s)));
    for (const auto& p : h.den())
        m = std::max(m, std::gcd(std::abs(p.r), std::abs(p.s)));
    return m;
}

long frak_n_bound(const HypergeomSpec& h) {
    Int m = 1;
    for (const auto& p : h.num())
        m = std::max(m, frak_n(p.alpha()));
    for (const auto& p : h.den())
        m = std::max(m, frak_n(p.alpha()));
    return m.get_si();
}

long frak_b(const HypergeomSpec& h) {
    return frak_a(h) * frak_n_bound(h);
}

Int delta_eval_simplified(long b, const HypergeomSpec& h, const Rational& x) {
    require_positive(b);
    Int total = 0;
    auto accumulate = [&](const std::vector<PochParams>& params, long sign) {
        for (const auto& p : params) {
            FactorWitness w = make_witness(b, p);
            if (!w.active)
                continue;
            Rational alpha = p.alpha();
            Rational head = angle_star(Rational(w.e) * alpha);
            Rational shift(floor(Rational(1) - alpha) * w.c, Int(b));
            total += sign * (floor(Rational(w.c) * x - head - shift) + 1);
        }
    };
    accumulate(h.num(), +1);
    accumulate(h.den(), -1);
    return total;
}

} // namespace qcyclo
