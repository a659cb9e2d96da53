#include "qcyclo/laurent.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>

namespace qcyclo {

namespace {
const Int kZero = 0;
}

LaurentPoly::LaurentPoly(std::vector<Int> coeffs, long min_exp)
    : coeffs_(std::move(coeffs)), min_(min_exp) {
    trim();
}

LaurentPoly LaurentPoly::monomial(const Int& coeff, long exp) {
    if (coeff == 0)
        return {};
    LaurentPoly p;
    p.coeffs_.push_back(coeff);
    p.min_ = exp;
    return p;
}

LaurentPoly LaurentPoly::one_minus_q_pow(long a) {
    if (a == 0)
        return {};
    std::vector<Int> c(static_cast<std::size_t>(std::abs(a)) + 1, Int(0));
    if (a > 0) {
        c.front() = 1;
        c.back() = -1;
        return LaurentPoly(std::move(c), 0);
    }
    c.front() = -1;
    c.back() = 1;
    return LaurentPoly(std::move(c), a);
}

const Int& LaurentPoly::coeff(long e) const {
    if (is_zero() || e < min_ || e > max_exp())
        return kZero;
    return coeffs_[static_cast<std::size_t>(e - min_)];
}

void LaurentPoly::trim() {
    std::size_t lo = 0;
    while (lo < coeffs_.size() && coeffs_[lo] == 0)
        ++lo;
    if (lo == coeffs_.size()) {
        coeffs_.clear();
        min_ = 0;
        return;
    }
    std::size_t hi = coeffs_.size();
    while (coeffs_[hi - 1] == 0)
        --hi;
    if (lo > 0 || hi < coeffs_.size()) {
        coeffs_ = std::vector<Int>(coeffs_.begin() + static_cast<long>(lo),
                                   coeffs_.begin() + static_cast<long>(hi));
        min_ += static_cast<long>(lo);
    }
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly out = *this;
    for (auto& c : out.coeffs_)
        c = -c;
    return out;
}

LaurentPoly LaurentPoly::shifted(long e) const {
    LaurentPoly out = *this;
    if (!out.is_zero())
        out.min_ += e;
    return out;
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero())
        return b;
    if (b.is_zero())
        return a;
    long lo = std::min(a.min_, b.min_);
    long hi = std::max(a.max_exp(), b.max_exp());
    std::vector<Int> c(static_cast<std::size_t>(hi - lo + 1), Int(0));
    for (long e = a.min_; e <= a.max_exp(); ++e)
        c[static_cast<std::size_t>(e - lo)] += a.coeff(e);
    for (long e = b.min_; e <= b.max_exp(); ++e)
        c[static_cast<std::size_t>(e - lo)] += b.coeff(e);
    return LaurentPoly(std::move(c), lo);
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
    return a + (-b);
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<Int> c(a.coeffs_.size() + b.coeffs_.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            if (b.coeffs_[j] == 0)
                continue;
            mpz_addmul(c[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
        }
    }
    return LaurentPoly(std::move(c), a.min_ + b.min_);
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
    *this = *this * o;
    return *this;
}

std::optional<LaurentPoly> LaurentPoly::try_divide(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero())
        throw std::invalid_argument("division by the zero polynomial");
    if (a.is_zero())
        return LaurentPoly::zero();
    long deg_a = static_cast<long>(a.coeffs_.size()) - 1;
    long deg_b = static_cast<long>(b.coeffs_.size()) - 1;
    if (deg_a < deg_b)
        return std::nullopt;
    std::vector<Int> rem = a.coeffs_;
    std::vector<Int> quot(static_cast<std::size_t>(deg_a - deg_b + 1), Int(0));
    const Int& lead = b.coeffs_.back();
    for (long k = deg_a - deg_b; k >= 0; --k) {
        Int& top = rem[static_cast<std::size_t>(k + deg_b)];
        if (top == 0)
            continue;
        Int q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
        if (r != 0)
            return std::nullopt;
        quot[static_cast<std::size_t>(k)] = q;
        for (long j = 0; j <= deg_b; ++j)
            mpz_submul(rem[static_cast<std::size_t>(k + j)].get_mpz_t(), q.get_mpz_t(),
                       b.coeffs_[static_cast<std::size_t>(j)].get_mpz_t());
    }
    for (const auto& c : rem)
        if (c != 0)
            return std::nullopt;
    return LaurentPoly(std::move(quot), a.min_ - b.min_);
}

Int LaurentPoly::value_at_one() const {
    Int total = 0;
    for (const auto& c : coeffs_)
        total += c;
    return total;
}

std::string LaurentPoly::str() const {
    if (is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (long e = max_exp(); e >= min_; --e) {
        const Int& c = coeff(e);
        if (c == 0)
            continue;
        if (!first)
            os << (c > 0 ? " + " : " - ");
        else if (c < 0)
            os << "-";
        first = false;
        Int a = abs(c);
        if (a != 1 || e == 0)
            os << a.get_str();
        if (e != 0) {
            if (a != 1)
                os << "*";
            os << "q";
            if (e != 1)
                os << "^" << e;
        }
    }
    return os.str();
}

LaurentPoly product_tree(std::vector<LaurentPoly> factors) {
    if (factors.empty())
        return LaurentPoly::one();
    std::deque<LaurentPoly> queue(factors.begin(), factors.end());
    while (queue.size() > 1) {
        LaurentPoly a = std::move(queue.front());
        queue.pop_front();
        LaurentPoly b = std::move(queue.front());
        queue.pop_front();
        queue.push_back(a * b);
    }
    return queue.front();
}

} // namespace qcyclo
