#pragma once

#include "qcyclo/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qcyclo {

/// Dense integer-coefficient Laurent polynomial.  Stored coefficients are
/// trimmed so the first and last are non-zero; the zero polynomial is the
/// empty coefficient vector.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(std::vector<Int> coeffs, long min_exp);

    static LaurentPoly zero() { return {}; }
    static LaurentPoly one() { return monomial(1, 0); }
    static LaurentPoly monomial(const Int& coeff, long exp);
    /// 1 - q^a for a != 0 (the zero polynomial for a == 0).
    static LaurentPoly one_minus_q_pow(long a);

    bool is_zero() const { return coeffs_.empty(); }
    long min_exp() const { return min_; }
    long max_exp() const { return min_ + static_cast<long>(coeffs_.size()) - 1; }
    /// Coefficient of q^e (zero outside the stored range).
    const Int& coeff(long e) const;
    const std::vector<Int>& coeffs() const { return coeffs_; }

    LaurentPoly operator-() const;
    LaurentPoly shifted(long e) const; // multiply by q^e
    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    LaurentPoly& operator*=(const LaurentPoly& o);

    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

    /// Exact quotient a / b over Z[q^-1, q], or nullopt when the division
    /// leaves a remainder (or a non-integral quotient coefficient).
    static std::optional<LaurentPoly> try_divide(const LaurentPoly& a, const LaurentPoly& b);

    /// Sum of the coefficients, i.e. the value at q = 1.
    Int value_at_one() const;

    std::string str() const;

private:
    void trim();

    std::vector<Int> coeffs_; // coeffs_[i] is the coefficient of q^(min_+i)
    long min_ = 0;
};

/// Balanced product of a list of polynomials.
LaurentPoly product_tree(std::vector<LaurentPoly> factors);

} // namespace qcyclo
