#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qcyclo {

// Base class for every domain error raised by the library.  The CLI maps
// these to exit code 3.
class error : public std::runtime_error {
public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

// gcd(d(alpha), b) != 1: alpha lies outside the localization S_b^{-1}Z.
class not_in_localization : public error {
public:
    using error::error;
};

// (q^r;q^s)_n has a vanishing factor in its denominator form.
class undefined_pochhammer : public error {
public:
    using error::error;
};

// The symbol itself is zero, so its valuation is +infinity rather than an
// integer; callers wanting +infinity semantics branch on this.
class zero_pochhammer : public error {
public:
    using error::error;
};

// A ratio alpha_i or beta_j lies in Z_{<=0} where the step functions
// require otherwise.
class degenerate_parameter : public error {
public:
    using error::error;
};

// Multiplier not coprime to the common denominator (or not a valid
// inverse witness).
class invalid_multiplier : public error {
public:
    using error::error;
};

// A polynomial outside the span of +-q^m and cyclotomic factors was fed
// to the factorizer.
class not_decomposable : public error {
public:
    using error::error;
};

// Pochhammer modulus s == 0.
class zero_modulus : public error {
public:
    using error::error;
};

class parse_error : public error {
public:
    parse_error(const std::string& what, std::size_t position)
        : error(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

} // namespace qcyclo
