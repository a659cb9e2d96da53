#pragma once

#include "qcyclo/poch.hpp"
#include "qcyclo/rational.hpp"

#include <string>
#include <vector>

namespace qcyclo {

/// Parses a parameter vector "(r,s)(r,s)..." with optional whitespace;
/// "-" is the empty vector.  Pairs are taken verbatim, never reduced.
/// Throws parse_error (with position) on bad syntax and zero_modulus on
/// s = 0.
std::vector<PochParams> parse_pairs(const std::string& text);

/// Builds a HypergeomSpec from numerator and denominator pair lists.
HypergeomSpec parse_spec(const std::string& num_text, const std::string& den_text);

/// Parses "p/q" or "p".
Rational parse_rational(const std::string& text);

/// Parses a comma-separated list of rationals; "-" is empty.
std::vector<Rational> parse_rationals(const std::string& text);

/// Parses a comma-separated list of integers; "-" is empty.
std::vector<long> parse_integers(const std::string& text);

} // namespace qcyclo
