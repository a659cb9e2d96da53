#pragma once

#include "qcyclo/rational.hpp"

namespace qcyclo {

/// True iff alpha lies in the localization S_b^{-1}Z, i.e. gcd(d(alpha), b) = 1.
/// For b = 1 the localization is all of Q.
bool in_localization(long b, const Rational& alpha);

/// Least positive a with a*b == 1 (mod m); m >= 1 and gcd(b, m) = 1
/// required.  Returns 1 when m = 1.
Int inverse_witness(long b, const Int& m);

/// The generalized Dwork map: the unique theta in S_b^{-1}Z with
/// b*theta - alpha in {0, ..., b-1}.  Computed by the closed formula
/// theta = a*alpha + floor((alpha-1)/b - a*alpha) + 1 for any a with
/// a*b == 1 (mod d(alpha)); the value does not depend on the choice of a.
///
/// Throws not_in_localization when gcd(d(alpha), b) != 1.
Rational dwork_map(long b, const Rational& alpha);

/// Equivalent closed form <a*alpha> - floor(<a*alpha> - alpha/b) with an
/// explicit witness a.  Agrees with dwork_map everywhere; for
/// b >= n_alpha it collapses to <a*alpha> when alpha is not in Z_{<=0}
/// and to 0 otherwise.
///
/// Throws not_in_localization / invalid_multiplier on bad inputs.
Rational dwork_map_large_b(long b, const Rational& alpha, const Int& a);

} // namespace qcyclo
