#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "stanley/ideal.hpp"

namespace stanley {

/// Integer polynomial in the ring variables, exact.
using Polynomial = std::map<Monomial, std::int64_t>;

void add_term(Polynomial& p, const Monomial& m, std::int64_t coeff);
Polynomial operator*(const Polynomial& a, const Polynomial& b);
Polynomial operator-(const Polynomial& a, const Polynomial& b);

/// Numerator K(S/I; x) of the multigraded Hilbert series
/// H(S/I; x) = K(S/I; x) / prod_i (1 - x_i).
Polynomial hilbert_numerator(const MonomialIdeal& ideal);

/// Coefficients of the standard-graded numerator (index = degree).
std::vector<std::int64_t> univariate(const Polynomial& p);

/// e(S/I) from the Hilbert series. Throws on the unit ideal.
std::int64_t multiplicity(const MonomialIdeal& ideal);

}  // namespace stanley
