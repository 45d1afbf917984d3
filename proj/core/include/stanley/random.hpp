#pragma once

#include <cstdint>
#include <string>

#include "stanley/ideal.hpp"

// Seeded instance generators. Only raw std::mt19937_64 output is used, so a
// seed yields the same instance on every platform.
namespace stanley::random {

/// Proper nonzero squarefree ideal in x1..xn: either random generators of
/// degree 1-3 or the Stanley-Reisner ideal of random edges and triangles.
MonomialIdeal squarefree(std::uint64_t seed, int n);
/// Monomial complete intersection in x1..xn: disjoint supports, exponents 1-3.
MonomialIdeal complete_intersection(std::uint64_t seed, int n);
/// Cohen-Macaulay squarefree ideal of height 2 in x1..xn (n >= 2): the
/// intersection of (x_i, x_j) over the edges of a random graph whose complex
/// passes Reisner's test. Rejection sampled.
MonomialIdeal codim2_cm(std::uint64_t seed, int n);

/// model in {"squarefree", "ci", "codim2-cm"}.
MonomialIdeal generate(const std::string& model, std::uint64_t seed, int n);

}  // namespace stanley::random
