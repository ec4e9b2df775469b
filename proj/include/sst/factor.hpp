#pragma once

#include <utility>
#include <vector>

#include "sst/poly.hpp"

namespace sst {

/// Monic Q-irreducible factors with multiplicities, sorted by poly_less.
std::vector<std::pair<RatPoly, int>> factor(const RatPoly& p);

/// Distinct monic Q-irreducible factors, sorted by poly_less.
std::vector<RatPoly> irreducible_factors(const RatPoly& p);

}  // namespace sst
