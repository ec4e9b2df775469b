#pragma once

#include <vector>

#include "sst/poly.hpp"
#include "sst/reduction.hpp"

namespace sst {

/// psi_{S,T}(x) = sum_j (xI - H)^-1 [s_j, t_j], exact and reduced.
/// Throws InputError on a size mismatch or when paired clones have different norms.
RatFun psi(const HermitianReduction& red, const std::vector<int>& S, const std::vector<int>& T);
inline RatFun psi(const HermitianReduction& red, const std::vector<int>& S) { return psi(red, S, S); }

/// Q-irreducible monic factors of the denominator.
std::vector<RatPoly> pole_support(const RatFun& f);

}  // namespace sst
