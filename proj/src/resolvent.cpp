#include "sst/resolvent.hpp"

#include "sst/charpoly.hpp"
#include "sst/errors.hpp"
#include "sst/factor.hpp"

namespace sst {

RatFun psi(const HermitianReduction& red, const std::vector<int>& S, const std::vector<int>& T) {
  if (S.size() != T.size()) throw InputError("|S| != |T|");
  const auto n = static_cast<int>(red.size());
  for (std::size_t j = 0; j < S.size(); ++j) {
    if (S[j] < 0 || S[j] >= n || T[j] < 0 || T[j] >= n) throw InputError("clone index out of range");
    if (red.delta_sq[S[j]] != red.delta_sq[T[j]]) throw InputError("paired clones have different norms");
  }
  RatPoly num;
  for (std::size_t j = 0; j < S.size(); ++j) num += adjugate_entry(red.h_rat, S[j], T[j]);
  return RatFun(num, charpoly(red.h_rat));
}

std::vector<RatPoly> pole_support(const RatFun& f) { return irreducible_factors(f.den()); }

}  // namespace sst
