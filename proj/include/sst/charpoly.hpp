#pragma once

#include <vector>

#include "sst/intpoly.hpp"
#include "sst/poly.hpp"

namespace sst {

/// det(xI - M) by reduction to Hessenberg form over Q.
RatPoly charpoly(const RatMatrix& m);

using IntPolyMatrix = std::vector<std::vector<zx::IntPoly>>;

/// Fraction-free Bareiss determinant over Z[x] with row pivoting.
zx::IntPoly bareiss_det(IntPolyMatrix m);

/// Entry (s, t) of adj(xI - M): (-1)^(s+t) det of xI - M without row t and column s.
RatPoly adjugate_entry(const RatMatrix& m, std::size_t s, std::size_t t);

}  // namespace sst
