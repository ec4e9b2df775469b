#include "sst/charpoly.hpp"

#include <utility>

#include "sst/errors.hpp"

namespace sst {

RatPoly charpoly(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw InputError("charpoly of a non-square matrix");
  const std::size_t n = m.rows();
  RatMatrix h = m;
  for (std::size_t k = 1; k + 1 < n; ++k) {
    std::size_t piv = k;
    while (piv < n && h(piv, k - 1) == 0) ++piv;
    if (piv == n) continue;
    if (piv != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(h(piv, j), h(k, j));
      for (std::size_t i = 0; i < n; ++i) std::swap(h(i, piv), h(i, k));
    }
    const Rational inv = 1 / h(k, k - 1);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (h(i, k - 1) == 0) continue;
      const Rational u = h(i, k - 1) * inv;
      for (std::size_t j = 0; j < n; ++j) h(i, j) -= u * h(k, j);
      for (std::size_t r = 0; r < n; ++r) h(r, k) += u * h(r, i);
    }
  }
  std::vector<RatPoly> p(n + 1);
  p[0] = RatPoly::constant(1);
  for (std::size_t k = 1; k <= n; ++k) {
    p[k] = RatPoly({-h(k - 1, k - 1), 1}) * p[k - 1];
    Rational t = 1;
    for (std::size_t i = 1; i < k; ++i) {
      t *= h(k - i, k - i - 1);
      if (t == 0) break;
      p[k] -= p[k - i - 1] * Rational(t * h(k - i - 1, k - 1));
    }
  }
  return p[n];
}

zx::IntPoly bareiss_det(IntPolyMatrix m) {
  const std::size_t n = m.size();
  if (n == 0) return {mpz_class(1)};
  bool negate = false;
  zx::IntPoly prev = {mpz_class(1)};
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].empty()) {
      std::size_t r = k + 1;
      while (r < n && m[r][k].empty()) ++r;
      if (r == n) return {};
      std::swap(m[r], m[k]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        zx::IntPoly v = zx::sub(zx::mul(m[i][j], m[k][k]), zx::mul(m[i][k], m[k][j]));
        if (!zx::divides(prev, v, &m[i][j])) throw InvariantError("Bareiss division was not exact");
      }
      m[i][k].clear();
    }
    prev = m[k][k];
  }
  zx::IntPoly d = m[n - 1][n - 1];
  return negate ? zx::scale(d, -1) : d;
}

RatPoly adjugate_entry(const RatMatrix& m, std::size_t s, std::size_t t) {
  const std::size_t n = m.rows();
  if (m.cols() != n || s >= n || t >= n) throw InputError("adjugate index out of range");
  IntPolyMatrix minor;
  minor.reserve(n - 1);
  mpz_class scale = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (i == t) continue;
    mpz_class l = 1;
    for (std::size_t j = 0; j < n; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    scale *= l;
    std::vector<zx::IntPoly> row;
    row.reserve(n - 1);
    for (std::size_t j = 0; j < n; ++j) {
      if (j == s) continue;
      zx::IntPoly e = {-m(i, j).get_num() * (l / m(i, j).get_den())};
      if (i == j) e.push_back(l);
      zx::trim(e);
      row.push_back(std::move(e));
    }
    minor.push_back(std::move(row));
  }
  RatPoly d = RatPoly::from_int(bareiss_det(std::move(minor))) * Rational(mpz_class(1), scale);
  return (s + t) % 2 ? -d : d;
}

}  // namespace sst
