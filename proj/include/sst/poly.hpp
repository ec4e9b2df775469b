#pragma once

#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "sst/intpoly.hpp"
#include "sst/rational.hpp"

namespace sst {

/// Dense univariate polynomial over Q, coefficients low to high.
/// The zero polynomial has no coefficients and degree -1.
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::vector<Rational> coeffs);

  static RatPoly constant(const Rational& c);
  static RatPoly x();
  static RatPoly monomial(const Rational& c, int k);
  /// Product of (x - r) over the given roots.
  static RatPoly from_roots(const std::vector<Rational>& roots);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational coeff(int i) const;
  const Rational& leading() const;

  RatPoly operator+(const RatPoly& rhs) const;
  RatPoly operator-(const RatPoly& rhs) const;
  RatPoly operator-() const;
  RatPoly operator*(const RatPoly& rhs) const;
  RatPoly operator*(const Rational& c) const;
  RatPoly& operator+=(const RatPoly& rhs) { return *this = *this + rhs; }
  RatPoly& operator-=(const RatPoly& rhs) { return *this = *this - rhs; }
  RatPoly& operator*=(const RatPoly& rhs) { return *this = *this * rhs; }
  bool operator==(const RatPoly& rhs) const = default;

  RatPoly monic() const;
  RatPoly derivative() const;
  RatPoly pow(unsigned k) const;
  Rational eval(const Rational& x) const;
  std::complex<double> eval(std::complex<double> x) const;

  /// Integer primitive polynomial with the same roots (positive leading coefficient).
  zx::IntPoly to_primitive_int() const;
  static RatPoly from_int(const zx::IntPoly& p);

 private:
  std::vector<Rational> coeffs_;
};

/// Canonical ordering: by degree, then coefficients from the top down.
bool poly_less(const RatPoly& lhs, const RatPoly& rhs);

struct PolyDivision {
  RatPoly quotient;
  RatPoly remainder;
};
/// Throws InputError when dividing by the zero polynomial.
PolyDivision divrem(const RatPoly& a, const RatPoly& b);
/// Monic gcd; gcd(0, 0) = 0.
RatPoly gcd(const RatPoly& a, const RatPoly& b);
RatPoly lcm(const RatPoly& a, const RatPoly& b);
/// Exact quotient; throws InvariantError if b does not divide a.
RatPoly exact_div(const RatPoly& a, const RatPoly& b);
/// Positive content c with p = c * (primitive integer polynomial), up to sign of the leading term.
Rational content(const RatPoly& p);

/// Yun decomposition: p = lc * prod f_i^i with monic square-free, pairwise coprime f_i.
std::vector<std::pair<RatPoly, int>> squarefree_decomposition(const RatPoly& p);
RatPoly squarefree_part(const RatPoly& p);

/// "c0 c1 c2 ..." with exact rationals; "0" for the zero polynomial.
std::string to_string(const RatPoly& p);
/// Human-readable form such as "x^2 - 1/2".
std::string pretty(const RatPoly& p);
RatPoly parse_poly(const std::string& text);

/// Reduced rational function num/den with den monic and gcd(num, den) = 1.
class RatFun {
 public:
  RatFun() : den_(RatPoly::constant(1)) {}
  RatFun(RatPoly num, RatPoly den);

  const RatPoly& num() const { return num_; }
  const RatPoly& den() const { return den_; }

  RatFun operator+(const RatFun& rhs) const;
  RatFun operator-(const RatFun& rhs) const;
  RatFun operator*(const Rational& c) const;
  bool operator==(const RatFun& rhs) const = default;

  std::complex<double> eval(std::complex<double> x) const;

 private:
  RatPoly num_;
  RatPoly den_;
};

/// "num | den" using the coefficient serialization.
std::string to_string(const RatFun& f);

}  // namespace sst
