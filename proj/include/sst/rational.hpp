#pragma once

#include <gmpxx.h>

#include <Eigen/Dense>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace sst {

using Rational = mpq_class;
using RatVector = std::vector<Rational>;

/// Parses "p/q", "p" or "-p/q". Throws InputError on anything else.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& value);

Rational dot(const RatVector& lhs, const RatVector& rhs);
bool is_zero(const RatVector& v);
/// Scales v by a positive rational so that it becomes a primitive integer vector.
RatVector primitive(const RatVector& v);
/// v / |v| in doubles, scaled exactly first so huge entries do not overflow.
std::vector<double> unit_vector(const RatVector& v);

/// Dense row-major matrix over the rationals.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols);

  static RatMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  RatMatrix operator+(const RatMatrix& rhs) const;
  RatMatrix operator-(const RatMatrix& rhs) const;
  RatMatrix operator*(const RatMatrix& rhs) const;
  RatMatrix operator*(const Rational& scalar) const;
  RatVector operator*(const RatVector& v) const;
  bool operator==(const RatMatrix& rhs) const = default;

  RatMatrix transpose() const;
  RatVector column(std::size_t j) const;
  bool is_zero() const;
  bool is_symmetric() const;

  Eigen::MatrixXd to_double() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Exact rank by fraction-free elimination.
std::size_t rank(const RatMatrix& m);
/// Basis of the right kernel {v : m v = 0}, as primitive integer vectors.
std::vector<RatVector> kernel_basis(const RatMatrix& m);

}  // namespace sst
