#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sst/poly.hpp"
#include "sst/reduction.hpp"

namespace sst {

/// Exact split of the eigenvalue support into the classes where the S and T
/// components agree (plus) or are opposite (minus).
struct SupportSplit {
  std::vector<RatPoly> support_factors;
  std::vector<RatPoly> plus_factors;
  std::vector<RatPoly> minus_factors;
};

bool cospectral(const HermitianReduction& red, const std::vector<int>& S, const std::vector<int>& T);

/// Cospectral and every support factor is a pole of exactly one of psi_S -+ psi_{S,T}.
std::optional<SupportSplit> strong_cospectral_exact(const HermitianReduction& red, const std::vector<int>& S,
                                                    const std::vector<int>& T);

enum class SplitStatus { Split, NotStrong, Indeterminate };

struct NumericSplit {
  SplitStatus status = SplitStatus::NotStrong;
  std::vector<double> plus;   // eigenvalues with E[cl(a)] restricted to W equal to +E[cl(b)]
  std::vector<double> minus;  // ... equal to -E[cl(b)]
  std::string detail;
};

/// Strong cospectrality of x_a(W) and x_b(W) read off the blow-up's eigenprojections.
/// W is given over sigma_a and carried to b positionally unless a map is supplied.
NumericSplit strong_cospectral_numeric(const BlowUp& blowup, const std::vector<RatVector>& W, double tol = 1e-7,
                                       const std::vector<int>& map = {});

/// Eigenvalues of H with ||E_lambda B_S|| > tol.
std::vector<double> numeric_support(const HermitianReduction& red, const std::vector<int>& S, double tol = 1e-7);

/// Real roots of the support factors, ascending.
std::vector<double> support_roots(const std::vector<RatPoly>& factors);

struct TwinTransfer {
  int time;                               // minimal integer step
  int residue;                            // time mod 4: 0 for case (i), 2 for case (ii)
  std::optional<Rational> c_squared;      // set when the support is {0, +-sqrt(2/delta)}
  bool exact_kernel;                      // W lies in ker [A1; A2^T]
  std::vector<double> support;            // Lambda_{a(W)} without 0
};

/// Twin marked vertices with C_a = C_b and Grover coins elsewhere. Returns the transfer
/// time class when x_a(W) and x_b(W) are strongly cospectral and the support admits an
/// integer time; nullopt otherwise. Throws InputError when a, b are not twins or the coins differ.
std::optional<TwinTransfer> twin_transfer_check(const CoinAssignment& coins, int a, int b,
                                                const std::vector<RatVector>& W, double tol = 1e-9);

}  // namespace sst
