#pragma once

#include <gmpxx.h>

#include <vector>

namespace sst::zx {

/// Dense integer polynomial, coefficients low to high, no trailing zeros.
using IntPoly = std::vector<mpz_class>;

void trim(IntPoly& p);
int degree(const IntPoly& p);
mpz_class content(const IntPoly& p);
/// p / content(p) with a positive leading coefficient.
IntPoly primitive_part(const IntPoly& p);

IntPoly add(const IntPoly& a, const IntPoly& b);
IntPoly sub(const IntPoly& a, const IntPoly& b);
IntPoly mul(const IntPoly& a, const IntPoly& b);
IntPoly scale(const IntPoly& a, const mpz_class& c);
/// Exact coefficientwise division; the caller guarantees divisibility.
IntPoly divexact(const IntPoly& a, const mpz_class& c);
/// True iff b divides a in Z[x]; stores the quotient when it does.
bool divides(const IntPoly& b, const IntPoly& a, IntPoly* quotient = nullptr);
/// lc(b)^(deg a - deg b + 1) a = q b + r.
IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b);
/// Subresultant PRS gcd, primitive with positive leading coefficient.
IntPoly gcd(const IntPoly& a, const IntPoly& b);

}  // namespace sst::zx
