#pragma once

#include <vector>

#include "cayleynut/exact.hpp"

namespace cayleynut {

// Dense polynomial over Z; coefficient i belongs to x^i. The zero polynomial
// is the empty vector; nonzero polynomials carry a nonzero leading coefficient.
using IntPolynomial = std::vector<Integer>;

// Drops trailing zero coefficients.
IntPolynomial poly_trim(IntPolynomial p);

// Degree, with deg 0 = -1.
int poly_degree(const IntPolynomial& p);

// gcd of the coefficients, nonnegative; 0 for the zero polynomial.
Integer poly_content(const IntPolynomial& p);

// p divided by its content, sign fixed so the leading coefficient is positive.
IntPolynomial poly_primitive_part(IntPolynomial p);

// Primitive gcd over Z[x] via the primitive Euclidean algorithm with
// pseudo-division. Result is primitive with positive leading coefficient;
// gcd(0, 0) = 0.
IntPolynomial poly_gcd(IntPolynomial a, IntPolynomial b);

// x^n - 1.
IntPolynomial poly_xn_minus_1(int n);

}  // namespace cayleynut
