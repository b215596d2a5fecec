#pragma once

#include <complex>
#include <span>
#include <vector>

namespace linlaw {

/// Horner evaluation of sum_a coeffs[a] x^a.
std::complex<double> evaluate(std::span<const double> coeffs, std::complex<double> x);

/// Roots of sum_a coeffs[a] x^a as eigenvalues of its companion matrix.
///
/// Leading coefficients at or below 1e-14 of the largest one are treated as
/// zero, so the returned count is the effective degree. Roots are ordered
/// like spectrum(): modulus, real part, imaginary part, all descending.
std::vector<std::complex<double>> polynomial_roots(std::span<const double> coeffs);

void sort_by_modulus(std::vector<std::complex<double>>& values);

}  // namespace linlaw
