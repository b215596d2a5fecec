#include "linlaw/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace linlaw {

std::complex<double> evaluate(std::span<const double> coeffs, std::complex<double> x) {
  std::complex<double> acc = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

void sort_by_modulus(std::vector<std::complex<double>>& values) {
  std::sort(values.begin(), values.end(), [](std::complex<double> a, std::complex<double> b) {
    const double ma = std::abs(a), mb = std::abs(b);
    if (ma != mb) return ma > mb;
    if (a.real() != b.real()) return a.real() > b.real();
    return a.imag() > b.imag();
  });
}

std::vector<std::complex<double>> polynomial_roots(std::span<const double> coeffs) {
  double scale = 0.0;
  for (double c : coeffs) scale = std::max(scale, std::abs(c));
  if (scale == 0.0) return {};

  std::size_t degree = coeffs.size() - 1;
  while (degree > 0 && std::abs(coeffs[degree]) <= 1e-14 * scale) --degree;
  if (degree == 0) return {};

  // Companion matrix of the monic polynomial: ones on the subdiagonal,
  // negated normalized coefficients in the last column.
  const Eigen::Index n = static_cast<Eigen::Index>(degree);
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
  for (Eigen::Index i = 0; i < n; ++i)
    companion(i, n - 1) = -coeffs[static_cast<std::size_t>(i)] / coeffs[degree];

  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("polynomial_roots: eigensolver failed to converge");

  std::vector<std::complex<double>> roots(solver.eigenvalues().begin(), solver.eigenvalues().end());
  sort_by_modulus(roots);
  return roots;
}

}  // namespace linlaw
