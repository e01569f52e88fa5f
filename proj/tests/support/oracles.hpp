#pragma once

// Straight-line reference implementations, written independently of the
// library code paths they check. Everything here is O(n^3)-naive on purpose.

#include <cmath>
#include <vector>

namespace oracles {

// domega_i = (Omega_i - omega_i + (K/N) sum_l a_il sin(theta_l - theta_i + alpha)) / m
inline std::vector<double> phase_rhs_domega(
    const std::vector<std::vector<double>>& a, const std::vector<double>& theta,
    const std::vector<double>& omega, const std::vector<double>& omega_nat, double m,
    double k, double alpha) {
  const int n = static_cast<int>(theta.size());
  std::vector<double> out(n);
  for (int i = 0; i < n; ++i) {
    double coupling = 0.0;
    for (int l = 0; l < n; ++l)
      coupling = coupling + a[i][l] * std::sin(theta[l] - theta[i] + alpha);
    out[i] = (omega_nat[i] - omega[i] + k / n * coupling) / m;
  }
  return out;
}

inline double pair_quadratic(const std::vector<double>& x, const std::vector<double>& y,
                             double m, double k) {
  const int n = static_cast<int>(x.size());
  double total = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const double dx = x[i] - x[j];
      const double dy = y[i] - y[j];
      total += 2.0 * m * dx * dy;
      total += (1.0 - m * std::sqrt(k)) * dx * dx;
      total += 2.0 * m * m * dy * dy;
    }
  return total;
}

inline double energy_e1(const std::vector<double>& theta, const std::vector<double>& omega,
                        double m, double k) {
  return pair_quadratic(theta, omega, m, k);
}

inline double energy_e2(const std::vector<std::vector<double>>& a,
                        const std::vector<double>& theta, const std::vector<double>& omega,
                        const std::vector<double>& omega_nat, double m, double k,
                        double alpha) {
  return pair_quadratic(omega, phase_rhs_domega(a, theta, omega, omega_nat, m, k, alpha),
                        m, k);
}

// All-pairs hop distances; -1 marks unreachable pairs.
inline std::vector<std::vector<int>> floyd_warshall_hops(
    const std::vector<std::vector<double>>& a) {
  const int n = static_cast<int>(a.size());
  const int inf = 1 << 20;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
  for (int i = 0; i < n; ++i) d[i][i] = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (a[i][j] > 0.0) d[i][j] = 1;
  for (int via = 0; via < n; ++via)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (d[i][via] + d[via][j] < d[i][j]) d[i][j] = d[i][via] + d[via][j];
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (d[i][j] >= inf) d[i][j] = -1;
  return d;
}

}  // namespace oracles
