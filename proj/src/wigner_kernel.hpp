#pragma once

#include <complex>
#include <cmath>
#include <vector>

#include "npwigner/fock.hpp"
#include "npwigner/wigner.hpp"

namespace npw::detail {

// cos(aφ), sin(aφ) for a = 0..cutoff.
struct PhaseTable {
  std::vector<double> cos;
  std::vector<double> sin;

  PhaseTable(double phi, int cutoff)
      : cos(static_cast<std::size_t>(cutoff) + 1), sin(static_cast<std::size_t>(cutoff) + 1) {
    refill(phi);
  }

  void refill(double phi) {
    for (std::size_t a = 0; a < cos.size(); ++a) {
      const double x = static_cast<double>(a) * phi;
      cos[a] = std::cos(x);
      sin[a] = std::sin(x);
    }
  }
};

// Unscaled Σ_m ( Q(n,m) e^{i(m-n)φ} + Q(m,n) e^{-i(m-n)φ} ). Every evaluation path of W goes
// through this function so that grid and pointwise results agree bitwise.
inline std::complex<double> wigner_row_sum(const DensityMatrix& rho, int n, const PhaseTable& t) {
  double re = 0.0;
  double im = 0.0;
  for (int m = 0; m <= rho.cutoff(); ++m) {
    const int k = m - n;
    const auto a = static_cast<std::size_t>(k < 0 ? -k : k);
    const double c = t.cos[a];
    const double s = k < 0 ? -t.sin[a] : t.sin[a];
    const auto& q1 = rho(n, m);
    const auto& q2 = rho(m, n);
    re += (q1.real() * c - q1.imag() * s) + (q2.real() * c + q2.imag() * s);
    im += (q1.real() * s + q1.imag() * c) + (q2.imag() * c - q2.real() * s);
  }
  return {re, im};
}

// Validated, zero-filled grid shell shared by the parallel and serial evaluators.
WignerGrid make_grid(const DensityMatrix& rho, int n_max, int phi_samples, double phi_origin);

}  // namespace npw::detail
