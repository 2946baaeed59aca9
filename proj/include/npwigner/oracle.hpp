#pragma once

#include <complex>
#include <span>
#include <utility>

#include "npwigner/fock.hpp"
#include "npwigner/report.hpp"

namespace npw::oracle {

// Independent route to W(n, φ) through the number-phase characteristic function. Validation only;
// nothing here is tuned for speed.
//
//   D(k, θ) = e^{iθk} e^{-iθn̂} (V†)^k,   V† = Σ_j |j+1><j|
//   C(k, θ) = ½ [ Tr(D(k, θ) ρ) e^{i(kφ + nθ)} + c.c. ]
//   W(n, φ) = 1/(2π)² Σ_{k=-n}^{N-n} ∫_0^{2π} C(k, θ) dθ
//
// For k < 0, (V†)^k means V^{|k|}, the adjoint power.

// <l|(V†)^k|m> = δ_{l, m+k}.
int sg_matrix_element(int k, int l, int m);

// Tr(D(k, θ) ρ), with the trace reduced to the single non-zero diagonal of (V†)^k.
std::complex<double> displacement_trace(const DensityMatrix& rho, int k, double theta);

struct CharacteristicSample {
  int k = 0;
  double theta = 0.0;
  std::complex<double> raw;  // Tr(Dρ) times the kernel, before adding the conjugate

  // ½(raw + conj(raw)); the imaginary part is zero up to rounding.
  std::complex<double> symmetrized() const { return 0.5 * (raw + std::conj(raw)); }
};

CharacteristicSample characteristic_sample(const DensityMatrix& rho, int k, double theta, int n,
                                           double phi);

double characteristic_times_kernel(const DensityMatrix& rho, int k, double theta, int n, double phi);

// Minimum θ sample count accepted by wigner_via_characteristic.
inline int min_theta_samples(int cutoff) { return 2 * cutoff + 3; }

// Trapezoid θ-integral of the characteristic function. Throws QuadratureError when
// theta_samples ≤ 2·cutoff + 2.
double wigner_via_characteristic(const DensityMatrix& rho, int n, double phi, int theta_samples);

// (2π/samples) Σ_j e^{i·freq·θ_j}: 2π for freq ≡ 0 (mod samples), 0 otherwise.
std::complex<double> periodic_trapezoid_exp(int freq, int samples);

// Joint check of both marginals and the normalization on a phi_samples grid:
//   photon_marginal   max_n |∫W dφ - Q(n,n)|
//   phase_marginal    max_j |Σ_n W(n, φ_j) - P(φ_j)|
//   normalization     |∫P dφ - Tr ρ|
// each against 1e-10. An undersampled grid adds a failing quadrature_exactness check.
ValidationReport brute_force_marginal_check(const DensityMatrix& rho, int phi_samples);

// max |wigner_via_characteristic - wigner_np| over the given (n, φ) points, against 1e-10.
Check path_equivalence_check(const DensityMatrix& rho, std::span<const std::pair<int, double>> points,
                             int theta_samples);

}  // namespace npw::oracle
