#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "npwigner/fock.hpp"

namespace npw {

// Largest tolerated imaginary part of the complex double sum before it is dropped.
inline constexpr double kImagResidueTol = 1e-12;

// Phase convention: a state whose amplitudes carry the phase e^{imχ} peaks at φ = χ.
//
//   W(n, φ) = 1/(4π) Σ_{k=-n}^{N-n} ( Q(n, n+k) e^{ikφ} + Q(n+k, n) e^{-ikφ} )
//
// The upper limit is exact in the truncated model because Q vanishes above the cutoff.
double wigner_np(const DensityMatrix& rho, int n, double phi);

// Same sum before the imaginary part is discarded (scaled by 1/(4π)).
std::complex<double> wigner_np_complex(const DensityMatrix& rho, int n, double phi);

// Samples of W on n ∈ [0, n_max] × φ_j = origin + 2πj / phi_samples (reduced to [0, 2π)).
struct WignerGrid {
  int n_max = 0;
  int phi_samples = 0;
  double phi_origin = 0.0;
  int cutoff = 0;              // cutoff of the source density matrix
  std::vector<double> values;  // row-major, (n_max + 1) × phi_samples

  int rows() const { return n_max + 1; }
  double phi(int j) const;
  double at(int n, int j) const {
    return values[static_cast<std::size_t>(n) * static_cast<std::size_t>(phi_samples) +
                  static_cast<std::size_t>(j)];
  }
};

// OpenMP evaluation. Bitwise identical to wigner_grid_serial for any thread count.
WignerGrid wigner_grid(const DensityMatrix& rho, int n_max, int phi_samples, double phi_origin = 0.0);

// Reference path: one wigner_np call per cell, no threading.
WignerGrid wigner_grid_serial(const DensityMatrix& rho, int n_max, int phi_samples,
                              double phi_origin = 0.0);

// Number of k-terms needed so the neglected tail of Σ_k |α|^k e^{-|α|²/2}/√(k!) is below tol.
int coherent_series_terms(double alpha_mag, double tol = 1e-14);

// Closed form for a coherent state with real amplitude α ≥ 0:
//   e^{-α²} α^n / (2π √(n!)) Σ_{k=0}^{terms} α^k cos[(n-k)φ] / √(k!)
// `terms` defaults to coherent_series_terms(alpha_mag). A complex α = |α|e^{iχ} is the same
// function evaluated at φ - χ.
double coherent_wigner_closed(double alpha_mag, int n, double phi,
                              std::optional<int> terms = std::nullopt);

// Closed form for the even cat state, with the normalization raised to `normalization_power`:
//   e^{-α²} α^n (1+(-1)^n) / (2π √(n!) N_α^p) Σ_k α^k (1+(-1)^k) cos[(n-k)φ] / √(k!)
// with N_α² = 2(1 + e^{-2α²}). Only p = 2 matches the density-matrix route; p = 1 is the
// literal first-power variant, kept for comparison.
double cat_wigner_closed(double alpha_mag, int n, double phi, std::optional<int> terms,
                         int normalization_power);

// Dirichlet-kernel form for the truncated phase state of order M:
//   1/(2(M+1)π) cos[(M/2 - n)Δ] sin[(M+1)Δ/2] / sin(Δ/2),  Δ = φ - φ0
// Falls back to the direct cosine sum when |sin(Δ/2)| < 1e-8. Returns 0 for n > M.
double phase_state_wigner_closed(int M, double phi0, int n, double phi);

}  // namespace npw
