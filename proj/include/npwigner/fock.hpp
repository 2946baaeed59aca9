#pragma once

#include <complex>
#include <span>
#include <utility>
#include <vector>

namespace npw {

using Amplitude = std::complex<double>;

inline constexpr double kDefaultTailTol = 1e-10;

// Pure state truncated to Fock levels 0..cutoff.
class PureState {
 public:
  // Validates finiteness and Σ|c|² ∈ [1 - tail_tol, 1]; throws ValidationError otherwise.
  PureState(std::vector<Amplitude> amplitudes, double tail_mass, double tail_tol = kDefaultTailTol);

  int cutoff() const { return static_cast<int>(amplitudes_.size()) - 1; }
  std::span<const Amplitude> amplitudes() const { return amplitudes_; }
  const Amplitude& operator[](int m) const { return amplitudes_[static_cast<std::size_t>(m)]; }

  // Probability mass lost above the cutoff.
  double tail_mass() const { return tail_mass_; }
  double norm_squared() const;

 private:
  std::vector<Amplitude> amplitudes_;
  double tail_mass_;
};

// Number-basis density matrix with entries Q(m, l) = <m|ρ|l>. Hermitian by construction.
class DensityMatrix {
 public:
  int cutoff() const { return cutoff_; }
  int dim() const { return cutoff_ + 1; }
  const Amplitude& operator()(int m, int l) const {
    return entries_[static_cast<std::size_t>(m) * static_cast<std::size_t>(dim()) +
                    static_cast<std::size_t>(l)];
  }
  double trace() const;
  double tail_mass() const { return tail_mass_; }

  // Q = c c^† with the lower triangle mirrored from the upper one.
  static DensityMatrix from_pure(const PureState& state);

  // Row-major (cutoff+1)² entries. Rejects a Hermitian defect above 1e-12, non-finite values,
  // a diagonal below -1e-14 and a trace outside [1 - tail_tol, 1 + 1e-12]. Accepted input is
  // symmetrized so the stored matrix is exactly Hermitian.
  static DensityMatrix from_entries(std::span<const Amplitude> entries, int cutoff,
                                    double tail_tol = kDefaultTailTol);

  friend DensityMatrix mix(std::span<const std::pair<double, DensityMatrix>> components);

 private:
  DensityMatrix(int cutoff, std::vector<Amplitude> entries, double tail_mass)
      : cutoff_(cutoff), entries_(std::move(entries)), tail_mass_(tail_mass) {}

  int cutoff_;
  std::vector<Amplitude> entries_;
  double tail_mass_;
};

PureState make_number_state(int M, int cutoff);

// |α> truncated at `cutoff`. Throws CutoffError (carrying the minimal adequate cutoff) when the
// Poisson tail above the cutoff exceeds tail_tol.
PureState make_coherent_state(Amplitude alpha, int cutoff, double tail_tol = kDefaultTailTol);

// (|α> + |-α>)/N_α, renormalized within the truncated basis. Odd amplitudes are exactly zero.
PureState make_cat_state(Amplitude alpha, int cutoff, double tail_tol = kDefaultTailTol);

// Σ_{m≤M} e^{imφ0}|m>/√(M+1).
PureState make_phase_state(int M, double phi0, int cutoff);

inline DensityMatrix density_from_pure(const PureState& state) {
  return DensityMatrix::from_pure(state);
}

// Convex combination. Weights must be ≥ 0 and sum to 1 within 1e-12; cutoffs must match.
DensityMatrix mix(std::span<const std::pair<double, DensityMatrix>> components);

// e^{-|α|²/2} |α|^m / √(m!) evaluated in log space; the phase e^{imχ} is applied separately.
Amplitude coherent_amplitude(Amplitude alpha, int m);

// Σ_{m>cutoff} e^{-λ} λ^m / m!, summed directly (no 1 - CDF cancellation).
double poisson_tail(double lambda, int cutoff);

// Probability mass of the normalized (untruncated) cat state above `cutoff`.
double cat_tail(double alpha_mag, int cutoff);

// Smallest cutoff whose tail mass is ≤ tail_tol.
int auto_cutoff_coherent(Amplitude alpha, double tail_tol = kDefaultTailTol);
int auto_cutoff_cat(Amplitude alpha, double tail_tol = kDefaultTailTol);

// N_α² = 2(1 + e^{-2|α|²}).
double cat_norm_squared(double alpha_mag);

}  // namespace npw
