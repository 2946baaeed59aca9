#pragma once

#include <optional>
#include <string>
#include <vector>

#include "npwigner/fock.hpp"
#include "npwigner/wigner.hpp"

namespace npw {

inline constexpr int kDefaultPhiSamples = 512;

struct PhotonDistribution {
  std::vector<double> p;  // index n = 0..cutoff (or n_max for grid-derived marginals)
  // Set when a grid-derived marginal was integrated on fewer than 2·cutoff + 2 samples, in
  // which case the trapezoid rule is no longer guaranteed exact.
  std::optional<std::string> warning;

  double total() const;
};

struct PhaseDistribution {
  int phi_samples = 0;
  double phi_origin = 0.0;
  std::vector<double> values;  // probability per radian at φ_j = origin + 2πj / phi_samples

  double phi(int j) const;
  // Uniform trapezoid rule on the periodic domain.
  double integral() const;
};

// Smallest sample count for which the grid marginals are exact.
inline int exact_phi_samples(int cutoff) { return 2 * cutoff + 2; }

// P(n) = Re Q(n, n).
PhotonDistribution photon_marginal_analytic(const DensityMatrix& rho);

// P(n) = (2π / phi_samples) Σ_j W(n, φ_j) over every row of the grid.
PhotonDistribution photon_marginal_from_grid(const WignerGrid& grid);

// P(φ) = 1/(2π) Σ_n Σ_m Q(n, m) e^{i(m-n)φ}, real part after checking the residue.
double phase_marginal(const DensityMatrix& rho, double phi);

// phase_marginal sampled on a uniform periodic grid.
PhaseDistribution phase_distribution(const DensityMatrix& rho, int phi_samples = kDefaultPhiSamples,
                                     double phi_origin = 0.0);

// Fejér-kernel form for the truncated phase state of order M:
//   1/(2(M+1)π) sin²[(M+1)Δ/2] / sin²(Δ/2),  Δ = φ - φ0
// With |sin(Δ/2)| < 1e-8 the direct sum |Σ_k e^{ikΔ}|² is used instead, giving (M+1)/(2π) at Δ = 0.
double phase_state_phase_dist_closed(int M, double phi0, double phi);

}  // namespace npw
