#include "npwigner/wigner.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "npwigner/errors.hpp"
#include "npwigner/phase.hpp"
#include "wigner_kernel.hpp"

namespace npw {

namespace {

constexpr double kSingularSin = 1e-8;

void require_row(const DensityMatrix& rho, int n) {
  if (n < 0) throw ValidationError("photon number must be non-negative");
  if (n > rho.cutoff()) {
    throw CutoffError("photon number " + std::to_string(n) + " exceeds cutoff " +
                      std::to_string(rho.cutoff()));
  }
}

// ln(α^j / √(j!)) with the convention 0^0 = 1.
double log_series_coeff(double alpha_mag, int j) {
  if (j == 0) return 0.0;
  if (alpha_mag == 0.0) return -std::numeric_limits<double>::infinity();
  return j * std::log(alpha_mag) - 0.5 * std::lgamma(j + 1.0);
}

void require_amplitude(double alpha_mag) {
  if (!(alpha_mag >= 0.0) || !std::isfinite(alpha_mag)) {
    throw ValidationError("closed forms take a real amplitude |α| >= 0");
  }
}

}  // namespace

std::complex<double> wigner_np_complex(const DensityMatrix& rho, int n, double phi) {
  require_row(rho, n);
  const detail::PhaseTable table(reduce_phase(phi), rho.cutoff());
  return detail::wigner_row_sum(rho, n, table) / (4.0 * kPi);
}

double wigner_np(const DensityMatrix& rho, int n, double phi) {
  const auto w = wigner_np_complex(rho, n, phi);
  if (!(std::abs(w.imag()) < kImagResidueTol)) {
    throw ValidationError("imaginary residue " + std::to_string(w.imag()) +
                          " in W(n, phi); density matrix is not Hermitian");
  }
  return w.real();
}

double WignerGrid::phi(int j) const { return grid_phase(phi_origin, j, phi_samples); }

int coherent_series_terms(double alpha_mag, double tol) {
  require_amplitude(alpha_mag);
  if (alpha_mag == 0.0) return 0;
  const double lambda = alpha_mag * alpha_mag;
  for (int k = 0;; ++k) {
    // Past k + 2 > λ the ratio of consecutive terms stays below r, so the tail is geometric.
    if (k + 2.0 <= lambda) continue;
    const double r = alpha_mag / std::sqrt(k + 2.0);
    const double next = std::exp(-0.5 * lambda + log_series_coeff(alpha_mag, k + 1));
    if (next / (1.0 - r) < tol) return k;
  }
}

double coherent_wigner_closed(double alpha_mag, int n, double phi, std::optional<int> terms) {
  require_amplitude(alpha_mag);
  if (n < 0) throw ValidationError("photon number must be non-negative");
  const int kmax = terms.value_or(coherent_series_terms(alpha_mag));
  const double lambda = alpha_mag * alpha_mag;
  const double log_prefactor = -lambda + log_series_coeff(alpha_mag, n);
  double sum = 0.0;
  for (int k = 0; k <= kmax; ++k) {
    sum += std::exp(log_prefactor + log_series_coeff(alpha_mag, k)) * std::cos((n - k) * phi);
  }
  return sum / kTwoPi;
}

double cat_wigner_closed(double alpha_mag, int n, double phi, std::optional<int> terms,
                         int normalization_power) {
  require_amplitude(alpha_mag);
  if (n < 0) throw ValidationError("photon number must be non-negative");
  if (normalization_power != 1 && normalization_power != 2) {
    throw ValidationError("normalization_power must be 1 or 2");
  }
  if (n % 2 != 0) return 0.0;
  const int kmax = terms.value_or(coherent_series_terms(alpha_mag));
  const double lambda = alpha_mag * alpha_mag;
  const double norm2 = cat_norm_squared(alpha_mag);
  const double norm = normalization_power == 2 ? norm2 : std::sqrt(norm2);
  const double log_prefactor = -lambda + log_series_coeff(alpha_mag, n);
  double sum = 0.0;
  for (int k = 0; k <= kmax; k += 2) {
    sum += 2.0 * std::exp(log_prefactor + log_series_coeff(alpha_mag, k)) * std::cos((n - k) * phi);
  }
  return 2.0 * sum / (kTwoPi * norm);
}

double phase_state_wigner_closed(int M, double phi0, int n, double phi) {
  if (M < 0 || n < 0) throw ValidationError("phase state order and photon number must be >= 0");
  if (n > M) return 0.0;
  const double delta = reduce_phase(phi) - reduce_phase(phi0);
  const double scale = 1.0 / (2.0 * (M + 1.0) * kPi);
  const double half_sin = std::sin(0.5 * delta);
  if (std::abs(half_sin) < kSingularSin) {
    double sum = 0.0;
    for (int k = 0; k <= M; ++k) sum += std::cos((n - k) * delta);
    return scale * sum;
  }
  return scale * std::cos((0.5 * M - n) * delta) * std::sin(0.5 * (M + 1.0) * delta) / half_sin;
}

}  // namespace npw
