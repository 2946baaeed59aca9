#include "npwigner/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "npwigner/errors.hpp"
#include "npwigner/marginals.hpp"
#include "npwigner/phase.hpp"
#include "npwigner/wigner.hpp"

namespace npw::oracle {

namespace {
constexpr double kReportTol = 1e-10;
}

int sg_matrix_element(int k, int l, int m) {
  if (l < 0 || m < 0) return 0;
  return l == m + k ? 1 : 0;
}

std::complex<double> displacement_trace(const DensityMatrix& rho, int k, double theta) {
  // Tr(Dρ) = Σ_{m,l} Q(m,l) <l|D|m>,  <l|D|m> = e^{iθk} e^{-iθl} <l|(V†)^k|m>
  std::complex<double> sum = 0.0;
  for (int m = 0; m <= rho.cutoff(); ++m) {
    const int l = m + k;
    if (l < 0 || l > rho.cutoff()) continue;
    const int v = sg_matrix_element(k, l, m);
    if (v == 0) continue;
    sum += rho(m, l) * std::polar(1.0, theta * k - theta * l) * static_cast<double>(v);
  }
  return sum;
}

CharacteristicSample characteristic_sample(const DensityMatrix& rho, int k, double theta, int n,
                                           double phi) {
  const double x = reduce_phase(phi);
  CharacteristicSample s;
  s.k = k;
  s.theta = theta;
  s.raw = displacement_trace(rho, k, theta) * std::polar(1.0, k * x + n * theta);
  return s;
}

double characteristic_times_kernel(const DensityMatrix& rho, int k, double theta, int n, double phi) {
  return characteristic_sample(rho, k, theta, n, phi).symmetrized().real();
}

double wigner_via_characteristic(const DensityMatrix& rho, int n, double phi, int theta_samples) {
  if (n < 0 || n > rho.cutoff()) {
    throw CutoffError("photon number " + std::to_string(n) + " outside [0, cutoff]");
  }
  if (theta_samples < min_theta_samples(rho.cutoff())) {
    throw QuadratureError("theta_samples " + std::to_string(theta_samples) +
                          " too small for exact quadrature; need >= " +
                          std::to_string(min_theta_samples(rho.cutoff())));
  }
  const double weight = kTwoPi / theta_samples;
  double total = 0.0;
  for (int k = -n; k <= rho.cutoff() - n; ++k) {
    double integral = 0.0;
    for (int j = 0; j < theta_samples; ++j) {
      integral += characteristic_times_kernel(rho, k, kTwoPi * j / theta_samples, n, phi);
    }
    total += weight * integral;
  }
  return total / (kTwoPi * kTwoPi);
}

std::complex<double> periodic_trapezoid_exp(int freq, int samples) {
  std::complex<double> sum = 0.0;
  for (int j = 0; j < samples; ++j) {
    sum += std::polar(1.0, static_cast<double>(freq) * kTwoPi * j / samples);
  }
  return sum * (kTwoPi / samples);
}

ValidationReport brute_force_marginal_check(const DensityMatrix& rho, int phi_samples) {
  ValidationReport report;
  const int required = exact_phi_samples(rho.cutoff()) + 1;
  if (phi_samples < required) {
    report.checks.push_back({"quadrature_exactness", static_cast<double>(phi_samples),
                             static_cast<double>(required), false, true,
                             "phi_samples must exceed 2*cutoff + 2"});
  }
  const WignerGrid grid = wigner_grid_serial(rho, rho.cutoff(), phi_samples);

  double photon_dev = 0.0;
  const double weight = kTwoPi / phi_samples;
  for (int n = 0; n <= rho.cutoff(); ++n) {
    double sum = 0.0;
    for (int j = 0; j < phi_samples; ++j) sum += grid.at(n, j);
    photon_dev = std::max(photon_dev, std::abs(weight * sum - rho(n, n).real()));
  }
  report.add("photon_marginal", photon_dev, kReportTol);

  double phase_dev = 0.0;
  double phase_integral = 0.0;
  for (int j = 0; j < phi_samples; ++j) {
    double column = 0.0;
    for (int n = 0; n <= rho.cutoff(); ++n) column += grid.at(n, j);
    const double p = phase_marginal(rho, grid.phi(j));
    phase_dev = std::max(phase_dev, std::abs(column - p));
    phase_integral += p;
  }
  report.add("phase_marginal", phase_dev, kReportTol);
  report.add("normalization", std::abs(weight * phase_integral - rho.trace()), kReportTol);
  return report;
}

Check path_equivalence_check(const DensityMatrix& rho, std::span<const std::pair<int, double>> points,
                             int theta_samples) {
  double dev = 0.0;
  for (const auto& [n, phi] : points) {
    dev = std::max(dev, std::abs(wigner_via_characteristic(rho, n, phi, theta_samples) -
                                 wigner_np(rho, n, phi)));
  }
  Check c;
  c.name = "characteristic_path";
  c.deviation = dev;
  c.threshold = kReportTol;
  c.passed = dev < kReportTol;
  c.note = std::to_string(points.size()) + " points, theta_samples " + std::to_string(theta_samples);
  return c;
}

}  // namespace npw::oracle
