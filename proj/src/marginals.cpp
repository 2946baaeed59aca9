#include "npwigner/marginals.hpp"

#include <cmath>
#include <complex>
#include <numeric>
#include <string>

#include "npwigner/errors.hpp"
#include "npwigner/phase.hpp"

namespace npw {

double PhotonDistribution::total() const { return std::accumulate(p.begin(), p.end(), 0.0); }

double PhaseDistribution::phi(int j) const { return grid_phase(phi_origin, j, phi_samples); }

double PhaseDistribution::integral() const {
  const double sum = std::accumulate(values.begin(), values.end(), 0.0);
  return sum * kTwoPi / static_cast<double>(phi_samples);
}

PhotonDistribution photon_marginal_analytic(const DensityMatrix& rho) {
  PhotonDistribution out;
  out.p.resize(static_cast<std::size_t>(rho.dim()));
  for (int n = 0; n < rho.dim(); ++n) out.p[static_cast<std::size_t>(n)] = rho(n, n).real();
  return out;
}

PhotonDistribution photon_marginal_from_grid(const WignerGrid& grid) {
  PhotonDistribution out;
  out.p.resize(static_cast<std::size_t>(grid.rows()));
  const double weight = kTwoPi / static_cast<double>(grid.phi_samples);
  for (int n = 0; n < grid.rows(); ++n) {
    double sum = 0.0;
    for (int j = 0; j < grid.phi_samples; ++j) sum += grid.at(n, j);
    out.p[static_cast<std::size_t>(n)] = weight * sum;
  }
  if (grid.phi_samples < exact_phi_samples(grid.cutoff)) {
    out.warning = "phi_samples " + std::to_string(grid.phi_samples) + " below exactness bound " +
                  std::to_string(exact_phi_samples(grid.cutoff)) + " for cutoff " +
                  std::to_string(grid.cutoff);
  }
  return out;
}

namespace {

std::complex<double> phase_marginal_complex(const DensityMatrix& rho, double phi) {
  const double x = reduce_phase(phi);
  const int d = rho.dim();
  // e^{ijφ} for j = 0..cutoff; negative offsets use the conjugate.
  std::vector<std::complex<double>> e(static_cast<std::size_t>(d));
  for (int j = 0; j < d; ++j) {
    const double a = static_cast<double>(j) * x;
    e[static_cast<std::size_t>(j)] = {std::cos(a), std::sin(a)};
  }
  std::complex<double> sum = 0.0;
  for (int n = 0; n < d; ++n) {
    for (int m = 0; m < d; ++m) {
      const int k = m - n;
      const auto& ek = e[static_cast<std::size_t>(k < 0 ? -k : k)];
      sum += rho(n, m) * (k < 0 ? std::conj(ek) : ek);
    }
  }
  return sum / kTwoPi;
}

void require_real(std::complex<double> v) {
  if (!(std::abs(v.imag()) < kImagResidueTol)) {
    throw ValidationError("imaginary residue " + std::to_string(v.imag()) + " in phase marginal");
  }
}

}  // namespace

double phase_marginal(const DensityMatrix& rho, double phi) {
  const auto v = phase_marginal_complex(rho, phi);
  require_real(v);
  return v.real();
}

PhaseDistribution phase_distribution(const DensityMatrix& rho, int phi_samples, double phi_origin) {
  if (phi_samples < 1) throw ValidationError("phi_samples must be >= 1");
  PhaseDistribution out;
  out.phi_samples = phi_samples;
  out.phi_origin = reduce_phase(phi_origin);
  out.values.resize(static_cast<std::size_t>(phi_samples));
  std::vector<std::complex<double>> raw(static_cast<std::size_t>(phi_samples));
#pragma omp parallel for schedule(static)
  for (int j = 0; j < phi_samples; ++j) {
    raw[static_cast<std::size_t>(j)] = phase_marginal_complex(rho, out.phi(j));
  }
  for (std::size_t j = 0; j < raw.size(); ++j) {
    require_real(raw[j]);
    out.values[j] = raw[j].real();
  }
  return out;
}

double phase_state_phase_dist_closed(int M, double phi0, double phi) {
  if (M < 0) throw ValidationError("phase state order must be >= 0");
  const double delta = reduce_phase(phi) - reduce_phase(phi0);
  const double scale = 1.0 / (2.0 * (M + 1.0) * kPi);
  const double half_sin = std::sin(0.5 * delta);
  if (std::abs(half_sin) < 1e-8) {
    double c = 0.0;
    double s = 0.0;
    for (int k = 0; k <= M; ++k) {
      c += std::cos(k * delta);
      s += std::sin(k * delta);
    }
    return scale * (c * c + s * s);
  }
  const double num = std::sin(0.5 * (M + 1.0) * delta);
  return scale * num * num / (half_sin * half_sin);
}

}  // namespace npw
