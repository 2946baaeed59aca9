#include "npwigner/fock.hpp"

#include <cmath>
#include <cstdio>
#include <string>

#include "npwigner/errors.hpp"
#include "npwigner/phase.hpp"

namespace npw {

namespace {

constexpr double kWeightSumTol = 1e-12;
constexpr double kHermitianTol = 1e-12;
constexpr double kDiagonalFloor = -1e-14;
constexpr double kTraceSlack = 1e-12;

bool finite(const Amplitude& a) { return std::isfinite(a.real()) && std::isfinite(a.imag()); }

void require_cutoff(int cutoff) {
  if (cutoff < 0) throw CutoffError("cutoff must be non-negative, got " + std::to_string(cutoff));
}

std::string short_g(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

std::string cutoff_message(const char* what, int cutoff, double tail, double tol, int suggested) {
  return std::string(what) + ": tail mass " + short_g(tail) + " above cutoff " +
         std::to_string(cutoff) + " exceeds tail_tol " + short_g(tol) +
         "; use cutoff >= " + std::to_string(suggested);
}

}  // namespace

PureState::PureState(std::vector<Amplitude> amplitudes, double tail_mass, double tail_tol)
    : amplitudes_(std::move(amplitudes)), tail_mass_(tail_mass) {
  if (amplitudes_.empty()) throw ValidationError("pure state needs at least one amplitude");
  for (const auto& c : amplitudes_) {
    if (!finite(c)) throw ValidationError("pure state has a non-finite amplitude");
  }
  const double n2 = norm_squared();
  if (n2 > 1.0 + kTraceSlack || n2 < 1.0 - tail_tol) {
    throw ValidationError("pure state norm² " + short_g(n2) + " outside [1 - tail_tol, 1]");
  }
}

double PureState::norm_squared() const {
  double s = 0.0;
  for (const auto& c : amplitudes_) s += std::norm(c);
  return s;
}

double DensityMatrix::trace() const {
  double t = 0.0;
  for (int m = 0; m < dim(); ++m) t += (*this)(m, m).real();
  return t;
}

DensityMatrix DensityMatrix::from_pure(const PureState& state) {
  const int d = state.cutoff() + 1;
  const auto c = state.amplitudes();
  std::vector<Amplitude> q(static_cast<std::size_t>(d) * static_cast<std::size_t>(d));
  auto at = [&](int m, int l) -> Amplitude& {
    return q[static_cast<std::size_t>(m) * static_cast<std::size_t>(d) + static_cast<std::size_t>(l)];
  };
  for (int m = 0; m < d; ++m) {
    at(m, m) = Amplitude(std::norm(c[m]), 0.0);
    for (int l = m + 1; l < d; ++l) {
      at(m, l) = c[m] * std::conj(c[l]);
      at(l, m) = std::conj(at(m, l));
    }
  }
  return DensityMatrix(state.cutoff(), std::move(q), state.tail_mass());
}

DensityMatrix DensityMatrix::from_entries(std::span<const Amplitude> entries, int cutoff,
                                          double tail_tol) {
  require_cutoff(cutoff);
  const auto d = static_cast<std::size_t>(cutoff) + 1;
  if (entries.size() != d * d) {
    throw ValidationError("density matrix needs " + std::to_string(d * d) + " entries, got " +
                          std::to_string(entries.size()));
  }
  std::vector<Amplitude> q(entries.begin(), entries.end());
  for (const auto& e : q) {
    if (!finite(e)) throw ValidationError("density matrix has a non-finite entry");
  }
  for (std::size_t m = 0; m < d; ++m) {
    for (std::size_t l = m; l < d; ++l) {
      const Amplitude upper = q[m * d + l];
      const Amplitude lower = q[l * d + m];
      if (std::abs(upper - std::conj(lower)) > kHermitianTol) {
        throw ValidationError("density matrix is not Hermitian at (" + std::to_string(m) + ", " +
                              std::to_string(l) + ")");
      }
      if (m == l) {
        if (upper.real() < kDiagonalFloor) {
          throw ValidationError("negative diagonal entry at " + std::to_string(m));
        }
        q[m * d + m] = Amplitude(upper.real(), 0.0);
      } else {
        const Amplitude avg = 0.5 * (upper + std::conj(lower));
        q[m * d + l] = avg;
        q[l * d + m] = std::conj(avg);
      }
    }
  }
  DensityMatrix rho(cutoff, std::move(q), 0.0);
  const double tr = rho.trace();
  if (tr > 1.0 + kTraceSlack || tr < 1.0 - tail_tol) {
    throw ValidationError("density matrix trace " + short_g(tr) +
                          " outside [1 - tail_tol, 1]");
  }
  rho.tail_mass_ = 1.0 - tr;
  return rho;
}

DensityMatrix mix(std::span<const std::pair<double, DensityMatrix>> components) {
  if (components.empty()) throw ValidationError("mix needs at least one component");
  const int cutoff = components.front().second.cutoff();
  double wsum = 0.0;
  for (const auto& [w, rho] : components) {
    if (!(w >= 0.0)) throw ValidationError("mix weight must be non-negative");
    if (rho.cutoff() != cutoff) throw ValidationError("mix components have mismatched cutoffs");
    wsum += w;
  }
  if (std::abs(wsum - 1.0) > kWeightSumTol) {
    throw ValidationError("mix weights sum to " + short_g(wsum) + ", expected 1");
  }
  const auto d = static_cast<std::size_t>(cutoff) + 1;
  std::vector<Amplitude> q(d * d, Amplitude{});
  double tail = 0.0;
  for (const auto& [w, rho] : components) {
    for (std::size_t i = 0; i < q.size(); ++i) q[i] += w * rho.entries_[i];
    tail += w * rho.tail_mass();
  }
  return DensityMatrix(cutoff, std::move(q), tail);
}

Amplitude coherent_amplitude(Amplitude alpha, int m) {
  const double mag = std::abs(alpha);
  if (mag == 0.0) return m == 0 ? Amplitude(1.0, 0.0) : Amplitude{};
  const double log_mag = -0.5 * mag * mag + m * std::log(mag) - 0.5 * std::lgamma(m + 1.0);
  return std::polar(std::exp(log_mag), m * std::arg(alpha));
}

double poisson_tail(double lambda, int cutoff) {
  if (lambda == 0.0) return 0.0;
  const double log_lambda = std::log(lambda);
  double tail = 0.0;
  // Terms grow until m ~ λ, then decay faster than geometrically.
  for (int m = cutoff + 1;; ++m) {
    const double term = std::exp(-lambda + m * log_lambda - std::lgamma(m + 1.0));
    tail += term;
    if (m > lambda && term <= tail * 1e-17) break;
  }
  return tail;
}

double cat_norm_squared(double alpha_mag) { return 2.0 * (1.0 + std::exp(-2.0 * alpha_mag * alpha_mag)); }

double cat_tail(double alpha_mag, int cutoff) {
  const double lambda = alpha_mag * alpha_mag;
  if (lambda == 0.0) return 0.0;
  // |c_m|² = 4 pmf(m) / N_α² for even m.
  const double scale = 4.0 / cat_norm_squared(alpha_mag);
  int m = cutoff + 1;
  if (m % 2 != 0) ++m;
  double tail = 0.0;
  for (;; m += 2) {
    const double term = scale * std::exp(-lambda + m * std::log(lambda) - std::lgamma(m + 1.0));
    tail += term;
    if (m > lambda && term <= tail * 1e-17) break;
  }
  return tail;
}

int auto_cutoff_coherent(Amplitude alpha, double tail_tol) {
  const double lambda = std::norm(alpha);
  int n = 0;
  while (poisson_tail(lambda, n) > tail_tol) ++n;
  return n;
}

int auto_cutoff_cat(Amplitude alpha, double tail_tol) {
  const double mag = std::abs(alpha);
  int n = 0;
  while (cat_tail(mag, n) > tail_tol) ++n;
  return n;
}

PureState make_number_state(int M, int cutoff) {
  require_cutoff(cutoff);
  if (M < 0) throw ValidationError("number state index must be non-negative");
  if (M > cutoff) {
    throw CutoffError("number state |" + std::to_string(M) + "> exceeds cutoff " +
                          std::to_string(cutoff),
                      M);
  }
  std::vector<Amplitude> c(static_cast<std::size_t>(cutoff) + 1, Amplitude{});
  c[static_cast<std::size_t>(M)] = 1.0;
  return PureState(std::move(c), 0.0);
}

PureState make_coherent_state(Amplitude alpha, int cutoff, double tail_tol) {
  require_cutoff(cutoff);
  if (!finite(alpha)) throw ValidationError("coherent amplitude must be finite");
  const double tail = poisson_tail(std::norm(alpha), cutoff);
  if (tail > tail_tol) {
    const int suggested = auto_cutoff_coherent(alpha, tail_tol);
    throw CutoffError(cutoff_message("coherent state", cutoff, tail, tail_tol, suggested), suggested);
  }
  std::vector<Amplitude> c(static_cast<std::size_t>(cutoff) + 1);
  for (int m = 0; m <= cutoff; ++m) c[static_cast<std::size_t>(m)] = coherent_amplitude(alpha, m);
  return PureState(std::move(c), tail, tail_tol);
}

PureState make_cat_state(Amplitude alpha, int cutoff, double tail_tol) {
  require_cutoff(cutoff);
  if (!finite(alpha)) throw ValidationError("cat amplitude must be finite");
  const double mag = std::abs(alpha);
  const double tail = cat_tail(mag, cutoff);
  if (tail > tail_tol) {
    const int suggested = auto_cutoff_cat(alpha, tail_tol);
    throw CutoffError(cutoff_message("cat state", cutoff, tail, tail_tol, suggested), suggested);
  }
  std::vector<Amplitude> c(static_cast<std::size_t>(cutoff) + 1, Amplitude{});
  double n2 = 0.0;
  for (int m = 0; m <= cutoff; m += 2) {
    const Amplitude a = 2.0 * coherent_amplitude(alpha, m);
    c[static_cast<std::size_t>(m)] = a;
    n2 += std::norm(a);
  }
  const double inv = 1.0 / std::sqrt(n2);
  for (int m = 0; m <= cutoff; m += 2) c[static_cast<std::size_t>(m)] *= inv;
  return PureState(std::move(c), tail, tail_tol);
}

PureState make_phase_state(int M, double phi0, int cutoff) {
  require_cutoff(cutoff);
  if (M < 0) throw ValidationError("phase state order must be non-negative");
  if (M > cutoff) {
    throw CutoffError("phase state order " + std::to_string(M) + " exceeds cutoff " +
                          std::to_string(cutoff),
                      M);
  }
  const double phase = reduce_phase(phi0);
  const double mag = 1.0 / std::sqrt(static_cast<double>(M) + 1.0);
  std::vector<Amplitude> c(static_cast<std::size_t>(cutoff) + 1, Amplitude{});
  for (int m = 0; m <= M; ++m) c[static_cast<std::size_t>(m)] = std::polar(mag, m * phase);
  return PureState(std::move(c), 0.0);
}

}  // namespace npw
