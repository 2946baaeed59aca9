#include <cmath>
#include <vector>

#include "doctest.h"
#include "npwigner/errors.hpp"
#include "npwigner/fock.hpp"
#include "npwigner/phase.hpp"
#include "npwigner/wigner.hpp"
#include "support/oracles.hpp"

using namespace npw;
namespace t = npw::testing;

namespace {

const double kInv2Pi = 1.0 / kTwoPi;

DensityMatrix coherent(double a, int cutoff = 64) { return density_from_pure(make_coherent_state({a, 0.0}, cutoff)); }
DensityMatrix cat(double a, int cutoff = 64) { return density_from_pure(make_cat_state({a, 0.0}, cutoff)); }
DensityMatrix phase_state(int M, double phi0, int cutoff) {
  return density_from_pure(make_phase_state(M, phi0, cutoff));
}

// Real coherent state straight from Poisson weights: (1/2π) Σ_m √(p_n p_m) cos((m-n)φ).
double coherent_poisson_oracle(double a, int n, double phi, int cutoff) {
  long double s = 0.0L;
  for (int m = 0; m <= cutoff; ++m) {
    s += std::sqrt(static_cast<long double>(t::poisson_pmf(a * a, n)) * t::poisson_pmf(a * a, m)) *
         std::cos(static_cast<long double>((m - n) * phi));
  }
  return static_cast<double>(s / (2.0L * 3.14159265358979323846264338327950288L));
}

// The double sum with the opposite exponent sign: (1/4π) Σ_k (Q(n,n+k) e^{-ikφ} + Q(n+k,n) e^{ikφ}).
double mirrored_sum(const DensityMatrix& rho, int n, double phi) {
  std::complex<double> s = 0.0;
  for (int m = 0; m <= rho.cutoff(); ++m) {
    const int k = m - n;
    s += rho(n, m) * std::polar(1.0, -k * phi) + rho(m, n) * std::polar(1.0, k * phi);
  }
  return s.real() / (4.0 * kPi);
}

}  // namespace

TEST_CASE("number state is a delta in n") {
  const auto rho = density_from_pure(make_number_state(3, 8));
  CHECK(wigner_np(rho, 3, 1.234) == kInv2Pi);
  CHECK(wigner_np(rho, 2, 0.4) == 0.0);
  for (int M : {0, 1, 5, 8}) {
    const auto r = density_from_pure(make_number_state(M, 8));
    for (int n = 0; n <= 8; ++n) {
      for (double phi : {0.0, 0.5, 2.0, 6.2}) CHECK(wigner_np(r, n, phi) == (n == M ? kInv2Pi : 0.0));
    }
  }
}

TEST_CASE("cat parity selection") {
  const auto rho = cat(4.0);
  for (int n = 1; n <= 64; n += 2) {
    for (double phi : {0.0, 0.3, 1.7, kPi, 5.9}) CHECK(wigner_np(rho, n, phi) == 0.0);
  }
}

TEST_CASE("coherent state against the Poisson oracle and the closed form") {
  const auto rho = coherent(4.0);
  const double w = wigner_np(rho, 16, 0.0);
  CHECK(w == doctest::Approx(coherent_poisson_oracle(4.0, 16, 0.0, 64)).epsilon(1e-10));
  CHECK(std::abs(w - coherent_wigner_closed(4.0, 16, 0.0)) < 1e-10);
  CHECK(std::abs(wigner_np(rho, 16, 0.5) - coherent_wigner_closed(4.0, 16, 0.5)) < 1e-10);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = t::uniform_int(0, 40);
    const double phi = t::uniform(0.0, kTwoPi);
    CHECK(std::abs(wigner_np(rho, n, phi) - coherent_poisson_oracle(4.0, n, phi, 64)) < 1e-12);
  }
}

TEST_CASE("coherent closed form edge cases") {
  CHECK(coherent_wigner_closed(0.0, 0, 1.3) == doctest::Approx(kInv2Pi).epsilon(1e-15));
  CHECK(coherent_wigner_closed(0.0, 2, 1.3) == 0.0);
  CHECK_THROWS_AS(coherent_wigner_closed(-1.0, 0, 0.0), ValidationError);
  CHECK(coherent_series_terms(0.0) == 0);
  // The auto term count leaves a tail below 1e-14: adding ten more terms changes nothing visible.
  const int k = coherent_series_terms(4.0);
  CHECK(std::abs(coherent_wigner_closed(4.0, 16, 0.5, k) - coherent_wigner_closed(4.0, 16, 0.5, k + 10)) < 1e-14);
}

TEST_CASE("cat closed form") {
  const auto rho = cat(4.0);
  CHECK(cat_wigner_closed(4.0, 1, 0.3, std::nullopt, 2) == 0.0);
  CHECK(std::abs(cat_wigner_closed(4.0, 16, 0.5, std::nullopt, 2) - wigner_np(rho, 16, 0.5)) < 1e-9);
  CHECK(cat_wigner_closed(0.0, 0, 0.8, std::nullopt, 2) == doctest::Approx(kInv2Pi).epsilon(1e-15));
  // The first-power normalization is off by exactly N_alpha.
  const double p1 = cat_wigner_closed(4.0, 16, 0.5, std::nullopt, 1);
  const double p2 = cat_wigner_closed(4.0, 16, 0.5, std::nullopt, 2);
  CHECK(p1 / p2 == doctest::Approx(std::sqrt(cat_norm_squared(4.0))).epsilon(1e-12));
  CHECK_THROWS_AS(cat_wigner_closed(4.0, 0, 0.0, std::nullopt, 3), ValidationError);
}

TEST_CASE("phase-state closed form") {
  CHECK(phase_state_wigner_closed(20, 0.7, 10, 0.7) == doctest::Approx(kInv2Pi).epsilon(1e-15));
  CHECK(phase_state_wigner_closed(0, 0.0, 0, 1.0) == doctest::Approx(kInv2Pi).epsilon(1e-15));
  const auto rho = phase_state(20, 0.7, 32);
  CHECK(std::abs(phase_state_wigner_closed(20, 0.7, 5, 1.9) - wigner_np(rho, 5, 1.9)) < 1e-10);
  CHECK(phase_state_wigner_closed(20, 0.7, 25, 1.9) == 0.0);
  CHECK(wigner_np(rho, 25, 1.9) == 0.0);

  // Either side of the removable singularity the two branches agree.
  for (double eps : {1e-7, 3e-8, 1e-8, 1e-9, 0.0, -1e-9, -2e-8, -1e-6}) {
    const double phi = 0.7 + eps;
    CHECK(std::abs(phase_state_wigner_closed(20, 0.7, 4, phi) - wigner_np(rho, 4, phi)) < 1e-10);
  }
}

TEST_CASE("closed forms match the general path on the figure parameters") {
  const auto rc = coherent(4.0);
  const auto rk = cat(4.0);
  const auto rp = phase_state(20, 0.7, 32);
  double dc = 0.0, dk = 0.0, dp = 0.0;
  for (int n = 0; n < 20; ++n) {
    for (int j = 0; j < 64; ++j) {
      const double phi = kTwoPi * j / 64;
      dc = std::max(dc, std::abs(coherent_wigner_closed(4.0, n, phi) - wigner_np(rc, n, phi)));
      dk = std::max(dk, std::abs(cat_wigner_closed(4.0, n, phi, std::nullopt, 2) - wigner_np(rk, n, phi)));
      dp = std::max(dp, std::abs(phase_state_wigner_closed(20, 0.7, n, phi) - wigner_np(rp, n, phi)));
    }
  }
  CHECK(dc < 1e-9);
  CHECK(dk < 1e-9);
  CHECK(dp < 1e-9);
}

TEST_CASE("errors") {
  const auto rho = coherent(1.0, 16);
  CHECK_THROWS_AS(wigner_np(rho, 17, 0.0), CutoffError);
  CHECK_THROWS_AS(wigner_np(rho, -1, 0.0), ValidationError);
}

TEST_CASE("property: realness, periodicity, linearity") {
  std::vector<DensityMatrix> states{coherent(4.0), cat(4.0), phase_state(20, 0.7, 64),
                                    density_from_pure(make_coherent_state(std::polar(2.5, 1.1), 64)),
                                    density_from_pure(make_cat_state(std::polar(3.0, -0.4), 64))};
  for (const auto& rho : states) {
    for (int trial = 0; trial < 100; ++trial) {
      const int n = t::uniform_int(0, 64);
      const double phi = t::uniform(0.0, kTwoPi);
      const auto w = wigner_np_complex(rho, n, phi);
      CHECK(std::abs(w.imag()) < kImagResidueTol);
      CHECK(std::abs(wigner_np(rho, n, phi + kTwoPi) - w.real()) < 1e-14);
      CHECK(std::abs(wigner_np(rho, n, phi - 3.0 * kTwoPi) - w.real()) < 1e-14);
      // Reduction is the only place the phase is touched.
      CHECK(wigner_np(rho, n, phi + kTwoPi) == wigner_np(rho, n, reduce_phase(phi + kTwoPi)));
    }
  }
  for (int trial = 0; trial < 50; ++trial) {
    const double w1 = t::uniform(0.0, 1.0);
    const auto& r1 = states[static_cast<std::size_t>(t::uniform_int(0, 4))];
    const auto& r2 = states[static_cast<std::size_t>(t::uniform_int(0, 4))];
    const std::vector<std::pair<double, DensityMatrix>> parts{{w1, r1}, {1.0 - w1, r2}};
    const auto mixed = mix(parts);
    const int n = t::uniform_int(0, 64);
    const double phi = t::uniform(0.0, kTwoPi);
    CHECK(std::abs(wigner_np(mixed, n, phi) - (w1 * wigner_np(r1, n, phi) + (1.0 - w1) * wigner_np(r2, n, phi))) <
          1e-12);
  }
}

TEST_CASE("property: the phase of alpha shifts the distribution along phi") {
  for (int trial = 0; trial < 20; ++trial) {
    const double mag = t::uniform(0.5, 4.0);
    const double chi = t::uniform(0.0, kTwoPi);
    const auto rotated = density_from_pure(make_coherent_state(std::polar(mag, chi), 64));
    const auto real = coherent(mag);
    for (int i = 0; i < 20; ++i) {
      const int n = t::uniform_int(0, 30);
      const double phi = t::uniform(0.0, kTwoPi);
      CHECK(std::abs(wigner_np(rotated, n, phi) - coherent_wigner_closed(mag, n, phi - chi)) < 1e-10);
      CHECK(std::abs(wigner_np(rotated, n, phi) - wigner_np(real, n, phi - chi)) < 1e-12);
    }
  }
}

TEST_CASE("convention: W(n, phi) is the opposite-sign double sum evaluated at -phi") {
  const auto rho = density_from_pure(make_coherent_state(std::polar(3.0, 0.5), 48));
  for (int trial = 0; trial < 50; ++trial) {
    const int n = t::uniform_int(0, 48);
    const double phi = t::uniform(0.0, kTwoPi);
    CHECK(std::abs(wigner_np(rho, n, phi) - mirrored_sum(rho, n, -phi)) < 1e-13);
  }
  // For real states both signs coincide.
  const auto real = coherent(3.0, 48);
  CHECK(std::abs(wigner_np(real, 7, 1.1) - mirrored_sum(real, 7, 1.1)) < 1e-14);
}
