#include <string>

#include "npwigner/errors.hpp"
#include "npwigner/phase.hpp"
#include "npwigner/wigner.hpp"
#include "wigner_kernel.hpp"

namespace npw {

namespace detail {

WignerGrid make_grid(const DensityMatrix& rho, int n_max, int phi_samples, double phi_origin) {
  if (n_max < 0 || n_max > rho.cutoff()) {
    throw CutoffError("n_max " + std::to_string(n_max) + " outside [0, cutoff " +
                      std::to_string(rho.cutoff()) + "]");
  }
  if (phi_samples < 1) throw ValidationError("phi_samples must be >= 1");
  WignerGrid grid;
  grid.n_max = n_max;
  grid.phi_samples = phi_samples;
  grid.phi_origin = reduce_phase(phi_origin);
  grid.cutoff = rho.cutoff();
  grid.values.assign(static_cast<std::size_t>(n_max + 1) * static_cast<std::size_t>(phi_samples), 0.0);
  return grid;
}

}  // namespace detail

WignerGrid wigner_grid(const DensityMatrix& rho, int n_max, int phi_samples, double phi_origin) {
  WignerGrid grid = detail::make_grid(rho, n_max, phi_samples, phi_origin);
  const auto stride = static_cast<std::size_t>(phi_samples);
  bool residue_ok = true;

  // One phase table per column, shared by every row of that column.
#pragma omp parallel reduction(&& : residue_ok)
  {
    detail::PhaseTable table(0.0, rho.cutoff());
#pragma omp for schedule(static)
    for (int j = 0; j < phi_samples; ++j) {
      table.refill(grid.phi(j));
      for (int n = 0; n <= n_max; ++n) {
        const auto w = detail::wigner_row_sum(rho, n, table) / (4.0 * kPi);
        residue_ok = residue_ok && std::abs(w.imag()) < kImagResidueTol;
        grid.values[static_cast<std::size_t>(n) * stride + static_cast<std::size_t>(j)] = w.real();
      }
    }
  }
  if (!residue_ok) {
    throw ValidationError("imaginary residue above tolerance in Wigner grid; density matrix is not Hermitian");
  }
  return grid;
}

}  // namespace npw
