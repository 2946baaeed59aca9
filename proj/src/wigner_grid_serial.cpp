#include "npwigner/wigner.hpp"
#include "wigner_kernel.hpp"

namespace npw {

WignerGrid wigner_grid_serial(const DensityMatrix& rho, int n_max, int phi_samples,
                              double phi_origin) {
  WignerGrid grid = detail::make_grid(rho, n_max, phi_samples, phi_origin);
  for (int n = 0; n <= n_max; ++n) {
    for (int j = 0; j < phi_samples; ++j) {
      grid.values[static_cast<std::size_t>(n) * static_cast<std::size_t>(phi_samples) +
                  static_cast<std::size_t>(j)] = wigner_np(rho, n, grid.phi(j));
    }
  }
  return grid;
}

}  // namespace npw
