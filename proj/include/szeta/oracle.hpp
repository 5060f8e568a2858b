#pragma once

#include <vector>

#include "szeta/asymptotics.hpp"
#include "szeta/density.hpp"
#include "szeta/greens.hpp"

namespace szeta {

struct SpectrumResult {
  BC bc = BC::DD;
  std::vector<double> eigenvalues;  // ascending, zero mode removed
  std::vector<double> err_est;      // |E(2N) - E(N)| / 3 per eigenvalue
  int grid_size = 0;
};

/// Reference eigensolver for -psi'' = E Sigma psi.
///
/// Second-order vertex finite differences on N and 2N intervals, diagonal
/// mass matrix, ghost-point Neumann closure (half mass at the end vertex),
/// wraparound stencil for PP; the pencil is symmetrized and solved as a band
/// matrix. The two grids are Richardson-combined. CapabilityError when
/// grid_size < 8 * num_modes.
SpectrumResult solve_spectrum(const DensityProfile& p, BC bc, int num_modes, int grid_size);

/// Eigenvalues on a single grid, without extrapolation or zero-mode removal.
std::vector<double> fd_eigenvalues(const DensityProfile& p, BC bc, int count, int grid_size);

/// sum_k E_k^(-s) over the computed spectrum plus the asymptotic tail beyond.
double zeta_from_spectrum(const SpectrumResult& spec, const AsymptoticCoefficients& c, int s,
                          double a = 1.0);

}  // namespace szeta
