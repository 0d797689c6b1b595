#ifndef TOPOHEAT_MATERIAL_HPP
#define TOPOHEAT_MATERIAL_HPP

#include <array>
#include <complex>

namespace topoheat {

// Working substance: a gapped 2D Dirac material (stanene-class) in a
// perpendicular electric field. The only material parameter is the
// spin-orbit coupling strength; the field enters through the single
// scalar potential u (meV), which may be negative. The spectrum is even
// in u, so |u| is used throughout.
struct MaterialParams {
  double lambda_so_meV = 30.0;  // spin-orbit coupling, > 0
};

// The two positive-energy bands at radial momentum k (meV, natural units).
struct BandPair {
  double e1_meV = 0.0;  // lower band, sqrt(k^2 + (|u| - lambda)^2)
  double e2_meV = 0.0;  // upper band, sqrt(k^2 + (|u| + lambda)^2)
};

enum class Phase { TopologicalInsulator, BandInsulator, Critical };

using HamiltonianMatrix = std::array<std::array<std::complex<double>, 4>, 4>;

// Positive-band energies at radial momentum k >= 0 and field potential u.
// Throws std::invalid_argument on non-finite input, k < 0, or lambda <= 0.
BandPair band_energies(double k_meV, double u_meV, const MaterialParams& p);

// Band gap at k = 0: 2 * |lambda - |u||. Closes at |u| = lambda.
double band_gap(double u_meV, const MaterialParams& p);

// Phase classification against the critical field |u| = lambda.
// The comparison is exact; no tolerance band.
Phase classify_phase(double u_meV, const MaterialParams& p);

const char* phase_name(Phase phase);

// Low-energy 4x4 Bloch Hamiltonian at (kx, ky) in valley eta = +1 or -1.
// Diagonal (eta*lambda + u, -eta*lambda + u, -eta*lambda - u, eta*lambda - u),
// off-diagonal couplings kx +- i*eta*ky. Hermitian; eigenvalues are
// {+-e1, +-e2} of band_energies(sqrt(kx^2 + ky^2), u).
HamiltonianMatrix hamiltonian_matrix(double kx_meV, double ky_meV, int eta,
                                     double u_meV, const MaterialParams& p);

}  // namespace topoheat

#endif
