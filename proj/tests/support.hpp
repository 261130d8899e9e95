#pragma once

// Numerical experiments shared by the unit tests and the acceptance runner.

#include <string>
#include <vector>

#include "landau/euclidean.hpp"
#include "landau/fuchsian.hpp"
#include "landau/gabor.hpp"
#include "landau/hyperbolic.hpp"

namespace landau::testing {

/// Max over j, k <= max_degree of |<H_j, H_k> - delta 2^j j! sqrt(pi)| / sqrt(norm_j norm_k).
double hermite_orthogonality_error(int max_degree = 20);

/// Same for L_j^(alpha), weight t^alpha e^{-t}.
double laguerre_orthogonality_error(double alpha, int max_degree = 20);

/// int t^alpha L_m^alpha(t) e^{-tu} dt against Gamma(m+1+alpha)/m! ((u-1)/u)^m u^{-(alpha+1)},
/// worst relative error over m <= 10, alpha in {0, 1, 2.5}, u in {1, 2, 3.5}.
double laguerre_laplace_error();

/// Pairwise overlaps of e1_{i,n} (i <= n <= 4) and e2_{j,n} (j <= 4, 1 <= n <= 4)
/// against e^{-B|z|^2} on the disc of radius 8/sqrt(B), normalised by the norms.
double euclid_basis_orthogonality_error(double B);

/// B/(2 pi) times the grid sum of |V[phi]|^2 dx dy over [-8/sqrt(B), 8/sqrt(B)]^2.
double v_grid_energy(const EuclidLevelSpec& spec, const LineFunction& phi, int grid = 121);

/// Normalised correlation of V[h_m] with the (m, n) eigenbasis element of
/// parameter B/2 times e^{-B|z|^2/4}, sampled on a 41 x 41 grid.
double v_basis_correlation(const EuclidLevelSpec& spec, int m);

/// Three radial test functions used for the decomposition checks.
std::vector<std::pair<std::string, RadialFunction>> radial_test_functions();

/// Worst rel_err of proposition1_check on x in {-0.5, 0, 0.5}, y in {0.5, 1, 2}.
double proposition1_worst(const HyperLevelSpec& spec, const RadialFunction& f);

/// |Ber_nu[e^{-t}](iy) - Gamma((nu+5)/2) (1+y)^{-(nu+5)/2}| relative, worst over a small grid.
double bergman_gamma_anchor_error();

/// Worst |Phi_n^alpha - decomposition| over n <= 5, alpha in {0.5, 1, 3} and a t grid.
double laguerre_wavelet_identity_error();

/// Relative error of f(gz) (cz+d)^{-2m} against f(z) over a fixed set of g and z.
double functional_equation_error(const QExpansion& f);

/// max |(gh)z - g(hz)| over products of a fixed list of group elements.
double moebius_composition_error();

/// Number of points among a fixed pseudo-random set whose reduction leaves D
/// or whose returned g^{-1} does not map the output back to the input.
int reduction_failures();

}  // namespace landau::testing
