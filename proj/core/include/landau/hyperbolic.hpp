#pragma once

// Hyperbolic Landau levels on the upper half-plane: levels, affine coherent
// states, the transform W_{B,n}, the Bergman transform, Laguerre wavelets and
// the reproducing kernel of each eigenspace.

#include <functional>
#include <vector>

#include "landau/numerics.hpp"

namespace landau {

struct HyperLevelSpec {
  double B = 1.0;
  int n = 0;

  /// Throws NoBoundStates when 2B <= 1 and InvalidArgument when n is
  /// outside 0..floor(B - 1/2).
  void validate() const;
  /// alpha = 2(B - n) - 1
  double alpha() const { return 2.0 * (B - n) - 1.0; }
  /// c_{B,n} = 1 / (2(B - n) - 1)
  double c_Bn() const { return 1.0 / alpha(); }
  /// gamma_{B,n} = c_{B,n} Gamma(2B - n) / n!
  double gamma_Bn() const;
};

/// floor(B - 1/2), the largest admissible level index; requires 2B > 1.
int max_level_index(double B);

struct UpperHalfPoint {
  double x = 0.0;
  double y = 1.0;

  Complex z() const { return {x, y}; }
  static UpperHalfPoint from(Complex z);
};

/// phi(t) = t^power e^{-rate t} smooth(t) on t > 0.
///
/// `smooth` must be analytic in the right half-plane and accept complex
/// arguments: transforms rotate the integration contour off the real axis.
struct RadialFunction {
  double power = 0.0;
  double rate = 0.0;
  std::function<Complex(Complex)> smooth = [](Complex) { return Complex(1.0); };

  enum class Decay { exponential, polynomial };
  Decay decay() const { return rate > 0.0 ? Decay::exponential : Decay::polynomial; }

  Complex operator()(double t) const;
  Complex operator()(Complex t) const;

  static RadialFunction zero();
  /// t^power e^{-rate t}
  static RadialFunction monomial_exp(double power, double rate);
};

/// [(B - n)(1 - B + n) for n = 0..floor(B - 1/2)]
std::vector<double> hyper_levels(double B);

/// (Gamma(2B-n)/n!)^{-1/2} (t y)^{B-n} e^{-t(y - i x)/2} L_n^{(2B-2n-1)}(t y)
Complex cs_wavefunction_hyp(const HyperLevelSpec& spec, UpperHalfPoint p, double t);

/// The state at (0, 1) as a RadialFunction.
RadialFunction hyper_reference_state(const HyperLevelSpec& spec);

/// int_0^inf |phi(t)|^2 dt / t by Gauss-Laguerre; phi must have rate > 0.
double radial_norm_squared(const RadialFunction& phi, int nodes = kDefaultNodes);

/// W_{B,n}[phi](x, y) = c_{B,n}^{-1/2} int conj(<t|(x,y),B,n>) phi(t) dt / t.
///
/// Binds the level and the function so the Gauss-Laguerre rule is built once
/// for any number of evaluation points. The contour is rotated onto the ray
/// through 1/c, c = rate + (y + ix)/2.
class TransformW {
 public:
  TransformW(HyperLevelSpec spec, RadialFunction phi, int nodes = kDefaultNodes);

  Complex operator()(UpperHalfPoint p) const;
  const HyperLevelSpec& spec() const { return spec_; }

 private:
  HyperLevelSpec spec_;
  RadialFunction phi_;
  QuadratureRule rule_;
  double prefactor_;
};

Complex transform_W(const HyperLevelSpec& spec, const RadialFunction& phi, UpperHalfPoint p,
                    int nodes = kDefaultNodes);

/// int int |W[phi]|^2 y^{-2} dx dy / (4 pi) over [-half_width, half_width] x [y_min, y_max].
/// The 1/(4 pi) makes W an isometry from L^2(R+, dt/t).
double transform_W_energy(const HyperLevelSpec& spec, const RadialFunction& phi, double half_width = 20.0,
                          double y_min = 0.01, double y_max = 20.0, int x_nodes = 801, int y_nodes = 401,
                          int nodes = 64);

/// d^k/dz^k of int_0^inf t^{(nu+3)/2} h(t) e^{izt} dt, by differentiation
/// under the integral ((it)^k inserted). k = 0 gives Ber_nu[h](z).
/// Rules for derivative orders 0..max_derivative are built up front.
class BergmanTransform {
 public:
  BergmanTransform(double nu, RadialFunction h, int max_derivative = 0, int nodes = kDefaultNodes);

  /// Requires Im z > 0 and k <= max_derivative.
  Complex operator()(Complex z, int k = 0) const;
  double nu() const { return nu_; }

 private:
  double nu_;
  RadialFunction h_;
  std::vector<QuadratureRule> rules_;
};

Complex bergman_transform(double nu, const RadialFunction& h, UpperHalfPoint z, int nodes = kDefaultNodes);

/// Fourier side of the Laguerre wavelet: t^{(alpha+1)/2} e^{-t} L_n^alpha(2t).
double laguerre_wavelet_fourier(int n, double alpha, double t);

/// sum_k (-2)^k / k! C(n + alpha, n - k) F Phi_0^{alpha + 2k}(t)
double laguerre_wavelet_decomposition(int n, double alpha, double t);

struct Proposition1Result {
  Complex lhs;
  Complex rhs;
  double rel_err = 0.0;
  /// Largest relative gap between the two derivative evaluations.
  double derivative_gap = 0.0;
};

/// Compares W_{B,n}[f](z) with the decomposition into derivatives of the
/// Bergman transform F = Ber_{2(B-n)-1}[f~], f~(s) = f(2s)/s^2, evaluated at
/// w = -conj(z):
///
///   gamma^{-1/2} 2^{B-n} sqrt(y) sum_k (2i)^k/k! C(2B-n-1, n-k) y^{B-n-1/2+k} F^{(k)}(w).
///
/// Each F^{(k)} is computed under the integral and by cauchy_derivative; a
/// relative disagreement above derivative_tol throws QuadratureError.
Proposition1Result proposition1_check(const HyperLevelSpec& spec, const RadialFunction& f, UpperHalfPoint z,
                                      int nodes = kDefaultNodes, double derivative_tol = 1e-6);

/// K_{n,B}(z, zeta), with every m of the printed kernel read as n and
/// principal branches throughout.
Complex reproducing_kernel(const HyperLevelSpec& spec, UpperHalfPoint z, UpperHalfPoint zeta);

/// e^{i pi B} 4^B (Im z Im zeta)^B / (z - conj(zeta))^{2B}
Complex reproducing_kernel_ground(double B, UpperHalfPoint z, UpperHalfPoint zeta);

}  // namespace landau
