#pragma once

// Euclidean Landau levels: eigenbasis, coherent states and the transforms
// V_{B,n} (phase space) and B_n (true-polyanalytic Bargmann).

#include <functional>

#include "landau/numerics.hpp"

namespace landau {

struct EuclidLevelSpec {
  double B = 1.0;
  int n = 0;

  /// Throws InvalidArgument unless B > 0 and n >= 0.
  void validate() const;
};

/// Phase-space point, identified with z = x + iy.
struct PhasePoint {
  double x = 0.0;
  double y = 0.0;

  Complex z() const { return {x, y}; }
};

/// (n + 1/2) B
double euclid_level(const EuclidLevelSpec& spec);

/// sqrt(n!/(n-i)!) B^{(i+1)/2} z^i L_n^{(i)}(B|z|^2), defined for 0 <= i <= n.
Complex eigenbasis_e1(int i, int n, double B, Complex z);

/// sqrt(j!/(j+n)!) B^{(n-1)/2} conj(z)^n L_j^{(n)}(B|z|^2).
Complex eigenbasis_e2(int j, int n, double B, Complex z);

/// Coherent-state wave function <t|(x,y),B,n>.
Complex cs_wavefunction(const EuclidLevelSpec& spec, PhasePoint p, double t);

/// V_{B,n}[phi](x,y) = integral of conj(<t|(x,y),B,n>) phi(t) dt.
///
/// The Gauss-Hermite rule is built once; evaluate at many points through
/// the same object. The isometry holds for the measure (B / 2 pi) dx dy.
class CoherentTransformV {
 public:
  explicit CoherentTransformV(EuclidLevelSpec spec, int nodes = kDefaultNodes);

  Complex operator()(const LineFunction& phi, PhasePoint p) const;
  const EuclidLevelSpec& spec() const { return spec_; }

 private:
  EuclidLevelSpec spec_;
  QuadratureRule rule_;
  std::vector<double> scaled_weights_;  // w_k e^{s_k^2}
  double norm_;
};

Complex transform_V(const EuclidLevelSpec& spec, const LineFunction& phi, PhasePoint p,
                    int nodes = kDefaultNodes);

/// True-polyanalytic Bargmann transform B_n with c_n calibrated so that
/// ||B_n[h_n]|| = 1 in A_{pi,n}(C), normed by (1/pi) int |F|^2 e^{-|w|^2} dA.
class BargmannTransform {
 public:
  explicit BargmannTransform(int n, int nodes = kDefaultNodes);

  Complex operator()(const LineFunction& phi, Complex w) const;

  int n() const { return n_; }
  /// Calibrated c_n.
  double normalization() const { return c_n_; }
  /// (sqrt(pi) 2^n n!)^{-1/2}, the value the calibration should reproduce.
  static double closed_form_normalization(int n);

  /// (1/pi) int |F(w)|^2 e^{-|w|^2} dA by Gauss-Laguerre in |w|^2 and a
  /// periodic trapezoid rule in the angle.
  static double space_norm_squared(const std::function<Complex(Complex)>& F, int radial_nodes = 32,
                                   int angular_nodes = 64);

 private:
  Complex raw(const LineFunction& phi, Complex w) const;

  int n_;
  QuadratureRule rule_;
  std::vector<double> scaled_weights_;
  double c_n_ = 1.0;
};

Complex bargmann_Bn(int n, const LineFunction& phi, Complex w, int nodes = kDefaultNodes);

}  // namespace landau
