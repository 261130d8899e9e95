#pragma once

// Gabor systems with Hermite windows on lattices, and a finite-section
// frame-operator scanner used as a completeness indicator.
//
// Windows are the Hermite functions adapted to the 2*pi shift convention,
// h_n(t) = (2 pi)^{1/4} H_n-function(sqrt(2 pi) t), so that
// |<h_0, pi_lambda h_0>| = exp(-pi |lambda|^2 / 2).

#include <string>
#include <utility>
#include <vector>

#include "landau/numerics.hpp"

namespace landau {

/// Lambda = omega1 Z + omega2 Z in the (q, p) plane.
class Lattice {
 public:
  /// Requires Im(omega1 / omega2) > 0.
  Lattice(Complex omega1, Complex omega2);

  /// Square lattice of spacing omega, periods omega1 = i omega, omega2 = omega.
  static Lattice square(double omega);

  Complex omega1() const { return omega1_; }
  Complex omega2() const { return omega2_; }
  /// |det Omega|
  double size() const;

 private:
  Complex omega1_;
  Complex omega2_;
};

struct TFPoint {
  double q = 0.0;
  double p = 0.0;
};

/// t -> e^{2 pi i p t} f(t - q)
LineFunction tf_shift(double q, double p, LineFunction f);

/// Omega (m1, m2) for max(|m1|, |m2|) <= radius, lexicographic in (m1, m2).
std::vector<TFPoint> lattice_points(const Lattice& lattice, int radius);

/// Hermite window h_n on the 2*pi convention (see file comment).
double gabor_window(int n, double t);

/// <h_j, pi_(q,p) h_n> by a Gauss-Hermite rule on the shifted contour.
Complex displacement_element(int j, int n, double q, double p);

/// All <h_j, pi_(q,p) h_n> for j = 0..modes-1 in one pass.
std::vector<Complex> displacement_column(int modes, int n, double q, double p);

/// S[j][k] = sum over lattice_points(lattice, radius) of
/// <h_j, pi h_n> conj(<h_k, pi h_n>), for j, k < modes.
HermitianMatrix frame_operator_section(int n, const Lattice& lattice, int modes, int radius);

enum class FrameClass { frame_like, deficient, inconclusive };

std::string to_string(FrameClass c);

struct FrameEstimate {
  double omega2 = 0.0;
  double lower = 0.0;
  double upper = 0.0;
  int modes_used = 0;
  int interior_modes = 0;
  int lattice_radius = 0;
  FrameClass classification = FrameClass::inconclusive;
};

/// Lower and upper bounds of the frame operator restricted to the first
/// `interior` Hermite modes. The lower bound is the smallest eigenvalue of
/// the Schur complement of the trailing modes, i.e. 1 / lambda_max of the
/// interior block of S^{-1}; the upper bound is lambda_max of the leading
/// interior block.
std::pair<double, double> interior_bounds(const HermitianMatrix& section, int interior);

/// Classification thresholds as fractions of the largest upper bound in the scan.
struct ScanThresholds {
  double frame_relative = 0.1;
  double deficient_relative = 0.02;
};

struct ScanSettings {
  int modes = 40;
  int interior = 20;
  int radius = 14;
  ScanThresholds thresholds{};
  bool parallel = true;
};

/// One estimate per omega^2 on the square lattice of spacing sqrt(omega^2).
std::vector<FrameEstimate> frame_scan(int n, const std::vector<double>& omega2_values,
                                      const ScanSettings& settings = {});

}  // namespace landau
