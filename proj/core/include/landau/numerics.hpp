#pragma once

// Special functions, quadrature rules, contour differentiation and a dense
// Hermitian eigensolver. Everything here is pure and reentrant.

#include <complex>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace landau {

using Complex = std::complex<double>;

/// A function on the real line, sampled at quadrature nodes.
using LineFunction = std::function<Complex(double)>;

inline constexpr double kPi = 3.14159265358979323846264338327950288;

/// Default node count for Gauss-Hermite and Gauss-Laguerre rules.
inline constexpr int kDefaultNodes = 128;

// ---------------------------------------------------------------------------
// Orthogonal polynomials

/// Physicists' Hermite polynomial H_n(t) by three-term recurrence.
double hermite_poly(int n, double t);

/// Generalized Laguerre polynomial L_n^(alpha)(t), alpha > -1.
double laguerre_poly(int n, double alpha, double t);
Complex laguerre_poly(int n, double alpha, Complex t);

/// Orthonormal Hermite polynomial parts p_0..p_{count-1} at s, i.e.
/// p_k(s) = H_k(s) / sqrt(sqrt(pi) 2^k k!). Multiplying by exp(-s^2/2)
/// gives the L2-normalized Hermite functions.
std::vector<double> hermite_orthonormal(int count, double s);
std::vector<Complex> hermite_orthonormal(int count, Complex s);

/// L2(R)-normalized Hermite function h_n(t) = e^{-t^2/2} H_n(t) / sqrt(sqrt(pi) 2^n n!).
double hermite_function(int n, double t);

/// Generalized binomial coefficient C(a, k) = Gamma(a+1) / (Gamma(k+1) Gamma(a-k+1))
/// for real a and integer k >= 0 (zero when a-k is a negative integer).
double binomial(double a, int k);

/// Gauss hypergeometric 2F1(a, b; c; x) by its power series.
/// Terminating series (a or b a non-positive integer) are summed exactly for
/// any x; otherwise x must lie in [0, 1).
double gauss_2f1(double a, double b, double c, double x);

// ---------------------------------------------------------------------------
// Quadrature

struct GaussHermite {};
struct GaussLaguerre {
  double alpha = 0.0;
};
struct GaussLegendre {
  double lo = -1.0;
  double hi = 1.0;
};
struct Trapezoid {
  double lo = 0.0;
  double hi = 1.0;
  bool periodic = false;
};
using QuadratureKind = std::variant<GaussHermite, GaussLaguerre, GaussLegendre, Trapezoid>;

/// Nodes/weights pair. For Gauss-Hermite the weight e^{-t^2} is implicit;
/// for Gauss-Laguerre the weight t^alpha e^{-t} is implicit.
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
  QuadratureKind kind;

  std::size_t size() const { return nodes.size(); }
};

QuadratureRule gauss_hermite(int count = kDefaultNodes);
QuadratureRule gauss_laguerre(int count = kDefaultNodes, double alpha = 0.0);
QuadratureRule gauss_legendre(int count, double lo, double hi);
/// Composite trapezoid rule with both endpoints as nodes. With periodic set,
/// the right endpoint is dropped and all weights are equal (spectrally
/// accurate for smooth periodic integrands).
QuadratureRule trapezoid(int count, double lo, double hi, bool periodic = false);

/// sum_i w_i f(t_i). Throws QuadratureError naming the node when f is not finite.
Complex integrate(const QuadratureRule& rule, const std::function<Complex(double)>& f);

// ---------------------------------------------------------------------------
// Contour differentiation

struct CauchyOptions {
  std::optional<double> radius;  // default min(0.25, Im(z0)/2)
  int points = 64;
  bool require_upper_half_plane = false;
};

/// k-th derivative of an analytic f at z0 from trapezoid samples on a circle.
Complex cauchy_derivative(const std::function<Complex(Complex)>& f, Complex z0, int k,
                          const CauchyOptions& options = {});

/// Radius cauchy_derivative uses when none is given.
double default_cauchy_radius(Complex z0);

// ---------------------------------------------------------------------------
// Dense Hermitian eigenproblem

class HermitianMatrix {
 public:
  explicit HermitianMatrix(std::size_t dim);
  /// Row-major entries; rejects input that is not Hermitian to 1e-12 relative.
  HermitianMatrix(std::size_t dim, std::vector<Complex> entries);

  static HermitianMatrix identity(std::size_t dim);

  std::size_t dim() const { return dim_; }
  Complex operator()(std::size_t row, std::size_t col) const { return entries_[row * dim_ + col]; }
  Complex& at(std::size_t row, std::size_t col) { return entries_[row * dim_ + col]; }
  std::span<const Complex> entries() const { return entries_; }

  /// Leading block of size k.
  HermitianMatrix leading(std::size_t k) const;
  double frobenius_norm() const;

  /// Deviation from Hermitian symmetry relative to the Frobenius norm.
  double hermitian_defect() const;

 private:
  std::size_t dim_;
  std::vector<Complex> entries_;
};

struct EigenDecomposition {
  std::vector<double> values;    // ascending
  std::vector<Complex> vectors;  // column-major, dim x dim; column j pairs with values[j]

  Complex vector(std::size_t row, std::size_t col) const { return vectors[col * values.size() + row]; }
};

/// Cyclic Jacobi diagonalization.
EigenDecomposition eigh(const HermitianMatrix& m);

}  // namespace landau
