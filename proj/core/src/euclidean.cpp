#include "landau/euclidean.hpp"

#include <cmath>
#include <string>

#include "landau/errors.hpp"

namespace landau {

void EuclidLevelSpec::validate() const {
  if (!(B > 0.0) || !std::isfinite(B)) throw InvalidArgument("field strength B must be positive");
  if (n < 0) throw InvalidArgument("level index n must be non-negative");
}

double euclid_level(const EuclidLevelSpec& spec) {
  spec.validate();
  return (spec.n + 0.5) * spec.B;
}

Complex eigenbasis_e1(int i, int n, double B, Complex z) {
  if (i < 0 || n < 0) throw InvalidArgument("eigenbasis_e1: indices must be non-negative");
  if (i > n) throw InvalidArgument("eigenbasis_e1: requires i <= n");
  if (!(B > 0.0)) throw InvalidArgument("eigenbasis_e1: B must be positive");
  const double pref = std::exp(0.5 * (std::lgamma(n + 1.0) - std::lgamma(n - i + 1.0)) + 0.5 * (i + 1) * std::log(B));
  return pref * std::pow(z, i) * laguerre_poly(n, double(i), B * std::norm(z));
}

Complex eigenbasis_e2(int j, int n, double B, Complex z) {
  if (j < 0 || n < 0) throw InvalidArgument("eigenbasis_e2: indices must be non-negative");
  if (!(B > 0.0)) throw InvalidArgument("eigenbasis_e2: B must be positive");
  const double pref = std::exp(0.5 * (std::lgamma(j + 1.0) - std::lgamma(j + n + 1.0)) + 0.5 * (n - 1) * std::log(B));
  return pref * std::pow(std::conj(z), n) * laguerre_poly(j, double(n), B * std::norm(z));
}

namespace {

double hermite_norm(int n) {
  return std::exp(-0.5 * (0.5 * std::log(kPi) + n * std::log(2.0) + std::lgamma(n + 1.0)));
}

}  // namespace

Complex cs_wavefunction(const EuclidLevelSpec& spec, PhasePoint p, double t) {
  spec.validate();
  const double sb = std::sqrt(spec.B);
  const double u = t - sb * p.x;
  const Complex expo(-0.5 * u * u, -sb * t * p.y + 0.5 * spec.B * p.x * p.y);
  return hermite_norm(spec.n) * std::exp(expo) * hermite_poly(spec.n, u);
}

CoherentTransformV::CoherentTransformV(EuclidLevelSpec spec, int nodes)
    : spec_(spec), rule_(gauss_hermite(nodes)), norm_(hermite_norm(spec.n)) {
  spec_.validate();
  scaled_weights_.resize(rule_.size());
  for (std::size_t k = 0; k < rule_.size(); ++k) {
    scaled_weights_[k] = rule_.weights[k] * std::exp(rule_.nodes[k] * rule_.nodes[k]);
  }
}

Complex CoherentTransformV::operator()(const LineFunction& phi, PhasePoint p) const {
  const double sb = std::sqrt(spec_.B);
  const double c = sb * p.x;
  // Centre the Gaussian product at c/2 and let the rule absorb e^{-s^2}.
  const double centre = 0.5 * c;
  Complex acc = 0.0;
  for (std::size_t k = 0; k < rule_.size(); ++k) {
    const double t = rule_.nodes[k] + centre;
    const double u = t - c;
    const Complex conj_state = std::exp(Complex(-0.5 * u * u, sb * t * p.y - 0.5 * spec_.B * p.x * p.y)) *
                               hermite_poly(spec_.n, u);
    const Complex value = phi(t);
    if (!std::isfinite(value.real()) || !std::isfinite(value.imag())) {
      throw QuadratureError("transform_V: non-finite integrand at node " + std::to_string(k), k);
    }
    acc += scaled_weights_[k] * conj_state * value;
  }
  return norm_ * acc;
}

Complex transform_V(const EuclidLevelSpec& spec, const LineFunction& phi, PhasePoint p, int nodes) {
  return CoherentTransformV(spec, nodes)(phi, p);
}

BargmannTransform::BargmannTransform(int n, int nodes) : n_(n), rule_(gauss_hermite(nodes)) {
  if (n < 0) throw InvalidArgument("bargmann_Bn: n must be non-negative");
  scaled_weights_.resize(rule_.size());
  for (std::size_t k = 0; k < rule_.size(); ++k) {
    scaled_weights_[k] = rule_.weights[k] * std::exp(rule_.nodes[k] * rule_.nodes[k]);
  }
  const LineFunction hn = [n](double t) { return Complex(hermite_function(n, t)); };
  const double raw_norm = space_norm_squared([&](Complex w) { return raw(hn, w); });
  if (!(raw_norm > 0.0)) throw QuadratureError("bargmann_Bn: calibration norm vanished");
  c_n_ = 1.0 / std::sqrt(raw_norm);
}

double BargmannTransform::closed_form_normalization(int n) { return hermite_norm(n); }

Complex BargmannTransform::raw(const LineFunction& phi, Complex w) const {
  const double shift = std::sqrt(2.0) * w.real();  // w + conj(w) over sqrt 2
  const double centre = w.real() / std::sqrt(2.0);
  const double sign = (n_ % 2 == 0) ? 1.0 : -1.0;
  Complex acc = 0.0;
  for (std::size_t k = 0; k < rule_.size(); ++k) {
    const double t = rule_.nodes[k] + centre;
    const Complex kernel = std::exp(-0.5 * t * t + std::sqrt(2.0) * t * w - 0.5 * w * w);
    const Complex value = phi(t);
    if (!std::isfinite(value.real()) || !std::isfinite(value.imag())) {
      throw QuadratureError("bargmann_Bn: non-finite integrand at node " + std::to_string(k), k);
    }
    acc += scaled_weights_[k] * value * kernel * hermite_poly(n_, t - shift);
  }
  return sign * acc;
}

Complex BargmannTransform::operator()(const LineFunction& phi, Complex w) const { return c_n_ * raw(phi, w); }

double BargmannTransform::space_norm_squared(const std::function<Complex(Complex)>& F, int radial_nodes,
                                             int angular_nodes) {
  const QuadratureRule radial = gauss_laguerre(radial_nodes, 0.0);
  const QuadratureRule angular = trapezoid(angular_nodes, 0.0, 2.0 * kPi, true);
  double acc = 0.0;
  for (std::size_t i = 0; i < radial.size(); ++i) {
    const double r = std::sqrt(radial.nodes[i]);
    double ring = 0.0;
    for (std::size_t j = 0; j < angular.size(); ++j) ring += angular.weights[j] * std::norm(F(std::polar(r, angular.nodes[j])));
    acc += radial.weights[i] * ring;
  }
  // dA = (1/2) du dtheta with u = |w|^2.
  return acc / (2.0 * kPi);
}

Complex bargmann_Bn(int n, const LineFunction& phi, Complex w, int nodes) {
  return BargmannTransform(n, nodes)(phi, w);
}

}  // namespace landau
