#include "landau/hyperbolic.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <string>

#include "landau/errors.hpp"

namespace landau {

namespace {

void check_finite(Complex v, const char* who, std::size_t node) {
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
    throw QuadratureError(std::string(who) + ": non-finite integrand at node " + std::to_string(node), node);
  }
}

double state_norm(const HyperLevelSpec& spec) {
  return std::exp(-0.5 * (std::lgamma(2.0 * spec.B - spec.n) - std::lgamma(spec.n + 1.0)));
}

}  // namespace

int max_level_index(double B) {
  if (!(2.0 * B > 1.0)) throw NoBoundStates("no bound states: need 2B > 1");
  return static_cast<int>(std::floor(B - 0.5));
}

void HyperLevelSpec::validate() const {
  if (!std::isfinite(B)) throw InvalidArgument("field strength B must be finite");
  const int top = max_level_index(B);
  if (n < 0 || n > top) {
    throw InvalidArgument("level index n must lie in 0.." + std::to_string(top) + " for this B");
  }
}

double HyperLevelSpec::gamma_Bn() const {
  return c_Bn() * std::exp(std::lgamma(2.0 * B - n) - std::lgamma(n + 1.0));
}

UpperHalfPoint UpperHalfPoint::from(Complex z) {
  if (!(z.imag() > 0.0)) throw InvalidArgument("point must lie in the upper half-plane");
  return {z.real(), z.imag()};
}

Complex RadialFunction::operator()(double t) const { return (*this)(Complex(t)); }

Complex RadialFunction::operator()(Complex t) const {
  return std::pow(t, power) * std::exp(-rate * t) * smooth(t);
}

RadialFunction RadialFunction::zero() { return {0.0, 1.0, [](Complex) { return Complex(0.0); }}; }

RadialFunction RadialFunction::monomial_exp(double power, double rate) {
  return {power, rate, [](Complex) { return Complex(1.0); }};
}

std::vector<double> hyper_levels(double B) {
  const int top = max_level_index(B);
  std::vector<double> out;
  for (int n = 0; n <= top; ++n) out.push_back((B - n) * (1.0 - B + n));
  return out;
}

Complex cs_wavefunction_hyp(const HyperLevelSpec& spec, UpperHalfPoint p, double t) {
  spec.validate();
  if (!(t > 0.0)) throw InvalidArgument("cs_wavefunction_hyp: t must be positive");
  const double ty = t * p.y;
  return state_norm(spec) * std::pow(ty, spec.B - spec.n) * std::exp(Complex(-0.5 * t * p.y, 0.5 * t * p.x)) *
         laguerre_poly(spec.n, spec.alpha(), ty);
}

RadialFunction hyper_reference_state(const HyperLevelSpec& spec) {
  spec.validate();
  const double norm = state_norm(spec);
  const int n = spec.n;
  const double a = spec.alpha();
  return {spec.B - spec.n, 0.5, [=](Complex t) { return norm * laguerre_poly(n, a, t); }};
}

double radial_norm_squared(const RadialFunction& phi, int nodes) {
  if (!(phi.rate > 0.0)) throw InvalidArgument("radial_norm_squared: needs exponential decay");
  // |phi|^2 / t = t^{2p-1} e^{-2 r t} |g|^2; substitute u = 2 r t.
  const double a = 2.0 * phi.power - 1.0;
  const QuadratureRule rule = gauss_laguerre(nodes, a);
  const double c = 2.0 * phi.rate;
  double acc = 0.0;
  for (std::size_t k = 0; k < rule.size(); ++k) acc += rule.weights[k] * std::norm(phi.smooth(rule.nodes[k] / c));
  return acc * std::pow(c, -(a + 1.0));
}

TransformW::TransformW(HyperLevelSpec spec, RadialFunction phi, int nodes)
    : spec_(spec), phi_(std::move(phi)), rule_(), prefactor_(0.0) {
  spec_.validate();
  const double a = spec_.B - spec_.n - 1.0 + phi_.power;
  if (!(a > -1.0)) throw InvalidArgument("transform_W: integrand not integrable at t = 0");
  rule_ = gauss_laguerre(nodes, a);
  prefactor_ = std::pow(spec_.c_Bn(), -0.5) * state_norm(spec_);
}

Complex TransformW::operator()(UpperHalfPoint p) const {
  if (!(p.y > 0.0)) throw InvalidArgument("transform_W: point must lie in the upper half-plane");
  const GaussLaguerre kind = std::get<GaussLaguerre>(rule_.kind);
  const Complex c = phi_.rate + 0.5 * Complex(p.y, p.x);
  if (!(c.real() > 0.0)) throw InvalidArgument("transform_W: integral does not converge");
  Complex acc = 0.0;
  for (std::size_t k = 0; k < rule_.size(); ++k) {
    const Complex t = rule_.nodes[k] / c;
    const Complex v = laguerre_poly(spec_.n, spec_.alpha(), t * p.y) * phi_.smooth(t);
    check_finite(v, "transform_W", k);
    acc += rule_.weights[k] * v;
  }
  return prefactor_ * std::pow(p.y, spec_.B - spec_.n) * std::pow(c, -(kind.alpha + 1.0)) * acc;
}

Complex transform_W(const HyperLevelSpec& spec, const RadialFunction& phi, UpperHalfPoint p, int nodes) {
  return TransformW(spec, phi, nodes)(p);
}

double transform_W_energy(const HyperLevelSpec& spec, const RadialFunction& phi, double half_width, double y_min,
                          double y_max, int x_nodes, int y_nodes, int nodes) {
  if (!(half_width > 0.0) || !(y_min > 0.0) || !(y_max > y_min)) {
    throw InvalidArgument("transform_W_energy: bad domain");
  }
  const TransformW W(spec, phi, nodes);
  const QuadratureRule xs = trapezoid(x_nodes, -half_width, half_width);
  // y = e^s, so dy / y^2 = ds / y.
  const QuadratureRule ss = trapezoid(y_nodes, std::log(y_min), std::log(y_max));
  std::vector<std::future<double>> rows;
  rows.reserve(ss.size());
  for (std::size_t j = 0; j < ss.size(); ++j) {
    rows.push_back(std::async(std::launch::async, [&, j] {
      const double y = std::exp(ss.nodes[j]);
      double row = 0.0;
      for (std::size_t i = 0; i < xs.size(); ++i) row += xs.weights[i] * std::norm(W({xs.nodes[i], y}));
      return ss.weights[j] * row / y;
    }));
  }
  double total = 0.0;
  for (auto& r : rows) total += r.get();
  return total / (4.0 * kPi);
}

BergmanTransform::BergmanTransform(double nu, RadialFunction h, int max_derivative, int nodes)
    : nu_(nu), h_(std::move(h)) {
  if (!(nu > 0.0)) throw InvalidArgument("bergman_transform: nu must be positive");
  if (max_derivative < 0) throw InvalidArgument("bergman_transform: derivative order must be non-negative");
  const double a = 0.5 * (nu + 3.0) + h_.power;
  if (!(a > -1.0)) throw InvalidArgument("bergman_transform: integrand not integrable at t = 0");
  for (int k = 0; k <= max_derivative; ++k) rules_.push_back(gauss_laguerre(nodes, a + k));
}

Complex BergmanTransform::operator()(Complex z, int k) const {
  if (!(z.imag() > 0.0)) throw InvalidArgument("bergman_transform: Im z must be positive");
  if (k < 0 || static_cast<std::size_t>(k) >= rules_.size()) {
    throw InvalidArgument("bergman_transform: derivative order not prepared");
  }
  const QuadratureRule& rule = rules_[static_cast<std::size_t>(k)];
  const double a = std::get<GaussLaguerre>(rule.kind).alpha;
  // t^a e^{-(rate - i z) t}; rotate onto u = c t.
  const Complex c = h_.rate - Complex(0.0, 1.0) * z;
  Complex acc = 0.0;
  for (std::size_t j = 0; j < rule.size(); ++j) {
    const Complex v = h_.smooth(rule.nodes[j] / c);
    check_finite(v, "bergman_transform", j);
    acc += rule.weights[j] * v;
  }
  return std::pow(Complex(0.0, 1.0), k) * std::pow(c, -(a + 1.0)) * acc;
}

Complex bergman_transform(double nu, const RadialFunction& h, UpperHalfPoint z, int nodes) {
  return BergmanTransform(nu, h, 0, nodes)(z.z(), 0);
}

double laguerre_wavelet_fourier(int n, double alpha, double t) {
  if (!(t > 0.0)) throw InvalidArgument("laguerre_wavelet_fourier: t must be positive");
  return std::pow(t, 0.5 * (alpha + 1.0)) * std::exp(-t) * laguerre_poly(n, alpha, 2.0 * t);
}

double laguerre_wavelet_decomposition(int n, double alpha, double t) {
  if (n < 0) throw InvalidArgument("laguerre_wavelet_decomposition: n must be non-negative");
  if (!(t > 0.0)) throw InvalidArgument("laguerre_wavelet_decomposition: t must be positive");
  double acc = 0.0;
  double pow2 = 1.0;
  double fact = 1.0;
  for (int k = 0; k <= n; ++k) {
    if (k > 0) {
      pow2 *= -2.0;
      fact *= k;
    }
    acc += pow2 / fact * binomial(n + alpha, n - k) * laguerre_wavelet_fourier(0, alpha + 2.0 * k, t);
  }
  return acc;
}

Proposition1Result proposition1_check(const HyperLevelSpec& spec, const RadialFunction& f, UpperHalfPoint z,
                                      int nodes, double derivative_tol) {
  spec.validate();
  if (!(z.y > 0.0)) throw InvalidArgument("proposition1_check: point must lie in the upper half-plane");
  Proposition1Result out;
  out.lhs = TransformW(spec, f, nodes)(z);

  const double B = spec.B;
  const int n = spec.n;
  const double nu = spec.alpha();
  const double p = f.power;
  auto g = f.smooth;
  RadialFunction scaled{p - 2.0, 2.0 * f.rate, [g, p](Complex s) { return std::pow(2.0, p) * g(2.0 * s); }};
  const BergmanTransform F(nu, scaled, n, nodes);
  const Complex w = -std::conj(z.z());

  CauchyOptions opts;
  opts.require_upper_half_plane = true;
  const double rho = default_cauchy_radius(w);
  auto Fz = [&F](Complex v) { return F(v, 0); };
  double circle_max = 0.0;
  for (int j = 0; j < opts.points; ++j) circle_max = std::max(circle_max, std::abs(Fz(w + std::polar(rho, 2.0 * kPi * j / opts.points))));

  Complex sum = 0.0;
  double kfact = 1.0;
  for (int k = 0; k <= n; ++k) {
    if (k > 0) kfact *= k;
    const Complex under = F(w, k);
    const Complex contour = cauchy_derivative(Fz, w, k, opts);
    const double scale = std::max(std::abs(under), kfact * circle_max / std::pow(rho, k));
    const double gap = scale > 0.0 ? std::abs(under - contour) / scale : 0.0;
    out.derivative_gap = std::max(out.derivative_gap, gap);
    if (gap > derivative_tol) {
      throw QuadratureError("proposition1_check: derivative of order " + std::to_string(k) +
                            " disagrees between quadrature and contour integral (relative gap " +
                            std::to_string(gap) + ")");
    }
    sum += std::pow(Complex(0.0, 2.0), k) / kfact * binomial(2.0 * B - n - 1.0, n - k) *
           std::pow(z.y, B - n - 0.5 + k) * under;
  }
  out.rhs = std::pow(spec.gamma_Bn(), -0.5) * std::pow(2.0, B - n) * std::sqrt(z.y) * sum;
  const double denom = std::max(std::abs(out.lhs), std::abs(out.rhs));
  out.rel_err = denom > 0.0 ? std::abs(out.lhs - out.rhs) / denom : 0.0;
  return out;
}

Complex reproducing_kernel(const HyperLevelSpec& spec, UpperHalfPoint z, UpperHalfPoint zeta) {
  spec.validate();
  const double B = spec.B;
  const int n = spec.n;
  const Complex u = z.z() - std::conj(zeta.z());
  const double ratio = std::norm(u) / (4.0 * z.y * zeta.y);
  const double coeff = (n % 2 == 0 ? 1.0 : -1.0) *
                       std::exp(std::lgamma(2.0 * B - n) - std::lgamma(n + 1.0) - std::lgamma(2.0 * B - 2.0 * n));
  const Complex phase = std::pow((zeta.z() - std::conj(z.z())) / u, B);
  const double hyper = gauss_2f1(-2.0 * B - n, -double(n), 2.0 * B - 2.0 * n, 1.0 / ratio);
  return coeff * std::pow(ratio, -B + n) * phase * hyper;
}

Complex reproducing_kernel_ground(double B, UpperHalfPoint z, UpperHalfPoint zeta) {
  max_level_index(B);
  const Complex u = z.z() - std::conj(zeta.z());
  return std::exp(Complex(0.0, kPi * B)) * std::pow(4.0 * z.y * zeta.y, B) / std::pow(u, 2.0 * B);
}

}  // namespace landau
