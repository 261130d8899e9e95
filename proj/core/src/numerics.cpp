#include "landau/numerics.hpp"

#include <cmath>
#include <string>

#include "landau/errors.hpp"

namespace landau {

double hermite_poly(int n, double t) {
  if (n < 0) throw InvalidArgument("hermite_poly: n must be non-negative");
  if (n == 0) return 1.0;
  double prev = 1.0;
  double cur = 2.0 * t;
  for (int k = 1; k < n; ++k) {
    const double next = 2.0 * t * cur - 2.0 * k * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

namespace {

template <typename T>
T laguerre_impl(int n, double alpha, T t) {
  if (n < 0) throw InvalidArgument("laguerre_poly: n must be non-negative");
  if (!(alpha > -1.0)) throw InvalidArgument("laguerre_poly: alpha must exceed -1");
  if (n == 0) return T(1.0);
  T prev(1.0);
  T cur = T(alpha + 1.0) - t;
  for (int k = 1; k < n; ++k) {
    const T next = ((T(2.0 * k + 1.0 + alpha) - t) * cur - T(k + alpha) * prev) / T(k + 1.0);
    prev = cur;
    cur = next;
  }
  return cur;
}

template <typename T>
std::vector<T> hermite_orthonormal_impl(int count, T s) {
  if (count < 0) throw InvalidArgument("hermite_orthonormal: count must be non-negative");
  std::vector<T> p(static_cast<std::size_t>(count));
  if (count == 0) return p;
  p[0] = T(std::pow(kPi, -0.25));
  if (count > 1) p[1] = T(std::sqrt(2.0)) * s * p[0];
  for (int k = 1; k + 1 < count; ++k) {
    p[k + 1] = T(std::sqrt(2.0 / (k + 1))) * s * p[k] - T(std::sqrt(double(k) / (k + 1))) * p[k - 1];
  }
  return p;
}

}  // namespace

double laguerre_poly(int n, double alpha, double t) { return laguerre_impl<double>(n, alpha, t); }

Complex laguerre_poly(int n, double alpha, Complex t) { return laguerre_impl<Complex>(n, alpha, t); }

std::vector<double> hermite_orthonormal(int count, double s) {
  return hermite_orthonormal_impl<double>(count, s);
}

std::vector<Complex> hermite_orthonormal(int count, Complex s) {
  return hermite_orthonormal_impl<Complex>(count, s);
}

double hermite_function(int n, double t) {
  if (n < 0) throw InvalidArgument("hermite_function: n must be non-negative");
  // Recur on the functions themselves so large |t| underflows gracefully
  // instead of overflowing the polynomial part.
  double prev = std::pow(kPi, -0.25) * std::exp(-0.5 * t * t);
  if (n == 0) return prev;
  double cur = std::sqrt(2.0) * t * prev;
  for (int k = 1; k < n; ++k) {
    const double next = std::sqrt(2.0 / (k + 1)) * t * cur - std::sqrt(double(k) / (k + 1)) * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

double binomial(double a, int k) {
  if (k < 0) return 0.0;
  // Product form is exact enough for the small k used here and handles
  // negative and non-integer a without Gamma poles.
  double out = 1.0;
  for (int i = 0; i < k; ++i) out *= (a - i) / (i + 1);
  return out;
}

double gauss_2f1(double a, double b, double c, double x) {
  auto nonpos_int = [](double v) { return v <= 0.0 && v == std::floor(v); };
  const bool terminates = nonpos_int(a) || nonpos_int(b);
  if (!terminates && !(x >= 0.0 && x < 1.0)) {
    throw InvalidArgument("gauss_2f1: non-terminating series requires x in [0, 1)");
  }
  double sum = 1.0;
  double term = 1.0;
  for (int k = 0; k < 1000000; ++k) {
    const double num = (a + k) * (b + k);
    if (num == 0.0) return sum;
    const double den = (c + k) * (k + 1.0);
    if (den == 0.0) throw InvalidArgument("gauss_2f1: c is a non-positive integer");
    term *= num / den * x;
    sum += term;
    if (!terminates && std::abs(term) <= 1e-17 * std::abs(sum)) return sum;
  }
  if (terminates) return sum;
  throw InvalidArgument("gauss_2f1: series did not converge");
}

double default_cauchy_radius(Complex z0) {
  return z0.imag() > 0.0 ? std::min(0.25, z0.imag() / 2.0) : 0.25;
}

Complex cauchy_derivative(const std::function<Complex(Complex)>& f, Complex z0, int k,
                          const CauchyOptions& options) {
  if (k < 0) throw InvalidArgument("cauchy_derivative: k must be non-negative");
  if (options.points < 32) throw InvalidArgument("cauchy_derivative: need at least 32 points");
  const double rho = options.radius.value_or(default_cauchy_radius(z0));
  if (!(rho > 0.0)) throw InvalidArgument("cauchy_derivative: radius must be positive");
  if (options.require_upper_half_plane && z0.imag() - rho <= 0.0) {
    throw InvalidArgument("cauchy_derivative: circle leaves the upper half-plane");
  }
  const int n = options.points;
  Complex acc = 0.0;
  for (int j = 0; j < n; ++j) {
    const double theta = 2.0 * kPi * j / n;
    const Complex value = f(z0 + std::polar(rho, theta));
    if (!std::isfinite(value.real()) || !std::isfinite(value.imag())) {
      throw QuadratureError("cauchy_derivative: non-finite sample at node " + std::to_string(j),
                            static_cast<std::size_t>(j));
    }
    acc += value * std::polar(1.0, -k * theta);
  }
  return acc * std::exp(std::lgamma(k + 1.0) - k * std::log(rho)) / double(n);
}

}  // namespace landau
