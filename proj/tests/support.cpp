#include "support.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace landau::testing {

double hermite_orthogonality_error(int max_degree) {
  const QuadratureRule rule = gauss_hermite(2 * max_degree + 2);
  auto norm = [](int j) { return std::exp(j * std::log(2.0) + std::lgamma(j + 1.0) + 0.5 * std::log(kPi)); };
  double worst = 0.0;
  for (int j = 0; j <= max_degree; ++j) {
    for (int k = 0; k <= j; ++k) {
      const double v = integrate(rule, [&](double t) { return Complex(hermite_poly(j, t) * hermite_poly(k, t)); }).real();
      const double expect = j == k ? norm(j) : 0.0;
      worst = std::max(worst, std::abs(v - expect) / std::sqrt(norm(j) * norm(k)));
    }
  }
  return worst;
}

double laguerre_orthogonality_error(double alpha, int max_degree) {
  const QuadratureRule rule = gauss_laguerre(2 * max_degree + 2, alpha);
  auto norm = [alpha](int j) { return std::exp(std::lgamma(j + alpha + 1.0) - std::lgamma(j + 1.0)); };
  double worst = 0.0;
  for (int j = 0; j <= max_degree; ++j) {
    for (int k = 0; k <= j; ++k) {
      const double v =
          integrate(rule, [&](double t) { return Complex(laguerre_poly(j, alpha, t) * laguerre_poly(k, alpha, t)); })
              .real();
      const double expect = j == k ? norm(j) : 0.0;
      worst = std::max(worst, std::abs(v - expect) / std::sqrt(norm(j) * norm(k)));
    }
  }
  return worst;
}

double laguerre_laplace_error() {
  double worst = 0.0;
  for (double alpha : {0.0, 1.0, 2.5}) {
    const QuadratureRule rule = gauss_laguerre(40, alpha);
    for (double u : {1.0, 2.0, 3.5}) {
      for (int m = 0; m <= 10; ++m) {
        // t -> s/u moves the exponential onto the rule's weight.
        const double v =
            integrate(rule, [&](double s) { return Complex(laguerre_poly(m, alpha, s / u)); }).real() /
            std::pow(u, alpha + 1.0);
        const double expect = std::exp(std::lgamma(m + 1.0 + alpha) - std::lgamma(m + 1.0)) *
                              std::pow((u - 1.0) / u, m) * std::pow(u, -(alpha + 1.0));
        const double scale = std::exp(std::lgamma(m + 1.0 + alpha) - std::lgamma(m + 1.0)) * std::pow(u, -(alpha + 1.0));
        worst = std::max(worst, std::abs(v - expect) / (expect != 0.0 ? std::abs(expect) : scale));
      }
    }
  }
  return worst;
}

double euclid_basis_orthogonality_error(double B) {
  std::vector<std::function<Complex(Complex)>> family;
  for (int n = 0; n <= 4; ++n) {
    for (int i = 0; i <= n; ++i) family.push_back([=](Complex z) { return eigenbasis_e1(i, n, B, z); });
  }
  for (int n = 1; n <= 4; ++n) {
    for (int j = 0; j <= 4; ++j) family.push_back([=](Complex z) { return eigenbasis_e2(j, n, B, z); });
  }
  const double R = 8.0 / std::sqrt(B);
  const QuadratureRule radial = gauss_legendre(80, 0.0, R);
  const QuadratureRule angular = trapezoid(64, 0.0, 2.0 * kPi, true);
  std::vector<std::vector<Complex>> samples(family.size());
  std::vector<double> weights;
  for (std::size_t a = 0; a < radial.size(); ++a) {
    const double r = radial.nodes[a];
    for (std::size_t b = 0; b < angular.size(); ++b) {
      const Complex z = std::polar(r, angular.nodes[b]);
      weights.push_back(radial.weights[a] * angular.weights[b] * r * std::exp(-B * r * r));
      for (std::size_t f = 0; f < family.size(); ++f) samples[f].push_back(family[f](z));
    }
  }
  auto inner = [&](std::size_t f, std::size_t g) {
    Complex acc = 0.0;
    for (std::size_t p = 0; p < weights.size(); ++p) acc += weights[p] * std::conj(samples[f][p]) * samples[g][p];
    return acc;
  };
  std::vector<double> norms(family.size());
  for (std::size_t f = 0; f < family.size(); ++f) norms[f] = inner(f, f).real();
  double worst = 0.0;
  for (std::size_t f = 0; f < family.size(); ++f) {
    for (std::size_t g = 0; g < f; ++g) worst = std::max(worst, std::abs(inner(f, g)) / std::sqrt(norms[f] * norms[g]));
  }
  return worst;
}

double v_grid_energy(const EuclidLevelSpec& spec, const LineFunction& phi, int grid) {
  const CoherentTransformV V(spec);
  const double L = 8.0 / std::sqrt(spec.B);
  const double h = 2.0 * L / (grid - 1);
  double sum = 0.0;
  for (int i = 0; i < grid; ++i) {
    for (int j = 0; j < grid; ++j) sum += std::norm(V(phi, {-L + i * h, -L + j * h}));
  }
  return sum * h * h * spec.B / (2.0 * kPi);
}

double v_basis_correlation(const EuclidLevelSpec& spec, int m) {
  const CoherentTransformV V(spec);
  const int n = spec.n;
  const double b = spec.B / 2.0;
  const LineFunction hm = [m](double t) { return Complex(hermite_function(m, t)); };
  auto element = [&](Complex z) -> Complex {
    if (m < n) return eigenbasis_e2(m, n - m, b, z);
    if (m - n <= n) return eigenbasis_e1(m - n, n, b, z);
    // Same closed form past the e1 index range, up to normalisation.
    return std::pow(z, m - n) * laguerre_poly(n, double(m - n), b * std::norm(z));
  };
  const double L = 8.0 / std::sqrt(spec.B);
  double aa = 0.0, bb = 0.0;
  Complex ab = 0.0;
  for (int i = 0; i <= 40; ++i) {
    for (int j = 0; j <= 40; ++j) {
      const double x = -L + i * 2.0 * L / 40.0;
      const double y = -L + j * 2.0 * L / 40.0;
      const Complex z(x, y);
      const Complex a = V(hm, {x, y});
      const Complex e = element(z) * std::exp(-spec.B * std::norm(z) / 4.0);
      aa += std::norm(a);
      bb += std::norm(e);
      ab += std::conj(a) * e;
    }
  }
  return std::abs(ab) / std::sqrt(aa * bb);
}

std::vector<std::pair<std::string, RadialFunction>> radial_test_functions() {
  return {{"exp", RadialFunction::monomial_exp(0.0, 1.0)},
          {"texp", RadialFunction::monomial_exp(1.0, 1.0)},
          {"poly", RadialFunction{0.5, 0.7, [](Complex t) { return 1.0 + t * t; }}}};
}

double proposition1_worst(const HyperLevelSpec& spec, const RadialFunction& f) {
  double worst = 0.0;
  for (double x : {-0.5, 0.0, 0.5}) {
    for (double y : {0.5, 1.0, 2.0}) worst = std::max(worst, proposition1_check(spec, f, {x, y}).rel_err);
  }
  return worst;
}

double bergman_gamma_anchor_error() {
  const RadialFunction h = RadialFunction::monomial_exp(0.0, 1.0);
  double worst = 0.0;
  for (double nu : {0.5, 1.0, 2.3, 4.0}) {
    for (double y : {0.3, 1.0, 2.5}) {
      const double expect = std::exp(std::lgamma((nu + 5.0) / 2.0)) * std::pow(1.0 + y, -(nu + 5.0) / 2.0);
      worst = std::max(worst, std::abs(bergman_transform(nu, h, {0.0, y}) - expect) / expect);
    }
  }
  return worst;
}

double laguerre_wavelet_identity_error() {
  double worst = 0.0;
  for (int n = 0; n <= 5; ++n) {
    for (double alpha : {0.5, 1.0, 3.0}) {
      for (double t : {0.05, 0.3, 1.0, 2.2, 5.0, 9.0}) {
        worst = std::max(worst,
                         std::abs(laguerre_wavelet_fourier(n, alpha, t) - laguerre_wavelet_decomposition(n, alpha, t)));
      }
    }
  }
  return worst;
}

namespace {

std::vector<MoebiusElement> sample_elements() {
  return {MoebiusElement::S(), MoebiusElement::T(),       MoebiusElement::T_inverse(), {2, 1, 7, 4},
          {1, 1, 1, 2},        {5, -2, 3, -1},            {-3, 1, -7, 2},              {13, 5, 18, 7},
          {1, 0, 4, 1},        MoebiusElement::T_power(3)};
}

std::vector<Complex> sample_points() {
  std::mt19937_64 rng(20240601);
  std::uniform_real_distribution<double> ux(-1.5, 1.5);
  std::uniform_real_distribution<double> uy(0.15, 2.0);
  std::vector<Complex> out;
  for (int i = 0; i < 12; ++i) out.emplace_back(ux(rng), uy(rng));
  return out;
}

}  // namespace

double functional_equation_error(const QExpansion& f) {
  double worst = 0.0;
  for (const MoebiusElement& g : sample_elements()) {
    for (Complex z : sample_points()) {
      const Complex lhs = eval_form(f, g.apply(z)) * std::pow(g.cocycle(z), -2 * f.weight_m);
      const Complex rhs = eval_form(f, z);
      worst = std::max(worst, std::abs(lhs - rhs) / std::max(std::abs(rhs), 1e-300));
    }
  }
  return worst;
}

double moebius_composition_error() {
  double worst = 0.0;
  const std::vector<MoebiusElement> gs = sample_elements();
  for (const MoebiusElement& g : gs) {
    for (const MoebiusElement& h : gs) {
      for (Complex z : sample_points()) {
        const UpperHalfPoint p = UpperHalfPoint::from(z);
        const UpperHalfPoint a = moebius_apply(g * h, p);
        const UpperHalfPoint b = moebius_apply(g, moebius_apply(h, p));
        worst = std::max(worst, std::abs(a.z() - b.z()) / std::max(1.0, std::abs(a.z())));
      }
    }
  }
  return worst;
}

int reduction_failures() {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> ux(-50.0, 50.0);
  std::uniform_real_distribution<double> ly(-8.0, 2.0);
  int failures = 0;
  for (int i = 0; i < 2000; ++i) {
    const UpperHalfPoint z{ux(rng), std::pow(10.0, ly(rng))};
    const Reduction r = reduce_to_fundamental(z);
    // g^{-1} is the well-conditioned direction: its derivative at the reduced
    // point is |cz+d|^2, which is tiny when Im z is.
    const Complex back = r.g.inverse().apply(r.point.z());
    const bool inside = in_fundamental_domain(r.point.z());
    const bool consistent = std::abs(back - z.z()) <= 1e-12 * std::max(1.0, std::abs(z.z()));
    if (!inside || !consistent) ++failures;
  }
  return failures;
}

}  // namespace landau::testing
