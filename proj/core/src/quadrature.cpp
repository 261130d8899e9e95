#include <algorithm>
#include <cmath>
#include <string>

#include "landau/errors.hpp"
#include "landau/numerics.hpp"

namespace landau {

namespace {

// Eigenvalues of the symmetric tridiagonal matrix with diagonal d and
// off-diagonal e (e[i] couples i and i+1), by implicit QL with Wilkinson shifts.
std::vector<double> tridiagonal_eigenvalues(std::vector<double> d, std::vector<double> e) {
  const int n = static_cast<int>(d.size());
  e.resize(static_cast<std::size_t>(n), 0.0);
  e[n - 1] = 0.0;
  for (int l = 0; l < n; ++l) {
    int iter = 0;
    int m = l;
    do {
      for (m = l; m < n - 1; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= 1e-16 * dd) break;
      }
      if (m != l) {
        if (++iter > 60) throw QuadratureError("tridiagonal QL did not converge");
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = std::hypot(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
        double s = 1.0, c = 1.0, p = 0.0;
        int i = m - 1;
        for (; i >= l; --i) {
          double f = s * e[i];
          const double b = c * e[i];
          r = std::hypot(f, g);
          e[i + 1] = r;
          if (r == 0.0) {
            d[i + 1] -= p;
            e[m] = 0.0;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * b;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - b;
        }
        if (r == 0.0 && i >= l) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }
  std::sort(d.begin(), d.end());
  return d;
}

void check_count(int count, const char* who) {
  if (count < 1) throw InvalidArgument(std::string(who) + ": node count must be positive");
}

}  // namespace

QuadratureRule gauss_hermite(int count) {
  check_count(count, "gauss_hermite");
  const auto n = static_cast<std::size_t>(count);
  std::vector<double> diag(n, 0.0), off(n, 0.0);
  for (std::size_t k = 0; k + 1 < n; ++k) off[k] = std::sqrt((k + 1) / 2.0);
  std::vector<double> x = tridiagonal_eigenvalues(diag, off);

  QuadratureRule rule{x, std::vector<double>(n), GaussHermite{}};
  for (std::size_t i = 0; i < n; ++i) {
    double xi = x[i];
    double sum = 0.0;
    for (int pass = 0; pass < 3; ++pass) {
      // Orthonormal recurrence scaled by e^{-x^2/2}.
      double prev = 0.0;
      double cur = std::pow(kPi, -0.25) * std::exp(-0.5 * xi * xi);
      sum = cur * cur;
      for (int k = 0; k + 1 < count; ++k) {
        const double next = (xi * cur - std::sqrt(k / 2.0) * prev) / std::sqrt((k + 1) / 2.0);
        prev = cur;
        cur = next;
        sum += cur * cur;
      }
      // cur = q_{n-1}, prev = q_{n-2}; Newton step needs q_n.
      const double qn = (xi * cur - std::sqrt((count - 1) / 2.0) * prev) / std::sqrt(count / 2.0);
      if (pass == 2 || cur == 0.0) break;
      const double step = qn / (std::sqrt(2.0 * count) * cur);
      if (std::isfinite(step)) xi -= step;
    }
    rule.nodes[i] = xi;
    rule.weights[i] = std::exp(-xi * xi) / sum;
  }
  return rule;
}

QuadratureRule gauss_laguerre(int count, double alpha) {
  check_count(count, "gauss_laguerre");
  if (!(alpha > -1.0)) throw InvalidArgument("gauss_laguerre: alpha must exceed -1");
  const auto n = static_cast<std::size_t>(count);
  std::vector<double> diag(n), off(n, 0.0);
  for (std::size_t k = 0; k < n; ++k) {
    diag[k] = 2.0 * k + alpha + 1.0;
    if (k + 1 < n) off[k] = std::sqrt((k + 1.0) * (k + 1.0 + alpha));
  }
  std::vector<double> x = tridiagonal_eigenvalues(diag, off);

  QuadratureRule rule{x, std::vector<double>(n), GaussLaguerre{alpha}};
  const double p0 = std::exp(-0.5 * std::lgamma(alpha + 1.0));
  for (std::size_t i = 0; i < n; ++i) {
    double xi = x[i];
    // Newton polish on the ratio L_n / L_n', rescaling to avoid overflow.
    for (int pass = 0; pass < 2; ++pass) {
      double prev = 1.0;
      double cur = alpha + 1.0 - xi;
      for (int k = 1; k < count; ++k) {
        const double next = ((2.0 * k + 1.0 + alpha - xi) * cur - (k + alpha) * prev) / (k + 1.0);
        prev = cur;
        cur = next;
        if (std::abs(cur) > 1e150) {
          cur *= 1e-150;
          prev *= 1e-150;
        }
      }
      const double deriv_times_x = count * cur - (count + alpha) * prev;
      if (deriv_times_x == 0.0) break;
      const double step = xi * cur / deriv_times_x;
      if (std::isfinite(step)) xi -= step;
    }
    double prev = 0.0;
    double cur = p0 * std::exp(-0.5 * xi);
    double sum = cur * cur;
    for (int k = 0; k + 1 < count; ++k) {
      const double next = ((xi - (2.0 * k + alpha + 1.0)) * cur - std::sqrt(k * (k + alpha)) * prev) /
                          std::sqrt((k + 1.0) * (k + 1.0 + alpha));
      prev = cur;
      cur = next;
      sum += cur * cur;
    }
    rule.nodes[i] = xi;
    rule.weights[i] = std::exp(-xi) / sum;
  }
  return rule;
}

QuadratureRule gauss_legendre(int count, double lo, double hi) {
  check_count(count, "gauss_legendre");
  if (!(hi > lo)) throw InvalidArgument("gauss_legendre: empty interval");
  const auto n = static_cast<std::size_t>(count);
  std::vector<double> diag(n, 0.0), off(n, 0.0);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    const double kk = k + 1.0;
    off[k] = kk / std::sqrt(4.0 * kk * kk - 1.0);
  }
  std::vector<double> x = tridiagonal_eigenvalues(diag, off);

  const double half = 0.5 * (hi - lo);
  const double mid = 0.5 * (hi + lo);
  QuadratureRule rule{std::vector<double>(n), std::vector<double>(n), GaussLegendre{lo, hi}};
  for (std::size_t i = 0; i < n; ++i) {
    double xi = x[i];
    double pn = 0.0, pn1 = 0.0;
    for (int pass = 0; pass < 3; ++pass) {
      pn1 = 1.0;
      pn = xi;
      for (int k = 1; k < count; ++k) {
        const double next = ((2.0 * k + 1.0) * xi * pn - k * pn1) / (k + 1.0);
        pn1 = pn;
        pn = next;
      }
      const double deriv = count * (xi * pn - pn1) / (xi * xi - 1.0);
      if (pass < 2) xi -= pn / deriv;
    }
    const double deriv = count * (xi * pn - pn1) / (xi * xi - 1.0);
    rule.nodes[i] = mid + half * xi;
    rule.weights[i] = half * 2.0 / ((1.0 - xi * xi) * deriv * deriv);
  }
  return rule;
}

QuadratureRule trapezoid(int count, double lo, double hi, bool periodic) {
  if (count < 2) throw InvalidArgument("trapezoid: need at least two nodes");
  if (!(hi > lo)) throw InvalidArgument("trapezoid: empty interval");
  const auto n = static_cast<std::size_t>(count);
  QuadratureRule rule{std::vector<double>(n), std::vector<double>(n), Trapezoid{lo, hi, periodic}};
  const double h = (hi - lo) / (periodic ? count : count - 1);
  for (std::size_t i = 0; i < n; ++i) {
    rule.nodes[i] = lo + h * static_cast<double>(i);
    rule.weights[i] = h;
  }
  if (!periodic) {
    rule.weights.front() *= 0.5;
    rule.weights.back() *= 0.5;
  }
  return rule;
}

Complex integrate(const QuadratureRule& rule, const std::function<Complex(double)>& f) {
  Complex acc = 0.0;
  for (std::size_t i = 0; i < rule.size(); ++i) {
    const Complex v = f(rule.nodes[i]);
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw QuadratureError("integrate: non-finite integrand at node " + std::to_string(i), i);
    }
    acc += rule.weights[i] * v;
  }
  return acc;
}

}  // namespace landau
