#include "landau/gabor.hpp"

#include <algorithm>
#include <cmath>
#include <future>

#include "landau/errors.hpp"

namespace landau {

namespace {

const double kRoot2Pi = std::sqrt(2.0 * kPi);

// Column of <h_j, pi h_n> for j < modes using a prebuilt rule.
std::vector<Complex> column_with_rule(const QuadratureRule& rule, int modes, int n, double q, double p) {
  // With s = sqrt(2 pi) t the element becomes an integral of standard Hermite
  // functions, h_j(s) e^{-i w s} h_n(s - a); completing the square moves the
  // Gaussian centre to c = (a - i w)/2, and the contour shift to Re = 0
  // leaves only polynomials against e^{-tau^2}, so nothing oscillates.
  const double a = kRoot2Pi * q;
  const double w = kRoot2Pi * p;
  const Complex c(0.5 * a, -0.5 * w);
  const Complex prefactor = std::exp(Complex(-0.25 * (a * a + w * w), -0.5 * w * a));
  std::vector<Complex> out(static_cast<std::size_t>(modes), Complex(0.0));
  for (std::size_t k = 0; k < rule.size(); ++k) {
    const Complex s = rule.nodes[k] + c;
    const std::vector<Complex> pj = hermite_orthonormal(modes, s);
    const Complex pn = hermite_orthonormal(n + 1, s - a).back();
    const Complex weighted = rule.weights[k] * pn;
    for (int j = 0; j < modes; ++j) out[static_cast<std::size_t>(j)] += pj[static_cast<std::size_t>(j)] * weighted;
  }
  for (Complex& v : out) v *= prefactor;
  return out;
}

int rule_size(int modes) { return 2 * modes + 64; }

}  // namespace

Lattice::Lattice(Complex omega1, Complex omega2) : omega1_(omega1), omega2_(omega2) {
  if (std::abs(omega2) == 0.0 || !((omega1 / omega2).imag() > 0.0)) {
    throw InvalidArgument("Lattice: periods must satisfy Im(omega1/omega2) > 0");
  }
}

Lattice Lattice::square(double omega) {
  if (!(omega > 0.0)) throw InvalidArgument("Lattice::square: spacing must be positive");
  return Lattice(Complex(0.0, omega), Complex(omega, 0.0));
}

double Lattice::size() const {
  return std::abs(omega1_.real() * omega2_.imag() - omega1_.imag() * omega2_.real());
}

LineFunction tf_shift(double q, double p, LineFunction f) {
  return [q, p, f = std::move(f)](double t) { return std::polar(1.0, 2.0 * kPi * p * t) * f(t - q); };
}

std::vector<TFPoint> lattice_points(const Lattice& lattice, int radius) {
  if (radius < 1) throw InvalidArgument("lattice_points: radius must be at least 1");
  std::vector<TFPoint> out;
  out.reserve(static_cast<std::size_t>((2 * radius + 1) * (2 * radius + 1)));
  for (int m1 = -radius; m1 <= radius; ++m1) {
    for (int m2 = -radius; m2 <= radius; ++m2) {
      const Complex z = double(m1) * lattice.omega1() + double(m2) * lattice.omega2();
      out.push_back({z.real(), z.imag()});
    }
  }
  return out;
}

double gabor_window(int n, double t) { return std::pow(2.0 * kPi, 0.25) * hermite_function(n, kRoot2Pi * t); }

Complex displacement_element(int j, int n, double q, double p) {
  if (j < 0 || n < 0) throw InvalidArgument("displacement_element: indices must be non-negative");
  const int modes = j + 1;
  const QuadratureRule rule = gauss_hermite(rule_size(std::max(j, n) + 1));
  return column_with_rule(rule, modes, n, q, p).back();
}

std::vector<Complex> displacement_column(int modes, int n, double q, double p) {
  if (modes < 1 || n < 0) throw InvalidArgument("displacement_column: bad mode count or index");
  return column_with_rule(gauss_hermite(rule_size(std::max(modes, n + 1))), modes, n, q, p);
}

HermitianMatrix frame_operator_section(int n, const Lattice& lattice, int modes, int radius) {
  if (n < 0) throw InvalidArgument("frame_operator_section: n must be non-negative");
  if (modes < n + 2) throw InvalidArgument("frame_operator_section: need modes >= n + 2");
  if (radius < 2) throw InvalidArgument("frame_operator_section: need radius >= 2");
  const QuadratureRule rule = gauss_hermite(rule_size(modes));
  const auto m = static_cast<std::size_t>(modes);
  HermitianMatrix section(m);
  for (const TFPoint& pt : lattice_points(lattice, radius)) {
    const std::vector<Complex> col = column_with_rule(rule, modes, n, pt.q, pt.p);
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k) section.at(j, k) += col[j] * std::conj(col[k]);
  }
  return section;
}

std::string to_string(FrameClass c) {
  switch (c) {
    case FrameClass::frame_like:
      return "frame_like";
    case FrameClass::deficient:
      return "deficient";
    case FrameClass::inconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

std::pair<double, double> interior_bounds(const HermitianMatrix& section, int interior) {
  const auto dim = section.dim();
  if (interior < 1 || static_cast<std::size_t>(interior) > dim) {
    throw InvalidArgument("interior_bounds: interior size out of range");
  }
  const auto k = static_cast<std::size_t>(interior);
  const double upper = eigh(section.leading(k)).values.back();

  const EigenDecomposition full = eigh(section);
  const double top = full.values.back();
  if (!(top > 0.0)) return {0.0, std::max(upper, 0.0)};
  const double floor = 1e-15 * top;
  HermitianMatrix inv_block(k);
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t c = 0; c < k; ++c) {
      Complex acc = 0.0;
      for (std::size_t e = 0; e < dim; ++e) {
        acc += full.vector(r, e) * std::conj(full.vector(c, e)) / std::max(full.values[e], floor);
      }
      inv_block.at(r, c) = acc;
    }
  }
  for (std::size_t r = 0; r < k; ++r) {
    inv_block.at(r, r) = inv_block(r, r).real();
    for (std::size_t c = r + 1; c < k; ++c) inv_block.at(c, r) = std::conj(inv_block(r, c));
  }
  const double lower = 1.0 / eigh(inv_block).values.back();
  return {std::min(lower, upper), upper};
}

std::vector<FrameEstimate> frame_scan(int n, const std::vector<double>& omega2_values, const ScanSettings& settings) {
  if (settings.interior < 1 || settings.interior >= settings.modes) {
    throw InvalidArgument("frame_scan: interior must be positive and less than modes");
  }
  for (double w2 : omega2_values) {
    if (!(w2 > 0.0)) throw InvalidArgument("frame_scan: omega^2 values must be positive");
  }
  auto one = [&](double w2) {
    const HermitianMatrix s = frame_operator_section(n, Lattice::square(std::sqrt(w2)), settings.modes, settings.radius);
    const auto [lower, upper] = interior_bounds(s, settings.interior);
    FrameEstimate e;
    e.omega2 = w2;
    e.lower = lower;
    e.upper = upper;
    e.modes_used = settings.modes;
    e.interior_modes = settings.interior;
    e.lattice_radius = settings.radius;
    return e;
  };

  std::vector<FrameEstimate> out;
  out.reserve(omega2_values.size());
  if (settings.parallel) {
    std::vector<std::future<FrameEstimate>> jobs;
    jobs.reserve(omega2_values.size());
    for (double w2 : omega2_values) jobs.push_back(std::async(std::launch::async, one, w2));
    for (auto& j : jobs) out.push_back(j.get());
  } else {
    for (double w2 : omega2_values) out.push_back(one(w2));
  }

  double top = 0.0;
  for (const FrameEstimate& e : out) top = std::max(top, e.upper);
  for (FrameEstimate& e : out) {
    if (e.lower > settings.thresholds.frame_relative * top) {
      e.classification = FrameClass::frame_like;
    } else if (e.lower < settings.thresholds.deficient_relative * top) {
      e.classification = FrameClass::deficient;
    } else {
      e.classification = FrameClass::inconclusive;
    }
  }
  return out;
}

}  // namespace landau
