#include <algorithm>
#include <cmath>
#include <future>
#include <limits>

#include "landau/errors.hpp"
#include "landau/fuchsian.hpp"

namespace landau {

namespace {

struct DiscIntegral {
  double value = 0.0;
  double tail_constant = 0.0;  // max of the density over (1 - |w|^2)^{eps - 1}
};

}  // namespace

WitnessReport incompleteness_witness(const HyperLevelSpec& spec, const AutomorphicForm& form, Complex zeta0,
                                     const std::vector<UpperHalfPoint>& orbit_points, const WitnessOptions& options) {
  spec.validate();
  const double m0 = form.weight_m();
  const int n = spec.n;
  const double limit = (spec.B - n) / (1.0 + n);
  if (!(2.0 * m0 < limit)) {
    throw WitnessRegimeRefused("no witness exists in this regime: 2*m0 = " + std::to_string(2.0 * m0) +
                               " >= (B-n)/(1+n) = " + std::to_string(limit) + ", so the completeness bound is not violated");
  }
  if (!(zeta0.imag() > 0.0)) throw InvalidArgument("incompleteness_witness: zeta0 must lie in the upper half-plane");
  if (options.radii.size() < 3) throw InvalidArgument("incompleteness_witness: need three disc radii");

  WitnessReport rep;
  rep.B = spec.B;
  rep.n = n;
  rep.m0 = m0;
  rep.alpha = spec.alpha();
  rep.epsilon = rep.alpha + 1.0 - 2.0 * m0 * (n + 1);
  rep.zeta0 = zeta0;
  rep.form_at_zeta0 = std::abs(form(zeta0));
  if (!(rep.form_at_zeta0 < options.tol)) {
    throw InvalidArgument("incompleteness_witness: form does not vanish at zeta0 (|F| = " +
                          std::to_string(rep.form_at_zeta0) + ")");
  }

  const double eps = rep.epsilon;
  const Complex I(0.0, 1.0);
  auto H = [&](Complex z) { return std::pow(z + I, -eps) * std::pow(form(z), n + 1); };
  rep.value_at_zeta0 = std::abs(H(zeta0));

  // (a) H and its first n derivatives on the orbit, against the envelope
  // |z+i|^{-eps} (Im z)^{-m0(n+1)} that bounds |H| up to a constant.
  rep.orbit_size = static_cast<int>(orbit_points.size());
  for (const UpperHalfPoint& p : orbit_points) {
    const Complex z = p.z();
    const double envelope = std::pow(std::abs(z + I), -eps) * std::pow(p.y, -m0 * (n + 1));
    CauchyOptions copts;
    copts.require_upper_half_plane = true;
    const double rho = default_cauchy_radius(z);
    double kfact = 1.0;
    for (int k = 0; k <= n; ++k) {
      if (k > 0) kfact *= k;
      const Complex hk = k == 0 ? H(z) : cauchy_derivative(H, z, k, copts);
      const double local = envelope * kfact / std::pow(rho, k);
      rep.max_orbit_residual = std::max(rep.max_orbit_residual, std::abs(hk) / local);
    }
  }
  rep.orbit_vanishing = rep.max_orbit_residual < options.tol;

  // (b) int |H|^2 y^alpha dx dy on the disc model z = i(1+w)/(1-w), where
  // y^alpha dx dy = 4 (1-|w|^2)^alpha / |1-w|^{2 alpha + 4} dA(w), truncated to |w| <= R.
  const double alpha = rep.alpha;
  auto disc = [&](double R) {
    const QuadratureRule radial = gauss_legendre(options.radial_nodes, 0.0, R);
    const QuadratureRule angular = trapezoid(options.angular_nodes, 0.0, 2.0 * kPi, true);
    DiscIntegral out;
    for (std::size_t i = 0; i < radial.size(); ++i) {
      const double r = radial.nodes[i];
      const double one_minus = 1.0 - r * r;
      double ring = 0.0;
      for (std::size_t j = 0; j < angular.size(); ++j) {
        const Complex w = std::polar(r, angular.nodes[j]);
        const Complex z = I * (1.0 + w) / (1.0 - w);
        const double gap = std::abs(1.0 - w);
        // |z + i| = 2 / |1 - w|
        const double log_density = 2.0 * eps * std::log(gap / 2.0) + 2.0 * (n + 1) * std::log(std::abs(form(z))) +
                                   std::log(4.0) + alpha * std::log(one_minus) - (2.0 * alpha + 4.0) * std::log(gap);
        const double density = std::exp(log_density);
        ring += angular.weights[j] * density;
        out.tail_constant = std::max(out.tail_constant, density / std::pow(one_minus, eps - 1.0));
      }
      out.value += radial.weights[i] * r * ring;
    }
    return out;
  };
  std::vector<std::future<DiscIntegral>> jobs;
  for (double R : options.radii) jobs.push_back(std::async(std::launch::async, disc, R));
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    const DiscIntegral d = jobs[i].get();
    rep.disc_norm.push_back({options.radii[i], d.value});
    rep.tail_constant = std::max(rep.tail_constant, d.tail_constant);
  }
  const std::size_t last = rep.disc_norm.size() - 1;
  const double i1 = rep.disc_norm[last - 2].value;
  const double i2 = rep.disc_norm[last - 1].value;
  const double i3 = rep.disc_norm[last].value;
  const double r2 = rep.disc_norm[last - 1].radius;
  rep.tail_bound = rep.tail_constant * kPi * std::pow(1.0 - r2 * r2, eps) / eps;
  const double floor = 1e-12 * std::abs(i3);
  const bool finite = std::isfinite(i1) && std::isfinite(i2) && std::isfinite(i3);
  rep.disc_norm_cauchy = finite && std::abs(i3 - i2) <= std::max(std::abs(i2 - i1), floor) &&
                         std::abs(i3 - i2) <= rep.tail_bound + floor;

  // (c) (Im z)^{m0} |F| on D with Im z <= 2 and on images of that grid. The
  // invariance error is relative to the domain sup since F vanishes at zeta0.
  auto weighted = [&](UpperHalfPoint p) { return std::pow(p.y, m0) * std::abs(form(p.z())); };
  std::vector<UpperHalfPoint> grid;
  for (int ix = 0; ix <= 20; ++ix) {
    const double x = -0.5 + ix / 20.0;
    const double y0 = std::sqrt(1.0 - x * x) + 1e-9;
    for (int iy = 0; iy <= 15; ++iy) grid.push_back({x, y0 + (2.0 - y0) * iy / 15.0});
  }
  struct SupResult {
    double sup = 0.0;
    double err = 0.0;
    int count = 0;
  };
  std::vector<std::future<SupResult>> sup_jobs;
  std::vector<double> base(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    base[i] = weighted(grid[i]);
    rep.sup_domain = std::max(rep.sup_domain, base[i]);
  }
  for (std::size_t i = 0; i < grid.size(); ++i) {
    sup_jobs.push_back(std::async(std::launch::async, [&, i] {
      SupResult res;
      for (const OrbitPoint& op : orbit(GroupChoice::modular(), grid[i], options.sup_word_length)) {
        const double v = weighted(op.point);
        res.sup = std::max(res.sup, v);
        res.err = std::max(res.err, std::abs(v - base[i]) / rep.sup_domain);
        ++res.count;
      }
      return res;
    }));
  }
  rep.sup_grid = rep.sup_domain;
  for (auto& j : sup_jobs) {
    const SupResult res = j.get();
    rep.sup_grid = std::max(rep.sup_grid, res.sup);
    rep.invariance_error = std::max(rep.invariance_error, res.err);
    rep.sup_grid_points += res.count;
  }
  rep.bounded = std::isfinite(rep.sup_grid) && rep.invariance_error <= 1e-8 &&
                rep.sup_grid <= rep.sup_domain * (1.0 + 1e-8);

  if (!form.is_cusp_form()) {
    rep.notes.push_back(form.name() +
                        " is not a cusp form: (Im z)^m0 |F| grows toward the cusp, so boundedness is checked on "
                        "the truncated domain Im z <= 2 and its images only");
  }
  return rep;
}

}  // namespace landau
