#include <doctest.h>

#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "landau/errors.hpp"
#include "landau/gabor.hpp"

using namespace landau;

namespace {

double magnitude_identity(int j, int n, double q, double p) {
  const double l2 = q * q + p * p;
  const int lo = std::min(j, n), hi = std::max(j, n);
  return std::exp(0.5 * (std::lgamma(lo + 1.0) - std::lgamma(hi + 1.0))) * std::pow(std::sqrt(kPi * l2), hi - lo) *
         std::exp(-kPi * l2 / 2.0) * std::abs(laguerre_poly(lo, double(hi - lo), kPi * l2));
}

double min_eigenvalue(const HermitianMatrix& m) { return eigh(m).values.front(); }

}  // namespace

TEST_CASE("time-frequency shifts") {
  const LineFunction h0 = [](double t) { return Complex(gabor_window(0, t)); };
  for (double t : {-1.3, 0.0, 0.7}) {
    CHECK(std::abs(tf_shift(0, 0, h0)(t) - h0(t)) == 0.0);
    CHECK(std::abs(tf_shift(1, 0, h0)(t) - h0(t - 1.0)) < 1e-15);
  }
  CHECK(std::abs(tf_shift(0, 1, h0)(0.0) - h0(0.0)) < 1e-15);
  CHECK(std::abs(tf_shift(0.5, 0.25, h0)(0.5)) == doctest::Approx(h0(0.0).real()));
}

TEST_CASE("lattices") {
  const Lattice sq = Lattice::square(1.0);
  CHECK(sq.size() == doctest::Approx(1.0));
  const std::vector<TFPoint> pts = lattice_points(sq, 1);
  CHECK(pts.size() == 9);
  auto has = [&](double q, double p) {
    for (const TFPoint& t : pts) {
      if (std::abs(t.q - q) < 1e-15 && std::abs(t.p - p) < 1e-15) return true;
    }
    return false;
  };
  CHECK(has(0, 0));
  CHECK(has(1, 0));
  CHECK(has(0, 1));
  CHECK(lattice_points(Lattice(Complex(0.3, 1.1), Complex(0.9, 0.1)), 1).size() == 9);
  const std::vector<TFPoint> half = lattice_points(Lattice::square(0.5), 2);
  CHECK(half.size() == 25);
  double top = 0.0;
  for (const TFPoint& t : half) top = std::max({top, std::abs(t.q), std::abs(t.p)});
  CHECK(top == doctest::Approx(1.0));
  CHECK_THROWS_AS(Lattice(Complex(1, 0), Complex(0, 1)), InvalidArgument);
}

TEST_CASE("displacement elements") {
  for (int n = 0; n <= 5; ++n) {
    CHECK(std::abs(displacement_element(n, n, 0, 0) - 1.0) < 1e-13);
    CHECK(std::abs(displacement_element((n + 2) % 6, n, 0, 0)) < 1e-13);
  }
  CHECK(std::abs(displacement_element(0, 0, 1, 0)) == doctest::Approx(std::exp(-kPi / 2)).epsilon(1e-13));

  double worst_identity = 0.0, worst_symmetry = 0.0;
  for (int j = 0; j <= 6; ++j) {
    for (int n = 0; n <= 6; ++n) {
      for (auto [q, p] : {std::pair{0.7, -1.3}, std::pair{0.2, 0.4}, std::pair{-1.9, 0.5}}) {
        const double a = std::abs(displacement_element(j, n, q, p));
        worst_identity = std::max(worst_identity, std::abs(a - magnitude_identity(j, n, q, p)));
        worst_symmetry = std::max(worst_symmetry, std::abs(a - std::abs(displacement_element(j, n, -q, -p))));
      }
    }
  }
  CHECK(worst_identity <= 1e-8);
  CHECK(worst_symmetry <= 1e-10);
}

TEST_CASE("displacement element against direct quadrature") {
  const QuadratureRule rule = trapezoid(20001, -12.0, 12.0);
  const Complex direct = integrate(rule, [](double t) {
    return gabor_window(2, t) * std::polar(1.0, -2.0 * kPi * 0.4 * t) * gabor_window(1, t - 0.3);
  });
  CHECK(std::abs(direct - displacement_element(2, 1, 0.3, 0.4)) < 1e-10);

  const std::vector<Complex> col = displacement_column(8, 3, -0.6, 0.9);
  for (int j = 0; j < 8; ++j) CHECK(std::abs(col[j] - displacement_element(j, 3, -0.6, 0.9)) < 1e-14);
}

TEST_CASE("frame operator sections") {
  const HermitianMatrix sparse = frame_operator_section(0, Lattice::square(50.0), 6, 2);
  for (std::size_t j = 0; j < 6; ++j) {
    for (std::size_t k = 0; k < 6; ++k) CHECK(std::abs(sparse(j, k) - (j == 0 && k == 0 ? 1.0 : 0.0)) < 1e-14);
  }

  for (auto [n, w2] : {std::pair{0, 0.5}, std::pair{1, 1.3}, std::pair{2, 0.8}}) {
    CHECK(min_eigenvalue(frame_operator_section(n, Lattice::square(std::sqrt(w2)), 20, 8)) >= -1e-10);
  }

  const Lattice dense = Lattice::square(0.5);
  const HermitianMatrix s12 = frame_operator_section(0, dense, 30, 12);
  const HermitianMatrix s16 = frame_operator_section(0, dense, 30, 16);
  CHECK(min_eigenvalue(s12.leading(10)) >= 1.0);
  double change = 0.0;
  for (std::size_t j = 0; j < 30; ++j) {
    for (std::size_t k = 0; k < 30; ++k) change = std::max(change, std::abs(s12(j, k) - s16(j, k)));
  }
  CHECK(change < 1e-8);
  CHECK(std::abs(s12(0, 0) - s16(0, 0)) < 1e-8);
  CHECK_THROWS_AS(frame_operator_section(3, dense, 4, 12), InvalidArgument);
}

TEST_CASE("frame scan classification") {
  const std::vector<FrameEstimate> n0 = frame_scan(0, {0.8, 1.2});
  CHECK(n0[0].classification == FrameClass::frame_like);
  CHECK(n0[1].classification == FrameClass::deficient);
  CHECK(frame_scan(1, {0.45})[0].classification == FrameClass::frame_like);
  CHECK(to_string(FrameClass::inconclusive) == "inconclusive");
}

TEST_CASE("interior lower bound is non-increasing in omega^2 for n = 0") {
  std::vector<double> grid;
  for (int i = 0; i <= 10; ++i) grid.push_back(0.5 + 0.1 * i);
  const std::vector<FrameEstimate> scan = frame_scan(0, grid);
  for (std::size_t i = 1; i < scan.size(); ++i) CHECK(scan[i].lower <= scan[i - 1].lower);
}

TEST_CASE("frame scan regression baselines") {
  // Classification thresholds are relative to the largest upper bound in a
  // scan, so each recorded scan is replayed as a whole.
  std::ifstream in(LANDAU_BASELINE_DIR "/gabor_scan.csv");
  REQUIRE(in.good());
  std::string line;
  std::getline(in, line);
  std::map<int, std::vector<std::vector<std::string>>> scans;
  while (std::getline(in, line)) {
    std::stringstream ss(line);
    std::string cell;
    std::vector<std::string> cells;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    REQUIRE(cells.size() == 5);
    scans[std::stoi(cells[0])].push_back(cells);
  }
  int rows = 0;
  for (const auto& [n, recorded] : scans) {
    std::vector<double> grid;
    for (const auto& r : recorded) grid.push_back(std::stod(r[1]));
    const std::vector<FrameEstimate> scan = frame_scan(n, grid);
    for (std::size_t i = 0; i < recorded.size(); ++i) {
      CAPTURE(n);
      CAPTURE(grid[i]);
      CHECK(scan[i].lower == doctest::Approx(std::stod(recorded[i][2])).epsilon(1e-6));
      CHECK(scan[i].upper == doctest::Approx(std::stod(recorded[i][3])).epsilon(1e-6));
      CHECK(to_string(scan[i].classification) == recorded[i][4]);
      ++rows;
    }
  }
  CHECK(rows == 25);
}
