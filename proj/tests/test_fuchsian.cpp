#include <doctest.h>

#include <cmath>

#include "landau/errors.hpp"
#include "landau/fuchsian.hpp"
#include "support.hpp"

using namespace landau;

namespace {

const Complex kRho(0.5, std::sqrt(3.0) / 2.0);

bool close(UpperHalfPoint a, Complex b, double tol = 1e-14) { return std::abs(a.z() - b) <= tol; }

}  // namespace

TEST_CASE("Moebius action") {
  CHECK(close(moebius_apply(MoebiusElement::S(), {0, 1}), Complex(0, 1)));
  const UpperHalfPoint z{0.3, 0.8};
  CHECK(close(moebius_apply(MoebiusElement::T(), z), z.z() + 1.0));
  CHECK(close(moebius_apply({1, 1, 1, 2}, {0, 1}), Complex(3, 1) / 5.0));
  CHECK(testing::moebius_composition_error() <= 1e-12);

  const MoebiusElement g(2, 1, 7, 4);
  const UpperHalfPoint w = moebius_apply(g, z);
  CHECK(w.y == z.y / std::norm(g.cocycle(z.z())));
  CHECK_THROWS_AS(MoebiusElement(1, 1, 1, 1), InvalidArgument);
  CHECK(MoebiusElement(-1, 0, 0, -1) == MoebiusElement::identity());
  CHECK(g * g.inverse() == MoebiusElement::identity());
  CHECK_THROWS_AS(MoebiusElement::T_power(4'000'000'000'000'000'000) * MoebiusElement::T_power(4'000'000'000'000'000'000) *
                      MoebiusElement::T_power(4'000'000'000'000'000'000),
                  InvalidArgument);
}

TEST_CASE("reduction to the fundamental domain") {
  const Reduction a = reduce_to_fundamental({2.5, 1});
  CHECK(close(a.point, Complex(0.5, 1)));
  CHECK(a.g == MoebiusElement::T_power(-2));
  const Reduction b = reduce_to_fundamental({0.1, 2});
  CHECK(close(b.point, Complex(0.1, 2)));
  CHECK(b.g == MoebiusElement::identity());
  CHECK(in_fundamental_domain(reduce_to_fundamental({0.3, 0.2}).point.z()));
  CHECK(testing::reduction_failures() == 0);
}

TEST_CASE("orbits") {
  const UpperHalfPoint seed{0, 2};
  const std::vector<OrbitPoint> zero = orbit(GroupChoice::modular(), seed, 0);
  REQUIRE(zero.size() == 1);
  CHECK(zero[0].word == "I");

  const std::vector<OrbitPoint> one = orbit(GroupChoice::modular(), seed, 1);
  CHECK(one.size() == 4);
  for (Complex expect : {Complex(0, 2), Complex(1, 2), Complex(-1, 2), Complex(0, 0.5)}) {
    bool found = false;
    for (const OrbitPoint& p : one) found = found || close(p.point, expect);
    CHECK(found);
  }
  for (const OrbitPoint& p : orbit(GroupChoice::modular(), {0.2, 0.3}, 5)) {
    CHECK(p.point.y > 0.0);
    CHECK(close(p.point, p.g.apply(Complex(0.2, 0.3)), 1e-12));
  }
  for (const OrbitPoint& p : orbit(GroupChoice::congruence(2), {0.2, 0.3}, 4)) CHECK(p.g.in_principal_congruence(2));
  // rho is fixed by ST, so its orbit is smaller than the word count.
  CHECK(orbit(GroupChoice::modular(), UpperHalfPoint::from(kRho), 1).size() == 3);
}

TEST_CASE("signatures and areas") {
  const GroupSignature mod = GroupSignature::parse("0,3,2,3,inf");
  CHECK(mod.str() == "0,3,2,3,inf");
  CHECK(format_pi_multiple(fundamental_area_over_pi(mod)) == "pi/3");
  CHECK(fundamental_area(mod) == doctest::Approx(kPi / 3));
  CHECK(format_pi_multiple(fundamental_area_over_pi(GroupSignature::parse("2,0"))) == "4pi");
  CHECK(format_pi_multiple(fundamental_area_over_pi(GroupSignature::parse("0,3,2,3,7"))) == "pi/21");
  CHECK_THROWS_AS(fundamental_area(GroupSignature::parse("0,3,2,3,6")), InvalidSignature);
  CHECK_THROWS_AS(fundamental_area(GroupSignature::parse("1,0")), InvalidSignature);
  CHECK_THROWS_AS(GroupSignature::parse("0,2,3"), InvalidArgument);
  CHECK_THROWS_AS(GroupSignature::parse("0,1,1"), InvalidArgument);
  CHECK_THROWS_AS(GroupSignature::parse("x"), InvalidArgument);
}

TEST_CASE("zero counts and dimensions") {
  const GroupSignature mod = GroupSignature::modular();
  CHECK(poincare_zero_count(6, mod) == doctest::Approx(1.0));
  CHECK(poincare_zero_count(0, mod) == 0.0);
  CHECK(poincare_zero_count(12, mod) == doctest::Approx(2.0));
  const std::vector<int> classical{1, 0, 1, 1, 1, 1, 2, 1, 2, 2, 2};
  for (int m = 0; m <= 10; ++m) CHECK(dim_hol(m, mod) == classical[static_cast<std::size_t>(m)]);
  CHECK(dim_hol(0, GroupSignature::parse("2,0")) == 1);
  CHECK(dim_hol(-3, mod) == 0);
  for (int m = 1; m <= 30; ++m) {
    const int d = dim_hol(m, mod);
    if (d >= 2) CHECK(poincare_zero_count(m, mod) >= d - 1);
  }
}

TEST_CASE("dimension formula against monomials in E4 and E6") {
  // Products E4^a E6^b of weight m are linearly independent and span, so
  // their count is the dimension; check rank of their coefficient matrix.
  const QExpansion e4 = eisenstein(EisensteinSeries::E4, 12);
  const QExpansion e6 = eisenstein(EisensteinSeries::E6, 12);
  for (int m = 0; m <= 10; ++m) {
    std::vector<std::vector<double>> rows;
    for (int a = 0; 2 * a <= m; ++a) {
      if ((m - 2 * a) % 3 != 0) continue;
      const int b = (m - 2 * a) / 3;
      QExpansion f{0, std::vector<std::int64_t>(12, 0), "1"};
      f.coefficients[0] = 1;
      for (int i = 0; i < a; ++i) f = multiply(f, e4);
      for (int i = 0; i < b; ++i) f = multiply(f, e6);
      rows.emplace_back(f.coefficients.begin(), f.coefficients.end());
    }
    // Gaussian elimination for the rank.
    int rank = 0;
    for (std::size_t col = 0; col < 12 && rank < static_cast<int>(rows.size()); ++col) {
      std::size_t pivot = rank;
      while (pivot < rows.size() && std::abs(rows[pivot][col]) < 1e-9) ++pivot;
      if (pivot == rows.size()) continue;
      std::swap(rows[pivot], rows[rank]);
      for (std::size_t r = rank + 1; r < rows.size(); ++r) {
        const double f = rows[r][col] / rows[rank][col];
        for (std::size_t c = col; c < 12; ++c) rows[r][c] -= f * rows[rank][c];
      }
      ++rank;
    }
    CAPTURE(m);
    CHECK(rank == dim_hol(m, GroupSignature::modular()));
  }
}

TEST_CASE("q-expansions") {
  const QExpansion e4 = eisenstein(EisensteinSeries::E4);
  const QExpansion e6 = eisenstein(EisensteinSeries::E6);
  CHECK(e4.weight_m == 2);
  CHECK(e6.weight_m == 3);
  CHECK(std::vector<std::int64_t>(e4.coefficients.begin(), e4.coefficients.begin() + 3) ==
        std::vector<std::int64_t>{1, 240, 2160});
  CHECK(std::vector<std::int64_t>(e6.coefficients.begin(), e6.coefficients.begin() + 3) ==
        std::vector<std::int64_t>{1, -504, -16632});

  const QExpansion d = delta_cusp_form();
  CHECK(d.weight_m == 6);
  CHECK(std::vector<std::int64_t>(d.coefficients.begin(), d.coefficients.begin() + 7) ==
        std::vector<std::int64_t>{0, 1, -24, 252, -1472, 4830, -6048});
  const QExpansion lhs = add(scale(d, 1728), multiply(e6, e6));
  CHECK(lhs.coefficients == multiply(multiply(e4, e4), e4).coefficients);
  CHECK(named_form("Delta").coefficients == d.coefficients);
  CHECK_THROWS_AS(named_form("E8"), InvalidArgument);
  CHECK_THROWS_AS(add(e4, e6), InvalidArgument);
}

TEST_CASE("evaluating forms") {
  const QExpansion e4 = eisenstein(EisensteinSeries::E4);
  const QExpansion d = delta_cusp_form();
  CHECK(std::abs(eval_form(e4, kRho)) < 1e-10);
  const Complex di = eval_form(d, Complex(0, 1));
  CHECK(std::abs(di) > 1e-3);
  CHECK(std::abs(di.imag()) < 1e-15);
  const Complex z(0.17, 0.63);
  CHECK(std::abs(eval_form(e4, z + 1.0) - eval_form(e4, z)) <= 1e-13 * std::abs(eval_form(e4, z)));
  for (const QExpansion& f : {e4, eisenstein(EisensteinSeries::E6), d}) {
    CAPTURE(f.name);
    CHECK(testing::functional_equation_error(f) <= 1e-9);
  }
  const QExpansion shortest = eisenstein(EisensteinSeries::E4, 3);
  try {
    eval_form(shortest, kRho);
    FAIL("expected TruncationError");
  } catch (const TruncationError& e) {
    CHECK(e.required_truncation() > 3);
  }
  CHECK_THROWS_AS(eval_form(e4, Complex(0.3, 0.0)), InvalidArgument);
}

TEST_CASE("weight-invariant size of forms") {
  const QExpansion d = delta_cusp_form();
  const std::vector<MoebiusElement> gs{MoebiusElement::S(), {2, 1, 7, 4}, {1, 1, 1, 2}};
  for (Complex z : {Complex(0.1, 1.3), Complex(-0.4, 0.9), Complex(0.45, 2.0)}) {
    const double base = std::pow(z.imag(), 6) * std::abs(eval_form(d, z));
    for (const MoebiusElement& g : gs) {
      const Complex w = g.apply(z);
      CHECK(std::abs(std::pow(w.imag(), 6) * std::abs(eval_form(d, w)) - base) <= 1e-9 * base);
    }
  }
}

TEST_CASE("automorphic forms") {
  const AutomorphicForm e4(eisenstein(EisensteinSeries::E4));
  CHECK(e4.weight_m() == 2);
  CHECK_FALSE(e4.is_cusp_form());
  CHECK(AutomorphicForm(delta_cusp_form()).is_cusp_form());
  const Complex zeta(0.2, 1.4);
  const AutomorphicForm p12 = AutomorphicForm::vanishing_pencil(
      multiply(multiply(eisenstein(EisensteinSeries::E4), eisenstein(EisensteinSeries::E4)),
               eisenstein(EisensteinSeries::E4)),
      multiply(eisenstein(EisensteinSeries::E6), eisenstein(EisensteinSeries::E6)), zeta);
  CHECK(p12.weight_m() == 6);
  CHECK(std::abs(p12(zeta)) < 1e-12);
  CHECK(std::abs(p12(Complex(0.1, 1.0))) > 1e-3);
}

TEST_CASE("bound checkers") {
  const BoundReport a = check_theorem2({30, 1}, 6);
  CHECK(a.threshold == doctest::Approx(7.25));
  CHECK(a.verdict == Verdict::necessarily_incomplete);
  const BoundReport b = check_theorem2({10, 1}, 6);
  CHECK(b.threshold == doctest::Approx(2.25));
  CHECK(b.verdict == Verdict::condition_met);
  CHECK_THROWS_AS(check_theorem2({3, 3}, 6), InvalidArgument);

  const GroupSignature mod = GroupSignature::modular();
  const BoundReport c5 = check_corollary1({5, 0}, mod);
  CHECK(c5.verdict == Verdict::condition_met);
  CHECK(c5.area_exact == "pi/3");
  CHECK(c5.area_bound == doctest::Approx(4 * kPi / 5));
  const BoundReport c40 = check_corollary1({40, 0}, mod);
  CHECK(c40.verdict == Verdict::necessarily_incomplete);
  CHECK(c40.area_bound == doctest::Approx(kPi / 10));
  // Near the weakest admissible field every desk signature passes.
  for (const char* s : {"0,3,2,3,inf", "2,0", "0,3,2,3,7", "1,1,inf"}) {
    const BoundReport r = check_corollary1({0.5000001, 0}, GroupSignature::parse(s));
    CHECK(r.area_bound == doctest::Approx(8 * kPi).epsilon(1e-5));
    CHECK(r.verdict == Verdict::condition_met);
  }
  // The area comparison and the m0 comparison agree.
  for (double B : {5.0, 12.0, 12.5, 13.0, 40.0}) {
    const BoundReport r = check_corollary1({B, 0}, mod);
    CHECK(r.satisfied == (r.area <= r.area_bound));
  }
}

TEST_CASE("incompleteness witness") {
  const AutomorphicForm e4(eisenstein(EisensteinSeries::E4));
  std::vector<UpperHalfPoint> pts;
  for (const OrbitPoint& p : orbit(GroupChoice::modular(), UpperHalfPoint::from(kRho), 4)) pts.push_back(p.point);
  const WitnessReport w = incompleteness_witness({10, 0}, e4, kRho, pts);
  CHECK(w.epsilon == 16.0);
  CHECK(w.value_at_zeta0 < 1e-8);
  CHECK(w.max_orbit_residual < 1e-8);
  CHECK(w.disc_norm_cauchy);
  for (const DiscNormSample& s : w.disc_norm) CHECK(std::isfinite(s.value));
  CHECK(w.bounded);
  CHECK(w.ok());
  CHECK_FALSE(w.notes.empty());

  CHECK_THROWS_AS(incompleteness_witness({3, 0}, e4, kRho, pts), WitnessRegimeRefused);
  CHECK_THROWS_AS(incompleteness_witness({20, 0}, AutomorphicForm(delta_cusp_form()), kRho, pts), InvalidArgument);

  // Higher level: H carries F^{n+1}, so its first n derivatives vanish too.
  const WitnessReport w1 = incompleteness_witness({12, 1}, e4, kRho, pts);
  CHECK(w1.epsilon == doctest::Approx(2 * (12 - 1) - 1 + 1 - 2 * 2 * 2));
  CHECK(w1.ok());
}
