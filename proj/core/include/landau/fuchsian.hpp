#pragma once

// Moebius action, the modular group and its principal congruence subgroups,
// signatures and their closed-form invariants, q-expansions of modular forms,
// the completeness bounds and the incompleteness witness H.
//
// Weight m means the cocycle (cz+d)^{-2m}, so
// E4 has m = 2, E6 has m = 3 and Delta has m = 6.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "landau/hyperbolic.hpp"
#include "landau/numerics.hpp"

namespace landau {

// ---------------------------------------------------------------------------
// Moebius elements

/// Integer unimodular matrix, identified with its negative. Stored with
/// the first nonzero entry of (a, b, c, d) positive.
class MoebiusElement {
 public:
  MoebiusElement(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d);

  static MoebiusElement identity() { return {1, 0, 0, 1}; }
  static MoebiusElement S() { return {0, -1, 1, 0}; }
  static MoebiusElement T() { return {1, 1, 0, 1}; }
  static MoebiusElement T_inverse() { return {1, -1, 0, 1}; }
  static MoebiusElement T_power(std::int64_t k) { return {1, k, 0, 1}; }

  std::int64_t a() const { return a_; }
  std::int64_t b() const { return b_; }
  std::int64_t c() const { return c_; }
  std::int64_t d() const { return d_; }

  /// Throws InvalidArgument on int64 overflow.
  MoebiusElement operator*(const MoebiusElement& other) const;
  bool operator==(const MoebiusElement& other) const = default;
  auto operator<=>(const MoebiusElement& other) const = default;

  MoebiusElement inverse() const { return {d_, -b_, -c_, a_}; }
  Complex apply(Complex z) const;
  /// c z + d
  Complex cocycle(Complex z) const { return double(c_) * z + double(d_); }
  /// Congruent to +-I modulo level.
  bool in_principal_congruence(std::int64_t level) const;
  std::string str() const;

 private:
  std::int64_t a_, b_, c_, d_;
};

UpperHalfPoint moebius_apply(const MoebiusElement& g, UpperHalfPoint z);

/// |Re z| <= 1/2 and |z| >= 1, up to tol.
bool in_fundamental_domain(Complex z, double tol = 1e-12);

struct Reduction {
  UpperHalfPoint point;
  MoebiusElement g = MoebiusElement::identity();  // point = g z
};

/// Alternates translation of Re z into (-1/2, 1/2] with z -> -1/z while |z| < 1.
Reduction reduce_to_fundamental(UpperHalfPoint z);

struct GroupChoice {
  enum class Kind { modular, congruence };
  Kind kind = Kind::modular;
  std::int64_t level = 1;  // for congruence: Gamma(level)

  static GroupChoice modular() { return {}; }
  static GroupChoice congruence(std::int64_t level);
  std::string str() const;
};

struct OrbitPoint {
  UpperHalfPoint point;
  MoebiusElement g = MoebiusElement::identity();
  std::string word;  // generators applied right to left, e.g. "S.T"; "I" for the identity
};

/// Breadth-first images of seed under words of length <= max_word_length in
/// {S, T, T^-1}, deduplicated by matrix and then by point (1e-12). For a
/// congruence group only words whose matrix lies in the subgroup are kept.
std::vector<OrbitPoint> orbit(const GroupChoice& group, UpperHalfPoint seed, int max_word_length);

// ---------------------------------------------------------------------------
// Signatures

struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t n, std::int64_t d = 1);
  double value() const { return double(num) / double(den); }
  Rational operator+(const Rational& o) const;
  Rational operator-(const Rational& o) const;
  Rational operator*(const Rational& o) const;
  bool operator==(const Rational& o) const = default;
};

/// "pi/3", "4pi", "2pi/3", "0", "-pi/2".
std::string format_pi_multiple(const Rational& coefficient);

struct GroupSignature {
  static constexpr int kCusp = 0;  // order entry for a parabolic cycle

  int genus = 0;
  int r = 0;
  std::vector<int> orders;  // each >= 2, or kCusp

  /// Parses "g,r,e1,...,er" with "inf" for cusps.
  static GroupSignature parse(const std::string& text);
  static GroupSignature modular() { return {0, 3, {2, 3, kCusp}}; }
  void validate() const;
  std::string str() const;
};

/// S_G / pi = 2 [2g - 2 + sum (1 - 1/e_l)], cusps contributing 1.
/// Throws InvalidSignature when the area is not positive.
Rational fundamental_area_over_pi(const GroupSignature& sig);
double fundamental_area(const GroupSignature& sig);

/// m S_G / (2 pi)
Rational poincare_zero_count_exact(int m, const GroupSignature& sig);
double poincare_zero_count(int m, const GroupSignature& sig);

/// Dimension of holomorphic automorphic forms of weight m (cocycle (cz+d)^{-2m}).
int dim_hol(int m, const GroupSignature& sig);

// ---------------------------------------------------------------------------
// q-expansions

struct QExpansion {
  int weight_m = 0;
  std::vector<std::int64_t> coefficients;
  std::string name;

  int truncation() const { return static_cast<int>(coefficients.size()); }
};

enum class EisensteinSeries { E4, E6 };

QExpansion eisenstein(EisensteinSeries series, int truncation = 24);
/// (E4^3 - E6^2) / 1728 in exact arithmetic.
QExpansion delta_cusp_form(int truncation = 24);

/// Coefficient-wise product and sum, exact; throws InvalidArgument on overflow.
QExpansion multiply(const QExpansion& f, const QExpansion& g);
QExpansion add(const QExpansion& f, const QExpansion& g);
QExpansion scale(const QExpansion& f, std::int64_t k);

/// Look up "E4", "E6" or "Delta".
QExpansion named_form(const std::string& name, int truncation = 24);

/// Evaluates f(z) = (cz+d)^{-2m} f(g z) with g z in the fundamental domain,
/// summing the q-series at the reduced point. Throws TruncationError when
/// the tail bound exceeds tol times the series scale.
Complex eval_form(const QExpansion& f, Complex z, double tol = 1e-14);

/// Tail bound of the truncated q-series at |q|.
double truncation_bound(const QExpansion& f, double abs_q, int truncation);

/// A finite linear combination of same-weight q-expansions.
class AutomorphicForm {
 public:
  explicit AutomorphicForm(QExpansion f);

  /// alpha f1 + beta f2 vanishing at zeta0, with max(|alpha|, |beta|) = 1.
  static AutomorphicForm vanishing_pencil(const QExpansion& f1, const QExpansion& f2, Complex zeta0,
                                          double tol = 1e-14);

  int weight_m() const { return weight_m_; }
  const std::string& name() const { return name_; }
  /// Constant term of the combined q-expansion vanishes.
  bool is_cusp_form() const;
  Complex operator()(Complex z, double tol = 1e-14) const;

 private:
  AutomorphicForm() = default;

  int weight_m_ = 0;
  std::string name_;
  std::vector<std::pair<Complex, QExpansion>> terms_;
};

// ---------------------------------------------------------------------------
// Bounds

enum class Verdict { necessarily_incomplete, condition_met };
std::string to_string(Verdict v);

struct BoundReport {
  std::string check;
  double m0 = 0.0;
  double threshold = 0.0;
  bool satisfied = false;  // m0 >= threshold
  Verdict verdict = Verdict::condition_met;
  // Covolume check only: the area comparison behind m0 = 2 pi / S_G.
  double area = 0.0;
  double area_bound = 0.0;
  std::string area_exact;
  std::vector<std::string> notes;
};

/// threshold = (B - n) / (2 (1 + n)); below it the orbit system cannot be complete.
BoundReport check_theorem2(const HyperLevelSpec& spec, double m0);

/// S_G <= 4 pi (1 + n) / (B - n), reported with m0 := 2 pi / S_G against the
/// weight threshold. The modular signature gets a note with its explicit
/// cut-off (B - n)/(1 + n) <= 12.
BoundReport check_corollary1(const HyperLevelSpec& spec, const GroupSignature& sig);

// ---------------------------------------------------------------------------
// Incompleteness witness

struct DiscNormSample {
  double radius = 0.0;
  double value = 0.0;
};

struct WitnessReport {
  double B = 0.0;
  int n = 0;
  double m0 = 0.0;
  double alpha = 0.0;
  double epsilon = 0.0;
  Complex zeta0;
  double form_at_zeta0 = 0.0;
  double value_at_zeta0 = 0.0;  // |H(zeta0)|

  int orbit_size = 0;
  double max_orbit_residual = 0.0;  // max_k |H^(k)| / (envelope k! / rho^k)
  bool orbit_vanishing = false;

  std::vector<DiscNormSample> disc_norm;
  double tail_constant = 0.0;
  double tail_bound = 0.0;  // C pi (1 - R^2)^eps / eps at the middle radius
  bool disc_norm_cauchy = false;

  int sup_grid_points = 0;
  double sup_domain = 0.0;  // sup of (Im z)^{m0} |F| over D with Im z <= 2
  double sup_grid = 0.0;    // same sup including images under words of length <= 3
  double invariance_error = 0.0;
  bool bounded = false;

  std::vector<std::string> notes;
  bool ok() const { return orbit_vanishing && disc_norm_cauchy && bounded; }
};

struct WitnessOptions {
  double tol = 1e-8;
  std::vector<double> radii{0.9, 0.99, 0.999};
  int radial_nodes = 160;
  int angular_nodes = 256;
  int sup_word_length = 3;
};

/// H(z) = (z + i)^{-eps} F(z)^{n+1} with eps = alpha + 1 - 2 m0 (n + 1).
/// Throws WitnessRegimeRefused when 2 m0 >= (B - n)/(1 + n) and
/// InvalidArgument when |F(zeta0)| >= tol.
WitnessReport incompleteness_witness(const HyperLevelSpec& spec, const AutomorphicForm& form, Complex zeta0,
                                     const std::vector<UpperHalfPoint>& orbit_points,
                                     const WitnessOptions& options = {});

}  // namespace landau
