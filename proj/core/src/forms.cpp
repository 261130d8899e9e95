#include <cmath>
#include <limits>

#include "landau/errors.hpp"
#include "landau/fuchsian.hpp"

namespace landau {

namespace {

__extension__ typedef __int128 int128;

std::int64_t narrow(int128 v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min()) {
    throw InvalidArgument("q-expansion coefficient exceeds 64-bit range; lower the truncation");
  }
  return static_cast<std::int64_t>(v);
}

// Truncated product of two coefficient lists in 128-bit arithmetic.
std::vector<int128> convolve(const std::vector<int128>& f, const std::vector<int128>& g, std::size_t len) {
  std::vector<int128> out(len, 0);
  for (std::size_t i = 0; i < len && i < f.size(); ++i) {
    if (f[i] == 0) continue;
    for (std::size_t j = 0; i + j < len && j < g.size(); ++j) {
      int128 term = 0;
      if (__builtin_mul_overflow(f[i], g[j], &term) || __builtin_add_overflow(out[i + j], term, &out[i + j])) {
        throw InvalidArgument("q-expansion product overflows 128-bit arithmetic");
      }
    }
  }
  return out;
}

std::vector<int128> widen(const QExpansion& f) { return {f.coefficients.begin(), f.coefficients.end()}; }

std::int64_t divisor_power_sum(int k, int power) {
  int128 acc = 0;
  for (int d = 1; d <= k; ++d) {
    if (k % d != 0) continue;
    int128 p = 1;
    for (int e = 0; e < power; ++e) p *= d;
    acc += p;
  }
  return narrow(acc);
}

}  // namespace

QExpansion eisenstein(EisensteinSeries series, int truncation) {
  if (truncation < 1) throw InvalidArgument("eisenstein: truncation must be at least 1");
  const bool e4 = series == EisensteinSeries::E4;
  QExpansion f{e4 ? 2 : 3, std::vector<std::int64_t>(static_cast<std::size_t>(truncation), 0), e4 ? "E4" : "E6"};
  f.coefficients[0] = 1;
  for (int k = 1; k < truncation; ++k) {
    const int128 v = static_cast<int128>(e4 ? 240 : -504) * divisor_power_sum(k, e4 ? 3 : 5);
    f.coefficients[static_cast<std::size_t>(k)] = narrow(v);
  }
  return f;
}

QExpansion delta_cusp_form(int truncation) {
  if (truncation < 2) throw InvalidArgument("delta_cusp_form: truncation must be at least 2");
  const auto len = static_cast<std::size_t>(truncation);
  const std::vector<int128> e4 = widen(eisenstein(EisensteinSeries::E4, truncation));
  const std::vector<int128> e6 = widen(eisenstein(EisensteinSeries::E6, truncation));
  const std::vector<int128> e4cubed = convolve(convolve(e4, e4, len), e4, len);
  const std::vector<int128> e6squared = convolve(e6, e6, len);
  QExpansion d{6, std::vector<std::int64_t>(len, 0), "Delta"};
  for (std::size_t k = 0; k < len; ++k) {
    const int128 diff = e4cubed[k] - e6squared[k];
    if (diff % 1728 != 0) throw InvalidArgument("delta_cusp_form: inexact division by 1728");
    d.coefficients[k] = narrow(diff / 1728);
  }
  return d;
}

QExpansion multiply(const QExpansion& f, const QExpansion& g) {
  const std::size_t len = std::min(f.coefficients.size(), g.coefficients.size());
  const std::vector<int128> prod = convolve(widen(f), widen(g), len);
  QExpansion out{f.weight_m + g.weight_m, std::vector<std::int64_t>(len), f.name + "*" + g.name};
  for (std::size_t k = 0; k < len; ++k) out.coefficients[k] = narrow(prod[k]);
  return out;
}

QExpansion add(const QExpansion& f, const QExpansion& g) {
  if (f.weight_m != g.weight_m) throw InvalidArgument("add: weights differ");
  const std::size_t len = std::min(f.coefficients.size(), g.coefficients.size());
  QExpansion out{f.weight_m, std::vector<std::int64_t>(len), f.name + "+" + g.name};
  for (std::size_t k = 0; k < len; ++k) {
    out.coefficients[k] = narrow(static_cast<int128>(f.coefficients[k]) + g.coefficients[k]);
  }
  return out;
}

QExpansion scale(const QExpansion& f, std::int64_t k) {
  QExpansion out{f.weight_m, std::vector<std::int64_t>(f.coefficients.size()), std::to_string(k) + "*" + f.name};
  for (std::size_t i = 0; i < f.coefficients.size(); ++i) {
    out.coefficients[i] = narrow(static_cast<int128>(f.coefficients[i]) * k);
  }
  return out;
}

QExpansion named_form(const std::string& name, int truncation) {
  if (name == "E4") return eisenstein(EisensteinSeries::E4, truncation);
  if (name == "E6") return eisenstein(EisensteinSeries::E6, truncation);
  if (name == "Delta" || name == "delta") return delta_cusp_form(truncation);
  throw InvalidArgument("unknown form '" + name + "' (expected E4, E6 or Delta)");
}

double truncation_bound(const QExpansion& f, double abs_q, int truncation) {
  const int N = truncation;
  const int len = std::min(N, f.truncation());
  const double w = 2.0 * f.weight_m;
  // Coefficients are assumed to grow no faster than K k^{2m}.
  double K = 0.0;
  for (int k = 1; k < len; ++k) {
    K = std::max(K, std::abs(double(f.coefficients[static_cast<std::size_t>(k)])) / std::pow(k, w));
  }
  const double ratio = abs_q * std::pow(1.0 + 1.0 / N, w);
  if (ratio >= 1.0) return std::numeric_limits<double>::infinity();
  return K * std::pow(N, w) * std::pow(abs_q, N) / (1.0 - ratio);
}

Complex eval_form(const QExpansion& f, Complex z, double tol) {
  if (!(z.imag() > 0.0)) throw InvalidArgument("eval_form: point must lie in the upper half-plane");
  if (f.coefficients.empty()) throw InvalidArgument("eval_form: empty q-expansion");
  const Reduction red = reduce_to_fundamental({z.real(), z.imag()});
  const Complex zr = red.point.z();
  const Complex q = std::exp(Complex(0.0, 2.0 * kPi) * zr);
  const double aq = std::abs(q);

  Complex series = 0.0;
  double magnitude = 0.0;
  double power = 1.0;
  for (std::size_t k = f.coefficients.size(); k-- > 0;) series = series * q + double(f.coefficients[k]);
  for (std::int64_t a : f.coefficients) {
    magnitude += std::abs(double(a)) * power;
    power *= aq;
  }
  const int N = f.truncation();
  const double bound = truncation_bound(f, aq, N);
  if (bound > tol * magnitude) {
    int needed = N;
    while (needed < 1000000 && truncation_bound(f, aq, needed) > tol * magnitude) needed = needed < 64 ? needed + 1 : needed * 2;
    throw TruncationError("eval_form: truncation " + std::to_string(N) + " too short at this point; need about " +
                              std::to_string(needed),
                          needed);
  }
  // f(z) = (cz+d)^{-2m} f(g z)
  return series * std::pow(red.g.cocycle(z), -2 * f.weight_m);
}

AutomorphicForm::AutomorphicForm(QExpansion f) : weight_m_(f.weight_m), name_(f.name) {
  terms_.emplace_back(Complex(1.0), std::move(f));
}

AutomorphicForm AutomorphicForm::vanishing_pencil(const QExpansion& f1, const QExpansion& f2, Complex zeta0,
                                                  double tol) {
  if (f1.weight_m != f2.weight_m) throw InvalidArgument("vanishing_pencil: weights differ");
  const Complex v1 = eval_form(f1, zeta0, tol);
  const Complex v2 = eval_form(f2, zeta0, tol);
  Complex alpha = v2;
  Complex beta = -v1;
  const double top = std::max(std::abs(alpha), std::abs(beta));
  if (top == 0.0) {
    alpha = 1.0;
    beta = 0.0;
  } else {
    alpha /= top;
    beta /= top;
  }
  AutomorphicForm out;
  out.weight_m_ = f1.weight_m;
  out.name_ = "pencil(" + f1.name + "," + f2.name + ")";
  out.terms_.emplace_back(alpha, f1);
  out.terms_.emplace_back(beta, f2);
  return out;
}

bool AutomorphicForm::is_cusp_form() const {
  Complex a0 = 0.0;
  double scale = 0.0;
  for (const auto& [coef, f] : terms_) {
    a0 += coef * double(f.coefficients.front());
    scale += std::abs(coef) * std::abs(double(f.coefficients.front()));
  }
  return std::abs(a0) <= 1e-12 * std::max(scale, 1.0);
}

Complex AutomorphicForm::operator()(Complex z, double tol) const {
  Complex acc = 0.0;
  for (const auto& [coef, f] : terms_) acc += coef * eval_form(f, z, tol);
  return acc;
}

}  // namespace landau
