#include <cmath>
#include <numeric>
#include <sstream>

#include "landau/errors.hpp"
#include "landau/fuchsian.hpp"

namespace landau {

namespace {

std::int64_t checked_mul(std::int64_t x, std::int64_t y) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(x, y, &out)) throw InvalidArgument("integer overflow in exact arithmetic");
  return out;
}

std::int64_t checked_add(std::int64_t x, std::int64_t y) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(x, y, &out)) throw InvalidArgument("integer overflow in exact arithmetic");
  return out;
}

}  // namespace

Rational::Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
  if (d == 0) throw InvalidArgument("Rational: zero denominator");
  const std::int64_t g = std::gcd(n, d);
  num = n / g;
  den = d / g;
  if (den < 0) {
    num = -num;
    den = -den;
  }
}

Rational Rational::operator+(const Rational& o) const {
  return {checked_add(checked_mul(num, o.den), checked_mul(o.num, den)), checked_mul(den, o.den)};
}

Rational Rational::operator-(const Rational& o) const { return *this + Rational(-o.num, o.den); }

Rational Rational::operator*(const Rational& o) const {
  return {checked_mul(num, o.num), checked_mul(den, o.den)};
}

std::string format_pi_multiple(const Rational& c) {
  if (c.num == 0) return "0";
  std::string out = c.num < 0 ? "-" : "";
  const std::int64_t mag = c.num < 0 ? -c.num : c.num;
  if (mag != 1) out += std::to_string(mag);
  out += "pi";
  if (c.den != 1) out += "/" + std::to_string(c.den);
  return out;
}

GroupSignature GroupSignature::parse(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) parts.push_back(item);
  if (parts.size() < 2) throw InvalidArgument("signature must read g,r,e1,...,er");
  auto to_int = [](const std::string& s) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(s, &used);
    } catch (const std::exception&) {
      throw InvalidArgument("signature entry is not an integer: " + s);
    }
    if (used != s.size()) throw InvalidArgument("signature entry is not an integer: " + s);
    return v;
  };
  GroupSignature sig;
  sig.genus = to_int(parts[0]);
  sig.r = to_int(parts[1]);
  for (std::size_t i = 2; i < parts.size(); ++i) {
    const std::string& p = parts[i];
    sig.orders.push_back(p == "inf" || p == "oo" || p == "infinity" ? kCusp : to_int(p));
  }
  sig.validate();
  return sig;
}

void GroupSignature::validate() const {
  if (genus < 0) throw InvalidArgument("signature genus must be non-negative");
  if (r < 0 || static_cast<std::size_t>(r) != orders.size()) {
    throw InvalidArgument("signature cycle count must equal the number of orders");
  }
  for (int e : orders) {
    if (e != kCusp && e < 2) throw InvalidArgument("elliptic orders must be at least 2");
  }
}

std::string GroupSignature::str() const {
  std::string out = std::to_string(genus) + "," + std::to_string(r);
  for (int e : orders) out += "," + (e == kCusp ? std::string("inf") : std::to_string(e));
  return out;
}

Rational fundamental_area_over_pi(const GroupSignature& sig) {
  sig.validate();
  Rational acc(2 * sig.genus - 2);
  for (int e : sig.orders) acc = acc + (e == GroupSignature::kCusp ? Rational(1) : Rational(e - 1, e));
  const Rational area = Rational(2) * acc;
  if (area.num <= 0) throw InvalidSignature("signature has non-positive area " + format_pi_multiple(area));
  return area;
}


double fundamental_area(const GroupSignature& sig) { return kPi * fundamental_area_over_pi(sig).value(); }

Rational poincare_zero_count_exact(int m, const GroupSignature& sig) {
  return Rational(m) * fundamental_area_over_pi(sig) * Rational(1, 2);
}

double poincare_zero_count(int m, const GroupSignature& sig) { return poincare_zero_count_exact(m, sig).value(); }

int dim_hol(int m, const GroupSignature& sig) {
  sig.validate();
  if (m < 0) return 0;
  if (m == 0) return 1;
  if (m == 1) return sig.genus;
  long long dim = static_cast<long long>(2 * m - 1) * (sig.genus - 1);
  for (int e : sig.orders) {
    // floor(m (1 - 1/e)); a cusp contributes m.
    dim += e == GroupSignature::kCusp ? m : (static_cast<long long>(m) * (e - 1)) / e;
  }
  return static_cast<int>(dim);
}

std::string to_string(Verdict v) {
  return v == Verdict::necessarily_incomplete ? "necessarily_incomplete" : "condition_met";
}

BoundReport check_theorem2(const HyperLevelSpec& spec, double m0) {
  spec.validate();
  if (!(m0 > 0.0)) throw InvalidArgument("check_theorem2: m0 must be positive");
  BoundReport r;
  r.check = "weight_threshold";
  r.m0 = m0;
  r.threshold = (spec.B - spec.n) / (2.0 * (1.0 + spec.n));
  r.satisfied = r.m0 >= r.threshold;
  r.verdict = r.satisfied ? Verdict::condition_met : Verdict::necessarily_incomplete;
  return r;
}

BoundReport check_corollary1(const HyperLevelSpec& spec, const GroupSignature& sig) {
  spec.validate();
  const Rational area_pi = fundamental_area_over_pi(sig);
  BoundReport r;
  r.check = "covolume";
  r.area = kPi * area_pi.value();
  r.area_exact = format_pi_multiple(area_pi);
  r.area_bound = 4.0 * kPi * (1.0 + spec.n) / (spec.B - spec.n);
  // S_G <= 4 pi (1+n)/(B-n)  <=>  2 pi / S_G >= (B-n)/(2(1+n)).
  r.m0 = 2.0 / area_pi.value();
  r.threshold = (spec.B - spec.n) / (2.0 * (1.0 + spec.n));
  r.satisfied = r.m0 >= r.threshold;
  r.verdict = r.satisfied ? Verdict::condition_met : Verdict::necessarily_incomplete;
  if (sig.genus == 0 && sig.orders == GroupSignature::modular().orders) {
    const double ratio = (spec.B - spec.n) / (1.0 + spec.n);
    r.notes.push_back("modular group: condition_met iff (B-n)/(1+n) <= 12; here (B-n)/(1+n) = " +
                      std::to_string(ratio));
    r.notes.push_back("the inequality 1/6 >= 2(1+n)/(B-n) sometimes quoted for this case has the direction reversed");
  }
  return r;
}

}  // namespace landau
