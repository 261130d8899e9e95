#include <cmath>
#include <set>
#include <sstream>
#include <unordered_map>

#include "landau/errors.hpp"
#include "landau/fuchsian.hpp"

namespace landau {

namespace {

__extension__ typedef __int128 int128;

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

MoebiusElement::MoebiusElement(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d)
    : a_(a), b_(b), c_(c), d_(d) {
  const int128 det = static_cast<int128>(a) * d - static_cast<int128>(b) * c;
  if (det != 1) throw InvalidArgument("Moebius element must have determinant 1");
  const std::int64_t lead = a != 0 ? a : (b != 0 ? b : (c != 0 ? c : d));
  if (lead < 0) {
    a_ = -a;
    b_ = -b;
    c_ = -c;
    d_ = -d;
  }
}

MoebiusElement MoebiusElement::operator*(const MoebiusElement& o) const {
  return {checked_add(checked_mul(a_, o.a_), checked_mul(b_, o.c_)),
          checked_add(checked_mul(a_, o.b_), checked_mul(b_, o.d_)),
          checked_add(checked_mul(c_, o.a_), checked_mul(d_, o.c_)),
          checked_add(checked_mul(c_, o.b_), checked_mul(d_, o.d_))};
}

Complex MoebiusElement::apply(Complex z) const {
  return (double(a_) * z + double(b_)) / (double(c_) * z + double(d_));
}

bool MoebiusElement::in_principal_congruence(std::int64_t level) const {
  if (level <= 1) return true;
  auto mod = [level](std::int64_t v) { return ((v % level) + level) % level; };
  const bool plus = mod(a_ - 1) == 0 && mod(b_) == 0 && mod(c_) == 0 && mod(d_ - 1) == 0;
  const bool minus = mod(a_ + 1) == 0 && mod(b_) == 0 && mod(c_) == 0 && mod(d_ + 1) == 0;
  return plus || minus;
}

std::string MoebiusElement::str() const {
  std::ostringstream os;
  os << "(" << a_ << "," << b_ << ";" << c_ << "," << d_ << ")";
  return os.str();
}

UpperHalfPoint moebius_apply(const MoebiusElement& g, UpperHalfPoint z) {
  if (!(z.y > 0.0)) throw InvalidArgument("moebius_apply: point must lie in the upper half-plane");
  const Complex w = g.apply(z.z());
  // Im(gz) = Im z / |cz+d|^2 keeps the imaginary part free of cancellation.
  return {w.real(), z.y / std::norm(g.cocycle(z.z()))};
}

bool in_fundamental_domain(Complex z, double tol) {
  return z.imag() > 0.0 && std::abs(z.real()) <= 0.5 + tol && std::norm(z) >= 1.0 - tol;
}

Reduction reduce_to_fundamental(UpperHalfPoint z) {
  if (!(z.y > 0.0)) throw InvalidArgument("reduce_to_fundamental: point must lie in the upper half-plane");
  Complex w = z.z();
  MoebiusElement g = MoebiusElement::identity();
  for (int iter = 0; iter < 10000; ++iter) {
    const double shift = std::ceil(w.real() - 0.5);
    if (shift != 0.0) {
      if (std::abs(shift) > 9e15) throw InvalidArgument("reduce_to_fundamental: real part too large");
      const auto k = static_cast<std::int64_t>(shift);
      w -= shift;
      g = MoebiusElement::T_power(-k) * g;
    }
    if (std::norm(w) < 1.0 - 1e-14) {
      w = -1.0 / w;
      g = MoebiusElement::S() * g;
    } else {
      return {{w.real(), w.imag()}, g};
    }
  }
  throw InvalidArgument("reduce_to_fundamental: no convergence");
}

GroupChoice GroupChoice::congruence(std::int64_t level) {
  if (level < 1) throw InvalidArgument("congruence level must be positive");
  return {Kind::congruence, level};
}

std::string GroupChoice::str() const {
  return kind == Kind::modular ? "modular" : "congruence(" + std::to_string(level) + ")";
}

std::vector<OrbitPoint> orbit(const GroupChoice& group, UpperHalfPoint seed, int max_word_length) {
  if (max_word_length < 0) throw InvalidArgument("orbit: word length must be non-negative");
  if (!(seed.y > 0.0)) throw InvalidArgument("orbit: seed must lie in the upper half-plane");

  struct Entry {
    MoebiusElement g;
    std::string word;
  };
  const std::pair<MoebiusElement, const char*> gens[] = {
      {MoebiusElement::S(), "S"}, {MoebiusElement::T(), "T"}, {MoebiusElement::T_inverse(), "Ti"}};

  std::set<MoebiusElement> seen{MoebiusElement::identity()};
  std::vector<Entry> all{{MoebiusElement::identity(), "I"}};
  std::vector<Entry> frontier = all;
  for (int len = 1; len <= max_word_length; ++len) {
    std::vector<Entry> next;
    for (const Entry& e : frontier) {
      for (const auto& [gen, name] : gens) {
        const MoebiusElement h = gen * e.g;
        if (!seen.insert(h).second) continue;
        next.push_back({h, e.word == "I" ? std::string(name) : std::string(name) + "." + e.word});
      }
    }
    all.insert(all.end(), next.begin(), next.end());
    frontier = std::move(next);
  }

  // Point dedup through a coarse spatial hash; neighbours are checked so
  // points straddling a cell boundary still merge.
  const double cell = 1e-9;
  auto key = [cell](double v) { return static_cast<std::int64_t>(std::floor(v / cell)); };
  std::unordered_map<std::int64_t, std::vector<std::size_t>> buckets;
  auto bucket_id = [](std::int64_t kx, std::int64_t ky) { return kx * 1000003LL ^ ky; };

  std::vector<OrbitPoint> out;
  for (const Entry& e : all) {
    if (group.kind == GroupChoice::Kind::congruence && !e.g.in_principal_congruence(group.level)) continue;
    const UpperHalfPoint p = moebius_apply(e.g, seed);
    const std::int64_t kx = key(p.x), ky = key(p.y);
    bool duplicate = false;
    for (std::int64_t dx = -1; dx <= 1 && !duplicate; ++dx) {
      for (std::int64_t dy = -1; dy <= 1 && !duplicate; ++dy) {
        auto it = buckets.find(bucket_id(kx + dx, ky + dy));
        if (it == buckets.end()) continue;
        for (std::size_t idx : it->second) {
          if (std::abs(out[idx].point.x - p.x) <= 1e-12 && std::abs(out[idx].point.y - p.y) <= 1e-12) {
            duplicate = true;
            break;
          }
        }
      }
    }
    if (duplicate) continue;
    buckets[bucket_id(kx, ky)].push_back(out.size());
    out.push_back({p, e.g, e.word});
  }
  return out;
}

}  // namespace landau
