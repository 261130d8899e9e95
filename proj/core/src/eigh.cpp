#include <algorithm>
#include <cmath>
#include <numeric>

#include "landau/errors.hpp"
#include "landau/numerics.hpp"

namespace landau {

HermitianMatrix::HermitianMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim, Complex(0.0)) {
  if (dim == 0) throw InvalidArgument("HermitianMatrix: dimension must be positive");
}

HermitianMatrix::HermitianMatrix(std::size_t dim, std::vector<Complex> entries)
    : dim_(dim), entries_(std::move(entries)) {
  if (dim == 0) throw InvalidArgument("HermitianMatrix: dimension must be positive");
  if (entries_.size() != dim * dim) throw InvalidArgument("HermitianMatrix: wrong number of entries");
  for (const Complex& v : entries_) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw InvalidArgument("HermitianMatrix: non-finite entry");
    }
  }
  if (hermitian_defect() > 1e-12) throw InvalidArgument("HermitianMatrix: input is not Hermitian");
}

HermitianMatrix HermitianMatrix::identity(std::size_t dim) {
  HermitianMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m.at(i, i) = 1.0;
  return m;
}

HermitianMatrix HermitianMatrix::leading(std::size_t k) const {
  if (k == 0 || k > dim_) throw InvalidArgument("HermitianMatrix::leading: bad block size");
  HermitianMatrix out(k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) out.at(i, j) = (*this)(i, j);
  return out;
}

double HermitianMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const Complex& v : entries_) s += std::norm(v);
  return std::sqrt(s);
}

double HermitianMatrix::hermitian_defect() const {
  double defect = 0.0;
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i; j < dim_; ++j) defect += std::norm((*this)(i, j) - std::conj((*this)(j, i)));
  const double norm = frobenius_norm();
  return norm == 0.0 ? 0.0 : std::sqrt(defect) / norm;
}

EigenDecomposition eigh(const HermitianMatrix& m) {
  const std::size_t n = m.dim();
  if (m.hermitian_defect() > 1e-12) throw InvalidArgument("eigh: input is not Hermitian");

  std::vector<Complex> a(m.entries().begin(), m.entries().end());
  auto A = [&](std::size_t i, std::size_t j) -> Complex& { return a[i * n + j]; };
  // Symmetrize exactly so the rotations see a Hermitian matrix.
  for (std::size_t i = 0; i < n; ++i) {
    A(i, i) = A(i, i).real();
    for (std::size_t j = i + 1; j < n; ++j) {
      const Complex v = 0.5 * (A(i, j) + std::conj(A(j, i)));
      A(i, j) = v;
      A(j, i) = std::conj(v);
    }
  }
  std::vector<Complex> v(n * n, Complex(0.0));  // column-major
  for (std::size_t i = 0; i < n; ++i) v[i * n + i] = 1.0;

  const double scale = m.frobenius_norm();
  for (int sweep = 0; sweep < 100 && scale > 0.0; ++sweep) {
    double off = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) off += std::norm(A(i, j));
    if (std::sqrt(2.0 * off) < 1e-15 * scale) break;

    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex b = A(p, q);
        const double mag = std::abs(b);
        if (mag <= 1e-300 || mag < 1e-18 * scale) continue;
        const Complex phase = b / mag;  // e^{i phi}
        const double app = A(p, p).real();
        const double aqq = A(q, q).real();
        const double theta = (aqq - app) / (2.0 * mag);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        // G restricted to (p,q): [[c, s], [-s e^{-i phi}, c e^{-i phi}]].
        const Complex gpp = c, gpq = s;
        const Complex gqp = -s * std::conj(phase), gqq = c * std::conj(phase);
        for (std::size_t k = 0; k < n; ++k) {
          const Complex akp = A(k, p), akq = A(k, q);
          A(k, p) = akp * gpp + akq * gqp;
          A(k, q) = akp * gpq + akq * gqq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const Complex apk = A(p, k), aqk = A(q, k);
          A(p, k) = std::conj(gpp) * apk + std::conj(gqp) * aqk;
          A(q, k) = std::conj(gpq) * apk + std::conj(gqq) * aqk;
        }
        A(p, q) = 0.0;
        A(q, p) = 0.0;
        A(p, p) = A(p, p).real();
        A(q, q) = A(q, q).real();
        for (std::size_t k = 0; k < n; ++k) {
          const Complex vkp = v[p * n + k], vkq = v[q * n + k];
          v[p * n + k] = vkp * gpp + vkq * gqp;
          v[q * n + k] = vkp * gpq + vkq * gqq;
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return A(x, x).real() < A(y, y).real(); });
  EigenDecomposition out;
  out.values.resize(n);
  out.vectors.resize(n * n);
  for (std::size_t j = 0; j < n; ++j) {
    out.values[j] = A(order[j], order[j]).real();
    std::copy_n(v.begin() + static_cast<std::ptrdiff_t>(order[j] * n), n,
                out.vectors.begin() + static_cast<std::ptrdiff_t>(j * n));
  }
  return out;
}

}  // namespace landau
