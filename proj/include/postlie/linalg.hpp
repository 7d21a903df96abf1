#ifndef POSTLIE_LINALG_HPP
#define POSTLIE_LINALG_HPP

#include "matrix.hpp"

#include <optional>
#include <vector>

namespace postlie {

struct RrefResult {
  Matrix reduced;                   // same shape as the input, zero rows at the bottom
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
  std::size_t rank() const { return pivots.size(); }
};

/// Gauss-Jordan elimination to the unique reduced row-echelon form. Each pivot
/// row is normalized as soon as it is chosen, which keeps entries small.
inline RrefResult rref(Matrix m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    const Rational inv = 1 / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      const Rational f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (m(r, j) != 0) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

inline std::size_t rank(const Matrix& m) { return rref(m).rank(); }

/// Canonical linear subspace of Q^ambient: rows of `basis` are the nonzero
/// rows of a reduced row-echelon form. Equal subspaces have equal bases.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient) : ambient_(ambient), basis_(0, ambient) {}

  /// Row span of `spanning` (any number of rows, dependent or not).
  static Subspace span(const Matrix& spanning) {
    Subspace s(spanning.cols());
    if (spanning.rows() == 0) return s;
    RrefResult r = rref(spanning);
    s.basis_ = Matrix(r.rank(), spanning.cols());
    for (std::size_t i = 0; i < r.rank(); ++i)
      for (std::size_t j = 0; j < spanning.cols(); ++j) s.basis_(i, j) = r.reduced(i, j);
    s.pivots_ = std::move(r.pivots);
    return s;
  }

  static Subspace span(const std::vector<Vector>& vectors, std::size_t ambient) {
    return span(Matrix::from_rows(vectors, ambient));
  }

  static Subspace full(std::size_t ambient) { return span(Matrix::identity(ambient)); }

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  std::vector<Vector> basis_vectors() const {
    std::vector<Vector> out;
    for (std::size_t i = 0; i < dim(); ++i) out.emplace_back(basis_.row(i).begin(), basis_.row(i).end());
    return out;
  }

  /// Residual of v after elimination against the echelon basis; zero iff v is in the span.
  Vector reduce(std::span<const Rational> v) const {
    if (v.size() != ambient_) throw DimensionError("vector length does not match ambient dimension");
    Vector r(v.begin(), v.end());
    for (std::size_t i = 0; i < dim(); ++i) {
      const Rational f = r[pivots_[i]];
      if (f == 0) continue;
      for (std::size_t j = pivots_[i]; j < ambient_; ++j)
        if (basis_(i, j) != 0) r[j] -= f * basis_(i, j);
    }
    return r;
  }

  bool contains(std::span<const Rational> v) const { return is_zero(reduce(v)); }

  bool contains(const Subspace& other) const {
    check_ambient(other);
    for (std::size_t i = 0; i < other.dim(); ++i)
      if (!contains(other.basis_.row(i))) return false;
    return true;
  }

  /// Coordinates of v in the stored basis, or nullopt when v is not in the span.
  std::optional<Vector> coordinates(std::span<const Rational> v) const {
    if (!contains(v)) return std::nullopt;
    // An RREF basis row i has a 1 at pivots_[i] and every other row has 0 there.
    Vector c(dim());
    for (std::size_t i = 0; i < dim(); ++i) c[i] = v[pivots_[i]];
    return c;
  }

  /// Image under coordinate restriction to [begin, end), re-echelonized.
  Subspace project_block(std::size_t begin, std::size_t end) const {
    if (begin > end || end > ambient_) throw DimensionError("project_block: range out of bounds");
    Matrix m(dim(), end - begin);
    for (std::size_t i = 0; i < dim(); ++i)
      for (std::size_t j = begin; j < end; ++j) m(i, j - begin) = basis_(i, j);
    if (m.rows() == 0) return Subspace(end - begin);
    return span(m);
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

  void check_ambient(const Subspace& other) const {
    if (ambient_ != other.ambient_) throw DimensionError("subspaces live in different ambient spaces");
  }

 private:
  std::size_t ambient_ = 0;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

/// Kernel {v : m v = 0} as a canonical subspace of Q^cols.
inline Subspace nullspace(const Matrix& m) {
  const RrefResult r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : r.pivots) is_pivot[p] = true;
  std::vector<Vector> kernel;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v = zero_vector(m.cols());
    v[free] = 1;
    for (std::size_t i = 0; i < r.rank(); ++i) v[r.pivots[i]] = -r.reduced(i, free);
    kernel.push_back(std::move(v));
  }
  return Subspace::span(kernel, m.cols());
}

/// One solution x of a x = b, or nullopt if the system is inconsistent.
inline std::optional<Vector> solve(const Matrix& a, std::span<const Rational> b) {
  if (b.size() != a.rows()) throw DimensionError("solve: right-hand side length mismatch");
  Matrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  const RrefResult r = rref(std::move(aug));
  if (!r.pivots.empty() && r.pivots.back() == a.cols()) return std::nullopt;
  Vector x = zero_vector(a.cols());
  for (std::size_t i = 0; i < r.rank(); ++i) x[r.pivots[i]] = r.reduced(i, a.cols());
  return x;
}

inline Subspace sum(const Subspace& a, const Subspace& b) {
  a.check_ambient(b);
  return Subspace::span(stack(a.basis(), b.basis()));
}

/// a ∩ b from the kernel of [A^T | -B^T]: x^T A = y^T B.
inline Subspace intersection(const Subspace& a, const Subspace& b) {
  a.check_ambient(b);
  const std::size_t n = a.ambient_dim();
  if (a.dim() == 0 || b.dim() == 0) return Subspace(n);
  Matrix sys(n, a.dim() + b.dim());
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < a.dim(); ++i) sys(k, i) = a.basis()(i, k);
    for (std::size_t j = 0; j < b.dim(); ++j) sys(k, a.dim() + j) = -b.basis()(j, k);
  }
  const Subspace ker = nullspace(sys);
  std::vector<Vector> vs;
  for (std::size_t r = 0; r < ker.dim(); ++r) {
    Vector v = zero_vector(n);
    for (std::size_t i = 0; i < a.dim(); ++i) {
      const Rational& x = ker.basis()(r, i);
      if (x == 0) continue;
      for (std::size_t k = 0; k < n; ++k) v[k] += x * a.basis()(i, k);
    }
    vs.push_back(std::move(v));
  }
  return Subspace::span(vs, n);
}

/// Inverse of a square matrix, or nullopt when singular.
inline std::optional<Matrix> inverse(const Matrix& m) {
  if (!m.square()) throw DimensionError("inverse of non-square matrix");
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  const RrefResult r = rref(std::move(aug));
  if (r.rank() < n || (n > 0 && r.pivots[n - 1] != n - 1)) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = r.reduced(i, n + j);
  return inv;
}

}  // namespace postlie

#endif  // POSTLIE_LINALG_HPP
