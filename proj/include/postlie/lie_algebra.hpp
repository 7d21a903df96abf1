#ifndef POSTLIE_LIE_ALGEBRA_HPP
#define POSTLIE_LIE_ALGEBRA_HPP

#include "linalg.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace postlie {

/// The input is not a Lie algebra (antisymmetry or Jacobi fails).
struct InvalidAlgebraError : Error {
  using Error::Error;
};

/// An operation's mathematical precondition does not hold.
struct PreconditionError : Error {
  using Error::Error;
};

/// Structure constants c(i,j,k) with [e_i, e_j] = sum_k c(i,j,k) e_k. Both
/// orientations (i,j) and (j,i) are stored; antisymmetry is checked by
/// validate(), never assumed.
class LieAlgebra {
 public:
  LieAlgebra() = default;
  explicit LieAlgebra(std::size_t dim) : dim_(dim), c_(dim * dim * dim, Rational(0)) {}

  std::size_t dim() const { return dim_; }

  const Rational& c(std::size_t i, std::size_t j, std::size_t k) const { return c_[(i * dim_ + j) * dim_ + k]; }
  Rational& c(std::size_t i, std::size_t j, std::size_t k) { return c_[(i * dim_ + j) * dim_ + k]; }

  std::span<const Rational> basis_bracket(std::size_t i, std::size_t j) const {
    return {c_.data() + (i * dim_ + j) * dim_, dim_};
  }

  /// Sets [e_i, e_j] = v and [e_j, e_i] = -v.
  void set_bracket(std::size_t i, std::size_t j, const Vector& v) {
    check_index(i);
    check_index(j);
    if (v.size() != dim_) throw DimensionError("bracket value has wrong length");
    for (std::size_t k = 0; k < dim_; ++k) {
      c(i, j, k) = v[k];
      c(j, i, k) = -v[k];
    }
  }

  /// Bilinear expansion sum_ij x_i y_j [e_i, e_j].
  Vector bracket(std::span<const Rational> x, std::span<const Rational> y) const {
    if (x.size() != dim_ || y.size() != dim_) throw DimensionError("bracket: vector length does not match dim");
    Vector r = zero_vector(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
      if (x[i] == 0) continue;
      for (std::size_t j = 0; j < dim_; ++j) {
        if (y[j] == 0) continue;
        const Rational w = x[i] * y[j];
        auto row = basis_bracket(i, j);
        for (std::size_t k = 0; k < dim_; ++k)
          if (row[k] != 0) r[k] += w * row[k];
      }
    }
    return r;
  }

  const std::vector<std::string>& labels() const { return labels_; }
  void set_labels(std::vector<std::string> labels) {
    if (!labels.empty() && labels.size() != dim_) throw DimensionError("label count does not match dim");
    labels_ = std::move(labels);
  }

  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) { return a.dim_ == b.dim_ && a.c_ == b.c_; }

 private:
  void check_index(std::size_t i) const {
    if (i >= dim_) throw DimensionError("basis index out of range");
  }

  std::size_t dim_ = 0;
  Vector c_;
  std::vector<std::string> labels_;
};

struct AlgebraViolation {
  enum class Kind { antisymmetry, jacobi };
  Kind kind;
  std::array<std::size_t, 3> indices;  // (i,j,k) for antisymmetry, (i,j,l) for Jacobi
  Vector residual;                     // one entry for antisymmetry, a dim-vector for Jacobi
};

struct ValidationReport {
  std::vector<AlgebraViolation> violations;
  bool ok() const { return violations.empty(); }
};

inline ValidationReport validate(const LieAlgebra& L) {
  ValidationReport rep;
  const std::size_t n = L.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Rational s = L.c(i, j, k) + L.c(j, i, k);
        if (i == j) s = L.c(i, i, k);
        if (s != 0) rep.violations.push_back({AlgebraViolation::Kind::antisymmetry, {i, j, k}, {s}});
      }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t l = j + 1; l < n; ++l) {
        const Vector ei = unit_vector(n, i), ej = unit_vector(n, j), el = unit_vector(n, l);
        Vector r = L.bracket(L.basis_bracket(i, j), el);
        r = add(r, L.bracket(L.basis_bracket(j, l), ei));
        r = add(r, L.bracket(L.basis_bracket(l, i), ej));
        if (!is_zero(r)) rep.violations.push_back({AlgebraViolation::Kind::jacobi, {i, j, l}, std::move(r)});
      }
  return rep;
}

inline void require_valid(const LieAlgebra& L) {
  if (!validate(L).ok()) throw InvalidAlgebraError("structure constants do not define a Lie algebra");
}

/// Matrix of y -> [x, y]; column j is [x, e_j].
inline Matrix ad_matrix(const LieAlgebra& L, std::span<const Rational> x) {
  const std::size_t n = L.dim();
  if (x.size() != n) throw DimensionError("ad_matrix: vector length does not match dim");
  Matrix m(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    const Vector col = L.bracket(x, unit_vector(n, j));
    for (std::size_t i = 0; i < n; ++i) m(i, j) = col[i];
  }
  return m;
}

inline std::vector<Matrix> ad_basis(const LieAlgebra& L) {
  std::vector<Matrix> out;
  for (std::size_t i = 0; i < L.dim(); ++i) out.push_back(ad_matrix(L, unit_vector(L.dim(), i)));
  return out;
}

/// K(i,j) = tr(ad e_i ad e_j).
inline Matrix killing_form(const LieAlgebra& L) {
  const auto ads = ad_basis(L);
  const std::size_t n = L.dim();
  Matrix k(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Rational t = 0;
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
          if (ads[i](a, b) != 0 && ads[j](b, a) != 0) t += ads[i](a, b) * ads[j](b, a);
      k(i, j) = t;
      k(j, i) = t;
    }
  return k;
}

/// span{[u, v] : u in U, v in V}.
inline Subspace subspace_bracket(const LieAlgebra& L, const Subspace& U, const Subspace& V) {
  if (U.ambient_dim() != L.dim() || V.ambient_dim() != L.dim())
    throw DimensionError("subspace_bracket: ambient dimension mismatch");
  std::vector<Vector> vs;
  for (std::size_t a = 0; a < U.dim(); ++a)
    for (std::size_t b = 0; b < V.dim(); ++b) {
      Vector w = L.bracket(U.basis().row(a), V.basis().row(b));
      if (!is_zero(w)) vs.push_back(std::move(w));
    }
  return Subspace::span(vs, L.dim());
}

inline bool is_subalgebra(const LieAlgebra& L, const Subspace& U) {
  return U.contains(subspace_bracket(L, U, U));
}

inline bool is_ideal(const LieAlgebra& L, const Subspace& U) {
  return U.contains(subspace_bracket(L, Subspace::full(L.dim()), U));
}

/// Z(L) = {x : [e_j, x] = 0 for all j}.
inline Subspace center(const LieAlgebra& L) {
  const std::size_t n = L.dim();
  Matrix stacked(n * n, n);
  for (std::size_t j = 0; j < n; ++j) {
    const Matrix a = ad_matrix(L, unit_vector(n, j));
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) stacked(j * n + r, c) = a(r, c);
  }
  return nullspace(stacked);
}

/// Derived series L, [L,L], ... until a term is 0 or repeats.
inline std::vector<Subspace> derived_series(const LieAlgebra& L) {
  std::vector<Subspace> s{Subspace::full(L.dim())};
  while (true) {
    Subspace next = subspace_bracket(L, s.back(), s.back());
    const bool stop = next.dim() == 0 || next.dim() == s.back().dim();
    s.push_back(std::move(next));
    if (stop) return s;
  }
}

/// Lower central series L, [L,L], [L,[L,L]], ... until a term is 0 or repeats.
inline std::vector<Subspace> lower_central_series(const LieAlgebra& L) {
  const Subspace full = Subspace::full(L.dim());
  std::vector<Subspace> s{full};
  while (true) {
    Subspace next = subspace_bracket(L, full, s.back());
    const bool stop = next.dim() == 0 || next.dim() == s.back().dim();
    s.push_back(std::move(next));
    if (stop) return s;
  }
}

struct InvariantReport {
  std::size_t dim = 0;
  std::vector<std::size_t> derived_series_dims;
  std::vector<std::size_t> lower_central_dims;
  std::size_t center_dim = 0;
  std::size_t killing_rank = 0;
  /// Number of bracket steps until the derived series vanishes (k for k-step solvable).
  std::optional<std::size_t> derived_length;
  bool is_solvable = false;
  bool is_nilpotent = false;
  bool is_semisimple = false;
  bool is_perfect = false;
  bool is_unimodular = false;
};

inline InvariantReport invariants(const LieAlgebra& L) {
  require_valid(L);
  InvariantReport r;
  r.dim = L.dim();
  for (const auto& s : derived_series(L)) r.derived_series_dims.push_back(s.dim());
  for (const auto& s : lower_central_series(L)) r.lower_central_dims.push_back(s.dim());
  r.center_dim = center(L).dim();
  r.killing_rank = rank(killing_form(L));
  r.is_solvable = r.derived_series_dims.back() == 0;
  if (r.is_solvable) {
    std::size_t k = 0;
    while (r.derived_series_dims[k] != 0) ++k;
    r.derived_length = k;
  }
  r.is_nilpotent = r.lower_central_dims.back() == 0;
  // A zero-dimensional algebra is not counted as semisimple.
  r.is_semisimple = r.dim > 0 && r.killing_rank == r.dim;
  r.is_perfect = r.derived_series_dims[1] == r.dim;
  r.is_unimodular = true;
  for (const auto& a : ad_basis(L))
    if (a.trace() != 0) r.is_unimodular = false;
  return r;
}

inline LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b) {
  const std::size_t n = a.dim() + b.dim();
  LieAlgebra s(n);
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      for (std::size_t k = 0; k < a.dim(); ++k) s.c(i, j, k) = a.c(i, j, k);
  const std::size_t o = a.dim();
  for (std::size_t i = 0; i < b.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j)
      for (std::size_t k = 0; k < b.dim(); ++k) s.c(o + i, o + j, o + k) = b.c(i, j, k);
  if (!a.labels().empty() && !b.labels().empty()) {
    auto labels = a.labels();
    labels.insert(labels.end(), b.labels().begin(), b.labels().end());
    s.set_labels(std::move(labels));
  }
  return s;
}

/// D{x,y} = {Dx,y} + {x,Dy} on all basis pairs.
inline bool is_derivation(const LieAlgebra& L, const Matrix& D) {
  const std::size_t n = L.dim();
  if (D.rows() != n || D.cols() != n) throw DimensionError("derivation matrix has wrong shape");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vector ei = unit_vector(n, i), ej = unit_vector(n, j);
      const Vector lhs = D.apply(L.basis_bracket(i, j));
      const Vector rhs = add(L.bracket(D.column(i), ej), L.bracket(ei, D.column(j)));
      if (lhs != rhs) return false;
    }
  return true;
}

/// n ⋊ span(D) with [(x,D),(x',D')] = ({x,x'} + D x' - D' x, [D,D']).
/// Basis: the basis of n followed by the given derivations, which must be
/// linearly independent and closed under commutators.
inline LieAlgebra semidirect_with_derivations(const LieAlgebra& n, const std::vector<Matrix>& derivations) {
  const std::size_t m = n.dim();
  const std::size_t k = derivations.size();
  for (const auto& d : derivations)
    if (!is_derivation(n, d)) throw PreconditionError("semidirect product: input matrix is not a derivation");

  std::vector<Vector> flat;
  for (const auto& d : derivations) flat.push_back(d.flatten());
  const Matrix cols = Matrix::from_columns(flat, m * m);
  if (rank(cols) != k) throw PreconditionError("semidirect product: derivations are linearly dependent");

  LieAlgebra s(m + k);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t c = 0; c < m; ++c) s.c(i, j, c) = n.c(i, j, c);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t j = 0; j < m; ++j) {
      // [d_a, e_j] = d_a(e_j) and [e_j, d_a] = -d_a(e_j)
      for (std::size_t c = 0; c < m; ++c) {
        s.c(m + a, j, c) = derivations[a](c, j);
        s.c(j, m + a, c) = -derivations[a](c, j);
      }
    }
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) {
      const Matrix comm = commutator(derivations[a], derivations[b]);
      const auto coords = solve(cols, comm.flatten());
      if (!coords) throw PreconditionError("semidirect product: commutator leaves the span of the derivations");
      for (std::size_t c = 0; c < k; ++c) s.c(m + a, m + b, m + c) = (*coords)[c];
    }
  return s;
}

struct HomCheck {
  bool is_hom = false;
  bool is_injective = false;
  bool is_iso = false;
};

/// Checks that M (dst.dim x src.dim) intertwines the two brackets.
inline HomCheck check_hom_witness(const LieAlgebra& src, const LieAlgebra& dst, const Matrix& M) {
  if (M.rows() != dst.dim() || M.cols() != src.dim()) throw DimensionError("witness matrix has wrong shape");
  HomCheck h;
  h.is_hom = true;
  for (std::size_t i = 0; i < src.dim() && h.is_hom; ++i)
    for (std::size_t j = i + 1; j < src.dim(); ++j) {
      const Vector lhs = M.apply(src.basis_bracket(i, j));
      const Vector rhs = dst.bracket(M.column(i), M.column(j));
      if (lhs != rhs) {
        h.is_hom = false;
        break;
      }
    }
  h.is_injective = rank(M) == src.dim();
  h.is_iso = h.is_hom && M.square() && h.is_injective;
  return h;
}

/// Structure constants of a subalgebra U in its canonical (RREF) basis.
inline LieAlgebra restrict_to(const LieAlgebra& L, const Subspace& U) {
  if (!is_subalgebra(L, U)) throw PreconditionError("restrict_to: subspace is not a subalgebra");
  LieAlgebra r(U.dim());
  for (std::size_t i = 0; i < U.dim(); ++i)
    for (std::size_t j = 0; j < U.dim(); ++j) {
      const auto coords = U.coordinates(L.bracket(U.basis().row(i), U.basis().row(j)));
      for (std::size_t k = 0; k < U.dim(); ++k) r.c(i, j, k) = (*coords)[k];
    }
  return r;
}

/// The same algebra written in the basis given by the columns of P.
inline LieAlgebra change_basis(const LieAlgebra& L, const Matrix& P) {
  const auto inv = inverse(P);
  if (!inv || P.rows() != L.dim()) throw PreconditionError("change_basis: P must be invertible of size dim");
  const std::size_t n = L.dim();
  LieAlgebra r(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vector v = inv->apply(L.bracket(P.column(i), P.column(j)));
      for (std::size_t k = 0; k < n; ++k) r.c(i, j, k) = v[k];
    }
  return r;
}

}  // namespace postlie

#endif  // POSTLIE_LIE_ALGEBRA_HPP
