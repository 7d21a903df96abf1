#ifndef POSTLIE_POST_LIE_HPP
#define POSTLIE_POST_LIE_HPP

// Post-Lie products on a pair of Lie brackets [,] (g) and {,} (n) on one
// vector space: a bilinear x.y with
//   (1) x.y - y.x = [x,y] - {x,y}
//   (2) [x,y].z = x.(y.z) - y.(x.z)
//   (3) x.{y,z} = {x.y, z} + {y, x.z}
// Every identity is checked on basis tuples, which is equivalent by
// multilinearity.

#include "derivations.hpp"
#include "lie_algebra.hpp"

#include <optional>
#include <string>
#include <vector>

namespace postlie {

/// e_i . e_j = sum_k p(i,j,k) e_k. No symmetry is assumed.
class BilinearProduct {
 public:
  BilinearProduct() = default;
  explicit BilinearProduct(std::size_t dim) : dim_(dim), p_(dim * dim * dim, Rational(0)) {}

  std::size_t dim() const { return dim_; }
  const Rational& p(std::size_t i, std::size_t j, std::size_t k) const { return p_[(i * dim_ + j) * dim_ + k]; }
  Rational& p(std::size_t i, std::size_t j, std::size_t k) { return p_[(i * dim_ + j) * dim_ + k]; }

  std::span<const Rational> basis_product(std::size_t i, std::size_t j) const {
    return {p_.data() + (i * dim_ + j) * dim_, dim_};
  }

  void set_product(std::size_t i, std::size_t j, const Vector& v) {
    if (i >= dim_ || j >= dim_ || v.size() != dim_) throw DimensionError("set_product: index or length out of range");
    for (std::size_t k = 0; k < dim_; ++k) p(i, j, k) = v[k];
  }

  Vector operator()(std::span<const Rational> x, std::span<const Rational> y) const {
    if (x.size() != dim_ || y.size() != dim_) throw DimensionError("product: vector length does not match dim");
    Vector r = zero_vector(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
      if (x[i] == 0) continue;
      for (std::size_t j = 0; j < dim_; ++j) {
        if (y[j] == 0) continue;
        const Rational w = x[i] * y[j];
        auto row = basis_product(i, j);
        for (std::size_t k = 0; k < dim_; ++k)
          if (row[k] != 0) r[k] += w * row[k];
      }
    }
    return r;
  }

  /// L(x): y -> x.y
  Matrix left(std::span<const Rational> x) const {
    Matrix m(dim_, dim_);
    for (std::size_t j = 0; j < dim_; ++j) {
      const Vector col = (*this)(x, unit_vector(dim_, j));
      for (std::size_t i = 0; i < dim_; ++i) m(i, j) = col[i];
    }
    return m;
  }

  /// R(x): y -> y.x
  Matrix right(std::span<const Rational> x) const {
    Matrix m(dim_, dim_);
    for (std::size_t j = 0; j < dim_; ++j) {
      const Vector col = (*this)(unit_vector(dim_, j), x);
      for (std::size_t i = 0; i < dim_; ++i) m(i, j) = col[i];
    }
    return m;
  }

  bool is_zero() const { return postlie::is_zero(p_); }

  friend bool operator==(const BilinearProduct& a, const BilinearProduct& b) {
    return a.dim_ == b.dim_ && a.p_ == b.p_;
  }

 private:
  std::size_t dim_ = 0;
  Vector p_;
};

struct PostLiePair {
  LieAlgebra g;
  LieAlgebra n;
  BilinearProduct prod;

  std::size_t dim() const { return n.dim(); }
};

/// One failing instance of a named identity on a basis tuple.
struct IdentityViolation {
  std::string equation;
  std::vector<std::size_t> indices;
  Vector residual;
};

struct IdentityReport {
  std::vector<IdentityViolation> violations;
  bool ok() const { return violations.empty(); }

  void check(std::string equation, std::vector<std::size_t> indices, const Vector& lhs, const Vector& rhs) {
    Vector r = sub(lhs, rhs);
    if (!is_zero(r)) violations.push_back({std::move(equation), std::move(indices), std::move(r)});
  }
  void append(const IdentityReport& other) {
    violations.insert(violations.end(), other.violations.begin(), other.violations.end());
  }
};

namespace detail {

inline void require_same_dim(const PostLiePair& P) {
  if (P.g.dim() != P.n.dim() || P.prod.dim() != P.n.dim())
    throw DimensionError("post-Lie pair: g, n and product dimensions differ");
}

}  // namespace detail

struct AxiomReport {
  bool g_valid = false;
  bool n_valid = false;
  IdentityReport identities;  // equations "1", "2", "3"
  bool ok() const { return g_valid && n_valid && identities.ok(); }
};

inline AxiomReport check_axioms(const PostLiePair& P) {
  detail::require_same_dim(P);
  const std::size_t d = P.dim();
  const auto& g = P.g;
  const auto& n = P.n;
  const auto& dot = P.prod;
  AxiomReport rep;
  rep.g_valid = validate(g).ok();
  rep.n_valid = validate(n).ok();
  auto e = [d](std::size_t i) { return unit_vector(d, i); };

  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j)
      rep.identities.check("1", {i, j}, sub(Vector(dot.basis_product(i, j).begin(), dot.basis_product(i, j).end()),
                                            Vector(dot.basis_product(j, i).begin(), dot.basis_product(j, i).end())),
                           sub(Vector(g.basis_bracket(i, j).begin(), g.basis_bracket(i, j).end()),
                               Vector(n.basis_bracket(i, j).begin(), n.basis_bracket(i, j).end())));

  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        const Vector lhs = dot(g.basis_bracket(i, j), e(k));
        const Vector rhs = sub(dot(e(i), dot.basis_product(j, k)), dot(e(j), dot.basis_product(i, k)));
        rep.identities.check("2", {i, j, k}, lhs, rhs);
      }

  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = j + 1; k < d; ++k) {
        const Vector lhs = dot(e(i), n.basis_bracket(j, k));
        const Vector rhs = add(n.bracket(dot.basis_product(i, j), e(k)), n.bracket(e(j), dot.basis_product(i, k)));
        rep.identities.check("3", {i, j, k}, lhs, rhs);
      }
  return rep;
}

/// The two cyclic identities that every post-Lie structure satisfies:
///   (4) x.{y,z} + y.{z,x} + z.{x,y} = {[x,y],z} + {[y,z],x} + {[z,x],y}
///   (5) {x,y}.z + {y,z}.x + {z,x}.y = {[x,y],z} + {[y,z],x} + {[z,x],y}
///                                      + [{x,y},z] + [{y,z},x] + [{z,x},y]
/// Both sides are alternating, so triples i<j<l suffice.
inline IdentityReport check_derived_identities(const PostLiePair& P) {
  detail::require_same_dim(P);
  const std::size_t d = P.dim();
  const auto& g = P.g;
  const auto& n = P.n;
  const auto& dot = P.prod;
  IdentityReport rep;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j)
      for (std::size_t l = j + 1; l < d; ++l) {
        const Vector x = unit_vector(d, i), y = unit_vector(d, j), z = unit_vector(d, l);
        const Vector nxy = n.bracket(x, y), nyz = n.bracket(y, z), nzx = n.bracket(z, x);
        const Vector gxy = g.bracket(x, y), gyz = g.bracket(y, z), gzx = g.bracket(z, x);
        const Vector mixed = add(add(n.bracket(gxy, z), n.bracket(gyz, x)), n.bracket(gzx, y));

        const Vector lhs4 = add(add(dot(x, nyz), dot(y, nzx)), dot(z, nxy));
        rep.check("4", {i, j, l}, lhs4, mixed);

        const Vector lhs5 = add(add(dot(nxy, z), dot(nyz, x)), dot(nzx, y));
        const Vector rhs5 = add(mixed, add(add(g.bracket(nxy, z), g.bracket(nyz, x)), g.bracket(nzx, y)));
        rep.check("5", {i, j, l}, lhs5, rhs5);
      }
  return rep;
}

struct LeftMultiplicationReport {
  std::vector<Matrix> left;   // L(e_i)
  std::vector<Matrix> right;  // R(e_i)
  IdentityReport representation;  // "L-rep": L([e_i,e_j]) = [L(e_i), L(e_j)], entries flattened
  IdentityReport derivation;      // "L-der": L(e_i){e_j,e_k} = {L(e_i)e_j, e_k} + {e_j, L(e_i)e_k}
  bool ok() const { return representation.ok() && derivation.ok(); }
};

inline LeftMultiplicationReport left_multiplication_checks(const PostLiePair& P) {
  detail::require_same_dim(P);
  const std::size_t d = P.dim();
  LeftMultiplicationReport rep;
  for (std::size_t i = 0; i < d; ++i) {
    rep.left.push_back(P.prod.left(unit_vector(d, i)));
    rep.right.push_back(P.prod.right(unit_vector(d, i)));
  }
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      const Matrix lhs = P.prod.left(P.g.basis_bracket(i, j));
      rep.representation.check("L-rep", {i, j}, lhs.flatten(), commutator(rep.left[i], rep.left[j]).flatten());
    }
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = j + 1; k < d; ++k) {
        const Matrix& Li = rep.left[i];
        const Vector lhs = Li.apply(P.n.basis_bracket(j, k));
        const Vector rhs = add(P.n.bracket(Li.column(j), unit_vector(d, k)), P.n.bracket(unit_vector(d, j), Li.column(k)));
        rep.derivation.check("L-der", {i, j, k}, lhs, rhs);
      }
  return rep;
}

struct InducedAlgebra {
  LieAlgebra g;
  ValidationReport validation;  // Jacobi/antisymmetry status of g
};

/// [x,y] = x.y - y.x + {x,y}, i.e. identity (1) solved for the g-bracket.
inline InducedAlgebra induce_g(const LieAlgebra& n, const BilinearProduct& prod) {
  if (n.dim() != prod.dim()) throw DimensionError("induce_g: dimension mismatch");
  const std::size_t d = n.dim();
  LieAlgebra g(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) g.c(i, j, k) = prod.p(i, j, k) - prod.p(j, i, k) + n.c(i, j, k);
  g.set_labels(n.labels());
  InducedAlgebra out{std::move(g), {}};
  out.validation = validate(out.g);
  return out;
}

struct PhiInduced {
  BilinearProduct prod;
  PostLiePair pair;
  /// "6": {phi x,y} + {x,phi y} = [x,y] - {x,y};  "7": phi([x,y]) = {phi x, phi y}.
  IdentityReport conditions;
  ValidationReport g_validation;
  bool conditions_hold() const { return conditions.ok() && g_validation.ok(); }
};

/// x.y = {phi(x), y}, with g induced from (1).
inline PhiInduced phi_induced(const LieAlgebra& n, const Matrix& phi) {
  const std::size_t d = n.dim();
  if (phi.rows() != d || phi.cols() != d) throw DimensionError("phi_induced: phi has wrong shape");
  PhiInduced out;
  out.prod = BilinearProduct(d);
  for (std::size_t i = 0; i < d; ++i) {
    const Vector fi = phi.column(i);
    for (std::size_t j = 0; j < d; ++j) out.prod.set_product(i, j, n.bracket(fi, unit_vector(d, j)));
  }
  InducedAlgebra ind = induce_g(n, out.prod);
  out.g_validation = std::move(ind.validation);
  out.pair = PostLiePair{std::move(ind.g), n, out.prod};
  const auto& g = out.pair.g;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      const Vector ei = unit_vector(d, i), ej = unit_vector(d, j);
      const Vector fi = phi.column(i), fj = phi.column(j);
      const Vector lhs6 = add(n.bracket(fi, ej), n.bracket(ei, fj));
      const Vector rhs6 = sub(Vector(g.basis_bracket(i, j).begin(), g.basis_bracket(i, j).end()),
                              Vector(n.basis_bracket(i, j).begin(), n.basis_bracket(i, j).end()));
      out.conditions.check("6", {i, j}, lhs6, rhs6);
      out.conditions.check("7", {i, j}, phi.apply(g.basis_bracket(i, j)), n.bracket(fi, fj));
    }
  return out;
}

struct FamilyReport {
  Matrix A;    // 3x3 block
  Matrix phi;  // 6x6 with A in the lower-left block
  bool constraints_hold = false;  // eps = alpha*delta - beta*gamma and eps^2 + 4 alpha gamma = 0
  bool conditions_hold = false;   // phi_induced(...).conditions_hold()
  bool agree() const { return constraints_hold == conditions_hold; }
};

/// The 3x3 block family on sl2 ⊕ sl2 (basis e1,f1,h1,e2,f2,h2):
///   A = [ alpha      -beta^2/(4 alpha)    beta
///         gamma      -delta^2/(4 gamma)   delta
///         -eps/2     -beta delta/(2 eps)  1 - beta eps/(2 alpha) ]
/// phi maps the first summand into the second through A and kills the second.
inline FamilyReport family_phi_check(const LieAlgebra& n, const Rational& alpha, const Rational& beta,
                                     const Rational& gamma, const Rational& delta, const Rational& eps) {
  if (n.dim() != 6) throw DimensionError("family_phi_check: expects the 6-dimensional sl2 + sl2");
  if (alpha == 0 || gamma == 0 || eps == 0)
    throw PreconditionError("family_phi_check: alpha, gamma and eps must be nonzero");
  FamilyReport r;
  r.A = Matrix(3, 3);
  r.A(0, 0) = alpha;
  r.A(0, 1) = -beta * beta / (4 * alpha);
  r.A(0, 2) = beta;
  r.A(1, 0) = gamma;
  r.A(1, 1) = -delta * delta / (4 * gamma);
  r.A(1, 2) = delta;
  r.A(2, 0) = -eps / 2;
  r.A(2, 1) = -beta * delta / (2 * eps);
  r.A(2, 2) = 1 - beta * eps / (2 * alpha);
  r.phi = Matrix(6, 6);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) r.phi(3 + i, j) = r.A(i, j);
  r.constraints_hold = eps == alpha * delta - beta * gamma && eps * eps + 4 * alpha * gamma == 0;
  r.conditions_hold = phi_induced(n, r.phi).conditions_hold();
  return r;
}

struct SplitResult {
  PostLiePair pair;
  Matrix proj_a;  // projection onto A along B
  Matrix proj_b;  // projection onto B along A
  /// x.y = {phi x, y} with phi = -proj_b.
  Matrix phi;
};

/// For n = A ⊕ B (vector-space sum of subalgebras):
///   (a+b).(a'+b') = -{b, a'+b'},  [a+b, a'+b'] = {a,a'} - {b,b'}.
inline SplitResult split_construction(const LieAlgebra& n, const Subspace& A, const Subspace& B) {
  const std::size_t d = n.dim();
  if (A.ambient_dim() != d || B.ambient_dim() != d) throw DimensionError("split_construction: ambient mismatch");
  if (!is_subalgebra(n, A) || !is_subalgebra(n, B))
    throw PreconditionError("split_construction: A and B must be subalgebras");
  if (A.dim() + B.dim() != d || intersection(A, B).dim() != 0)
    throw PreconditionError("split_construction: A and B do not split the space");

  std::vector<Vector> cols = A.basis_vectors();
  for (auto& v : B.basis_vectors()) cols.push_back(std::move(v));
  const Matrix S = Matrix::from_columns(cols, d);
  const Matrix Sinv = *inverse(S);
  // proj_a = S diag(1..1, 0..0) S^-1
  Matrix keep_a(d, d);
  for (std::size_t i = 0; i < A.dim(); ++i) keep_a(i, i) = 1;
  SplitResult r;
  r.proj_a = S * keep_a * Sinv;
  r.proj_b = Matrix::identity(d) - r.proj_a;
  r.phi = -r.proj_b;

  BilinearProduct prod(d);
  LieAlgebra g(d);
  for (std::size_t i = 0; i < d; ++i) {
    const Vector ai = r.proj_a.column(i), bi = r.proj_b.column(i);
    for (std::size_t j = 0; j < d; ++j) {
      const Vector aj = r.proj_a.column(j), bj = r.proj_b.column(j);
      prod.set_product(i, j, scale(-1, n.bracket(bi, unit_vector(d, j))));
      const Vector gij = sub(n.bracket(ai, aj), n.bracket(bi, bj));
      for (std::size_t k = 0; k < d; ++k) g.c(i, j, k) = gij[k];
    }
  }
  g.set_labels(n.labels());
  r.pair = PostLiePair{std::move(g), n, std::move(prod)};
  if (!check_axioms(r.pair).ok()) throw Error("split_construction: result failed the post-Lie axioms");
  return r;
}

struct AdzReport {
  PhiInduced induced;
  Matrix phi;                 // ad(z) + lambda id
  IdentityReport eq9;         // [x,y] = {z,{x,y}} + (2 lambda + 1){x,y}
  IdentityReport eq10;        // {{z,x},{z,y}} = {z,{z,{x,y}}} + (2 lambda+1){z,{x,y}} + (lambda^2+lambda){x,y}
  bool eq11 = false;          // ad(z)^3 + (2 lambda+1) ad(z)^2 + (lambda^2+lambda) ad(z) = 0
  bool conditions_hold() const { return eq9.ok() && eq10.ok(); }
};

/// x.y = {{z,x},y} + lambda {x,y}, i.e. the phi-induced product for phi = ad(z) + lambda id.
inline AdzReport adz_lambda(const LieAlgebra& n, const Vector& z, const Rational& lambda) {
  const std::size_t d = n.dim();
  if (z.size() != d) throw DimensionError("adz_lambda: z has wrong length");
  AdzReport r;
  const Matrix adz = ad_matrix(n, z);
  r.phi = adz + lambda * Matrix::identity(d);
  r.induced = phi_induced(n, r.phi);
  const Rational c1 = 2 * lambda + 1;
  const Rational c2 = lambda * lambda + lambda;
  const auto& g = r.induced.pair.g;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      const Vector xy(n.basis_bracket(i, j).begin(), n.basis_bracket(i, j).end());
      const Vector zxy = n.bracket(z, xy);
      const Vector gxy(g.basis_bracket(i, j).begin(), g.basis_bracket(i, j).end());
      r.eq9.check("9", {i, j}, gxy, add(zxy, scale(c1, xy)));
      const Vector lhs10 = n.bracket(adz.column(i), adz.column(j));
      const Vector rhs10 = add(add(n.bracket(z, zxy), scale(c1, zxy)), scale(c2, xy));
      r.eq10.check("10", {i, j}, lhs10, rhs10);
    }
  const Matrix adz2 = adz * adz;
  r.eq11 = (adz2 * adz + c1 * adz2 + c2 * adz).is_zero();
  return r;
}

/// Coordinates (z, lambda) with phi = ad(z) + lambda id, if such exist.
/// The affine family is spanned by the ad e_i and the identity; the answer is
/// decided by one exact solve (z is unique only up to the center of n).
inline std::optional<std::pair<Vector, Rational>> ad_plus_scalar_decomposition(const LieAlgebra& n, const Matrix& phi) {
  const std::size_t d = n.dim();
  if (phi.rows() != d || phi.cols() != d) throw DimensionError("phi has wrong shape");
  std::vector<Vector> cols;
  for (const auto& a : ad_basis(n)) cols.push_back(a.flatten());
  cols.push_back(Matrix::identity(d).flatten());
  const auto sol = solve(Matrix::from_columns(cols, d * d), phi.flatten());
  if (!sol) return std::nullopt;
  Vector z(sol->begin(), sol->begin() + static_cast<std::ptrdiff_t>(d));
  return std::make_pair(std::move(z), sol->back());
}

/// Whether [x,y] = tau({x,y}) for some linear tau (the hypothesis under which
/// a phi-induced structure on a simple n must be ad(z) + lambda id).
inline bool bracket_factors_through(const LieAlgebra& g, const LieAlgebra& n) {
  const std::size_t d = n.dim();
  if (g.dim() != d) throw DimensionError("bracket_factors_through: dimension mismatch");
  // Unknown tau (row-major); rows: for each pair and component k, tau({e_i,e_j})_k = [e_i,e_j]_k.
  std::vector<Vector> rows;
  Vector rhs;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        Vector row = zero_vector(d * d);
        for (std::size_t m = 0; m < d; ++m) row[k * d + m] = n.c(i, j, m);
        rows.push_back(std::move(row));
        rhs.push_back(g.c(i, j, k));
      }
  if (rows.empty()) return true;
  return solve(Matrix::from_rows(rows, d * d), rhs).has_value();
}

struct EmbedReport {
  IdentityReport first;   // {x,y} + L(x)y - L(y)x = [x,y]
  IdentityReport second;  // [L(x), L(y)] = L([x,y])
  bool injective = true;  // the first component of x -> (x, L(x)) is the identity
  bool ok() const { return first.ok() && second.ok() && injective; }
};

/// x -> (x, L(x)) into n ⋊ Der(n) preserves brackets, checked directly on basis pairs.
inline EmbedReport embed_check(const PostLiePair& P) {
  if (!check_axioms(P).ok()) throw PreconditionError("embed_check: pair is not post-Lie");
  const std::size_t d = P.dim();
  EmbedReport r;
  std::vector<Matrix> L;
  for (std::size_t i = 0; i < d; ++i) L.push_back(P.prod.left(unit_vector(d, i)));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      const Vector nij(P.n.basis_bracket(i, j).begin(), P.n.basis_bracket(i, j).end());
      const Vector gij(P.g.basis_bracket(i, j).begin(), P.g.basis_bracket(i, j).end());
      const Vector lhs = sub(add(nij, L[i].column(j)), L[j].column(i));
      r.first.check("embed-1", {i, j}, lhs, gij);
      r.second.check("embed-2", {i, j}, commutator(L[i], L[j]).flatten(), P.prod.left(gij).flatten());
    }
  return r;
}

}  // namespace postlie

#endif  // POSTLIE_POST_LIE_HPP
