#ifndef POSTLIE_CATALOG_HPP
#define POSTLIE_CATALOG_HPP

// Fixture algebras with frozen basis orders:
//   sl2      (e, f, h)                     [e,f]=h, [h,e]=2e, [h,f]=-2f
//   sl3      (e1..e8) = (E12, E13, E21, E23, E31, E32, E11-E22, E22-E33), bracket table transcribed
//   sln      off-diagonal E_ij in lexicographic order, then E_ii - E_{i+1,i+1}, generated from matrices
//   sl2+sl2  (e1, f1, h1, e2, f2, h2)
//   r31      [e1,e2]=e2, [e1,e3]=e3
//   heisenberg [e1,e2]=e3
//   abelian  dimension n

#include "post_lie.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace postlie::catalog {

struct UnknownEntryError : Error {
  using Error::Error;
};

struct CatalogEntry {
  std::string name;
  std::optional<std::size_t> param;
  LieAlgebra algebra;
  std::map<std::string, Subspace> named_subspaces;  // "n-", "h", "n+", "b+", "b-" where defined
};

namespace detail {

/// Sets [e_i, e_j] = sum coeff * e_k from a sparse list (1-based indices, as printed).
inline void set(LieAlgebra& L, std::size_t i, std::size_t j, std::initializer_list<std::pair<std::size_t, long>> terms) {
  Vector v = zero_vector(L.dim());
  for (auto [k, c] : terms) v[k - 1] += c;
  L.set_bracket(i - 1, j - 1, v);
}

inline Subspace coordinate_span(std::size_t dim, const std::vector<std::size_t>& indices) {
  std::vector<Vector> vs;
  for (auto i : indices) vs.push_back(unit_vector(dim, i));
  return Subspace::span(vs, dim);
}

inline void add_triangular(CatalogEntry& e, const std::vector<std::size_t>& lower, const std::vector<std::size_t>& cartan,
                           const std::vector<std::size_t>& upper) {
  const std::size_t d = e.algebra.dim();
  auto join = [](std::vector<std::size_t> a, const std::vector<std::size_t>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
  };
  e.named_subspaces["n-"] = coordinate_span(d, lower);
  e.named_subspaces["h"] = coordinate_span(d, cartan);
  e.named_subspaces["n+"] = coordinate_span(d, upper);
  e.named_subspaces["b+"] = coordinate_span(d, join(cartan, upper));
  e.named_subspaces["b-"] = coordinate_span(d, join(cartan, lower));
}

}  // namespace detail

inline LieAlgebra sl2() {
  LieAlgebra L(3);
  detail::set(L, 1, 2, {{3, 1}});   // [e,f] = h
  detail::set(L, 3, 1, {{1, 2}});   // [h,e] = 2e
  detail::set(L, 3, 2, {{2, -2}});  // [h,f] = -2f
  L.set_labels({"e", "f", "h"});
  return L;
}

/// sl3 in the basis e1 = E12, e2 = E13, e3 = E21, e4 = E23, e5 = E31, e6 = E32,
/// e7 = E11 - E22, e8 = E22 - E33, transcribed bracket by bracket.
inline LieAlgebra sl3() {
  LieAlgebra L(8);
  using detail::set;
  set(L, 1, 3, {{7, 1}});
  set(L, 1, 4, {{2, 1}});
  set(L, 1, 5, {{6, -1}});
  set(L, 1, 7, {{1, -2}});
  set(L, 1, 8, {{1, 1}});
  set(L, 2, 3, {{4, -1}});
  set(L, 2, 5, {{7, 1}, {8, 1}});
  set(L, 2, 6, {{1, 1}});
  set(L, 2, 7, {{2, -1}});
  set(L, 2, 8, {{2, -1}});
  set(L, 3, 6, {{5, -1}});
  set(L, 3, 7, {{3, 2}});
  set(L, 3, 8, {{3, -1}});
  set(L, 4, 5, {{3, 1}});
  set(L, 4, 6, {{8, 1}});
  set(L, 4, 7, {{4, 1}});
  set(L, 4, 8, {{4, -2}});
  set(L, 5, 7, {{5, 1}});
  set(L, 5, 8, {{5, 1}});
  set(L, 6, 7, {{6, -1}});
  set(L, 6, 8, {{6, 2}});
  L.set_labels({"e1", "e2", "e3", "e4", "e5", "e6", "e7", "e8"});
  return L;
}

/// Basis matrices of sl_n in catalog order.
inline std::vector<Matrix> sln_basis_matrices(std::size_t n) {
  std::vector<Matrix> basis;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) {
        Matrix m(n, n);
        m(i, j) = 1;
        basis.push_back(std::move(m));
      }
  for (std::size_t i = 0; i + 1 < n; ++i) {
    Matrix m(n, n);
    m(i, i) = 1;
    m(i + 1, i + 1) = -1;
    basis.push_back(std::move(m));
  }
  return basis;
}

/// sl_n from commutators of its basis matrices.
inline LieAlgebra sln(std::size_t n) {
  if (n < 2) throw PreconditionError("sln: n must be at least 2");
  const auto basis = sln_basis_matrices(n);
  const std::size_t d = basis.size();
  std::vector<Vector> cols;
  for (const auto& b : basis) cols.push_back(b.flatten());
  const Matrix coords = Matrix::from_columns(cols, n * n);
  LieAlgebra L(d);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) labels.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
  for (std::size_t i = 0; i + 1 < n; ++i) labels.push_back("H" + std::to_string(i + 1));
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) {
      const auto v = solve(coords, commutator(basis[a], basis[b]).flatten());
      for (std::size_t k = 0; k < d; ++k) L.c(a, b, k) = (*v)[k];
    }
  L.set_labels(std::move(labels));
  return L;
}

inline LieAlgebra sl2_sum_sl2() {
  LieAlgebra L = direct_sum(sl2(), sl2());
  L.set_labels({"e1", "f1", "h1", "e2", "f2", "h2"});
  return L;
}

inline LieAlgebra r31() {
  LieAlgebra L(3);
  detail::set(L, 1, 2, {{2, 1}});
  detail::set(L, 1, 3, {{3, 1}});
  L.set_labels({"e1", "e2", "e3"});
  return L;
}

inline LieAlgebra heisenberg() {
  LieAlgebra L(3);
  detail::set(L, 1, 2, {{3, 1}});
  L.set_labels({"e1", "e2", "e3"});
  return L;
}

inline LieAlgebra abelian(std::size_t n) { return LieAlgebra(n); }

/// Entries: "sl2", "sl3", "sln" (param n), "sl2+sl2", "r31", "abelian" (param n), "heisenberg".
inline CatalogEntry get(std::string_view name, std::optional<std::size_t> param = std::nullopt) {
  CatalogEntry e;
  e.name = std::string(name);
  auto need_param = [&](std::size_t min) {
    if (!param || *param < min)
      throw PreconditionError("catalog entry '" + e.name + "' needs parameter n >= " + std::to_string(min));
    e.param = param;
    return *param;
  };
  if (name == "sl2") {
    e.algebra = sl2();
    detail::add_triangular(e, {1}, {2}, {0});
  } else if (name == "sl3") {
    e.algebra = sl3();
    detail::add_triangular(e, {2, 4, 5}, {6, 7}, {0, 1, 3});
  } else if (name == "sln") {
    const std::size_t n = need_param(2);
    e.algebra = sln(n);
    std::vector<std::size_t> lower, cartan, upper;
    std::size_t idx = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) (i > j ? lower : upper).push_back(idx++);
    for (std::size_t i = 0; i + 1 < n; ++i) cartan.push_back(idx++);
    detail::add_triangular(e, lower, cartan, upper);
  } else if (name == "sl2+sl2") {
    e.algebra = sl2_sum_sl2();
    detail::add_triangular(e, {1, 4}, {2, 5}, {0, 3});
  } else if (name == "r31") {
    e.algebra = r31();
  } else if (name == "heisenberg") {
    e.algebra = heisenberg();
  } else if (name == "abelian") {
    e.algebra = abelian(need_param(0));
  } else {
    throw UnknownEntryError("unknown catalog entry '" + e.name + "'");
  }
  return e;
}

/// Splits of a triangular decomposition n = n- ⊕ h ⊕ n+ into two complementary
/// subalgebras: "b+|n-", "n-|b+", "b-|n+", "n+|b-" (A|B).
inline std::pair<Subspace, Subspace> triangular_split(const CatalogEntry& e, std::string_view choice) {
  const auto bar = choice.find('|');
  if (bar == std::string_view::npos) throw PreconditionError("triangular_split: choice must look like 'b+|n-'");
  const std::string a(choice.substr(0, bar)), b(choice.substr(bar + 1));
  const bool valid = (a == "b+" && b == "n-") || (a == "n-" && b == "b+") || (a == "b-" && b == "n+") ||
                     (a == "n+" && b == "b-");
  if (!valid) throw PreconditionError("triangular_split: unknown choice '" + std::string(choice) + "'");
  if (!e.named_subspaces.count(a)) throw PreconditionError("catalog entry '" + e.name + "' has no triangular decomposition");
  return {e.named_subspaces.at(a), e.named_subspaces.at(b)};
}

inline std::pair<Subspace, Subspace> triangular_split(std::size_t n, std::string_view choice) {
  return triangular_split(get("sln", n), choice);
}

struct Example210 {
  Matrix phi;
  PhiInduced induced;
  const PostLiePair& pair() const { return induced.pair; }
};

/// The 3x3 block A of the sl2 ⊕ sl2 example.
inline Matrix example_210_block() {
  return Matrix::from_rows({{4, -1, -4}, {-1, 1, 2}, {-2, 1, 3}});
}

/// x.y = {phi x, y} on sl2 ⊕ sl2 with phi = [[0, 0], [A, 0]].
inline Example210 example_210() {
  const Matrix A = example_210_block();
  Example210 ex;
  ex.phi = Matrix(6, 6);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) ex.phi(3 + i, j) = A(i, j);
  ex.induced = phi_induced(sl2_sum_sl2(), ex.phi);
  if (!ex.induced.conditions_hold() || !check_axioms(ex.induced.pair).ok())
    throw Error("example_210: fixture failed verification");
  return ex;
}

}  // namespace postlie::catalog

#endif  // POSTLIE_CATALOG_HPP
