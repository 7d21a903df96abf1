#include "support/test_support.hpp"

#include <gtest/gtest.h>

using namespace postlie;
using postlie::testing::mat;
using postlie::testing::q;
using postlie::testing::vec;

namespace {

const Vector E = vec({1, 0, 0}), F = vec({0, 1, 0}), H = vec({0, 0, 1});

Vector sl3_e(std::size_t i) { return unit_vector(8, i - 1); }

}  // namespace

TEST(Bracket, Sl2StandardRelations) {
  const LieAlgebra L = catalog::sl2();
  EXPECT_EQ(L.bracket(E, F), H);
  EXPECT_EQ(L.bracket(H, E), scale(2, E));
  EXPECT_EQ(L.bracket(H, F), scale(-2, F));
  const Vector x = vec({3, -1, 2});
  EXPECT_TRUE(is_zero(L.bracket(x, x)));
  EXPECT_THROW(L.bracket(vec({1, 0}), F), DimensionError);
}

TEST(Bracket, Sl2SumSl2Relations) {
  const LieAlgebra L = catalog::sl2_sum_sl2();
  EXPECT_EQ(L.bracket(unit_vector(6, 0), unit_vector(6, 1)), unit_vector(6, 2));
  EXPECT_EQ(L.bracket(unit_vector(6, 3), unit_vector(6, 4)), unit_vector(6, 5));
  EXPECT_EQ(L.bracket(unit_vector(6, 0), unit_vector(6, 2)), scale(-2, unit_vector(6, 0)));
  EXPECT_TRUE(is_zero(L.bracket(unit_vector(6, 0), unit_vector(6, 4))));
}

TEST(Validate, CatalogAlgebrasAreLie) {
  for (const char* name : {"sl2", "sl3", "sl2+sl2", "r31", "heisenberg"})
    EXPECT_TRUE(validate(catalog::get(name).algebra).ok()) << name;
  EXPECT_TRUE(validate(catalog::sln(4)).ok());
  EXPECT_TRUE(validate(catalog::abelian(0)).ok());
}

TEST(Validate, ReportsAntisymmetryViolation) {
  LieAlgebra L(2);
  L.c(0, 1, 0) = 1;  // (1,0) left at zero
  const auto rep = validate(L);
  ASSERT_EQ(rep.violations.size(), 1u);
  EXPECT_EQ(rep.violations[0].kind, AlgebraViolation::Kind::antisymmetry);
  EXPECT_EQ(rep.violations[0].indices, (std::array<std::size_t, 3>{0, 1, 0}));
}

TEST(Validate, ReportsJacobiViolation) {
  // [e1,e2]=e3, [e1,e3]=e2, [e2,e3]=e2:
  // [[e1,e2],e3] + [[e2,e3],e1] + [[e3,e1],e2] = 0 + (-e3) + (-[e2,e2]) = -e3
  LieAlgebra L(3);
  L.set_bracket(0, 1, vec({0, 0, 1}));
  L.set_bracket(0, 2, vec({0, 1, 0}));
  L.set_bracket(1, 2, vec({0, 1, 0}));
  const auto rep = validate(L);
  ASSERT_EQ(rep.violations.size(), 1u);
  EXPECT_EQ(rep.violations[0].kind, AlgebraViolation::Kind::jacobi);
  EXPECT_EQ(rep.violations[0].residual, vec({0, 0, -1}));
  EXPECT_THROW(invariants(L), InvalidAlgebraError);
}

TEST(AdMatrix, Sl2) {
  const LieAlgebra L = catalog::sl2();
  EXPECT_TRUE(ad_matrix(L, vec({0, 0, 0})).is_zero());
  EXPECT_EQ(ad_matrix(L, H), Matrix::diagonal(vec({2, -2, 0})));
  // columns of ad(e): [e,e]=0, [e,f]=h, [e,h]=-2e
  EXPECT_EQ(ad_matrix(L, E), mat({{0, 0, -2}, {0, 0, 0}, {0, 1, 0}}));
  EXPECT_THROW(ad_matrix(L, vec({1})), DimensionError);
}

TEST(KillingForm, Values) {
  EXPECT_TRUE(killing_form(catalog::abelian(3)).is_zero());
  const Matrix K = killing_form(catalog::sl2());
  // oracle (tests/oracle): [[0,4,0],[4,0,0],[0,0,8]]
  EXPECT_EQ(K, mat({{0, 4, 0}, {4, 0, 0}, {0, 0, 8}}));
  EXPECT_EQ(rank(killing_form(catalog::sl3())), 8u);
}

TEST(Invariants, Sl3) {
  const auto r = invariants(catalog::sl3());
  EXPECT_TRUE(r.is_semisimple);
  EXPECT_TRUE(r.is_perfect);
  EXPECT_TRUE(r.is_unimodular);
  EXPECT_EQ(r.center_dim, 0u);
  EXPECT_FALSE(r.is_solvable);
  EXPECT_EQ(r.derived_series_dims, (std::vector<std::size_t>{8, 8}));
}

TEST(Invariants, R31) {
  const auto r = invariants(catalog::r31());
  EXPECT_TRUE(r.is_solvable);
  EXPECT_FALSE(r.is_nilpotent);
  EXPECT_EQ(r.center_dim, 0u);
  EXPECT_FALSE(r.is_unimodular);
  EXPECT_EQ(ad_matrix(catalog::r31(), unit_vector(3, 0)).trace(), 2);
  EXPECT_EQ(r.derived_series_dims, (std::vector<std::size_t>{3, 2, 0}));
  EXPECT_EQ(r.lower_central_dims, (std::vector<std::size_t>{3, 2, 2}));
  EXPECT_EQ(r.killing_rank, 1u);
}

TEST(Invariants, HeisenbergAndDegenerate) {
  const auto h = invariants(catalog::heisenberg());
  EXPECT_TRUE(h.is_nilpotent);
  EXPECT_EQ(h.center_dim, 1u);
  EXPECT_EQ(h.derived_length, 2u);

  const auto z = invariants(catalog::abelian(0));
  EXPECT_TRUE(z.is_solvable);
  EXPECT_TRUE(z.is_nilpotent);
  EXPECT_FALSE(z.is_semisimple);
}

TEST(SubspaceBracket, Examples) {
  const LieAlgebra sl2 = catalog::sl2();
  const Subspace full = Subspace::full(3);
  EXPECT_EQ(subspace_bracket(sl2, full, Subspace(3)).dim(), 0u);
  EXPECT_EQ(subspace_bracket(sl2, full, full), full);

  const auto sl3 = catalog::get("sl3");
  const Subspace& np = sl3.named_subspaces.at("n+");
  EXPECT_EQ(subspace_bracket(sl3.algebra, np, np), Subspace::span({sl3_e(2)}, 8));
  EXPECT_THROW(subspace_bracket(sl2, Subspace(2), full), DimensionError);
}

TEST(Subalgebras, IdealsAndSubalgebras) {
  const auto sl3 = catalog::get("sl3");
  const Subspace nminus = Subspace::span({sl3_e(3), sl3_e(5), sl3_e(6)}, 8);
  EXPECT_EQ(nminus, sl3.named_subspaces.at("n-"));
  EXPECT_TRUE(is_subalgebra(sl3.algebra, nminus));
  EXPECT_FALSE(is_ideal(sl3.algebra, nminus));
  EXPECT_TRUE(is_ideal(sl3.algebra, Subspace::full(8)));
  EXPECT_TRUE(is_subalgebra(catalog::sl2(), Subspace::span({E}, 3)));
  EXPECT_FALSE(is_subalgebra(catalog::sl2(), Subspace::span({E, F}, 3)));
}

TEST(DirectSum, Sl2PlusSl2) {
  const LieAlgebra s = direct_sum(catalog::sl2(), catalog::sl2());
  EXPECT_EQ(s, catalog::sl2_sum_sl2());
  EXPECT_TRUE(validate(s).ok());
  EXPECT_EQ(invariants(s).killing_rank, 6u);
  EXPECT_EQ(direct_sum(catalog::sl2(), catalog::abelian(0)), catalog::sl2());
}

TEST(DirectSum, InvariantsCombine) {
  const std::vector<LieAlgebra> algs{catalog::sl2(), catalog::r31(), catalog::heisenberg(), catalog::abelian(2)};
  for (const auto& a : algs)
    for (const auto& b : algs) {
      const auto ra = invariants(a), rb = invariants(b), rs = invariants(direct_sum(a, b));
      EXPECT_EQ(rs.killing_rank, ra.killing_rank + rb.killing_rank);
      EXPECT_EQ(rs.center_dim, ra.center_dim + rb.center_dim);
      EXPECT_EQ(rs.is_solvable, ra.is_solvable && rb.is_solvable);
    }
}

TEST(Semidirect, WithInnerDerivations) {
  const LieAlgebra n = catalog::sl2();
  EXPECT_EQ(semidirect_with_derivations(n, {}), n);
  const auto ads = ad_basis(n);
  const LieAlgebra s = semidirect_with_derivations(n, ads);
  EXPECT_EQ(s.dim(), 6u);
  EXPECT_TRUE(validate(s).ok());
  // [(0, ad e), (f, 0)] = (ad(e) f, 0) = (h, 0)
  EXPECT_EQ(s.bracket(unit_vector(6, 3), unit_vector(6, 1)), unit_vector(6, 2));
  // [(0, ad e), (0, ad f)] = (0, ad h)
  EXPECT_EQ(s.bracket(unit_vector(6, 3), unit_vector(6, 4)), unit_vector(6, 5));
}

TEST(Semidirect, RejectsBadInput) {
  const LieAlgebra n = catalog::sl2();
  Matrix e12(3, 3);
  e12(0, 1) = 1;  // f -> e
  EXPECT_FALSE(is_derivation(n, e12));
  EXPECT_THROW(semidirect_with_derivations(n, {e12}), PreconditionError);
  // ad(e) alone is a derivation but [ad e, ad e] = 0 stays in span; ad e with ad f escapes.
  const auto ads = ad_basis(n);
  EXPECT_NO_THROW(semidirect_with_derivations(n, {ads[0]}));
  EXPECT_THROW(semidirect_with_derivations(n, {ads[0], ads[1]}), PreconditionError);
}

TEST(HomWitness, IdentityAndZero) {
  const LieAlgebra n = catalog::sl2();
  const auto id = check_hom_witness(n, n, Matrix::identity(3));
  EXPECT_TRUE(id.is_hom && id.is_injective && id.is_iso);
  const auto zero = check_hom_witness(n, n, Matrix(3, 3));
  EXPECT_TRUE(zero.is_hom);
  EXPECT_FALSE(zero.is_injective);
  EXPECT_FALSE(zero.is_iso);
  EXPECT_THROW(check_hom_witness(n, n, Matrix(2, 3)), DimensionError);
  // Swapping e and f is not a hom ([f,e] = -h).
  EXPECT_FALSE(check_hom_witness(n, n, mat({{0, 1, 0}, {1, 0, 0}, {0, 0, 1}})).is_hom);
  // Chevalley involution e -> -f, f -> -e, h -> -h is.
  EXPECT_TRUE(check_hom_witness(n, n, mat({{0, -1, 0}, {-1, 0, 0}, {0, 0, -1}})).is_iso);
}

class LieProperties : public ::testing::TestWithParam<unsigned> {};

TEST_P(LieProperties, AdIsAHomomorphism) {
  postlie::testing::RandomRationals rnd(GetParam());
  for (const LieAlgebra& L : {catalog::sl2(), catalog::sl3(), catalog::r31(), catalog::heisenberg()}) {
    const Vector x = rnd.vector(L.dim()), y = rnd.vector(L.dim());
    EXPECT_EQ(ad_matrix(L, L.bracket(x, y)), commutator(ad_matrix(L, x), ad_matrix(L, y)));
  }
}

TEST_P(LieProperties, PerfectAlgebrasHaveTracelessAd) {
  postlie::testing::RandomRationals rnd(GetParam() + 7);
  for (const LieAlgebra& L : {catalog::sl2(), catalog::sl3(), catalog::sl2_sum_sl2()}) {
    ASSERT_TRUE(invariants(L).is_perfect);
    EXPECT_EQ(ad_matrix(L, rnd.vector(L.dim())).trace(), 0);
  }
}

TEST_P(LieProperties, ChangeOfBasisPreservesInvariants) {
  postlie::testing::RandomRationals rnd(GetParam() + 11);
  for (const LieAlgebra& L : {catalog::sl2(), catalog::r31(), catalog::heisenberg()}) {
    const Matrix P = rnd.invertible(L.dim());
    const LieAlgebra M = change_basis(L, P);
    EXPECT_TRUE(validate(M).ok());
    EXPECT_TRUE(check_hom_witness(M, L, P).is_iso);
    const auto a = invariants(L), b = invariants(M);
    EXPECT_EQ(a.derived_series_dims, b.derived_series_dims);
    EXPECT_EQ(a.killing_rank, b.killing_rank);
    EXPECT_EQ(a.center_dim, b.center_dim);
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, LieProperties, ::testing::Values(1u, 2u, 3u, 4u));
