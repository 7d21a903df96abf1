#ifndef POSTLIE_DERIVATIONS_HPP
#define POSTLIE_DERIVATIONS_HPP

// Spaces of generalized derivations of a Lie algebra, each obtained as the
// kernel of an exact linear system in the entries of the unknown maps.
//
// An endomorphism phi of an n-dimensional algebra is flattened row-major into
// Q^(n*n): entry phi(a,b), the e_a-coefficient of phi(e_b), sits at a*n + b.
// Pair and triple spaces concatenate such blocks in the order (phi, tau) and
// (phi, sigma, tau).

#include "lie_algebra.hpp"

#include <vector>

namespace postlie {

/// Weights of alpha*phi([x,y]) = beta*[phi x, y] + gamma*[x, phi y].
struct DerivationWeights {
  Rational alpha;
  Rational beta;
  Rational gamma;

  /// delta-derivations phi([x,y]) = delta([phi x,y] + [x,phi y]).
  static DerivationWeights delta(const Rational& d) { return {1, d, d}; }
};

namespace detail {

/// Accumulates linear constraints on a concatenation of n x n matrix blocks.
class EndoSystem {
 public:
  EndoSystem(const LieAlgebra& L, std::size_t blocks) : L_(L), n_(L.dim()), width_(blocks * n_ * n_) {}

  std::size_t width() const { return width_; }
  std::size_t block_offset(std::size_t b) const { return b * n_ * n_; }

  /// row += coeff * (X [e_i, e_j])_k for the block X at `offset`.
  void image_of_bracket(Vector& row, std::size_t offset, const Rational& coeff, std::size_t i, std::size_t j,
                        std::size_t k) const {
    if (coeff == 0) return;
    for (std::size_t m = 0; m < n_; ++m)
      if (L_.c(i, j, m) != 0) row[offset + k * n_ + m] += coeff * L_.c(i, j, m);
  }

  /// row += coeff * [X e_i, e_j]_k.
  void bracket_left(Vector& row, std::size_t offset, const Rational& coeff, std::size_t i, std::size_t j,
                    std::size_t k) const {
    if (coeff == 0) return;
    for (std::size_t a = 0; a < n_; ++a)
      if (L_.c(a, j, k) != 0) row[offset + a * n_ + i] += coeff * L_.c(a, j, k);
  }

  /// row += coeff * [e_i, X e_j]_k.
  void bracket_right(Vector& row, std::size_t offset, const Rational& coeff, std::size_t i, std::size_t j,
                     std::size_t k) const {
    if (coeff == 0) return;
    for (std::size_t a = 0; a < n_; ++a)
      if (L_.c(i, a, k) != 0) row[offset + a * n_ + j] += coeff * L_.c(i, a, k);
  }

  void push(Vector row) {
    if (!is_zero(row)) rows_.push_back(std::move(row));
  }

  Subspace kernel() const { return nullspace(Matrix::from_rows(rows_, width_)); }

 private:
  const LieAlgebra& L_;
  std::size_t n_;
  std::size_t width_;
  std::vector<Vector> rows_;
};

}  // namespace detail

/// D(alpha, beta, gamma) as a subspace of End(L) = Q^(n*n). All ordered
/// pairs are needed: swapping x and y exchanges beta and gamma.
inline Subspace dspace(const LieAlgebra& L, const DerivationWeights& w) {
  require_valid(L);
  const std::size_t n = L.dim();
  detail::EndoSystem sys(L, 1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vector row = zero_vector(sys.width());
        sys.image_of_bracket(row, 0, w.alpha, i, j, k);
        sys.bracket_left(row, 0, -w.beta, i, j, k);
        sys.bracket_right(row, 0, -w.gamma, i, j, k);
        sys.push(std::move(row));
      }
  return sys.kernel();
}

/// span{ad e_i} flattened into End(L).
inline Subspace ad_space(const LieAlgebra& L) {
  std::vector<Vector> vs;
  for (const auto& a : ad_basis(L)) vs.push_back(a.flatten());
  return Subspace::span(vs, L.dim() * L.dim());
}

inline Subspace identity_span(std::size_t n) { return Subspace::span({Matrix::identity(n).flatten()}, n * n); }

/// Maps commuting with every ad e_i.
inline Subspace ad_commutant(const LieAlgebra& L) {
  const std::size_t n = L.dim();
  std::vector<Vector> rows;
  for (const auto& a : ad_basis(L))
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) {
        // (phi a - a phi)(r,c) = sum_m phi(r,m) a(m,c) - a(r,m) phi(m,c)
        Vector row = zero_vector(n * n);
        for (std::size_t m = 0; m < n; ++m) {
          row[r * n + m] += a(m, c);
          row[m * n + c] -= a(r, m);
        }
        if (!is_zero(row)) rows.push_back(std::move(row));
      }
  return nullspace(Matrix::from_rows(rows, n * n));
}

struct NamedSpaces {
  Subspace der;            // D(1,1,1)
  Subspace centroid;       // D(1,1,0)
  Subspace quasicentroid;  // D(0,1,-1)
  Subspace ad;             // inner derivations
  bool d110_check = false; // D(1,1,0) equals the commutant of ad(L)
};

inline NamedSpaces named_spaces(const LieAlgebra& L) {
  NamedSpaces s;
  s.der = dspace(L, {1, 1, 1});
  s.centroid = dspace(L, {1, 1, 0});
  s.quasicentroid = dspace(L, {0, 1, -1});
  s.ad = ad_space(L);
  s.d110_check = s.centroid == ad_commutant(L);
  return s;
}

struct QDerResult {
  Subspace pair_space;      // (phi, tau) in Q^(2n^2)
  Subspace phi_projection;  // QDer(L)
};

/// tau([x,y]) = [phi x, y] + [x, phi y].
inline QDerResult qder_pairs(const LieAlgebra& L) {
  require_valid(L);
  const std::size_t n = L.dim();
  detail::EndoSystem sys(L, 2);
  const std::size_t phi = sys.block_offset(0), tau = sys.block_offset(1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vector row = zero_vector(sys.width());
        sys.image_of_bracket(row, tau, 1, i, j, k);
        sys.bracket_left(row, phi, -1, i, j, k);
        sys.bracket_right(row, phi, -1, i, j, k);
        sys.push(std::move(row));
      }
  QDerResult r;
  r.pair_space = sys.kernel();
  r.phi_projection = r.pair_space.project_block(0, n * n);
  return r;
}

struct GDerResult {
  Subspace triple_space;    // (phi, sigma, tau) in Q^(3n^2)
  Subspace phi_projection;  // GDer(L)
};

/// tau([x,y]) = [phi x, y] + [x, sigma y].
inline GDerResult gder_triples(const LieAlgebra& L) {
  require_valid(L);
  const std::size_t n = L.dim();
  detail::EndoSystem sys(L, 3);
  const std::size_t phi = sys.block_offset(0), sigma = sys.block_offset(1), tau = sys.block_offset(2);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vector row = zero_vector(sys.width());
        sys.image_of_bracket(row, tau, 1, i, j, k);
        sys.bracket_left(row, phi, -1, i, j, k);
        sys.bracket_right(row, sigma, -1, i, j, k);
        sys.push(std::move(row));
      }
  GDerResult r;
  r.triple_space = sys.kernel();
  r.phi_projection = r.triple_space.project_block(0, n * n);
  return r;
}

/// Whether (phi, tau) satisfies the quasiderivation identity.
inline bool is_qder_pair(const LieAlgebra& L, const Matrix& phi, const Matrix& tau) {
  const std::size_t n = L.dim();
  Vector v = phi.flatten();
  v.insert(v.end(), tau.flatten().begin(), tau.flatten().end());
  if (v.size() != 2 * n * n) throw DimensionError("is_qder_pair: matrices have wrong shape");
  return qder_pairs(L).pair_space.contains(v);
}

struct ChainReport {
  bool ad_in_der = false;
  bool der_in_qder = false;
  bool qder_in_gder = false;
  bool gder_in_end = false;
  bool qder_plus_qc_is_gder = false;
  bool der_plus_centroid_in_qder = false;
  std::size_t ad_dim = 0, der_dim = 0, qder_dim = 0, gder_dim = 0, centroid_dim = 0, quasicentroid_dim = 0;

  bool ok() const {
    return ad_in_der && der_in_qder && qder_in_gder && gder_in_end && qder_plus_qc_is_gder &&
           der_plus_centroid_in_qder;
  }
};

/// ad ⊆ Der ⊆ QDer ⊆ GDer ⊆ End, QDer + QC = GDer, Der + C ⊆ QDer.
inline ChainReport verify_chain(const LieAlgebra& L) {
  const NamedSpaces s = named_spaces(L);
  const Subspace qder = qder_pairs(L).phi_projection;
  const Subspace gder = gder_triples(L).phi_projection;
  const Subspace end = Subspace::full(L.dim() * L.dim());
  ChainReport r;
  r.ad_in_der = s.der.contains(s.ad);
  r.der_in_qder = qder.contains(s.der);
  r.qder_in_gder = gder.contains(qder);
  r.gder_in_end = end.contains(gder);
  r.qder_plus_qc_is_gder = sum(qder, s.quasicentroid) == gder;
  r.der_plus_centroid_in_qder = qder.contains(sum(s.der, s.centroid));
  r.ad_dim = s.ad.dim();
  r.der_dim = s.der.dim();
  r.qder_dim = qder.dim();
  r.gder_dim = gder.dim();
  r.centroid_dim = s.centroid.dim();
  r.quasicentroid_dim = s.quasicentroid.dim();
  return r;
}

struct DeltaRow {
  Rational delta;
  std::size_t d_delta11 = 0;   // dim D(delta,1,1)
  std::size_t d_delta10 = 0;   // dim D(delta,1,0)
  bool case_f_holds = false;   // D(delta,1,0) = D(0,1,-1) ∩ D(2 delta,1,1)
  /// D(delta,1,1) = D(1,1/delta,1/delta); unset for delta = 0.
  std::optional<bool> filippov_normalization_holds;
};

struct CaseTable {
  std::size_t d000 = 0, d100 = 0, d01m1 = 0, d11m1 = 0, d010 = 0, d011 = 0;
  bool case_d_holds = false;          // D(1,1,-1) = D(0,1,-1) ∩ D(1,0,0)
  bool d100_dimension_holds = false;  // dim D(1,0,0) = dim(L/[L,L]) * dim L
  bool d010_dimension_holds = false;  // dim D(0,1,0) = dim Z(L) * dim L
  std::vector<DeltaRow> deltas;

  bool identities_hold() const {
    if (!case_d_holds || !d100_dimension_holds || !d010_dimension_holds) return false;
    for (const auto& row : deltas)
      if (!row.case_f_holds || row.filippov_normalization_holds == false) return false;
    return true;
  }
};

inline CaseTable dspace_case_table(const LieAlgebra& L, const std::vector<Rational>& deltas) {
  require_valid(L);
  const std::size_t n = L.dim();
  CaseTable t;
  const Subspace qc = dspace(L, {0, 1, -1});
  const Subspace d100 = dspace(L, {1, 0, 0});
  const Subspace d11m1 = dspace(L, {1, 1, -1});
  t.d000 = dspace(L, {0, 0, 0}).dim();
  t.d100 = d100.dim();
  t.d01m1 = qc.dim();
  t.d11m1 = d11m1.dim();
  t.d010 = dspace(L, {0, 1, 0}).dim();
  t.d011 = dspace(L, {0, 1, 1}).dim();
  t.case_d_holds = d11m1 == intersection(qc, d100);
  const std::size_t derived = subspace_bracket(L, Subspace::full(n), Subspace::full(n)).dim();
  t.d100_dimension_holds = t.d100 == (n - derived) * n;
  t.d010_dimension_holds = t.d010 == center(L).dim() * n;
  for (const auto& d : deltas) {
    DeltaRow row;
    row.delta = d;
    const Subspace d11 = dspace(L, {d, 1, 1});
    const Subspace d10 = dspace(L, {d, 1, 0});
    row.d_delta11 = d11.dim();
    row.d_delta10 = d10.dim();
    row.case_f_holds = d10 == intersection(qc, dspace(L, {2 * d, 1, 1}));
    if (d != 0) {
      const Rational inv = 1 / d;
      row.filippov_normalization_holds = d11 == dspace(L, {1, inv, inv});
    }
    t.deltas.push_back(std::move(row));
  }
  return t;
}

}  // namespace postlie

#endif  // POSTLIE_DERIVATIONS_HPP
