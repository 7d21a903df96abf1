#ifndef POSTLIE_JSON_IO_HPP
#define POSTLIE_JSON_IO_HPP

// File formats.
//
// Rational: JSON string "p/q" (or "p"), or a bare JSON integer. Output is
// always the canonical string.
//
// LieAlgebra:
//   {"dim": n, "labels": [...], "brackets": [{"i": i, "j": j, "v": {"k": "p/q", ...}}, ...]}
// 0-based indices; omitted pairs are zero. A pair given in one orientation
// only is completed antisymmetrically; a pair given in both orientations is
// stored as written, so validate() can report inconsistencies.
//
// PostLiePair:
//   {"n": <LieAlgebra>, "product": [{"i": i, "j": j, "v": {...}}], "g": <LieAlgebra, optional>}
// Product entries are taken literally (no completion). Without "g" the
// bracket of g is induced from x.y - y.x = [x,y] - {x,y}.
//
// Matrix: array of rows, each an array of rationals; or {"phi": <that>}.

#include "post_lie.hpp"

#include <json.hpp>

#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>

namespace postlie::io {

using Json = nlohmann::json;

inline Json to_json(const Rational& r) { return to_string(r); }

inline Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return parse_rational(std::to_string(j.get<std::uint64_t>()));
    return parse_rational(std::to_string(j.get<std::int64_t>()));
  }
  throw ParseError("expected a rational (string \"p/q\" or integer), got " + j.dump());
}

inline Json to_json(const Vector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}

inline Vector vector_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("expected an array of rationals");
  Vector v;
  for (const auto& x : j) v.push_back(rational_from_json(x));
  return v;
}

inline Json to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(to_json(Vector(m.row(i).begin(), m.row(i).end())));
  return rows;
}

inline Matrix matrix_from_json(const Json& j) {
  const Json& rows = (j.is_object() && j.contains("phi")) ? j.at("phi") : j;
  if (!rows.is_array()) throw ParseError("expected a matrix as an array of rows");
  std::vector<Vector> vs;
  for (const auto& r : rows) vs.push_back(vector_from_json(r));
  try {
    return Matrix::from_rows(vs);
  } catch (const DimensionError&) {
    throw ParseError("matrix rows have different lengths");
  }
}

inline Json to_json(const Subspace& s) {
  return Json{{"ambient_dim", s.ambient_dim()}, {"dim", s.dim()}, {"basis", to_json(s.basis())}};
}

namespace detail {

inline std::size_t index_from_json(const Json& j, std::size_t dim, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0 || static_cast<std::size_t>(j.get<long long>()) >= dim)
    throw ParseError(std::string("index '") + what + "' out of range: " + j.dump());
  return static_cast<std::size_t>(j.get<long long>());
}

/// Reads [{"i","j","v"}] into a dense dim^3 tensor; returns the set of (i,j) seen.
template <typename Setter>
std::set<std::pair<std::size_t, std::size_t>> read_entries(const Json& entries, std::size_t dim, Setter set) {
  if (!entries.is_array()) throw ParseError("expected an array of {i, j, v} entries");
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const auto& e : entries) {
    if (!e.is_object() || !e.contains("i") || !e.contains("j") || !e.contains("v"))
      throw ParseError("entry must have keys i, j, v: " + e.dump());
    const std::size_t i = index_from_json(e.at("i"), dim, "i");
    const std::size_t j = index_from_json(e.at("j"), dim, "j");
    if (!seen.insert({i, j}).second)
      throw ParseError("duplicate entry for (" + std::to_string(i) + "," + std::to_string(j) + ")");
    const Json& v = e.at("v");
    if (!v.is_object()) throw ParseError("entry value 'v' must be an object {\"k\": rational}");
    for (auto it = v.begin(); it != v.end(); ++it) {
      std::size_t k = 0;
      try {
        std::size_t used = 0;
        k = std::stoul(it.key(), &used);
        if (used != it.key().size()) throw std::invalid_argument("trailing");
      } catch (const std::exception&) {
        throw ParseError("bad component key '" + it.key() + "'");
      }
      if (k >= dim) throw ParseError("component index out of range: " + it.key());
      set(i, j, k, rational_from_json(it.value()));
    }
  }
  return seen;
}

inline Json entry(std::size_t i, std::size_t j, std::span<const Rational> v) {
  Json obj = Json::object();
  for (std::size_t k = 0; k < v.size(); ++k)
    if (v[k] != 0) obj[std::to_string(k)] = to_json(v[k]);
  return Json{{"i", i}, {"j", j}, {"v", obj}};
}

}  // namespace detail

inline LieAlgebra algebra_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("dim")) throw ParseError("Lie algebra JSON needs a 'dim' field");
  if (!j.at("dim").is_number_integer() || j.at("dim").get<long long>() < 0) throw ParseError("'dim' must be a count");
  const auto dim = static_cast<std::size_t>(j.at("dim").get<long long>());
  LieAlgebra L(dim);
  std::set<std::pair<std::size_t, std::size_t>> seen;
  if (j.contains("brackets"))
    seen = detail::read_entries(j.at("brackets"), dim,
                                [&](std::size_t a, std::size_t b, std::size_t k, const Rational& x) { L.c(a, b, k) = x; });
  for (auto [a, b] : seen)
    if (a != b && !seen.count({b, a}))
      for (std::size_t k = 0; k < dim; ++k) L.c(b, a, k) = -L.c(a, b, k);
  if (j.contains("labels")) {
    if (!j.at("labels").is_array()) throw ParseError("'labels' must be an array of strings");
    std::vector<std::string> labels;
    for (const auto& l : j.at("labels")) {
      if (!l.is_string()) throw ParseError("'labels' must be an array of strings");
      labels.push_back(l.get<std::string>());
    }
    if (!labels.empty() && labels.size() != dim) throw ParseError("label count does not match dim");
    L.set_labels(std::move(labels));
  }
  return L;
}

inline Json to_json(const LieAlgebra& L) {
  const std::size_t d = L.dim();
  Json brackets = Json::array();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j) {
      auto v = L.basis_bracket(i, j);
      if (i == j) {
        if (!is_zero(v)) brackets.push_back(detail::entry(i, i, v));
        continue;
      }
      if (!is_zero(v)) brackets.push_back(detail::entry(i, j, v));
      bool antisymmetric = true;
      for (std::size_t k = 0; k < d; ++k)
        if (L.c(j, i, k) != -L.c(i, j, k)) antisymmetric = false;
      if (!antisymmetric) brackets.push_back(detail::entry(j, i, L.basis_bracket(j, i)));
    }
  Json out{{"dim", d}, {"brackets", brackets}};
  if (!L.labels().empty()) out["labels"] = L.labels();
  return out;
}

inline Json to_json(const BilinearProduct& p) {
  Json entries = Json::array();
  for (std::size_t i = 0; i < p.dim(); ++i)
    for (std::size_t j = 0; j < p.dim(); ++j)
      if (!is_zero(p.basis_product(i, j))) entries.push_back(detail::entry(i, j, p.basis_product(i, j)));
  return entries;
}

inline BilinearProduct product_from_json(const Json& j, std::size_t dim) {
  BilinearProduct p(dim);
  detail::read_entries(j, dim, [&](std::size_t a, std::size_t b, std::size_t k, const Rational& x) { p.p(a, b, k) = x; });
  return p;
}

inline PostLiePair pair_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n")) throw ParseError("post-Lie pair JSON needs an 'n' algebra");
  LieAlgebra n = algebra_from_json(j.at("n"));
  BilinearProduct prod = j.contains("product") ? product_from_json(j.at("product"), n.dim()) : BilinearProduct(n.dim());
  LieAlgebra g;
  if (j.contains("g")) {
    g = algebra_from_json(j.at("g"));
    if (g.dim() != n.dim()) throw ParseError("'g' and 'n' have different dimensions");
  } else {
    g = induce_g(n, prod).g;
  }
  return PostLiePair{std::move(g), std::move(n), std::move(prod)};
}

inline Json to_json(const PostLiePair& P) {
  return Json{{"n", to_json(P.n)}, {"g", to_json(P.g)}, {"product", to_json(P.prod)}};
}

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError("malformed JSON in '" + path + "': " + e.what());
  }
}

inline void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write '" + path + "'");
  out << j.dump(2) << '\n';
}

}  // namespace postlie::io

#endif  // POSTLIE_JSON_IO_HPP
