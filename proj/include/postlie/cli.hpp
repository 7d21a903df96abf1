#ifndef POSTLIE_CLI_HPP
#define POSTLIE_CLI_HPP

// Command-line front end. Every command prints one JSON report
//   {"command": ..., "inputs": {...}, "results": {...}, "verified": bool}
// to stdout. Exit codes: 0 computed (and verified where applicable),
// 1 computed but verification failed, 2 input or parse error.

#include "catalog.hpp"
#include "derivations.hpp"
#include "json_io.hpp"
#include "post_lie.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace postlie::cli {

using io::Json;

inline constexpr int exit_ok = 0;
inline constexpr int exit_unverified = 1;
inline constexpr int exit_input_error = 2;

namespace detail {

inline Json indices_json(const std::vector<std::size_t>& idx) { return Json(idx); }

inline Json to_json(const ValidationReport& r) {
  Json list = Json::array();
  for (const auto& v : r.violations)
    list.push_back(Json{{"kind", v.kind == AlgebraViolation::Kind::antisymmetry ? "antisymmetry" : "jacobi"},
                        {"indices", Json(std::vector<std::size_t>(v.indices.begin(), v.indices.end()))},
                        {"residual", io::to_json(v.residual)}});
  return list;
}

inline Json to_json(const IdentityReport& r) {
  Json list = Json::array();
  for (const auto& v : r.violations)
    list.push_back(Json{{"equation", v.equation}, {"indices", indices_json(v.indices)}, {"residual", io::to_json(v.residual)}});
  return list;
}

inline Json to_json(const InvariantReport& r) {
  Json j{{"dim", r.dim},
         {"derived_series_dims", r.derived_series_dims},
         {"lower_central_dims", r.lower_central_dims},
         {"center_dim", r.center_dim},
         {"killing_rank", r.killing_rank},
         {"is_solvable", r.is_solvable},
         {"is_nilpotent", r.is_nilpotent},
         {"is_semisimple", r.is_semisimple},
         {"is_perfect", r.is_perfect},
         {"is_unimodular", r.is_unimodular}};
  j["derived_length"] = r.derived_length ? Json(*r.derived_length) : Json(nullptr);
  return j;
}

inline Json to_json(const AxiomReport& r) {
  return Json{{"g_valid", r.g_valid}, {"n_valid", r.n_valid}, {"violations", to_json(r.identities)}, {"ok", r.ok()}};
}

inline Json subspace_summary(const Subspace& s, bool with_basis) {
  Json j{{"dim", s.dim()}, {"ambient_dim", s.ambient_dim()}};
  if (with_basis) j["basis"] = io::to_json(s.basis());
  return j;
}

/// Full verification of a pair: axioms, derived identities, L-checks and the embedding.
inline Json verify_pair(const PostLiePair& P, bool& verified) {
  const AxiomReport ax = check_axioms(P);
  Json j;
  j["axioms"] = to_json(ax);
  verified = ax.ok();
  if (ax.g_valid && ax.n_valid) {
    const IdentityReport derived = check_derived_identities(P);
    const LeftMultiplicationReport lm = left_multiplication_checks(P);
    j["derived_identities"] = Json{{"violations", to_json(derived)}, {"ok", derived.ok()}};
    j["left_multiplication"] = Json{{"representation", to_json(lm.representation)},
                                    {"derivation", to_json(lm.derivation)},
                                    {"ok", lm.ok()}};
    verified = verified && derived.ok() && lm.ok();
  }
  if (ax.ok()) {
    const EmbedReport em = embed_check(P);
    j["embedding"] = Json{{"first_component", to_json(em.first)},
                          {"second_component", to_json(em.second)},
                          {"injective", em.injective},
                          {"ok", em.ok()}};
    verified = verified && em.ok();
  }
  return j;
}

inline std::vector<std::size_t> parse_index_list(const std::string& text, std::size_t dim) {
  std::vector<std::size_t> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(item, &used);
    } catch (const std::exception&) {
      throw ParseError("bad index '" + item + "'");
    }
    if (used != item.size() || v >= dim) throw ParseError("index '" + item + "' out of range");
    out.push_back(v);
  }
  return out;
}

inline Vector parse_rational_list(const std::string& text) {
  Vector out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
  return out;
}

inline LieAlgebra load_valid_algebra(const std::string& path) {
  LieAlgebra L = io::algebra_from_json(io::read_json_file(path));
  if (!validate(L).ok()) throw InvalidAlgebraError("'" + path + "' is not a Lie algebra (run 'lie validate')");
  return L;
}

struct Outcome {
  Json report;
  int code = exit_ok;
};

inline Outcome make(const std::string& command, Json inputs, Json results, bool verified) {
  Outcome o;
  o.report = Json{{"command", command}, {"inputs", std::move(inputs)}, {"results", std::move(results)}, {"verified", verified}};
  o.code = verified ? exit_ok : exit_unverified;
  return o;
}

}  // namespace detail

/// Runs one command. args[0] is the tool group ("lie" or "postlie").
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  using namespace detail;
  if (args.empty() || (args[0] != "lie" && args[0] != "postlie")) {
    err << "usage: lie <command> ... | postlie <command> ...\n";
    return exit_input_error;
  }
  const bool is_lie = args[0] == "lie";
  CLI::App app{is_lie ? "Lie algebra invariants and generalized derivations" : "Post-Lie algebra structures", args[0]};
  app.require_subcommand(1);

  std::string file, second_file, out_file, name, left, right, zs, lambda_text;
  std::string alpha = "0", beta = "0", gamma = "0";
  std::size_t nparam = 0;
  bool with_basis = false;
  std::function<Outcome()> action;

  if (is_lie) {
    auto* info = app.add_subcommand("info", "structural invariants");
    info->add_option("FILE", file)->required();
    info->callback([&] {
      action = [&] {
        const LieAlgebra L = load_valid_algebra(file);
        return make("lie info", Json{{"file", file}}, to_json(invariants(L)), true);
      };
    });

    auto* val = app.add_subcommand("validate", "antisymmetry and Jacobi violations");
    val->add_option("FILE", file)->required();
    val->callback([&] {
      action = [&] {
        const LieAlgebra L = io::algebra_from_json(io::read_json_file(file));
        const ValidationReport r = validate(L);
        return make("lie validate", Json{{"file", file}}, Json{{"violations", to_json(r)}}, r.ok());
      };
    });

    auto* ds = app.add_subcommand("dspace", "(alpha,beta,gamma)-derivations");
    ds->add_option("FILE", file)->required();
    ds->add_option("--alpha", alpha)->required();
    ds->add_option("--beta", beta)->required();
    ds->add_option("--gamma", gamma)->required();
    ds->add_flag("--basis", with_basis);
    ds->callback([&] {
      action = [&] {
        const LieAlgebra L = load_valid_algebra(file);
        const DerivationWeights w{parse_rational(alpha), parse_rational(beta), parse_rational(gamma)};
        const Subspace s = dspace(L, w);
        Json inputs{{"file", file}, {"alpha", io::to_json(w.alpha)}, {"beta", io::to_json(w.beta)}, {"gamma", io::to_json(w.gamma)}};
        return make("lie dspace", inputs, subspace_summary(s, with_basis), true);
      };
    });

    auto* qd = app.add_subcommand("qder", "quasiderivations");
    qd->add_option("FILE", file)->required();
    qd->add_flag("--basis", with_basis);
    qd->callback([&] {
      action = [&] {
        const QDerResult r = qder_pairs(load_valid_algebra(file));
        Json res{{"phi_projection", subspace_summary(r.phi_projection, with_basis)},
                 {"pair_space", subspace_summary(r.pair_space, false)}};
        return make("lie qder", Json{{"file", file}}, res, true);
      };
    });

    auto* gd = app.add_subcommand("gder", "generalized derivations");
    gd->add_option("FILE", file)->required();
    gd->add_flag("--basis", with_basis);
    gd->callback([&] {
      action = [&] {
        const GDerResult r = gder_triples(load_valid_algebra(file));
        Json res{{"phi_projection", subspace_summary(r.phi_projection, with_basis)},
                 {"triple_space", subspace_summary(r.triple_space, false)}};
        return make("lie gder", Json{{"file", file}}, res, true);
      };
    });

    auto* ch = app.add_subcommand("chain", "inclusion chain ad ⊆ Der ⊆ QDer ⊆ GDer ⊆ End");
    ch->add_option("FILE", file)->required();
    ch->callback([&] {
      action = [&] {
        const ChainReport r = verify_chain(load_valid_algebra(file));
        Json res{{"ad_in_der", r.ad_in_der},
                 {"der_in_qder", r.der_in_qder},
                 {"qder_in_gder", r.qder_in_gder},
                 {"gder_in_end", r.gder_in_end},
                 {"qder_plus_qc_is_gder", r.qder_plus_qc_is_gder},
                 {"der_plus_centroid_in_qder", r.der_plus_centroid_in_qder},
                 {"dims", Json{{"ad", r.ad_dim},
                               {"der", r.der_dim},
                               {"qder", r.qder_dim},
                               {"gder", r.gder_dim},
                               {"centroid", r.centroid_dim},
                               {"quasicentroid", r.quasicentroid_dim}}}};
        return make("lie chain", Json{{"file", file}}, res, r.ok());
      };
    });

    auto* cat = app.add_subcommand("catalog", "emit a fixture algebra");
    cat->add_option("NAME", name)->required();
    auto* nopt = cat->add_option("--n", nparam);
    cat->add_option("-o", out_file);
    cat->callback([&] {
      action = [&] {
        const std::optional<std::size_t> p = nopt->count() ? std::optional<std::size_t>(nparam) : std::nullopt;
        const catalog::CatalogEntry e = catalog::get(name, p);
        const Json alg = io::to_json(e.algebra);
        if (!out_file.empty()) io::write_json_file(out_file, alg);
        Json subs = Json::object();
        for (const auto& [k, s] : e.named_subspaces) subs[k] = io::to_json(s);
        Json inputs{{"name", name}};
        if (p) inputs["n"] = *p;
        if (!out_file.empty()) inputs["output"] = out_file;
        return make("lie catalog", inputs, Json{{"algebra", alg}, {"named_subspaces", subs}}, true);
      };
    });
  } else {
    auto* ver = app.add_subcommand("verify", "verify a post-Lie pair");
    ver->add_option("PAIRFILE", file)->required();
    ver->callback([&] {
      action = [&] {
        const PostLiePair P = io::pair_from_json(io::read_json_file(file));
        bool ok = false;
        Json res = verify_pair(P, ok);
        return make("postlie verify", Json{{"file", file}}, res, ok);
      };
    });

    auto* sp = app.add_subcommand("split", "post-Lie structure from n = A ⊕ B");
    sp->add_option("FILE", file)->required();
    sp->add_option("--left", left)->required();
    sp->add_option("--right", right)->required();
    sp->add_option("-o", out_file);
    sp->callback([&] {
      action = [&] {
        const LieAlgebra n = load_valid_algebra(file);
        auto span_of = [&](const std::string& text) {
          std::vector<Vector> vs;
          for (auto i : parse_index_list(text, n.dim())) vs.push_back(unit_vector(n.dim(), i));
          return Subspace::span(vs, n.dim());
        };
        const SplitResult r = split_construction(n, span_of(left), span_of(right));
        if (!out_file.empty()) io::write_json_file(out_file, io::to_json(r.pair));
        bool ok = false;
        Json res{{"pair", io::to_json(r.pair)}, {"phi", io::to_json(r.phi)}};
        res["verification"] = verify_pair(r.pair, ok);
        Json inputs{{"file", file}, {"left", left}, {"right", right}};
        if (!out_file.empty()) inputs["output"] = out_file;
        return make("postlie split", inputs, res, ok);
      };
    });

    auto* ph = app.add_subcommand("phi", "product x.y = {phi x, y}");
    ph->add_option("FILE", file)->required();
    ph->add_option("PHIFILE", second_file)->required();
    ph->callback([&] {
      action = [&] {
        const LieAlgebra n = load_valid_algebra(file);
        const Matrix phi = io::matrix_from_json(io::read_json_file(second_file));
        if (phi.rows() != n.dim() || phi.cols() != n.dim()) throw ParseError("phi must be dim x dim");
        const PhiInduced r = phi_induced(n, phi);
        bool ok = false;
        Json res{{"conditions", Json{{"violations", to_json(r.conditions)}, {"g_jacobi", to_json(r.g_validation)}, {"ok", r.conditions_hold()}}},
                 {"pair", io::to_json(r.pair)}};
        res["verification"] = verify_pair(r.pair, ok);
        return make("postlie phi", Json{{"file", file}, {"phi_file", second_file}}, res, ok && r.conditions_hold());
      };
    });

    auto* az = app.add_subcommand("adz", "product x.y = {{z,x},y} + lambda {x,y}");
    az->add_option("FILE", file)->required();
    az->add_option("--z", zs)->required();
    az->add_option("--lambda", lambda_text)->required();
    az->callback([&] {
      action = [&] {
        const LieAlgebra n = load_valid_algebra(file);
        const Vector z = parse_rational_list(zs);
        if (z.size() != n.dim()) throw ParseError("--z must have dim entries");
        const Rational lambda = parse_rational(lambda_text);
        const AdzReport r = adz_lambda(n, z, lambda);
        bool ok = false;
        Json res{{"eq9", Json{{"violations", to_json(r.eq9)}, {"ok", r.eq9.ok()}}},
                 {"eq10", Json{{"violations", to_json(r.eq10)}, {"ok", r.eq10.ok()}}},
                 {"eq11", r.eq11},
                 {"pair", io::to_json(r.induced.pair)}};
        res["verification"] = verify_pair(r.induced.pair, ok);
        Json inputs{{"file", file}, {"z", io::to_json(z)}, {"lambda", io::to_json(lambda)}};
        return make("postlie adz", inputs, res, ok && r.conditions_hold());
      };
    });
  }

  std::vector<std::string> rest(args.begin() + 1, args.end());
  std::reverse(rest.begin(), rest.end());  // CLI11 consumes a reversed vector
  try {
    app.parse(rest);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return exit_input_error;
  }
  if (!action) return exit_input_error;
  try {
    const Outcome o = action();
    out << o.report.dump(2) << '\n';
    return o.code;
  } catch (const Error& e) {
    err << args[0] << ": " << e.what() << '\n';
    return exit_input_error;
  } catch (const Json::exception& e) {
    err << args[0] << ": " << e.what() << '\n';
    return exit_input_error;
  }
}

}  // namespace postlie::cli

#endif  // POSTLIE_CLI_HPP
