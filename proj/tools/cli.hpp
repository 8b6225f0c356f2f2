// Copyright 2026 The chordalm Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "chordalm.hpp"

// Command-line front end. Exit codes: 0 success or a positive answer, 1 a
// negative answer, 2 a usage or input error, 3 an internal invariant
// violation (a counterexample to a verified equivalence).

namespace chordalm::cli {

using nlohmann::json;

inline constexpr int kExitTrue = 0;
inline constexpr int kExitFalse = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitViolation = 3;

inline int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kGutsLeak:
    case ErrorCode::kNoValidSplit:
      return kExitViolation;
    default:
      return kExitUsage;
  }
}

/// One JSON-lines report object: {check, input, result, witness?, elapsed_ms}.
inline json report(const std::string& check, const std::string& input, json result, std::optional<json> witness,
                   double elapsed_ms) {
  json j;
  j["check"] = check;
  j["input"] = input;
  j["result"] = std::move(result);
  if (witness) j["witness"] = std::move(*witness);
  j["elapsed_ms"] = elapsed_ms;
  return j;
}

inline json witness_json(const Witness& w) {
  return json{{"kind", w.kind == WitnessKind::kInducedRestriction ? "induced-restriction" : "induced-minor"},
              {"contracted", w.contracted},
              {"flat", w.flat},
              {"classification", w.classification.name()}};
}

inline std::string witness_text(const Witness& w) {
  std::string s = w.classification.name() + " on {";
  for (std::size_t i = 0; i < w.flat.size(); ++i) s += (i ? " " : "") + w.flat[i];
  s += "}";
  if (!w.contracted.empty()) {
    s += " after contracting {";
    for (std::size_t i = 0; i < w.contracted.size(); ++i) s += (i ? " " : "") + w.contracted[i];
    s += "}";
  }
  return s;
}

inline json matroid_json(const RepMatroid& m) {
  json pts = json::array();
  for (std::size_t i = 0; i < m.size(); ++i) pts.push_back({{"label", m.label(i)}, {"digits", to_digits(m.point(i))}});
  return json{{"q", m.q()}, {"r", m.ambient_rank()}, {"n", m.size()}, {"points", pts}};
}

inline json tree_json(const DecompTree& t) {
  json nodes = json::array();
  for (const auto& n : t.nodes) {
    json node{{"n", n.matroid.size()}, {"rank", matroid_rank(n.matroid)}};
    if (n.left < 0) {
      node["leaf"] = to_string(n.leaf);
    } else {
      node["k"] = n.k;
      node["glue"] = n.glue;
      node["children"] = {n.left, n.right};
    }
    nodes.push_back(node);
  }
  return json{{"leaves", t.leaf_count()}, {"internal", t.internal_count()}, {"nodes", nodes}};
}

inline void print_tree(std::ostream& out, const DecompTree& t, int id, int depth) {
  const auto& n = t.nodes[static_cast<std::size_t>(id)];
  out << std::string(static_cast<std::size_t>(depth) * 2, ' ');
  if (n.left < 0) {
    out << "leaf " << to_string(n.leaf) << " n=" << n.matroid.size() << " rank=" << matroid_rank(n.matroid) << "\n";
    return;
  }
  out << "gpc k=" << n.k << " guts={";
  for (std::size_t i = 0; i < n.glue.size(); ++i) out << (i ? " " : "") << n.glue[i];
  out << "} n=" << n.matroid.size() << "\n";
  print_tree(out, t, n.left, depth + 1);
  print_tree(out, t, n.right, depth + 1);
}

/// Graph names: K<n>, C<n>, W<n>, K<a>,<b>; or an explicit edge list "0-1 1-2 ...".
inline std::vector<Edge> parse_graph(const std::string& spec) {
  auto num = [&](const std::string& s) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
      throw Error(ErrorCode::kInvalidArgument, "bad graph '" + spec + "'");
    }
    return std::stoi(s);
  };
  if (spec.size() >= 2 && (spec[0] == 'K' || spec[0] == 'C' || spec[0] == 'W')) {
    std::string rest = spec.substr(1);
    auto comma = rest.find(',');
    if (spec[0] == 'K' && comma != std::string::npos) {
      return complete_bipartite_graph(num(rest.substr(0, comma)), num(rest.substr(comma + 1)));
    }
    int n = num(rest);
    if (spec[0] == 'K') return complete_graph(n);
    if (spec[0] == 'C') return cycle_graph(n);
    return wheel_graph(n);
  }
  std::vector<Edge> edges;
  std::istringstream in(spec);
  std::string tok;
  while (in >> tok) {
    for (char& c : tok)
      if (c == ',') c = ' ';
    auto dash = tok.find('-');
    if (dash == std::string::npos) throw Error(ErrorCode::kInvalidArgument, "bad edge '" + tok + "'");
    edges.emplace_back(num(tok.substr(0, dash)), num(tok.substr(dash + 1)));
  }
  return edges;
}

/// "a=b,c=d" pairs a label of the first matroid with a label of the second.
inline GluePairing parse_glue(const std::string& spec) {
  GluePairing g;
  std::string s = spec;
  for (char& c : s)
    if (c == ',') c = ' ';
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) {
    auto eq = tok.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == tok.size()) {
      throw Error(ErrorCode::kInvalidArgument, "bad glue pair '" + tok + "', expected a=b");
    }
    g.pairs.emplace_back(tok.substr(0, eq), tok.substr(eq + 1));
  }
  return g;
}

/// A family id from forbidden_family ("gf<q>-minor", "gf<q>-restriction") or
/// a comma-separated list of patterns: c<n>, c>=<n>, u<r>.<n>, k4, k33.
inline Family parse_family(const std::string& spec) {
  for (int q : {2, 3, 4, 5, 7, 8, 9}) {
    if (spec == "gf" + std::to_string(q) + "-minor") return forbidden_family(q, Route::kMinor);
    if (spec == "gf" + std::to_string(q) + "-restriction") return forbidden_family(q, Route::kRestriction);
  }
  Family fam{spec, {}};
  auto num = [&](const std::string& s) -> std::size_t {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
      throw Error(ErrorCode::kInvalidArgument, "bad family '" + spec + "'");
    }
    return std::stoul(s);
  };
  std::string s = spec;
  for (char& c : s)
    if (c == ',') c = ' ';
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) {
    if (tok == "k4") {
      fam.patterns.push_back(FamilyPattern::graphic_k4());
    } else if (tok == "k33") {
      fam.patterns.push_back(FamilyPattern::dual_k33());
    } else if (tok.rfind("c>=", 0) == 0) {
      fam.patterns.push_back(FamilyPattern::circuits_from(num(tok.substr(3))));
    } else if (tok[0] == 'c') {
      fam.patterns.push_back(FamilyPattern::circuit(num(tok.substr(1))));
    } else if (tok[0] == 'u' && tok.find('.') != std::string::npos) {
      auto dot = tok.find('.');
      fam.patterns.push_back(FamilyPattern::uniform(num(tok.substr(1, dot - 1)), num(tok.substr(dot + 1))));
    } else {
      throw Error(ErrorCode::kInvalidArgument, "unknown family pattern '" + tok + "'");
    }
  }
  if (fam.patterns.empty()) throw Error(ErrorCode::kInvalidArgument, "empty family");
  return fam;
}

struct Context {
  std::ostream& out;
  std::ostream& err;
  bool json = false;
};

inline void emit_matroid(Context& ctx, const RepMatroid& m, const std::string& path) {
  if (!path.empty()) {
    write_matroid(m, path);
  } else if (ctx.json) {
    ctx.out << matroid_json(m).dump() << "\n";
  } else {
    ctx.out << format_matroid(m);
  }
}

inline double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

/// Runs the command line; never throws.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Chordal and GF(q)-chordal represented matroids"};
  app.require_subcommand(1);
  Context ctx{out, err};
  app.add_flag("--json", ctx.json, "Emit JSON lines");

  // gen
  auto* gen = app.add_subcommand("gen", "Construct a matroid and print it in the matroid file format");
  std::string gen_kind, gen_graph, gen_out;
  std::size_t gen_rank = 3, gen_n = 0;
  int gen_q = 2;
  double gen_budget = 1e7;
  gen->add_option("kind", gen_kind, "pg, circuit, graphic, dual-k33, uniform, ag or s8")
      ->required()
      ->check(CLI::IsMember({"pg", "circuit", "graphic", "dual-k33", "uniform", "ag", "s8"}));
  gen->add_option("--rank,-r", gen_rank, "Rank (pg, uniform, ag)");
  gen->add_option("--n,-n", gen_n, "Number of elements (circuit, uniform)");
  gen->add_option("--q,-q", gen_q, "Field order");
  gen->add_option("--graph", gen_graph, "K<n>, C<n>, W<n>, K<a>,<b> or an edge list '0-1 1-2 ...'");
  gen->add_option("--budget", gen_budget, "Search node budget (uniform)");
  gen->add_option("--output,-o", gen_out, "Write to a file instead of standard output");

  // gpc
  auto* gpc_cmd = app.add_subcommand("gpc", "Generalized parallel connection of two matroid files");
  std::string gpc_a, gpc_b, gpc_glue, gpc_mode = "projective", gpc_out;
  gpc_cmd->add_option("file1", gpc_a)->required();
  gpc_cmd->add_option("file2", gpc_b)->required();
  gpc_cmd->add_option("--glue", gpc_glue, "Label pairs a=b,c=d")->required();
  gpc_cmd->add_option("--mode", gpc_mode)->check(CLI::IsMember({"projective", "modular"}));
  gpc_cmd->add_option("--output,-o", gpc_out);

  // check
  auto* check = app.add_subcommand("check", "Decide a property of a matroid file");
  std::string check_prop, check_method = "minor", check_file;
  check->add_option("property", check_prop)->required()->check(CLI::IsMember({"chordal", "gfq-chordal", "round"}));
  check->add_option("--method", check_method, "minor, restriction, peo or decompose (gfq-chordal)")
      ->check(CLI::IsMember({"minor", "restriction", "peo", "decompose"}));
  check->add_option("file", check_file)->required();

  // detect
  auto* detect = app.add_subcommand("detect", "Search for induced restrictions or induced minors");
  std::string detect_route, detect_family, detect_file;
  detect->add_option("route", detect_route)->required()->check(CLI::IsMember({"induced-restriction", "induced-minor"}));
  detect->add_option("--family", detect_family, "gf<q>-minor, gf<q>-restriction or patterns c4,c>=4,u2.4,k4,k33")
      ->required();
  detect->add_option("file", detect_file)->required();

  // peo
  auto* peo = app.add_subcommand("peo", "Find or verify perfect elimination orderings of cocircuits");
  peo->require_subcommand(1);
  auto* peo_find = peo->add_subcommand("find", "Search for an ordering");
  std::string peo_file, peo_cert, peo_out;
  peo_find->add_option("file", peo_file)->required();
  peo_find->add_option("--output,-o", peo_out, "Write the certificate to a file");
  auto* peo_verify = peo->add_subcommand("verify", "Verify a certificate");
  peo_verify->add_option("file", peo_file)->required();
  peo_verify->add_option("cert", peo_cert)->required();

  // decompose
  auto* decomp = app.add_subcommand("decompose", "Build a decomposition tree");
  std::string decomp_mode = "gfq-projective", decomp_file;
  decomp->add_option("--mode", decomp_mode)->check(CLI::IsMember({"chordal-modular", "gfq-projective"}));
  decomp->add_option("file", decomp_file)->required();

  // catalog
  auto* catalog = app.add_subcommand("catalog", "Enumerate classes and verify characterizations");
  catalog->require_subcommand(1);
  auto* cat_enum = catalog->add_subcommand("enumerate", "List projective-equivalence classes");
  std::size_t cat_rank = 0, cat_min = 0, cat_max = std::numeric_limits<std::size_t>::max();
  int cat_q = 2;
  bool cat_spanning = false, cat_predicates = false, cat_count = false;
  cat_enum->add_option("--rank,-r", cat_rank)->required();
  cat_enum->add_option("--q,-q", cat_q)->required();
  cat_enum->add_flag("--spanning", cat_spanning);
  cat_enum->add_option("--min-size", cat_min);
  cat_enum->add_option("--max-size", cat_max);
  cat_enum->add_flag("--predicates", cat_predicates, "Annotate each class with its predicate values");
  cat_enum->add_flag("--count", cat_count, "Print only the number of classes");
  auto* cat_verify = catalog->add_subcommand("verify", "Run a verification check");
  std::string cat_check;
  CheckOptions cat_opts;
  cat_verify->add_option("--check", cat_check, "Check id or 'all'")->required();
  cat_verify->add_option("--samples", cat_opts.samples, "Sample count for sampled universes");
  cat_verify->add_option("--seed", cat_opts.seed, "Seed for sampled universes");
  catalog->add_subcommand("checks", "List check ids");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    auto t0 = std::chrono::steady_clock::now();
    if (*gen) {
      std::optional<RepMatroid> m;
      if (gen_kind == "pg") m = pg(gen_rank, gen_q);
      if (gen_kind == "circuit") m = circuit_matroid(gen_n, gen_q);
      if (gen_kind == "graphic") m = graphic(parse_graph(gen_graph));
      if (gen_kind == "dual-k33") m = dual_k33();
      if (gen_kind == "ag") m = affine_geometry(gen_rank, gen_q);
      if (gen_kind == "s8") m = s8();
      if (gen_kind == "uniform") {
        m = uniform(gen_rank, gen_n, gen_q, static_cast<std::uint64_t>(gen_budget));
        if (!m) {
          if (ctx.json) {
            out << report("uniform", "U" + std::to_string(gen_rank) + "," + std::to_string(gen_n) + " over GF(" +
                                         std::to_string(gen_q) + ")",
                          "NotRepresentable", std::nullopt, ms_since(t0))
                       .dump()
                << "\n";
          } else {
            out << "NotRepresentable\n";
          }
          return kExitFalse;
        }
      }
      emit_matroid(ctx, *m, gen_out);
      return kExitTrue;
    }
    if (*gpc_cmd) {
      RepMatroid m = gpc(read_matroid(gpc_a), read_matroid(gpc_b), parse_glue(gpc_glue),
                         gpc_mode == "projective" ? GpcMode::kProjectiveGuts : GpcMode::kModularGuts);
      emit_matroid(ctx, m, gpc_out);
      return kExitTrue;
    }
    if (*check) {
      RepMatroid m = read_matroid(check_file);
      bool answer = false;
      std::optional<json> wj;
      std::string detail;
      if (check_prop == "chordal") {
        auto r = is_chordal(m);
        answer = r.chordal;
        std::vector<std::string> bad;
        if (r.bad_flat) bad = m.labels_of(*r.bad_flat);
        else if (r.bad_circuit) bad = m.labels_of(*r.bad_circuit);
        if (!bad.empty()) {
          wj = json{{"circuit", bad}};
          detail = "unsplit circuit {";
          for (std::size_t i = 0; i < bad.size(); ++i) detail += (i ? " " : "") + bad[i];
          detail += "}";
        }
      } else if (check_prop == "round") {
        auto seps = vertical_separations(m);
        answer = seps.empty();
        if (!answer) {
          auto x = m.labels_of(seps.front().x);
          auto y = m.labels_of(seps.front().y);
          wj = json{{"x", x}, {"y", y}, {"k", seps.front().k}};
          detail = "vertical " + std::to_string(seps.front().k) + "-separation";
        }
      } else {
        auto method = *parse_method(check_method);
        auto r = is_gfq_chordal(m, method);
        answer = r.chordal;
        if (r.witness) {
          wj = witness_json(*r.witness);
          detail = witness_text(*r.witness);
        } else if (r.peo) {
          wj = json{{"peo", r.peo->cocircuits}};
        } else if (r.tree) {
          wj = tree_json(*r.tree);
        }
      }
      std::string name = check_prop == "gfq-chordal" ? check_prop + ":" + check_method : check_prop;
      if (ctx.json) {
        out << report(name, check_file, answer, wj, ms_since(t0)).dump() << "\n";
      } else {
        out << (answer ? "true" : "false");
        if (!detail.empty()) out << " (" << detail << ")";
        out << "\n";
      }
      return answer ? kExitTrue : kExitFalse;
    }
    if (*detect) {
      RepMatroid m = read_matroid(detect_file);
      Family fam = parse_family(detect_family);
      std::vector<Witness> found;
      if (detect_route == "induced-restriction") {
        found = induced_restrictions(m, fam);
      } else if (auto w = has_induced_minor(m, fam)) {
        found.push_back(*w);
      }
      if (ctx.json) {
        json ws = json::array();
        for (const auto& w : found) ws.push_back(witness_json(w));
        out << report(detect_route + ":" + fam.id, detect_file, !found.empty(),
                      found.empty() ? std::nullopt : std::optional<json>(ws), ms_since(t0))
                   .dump()
            << "\n";
      } else {
        if (found.empty()) out << "none\n";
        for (const auto& w : found) out << witness_text(w) << "\n";
      }
      return found.empty() ? kExitFalse : kExitTrue;
    }
    if (*peo_find) {
      RepMatroid m = read_matroid(peo_file);
      PeoSearchStats stats;
      auto cert = find_peo(m, &stats);
      if (ctx.json) {
        json result{{"found", cert.has_value()}, {"nodes", stats.nodes}, {"backtracks", stats.backtracks}};
        std::optional<json> wj;
        if (cert) {
          result["sizes"] = cert->sizes();
          wj = json{{"cocircuits", cert->cocircuits}};
        }
        out << report("peo-find", peo_file, result, wj, ms_since(t0)).dump() << "\n";
      } else if (cert) {
        if (peo_out.empty()) out << format_certificate(*cert);
      } else {
        out << "no perfect elimination ordering\n";
      }
      if (cert && !peo_out.empty()) {
        std::ofstream f(peo_out, std::ios::binary);
        if (!f) throw Error(ErrorCode::kInvalidArgument, "cannot write " + peo_out);
        f << format_certificate(*cert);
      }
      return cert ? kExitTrue : kExitFalse;
    }
    if (*peo_verify) {
      RepMatroid m = read_matroid(peo_file);
      PeoCertificate cert = parse_certificate(read_text_file(peo_cert));
      auto v = verify_peo(m, cert);
      if (ctx.json) {
        json result{{"valid", v.ok}};
        std::optional<json> wj;
        if (!v.ok) wj = json{{"step", v.failing_step ? json(*v.failing_step + 1) : json(nullptr)}, {"reason", v.reason}};
        out << report("peo-verify", peo_file, result, wj, ms_since(t0)).dump() << "\n";
      } else if (v.ok) {
        out << "valid\n";
      } else {
        out << "invalid at step " << (v.failing_step ? *v.failing_step + 1 : 0) << ": " << v.reason << "\n";
      }
      return v.ok ? kExitTrue : kExitFalse;
    }
    if (*decomp) {
      RepMatroid m = read_matroid(decomp_file);
      DecompMode mode = decomp_mode == "chordal-modular" ? DecompMode::kChordalModular : DecompMode::kGfqProjective;
      DecompTree tree;
      try {
        tree = decompose_tree(m, mode);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::kPreconditionFailed) throw;
        if (ctx.json) {
          out << report("decompose:" + decomp_mode, decomp_file, false, json{{"error", e.what()}}, ms_since(t0)).dump()
              << "\n";
        } else {
          out << e.what() << "\n";
        }
        return kExitFalse;
      }
      if (ctx.json) {
        out << report("decompose:" + decomp_mode, decomp_file, true, tree_json(tree), ms_since(t0)).dump() << "\n";
      } else {
        print_tree(out, tree, 0, 0);
      }
      return kExitTrue;
    }
    if (*cat_enum) {
      EnumerateOptions opts{cat_spanning, cat_min, cat_max};
      std::size_t count = 0;
      enumerate_each(cat_rank, cat_q, opts, [&](CatalogRecord&& rec) {
        ++count;
        if (cat_count) return;
        if (cat_predicates) annotate(rec);
        if (ctx.json) {
          json j{{"q", rec.q}, {"r", rec.r}, {"n", rec.n}, {"code_hash", rec.code_hash}};
          json pts = json::array();
          for (const auto& p : rec.points) pts.push_back(to_digits(p));
          j["points"] = pts;
          if (rec.predicates) {
            const auto& p = *rec.predicates;
            j["predicates"] = {{"chordal", p.chordal},         {"gfq_minor", p.gfq_minor},
                               {"gfq_restriction", p.gfq_restriction}, {"gfq_peo", p.gfq_peo},
                               {"gfq_decompose", p.gfq_decompose}, {"round", p.round}};
          }
          out << j.dump() << "\n";
        } else {
          out << "n=" << rec.n;
          for (const auto& p : rec.points) out << " " << to_digits(p);
          if (rec.predicates) {
            const auto& p = *rec.predicates;
            out << " chordal=" << p.chordal << " gfq-chordal=" << p.gfq_minor << " round=" << p.round;
          }
          out << "\n";
        }
      });
      if (ctx.json) {
        if (cat_count) out << json{{"q", cat_q}, {"r", cat_rank}, {"classes", count}, {"code_hash", code_hash()}}.dump() << "\n";
      } else {
        out << count << " classes (code " << code_hash() << ")\n";
      }
      return kExitTrue;
    }
    if (*cat_verify) {
      std::vector<std::string> ids;
      if (cat_check == "all") {
        for (const auto& c : check_table()) ids.push_back(c.id);
      } else {
        ids.push_back(cat_check);
      }
      bool ok = true;
      for (const auto& id : ids) {
        VerificationReport r = verify(id, cat_opts);
        ok = ok && r.ok();
        if (ctx.json) {
          json result{{"pass", r.pass}, {"fail", r.fail}, {"universe_size", r.universe_size()}, {"ok", r.ok()},
                      {"counterexamples", r.counterexamples}};
          out << report(r.check, r.universe, result, std::nullopt, r.elapsed_ms).dump() << "\n";
        } else {
          out << r.check << ": " << (r.ok() ? "ok" : "FAILED") << " pass=" << r.pass << " fail=" << r.fail
              << " universe=" << r.universe_size() << " (" << r.universe << ") " << static_cast<long>(r.elapsed_ms)
              << " ms\n";
          for (const auto& c : r.counterexamples) out << "  counterexample " << c << "\n";
        }
      }
      return ok ? kExitTrue : kExitViolation;
    }
    if (catalog->got_subcommand("checks")) {
      for (const auto& c : check_table()) {
        out << c.id;
        for (const auto& a : c.aliases) out << " " << a;
        out << "\n    " << c.summary << "\n";
      }
      return kExitTrue;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitViolation;
  }
  return kExitUsage;
}

}  // namespace chordalm::cli
