#pragma once

// Batch command-line front end. Exit codes: 0 success, 2 parameter error,
// 3 data error, 4 an audit hard check failed, 1 anything else.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <thread>
#include <exception>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "CLI11.hpp"
#include "spexgraph/audit.hpp"
#include "spexgraph/enumerate.hpp"
#include "spexgraph/errors.hpp"
#include "spexgraph/extremal.hpp"
#include "spexgraph/forbidden.hpp"
#include "spexgraph/graph.hpp"
#include "spexgraph/graph6.hpp"
#include "spexgraph/local_search.hpp"
#include "spexgraph/spectral.hpp"

namespace spexgraph::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_internal = 1;
inline constexpr int exit_parameter = 2;
inline constexpr int exit_data = 3;
inline constexpr int exit_audit_failed = 4;

namespace detail {

struct FamilyFlags {
  std::string forbid;
  int k = 0;
  bool even_only = false;
  bool both = false;

  void attach(CLI::App* app) {
    app->add_option("--forbid", forbid, "Forbidden cycles, e.g. C5,C6");
    app->add_flag("--even-only", even_only, "With --k: forbid C_{2k+2}");
    app->add_flag("--both", both, "With --k: forbid C_{2k+1} and C_{2k+2}");
  }

  ForbiddenFamily resolve() const {
    if (!forbid.empty()) {
      if (even_only || both) throw ParameterError("--forbid cannot be combined with --even-only/--both");
      return ForbiddenFamily::parse(forbid);
    }
    if (even_only && both) throw ParameterError("--even-only and --both are mutually exclusive");
    if (k < 1 && (even_only || both)) throw ParameterError("--even-only/--both require --k >= 1");
    if (even_only) return ForbiddenFamily::even_only(k);
    if (both) return ForbiddenFamily::both_cycles(k);
    throw ParameterError("a forbidden family is required: --forbid, or --k with --even-only/--both");
  }
};

inline std::vector<Graph> read_graphs(const std::string& source, std::istream& in) {
  if (source.empty()) throw ParameterError("--g6 <file|-> is required");
  if (source == "-") return graph6_read_all(in);
  std::ifstream file(source);
  if (!file) throw DataError("cannot open graph6 file '" + source + "'");
  return graph6_read_all(file);
}

inline void require_format(const std::string& fmt, std::initializer_list<const char*> allowed) {
  for (auto a : allowed)
    if (fmt == a) return;
  throw ParameterError("unsupported output format '" + fmt + "'");
}

inline std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t used = 0;
      int v = std::stoi(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      out.push_back(v);
    } catch (const std::exception&) {
      throw ParameterError("bad integer '" + tok + "' in list '" + text + "'");
    }
  }
  return out;
}

inline std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12f", v);
  return buf;
}

}  // namespace detail

inline int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spectral extremal graph toolkit for forbidden cycles", "spexgraph"};
  app.require_subcommand(1);

  std::string g6_source, out_format, checks, family_name, params, provenance = "constructed", u_list;
  int n = 0, k = 0, threads = 1, cap = 9;
  double tol = 1e-12;
  std::uint64_t seed = 1;
  long max_iters = 10000;
  bool timing = false;
  detail::FamilyFlags fam;

  auto add_format = [&](CLI::App* sub, const char* formats) {
    sub->add_option("--out,--format", out_format, formats);
  };

  auto* construct = app.add_subcommand("construct", "Build a named graph");
  construct->add_option("--family", family_name, "empty|complete|path|cycle|complete_bipartite|turan|s_nk|s_nk_plus")
      ->required();
  construct->add_option("--n", n, "Vertex count");
  construct->add_option("--k", k, "Clique size for s_nk / s_nk_plus");
  construct->add_option("--params", params, "Explicit parameter list, e.g. 3,4 for complete_bipartite");

  auto* spectral = app.add_subcommand("spectral", "Spectral radius and Perron vector");
  spectral->add_option("--g6", g6_source, "graph6 file or - for stdin");
  spectral->add_option("--tol", tol, "Residual tolerance");

  auto* check_free = app.add_subcommand("check-free", "Test freeness from a family of cycles");
  check_free->add_option("--g6", g6_source, "graph6 file or - for stdin");
  check_free->add_option("--k", fam.k, "Half-length parameter for --even-only/--both");
  fam.attach(check_free);

  auto* extremal = app.add_subcommand("extremal", "Exact ex/spex by exhaustive enumeration");
  extremal->add_option("--n", n, "Vertex count")->required();
  extremal->add_option("--k", fam.k, "Half-length parameter for --even-only/--both");
  fam.attach(extremal);
  std::string objective_name = "lambda";
  extremal->add_option("--objective", objective_name, "edges|lambda");
  extremal->add_option("--threads", threads, "Worker threads");
  extremal->add_option("--g6", g6_source, "Scan this graph6 corpus instead of enumerating");
  extremal->add_option("--cap", cap, "Enumeration cap (<= 10)");
  extremal->add_option("--tol", tol, "Spectral tolerance");
  extremal->add_flag("--timing", timing, "Fill the seconds column");

  auto* search = app.add_subcommand("search", "Seeded hill-climb maximizing lambda");
  search->add_option("--n", n, "Vertex count")->required();
  search->add_option("--k", fam.k, "Half-length parameter for --even-only/--both");
  fam.attach(search);
  search->add_option("--seed", seed, "PRNG seed");
  search->add_option("--max-iters", max_iters, "Iterations");

  auto* audit = app.add_subcommand("audit", "Lemma audits on graph6 input");
  audit->add_option("--g6", g6_source, "graph6 file or - for stdin");
  audit->add_option("--k", fam.k, "Cycle parameter k (C_{2k+2} forbidden)")->required();
  audit->add_flag("--even-only", fam.even_only, "Also run the extremal-structure audit, even-cycle mode");
  audit->add_flag("--both", fam.both, "Also run the extremal-structure audit, two-cycle mode");
  audit->add_option("--checks", checks, "Comma list of check ids to report");
  audit->add_option("--provenance", provenance, "exhaustive|constructed|heuristic");
  audit->add_option("--U", u_list, "Vertex list U for the bipartition audit (W = rest)");
  audit->add_option("--threads", threads, "Worker threads");
  audit->add_flag("--corpus", "Input holds many graphs (accepted for compatibility)");

  add_format(construct, "g6|json|table (default g6)");
  add_format(check_free, "json|csv|table (default table)");
  add_format(extremal, "json|csv|table (default table)");
  add_format(search, "json|table (default table)");
  add_format(audit, "json|table (default table)");
  add_format(spectral, "json|csv|table (default json)");

  std::vector<const char*> argv{"spexgraph"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return exit_parameter;
  }
  auto set_default_format = [&](CLI::App* sub, const char* def) {
    if (sub->count("--out") == 0 && sub->count("--format") == 0) out_format = def;
  };

  try {
    if (*construct) {
      set_default_format(construct, "g6");
      detail::require_format(out_format, {"g6", "json", "table"});
      const auto family = parse_family(family_name);
      std::vector<int> p;
      if (!params.empty()) {
        p = detail::parse_int_list(params);
      } else if (family == Family::s_nk || family == Family::s_nk_plus) {
        if (construct->count("--n") == 0 || construct->count("--k") == 0) {
          throw ParameterError(family_name + " requires --n and --k");
        }
        p = {n, k};
      } else if (family_arity(family) == 1) {
        if (construct->count("--n") == 0) throw ParameterError(family_name + " requires --n");
        p = {n};
      } else {
        throw ParameterError(family_name + " requires --params a,b");
      }
      const auto g = construct_named(family, p);
      if (out_format == "g6") {
        out << graph6_encode(g) << "\n";
      } else if (out_format == "json") {
        nlohmann::ordered_json j;
        j["family"] = family_name;
        j["params"] = p;
        j["n"] = g.order();
        j["m"] = g.edge_count();
        j["graph6"] = graph6_encode(g);
        out << j.dump() << "\n";
      } else {
        out << family_name << " n=" << g.order() << " m=" << g.edge_count() << " graph6=" << graph6_encode(g) << "\n";
      }
      return exit_ok;
    }

    if (*spectral) {
      set_default_format(spectral, "json");
      detail::require_format(out_format, {"json", "csv", "table"});
      if (!(tol > 0.0)) throw ParameterError("--tol must be > 0");
      auto graphs = detail::read_graphs(g6_source, in);
      if (out_format == "csv") out << "graph6,n,m,lambda,argmax_vertex,residual,iterations\n";
      for (const auto& g : graphs) {
        SpectralOptions so;
        so.tol = tol;
        auto sr = spectral_radius(g, so);
        if (out_format == "json") {
          nlohmann::ordered_json j;
          j["graph6"] = graph6_encode(g);
          j["n"] = g.order();
          j["m"] = g.edge_count();
          j["lambda"] = sr.lambda;
          j["argmax_vertex"] = sr.argmax_vertex;
          j["residual"] = sr.residual;
          j["iterations"] = sr.iterations;
          j["perron"] = sr.perron;
          out << j.dump() << "\n";
        } else if (out_format == "csv") {
          out << graph6_encode(g) << "," << g.order() << "," << g.edge_count() << "," << detail::fmt_double(sr.lambda)
              << "," << sr.argmax_vertex << "," << sr.residual << "," << sr.iterations << "\n";
        } else {
          out << graph6_encode(g) << "  n=" << g.order() << " m=" << g.edge_count()
              << " lambda=" << detail::fmt_double(sr.lambda) << " residual=" << sr.residual << "\n";
        }
      }
      return exit_ok;
    }

    if (*check_free) {
      set_default_format(check_free, "table");
      detail::require_format(out_format, {"json", "csv", "table"});
      const auto family = fam.resolve();
      auto graphs = detail::read_graphs(g6_source, in);
      if (out_format == "csv") out << "graph6,family,free,witness\n";
      for (const auto& g : graphs) {
        auto fr = is_family_free(g, family);
        std::string wit;
        if (fr.witness) {
          for (auto v : fr.witness->vertices) wit += (wit.empty() ? "" : " ") + std::to_string(v);
        }
        if (out_format == "json") {
          nlohmann::ordered_json j;
          j["graph6"] = graph6_encode(g);
          j["family"] = family.to_string();
          j["free"] = fr.free;
          j["witness"] = fr.witness ? nlohmann::ordered_json(fr.witness->vertices) : nlohmann::ordered_json(nullptr);
          out << j.dump() << "\n";
        } else if (out_format == "csv") {
          out << graph6_encode(g) << ",\"" << family.to_string() << "\"," << (fr.free ? "true" : "false") << ","
              << wit << "\n";
        } else {
          out << graph6_encode(g) << "  " << family.to_string() << "-free: " << (fr.free ? "yes" : "no");
          if (fr.witness) out << "  witness cycle: " << wit;
          out << "\n";
        }
      }
      return exit_ok;
    }

    if (*extremal) {
      set_default_format(extremal, "table");
      detail::require_format(out_format, {"json", "csv", "table"});
      const auto family = fam.resolve();
      const auto objective = parse_objective(objective_name);
      if (threads < 1) throw ParameterError("--threads must be >= 1");
      ExtremalOptions eo;
      eo.spectral_tol = tol;
      eo.enumeration.cap = cap;
      eo.enumeration.threads = static_cast<unsigned>(threads);
      eo.enumeration.progress = [&err](std::size_t c) { err << "[extremal] " << c << " graphs\n"; };
      ExtremalRecord rec;
      if (!g6_source.empty()) {
        auto graphs = detail::read_graphs(g6_source, in);
        rec = compute_extremal(n, family, objective, graphs, eo);
      } else {
        rec = compute_extremal(n, family, objective, eo);
      }
      if (out_format == "csv") {
        out << extremal_csv_header() << "\n" << extremal_csv_row(rec, timing) << "\n";
      } else if (out_format == "json") {
        out << extremal_json(rec, timing).dump() << "\n";
      } else {
        out << "n=" << rec.n << " family=" << rec.family.to_string() << " objective=" << to_string(rec.objective)
            << "\nbest_value=" << format_value(rec.objective, rec.best_value) << " argmax=" << rec.argmax.size()
            << " scanned=" << rec.graphs_scanned << "\n";
        for (const auto& g : rec.argmax) out << "  " << graph6_encode(g) << "  m=" << g.edge_count() << "\n";
      }
      return exit_ok;
    }

    if (*search) {
      set_default_format(search, "table");
      detail::require_format(out_format, {"json", "table"});
      const auto family = fam.resolve();
      auto trace = local_search(n, family, seed, max_iters);
      auto tension = check_theorem_tension(trace, family);
      if (tension.tension) {
        err << "THEOREM-TENSION: lambda " << detail::fmt_double(tension.found) << " exceeds reference "
            << detail::fmt_double(tension.reference) << "\n";
      }
      if (out_format == "json") {
        nlohmann::ordered_json j;
        j["n"] = n;
        j["family"] = family.to_string();
        j["seed"] = seed;
        j["iterations"] = trace.iterations;
        j["accepted_moves"] = trace.accepted_moves;
        j["restarts"] = trace.restarts;
        j["best_lambda"] = trace.final_lambda;
        j["graph6"] = graph6_encode(trace.final_graph);
        j["reference_lambda"] = tension.applicable ? nlohmann::ordered_json(tension.reference) : nlohmann::ordered_json(nullptr);
        j["theorem_tension"] = tension.tension;
        out << j.dump() << "\n";
      } else {
        out << "n=" << n << " family=" << family.to_string() << " seed=" << seed << " iterations=" << trace.iterations
            << " accepted=" << trace.accepted_moves << " restarts=" << trace.restarts << "\n"
            << "best_lambda=" << detail::fmt_double(trace.final_lambda);
        if (tension.applicable) out << " reference=" << detail::fmt_double(tension.reference);
        out << (tension.tension ? " THEOREM-TENSION" : "") << "\ngraph6=" << graph6_encode(trace.final_graph) << "\n";
      }
      return exit_ok;
    }

    if (*audit) {
      set_default_format(audit, "table");
      detail::require_format(out_format, {"json", "table"});
      if (fam.k < 1) throw ParameterError("--k must be >= 1");
      if (fam.even_only && fam.both) throw ParameterError("--even-only and --both are mutually exclusive");
      SpexAuditOptions so;
      if (provenance == "exhaustive") so.provenance = GraphProvenance::exhaustive;
      else if (provenance == "constructed") so.provenance = GraphProvenance::constructed;
      else if (provenance == "heuristic") so.provenance = GraphProvenance::heuristic;
      else throw ParameterError("unknown provenance '" + provenance + "'");
      std::vector<std::string> wanted;
      if (!checks.empty()) {
        std::stringstream ss(checks);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
          const auto& ids = audit_check_ids();
          if (std::find(ids.begin(), ids.end(), tok) == ids.end()) {
            throw ParameterError("unknown check id '" + tok + "'");
          }
          wanted.push_back(tok);
        }
      }
      if (threads < 1) throw ParameterError("--threads must be >= 1");
      auto graphs = detail::read_graphs(g6_source, in);
      auto audit_one = [&](const Graph& g) {
        LemmaAuditReport rep = audit_neighborhood_bounds(g, fam.k);
        rep.append(audit_global_bounds(g, fam.k));
        if (!u_list.empty()) {
          VertexSet u(g.order(), detail::parse_int_list(u_list));
          rep.append(audit_bipartition_lemma(g, u, u.complement(), fam.k));
        }
        if (fam.even_only || fam.both) {
          rep.append(audit_spex_graph(g, fam.k, fam.even_only ? SpexMode::even_only : SpexMode::both_cycles, so));
        }
        if (!wanted.empty()) {
          std::erase_if(rep.checks, [&](const CheckResult& c) {
            return std::find(wanted.begin(), wanted.end(), c.name) == wanted.end();
          });
        }
        return rep;
      };
      // Reports are produced per graph by the workers and printed in input order.
      std::vector<LemmaAuditReport> reports(graphs.size());
      std::vector<std::exception_ptr> failures(graphs.size());
      auto work = [&](std::size_t first, std::size_t stride) {
        for (std::size_t i = first; i < graphs.size(); i += stride) {
          try {
            reports[i] = audit_one(graphs[i]);
          } catch (...) {
            failures[i] = std::current_exception();
          }
        }
      };
      const auto t = static_cast<std::size_t>(threads);
      if (t == 1) {
        work(0, 1);
      } else {
        std::vector<std::thread> pool;
        for (std::size_t i = 0; i < t; ++i) pool.emplace_back(work, i, t);
        for (auto& th : pool) th.join();
      }
      bool all_passed = true;
      for (std::size_t i = 0; i < graphs.size(); ++i) {
        if (failures[i]) std::rethrow_exception(failures[i]);
        all_passed = all_passed && reports[i].passed();
        out << (out_format == "json" ? audit_json_lines(reports[i]) : audit_table(reports[i]));
      }
      return all_passed ? exit_ok : exit_audit_failed;
    }
  } catch (const ParameterError& e) {
    err << "parameter error: " << e.what() << "\n";
    return exit_parameter;
  } catch (const CapacityError& e) {
    err << "capacity error: " << e.what() << "\n";
    return exit_parameter;
  } catch (const DataError& e) {
    err << "data error: " << e.what() << "\n";
    return exit_data;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_internal;
  }
  return exit_internal;
}

}  // namespace spexgraph::cli
