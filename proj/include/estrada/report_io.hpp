#pragma once

#include <cstdio>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "estrada/extremal.hpp"
#include "estrada/graph.hpp"
#include "estrada/invariants.hpp"
#include "estrada/quartic.hpp"
#include "estrada/spectral.hpp"

namespace estrada::io {

using nlohmann::json;

/// Round-trip decimal form used in CSV output.
inline std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

inline std::string theorem_name(ClassKind kind) {
  switch (kind) {
    case ClassKind::matching: return "matching";
    case ClassKind::vertex_connectivity: return "connectivity";
    case ClassKind::edge_connectivity: return "edge-connectivity";
  }
  return "?";
}

inline std::optional<ClassKind> parse_theorem(const std::string& name) {
  if (name == "matching") return ClassKind::matching;
  if (name == "connectivity") return ClassKind::vertex_connectivity;
  if (name == "edge-connectivity") return ClassKind::edge_connectivity;
  return std::nullopt;
}

// compute ------------------------------------------------------------------

inline json compute_report(const Graph& g, double tol = kJacobiTolerance) {
  const auto spectrum = eigenvalues(g, tol);
  const bool bipartite = is_bipartite(g);
  const auto series = estrada_moment_series(g);
  json j;
  j["graph6"] = emit_graph6(g);
  j["n"] = g.order();
  j["m"] = g.edge_count();
  j["bipartite"] = bipartite;
  j["eigenvalues"] = spectrum.eigenvalues;
  j["nullity"] = spectrum.nullity;
  j["estrada_eigen"] = estrada_from_spectrum(spectrum.extended);
  if (bipartite) {
    j["estrada_cosh"] = estrada_from_cosh(spectrum);
  } else {
    j["estrada_cosh"] = nullptr;
    j["note"] = "cosh form omitted: graph is not bipartite";
  }
  j["estrada_moment_series"] = series.value;
  j["error_bound"] = series.error_bound;
  j["moment_series_terms"] = series.terms;
  try {
    j["matching_number"] = matching_number(g);
  } catch (const InvalidInput&) {
    j["matching_number"] = nullptr;
  }
  j["vertex_connectivity"] = vertex_connectivity(g);
  j["edge_connectivity"] = edge_connectivity(g);
  j["tolerance"] = tol;
  return j;
}

inline std::string compute_csv_header() {
  return "graph6,n,m,bipartite,nullity,estrada_eigen,estrada_cosh,estrada_moment_series,error_bound,"
         "matching_number,vertex_connectivity,edge_connectivity";
}

inline std::string compute_csv_row(const json& j) {
  auto num = [&](const char* key) {
    const auto& v = j.at(key);
    if (v.is_null()) return std::string();
    if (v.is_number_float()) return format_double(v.get<double>());
    return v.dump();
  };
  std::ostringstream os;
  os << j.at("graph6").get<std::string>() << ',' << num("n") << ',' << num("m") << ','
     << (j.at("bipartite").get<bool>() ? "true" : "false") << ',' << num("nullity") << ',' << num("estrada_eigen")
     << ',' << num("estrada_cosh") << ',' << num("estrada_moment_series") << ',' << num("error_bound") << ','
     << num("matching_number") << ',' << num("vertex_connectivity") << ',' << num("edge_connectivity");
  return os.str();
}

// verify -------------------------------------------------------------------

inline json optional_graph6(const std::optional<Graph>& g) { return g ? json(emit_graph6(*g)) : json(nullptr); }

/// Deterministic payload: no timings, no worker count.
inline json report_json(const ExtremalReport& r) {
  json j;
  j["class"] = {{"kind", std::string(to_string(r.cls.kind))}, {"n", r.cls.n}, {"value", r.cls.value}};
  j["status"] = r.status();
  j["predicted"] = optional_graph6(r.predicted);
  j["predicted_ee"] = r.predicted ? json(r.predicted_ee) : json(nullptr);
  j["maximizer"] = optional_graph6(r.maximizer);
  j["max_ee"] = r.maximizer ? json(r.max_ee) : json(nullptr);
  j["runner_up_gap"] = r.runner_up_gap ? json(*r.runner_up_gap) : json(nullptr);
  j["unique"] = r.unique;
  j["undecided"] = r.undecided;
  j["matches_prediction"] = r.matches_prediction;
  j["membership_revalidated"] = r.membership_revalidated;
  j["near_ties"] = r.near_ties;
  j["maximizer_family"] = r.maximizer_family ? json(*r.maximizer_family) : json(nullptr);
  j["graphs_scanned"] = r.graphs_scanned;
  j["class_size"] = r.class_size;
  return j;
}

inline bool all_verified(const std::vector<ExtremalReport>& reports) {
  for (const auto& r : reports)
    if (!r.verified()) return false;
  return true;
}

inline json verify_json(ClassKind kind, int n_min, int n_max, const SearchOptions& opt,
                        const std::vector<ExtremalReport>& reports) {
  json j;
  j["theorem"] = theorem_name(kind);
  j["n_min"] = n_min;
  j["n_max"] = n_max;
  j["tolerances"] = {{"jacobi", opt.tolerance}, {"near_tie", opt.near_tie}, {"k_max", opt.k_max}};
  j["reports"] = json::array();
  for (const auto& r : reports) j["reports"].push_back(report_json(r));
  j["verified"] = all_verified(reports);
  return j;
}

inline json timing_json(const std::vector<ExtremalReport>& reports, int threads) {
  json j;
  j["threads"] = threads;
  j["reports"] = json::array();
  for (const auto& r : reports)
    j["reports"].push_back({{"kind", std::string(to_string(r.cls.kind))},
                            {"n", r.cls.n},
                            {"value", r.cls.value},
                            {"duration_seconds", r.duration_seconds}});
  return j;
}

inline std::string verify_csv(ClassKind kind, const std::vector<ExtremalReport>& reports) {
  std::ostringstream os;
  os << "theorem,kind,n,value,status,unique,matches_prediction,max_ee,predicted_ee,runner_up_gap,near_ties,"
        "class_size,graphs_scanned,maximizer,predicted,maximizer_family\n";
  for (const auto& r : reports) {
    os << theorem_name(kind) << ',' << to_string(r.cls.kind) << ',' << r.cls.n << ',' << r.cls.value << ','
       << r.status() << ',' << (r.unique ? "true" : "false") << ',' << (r.matches_prediction ? "true" : "false")
       << ',' << (r.maximizer ? format_double(r.max_ee) : "") << ','
       << (r.predicted ? format_double(r.predicted_ee) : "") << ','
       << (r.runner_up_gap ? format_double(*r.runner_up_gap) : "") << ',' << r.near_ties << ',' << r.class_size
       << ',' << r.graphs_scanned << ',' << (r.maximizer ? emit_graph6(*r.maximizer) : "") << ','
       << (r.predicted ? emit_graph6(*r.predicted) : "") << ',' << r.maximizer_family.value_or("") << '\n';
  }
  return os.str();
}

/// Runs every class of the theorem for n_min..n_max, one enumeration pass per order.
inline std::vector<ExtremalReport> run_verification(ClassKind kind, int n_min, int n_max, const SearchOptions& opt) {
  std::vector<ExtremalReport> all;
  for (int n = n_min; n <= n_max; ++n) {
    auto reports = search_maximizers(kind, n, class_values(n), opt);
    all.insert(all.end(), reports.begin(), reports.end());
  }
  return all;
}

// compare ------------------------------------------------------------------

inline std::string lemma_csv_header() { return "lemma,n,p,q,s,lhs_ee,rhs_ee,gap,verdict,detail"; }

inline std::string lemma_csv_row(const LemmaVerdict& v) {
  std::ostringstream os;
  os << v.lemma << ',' << v.n << ',' << v.p << ',' << v.q << ',' << v.s << ',';
  if (v.applicable) {
    os << format_double(v.lhs) << ',' << format_double(v.rhs) << ',' << format_double(v.gap) << ',' << v.verdict()
       << ',';
    if (v.lemma == "4.2") os << "root_shift=" << format_double(v.root_shift_value);
    if (v.lemma == "4.3")
      os << "sign_value=" << v.sign_value << ";factored=" << v.sign_factored
         << ";negative=" << (v.sign_negative ? "true" : "false");
  } else {
    os << ",,," << v.verdict() << ',' << v.skip_reason;
  }
  return os.str();
}

}  // namespace estrada::io
