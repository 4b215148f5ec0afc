// estrada: command-line front end for the Estrada-index library.
//
//   estrada compute   --graph6 <g6> | --file <path>   [--format json|csv|text]
//   estrada construct --family <name> [--s --p --q --n1 --n2 --m1 --m2]
//   estrada moments   --graph6 <g6> | --file <path>   [--k-max K]
//   estrada compare   --lemma {4.1|4.2|4.3} [--max-p --max-q --max-s --max-n]
//   estrada compare   --file <pair.g6>                 [--k-max K]
//   estrada verify    --theorem {matching|connectivity|edge-connectivity}
//                     --n-min --n-max [--allow-n10] --threads N --out report.json
//
// Exit codes: 0 success, 1 verification failure, 2 usage error, 3 parse error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "estrada/extremal.hpp"
#include "estrada/families.hpp"
#include "estrada/graph.hpp"
#include "estrada/invariants.hpp"
#include "estrada/quartic.hpp"
#include "estrada/report_io.hpp"
#include "estrada/spectral.hpp"

namespace {

using estrada::Graph;
using nlohmann::json;

constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitParse = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InputSource {
  std::string graph6;
  std::string file;

  std::vector<Graph> load() const {
    if (graph6.empty() == file.empty()) throw UsageError("exactly one of --graph6 or --file is required");
    if (!graph6.empty()) return {estrada::parse_graph6(graph6)};
    std::ifstream in(file);
    if (!in) throw UsageError("cannot open input file '" + file + "'");
    std::vector<Graph> graphs;
    std::string line;
    while (std::getline(in, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty()) continue;
      graphs.push_back(estrada::parse_graph6(line));
    }
    if (graphs.empty()) throw UsageError("input file '" + file + "' holds no graphs");
    return graphs;
  }
};

void add_input_options(CLI::App* cmd, InputSource& src) {
  cmd->add_option("--graph6", src.graph6, "graph in graph6 format");
  cmd->add_option("--file", src.file, "file with one graph6 string per line");
}

/// Writes to --out when given, stdout otherwise.
void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw UsageError("cannot write '" + out_path + "'");
  out << text;
}

std::string text_summary(const json& j) {
  std::ostringstream os;
  os << "graph6                 " << j["graph6"].get<std::string>() << "\n"
     << "n, m                   " << j["n"] << ", " << j["m"] << "\n"
     << "nullity (exact)        " << j["nullity"] << "\n"
     << "EE (eigen)             " << estrada::io::format_double(j["estrada_eigen"].get<double>()) << "\n";
  if (j["estrada_cosh"].is_null())
    os << "EE (cosh)              n/a (" << j["note"].get<std::string>() << ")\n";
  else
    os << "EE (cosh)              " << estrada::io::format_double(j["estrada_cosh"].get<double>()) << "\n";
  os << "EE (moment series)     " << estrada::io::format_double(j["estrada_moment_series"].get<double>())
     << "  (bound " << j["error_bound"].get<double>() << ")\n"
     << "matching number        " << j["matching_number"] << "\n"
     << "vertex connectivity    " << j["vertex_connectivity"] << "\n"
     << "edge connectivity      " << j["edge_connectivity"] << "\n";
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Estrada index of bipartite graphs: spectra, moments, families and extremal verification"};
  app.require_subcommand(1);

  std::string format = "json";
  std::string out_path;
  double tolerance = estrada::kJacobiTolerance;

  // compute
  InputSource compute_src;
  auto* compute = app.add_subcommand("compute", "spectrum, Estrada index (three methods) and invariants");
  add_input_options(compute, compute_src);
  compute->add_option("--tolerance", tolerance, "Jacobi off-diagonal threshold")->capture_default_str();
  compute->add_option("--format", format, "json | csv | text")->check(CLI::IsMember({"json", "csv", "text"}));
  compute->add_option("--out", out_path, "output file (default stdout)");

  // construct
  std::string family;
  int s = 1, p = 0, q = 0, n1 = 0, n2 = 0, m1 = 0, m2 = 0, x1 = 0, x2 = 0, y1 = 0, y2 = 0;
  bool summary = false;
  auto* construct = app.add_subcommand("construct", "build a named graph family and print its graph6");
  construct->add_option("--family", family, "complete-bipartite | join | join-double | g-star | g-double-star")
      ->required()
      ->check(CLI::IsMember({"complete-bipartite", "join", "join-double", "g-star", "g-double-star"}));
  construct->add_option("--s", s, "size of O_s");
  construct->add_option("--p", p, "side size p");
  construct->add_option("--q", q, "side size q");
  construct->add_option("--n1", n1);
  construct->add_option("--n2", n2);
  construct->add_option("--m1", m1);
  construct->add_option("--m2", m2);
  construct->add_option("--x1", x1, "|X1| of a cover partition");
  construct->add_option("--x2", x2, "|X2|");
  construct->add_option("--y1", y1, "|Y1|");
  construct->add_option("--y2", y2, "|Y2|");
  construct->add_flag("--summary", summary, "also print order, size and Estrada index");

  // moments
  InputSource moments_src;
  int k_max = 16;
  auto* moments = app.add_subcommand("moments", "exact closed-walk counts M_0..M_K");
  add_input_options(moments, moments_src);
  moments->add_option("--k-max", k_max, "largest k (<= 64)")->capture_default_str();
  moments->add_option("--format", format, "json | csv | text")->check(CLI::IsMember({"json", "csv", "text"}));

  // compare
  std::string lemma;
  int max_p = 12, max_q = 12, max_s = 12, max_n = 40;
  InputSource compare_src;
  int compare_k_max = estrada::kMomentBudget;
  auto* compare = app.add_subcommand("compare", "comparison lemmas over a grid, or exact moment comparison");
  compare->add_option("--lemma", lemma, "4.1 | 4.2 | 4.3")->check(CLI::IsMember({"4.1", "4.2", "4.3"}));
  compare->add_option("--max-p", max_p)->capture_default_str();
  compare->add_option("--max-q", max_q)->capture_default_str();
  compare->add_option("--max-s", max_s)->capture_default_str();
  compare->add_option("--max-n", max_n, "largest n for lemma 4.3")->capture_default_str();
  compare->add_option("--file", compare_src.file, "two graph6 lines to compare exactly");
  compare->add_option("--k-max", compare_k_max)->capture_default_str();
  compare->add_option("--out", out_path, "output file (default stdout)");

  // verify
  std::string theorem;
  int n_min = 2, n_max = 8, threads = 1;
  bool allow_n10 = false;
  estrada::SearchOptions search;
  std::string report_path = "report.json";
  auto* verify = app.add_subcommand("verify", "exhaustive maximiser search against the predicted extremal graphs");
  verify->add_option("--theorem", theorem, "matching | connectivity | edge-connectivity")
      ->required()
      ->check(CLI::IsMember({"matching", "connectivity", "edge-connectivity"}));
  verify->add_option("--n-min", n_min)->capture_default_str();
  verify->add_option("--n-max", n_max)->capture_default_str();
  verify->add_flag("--allow-n10", allow_n10, "permit n = 10 (2^25 masks for the 5+5 split)");
  verify->add_option("--threads", threads)->capture_default_str()->check(CLI::PositiveNumber);
  verify->add_option("--out", report_path, "JSON report; CSV summary and timing sidecar are written alongside")
      ->capture_default_str();
  verify->add_option("--near-tie", search.near_tie)->capture_default_str();
  verify->add_option("--k-max", search.k_max, "exact-moment tie-break depth")->capture_default_str();
  verify->add_option("--tolerance", search.tolerance)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return e.get_exit_code() == 0 ? code : kExitUsage;
  }

  try {
    if (compute->parsed()) {
      const auto graphs = compute_src.load();
      std::string text;
      if (format == "csv") text = estrada::io::compute_csv_header() + "\n";
      json all = json::array();
      for (const auto& g : graphs) {
        const auto j = estrada::io::compute_report(g, tolerance);
        if (format == "csv") text += estrada::io::compute_csv_row(j) + "\n";
        else if (format == "text") text += text_summary(j);
        all.push_back(j);
      }
      if (format == "json") text = (all.size() == 1 ? all[0] : all).dump(2) + "\n";
      emit(out_path, text);
      return 0;
    }

    if (construct->parsed()) {
      Graph g(1);
      if (family == "complete-bipartite") g = estrada::complete_bipartite(p, q);
      else if (family == "join") g = estrada::join_family(s, p, q);
      else if (family == "join-double") g = estrada::join_family_double(s, n1, n2, m1, m2);
      else if (family == "g-star") g = estrada::g_star({x1, x2, y1, y2});
      else g = estrada::g_double_star({x1, x2, y1, y2});
      std::cout << estrada::emit_graph6(g) << "\n";
      if (summary) {
        std::cout << "n=" << g.order() << " m=" << g.edge_count()
                  << " EE=" << estrada::io::format_double(estrada::estrada(g).value)
                  << " kappa=" << estrada::vertex_connectivity(g)
                  << " kappa'=" << estrada::edge_connectivity(g) << "\n";
      }
      return 0;
    }

    if (moments->parsed()) {
      const auto graphs = moments_src.load();
      json all = json::array();
      std::ostringstream os;
      for (const auto& g : graphs) {
        const auto series = estrada::moment_series(g, k_max);
        std::vector<std::string> values;
        for (const auto& m : series.moments) values.push_back(m.str());
        all.push_back({{"graph6", estrada::emit_graph6(g)}, {"k_max", k_max}, {"moments", values}});
        if (format == "text" || format == "csv") {
          os << estrada::emit_graph6(g);
          for (const auto& v : values) os << ',' << v;
          os << "\n";
        }
      }
      std::cout << (format == "json" ? (all.size() == 1 ? all[0] : all).dump(2) + "\n" : os.str());
      return 0;
    }

    if (compare->parsed()) {
      if (lemma.empty() == compare_src.file.empty()) throw UsageError("compare needs exactly one of --lemma or --file");
      if (!lemma.empty()) {
        std::ostringstream os;
        os << estrada::io::lemma_csv_header() << "\n";
        for (const auto& v : estrada::lemma_grid(lemma, max_p, max_q, max_s, max_n))
          os << estrada::io::lemma_csv_row(v) << "\n";
        emit(out_path, os.str());
        return 0;
      }
      const auto graphs = compare_src.load();
      if (graphs.size() != 2) throw UsageError("compare --file expects exactly two graphs");
      const auto cmp = estrada::compare_ee_exact(graphs[0], graphs[1], compare_k_max);
      json j;
      j["order"] = std::string(estrada::to_string(cmp.order));
      j["first_difference"] = cmp.first_difference;
      j["equal_up_to_k_max"] = cmp.equal_up_to_cutoff;
      std::vector<std::string> mg, mh;
      for (const auto& m : cmp.moments_g) mg.push_back(m.str());
      for (const auto& m : cmp.moments_h) mh.push_back(m.str());
      j["moments_g"] = mg;
      j["moments_h"] = mh;
      emit(out_path, j.dump(2) + "\n");
      return 0;
    }

    if (verify->parsed()) {
      if (n_min < 2 || n_max < n_min) throw UsageError("verify needs 2 <= n-min <= n-max");
      if (n_max > 10) throw UsageError("verify supports n <= 10");
      if (n_max == 10 && !allow_n10) throw UsageError("n = 10 requires --allow-n10");
      search.threads = threads;
      search.allow_n10 = allow_n10;
      const auto kind = *estrada::io::parse_theorem(theorem);
      const auto reports = estrada::io::run_verification(kind, n_min, n_max, search);

      const std::filesystem::path json_path = report_path;
      auto sibling = [&](const std::string& ext) {
        auto p = json_path;
        return p.replace_extension(ext).string();
      };
      emit(report_path, estrada::io::verify_json(kind, n_min, n_max, search, reports).dump(2) + "\n");
      emit(sibling(".csv"), estrada::io::verify_csv(kind, reports));
      emit(sibling(".timing.json"), estrada::io::timing_json(reports, threads).dump(2) + "\n");

      bool ok = true;
      for (const auto& r : reports) {
        std::cout << estrada::to_string(r.cls.kind) << " n=" << r.cls.n << " value=" << r.cls.value << "  "
                  << r.status();
        if (r.maximizer) std::cout << "  maximizer=" << estrada::emit_graph6(*r.maximizer);
        if (r.maximizer_family) std::cout << " (" << *r.maximizer_family << ")";
        std::cout << "\n";
        if (!r.verified()) {
          ok = false;
          std::cerr << "verification failed for " << estrada::to_string(r.cls.kind) << " n=" << r.cls.n
                    << " value=" << r.cls.value << ": " << r.status() << "\n";
        }
      }
      return ok ? 0 : kExitVerifyFailed;
    }
  } catch (const estrada::Graph6Error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const estrada::InvalidInput& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerifyFailed;
  }
  return 0;
}
