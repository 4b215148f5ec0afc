#include <gtest/gtest.h>

#include <cmath>

#include "estrada/report_io.hpp"

using namespace estrada;
using estrada::io::json;

TEST(ComputeReport, CompleteBipartite) {
  const json j = io::compute_report(parse_graph6("D]o"));
  EXPECT_EQ(j["n"], 5);
  EXPECT_EQ(j["m"], 6);
  EXPECT_EQ(j["nullity"], 3);
  EXPECT_TRUE(j["bipartite"].get<bool>());
  EXPECT_NEAR(j["estrada_eigen"].get<double>(), 3 + 2 * std::cosh(std::sqrt(6.0)), 1e-11);
  EXPECT_NEAR(j["estrada_cosh"].get<double>(), 14.668772819667714, 1e-11);
  EXPECT_NEAR(j["estrada_moment_series"].get<double>(), 14.668772819667714, 1e-9);
  EXPECT_LT(j["error_bound"].get<double>(), 1e-10);
  EXPECT_EQ(j["matching_number"], 2);
  EXPECT_EQ(j["vertex_connectivity"], 2);
  EXPECT_EQ(j["edge_connectivity"], 2);
  EXPECT_EQ(j["tolerance"].get<double>(), 1e-12);
  EXPECT_EQ(j["eigenvalues"].size(), 5u);
}

TEST(ComputeReport, SingleVertex) {
  const json j = io::compute_report(parse_graph6("@"));
  EXPECT_EQ(j["estrada_eigen"].get<double>(), 1.0);
  EXPECT_EQ(j["estrada_moment_series"].get<double>(), 1.0);
  EXPECT_EQ(j["nullity"], 1);
}

TEST(ComputeReport, TriangleOmitsCosh) {
  const json j = io::compute_report(parse_graph6("Bw"));
  EXPECT_TRUE(j["estrada_cosh"].is_null());
  EXPECT_TRUE(j.contains("note"));
  EXPECT_NEAR(j["estrada_eigen"].get<double>(), std::exp(2.0) + 2 * std::exp(-1.0), 1e-12);
  EXPECT_EQ(j["matching_number"], 1);
}

TEST(ComputeReport, CsvMirrorsJson) {
  const json j = io::compute_report(parse_graph6("Bw"));
  const std::string row = io::compute_csv_row(j);
  EXPECT_EQ(row.substr(0, 13), "Bw,3,3,false,");
  EXPECT_NE(row.find(",,"), std::string::npos);  // empty cosh column
  const std::string header = io::compute_csv_header();
  EXPECT_EQ(std::count(row.begin(), row.end(), ','), std::count(header.begin(), header.end(), ','));
}

TEST(FormatDouble, RoundTrips) {
  for (double x : {0.1, 14.668772819667714, 1e-300, 3.0})
    EXPECT_EQ(std::stod(io::format_double(x)), x);
}

TEST(Theorems, Names) {
  EXPECT_EQ(io::parse_theorem("connectivity"), ClassKind::vertex_connectivity);
  EXPECT_EQ(io::parse_theorem("edge-connectivity"), ClassKind::edge_connectivity);
  EXPECT_EQ(io::parse_theorem("matching"), ClassKind::matching);
  EXPECT_FALSE(io::parse_theorem("bogus"));
  EXPECT_EQ(io::theorem_name(ClassKind::vertex_connectivity), "connectivity");
}

TEST(VerifyJson, MatchingUpToSevenHasTwelveRows) {
  SearchOptions opt;
  const auto reports = io::run_verification(ClassKind::matching, 2, 7, opt);
  EXPECT_EQ(reports.size(), 12u);
  const json j = io::verify_json(ClassKind::matching, 2, 7, opt, reports);
  EXPECT_TRUE(j["verified"].get<bool>());
  EXPECT_EQ(j["reports"].size(), 12u);
  EXPECT_EQ(j["tolerances"]["near_tie"].get<double>(), 1e-6);
  EXPECT_EQ(j["tolerances"]["k_max"], 64);
  EXPECT_FALSE(j.dump().find("duration") != std::string::npos);
  const std::string csv = io::verify_csv(ClassKind::matching, reports);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 13);
  const json timing = io::timing_json(reports, 1);
  EXPECT_EQ(timing["reports"].size(), 12u);
}

TEST(VerifyJson, ByteIdenticalAcrossThreads) {
  SearchOptions one, many;
  many.threads = 4;
  const auto a = io::run_verification(ClassKind::edge_connectivity, 4, 7, one);
  const auto b = io::run_verification(ClassKind::edge_connectivity, 4, 7, many);
  EXPECT_EQ(io::verify_json(ClassKind::edge_connectivity, 4, 7, one, a).dump(2),
            io::verify_json(ClassKind::edge_connectivity, 4, 7, many, b).dump(2));
}

TEST(ComparisonCsv, Rows) {
  EXPECT_EQ(io::lemma_csv_header(), "lemma,n,p,q,s,lhs_ee,rhs_ee,gap,verdict,detail");
  const std::string held = io::lemma_csv_row(verify_lemma_43(7, 1));
  EXPECT_NE(held.find(",holds,sign_value=-"), std::string::npos) << held;
  const std::string skipped = io::lemma_csv_row(verify_lemma_41(5, 1, 1));
  EXPECT_EQ(skipped, "4.1,8,5,1,1,,,,skipped,requires p < q + s");
}
