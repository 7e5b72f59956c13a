#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "fixinv/cli_io.hpp"
#include "fixinv/error.hpp"

namespace fs = std::filesystem;

namespace {

struct CliRun {
  int code;
  std::string out, err;
};

CliRun cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = fixinv::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path temp_file(const std::string& name, const std::string& body = {}) {
  const auto p = fs::temp_directory_path() / ("fixinv_test_" + name);
  if (!body.empty()) std::ofstream(p) << body;
  return p;
}

int parse_error_line(const std::string& text) {
  try {
    fixinv::parse_phase_text(text);
  } catch (const fixinv::ParseError& e) {
    return e.line();
  }
  return -1;
}

}  // namespace

TEST(SpinPhases, Combination) {
  EXPECT_DOUBLE_EQ(fixinv::combine_spin_phases(0, 0.7, 123.0), 0.7);
  EXPECT_NEAR(fixinv::combine_spin_phases(1, 0.3, 0.0), 0.2, 1e-15);
  EXPECT_NEAR(fixinv::combine_spin_phases(2, 0.5, 0.25), (3 * 0.5 + 2 * 0.25) / 5.0, 1e-15);
  EXPECT_THROW(fixinv::combine_spin_phases(-1, 0.1, 0.1), fixinv::DomainError);
}

TEST(PhaseFile, ParsesHeadersCommentsAndSpinRows) {
  const auto p = fixinv::parse_phase_text(
      "# comment\n k = 0.9394 \na=3.9  # trailing\n\n0 0.5 0.1\n1\t0.3 0.0\n2 1e-2 -1e-2\n");
  EXPECT_DOUBLE_EQ(p.k, 0.9394);
  EXPECT_DOUBLE_EQ(p.a, 3.9);
  ASSERT_EQ(p.size(), 3);
  EXPECT_DOUBLE_EQ(p.deltas[0], 0.5);
  EXPECT_NEAR(p.deltas[1], 0.2, 1e-15);
  EXPECT_NEAR(p.deltas[2], (3e-2 - 2e-2) / 5.0, 1e-15);
}

TEST(PhaseFile, ErrorsCarryLineNumbers) {
  EXPECT_EQ(parse_error_line("k = 1\na = 2\n0 0.1\n0 0.2\n"), 4);
  EXPECT_EQ(parse_error_line("k = 1\na = 2\n0 0.1\n1 0.2 0.3\n"), 4);
  EXPECT_EQ(parse_error_line("k = 1\n0 0.1\n"), 2);
  EXPECT_EQ(parse_error_line("a = 1\n0 0.1\n"), 2);
  EXPECT_EQ(parse_error_line("k = 1\na = 2\n"), 2);
  EXPECT_EQ(parse_error_line("k = 1\na = 2\n0 0.1\n2 0.2\n"), 4);
  EXPECT_EQ(parse_error_line("k = 1\nk = 2\n"), 2);
  EXPECT_EQ(parse_error_line("k = -1\n"), 1);
  EXPECT_EQ(parse_error_line("k = 1\na = 2\nx 0.1\n"), 3);
  EXPECT_EQ(parse_error_line("k = 1\na = 2\n0 abc\n"), 3);
  EXPECT_EQ(parse_error_line("E = 1\n"), 1);
  EXPECT_EQ(parse_error_line("k = 1\na = 2\n0 0.1 0.2 0.3\n"), 3);
  EXPECT_THROW(fixinv::parse_phase_file("/nonexistent/phases.txt"), fixinv::DomainError);
}

TEST(PhaseFile, RoundTripAtFifteenDigits) {
  fixinv::PhaseShiftSet p;
  p.k = 0.939361485346;
  p.a = 3.9;
  p.deltas = {-1.21800000000001, 1.23456789012345e-7, 0.333333333333333, -3.14159265358979e-12};
  const auto back = fixinv::parse_phase_text(fixinv::format_phase_file(p));
  EXPECT_EQ(back.k, p.k);
  EXPECT_EQ(back.a, p.a);
  EXPECT_EQ(back.deltas, p.deltas);
  const auto path = temp_file("roundtrip.phase");
  fixinv::write_phase_file(path.string(), p);
  EXPECT_EQ(fixinv::parse_phase_file(path.string()).deltas, p.deltas);
  fs::remove(path);
}

TEST(PhaseFile, ShippedDataParses) {
  const auto e = fixinv::parse_phase_file(FIXINV_DATA_DIR "/e_ar_12ev.phase");
  EXPECT_EQ(e.size(), 4);
  EXPECT_DOUBLE_EQ(e.deltas[2], 1.191);
}

TEST(Csv, FormatIsFixed) {
  fixinv::PotentialCurve q;
  q.grid = {0.5, 1.0};
  q.values = {1.2, -0.123456789012345};
  EXPECT_EQ(fixinv::format_curve_csv(q), "r,q\n0.5,1.2\n1,-0.123456789012\n");
}

TEST(Cli, ForwardWritesPhaseFile) {
  const auto r = cli({"forward", "--potential", "constant", "--value", "1.2", "--a", "2", "--k",
                      "1", "--l-max", "4", "--analytic"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto p = fixinv::parse_phase_text(r.out);
  ASSERT_EQ(p.size(), 5);
  EXPECT_NEAR(p.deltas[0], -0.9890, 5e-4);
}

TEST(Cli, InvertIsDeterministic) {
  const auto phases = temp_file("barrier.phase",
                                fixinv::format_phase_file(fixinv::constant_well_phases(1.2, 2.0, 1.0, 10)));
  const auto csv = temp_file("out.csv"), rep = temp_file("out.report");
  std::string first_csv, first_rep;
  for (int pass = 0; pass < 2; ++pass) {
    const auto r = cli({"invert", phases.string(), "--c", "-0.3", "--h", "-0.15", "--csv",
                        csv.string(), "--report", rep.string()});
    ASSERT_EQ(r.code, 0) << r.err;
    std::ifstream fc(csv), fr(rep);
    std::stringstream sc, sr;
    sc << fc.rdbuf();
    sr << fr.rdbuf();
    if (pass == 0) {
      first_csv = sc.str();
      first_rep = sr.str();
    } else {
      EXPECT_EQ(sc.str(), first_csv);
      EXPECT_EQ(sr.str(), first_rep);
    }
  }
  EXPECT_EQ(first_csv.rfind("r,q\n", 0), 0u);
  EXPECT_NE(first_rep.find("smoothness="), std::string::npos);
  EXPECT_NE(first_rep.find("f0_plus_h="), std::string::npos);
  EXPECT_NE(first_rep.find("q_at_a="), std::string::npos);
  EXPECT_NE(first_rep.find("[moments]"), std::string::npos);
  EXPECT_NE(first_rep.find("[coefficients]"), std::string::npos);
  for (const auto& p : {phases, csv, rep}) fs::remove(p);
}

TEST(Cli, InvertZeroPhasesGivesFlatCurve) {
  const auto phases = temp_file("null.phase", "k = 1\na = 2\n0 0\n1 0\n2 0\n3 0\n4 0\n5 0\n6 0\n7 0\n8 0\n9 0\n10 0\n");
  const auto r = cli({"invert", phases.string(), "--mode", "one"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  double worst = 0.0;
  while (std::getline(in, line)) {
    const double r = std::stod(line.substr(0, line.find(',')));
    if (r >= 0.3) worst = std::max(worst, std::abs(std::stod(line.substr(line.find(',') + 1))));
  }
  EXPECT_LT(worst, 0.02);
  fs::remove(phases);
}

TEST(Cli, AssessCountsStates) {
  const auto r = cli({"assess", "--kappa-a", "4.92"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("count=2\n"), std::string::npos);
}

TEST(Cli, ReproduceBarrierOne) {
  const auto r = cli({"reproduce", "barrier-one"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto pos = r.out.find("sqrt_neg_lambda=");
  ASSERT_NE(pos, std::string::npos);
  EXPECT_NEAR(std::stod(r.out.substr(pos + 16)), -1.4447, 1e-2);
}

TEST(Cli, TuneReportsWinner) {
  const auto phases = temp_file("tune.phase",
                                fixinv::format_phase_file(fixinv::constant_well_phases(1.2, 2.0, 1.0, 10)));
  const auto r = cli({"tune", phases.string(), "--grid-c", "-1,-0.3", "--grid-h", "0,-0.15",
                      "--jobs", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("best"), std::string::npos);
  fs::remove(phases);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(cli({}).code, 2);
  EXPECT_EQ(cli({"frobnicate"}).code, 2);
  EXPECT_EQ(cli({"invert", "/nonexistent.phase"}).code, 2);
  EXPECT_EQ(cli({"assess", "--kappa-a", "4", "--c", "1"}).code, 2);
  EXPECT_EQ(cli({"reproduce", "nope"}).code, 2);
  const auto bad = temp_file("bad.phase", "k = 1\na = 2\n0 0.1\n0 0.2\n");
  const auto r = cli({"invert", bad.string()});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("line 4"), std::string::npos);
  // multi mode asking for more states than the assessment finds
  const auto ok = temp_file("ok.phase", "k = 1\na = 2\n0 -0.9\n1 -0.3\n2 -0.05\n3 -0.004\n4 0\n");
  const auto m = cli({"invert", ok.string(), "--mode", "multi", "--bs-count", "2"});
  EXPECT_EQ(m.code, 3);
  EXPECT_NE(m.err.find("bound_states"), std::string::npos);
  fs::remove(bad);
  fs::remove(ok);
}
