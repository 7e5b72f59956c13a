#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "fixinv/cli_io.hpp"
#include "fixinv/error.hpp"

namespace fixinv {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

bool to_double(const std::string& tok, double& v) {
  const char* first = tok.data();
  const char* last = first + tok.size();
  if (first != last && *first == '+') ++first;
  auto [p, ec] = std::from_chars(first, last, v);
  return ec == std::errc() && p == last && std::isfinite(v);
}

bool to_int(const std::string& tok, int& v) {
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  return ec == std::errc() && p == tok.data() + tok.size();
}

std::string fmt(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

}  // namespace

double combine_spin_phases(int l, double delta_plus, double delta_minus) {
  if (l < 0) throw DomainError(Stage::input, "l must be non-negative");
  return ((l + 1.0) * delta_plus + l * delta_minus) / (2.0 * l + 1.0);
}

PhaseShiftSet parse_phase_text(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  bool have_k = false, have_a = false;
  double k = 0.0, a = 0.0;
  int shape = 0;  // columns after l: 1 or 2
  std::map<int, double> rows;
  std::map<int, int> row_line;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto hash = raw.find('#');
    const std::string line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq != std::string::npos) {
      const std::string key = trim(line.substr(0, eq));
      const std::string val = trim(line.substr(eq + 1));
      double v = 0.0;
      if (!to_double(val, v)) throw ParseError(line_no, "bad number '" + val + "'");
      if (key == "k") {
        if (have_k) throw ParseError(line_no, "duplicate k header");
        if (!(v > 0.0)) throw ParseError(line_no, "k must be positive");
        k = v;
        have_k = true;
      } else if (key == "a") {
        if (have_a) throw ParseError(line_no, "duplicate a header");
        if (!(v > 0.0)) throw ParseError(line_no, "a must be positive");
        a = v;
        have_a = true;
      } else {
        throw ParseError(line_no, "unknown header '" + key + "'");
      }
      continue;
    }
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.size() != 2 && tok.size() != 3) {
      throw ParseError(line_no, "expected 'l delta' or 'l delta_plus delta_minus'");
    }
    const int cols = static_cast<int>(tok.size()) - 1;
    if (shape != 0 && cols != shape) throw ParseError(line_no, "mixed row shapes");
    shape = cols;
    int l = 0;
    if (!to_int(tok[0], l) || l < 0) throw ParseError(line_no, "bad partial wave '" + tok[0] + "'");
    double d1 = 0.0, d2 = 0.0;
    if (!to_double(tok[1], d1)) throw ParseError(line_no, "bad phase '" + tok[1] + "'");
    if (cols == 2 && !to_double(tok[2], d2)) throw ParseError(line_no, "bad phase '" + tok[2] + "'");
    if (rows.count(l)) {
      throw ParseError(line_no, "duplicate l=" + std::to_string(l) + " (first on line " +
                                    std::to_string(row_line[l]) + ")");
    }
    rows[l] = cols == 2 ? combine_spin_phases(l, d1, d2) : d1;
    row_line[l] = line_no;
  }
  if (!have_k) throw ParseError(line_no, "missing 'k = ...' header");
  if (!have_a) throw ParseError(line_no, "missing 'a = ...' header");
  if (rows.empty()) throw ParseError(line_no, "no phase shift rows");
  PhaseShiftSet out;
  out.k = k;
  out.a = a;
  int expect = 0;
  for (const auto& [l, d] : rows) {
    if (l != expect) {
      throw ParseError(row_line[l], "partial waves must run 0..N without gaps (missing l=" +
                                        std::to_string(expect) + ")");
    }
    out.deltas.push_back(d);
    ++expect;
  }
  return out;
}

PhaseShiftSet parse_phase_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw DomainError(Stage::input, "cannot open phase file '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse_phase_text(ss.str());
}

std::string format_phase_file(const PhaseShiftSet& phases) {
  std::ostringstream os;
  os << "k = " << fmt(phases.k, 15) << '\n';
  os << "a = " << fmt(phases.a, 15) << '\n';
  os << "# l delta\n";
  for (int l = 0; l < phases.size(); ++l) {
    os << l << ' ' << fmt(phases.deltas[static_cast<std::size_t>(l)], 15) << '\n';
  }
  return os.str();
}

void write_phase_file(const std::string& path, const PhaseShiftSet& phases) {
  std::ofstream f(path);
  if (!f) throw DomainError(Stage::input, "cannot write '" + path + "'");
  f << format_phase_file(phases);
}

std::string format_curve_csv(const PotentialCurve& curve) {
  std::ostringstream os;
  os << "r,q\n";
  for (std::size_t i = 0; i < curve.size(); ++i) {
    os << fmt(curve.grid[i], 12) << ',' << fmt(curve.values[i], 12) << '\n';
  }
  return os.str();
}

}  // namespace fixinv
