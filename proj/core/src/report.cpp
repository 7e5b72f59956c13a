#include <cstdio>
#include <sstream>

#include "fixinv/cli_io.hpp"

namespace fixinv {

namespace {

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string num(const Extended& v) { return num(static_cast<double>(v)); }

}  // namespace

std::string format_report(const Reconstruction& rec, const InversionConfig& cfg) {
  const auto& r = rec.report;
  std::ostringstream os;
  os << "# fixinv inversion report\n";
  os << "mode=" << to_string(r.mode) << '\n';
  os << "k=" << num(rec.q.meta.k) << '\n';
  os << "a=" << num(rec.q.meta.a) << '\n';
  os << "c=" << num(cfg.c) << '\n';
  os << "h=" << num(cfg.h) << '\n';
  os << "n_moments=" << r.moments.size() << '\n';
  os << "drop_c0=" << (cfg.drop_c0 ? "true" : "false") << '\n';
  os << "x_max=" << num(r.x_max) << '\n';
  os << "gl_step=" << num(r.gl_step) << '\n';
  os << "gl_residual=" << num(r.gl_residual) << '\n';
  os << "moment_residual=" << num(r.expansion.moment_residual) << '\n';
  os << "f0_plus_h=" << num(r.f0_plus_h) << '\n';
  os << "smoothness=" << num(r.smoothness) << '\n';
  os << "q_at_a=" << num(r.q_at_a) << '\n';
  for (std::size_t i = 0; i < r.expansion.bound_terms.size(); ++i) {
    const auto& t = r.expansion.bound_terms[i];
    os << "bound_state." << i << ".lambda=" << num(t.lambda()) << '\n';
    os << "bound_state." << i << ".sqrt_neg_lambda=" << num(t.sqrt_neg_lambda) << '\n';
    os << "bound_state." << i << ".weight=" << num(t.weight()) << '\n';
    os << "bound_state." << i << ".spurious=" << (t.sqrt_neg_lambda < 0 ? "true" : "false") << '\n';
  }
  for (std::size_t i = 0; i < r.assessed_lambdas.size(); ++i) {
    os << "assessed." << i << ".lambda=" << num(r.assessed_lambdas[i]) << '\n';
  }
  os << "\n[moments]\nl,mu\n";
  for (int l = 0; l < r.moments.size(); ++l) {
    os << l << ',' << num(r.moments.mu[static_cast<std::size_t>(l)]) << '\n';
  }
  os << "\n[coefficients]\nn,c_n\n";
  for (std::size_t i = 0; i < r.expansion.bound_terms.size(); ++i) {
    os << "b" << i << ',' << num(r.expansion.bound_terms[i].half_weight) << '\n';
  }
  for (std::size_t n = 0; n < r.expansion.coeffs.size(); ++n) {
    os << n << ',' << num(r.expansion.coeffs[n]) << '\n';
  }
  return os.str();
}

std::string format_bound_states(const BoundStateSet& set, double kappa_a, double c, double h) {
  std::ostringstream os;
  os << "kappa_a=" << num(kappa_a) << '\n';
  os << "c=" << num(c) << '\n';
  os << "h=" << num(h) << '\n';
  os << "count=" << set.count << '\n';
  if (h == 0.0) os << "count_h0=" << count_bound_states_h0(kappa_a) << '\n';
  os << "near_sector_boundary=" << (set.near_boundary ? "true" : "false") << '\n';
  os << "reducibility=" << to_string(reducibility_window(kappa_a)) << '\n';
  os << "\n[bound_states]\nindex,lambda,weight\n";
  for (std::size_t i = 0; i < set.lambdas.size(); ++i) {
    os << i << ',' << num(set.lambdas[i]) << ',';
    os << (i < set.weights.size() ? num(set.weights[i]) : std::string("nan")) << '\n';
  }
  return os.str();
}

std::string format_tune(const TuneResult& result) {
  std::ostringstream os;
  os << "[grid]\nc,h,status,s\n";
  for (const auto& cell : result.grid.results) {
    os << num(cell.c) << ',' << num(cell.h) << ',' << (cell.ok ? "ok" : "failed") << ','
       << (cell.ok ? num(cell.s) : std::string("nan")) << '\n';
  }
  os << "\nbest.c=" << num(result.best.c) << '\n';
  os << "best.h=" << num(result.best.h) << '\n';
  os << "best.s=" << num(result.best.s) << '\n';
  return os.str();
}

}  // namespace fixinv
