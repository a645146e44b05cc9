#include "pricing/sweep.hpp"

#include <chrono>
#include <cstdio>
#include <sstream>

#include "pricing/contingent.hpp"
#include "pricing/generators.hpp"
#include "pricing/preannounced.hpp"
#include "pricing/profiles.hpp"

namespace pricing {

namespace {

SweepRow solve_row(const SweepConfig& config, long param) {
  const auto start = std::chrono::steady_clock::now();
  SweepRow row;
  row.family = config.family;
  row.param = param;

  MarketInstance inst;
  if (config.family == "loggap") {
    inst = gen_loggap(static_cast<int>(param));
    row.cp = simulate_profile(inst, make_pacman_profile()).revenue;
  } else if (config.family == "harmonic") {
    Rat eps = config.eps.value_or(Rat(0));
    inst = gen_harmonic(static_cast<int>(param), eps);
    Rat delta = config.grid_delta.value_or(Rat(1, param * param));
    row.cp = solve_spne_single_buyer(inst, build_price_grid(inst, delta)).revenue;
  } else {
    throw Error(Errc::parameter_out_of_range, "sweep family must be loggap or harmonic");
  }

  row.buyers = inst.demand.is_multi() ? inst.demand.row_count() : 1;
  row.periods = inst.periods;
  row.pa = solve_preannounced_dp(inst).revenue;
  row.fixed = best_fixed_price(inst).revenue;
  row.bound = discrimination_upper_bound(inst).bound;
  row.ratio = row.pa > 0 ? row.cp / row.pa : Rat(0);
  row.ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  return row;
}

std::string decimal(const Rat& v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", rat_approx(v));
  return buf;
}

}  // namespace

std::vector<SweepRow> ratio_sweep(const SweepConfig& config) {
  std::vector<SweepRow> rows(config.params.size());
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 1) num_threads(effective_threads())
  for (long i = 0; i < static_cast<long>(config.params.size()); ++i) {
    try {
      rows[static_cast<size_t>(i)] = solve_row(config, config.params[static_cast<size_t>(i)]);
    } catch (...) {
#pragma omp critical
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return rows;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::ostringstream os;
  os << "family,param,N,T,pa,cp,fixed,ratio,bound,ms,ratio_dec,bound_dec\n";
  for (const SweepRow& r : rows) {
    os << r.family << ',' << r.param << ',' << r.buyers << ',' << r.periods << ',' << rat_str(r.pa)
       << ',' << rat_str(r.cp) << ',' << rat_str(r.fixed) << ',' << rat_str(r.ratio) << ','
       << rat_str(r.bound) << ',' << r.ms << ',' << decimal(r.ratio) << ',' << decimal(r.bound) << '\n';
  }
  return os.str();
}

namespace {

long parse_long(const std::string& text) {
  try {
    size_t used = 0;
    long v = std::stol(text, &used);
    if (used != text.size()) throw Error(Errc::parameter_out_of_range, "bad parameter '" + text + "'");
    return v;
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    throw Error(Errc::parameter_out_of_range, "bad parameter '" + text + "'");
  }
}

}  // namespace

std::vector<long> parse_param_range(const std::string& text) {
  std::vector<long> out;
  if (auto dots = text.find(".."); dots != std::string::npos) {
    long lo = parse_long(text.substr(0, dots));
    long hi = parse_long(text.substr(dots + 2));
    if (lo > hi) throw Error(Errc::parameter_out_of_range, "empty range '" + text + "'");
    for (long v = lo; v <= hi; ++v) out.push_back(v);
    return out;
  }
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(parse_long(item));
  }
  if (out.empty()) throw Error(Errc::parameter_out_of_range, "empty parameter list '" + text + "'");
  return out;
}

}  // namespace pricing
