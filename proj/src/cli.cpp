#include "pricing/cli.hpp"

#include <functional>
#include <iostream>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "pricing/contingent.hpp"
#include "pricing/generators.hpp"
#include "pricing/instance_io.hpp"
#include "pricing/preannounced.hpp"
#include "pricing/profiles.hpp"
#include "pricing/sweep.hpp"

namespace pricing {

namespace {

using nlohmann::json;

void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << text;
  } else {
    write_text_file(out_path, text);
  }
}

std::optional<Rat> parse_opt_rat(const std::string& s) {
  if (s.empty()) return std::nullopt;
  return rat_parse(s);
}

json plan_json(const ConsumerPlan& plan) {
  return json{{"q", plan.q}, {"x", plan.x}, {"S", plan.S}};
}

json prices_json(const PriceSchedule& schedule) {
  json arr = json::array();
  for (const Price& p : schedule.prices) arr.push_back(p.str());
  return arr;
}

}  // namespace

int run_command(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"pricing-lab: preannounced vs contingent pricing of indivisible storable goods"};
  app.require_subcommand(1);

  std::function<void()> action;

  // generate ---------------------------------------------------------------
  auto* gen = app.add_subcommand("generate", "construct a named instance family");
  std::string gen_family, gen_eps = "1/16", gen_c_choices = "0,1,2", gen_out;
  long gen_n = 2;
  int gen_n1 = 5, gen_n2 = 5, gen_t = 3, gen_buyers = 2, gen_vmax = 8;
  std::uint64_t gen_seed = 1;
  gen->add_option("family", gen_family, "table1 | harmonic | loggap | concave-cx | random")->required();
  gen->add_option("--n", gen_n, "harmonic N / loggap n");
  gen->add_option("--eps", gen_eps, "epsilon (exact rational)");
  gen->add_option("--n1", gen_n1, "concave-cx first buyer group size");
  gen->add_option("--n2", gen_n2, "concave-cx second buyer group size");
  gen->add_option("--seed", gen_seed, "random seed");
  gen->add_option("--t", gen_t, "random periods");
  gen->add_option("--buyers", gen_buyers, "random buyer count");
  gen->add_option("--value-max", gen_vmax, "random maximum value");
  gen->add_option("--c-choices", gen_c_choices, "random storage rates, comma separated");
  gen->add_option("--out", gen_out, "output file (stdout when omitted)");
  gen->callback([&] {
    action = [&] {
      MarketInstance inst;
      if (gen_family == "table1") {
        inst = gen_table1();
      } else if (gen_family == "harmonic") {
        inst = gen_harmonic(static_cast<int>(gen_n), rat_parse(gen_eps));
      } else if (gen_family == "loggap") {
        inst = gen_loggap(static_cast<int>(gen_n));
      } else if (gen_family == "concave-cx") {
        inst = gen_concave_cx(gen_n1, gen_n2, rat_parse(gen_eps));
      } else if (gen_family == "random") {
        RandomSpec spec;
        spec.seed = gen_seed;
        spec.periods = gen_t;
        spec.buyers = gen_buyers;
        spec.value_max = gen_vmax;
        spec.c_choices.clear();
        std::stringstream ss(gen_c_choices);
        std::string item;
        while (std::getline(ss, item, ',')) spec.c_choices.push_back(rat_parse(item));
        inst = gen_random(spec);
      } else {
        throw Error(Errc::parameter_out_of_range, "unknown family '" + gen_family + "'");
      }
      emit(instance_to_json(inst), gen_out, out);
    };
  });

  // solve ------------------------------------------------------------------
  auto* solve = app.add_subcommand("solve", "optimal pricing");
  solve->require_subcommand(1);

  auto* pre = solve->add_subcommand("pre", "optimal preannounced schedule (contour DP)");
  std::string pre_instance, pre_out;
  bool pre_oracle = false;
  pre->add_option("--instance", pre_instance, "instance JSON file")->required();
  pre->add_flag("--oracle", pre_oracle, "cross-check against the brute-force oracle");
  pre->add_option("--out", pre_out, "output file");
  pre->callback([&] {
    action = [&] {
      MarketInstance inst = load_instance_file(pre_instance);
      PreannouncedSolution sol = solve_preannounced_dp(inst);
      json j;
      j["prices"] = prices_json(sol.schedule);
      j["revenue"] = rat_str(sol.revenue);
      if (pre_oracle) {
        BruteForceResult oracle = solve_preannounced_bruteforce(inst);
        j["oracle_revenue"] = rat_str(oracle.revenue);
        if (oracle.revenue != sol.revenue)
          throw Error(Errc::parameter_out_of_range,
                      "DP revenue " + rat_str(sol.revenue) + " differs from oracle " + rat_str(oracle.revenue));
      }
      emit(j.dump(2) + "\n", pre_out, out);
    };
  });

  auto* cp = solve->add_subcommand("cp", "single-buyer grid-SPNE (backward induction)");
  std::string cp_instance, cp_delta, cp_out;
  cp->add_option("--instance", cp_instance, "instance JSON file")->required();
  cp->add_option("--grid-delta", cp_delta, "grid refinement step (exact rational)");
  cp->add_option("--out", cp_out, "output file");
  cp->callback([&] {
    action = [&] {
      MarketInstance inst = load_instance_file(cp_instance);
      PriceGrid grid = build_price_grid(inst, parse_opt_rat(cp_delta));
      SpneSolution sol = solve_spne_single_buyer(inst, grid);
      json j;
      j["revenue"] = rat_str(sol.revenue);
      j["prices"] = prices_json(sol.prices);
      j["plan"] = plan_json(sol.plan);
      j["buyer_surplus"] = rat_str(sol.buyer_surplus);
      emit(j.dump(2) + "\n", cp_out, out);
    };
  });

  // respond ----------------------------------------------------------------
  auto* respond = app.add_subcommand("respond", "buyer best response to a schedule");
  std::string re_instance, re_schedule, re_prices, re_engine = "auto", re_out;
  respond->add_option("--instance", re_instance, "instance JSON file")->required();
  respond->add_option("--schedule", re_schedule, "schedule JSON file (solve pre output)");
  respond->add_option("--prices", re_prices, "inline prices, e.g. \"17,15\" or \"10,skip,4\"");
  respond->add_option("--engine", re_engine, "auto | linear | concave");
  respond->add_option("--out", re_out, "output file");
  respond->callback([&] {
    action = [&] {
      MarketInstance inst = load_instance_file(re_instance);
      PriceSchedule schedule;
      if (!re_schedule.empty()) {
        schedule = load_schedule_file(re_schedule);
      } else if (!re_prices.empty()) {
        schedule = schedule_from_csv(re_prices);
      } else {
        throw Error(Errc::parameter_out_of_range, "respond needs --schedule or --prices");
      }
      MarketOutcome outcome;
      if (re_engine == "linear" || (re_engine == "auto" && inst.storage.is_linear())) {
        outcome = best_response_linear(inst, schedule);
      } else if (re_engine == "concave" || re_engine == "auto") {
        outcome = best_response_concave(inst, schedule);
      } else {
        throw Error(Errc::parameter_out_of_range, "unknown engine '" + re_engine + "'");
      }
      emit(outcome_to_json(outcome), re_out, out);
    };
  });

  // simulate ---------------------------------------------------------------
  auto* simulate = app.add_subcommand("simulate", "play a strategy profile forward");
  std::string sim_instance, sim_profile = "builtin:pacman", sim_out;
  simulate->add_option("--instance", sim_instance, "instance JSON file")->required();
  simulate->add_option("--profile", sim_profile, "builtin profile name");
  simulate->add_option("--out", sim_out, "output file");
  simulate->callback([&] {
    action = [&] {
      MarketInstance inst = load_instance_file(sim_instance);
      SimulationResult sim = simulate_profile(inst, profile_by_name(sim_profile));
      json j;
      j["profile"] = sim_profile;
      j["prices"] = prices_json(sim.prices);
      j["sales"] = sim.sales;
      j["revenue"] = rat_str(sim.revenue);
      j["outcome"] = json::parse(outcome_to_json(sim.outcome));
      emit(j.dump(2) + "\n", sim_out, out);
    };
  });

  // certify ----------------------------------------------------------------
  auto* certify = app.add_subcommand("certify", "check a profile for subgame perfection on a grid");
  std::string ce_instance, ce_profile, ce_delta, ce_out;
  long ce_max_states = 200000;
  int ce_inventory_cap = 2;
  certify->add_option("--instance", ce_instance, "instance JSON file")->required();
  certify->add_option("--profile", ce_profile, "builtin profile name")->required();
  certify->add_option("--grid-delta", ce_delta, "grid refinement step");
  certify->add_option("--max-states", ce_max_states, "reachable-state guard");
  certify->add_option("--inventory-cap", ce_inventory_cap, "per-buyer storage guard");
  certify->add_option("--out", ce_out, "output file");
  certify->callback([&] {
    action = [&] {
      MarketInstance inst = load_instance_file(ce_instance);
      PriceGrid grid = build_price_grid(inst, parse_opt_rat(ce_delta));
      CertifyOptions options;
      options.max_states = ce_max_states;
      options.inventory_cap = ce_inventory_cap;
      CertificationReport report = certify_spne(inst, profile_by_name(ce_profile), grid, options);
      emit(certification_to_json(report), ce_out, out);
    };
  });

  // bounds -----------------------------------------------------------------
  auto* bounds = app.add_subcommand("bounds", "perfect-discrimination harmonic bound");
  std::string bo_instance, bo_out;
  bounds->add_option("--instance", bo_instance, "instance JSON file")->required();
  bounds->add_option("--out", bo_out, "output file");
  bounds->callback([&] {
    action = [&] {
      MarketInstance inst = load_instance_file(bo_instance);
      BoundReport b = discrimination_upper_bound(inst);
      json j;
      j["sum_values"] = rat_str(b.sum_values);
      j["items"] = b.items;
      j["harmonic"] = rat_str(b.harmonic);
      j["fixed_revenue"] = rat_str(b.fixed_revenue);
      j["bound"] = rat_str(b.bound);
      j["holds"] = b.holds;
      emit(j.dump(2) + "\n", bo_out, out);
    };
  });

  // sweep ------------------------------------------------------------------
  auto* sweep = app.add_subcommand("sweep", "mechanism comparison across a family range");
  std::string sw_family, sw_range, sw_eps, sw_delta, sw_csv;
  sweep->add_option("--family", sw_family, "loggap | harmonic")->required();
  sweep->add_option("--n", sw_range, "range \"2..6\" or list \"4,8,16\"")->required();
  sweep->add_option("--eps", sw_eps, "harmonic epsilon");
  sweep->add_option("--grid-delta", sw_delta, "harmonic grid step (default 1/N^2)");
  sweep->add_option("--csv", sw_csv, "CSV output file (stdout when omitted)");
  sweep->callback([&] {
    action = [&] {
      SweepConfig config;
      config.family = sw_family;
      config.params = parse_param_range(sw_range);
      config.eps = parse_opt_rat(sw_eps);
      config.grid_delta = parse_opt_rat(sw_delta);
      std::vector<SweepRow> rows = ratio_sweep(config);
      std::string csv = sweep_csv(rows);
      if (sw_csv.empty()) {
        out << csv;
      } else {
        write_text_file(sw_csv, csv);
        out << "wrote " << rows.size() << " rows to " << sw_csv << "\n";
      }
    };
  });

  // parse + run ------------------------------------------------------------
  std::vector<const char*> cargs;
  cargs.push_back("pricing_lab");
  for (const std::string& a : argv) cargs.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(cargs.size()), cargs.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (action) action();
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace pricing
