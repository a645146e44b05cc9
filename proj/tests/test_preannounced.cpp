#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "pricing/generators.hpp"
#include "pricing/preannounced.hpp"
#include "pricing/response.hpp"

using namespace pricing;

namespace {

RandomSpec oracle_spec(std::uint64_t seed) {
  RandomSpec spec;
  spec.seed = seed;
  spec.periods = 1 + static_cast<int>(seed % 4);
  spec.buyers = 1 + static_cast<int>((seed / 4) % 3);
  spec.value_max = 8;
  return spec;
}

bool is_candidate_price(const MarketInstance& inst, const Rat& p, int t) {
  for (int s = 1; s <= t; ++s) {
    for (const auto& row : inst.demand.rows) {
      const Rat& v = row[static_cast<size_t>(s - 1)];
      if (v > 0 && p == v + inst.storage.c * (t - s)) return true;
    }
  }
  return false;
}

}  // namespace

TEST_CASE("contour prices roll forward at the storage rate") {
  CHECK(contour_price(Contour::item(Rat(17), 1, 1), 2, Rat(1)) == Price::finite(Rat(18)));
  CHECK(contour_price(Contour::item(Rat(15), 2, 1), 2, Rat(1)) == Price::finite(Rat(15)));
  CHECK(contour_price(Contour::dummy(), 7, Rat(1)).is_skip());
  CHECK_THROWS_AS((void)contour_price(Contour::item(Rat(15), 2, 1), 1, Rat(1)), Error);
}

TEST_CASE("contour ordering is the storage-adjusted key with the dummy on top") {
  const Rat c(1);
  Contour g17 = Contour::item(Rat(17), 1, 1);
  Contour g10 = Contour::item(Rat(10), 1, 2);
  Contour g15 = Contour::item(Rat(15), 2, 1);
  Contour g4 = Contour::item(Rat(4), 2, 2);

  CHECK(contour_leq(g10, g15, c));   // 9 <= 13
  CHECK(contour_leq(g15, g17, c));   // 13 <= 16
  CHECK(!contour_leq(g17, g15, c));
  CHECK(contour_leq(g4, g10, c));    // 2 <= 9

  Contour dummy = Contour::dummy();
  for (const Contour& g : {g17, g10, g15, g4}) {
    CHECK(contour_leq(g, dummy, c));
    CHECK(!contour_leq(dummy, g, c));
  }
  CHECK(contour_leq(dummy, dummy, c));
  CHECK(contour_leq(g15, g15, c));  // reflexive
}

TEST_CASE("feasible sets keep the incumbent and the lower period contours") {
  MarketInstance inst = gen_table1();

  auto names = [](const std::vector<Contour>& set) {
    std::vector<std::pair<std::string, int>> out;
    for (const Contour& g : set) out.push_back({g.is_dummy ? "*" : rat_str(g.value), g.period});
    return out;
  };

  auto f_high = feasible_set(inst, 2, Contour::item(Rat(17), 1, 1));
  CHECK(names(f_high) == std::vector<std::pair<std::string, int>>{{"17", 1}, {"15", 2}, {"4", 2}});

  auto f_low = feasible_set(inst, 2, Contour::item(Rat(10), 1, 2));
  CHECK(names(f_low) == std::vector<std::pair<std::string, int>>{{"10", 1}, {"4", 2}});

  auto f_dummy = feasible_set(inst, 2, Contour::dummy());
  CHECK(f_dummy.size() == 3);  // dummy plus both period-2 contours
  CHECK(f_dummy[0].is_dummy);
}

TEST_CASE("quantity_at counts items worth the rolled price") {
  MarketInstance inst = gen_table1();
  CHECK(quantity_at(inst, Contour::item(Rat(15), 2, 1), 2) == 1);
  CHECK(quantity_at(inst, Contour::item(Rat(10), 1, 2), 2) == 1);  // price 11 <= 15
  CHECK(quantity_at(inst, Contour::item(Rat(17), 1, 1), 2) == 0);  // price 18
  CHECK(quantity_at(inst, Contour::dummy(), 1) == 0);
}

TEST_CASE("DP solves the worked example") {
  PreannouncedSolution sol = solve_preannounced_dp(gen_table1());
  CHECK(sol.revenue == Rat(32));
  REQUIRE(sol.schedule.periods() == 2);
  CHECK(sol.schedule.at(1) == Price::finite(Rat(17)));
  CHECK(sol.schedule.at(2) == Price::finite(Rat(15)));
}

TEST_CASE("DP on the block family gives one unit of revenue per period") {
  for (int n : {2, 3, 4}) {
    PreannouncedSolution sol = solve_preannounced_dp(gen_loggap(n));
    CHECK(sol.revenue == Rat((1L << n) - 1));
  }
}

TEST_CASE("DP on the harmonic family sells a single unit") {
  PreannouncedSolution sol = solve_preannounced_dp(gen_harmonic(4, Rat(1, 8)));
  CHECK(sol.revenue == Rat(9, 8));
  CHECK(sol.schedule.at(1).is_skip());
  CHECK(sol.schedule.at(2) == Price::finite(Rat(9, 8)));

  PreannouncedSolution flat = solve_preannounced_dp(gen_harmonic(4, Rat(0)));
  CHECK(flat.revenue == Rat(1));
}

TEST_CASE("brute force agrees with the worked examples") {
  CHECK(solve_preannounced_bruteforce(gen_table1()).revenue == Rat(32));
  CHECK(solve_preannounced_bruteforce(gen_loggap(2)).revenue == Rat(3));

  // Marginals (5,3,2): candidate prices give revenues 5, 6 and 6; the
  // optimum sells two units at 3 (or three at 2).
  MarketInstance one = validate_instance(1, StorageCost::linear(Rat(0)),
                                         DemandSide::single({{Rat(5)}, {Rat(3)}, {Rat(2)}}));
  BruteForceResult r = solve_preannounced_bruteforce(one);
  CHECK(r.revenue == Rat(6));
  CHECK(r.revenue == solve_preannounced_dp(one).revenue);
}

TEST_CASE("brute force guards against large instances") {
  RandomSpec spec;
  spec.periods = 6;
  CHECK_THROWS_AS((void)solve_preannounced_bruteforce(gen_random(spec)), Error);
}

TEST_CASE("oracle equivalence, no-storage and structure on random instances") {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    MarketInstance inst = gen_random(oracle_spec(seed));

    PreannouncedSolution dp = solve_preannounced_dp(inst);
    BruteForceResult serial = solve_preannounced_bruteforce(inst, ExecMode::serial);
    BruteForceResult parallel = solve_preannounced_bruteforce(inst, ExecMode::parallel);
    CHECK(dp.revenue == serial.revenue);
    CHECK(serial.revenue == parallel.revenue);
    CHECK(serial.schedule == parallel.schedule);

    // The DP schedule never induces storage, and realizes the claimed
    // revenue through the buyer response.
    MarketOutcome response = best_response_linear(inst, dp.schedule);
    CHECK(response.total_storage == 0);
    CHECK(response.revenue == dp.revenue);

    // Structure: every finite price is value-anchored at some s <= t.
    for (int t = 1; t <= inst.periods; ++t) {
      const Price& p = dp.schedule.at(t);
      if (p.is_finite()) CHECK(is_candidate_price(inst, p.value(), t));
    }

    // At sale periods the price respects every storage arbitrage.
    for (int t = 1; t <= inst.periods; ++t) {
      const Price& p = dp.schedule.at(t);
      if (p.is_skip()) continue;
      int sold = 0;
      for (const auto& plan : response.plans) sold += plan.q[static_cast<size_t>(t - 1)];
      if (sold == 0) continue;
      for (int s = 1; s < t; ++s) {
        const Price& earlier = dp.schedule.at(s);
        if (earlier.is_finite()) CHECK(p.value() <= earlier.value() + inst.storage.c * (t - s));
      }
    }

    // The traced contour keys only move down over time.
    bool have_prev = false;
    Rat prev_key;
    for (int id : dp.chosen) {
      if (dp.contours.contours[static_cast<size_t>(id)].is_dummy) continue;
      const Rat& key = dp.contours.keys[static_cast<size_t>(id)];
      if (have_prev) CHECK(key <= prev_key);
      prev_key = key;
      have_prev = true;
    }

    // Fixed schedules are a subset of preannounced schedules.
    CHECK(best_fixed_price(inst).revenue <= dp.revenue);
  }
}

TEST_CASE("revenue-to-go grows with the incumbent key") {
  // A higher incumbent key only enlarges the feasible set, so R(t, .) is
  // monotone in the key (the dummy sits on top).
  for (std::uint64_t seed = 200; seed < 230; ++seed) {
    MarketInstance inst = gen_random(oracle_spec(seed));
    PreannouncedSolution sol = solve_preannounced_dp(inst);
    const ContourSet& set = sol.contours;
    for (int t = 1; t <= inst.periods; ++t) {
      std::vector<int> incumbents;
      for (int id = 1; id < set.size(); ++id) {
        if (set.contours[static_cast<size_t>(id)].period < t) incumbents.push_back(id);
      }
      std::sort(incumbents.begin(), incumbents.end(), [&](int a, int b) {
        return set.keys[static_cast<size_t>(a)] < set.keys[static_cast<size_t>(b)];
      });
      for (size_t i = 0; i + 1 < incumbents.size(); ++i) {
        CHECK(sol.tables.revenue_to_go[static_cast<size_t>(t)][static_cast<size_t>(incumbents[i])] <=
              sol.tables.revenue_to_go[static_cast<size_t>(t)][static_cast<size_t>(incumbents[i + 1])]);
      }
      if (!incumbents.empty()) {
        CHECK(sol.tables.revenue_to_go[static_cast<size_t>(t)][static_cast<size_t>(incumbents.back())] <=
              sol.tables.revenue_to_go[static_cast<size_t>(t)][0]);  // dummy dominates
      }
    }
  }
}

TEST_CASE("DP rejects concave storage") {
  CHECK_THROWS_AS((void)solve_preannounced_dp(gen_concave_cx(2, 2, Rat(1, 16))), Error);
  CHECK_THROWS_AS((void)solve_preannounced_bruteforce(gen_concave_cx(2, 2, Rat(1, 16))), Error);
}

TEST_CASE("the optimal schedule carries over to the single-buyer reading") {
  // The multi-buyer instance and the single buyer whose marginal utilities
  // are its ranked columns share the same optimum.
  for (std::uint64_t seed = 100; seed < 130; ++seed) {
    RandomSpec spec;
    spec.seed = seed;
    spec.periods = 1 + static_cast<int>(seed % 3);
    spec.buyers = 1 + static_cast<int>(seed % 3);
    MarketInstance multi = gen_random(spec);

    std::vector<std::vector<Rat>> marginals(static_cast<size_t>(spec.buyers));
    for (int t = 1; t <= multi.periods; ++t) {
      RankedColumn col = ranked_values(multi, t);
      for (int j = 0; j < spec.buyers; ++j)
        marginals[static_cast<size_t>(j)].push_back(col.values[static_cast<size_t>(j)]);
    }
    MarketInstance single = validate_instance(multi.periods, multi.storage,
                                              DemandSide::single(std::move(marginals)));

    Rat multi_dp = solve_preannounced_dp(multi).revenue;
    Rat single_dp = solve_preannounced_dp(single).revenue;
    CHECK(multi_dp == single_dp);
    CHECK(single_dp == solve_preannounced_bruteforce(single).revenue);
  }
}

TEST_CASE("PRICING_LAB_THREADS caps the parallel width") {
  setenv("PRICING_LAB_THREADS", "1", 1);
  CHECK(effective_threads() == 1);
  unsetenv("PRICING_LAB_THREADS");
  CHECK(effective_threads() >= 1);
}

TEST_CASE("best fixed price enumerates the pooled value set") {
  FixedPriceResult loggap = best_fixed_price(gen_loggap(2));
  CHECK(loggap.price == Rat(1));
  CHECK(loggap.revenue == Rat(3));

  FixedPriceResult table1 = best_fixed_price(gen_table1());
  CHECK(table1.price == Rat(15));  // 15 and 10 both yield 30; ties go high
  CHECK(table1.revenue == Rat(30));

  MarketInstance single = validate_instance(1, StorageCost::linear(Rat(0)),
                                            DemandSide::multi({{Rat(7)}}));
  FixedPriceResult lone = best_fixed_price(single);
  CHECK(lone.price == Rat(7));
  CHECK(lone.revenue == Rat(7));
}
