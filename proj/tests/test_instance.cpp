#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "pricing/generators.hpp"
#include "pricing/instance.hpp"
#include "pricing/instance_io.hpp"

using namespace pricing;

namespace {
template <typename Fn>
bool throws_code(Fn&& fn, Errc code) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code() == code;
  } catch (...) {
    return false;
  }
  return false;
}
}  // namespace

TEST_CASE("table1 validates") {
  MarketInstance inst = gen_table1();
  CHECK(inst.periods == 2);
  CHECK(inst.raw_value(1, 1) == Rat(17));
  CHECK(inst.raw_value(2, 2) == Rat(4));
  CHECK(demand_size(inst) == 4);
}

TEST_CASE("validation rejects bad inputs") {
  // Increasing marginals in the unit index.
  CHECK(throws_code(
      [] {
        (void)validate_instance(2, StorageCost::linear(Rat(0)),
                                DemandSide::single({{Rat(1, 2), Rat(1, 2)}, {Rat(1), Rat(1)}}));
      },
      Errc::non_monotone_marginals));

  // Marginal storage cost rising 1.5 -> 1.7.
  CHECK(throws_code(
      [] {
        (void)validate_instance(2, StorageCost::concave({Rat(0), Rat(3, 2), Rat(16, 5)}),
                                DemandSide::multi({{Rat(1), Rat(1)}}));
      },
      Errc::non_concave_storage));

  CHECK(throws_code(
      [] {
        (void)validate_instance(2, StorageCost::linear(Rat(1)), DemandSide::multi({{Rat(-1), Rat(1)}}));
      },
      Errc::negative_value));

  CHECK(throws_code(
      [] {
        (void)validate_instance(3, StorageCost::linear(Rat(1)), DemandSide::multi({{Rat(1), Rat(1)}}));
      },
      Errc::dimension_mismatch));

  CHECK(throws_code(
      [] {
        (void)validate_instance(2, StorageCost::linear(Rat(-1)), DemandSide::multi({{Rat(1), Rat(1)}}));
      },
      Errc::negative_value));
}

TEST_CASE("ranked_values sorts nonincreasing with a stable permutation") {
  MarketInstance inst = gen_table1();
  RankedColumn t1 = ranked_values(inst, 1);
  CHECK(t1.values == std::vector<Rat>{Rat(17), Rat(10)});
  RankedColumn t2 = ranked_values(inst, 2);
  CHECK(t2.values == std::vector<Rat>{Rat(15), Rat(4)});
  CHECK_THROWS_AS((void)ranked_values(inst, 3), Error);

  MarketInstance dup = validate_instance(1, StorageCost::linear(Rat(0)),
                                         DemandSide::multi({{Rat(5)}, {Rat(5)}}));
  RankedColumn col = ranked_values(dup, 1);
  CHECK(col.values == std::vector<Rat>{Rat(5), Rat(5)});
  CHECK(col.order == std::vector<int>{0, 1});  // stable on ties
}

TEST_CASE("ranked_values is a permutation of the column") {
  RandomSpec spec;
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    spec.seed = seed;
    spec.periods = 4;
    spec.buyers = 4;
    MarketInstance inst = gen_random(spec);
    for (int t = 1; t <= inst.periods; ++t) {
      RankedColumn col = ranked_values(inst, t);
      std::vector<int> order = col.order;
      std::sort(order.begin(), order.end());
      CHECK(order == std::vector<int>{0, 1, 2, 3});
      for (size_t r = 0; r + 1 < col.values.size(); ++r) CHECK(col.values[r] >= col.values[r + 1]);
      for (size_t r = 0; r < col.values.size(); ++r)
        CHECK(col.values[r] == inst.demand.rows[static_cast<size_t>(col.order[r])][static_cast<size_t>(t - 1)]);
    }
  }
}

TEST_CASE("demand_size counts positive items") {
  CHECK(demand_size(gen_table1()) == 4);
  CHECK(demand_size(gen_loggap(2)) == 3);  // one positive value per period, T = 3
  MarketInstance zeros = validate_instance(2, StorageCost::linear(Rat(1)),
                                           DemandSide::multi({{Rat(0), Rat(0)}}));
  CHECK(demand_size(zeros) == 0);
  RandomSpec spec;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    spec.seed = seed;
    MarketInstance inst = gen_random(spec);
    CHECK(demand_size(inst) <= spec.buyers * spec.periods);
  }
}

TEST_CASE("storage cost tables") {
  StorageCost lin = StorageCost::linear(Rat(2));
  CHECK(lin.cost(3) == Rat(6));
  CHECK(lin.marginal(5) == Rat(2));

  StorageCost con = StorageCost::concave({Rat(0), Rat(3, 2), Rat(3, 2) + Rat(1, 16)});
  CHECK(con.cost(0) == Rat(0));
  CHECK(con.cost(1) == Rat(3, 2));
  CHECK(con.cost(2) == Rat(25, 16));
  CHECK(con.marginal(0) == Rat(3, 2));
  CHECK(con.marginal(1) == Rat(1, 16));
  // Flat extension past the table keeps concavity.
  CHECK(con.cost(3) == Rat(25, 16) + Rat(1, 16));
}

TEST_CASE("instance JSON round-trips byte for byte") {
  std::vector<MarketInstance> fixtures = {gen_table1(), gen_loggap(2), gen_harmonic(4, Rat(1, 8)),
                                          gen_concave_cx(2, 2, Rat(1, 16))};
  RandomSpec spec;
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    spec.seed = seed;
    fixtures.push_back(gen_random(spec));
  }
  for (const MarketInstance& inst : fixtures) {
    std::string text = instance_to_json(inst);
    MarketInstance back = instance_from_json(text);
    CHECK(back == inst);
    CHECK(instance_to_json(back) == text);
  }
}

TEST_CASE("malformed instance files are rejected") {
  CHECK(throws_code([] { (void)instance_from_json("not json at all"); }, Errc::parse_error));
  CHECK(throws_code([] { (void)instance_from_json("{}"); }, Errc::parse_error));
  CHECK(throws_code(
      [] {
        (void)instance_from_json(R"({"periods": 1, "storage": {"kind": "cubic"},
                                     "demand": {"kind": "multi", "values": [["1"]]}})");
      },
      Errc::parse_error));
  // Numbers must be exact strings, never JSON floats.
  CHECK(throws_code(
      [] {
        (void)instance_from_json(R"({"periods": 1, "storage": {"kind": "linear", "c": "0"},
                                     "demand": {"kind": "multi", "values": [[1.5]]}})");
      },
      Errc::parse_error));
  // Structurally fine but violates a model invariant.
  CHECK(throws_code(
      [] {
        (void)instance_from_json(R"({"periods": 1, "storage": {"kind": "linear", "c": "0"},
                                     "demand": {"kind": "single", "marginals": [["1"], ["2"]]}})");
      },
      Errc::non_monotone_marginals));
}

TEST_CASE("instance JSON uses the documented field names") {
  std::string text = instance_to_json(gen_table1());
  CHECK(text.find("\"periods\"") != std::string::npos);
  CHECK(text.find("\"kind\": \"linear\"") != std::string::npos);
  CHECK(text.find("\"values\"") != std::string::npos);
  MarketInstance inst = instance_from_json(R"({
    "periods": 2,
    "storage": {"kind": "concave", "cum": ["0", "3/2", "25/16"]},
    "demand": {"kind": "single", "marginals": [["1.5", "1"], ["0.5", "1"]]}
  })");
  CHECK(inst.storage.cum[2] == Rat(25, 16));
  CHECK(inst.demand.rows[0][0] == Rat(3, 2));
}
