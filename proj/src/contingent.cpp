#include "pricing/contingent.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

#include <json.hpp>

namespace pricing {

namespace {

void require_multi(const MarketInstance& inst, const char* what) {
  if (!inst.demand.is_multi())
    throw Error(Errc::multi_buyer_not_supported, std::string(what) + " needs multi-buyer demand");
}

const Rat& buyer_value(const MarketInstance& inst, int buyer, int t) {
  return inst.demand.rows[static_cast<size_t>(buyer)][static_cast<size_t>(t - 1)];
}

// Storage shifts available for moving a unit across k periods. Linear costs
// give the single shift k*c; concave costs give every sum of k storage
// marginals (which unit of a stack moves is not known in advance).
std::vector<std::set<Rat>> shift_sums(const MarketInstance& inst) {
  const int span = inst.periods - 1;
  std::vector<std::set<Rat>> by_len(static_cast<size_t>(span + 1));
  by_len[0].insert(Rat(0));
  if (inst.storage.is_linear()) {
    for (int k = 1; k <= span; ++k) by_len[static_cast<size_t>(k)].insert(inst.storage.c * k);
    return by_len;
  }
  const int levels = std::min(4, std::max(1, static_cast<int>(inst.storage.cum.size())));
  std::vector<Rat> marginals;
  for (int q = 0; q < levels; ++q) marginals.push_back(inst.storage.marginal(q));
  for (int k = 1; k <= span; ++k) {
    for (const Rat& base : by_len[static_cast<size_t>(k - 1)]) {
      for (const Rat& m : marginals) by_len[static_cast<size_t>(k)].insert(base + m);
    }
  }
  return by_len;
}

std::string describe_state(const GameState& state) {
  std::ostringstream os;
  os << "t=" << state.t << " inv=[";
  for (size_t i = 0; i < state.inventory.size(); ++i) os << (i ? "," : "") << state.inventory[i];
  os << "] consumed=[";
  for (size_t i = 0; i < state.consumed.size(); ++i) {
    os << (i ? "," : "") << "{";
    bool first = true;
    for (size_t t = 0; t < state.consumed[i].size(); ++t) {
      if (state.consumed[i][t]) {
        os << (first ? "" : ",") << (t + 1);
        first = false;
      }
    }
    os << "}";
  }
  os << "] via=[";
  for (size_t i = 0; i < state.history.size(); ++i) os << (i ? "," : "") << state.history[i].str();
  os << "]";
  return os.str();
}

std::vector<int> state_key(const GameState& state) {
  std::vector<int> key;
  key.push_back(state.t);
  for (int h : state.inventory) key.push_back(h);
  for (const auto& mask : state.consumed) {
    int bits = 0;
    for (size_t t = 0; t < mask.size(); ++t)
      if (mask[t]) bits |= 1 << t;
    key.push_back(bits);
  }
  return key;
}

}  // namespace

GameState GameState::initial(const MarketInstance& inst) {
  GameState s;
  s.t = 1;
  s.inventory.assign(static_cast<size_t>(inst.demand.buyer_count()), 0);
  s.consumed.assign(static_cast<size_t>(inst.demand.buyer_count()),
                    std::vector<bool>(static_cast<size_t>(inst.periods), false));
  return s;
}

PriceGrid build_price_grid(const MarketInstance& inst, const std::optional<Rat>& refine) {
  if (refine && !(*refine > 0)) throw Error(Errc::parameter_out_of_range, "grid delta must be > 0");
  const std::vector<std::set<Rat>> shifts = shift_sums(inst);

  // Distinct (value, period) anchors.
  std::set<std::pair<Rat, int>> anchors;
  for (const auto& row : inst.demand.rows) {
    for (int s = 1; s <= inst.periods; ++s) anchors.insert({row[static_cast<size_t>(s - 1)], s});
  }
  // The refinement lattice runs up to the total surplus, not just the top
  // value: a single buyer pays above any one value for a bundle (the
  // harmonic equilibrium prices period 1 at H_N + 1/N - 1 > 1), while no
  // price above the sum of values can ever transact.
  Rat refine_top = 0;
  for (const auto& row : inst.demand.rows) {
    for (const Rat& v : row) refine_top += v;
  }

  PriceGrid grid;
  grid.per_period.resize(static_cast<size_t>(inst.periods));
  for (int t = 1; t <= inst.periods; ++t) {
    std::set<Rat> cands;
    for (const auto& [v, s] : anchors) {
      const int span = t >= s ? t - s : s - t;
      for (const Rat& shift : shifts[static_cast<size_t>(span)]) {
        Rat cand = t >= s ? Rat(v + shift) : Rat(v - shift);
        if (cand >= 0) cands.insert(std::move(cand));
      }
    }
    if (refine) {
      for (Rat p(0); p <= refine_top; p += *refine) cands.insert(p);
    }
    auto& slot = grid.per_period[static_cast<size_t>(t - 1)];
    for (const Rat& v : cands) slot.push_back(Price::finite(v));
    slot.push_back(Price::skip());
  }
  return grid;
}

std::vector<int> feasible_purchases(const MarketInstance& inst, const GameState& state, int buyer,
                                    const Price& price, int inventory_cap) {
  std::vector<int> out{0};
  if (price.is_skip() || state.t > inst.periods) return out;
  const int t = state.t;
  const int h = state.inventory[static_cast<size_t>(buyer)];
  const bool consumable = buyer_value(inst, buyer, t) > 0 && !state.consumed[static_cast<size_t>(buyer)][static_cast<size_t>(t - 1)];
  const int carry_bound = std::min(remaining_demand(inst, buyer, t + 1), inventory_cap);
  for (int q = 1;; ++q) {
    const int x = (consumable && h + q >= 1) ? 1 : 0;
    if (h + q - x > carry_bound) break;
    out.push_back(q);
  }
  return out;
}

StageOutcome apply_stage(const MarketInstance& inst, const GameState& state, const Price& price,
                         const std::vector<int>& purchases) {
  const int buyers = inst.demand.buyer_count();
  if (static_cast<int>(purchases.size()) != buyers)
    throw Error(Errc::infeasible_action, "purchase vector size differs from buyer count");
  const int t = state.t;
  if (t > inst.periods) throw Error(Errc::period_out_of_range, "stage past the horizon");

  StageOutcome out;
  out.next = state;
  out.next.t = t + 1;
  out.next.history.push_back(price);
  out.revenue = 0;
  out.utilities.assign(static_cast<size_t>(buyers), Rat(0));
  out.consumed_units.assign(static_cast<size_t>(buyers), 0);

  for (int i = 0; i < buyers; ++i) {
    const int q = purchases[static_cast<size_t>(i)];
    if (q < 0) throw Error(Errc::infeasible_action, "negative purchase");
    if (q > 0 && price.is_skip()) throw Error(Errc::infeasible_action, "purchase at a Skip price");
    int held = out.next.inventory[static_cast<size_t>(i)] + q;
    Rat util = 0;
    if (q > 0) {
      util -= price.value() * q;
      out.revenue += price.value() * q;
      out.sales += q;
    }
    const Rat& v = buyer_value(inst, i, t);
    if (held >= 1 && v > 0 && !state.consumed[static_cast<size_t>(i)][static_cast<size_t>(t - 1)]) {
      held -= 1;
      util += v;
      out.consumed_units[static_cast<size_t>(i)] = 1;
      out.next.consumed[static_cast<size_t>(i)][static_cast<size_t>(t - 1)] = true;
    }
    util -= inst.storage.cost(held);
    out.next.inventory[static_cast<size_t>(i)] = held;
    out.utilities[static_cast<size_t>(i)] = std::move(util);
  }
  return out;
}

SimulationResult simulate_profile(const MarketInstance& inst, const StrategyProfile& profile) {
  require_multi(inst, "simulate_profile");
  const int T = inst.periods;
  const int buyers = inst.demand.buyer_count();

  SimulationResult result;
  result.prices = PriceSchedule::all_skip(T);
  result.sales.assign(static_cast<size_t>(T), 0);
  result.revenue = 0;

  std::vector<ConsumerPlan> plans(static_cast<size_t>(buyers), ConsumerPlan::zero(T));
  GameState state = GameState::initial(inst);
  for (int t = 1; t <= T; ++t) {
    const Price price = profile.retailer(inst, state);
    std::vector<int> purchases(static_cast<size_t>(buyers), 0);
    for (int i = 0; i < buyers; ++i) {
      int q = profile.buyer(inst, state, i, price);
      auto feasible = feasible_purchases(inst, state, i, price, inst.periods * inst.demand.row_count());
      if (std::find(feasible.begin(), feasible.end(), q) == feasible.end())
        throw Error(Errc::infeasible_action,
                    "buyer " + std::to_string(i + 1) + " strategy returned infeasible purchase " +
                        std::to_string(q) + " at period " + std::to_string(t));
      purchases[static_cast<size_t>(i)] = q;
    }
    StageOutcome stage = apply_stage(inst, state, price, purchases);
    result.prices.at(t) = price;
    result.sales[static_cast<size_t>(t - 1)] = stage.sales;
    result.revenue += stage.revenue;
    for (int i = 0; i < buyers; ++i) {
      plans[static_cast<size_t>(i)].q[static_cast<size_t>(t - 1)] = purchases[static_cast<size_t>(i)];
      plans[static_cast<size_t>(i)].x[static_cast<size_t>(t - 1)] = stage.consumed_units[static_cast<size_t>(i)];
      plans[static_cast<size_t>(i)].S[static_cast<size_t>(t - 1)] = stage.next.inventory[static_cast<size_t>(i)];
    }
    state = std::move(stage.next);
  }
  result.outcome = outcome_from_plans(inst, result.prices, std::move(plans));
  return result;
}

namespace {

struct RolloutValue {
  Rat revenue;
  std::vector<Rat> utilities;
};

struct StateSpace {
  std::vector<GameState> states;           // BFS order
  std::map<std::vector<int>, int> index;
  std::vector<RolloutValue> value;         // profile value-to-go per state
};

// A deviation candidate found while scanning one state.
struct DevHit {
  bool set = false;
  Rat gain;
  long state_idx = 0;
  long ordinal = 0;  // deterministic within-state order
  int period = 0;
  std::string desc;
  Price price;
  int buyer = -1;
  int purchase = 0;

  // Preference: larger gain, then earlier state, then earlier candidate.
  bool better_than(const DevHit& o) const {
    if (!o.set) return set;
    if (!set) return false;
    if (gain != o.gain) return gain > o.gain;
    return std::tie(state_idx, ordinal) < std::tie(o.state_idx, o.ordinal);
  }
};

std::vector<int> profile_purchases(const MarketInstance& inst, const StrategyProfile& profile,
                                   const GameState& state, const Price& price, int inventory_cap) {
  const int buyers = inst.demand.buyer_count();
  std::vector<int> purchases(static_cast<size_t>(buyers), 0);
  for (int i = 0; i < buyers; ++i) {
    int q = profile.buyer(inst, state, i, price);
    auto feasible = feasible_purchases(inst, state, i, price, inventory_cap);
    if (std::find(feasible.begin(), feasible.end(), q) == feasible.end())
      throw Error(Errc::infeasible_action, "profile purchase outside the feasible set at " + describe_state(state));
    purchases[static_cast<size_t>(i)] = q;
  }
  return purchases;
}

}  // namespace

CertificationReport certify_spne(const MarketInstance& inst, const StrategyProfile& profile,
                                 const PriceGrid& grid, const CertifyOptions& options) {
  require_multi(inst, "certify_spne");
  const int T = inst.periods;
  const int buyers = inst.demand.buyer_count();

  StateSpace space;
  auto intern = [&](const GameState& s) -> int {
    auto key = state_key(s);
    auto it = space.index.find(key);
    if (it != space.index.end()) return it->second;
    int id = static_cast<int>(space.states.size());
    if (static_cast<long>(id) >= options.max_states)
      throw Error(Errc::state_space_too_large,
                  "reachable states exceed the guard of " + std::to_string(options.max_states));
    space.index.emplace(std::move(key), id);
    space.states.push_back(s);
    return id;
  };

  // Breadth-first closure over grid prices plus the profile's own price at
  // each state (the profile may price off-grid; its continuations must still
  // be valued).
  intern(GameState::initial(inst));
  for (size_t cursor = 0; cursor < space.states.size(); ++cursor) {
    GameState state = space.states[cursor];  // copy: intern() may reallocate
    if (state.t > T) continue;
    std::vector<Price> prices = grid.at(state.t);
    Price own = profile.retailer(inst, state);
    if (std::find(prices.begin(), prices.end(), own) == prices.end()) prices.push_back(own);
    for (const Price& price : prices) {
      std::vector<std::vector<int>> options_per_buyer;
      options_per_buyer.reserve(static_cast<size_t>(buyers));
      for (int i = 0; i < buyers; ++i)
        options_per_buyer.push_back(feasible_purchases(inst, state, i, price, options.inventory_cap));
      // Odometer over the joint purchase space.
      std::vector<size_t> pick(static_cast<size_t>(buyers), 0);
      for (;;) {
        std::vector<int> purchases(static_cast<size_t>(buyers));
        for (int i = 0; i < buyers; ++i)
          purchases[static_cast<size_t>(i)] = options_per_buyer[static_cast<size_t>(i)][pick[static_cast<size_t>(i)]];
        intern(apply_stage(inst, state, price, purchases).next);
        int wheel = 0;
        while (wheel < buyers) {
          if (++pick[static_cast<size_t>(wheel)] < options_per_buyer[static_cast<size_t>(wheel)].size()) break;
          pick[static_cast<size_t>(wheel)] = 0;
          ++wheel;
        }
        if (wheel == buyers) break;
      }
    }
  }

  // Profile value-to-go, from the horizon backwards (transitions increase t).
  const size_t count = space.states.size();
  space.value.assign(count, RolloutValue{Rat(0), std::vector<Rat>(static_cast<size_t>(buyers), Rat(0))});
  std::vector<int> order(count);
  for (size_t i = 0; i < count; ++i) order[i] = static_cast<int>(i);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return space.states[static_cast<size_t>(a)].t > space.states[static_cast<size_t>(b)].t; });
  for (int id : order) {
    const GameState& state = space.states[static_cast<size_t>(id)];
    if (state.t > T) continue;
    Price price = profile.retailer(inst, state);
    auto purchases = profile_purchases(inst, profile, state, price, options.inventory_cap);
    StageOutcome stage = apply_stage(inst, state, price, purchases);
    int next = space.index.at(state_key(stage.next));
    RolloutValue v;
    v.revenue = stage.revenue + space.value[static_cast<size_t>(next)].revenue;
    v.utilities.reserve(static_cast<size_t>(buyers));
    for (int i = 0; i < buyers; ++i)
      v.utilities.push_back(stage.utilities[static_cast<size_t>(i)] +
                            space.value[static_cast<size_t>(next)].utilities[static_cast<size_t>(i)]);
    space.value[static_cast<size_t>(id)] = std::move(v);
  }

  // One-shot deviation scan at every non-terminal state.
  auto scan_state = [&](long id, DevHit& retailer_hit, DevHit& buyer_hit) {
    const GameState& state = space.states[static_cast<size_t>(id)];
    if (state.t > T) return;
    const RolloutValue& base = space.value[static_cast<size_t>(id)];
    long ordinal = 0;

    const Price own_price = profile.retailer(inst, state);
    for (const Price& alt : grid.at(state.t)) {
      if (alt == own_price) continue;
      auto purchases = profile_purchases(inst, profile, state, alt, options.inventory_cap);
      StageOutcome stage = apply_stage(inst, state, alt, purchases);
      const RolloutValue& cont = space.value[static_cast<size_t>(space.index.at(state_key(stage.next)))];
      Rat gain = stage.revenue + cont.revenue - base.revenue;
      DevHit hit{true, std::move(gain), id, ordinal, state.t, describe_state(state), alt, -1, 0};
      if (hit.better_than(retailer_hit)) retailer_hit = hit;
      ++ordinal;
    }

    auto own_purchases = profile_purchases(inst, profile, state, own_price, options.inventory_cap);
    for (int b = 0; b < buyers; ++b) {
      for (int alt_q : feasible_purchases(inst, state, b, own_price, options.inventory_cap)) {
        if (alt_q == own_purchases[static_cast<size_t>(b)]) continue;
        std::vector<int> purchases = own_purchases;
        purchases[static_cast<size_t>(b)] = alt_q;
        StageOutcome stage = apply_stage(inst, state, own_price, purchases);
        const RolloutValue& cont = space.value[static_cast<size_t>(space.index.at(state_key(stage.next)))];
        Rat gain = stage.utilities[static_cast<size_t>(b)] + cont.utilities[static_cast<size_t>(b)] -
                   base.utilities[static_cast<size_t>(b)];
        DevHit hit{true, std::move(gain), id, ordinal, state.t, describe_state(state), own_price, b, alt_q};
        if (hit.better_than(buyer_hit)) buyer_hit = hit;
        ++ordinal;
      }
    }
  };

  DevHit worst_retailer, worst_buyer;
  bool parallel = options.mode == ExecMode::parallel ||
                  (options.mode == ExecMode::auto_mode && effective_threads() > 1 && count > 64);
  if (parallel) {
#pragma omp parallel num_threads(effective_threads())
    {
      DevHit local_r, local_b;
#pragma omp for schedule(dynamic, 16)
      for (long id = 0; id < static_cast<long>(count); ++id) scan_state(id, local_r, local_b);
#pragma omp critical
      {
        if (local_r.better_than(worst_retailer)) worst_retailer = local_r;
        if (local_b.better_than(worst_buyer)) worst_buyer = local_b;
      }
    }
  } else {
    for (long id = 0; id < static_cast<long>(count); ++id) scan_state(id, worst_retailer, worst_buyer);
  }

  CertificationReport report;
  report.states_examined = static_cast<long>(count);
  report.grid = grid;
  report.certified = (!worst_retailer.set || worst_retailer.gain <= 0) &&
                     (!worst_buyer.set || worst_buyer.gain <= 0);
  auto fill = [](const DevHit& hit, DeviationReport& out) {
    out.examined = hit.set;
    if (!hit.set) return;
    out.gain = hit.gain;
    out.period = hit.period;
    out.state = hit.desc;
    out.price = hit.price;
    out.buyer = hit.buyer;
    out.purchase = hit.purchase;
  };
  fill(worst_retailer, report.worst_retailer);
  fill(worst_buyer, report.worst_buyer);

  SimulationResult on_path = simulate_profile(inst, profile);
  report.on_path_revenue = on_path.revenue;
  report.on_path_surplus = on_path.outcome.consumer_surplus;
  return report;
}

std::string certification_to_json(const CertificationReport& report) {
  nlohmann::json j;
  j["certified"] = report.certified;
  j["states_examined"] = report.states_examined;
  j["on_path_revenue"] = rat_str(report.on_path_revenue);
  j["on_path_surplus"] = rat_str(report.on_path_surplus);
  auto dev = [](const DeviationReport& d, bool retailer) {
    if (!d.examined) return nlohmann::json(nullptr);
    nlohmann::json out;
    out["gain"] = rat_str(d.gain);
    out["period"] = d.period;
    out["state"] = d.state;
    if (retailer) {
      out["price"] = d.price.str();
    } else {
      out["buyer"] = d.buyer + 1;
      out["purchase"] = d.purchase;
    }
    return out;
  };
  j["worst_retailer_deviation"] = dev(report.worst_retailer, true);
  j["worst_buyer_deviation"] = dev(report.worst_buyer, false);
  nlohmann::json grid = nlohmann::json::array();
  for (const auto& slot : report.grid.per_period) {
    nlohmann::json row = nlohmann::json::array();
    for (const Price& p : slot) row.push_back(p.str());
    grid.push_back(std::move(row));
  }
  j["grid"] = std::move(grid);
  return j.dump(2) + "\n";
}

SpneSolution solve_spne_single_buyer(const MarketInstance& inst, const PriceGrid& grid, long max_nodes) {
  if (inst.demand.is_multi())
    throw Error(Errc::multi_buyer_not_supported, "grid backward induction handles the single-buyer game");
  const int T = inst.periods;

  std::vector<int> bound(static_cast<size_t>(T + 2), 0);
  for (int t = 1; t <= T + 1; ++t) bound[static_cast<size_t>(t)] = remaining_demand(inst, 0, t);
  std::vector<int> xcap(static_cast<size_t>(T + 1), 0);
  std::vector<std::vector<Rat>> util_prefix(static_cast<size_t>(T + 1));
  for (int t = 1; t <= T; ++t) {
    int cap = 0;
    for (const auto& row : inst.demand.rows)
      if (row[static_cast<size_t>(t - 1)] > 0) ++cap;
    xcap[static_cast<size_t>(t)] = cap;
    auto& prefix = util_prefix[static_cast<size_t>(t)];
    prefix.assign(static_cast<size_t>(cap + 1), Rat(0));
    for (int j = 1; j <= cap; ++j)
      prefix[static_cast<size_t>(j)] = prefix[static_cast<size_t>(j - 1)] +
                                       inst.demand.rows[static_cast<size_t>(j - 1)][static_cast<size_t>(t - 1)];
  }

  long nodes = 0;
  for (int t = 1; t <= T; ++t) {
    long per = static_cast<long>(bound[static_cast<size_t>(t)] + 1) *
               static_cast<long>(grid.at(t).size()) * (xcap[static_cast<size_t>(t)] + 1) *
               (bound[static_cast<size_t>(t + 1)] + 1);
    nodes += per;
    if (nodes > max_nodes)
      throw Error(Errc::state_space_too_large, "grid game exceeds the node budget");
  }

  // rev[t][h], bu[t][h]: retailer and buyer value-to-go.
  std::vector<std::vector<Rat>> rev(static_cast<size_t>(T + 2)), bu(static_cast<size_t>(T + 2));
  struct Choice {
    Price price;
    int x = 0;
    int hn = 0;
  };
  std::vector<std::vector<Choice>> choice(static_cast<size_t>(T + 2));
  rev[static_cast<size_t>(T + 1)].assign(1, Rat(0));
  bu[static_cast<size_t>(T + 1)].assign(1, Rat(0));

  for (int t = T; t >= 1; --t) {
    const int hmax = bound[static_cast<size_t>(t)];
    const int next_hmax = bound[static_cast<size_t>(t + 1)];
    rev[static_cast<size_t>(t)].assign(static_cast<size_t>(hmax + 1), Rat(0));
    bu[static_cast<size_t>(t)].assign(static_cast<size_t>(hmax + 1), Rat(0));
    choice[static_cast<size_t>(t)].assign(static_cast<size_t>(hmax + 1), Choice{});

    for (int h = 0; h <= hmax; ++h) {
      bool have_price = false;
      Rat best_rev, best_bu;
      Choice best_choice;
      // Grid slots are sorted ascending with Skip last; replacing on ties
      // makes the retailer prefer the higher price.
      for (const Price& p : grid.at(t)) {
        bool have_reply = false;
        Rat reply_util;
        int reply_q = -1, reply_x = 0, reply_hn = 0;
        for (int x = 0; x <= xcap[static_cast<size_t>(t)]; ++x) {
          for (int hn = 0; hn <= next_hmax; ++hn) {
            const int q = x + hn - h;
            if (q < 0) continue;
            if (p.is_skip() && q > 0) continue;
            Rat u = util_prefix[static_cast<size_t>(t)][static_cast<size_t>(x)] -
                    inst.storage.cost(hn) + bu[static_cast<size_t>(t + 1)][static_cast<size_t>(hn)];
            if (q > 0) u -= p.value() * q;
            // Ties run toward buying, then toward consuming (less storage).
            if (!have_reply || u > reply_util ||
                (u == reply_util && (q > reply_q || (q == reply_q && x > reply_x)))) {
              have_reply = true;
              reply_util = std::move(u);
              reply_q = q;
              reply_x = x;
              reply_hn = hn;
            }
          }
        }
        if (!have_reply) continue;
        Rat total = rev[static_cast<size_t>(t + 1)][static_cast<size_t>(reply_hn)];
        if (reply_q > 0) total += p.value() * reply_q;
        if (!have_price || total > best_rev || total == best_rev) {
          // ">=" keeps the later (higher) price on ties.
          have_price = true;
          best_rev = std::move(total);
          best_bu = reply_util;
          best_choice = Choice{p, reply_x, reply_hn};
        }
      }
      rev[static_cast<size_t>(t)][static_cast<size_t>(h)] = best_rev;
      bu[static_cast<size_t>(t)][static_cast<size_t>(h)] = best_bu;
      choice[static_cast<size_t>(t)][static_cast<size_t>(h)] = best_choice;
    }
  }

  SpneSolution sol;
  sol.revenue = rev[1][0];
  sol.buyer_surplus = bu[1][0];
  sol.prices = PriceSchedule::all_skip(T);
  sol.plan = ConsumerPlan::zero(T);
  int h = 0;
  for (int t = 1; t <= T; ++t) {
    const Choice& ch = choice[static_cast<size_t>(t)][static_cast<size_t>(h)];
    sol.prices.at(t) = ch.price;
    const int q = ch.x + ch.hn - h;
    sol.plan.q[static_cast<size_t>(t - 1)] = q;
    sol.plan.x[static_cast<size_t>(t - 1)] = ch.x;
    sol.plan.S[static_cast<size_t>(t - 1)] = ch.hn;
    h = ch.hn;
  }
  return sol;
}

BoundReport discrimination_upper_bound(const MarketInstance& inst) {
  BoundReport report;
  report.sum_values = 0;
  for (const auto& row : inst.demand.rows) {
    for (const Rat& v : row) {
      if (v > 0) {
        report.sum_values += v;
        ++report.items;
      }
    }
  }
  report.harmonic = harmonic_number(report.items);
  report.fixed_revenue = best_fixed_price(inst).revenue;
  report.bound = report.harmonic * report.fixed_revenue;
  report.holds = report.sum_values <= report.bound;
  return report;
}

}  // namespace pricing
