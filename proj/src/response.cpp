#include "pricing/response.hpp"

#include <cassert>
#include <tuple>

#include <json.hpp>

namespace pricing {

namespace {

// Utility of consuming x units at period t (0-based buyer/row handling done
// by the caller).
Rat consumption_utility(const MarketInstance& inst, int buyer, int t, int x) {
  if (x <= 0) return Rat(0);
  if (inst.demand.is_multi()) {
    return inst.demand.rows[static_cast<size_t>(buyer)][static_cast<size_t>(t - 1)] * x;
  }
  Rat u = 0;
  for (int j = 0; j < x && j < inst.demand.row_count(); ++j)
    u += inst.demand.rows[static_cast<size_t>(j)][static_cast<size_t>(t - 1)];
  return u;
}

// Demand cap on consumption at period t: units with positive marginal value.
int consumption_cap(const MarketInstance& inst, int buyer, int t) {
  if (inst.demand.is_multi()) {
    return inst.demand.rows[static_cast<size_t>(buyer)][static_cast<size_t>(t - 1)] > 0 ? 1 : 0;
  }
  int k = 0;
  for (const auto& row : inst.demand.rows) {
    if (row[static_cast<size_t>(t - 1)] > 0) ++k;
  }
  return k;
}

Rat period_storage_cost(const MarketInstance& inst, int units) { return inst.storage.cost(units); }

}  // namespace

MarketOutcome outcome_from_plans(const MarketInstance& inst, const PriceSchedule& schedule,
                                 std::vector<ConsumerPlan> plans) {
  AuditReport audit = audit_plan(inst, schedule, plans);
  if (!audit.feasible) throw Error(Errc::infeasible_action, "infeasible plans: " + audit.violation);
  MarketOutcome out;
  out.plans = std::move(plans);
  out.revenue = audit.revenue;
  out.consumer_surplus = 0;
  for (const Rat& u : audit.utilities) out.consumer_surplus += u;
  out.storage_cost_paid = 0;
  out.total_storage = 0;
  for (const auto& plan : out.plans) {
    for (int s : plan.S) {
      out.total_storage += s;
      out.storage_cost_paid += period_storage_cost(inst, s);
    }
  }
  return out;
}

namespace {

// Lexicographic plan score: utility, then the tie preferences (buying,
// least storage, latest acquisition).
struct Score {
  Rat utility;
  long consumed = 0;     // signed by the buy_on_tie flag
  long neg_storage = 0;  // -(sum of S_t)
  long lateness = 0;     // sum of t * q_t

  bool operator>(const Score& o) const {
    if (utility != o.utility) return utility > o.utility;
    return std::tie(consumed, neg_storage, lateness) > std::tie(o.consumed, o.neg_storage, o.lateness);
  }
};

ConsumerPlan concave_best_plan(const MarketInstance& inst, const PriceSchedule& schedule, int buyer,
                               const ResponseOptions& opts) {
  const int T = inst.periods;
  const long tie_sign = opts.buy_on_tie ? 1 : -1;

  std::vector<int> bound(static_cast<size_t>(T + 2), 0);  // max inventory entering period t
  for (int t = 1; t <= T + 1; ++t) bound[static_cast<size_t>(t)] = remaining_demand(inst, buyer, t);

  // memo[t][h]: best continuation score from period t holding h units.
  std::vector<std::vector<Score>> memo(static_cast<size_t>(T + 2));
  std::vector<std::vector<std::pair<int, int>>> choice(static_cast<size_t>(T + 2));  // (x, h')
  memo[static_cast<size_t>(T + 1)].assign(1, Score{});

  for (int t = T; t >= 1; --t) {
    const int hmax = bound[static_cast<size_t>(t)];
    const int next_hmax = bound[static_cast<size_t>(t + 1)];
    memo[static_cast<size_t>(t)].assign(static_cast<size_t>(hmax + 1), Score{});
    choice[static_cast<size_t>(t)].assign(static_cast<size_t>(hmax + 1), {0, 0});
    const Price& p = schedule.at(t);
    const int xcap = consumption_cap(inst, buyer, t);

    for (int h = 0; h <= hmax; ++h) {
      bool have = false;
      Score best;
      std::pair<int, int> best_act{0, 0};
      for (int x = 0; x <= xcap; ++x) {
        for (int hn = 0; hn <= next_hmax; ++hn) {
          const int q = x + hn - h;
          if (q < 0) continue;
          if (p.is_skip() && q > 0) continue;
          if (hn >= static_cast<int>(memo[static_cast<size_t>(t + 1)].size()))
            throw Error(Errc::inventory_bound_exceeded, "DP state above inventory bound");
          Score s;
          s.utility = consumption_utility(inst, buyer, t, x) - period_storage_cost(inst, hn);
          if (q > 0) s.utility -= p.value() * q;
          s.consumed = tie_sign * x;
          s.neg_storage = -hn;
          s.lateness = static_cast<long>(q) * t;
          const Score& cont = memo[static_cast<size_t>(t + 1)][static_cast<size_t>(hn)];
          s.utility += cont.utility;
          s.consumed += cont.consumed;
          s.neg_storage += cont.neg_storage;
          s.lateness += cont.lateness;
          if (!have || s > best) {
            have = true;
            best = s;
            best_act = {x, hn};
          }
        }
      }
      if (!have) throw Error(Errc::inventory_bound_exceeded, "no feasible action from a DP state");
      memo[static_cast<size_t>(t)][static_cast<size_t>(h)] = best;
      choice[static_cast<size_t>(t)][static_cast<size_t>(h)] = best_act;
    }
  }

  ConsumerPlan plan = ConsumerPlan::zero(T);
  int h = 0;
  for (int t = 1; t <= T; ++t) {
    auto [x, hn] = choice[static_cast<size_t>(t)][static_cast<size_t>(h)];
    const int q = x + hn - h;
    plan.x[static_cast<size_t>(t - 1)] = x;
    plan.q[static_cast<size_t>(t - 1)] = q;
    plan.S[static_cast<size_t>(t - 1)] = hn;
    h = hn;
  }
  if (h != 0) throw Error(Errc::inventory_bound_exceeded, "units left past the horizon");
  return plan;
}

}  // namespace

EffectivePrice effective_price(const PriceSchedule& schedule, const Rat& c, int t) {
  if (t < 1 || t > schedule.periods()) throw Error(Errc::period_out_of_range, "period " + std::to_string(t));
  EffectivePrice best{Price::skip(), t};
  for (int s = 1; s <= t; ++s) {
    const Price& p = schedule.at(s);
    if (p.is_skip()) continue;
    Price delivered = Price::finite(p.value() + c * (t - s));
    // >= keeps the largest attaining source: least storage.
    if (best.price.is_skip() || delivered <= best.price) {
      best.price = delivered;
      best.source = s;
    }
  }
  return best;
}

MarketOutcome best_response_linear(const MarketInstance& inst, const PriceSchedule& schedule,
                                   const ResponseOptions& opts) {
  if (!inst.storage.is_linear())
    throw Error(Errc::concave_not_supported, "best_response_linear requires linear storage");
  if (schedule.periods() != inst.periods)
    throw Error(Errc::dimension_mismatch, "schedule length differs from instance periods");

  const int T = inst.periods;
  std::vector<EffectivePrice> eff;
  eff.reserve(static_cast<size_t>(T));
  for (int t = 1; t <= T; ++t) eff.push_back(effective_price(schedule, inst.storage.c, t));

  const int buyers = inst.demand.buyer_count();
  std::vector<ConsumerPlan> plans;
  plans.reserve(static_cast<size_t>(buyers));

  for (int i = 0; i < buyers; ++i) {
    ConsumerPlan plan = ConsumerPlan::zero(T);
    for (int t = 1; t <= T; ++t) {
      const EffectivePrice& e = eff[static_cast<size_t>(t - 1)];
      if (e.price.is_skip()) continue;
      int want = 0;
      if (inst.demand.is_multi()) {
        const Rat& v = inst.demand.rows[static_cast<size_t>(i)][static_cast<size_t>(t - 1)];
        bool buys = v > 0 && (opts.buy_on_tie ? v >= e.price.value() : v > e.price.value());
        want = buys ? 1 : 0;
      } else {
        for (const auto& row : inst.demand.rows) {
          const Rat& v = row[static_cast<size_t>(t - 1)];
          if (v > 0 && (opts.buy_on_tie ? v >= e.price.value() : v > e.price.value())) ++want;
        }
      }
      if (want == 0) continue;
      plan.x[static_cast<size_t>(t - 1)] += want;
      plan.q[static_cast<size_t>(e.source - 1)] += want;
    }
    int stock = 0;
    for (int t = 1; t <= T; ++t) {
      stock += plan.q[static_cast<size_t>(t - 1)] - plan.x[static_cast<size_t>(t - 1)];
      plan.S[static_cast<size_t>(t - 1)] = stock;
    }
    plans.push_back(std::move(plan));
  }

  return outcome_from_plans(inst, schedule, std::move(plans));
}

MarketOutcome best_response_concave(const MarketInstance& inst, const PriceSchedule& schedule,
                                    const ResponseOptions& opts) {
  if (schedule.periods() != inst.periods)
    throw Error(Errc::dimension_mismatch, "schedule length differs from instance periods");
  const int buyers = inst.demand.buyer_count();
  std::vector<ConsumerPlan> plans;
  plans.reserve(static_cast<size_t>(buyers));
  for (int i = 0; i < buyers; ++i) plans.push_back(concave_best_plan(inst, schedule, i, opts));
  return outcome_from_plans(inst, schedule, std::move(plans));
}

AuditReport audit_plan(const MarketInstance& inst, const PriceSchedule& schedule,
                       const std::vector<ConsumerPlan>& plans) {
  AuditReport report;
  report.revenue = 0;
  const int T = inst.periods;
  if (schedule.periods() != T) {
    report.feasible = false;
    report.violation = "schedule length differs from instance periods";
    return report;
  }
  if (static_cast<int>(plans.size()) != inst.demand.buyer_count()) {
    report.feasible = false;
    report.violation = "plan count differs from buyer count";
    return report;
  }

  for (size_t i = 0; i < plans.size(); ++i) {
    const ConsumerPlan& plan = plans[i];
    if (static_cast<int>(plan.q.size()) != T || static_cast<int>(plan.x.size()) != T ||
        static_cast<int>(plan.S.size()) != T) {
      report.feasible = false;
      report.violation = "plan length differs from periods";
      return report;
    }
    Rat utility = 0;
    int stock = 0;
    for (int t = 1; t <= T; ++t) {
      const int q = plan.q[static_cast<size_t>(t - 1)];
      const int x = plan.x[static_cast<size_t>(t - 1)];
      if (q < 0 || x < 0) {
        report.feasible = false;
        report.violation = "negative purchase or consumption";
        return report;
      }
      if (inst.demand.is_multi() && x > 1) {
        report.feasible = false;
        report.violation = "multi-buyer consumption above the unit demand cap";
        return report;
      }
      const Price& p = schedule.at(t);
      if (q > 0 && p.is_skip()) {
        report.feasible = false;
        report.violation = "purchase at a Skip price in period " + std::to_string(t);
        return report;
      }
      stock += q - x;
      if (stock < 0) {
        report.feasible = false;
        report.violation = "negative storage in period " + std::to_string(t);
        return report;
      }
      if (stock != plan.S[static_cast<size_t>(t - 1)]) {
        report.feasible = false;
        report.violation = "storage accounting mismatch in period " + std::to_string(t);
        return report;
      }
      utility += consumption_utility(inst, static_cast<int>(i), t, x);
      if (q > 0) {
        utility -= p.value() * q;
        report.revenue += p.value() * q;
      }
      utility -= inst.storage.cost(stock);
    }
    report.utilities.push_back(std::move(utility));
  }
  return report;
}

std::string outcome_to_json(const MarketOutcome& outcome) {
  nlohmann::json j;
  j["revenue"] = rat_str(outcome.revenue);
  j["consumer_surplus"] = rat_str(outcome.consumer_surplus);
  j["storage_cost_paid"] = rat_str(outcome.storage_cost_paid);
  j["total_storage"] = outcome.total_storage;
  nlohmann::json plans = nlohmann::json::array();
  for (const auto& plan : outcome.plans) {
    plans.push_back({{"q", plan.q}, {"x", plan.x}, {"S", plan.S}});
  }
  j["plans"] = std::move(plans);
  return j.dump(2) + "\n";
}

}  // namespace pricing
