#include "pricing/generators.hpp"

namespace pricing {

namespace {

// splitmix64: stable across platforms, unlike <random> distributions.
struct SplitMix64 {
  std::uint64_t state;
  explicit SplitMix64(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  std::uint64_t below(std::uint64_t n) { return next() % n; }
};

}  // namespace

MarketInstance gen_table1() {
  DemandSide demand = DemandSide::multi({{Rat(17), Rat(15)}, {Rat(10), Rat(4)}});
  return validate_instance(2, StorageCost::linear(Rat(1)), std::move(demand));
}

MarketInstance gen_harmonic(int n, const Rat& eps) {
  if (n < 2) throw Error(Errc::parameter_out_of_range, "harmonic family needs N >= 2");
  if (eps < 0) throw Error(Errc::parameter_out_of_range, "eps must be >= 0");
  std::vector<std::vector<Rat>> marginals;
  marginals.reserve(static_cast<size_t>(n));
  marginals.push_back({Rat(0), Rat(1) + eps});
  for (int i = 2; i <= n; ++i) marginals.push_back({Rat(0), Rat(1, i)});
  return validate_instance(2, StorageCost::linear(Rat(0)), DemandSide::single(std::move(marginals)));
}

MarketInstance gen_loggap(int n) {
  if (n < 1) throw Error(Errc::parameter_out_of_range, "loggap family needs n >= 1");
  // The value matrix is (2^n - 1)^2 cells; n = 12 is already ~16M cells.
  if (n > 12) throw Error(Errc::parameter_out_of_range, "loggap family capped at n = 12");
  const int periods = (1 << n) - 1;
  std::vector<std::vector<Rat>> values(static_cast<size_t>(periods),
                                       std::vector<Rat>(static_cast<size_t>(periods), Rat(0)));
  // Block 1 occupies the earliest periods, block n the final period.
  int t = 0;
  for (int block = 1; block <= n; ++block) {
    const int span = 1 << (n - block);
    const Rat value(1L << (block - 1));
    for (int i = 0; i < span; ++i, ++t) {
      values[static_cast<size_t>(t)][static_cast<size_t>(t)] = value;
    }
  }
  return validate_instance(periods, StorageCost::linear(Rat(0)), DemandSide::multi(std::move(values)));
}

MarketInstance gen_concave_cx(int n1, int n2, const Rat& eps) {
  if (n1 < 1 || n2 < 1) throw Error(Errc::parameter_out_of_range, "need n1, n2 >= 1");
  if (!(eps > 0) || !(eps < Rat(1, 4)))
    throw Error(Errc::parameter_out_of_range, "need 0 < eps < 1/4");
  std::vector<std::vector<Rat>> values;
  values.reserve(static_cast<size_t>(n1 + n2 + 1));
  for (int i = 0; i < n1; ++i) values.push_back({Rat(1), Rat(0), Rat(0)});
  for (int i = 0; i < n2; ++i) values.push_back({Rat(0), Rat(0), Rat(4)});
  values.push_back({Rat(0), Rat(11, 4), Rat(3)});
  StorageCost storage = StorageCost::concave({Rat(0), Rat(3, 2), Rat(3, 2) + eps});
  return validate_instance(3, std::move(storage), DemandSide::multi(std::move(values)));
}

MarketInstance gen_random(const RandomSpec& spec) {
  if (spec.periods < 1 || spec.buyers < 1 || spec.value_max < 0 || spec.c_choices.empty())
    throw Error(Errc::parameter_out_of_range, "invalid random spec");
  SplitMix64 rng(spec.seed);
  std::vector<std::vector<Rat>> values(static_cast<size_t>(spec.buyers));
  for (auto& row : values) {
    row.reserve(static_cast<size_t>(spec.periods));
    for (int t = 0; t < spec.periods; ++t)
      row.emplace_back(static_cast<long>(rng.below(static_cast<std::uint64_t>(spec.value_max) + 1)));
  }
  Rat c = spec.c_choices[static_cast<size_t>(rng.below(spec.c_choices.size()))];
  return validate_instance(spec.periods, StorageCost::linear(std::move(c)), DemandSide::multi(std::move(values)));
}

}  // namespace pricing
