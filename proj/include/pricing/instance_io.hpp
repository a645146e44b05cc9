#pragma once

#include <string>

#include "pricing/instance.hpp"
#include "pricing/price.hpp"

namespace pricing {

/// Instance file format (all numbers carried as exact strings):
///   {"periods": 2,
///    "storage": {"kind":"linear","c":"1"} | {"kind":"concave","cum":["0","3/2","25/16"]},
///    "demand":  {"kind":"multi","values":[["17","15"],["10","4"]]}
///             | {"kind":"single","marginals":[["0","1"],...]}}
std::string instance_to_json(const MarketInstance& inst);
MarketInstance instance_from_json(const std::string& text);

MarketInstance load_instance_file(const std::string& path);
void save_instance_file(const MarketInstance& inst, const std::string& path);

/// Schedule format: {"prices":["17","15"],"revenue":"32"}, "skip" for Skip.
std::string schedule_to_json(const PriceSchedule& schedule, const Rat& revenue);
PriceSchedule schedule_from_json(const std::string& text);
PriceSchedule load_schedule_file(const std::string& path);

/// Parses "17,15,skip"-style inline price lists.
PriceSchedule schedule_from_csv(const std::string& text);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace pricing
