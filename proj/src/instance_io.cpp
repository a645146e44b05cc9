#include "pricing/instance_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace pricing {

using nlohmann::json;

namespace {

json rows_to_json(const std::vector<std::vector<Rat>>& rows) {
  json out = json::array();
  for (const auto& row : rows) {
    json jrow = json::array();
    for (const Rat& v : row) jrow.push_back(rat_str(v));
    out.push_back(std::move(jrow));
  }
  return out;
}

std::vector<std::vector<Rat>> rows_from_json(const json& j) {
  if (!j.is_array()) throw Error(Errc::parse_error, "demand rows must be an array");
  std::vector<std::vector<Rat>> rows;
  for (const auto& jrow : j) {
    if (!jrow.is_array()) throw Error(Errc::parse_error, "demand row must be an array");
    std::vector<Rat> row;
    for (const auto& cell : jrow) {
      if (!cell.is_string()) throw Error(Errc::parse_error, "values must be exact strings");
      row.push_back(rat_parse(cell.get<std::string>()));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

json parse_json(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw Error(Errc::parse_error, "malformed JSON");
  return j;
}

}  // namespace

std::string instance_to_json(const MarketInstance& inst) {
  json j;
  j["periods"] = inst.periods;
  if (inst.storage.is_linear()) {
    j["storage"] = {{"kind", "linear"}, {"c", rat_str(inst.storage.c)}};
  } else {
    json cum = json::array();
    for (const Rat& v : inst.storage.cum) cum.push_back(rat_str(v));
    j["storage"] = {{"kind", "concave"}, {"cum", std::move(cum)}};
  }
  if (inst.demand.is_multi()) {
    j["demand"] = {{"kind", "multi"}, {"values", rows_to_json(inst.demand.rows)}};
  } else {
    j["demand"] = {{"kind", "single"}, {"marginals", rows_to_json(inst.demand.rows)}};
  }
  return j.dump(2) + "\n";
}

MarketInstance instance_from_json(const std::string& text) {
  json j = parse_json(text);
  if (!j.contains("periods") || !j["periods"].is_number_integer())
    throw Error(Errc::parse_error, "missing integer field 'periods'");
  int periods = j["periods"].get<int>();

  if (!j.contains("storage") || !j["storage"].contains("kind"))
    throw Error(Errc::parse_error, "missing 'storage.kind'");
  StorageCost storage;
  std::string skind = j["storage"]["kind"].get<std::string>();
  if (skind == "linear") {
    storage = StorageCost::linear(rat_parse(j["storage"].at("c").get<std::string>()));
  } else if (skind == "concave") {
    std::vector<Rat> cum;
    for (const auto& cell : j["storage"].at("cum")) cum.push_back(rat_parse(cell.get<std::string>()));
    storage = StorageCost::concave(std::move(cum));
  } else {
    throw Error(Errc::parse_error, "unknown storage kind '" + skind + "'");
  }

  if (!j.contains("demand") || !j["demand"].contains("kind"))
    throw Error(Errc::parse_error, "missing 'demand.kind'");
  std::string dkind = j["demand"]["kind"].get<std::string>();
  DemandSide demand;
  if (dkind == "multi") {
    demand = DemandSide::multi(rows_from_json(j["demand"].at("values")));
  } else if (dkind == "single") {
    demand = DemandSide::single(rows_from_json(j["demand"].at("marginals")));
  } else {
    throw Error(Errc::parse_error, "unknown demand kind '" + dkind + "'");
  }

  return validate_instance(periods, std::move(storage), std::move(demand));
}

MarketInstance load_instance_file(const std::string& path) {
  return instance_from_json(read_text_file(path));
}

void save_instance_file(const MarketInstance& inst, const std::string& path) {
  write_text_file(path, instance_to_json(inst));
}

std::string schedule_to_json(const PriceSchedule& schedule, const Rat& revenue) {
  json j;
  json prices = json::array();
  for (const Price& p : schedule.prices) prices.push_back(p.str());
  j["prices"] = std::move(prices);
  j["revenue"] = rat_str(revenue);
  return j.dump(2) + "\n";
}

PriceSchedule schedule_from_json(const std::string& text) {
  json j = parse_json(text);
  if (!j.contains("prices") || !j["prices"].is_array())
    throw Error(Errc::parse_error, "missing 'prices' array");
  PriceSchedule out;
  for (const auto& cell : j["prices"]) {
    std::string s = cell.get<std::string>();
    out.prices.push_back(s == "skip" ? Price::skip() : Price::finite(rat_parse(s)));
  }
  return out;
}

PriceSchedule load_schedule_file(const std::string& path) {
  return schedule_from_json(read_text_file(path));
}

PriceSchedule schedule_from_csv(const std::string& text) {
  PriceSchedule out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    size_t a = item.find_first_not_of(" \t");
    size_t b = item.find_last_not_of(" \t");
    if (a == std::string::npos) throw Error(Errc::parse_error, "empty price entry");
    std::string token = item.substr(a, b - a + 1);
    out.prices.push_back(token == "skip" ? Price::skip() : Price::finite(rat_parse(token)));
  }
  if (out.prices.empty()) throw Error(Errc::parse_error, "empty price list");
  return out;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::io_error, "cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw Error(Errc::io_error, "cannot write '" + path + "'");
  out << content;
  if (!out) throw Error(Errc::io_error, "write failed for '" + path + "'");
}

}  // namespace pricing
