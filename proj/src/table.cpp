#include "cplab/table.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace cplab {

void FnTable::validate_extended_nonneg() const {
  for (double v : values) {
    if (std::isnan(v) || v < 0.0)
      throw std::invalid_argument("table entries must be extended nonnegative reals");
  }
}

void FnTable::validate_p_range() const {
  for (double v : values) {
    if (std::isnan(v) || v < 0.0 || v > 1.0)
      throw std::invalid_argument("p-table entries must lie in [0, 1]");
  }
}

namespace {

FnTable table_from_json(const nlohmann::json& j, std::uint64_t budget) {
  FnTable t;
  t.space.x_card = j.at("space").at("x_card").get<int>();
  t.space.y_card = j.at("space").at("y_card").get<int>();
  t.space.validate();
  t.n = j.at("n").get<int>();
  if (t.n < 0) throw std::invalid_argument("n must be >= 0");
  const std::uint64_t expected = table_size_checked(t.space, t.n + 1, budget);
  const auto& vals = j.at("values");
  if (!vals.is_array() || vals.size() != expected) {
    throw std::invalid_argument("values has " + std::to_string(vals.size()) +
                                " entries, expected " + std::to_string(expected));
  }
  t.values.reserve(expected);
  for (const auto& v : vals) {
    if (v.is_string()) {
      if (v.get<std::string>() != "inf")
        throw std::invalid_argument("unknown value token: " + v.get<std::string>());
      t.values.push_back(kInf);
    } else {
      t.values.push_back(v.get<double>());
    }
  }
  t.validate_extended_nonneg();
  return t;
}

nlohmann::json table_to_json(const FnTable& t) {
  nlohmann::json j;
  j["space"] = {{"x_card", t.space.x_card}, {"y_card", t.space.y_card}};
  j["n"] = t.n;
  nlohmann::json vals = nlohmann::json::array();
  for (double v : t.values) {
    if (std::isinf(v))
      vals.push_back("inf");
    else
      vals.push_back(v);
  }
  j["values"] = std::move(vals);
  return j;
}

}  // namespace

FnTable table_from_json_text(const std::string& text, std::uint64_t budget) {
  return table_from_json(nlohmann::json::parse(text), budget);
}

std::string table_to_json_text(const FnTable& table) {
  return table_to_json(table).dump();
}

FnTable load_table(const std::string& path, std::uint64_t budget) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open table file: " + path);
  nlohmann::json j;
  in >> j;
  return table_from_json(j, budget);
}

void save_table(const FnTable& table, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write table file: " + path);
  out << table_to_json(table).dump(2) << "\n";
}

}  // namespace cplab
