#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "cplab/enumeration.hpp"
#include "cplab/space.hpp"

namespace cplab {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Dense map from every sequence in Z^(n+1) to an extended nonnegative
// real. The concrete representation of p-variables and e-variables.
struct FnTable {
  ObservationSpace space;
  int n = 0;  // training length; sequences have n+1 slots
  std::vector<double> values;

  FnTable() = default;

  static FnTable filled(const ObservationSpace& space, int n, double value,
                        std::uint64_t budget = kDefaultBudget) {
    space.validate();
    FnTable t;
    t.space = space;
    t.n = n;
    t.values.assign(table_size_checked(space, n + 1, budget), value);
    return t;
  }

  static FnTable zeros(const ObservationSpace& space, int n,
                       std::uint64_t budget = kDefaultBudget) {
    return filled(space, n, 0.0, budget);
  }

  int seq_len() const { return n + 1; }
  std::uint64_t size() const { return values.size(); }

  double& operator[](std::uint64_t idx) { return values[idx]; }
  double operator[](std::uint64_t idx) const { return values[idx]; }

  double at_seq(std::span<const int> seq) const {
    return values[encode_sequence(seq, space)];
  }

  // No negative entries, no NaN. +inf permitted only for e-tables.
  void validate_extended_nonneg() const;
  // Entries within [0, 1].
  void validate_p_range() const;

  bool same_shape(const FnTable& other) const {
    return space == other.space && n == other.n && values.size() == other.values.size();
  }
};

// JSON format: {"space":{"x_card":..,"y_card":..},"n":..,"values":[..]}
// with the string "inf" encoding +infinity. Row-major over positions.
FnTable load_table(const std::string& path, std::uint64_t budget = kDefaultBudget);
void save_table(const FnTable& table, const std::string& path);
FnTable table_from_json_text(const std::string& text, std::uint64_t budget = kDefaultBudget);
std::string table_to_json_text(const FnTable& table);

}  // namespace cplab
