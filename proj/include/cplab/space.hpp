#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace cplab {

// Thrown when a dense-table operation would exceed the configured entry
// budget. CLI maps this to exit code 3.
struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

// Finite observation space Z = X x Y. Observations are packed as
// z = x * y_card + y.
struct ObservationSpace {
  int x_card = 1;
  int y_card = 2;

  int z_card() const { return x_card * y_card; }
  int object_of(int z) const { return z / y_card; }
  int label_of(int z) const { return z % y_card; }
  int obs(int x, int y) const { return x * y_card + y; }

  void validate() const {
    if (x_card < 1) throw std::invalid_argument("x_card must be >= 1");
    if (y_card < 2) throw std::invalid_argument("y_card must be >= 2");
  }

  bool operator==(const ObservationSpace&) const = default;
};

// z_card^seq_len with overflow and budget enforcement; call before any
// dense allocation.
inline std::uint64_t table_size_checked(const ObservationSpace& space, int seq_len,
                                        std::uint64_t budget = kDefaultBudget) {
  if (seq_len < 1) throw std::invalid_argument("sequence length must be >= 1");
  std::uint64_t size = 1;
  const auto z = static_cast<std::uint64_t>(space.z_card());
  for (int i = 0; i < seq_len; ++i) {
    if (size > budget / z + 1) {
      throw BudgetExceeded("table of " + std::to_string(space.z_card()) + "^" +
                           std::to_string(seq_len) + " entries exceeds budget " +
                           std::to_string(budget));
    }
    size *= z;
  }
  if (size > budget) {
    throw BudgetExceeded("table of " + std::to_string(size) +
                         " entries exceeds budget " + std::to_string(budget));
  }
  return size;
}

// Probability profile over Z.
struct Distribution {
  std::vector<double> probs;

  Distribution() = default;
  explicit Distribution(std::vector<double> p) : probs(std::move(p)) {}

  static Distribution uniform(int z_card) {
    return Distribution(std::vector<double>(z_card, 1.0 / z_card));
  }

  void validate() const {
    double sum = 0.0;
    for (double p : probs) {
      if (!(p >= 0.0)) throw std::invalid_argument("distribution entries must be >= 0");
      sum += p;
    }
    if (std::abs(sum - 1.0) > 1e-12)
      throw std::invalid_argument("distribution must sum to 1 within 1e-12");
  }
};

// Count profile of a sequence: counts[z] = multiplicity of z.
struct Bag {
  std::vector<int> counts;

  Bag() = default;
  explicit Bag(std::vector<int> c) : counts(std::move(c)) {}

  int total() const {
    int t = 0;
    for (int c : counts) t += c;
    return t;
  }

  bool operator==(const Bag&) const = default;
};

inline Bag bag_of(std::span<const int> seq, const ObservationSpace& space) {
  Bag bag;
  bag.counts.assign(space.z_card(), 0);
  for (int z : seq) {
    if (z < 0 || z >= space.z_card()) throw std::invalid_argument("observation out of range");
    ++bag.counts[z];
  }
  return bag;
}

// Sorted (ascending) sequence realizing the bag.
inline std::vector<int> representative(const Bag& bag) {
  std::vector<int> rep;
  rep.reserve(bag.total());
  for (int z = 0; z < static_cast<int>(bag.counts.size()); ++z)
    rep.insert(rep.end(), bag.counts[z], z);
  return rep;
}

}  // namespace cplab
