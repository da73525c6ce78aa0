#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <span>
#include <vector>

#include "cplab/space.hpp"

namespace cplab {

// Row-major sequence index: position 0 is the most significant digit,
// the test slot (last position) has stride 1.
inline std::uint64_t encode_sequence(std::span<const int> seq, const ObservationSpace& space) {
  std::uint64_t idx = 0;
  const auto z = static_cast<std::uint64_t>(space.z_card());
  for (int v : seq) idx = idx * z + static_cast<std::uint64_t>(v);
  return idx;
}

inline void decode_sequence(std::uint64_t idx, const ObservationSpace& space, std::span<int> out) {
  const auto z = static_cast<std::uint64_t>(space.z_card());
  for (int i = static_cast<int>(out.size()) - 1; i >= 0; --i) {
    out[i] = static_cast<int>(idx % z);
    idx /= z;
  }
}

// All bags of size N over the space, deterministic lexicographic order
// (counts[0] ascending first). Count is C(N + z_card - 1, z_card - 1).
std::vector<Bag> enumerate_bags(const ObservationSpace& space, int N);

// Rank of a bag within the enumerate_bags order.
std::size_t bag_rank(const Bag& bag);

std::uint64_t factorial(int n);  // n <= 20

// Number of distinct orderings of the bag: N! / prod(counts!).
std::uint64_t orbit_size(const Bag& bag);

// Calls fn(perm) for every permutation of {0..N-1} in lexicographic
// order. Guarded by N <= 9 (orbit work is (n+1)! per bag).
template <typename Fn>
void for_each_position_permutation(int N, Fn&& fn) {
  if (N > 9) throw std::invalid_argument("orbit enumeration requires n+1 <= 9");
  std::vector<int> perm(N);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    fn(std::span<const int>(perm));
  } while (std::next_permutation(perm.begin(), perm.end()));
}

// Calls fn(seq) once for every distinct ordering of the bag.
template <typename Fn>
void for_each_distinct_ordering(const Bag& bag, Fn&& fn) {
  std::vector<int> seq = representative(bag);
  if (seq.empty()) return;
  do {
    fn(std::span<const int>(seq));
  } while (std::next_permutation(seq.begin(), seq.end()));
}

}  // namespace cplab
