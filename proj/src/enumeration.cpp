#include "cplab/enumeration.hpp"

namespace cplab {

namespace {

// weak compositions of m into k parts
std::uint64_t composition_count(int m, int k) {
  // C(m + k - 1, k - 1), small arguments only
  std::uint64_t r = 1;
  for (int i = 1; i <= k - 1; ++i) r = r * static_cast<std::uint64_t>(m + i) / i;
  return r;
}

void enumerate_rec(std::vector<Bag>& out, std::vector<int>& counts, int coord, int remaining,
                   int z_card) {
  if (coord == z_card - 1) {
    counts[coord] = remaining;
    out.emplace_back(counts);
    return;
  }
  for (int c = 0; c <= remaining; ++c) {
    counts[coord] = c;
    enumerate_rec(out, counts, coord + 1, remaining - c, z_card);
  }
}

}  // namespace

std::vector<Bag> enumerate_bags(const ObservationSpace& space, int N) {
  space.validate();
  if (N < 1) throw std::invalid_argument("bag size must be >= 1");
  std::vector<Bag> out;
  out.reserve(composition_count(N, space.z_card()));
  std::vector<int> counts(space.z_card(), 0);
  enumerate_rec(out, counts, 0, N, space.z_card());
  return out;
}

std::size_t bag_rank(const Bag& bag) {
  const int z = static_cast<int>(bag.counts.size());
  int remaining = bag.total();
  std::size_t rank = 0;
  for (int i = 0; i + 1 < z; ++i) {
    for (int v = 0; v < bag.counts[i]; ++v)
      rank += composition_count(remaining - v, z - i - 1);
    remaining -= bag.counts[i];
  }
  return rank;
}

std::uint64_t factorial(int n) {
  if (n < 0 || n > 20) throw std::invalid_argument("factorial argument out of range");
  std::uint64_t r = 1;
  for (int i = 2; i <= n; ++i) r *= static_cast<std::uint64_t>(i);
  return r;
}

std::uint64_t orbit_size(const Bag& bag) {
  std::uint64_t denom = 1;
  for (int c : bag.counts) denom *= factorial(c);
  return factorial(bag.total()) / denom;
}

}  // namespace cplab
