#pragma once

#include <functional>
#include <vector>

#include "cplab/space.hpp"
#include "cplab/table.hpp"

namespace cplab {

struct ExpectationResult {
  double value = 0.0;
  // set when an inf table entry met a zero-probability sequence;
  // the contribution is 0 by the measure-theoretic convention
  bool inf_times_zero = false;
};

// Exact expectation of the table under the product measure Q^(n+1),
// summing all z_card^(n+1) sequences. Deterministic fixed-block
// parallel reduction; result does not depend on thread count.
ExpectationResult iid_expectation(const FnTable& table, const Distribution& q);

// Mean of the table over all (n+1)! position permutations of the bag's
// representative sequence; the expectation under the orbit-uniform
// exchangeable measure of that bag.
double orbit_mean(const FnTable& table, const Bag& bag);

// Per-bag orbit means for every bag of size n+1, parallel over bags.
std::vector<double> orbit_mean_sweep(const FnTable& table, const std::vector<Bag>& bags);

// out[idx] = fn(in[idx]), parallel over entries.
FnTable map_table(const FnTable& in, const std::function<double(double)>& fn);

// Table regrouped by orbit: orbit_sums[bag_rank] = sum of the table
// over all distinct orderings of that bag. Makes repeated product-
// measure expectations O(#bags) instead of O(z_card^(n+1)); exact
// regrouping of the same sum.
struct BagMoments {
  ObservationSpace space;
  int n = 0;
  std::vector<Bag> bags;
  std::vector<double> orbit_sums;
};

BagMoments compress_by_bag(const FnTable& table);
ExpectationResult expectation_from_moments(const BagMoments& moments, const Distribution& q);

// Single-threaded reference implementations kept for testing and for
// the kernel benchmark.
namespace serial {
ExpectationResult iid_expectation(const FnTable& table, const Distribution& q);
std::vector<double> orbit_mean_sweep(const FnTable& table, const std::vector<Bag>& bags);
FnTable map_table(const FnTable& in, const std::function<double(double)>& fn);
}  // namespace serial

}  // namespace cplab
