#include "cplab/kernels.hpp"

#include <cmath>

#include "cplab/enumeration.hpp"

namespace cplab {

namespace {

// Odometer over sequences in index order with an incremental product
// of coordinate probabilities.
class SequenceCursor {
 public:
  SequenceCursor(std::uint64_t start, const ObservationSpace& space, const Distribution& q)
      : z_(space.z_card()), q_(q.probs), digits_(0), prefix_(0) {
    const int len = 64;  // upper bound; actual length set below
    (void)len;
    std::uint64_t rest = start;
    std::vector<int> digits;
    // length is fixed by the caller through reset()
    (void)rest;
  }

  SequenceCursor(std::uint64_t start, int seq_len, const ObservationSpace& space,
                 const Distribution& q)
      : z_(space.z_card()), q_(q.probs), digits_(seq_len, 0), prefix_(seq_len + 1, 1.0) {
    std::uint64_t rest = start;
    for (int i = seq_len - 1; i >= 0; --i) {
      digits_[i] = static_cast<int>(rest % static_cast<std::uint64_t>(z_));
      rest /= static_cast<std::uint64_t>(z_);
    }
    recompute_from(0);
  }

  double prob() const { return prefix_.back(); }
  const std::vector<int>& digits() const { return digits_; }

  void advance() {
    int p = static_cast<int>(digits_.size()) - 1;
    while (p >= 0 && digits_[p] == z_ - 1) {
      digits_[p] = 0;
      --p;
    }
    if (p < 0) return;  // wrapped; caller controls the loop bound
    ++digits_[p];
    recompute_from(p);
  }

 private:
  void recompute_from(int pos) {
    for (int i = pos; i < static_cast<int>(digits_.size()); ++i)
      prefix_[i + 1] = prefix_[i] * q_[digits_[i]];
  }

  int z_;
  const std::vector<double>& q_;
  std::vector<int> digits_;
  std::vector<double> prefix_;
};

ExpectationResult expectation_range(const FnTable& table, const Distribution& q,
                                    std::uint64_t begin, std::uint64_t end) {
  ExpectationResult r;
  SequenceCursor cur(begin, table.seq_len(), table.space, q);
  long double sum = 0.0L;
  for (std::uint64_t idx = begin; idx < end; ++idx, cur.advance()) {
    const double p = cur.prob();
    const double v = table.values[idx];
    if (p == 0.0) {
      if (std::isinf(v)) r.inf_times_zero = true;
      continue;
    }
    sum += static_cast<long double>(v) * p;
  }
  r.value = static_cast<double>(sum);
  return r;
}

constexpr std::uint64_t kBlocks = 256;
constexpr std::uint64_t kParallelCutoff = 1 << 14;

}  // namespace

ExpectationResult iid_expectation(const FnTable& table, const Distribution& q) {
  const std::uint64_t size = table.size();
  if (size < kParallelCutoff) return expectation_range(table, q, 0, size);
  const std::uint64_t chunk = (size + kBlocks - 1) / kBlocks;
  std::vector<ExpectationResult> partial(kBlocks);
#pragma omp parallel for schedule(static)
  for (std::uint64_t b = 0; b < kBlocks; ++b) {
    const std::uint64_t lo = b * chunk;
    const std::uint64_t hi = std::min(size, lo + chunk);
    if (lo < hi) partial[b] = expectation_range(table, q, lo, hi);
  }
  ExpectationResult r;
  long double sum = 0.0L;
  for (const auto& p : partial) {
    sum += static_cast<long double>(p.value);
    r.inf_times_zero |= p.inf_times_zero;
  }
  r.value = static_cast<double>(sum);
  return r;
}

double orbit_mean(const FnTable& table, const Bag& bag) {
  const int N = bag.total();
  if (N != table.seq_len()) throw std::invalid_argument("bag size must equal n+1");
  const std::vector<int> rep = representative(bag);
  const int z = table.space.z_card();
  std::vector<std::uint64_t> stride(N);
  stride[N - 1] = 1;
  for (int i = N - 2; i >= 0; --i) stride[i] = stride[i + 1] * static_cast<std::uint64_t>(z);
  long double sum = 0.0L;
  for_each_position_permutation(N, [&](std::span<const int> perm) {
    std::uint64_t idx = 0;
    for (int i = 0; i < N; ++i) idx += stride[i] * static_cast<std::uint64_t>(rep[perm[i]]);
    sum += static_cast<long double>(table.values[idx]);
  });
  return static_cast<double>(sum / static_cast<long double>(factorial(N)));
}

std::vector<double> orbit_mean_sweep(const FnTable& table, const std::vector<Bag>& bags) {
  std::vector<double> means(bags.size());
#pragma omp parallel for schedule(static)
  for (std::size_t i = 0; i < bags.size(); ++i) means[i] = orbit_mean(table, bags[i]);
  return means;
}

FnTable map_table(const FnTable& in, const std::function<double(double)>& fn) {
  FnTable out = in;
#pragma omp parallel for schedule(static)
  for (std::uint64_t i = 0; i < out.size(); ++i) out.values[i] = fn(in.values[i]);
  return out;
}

BagMoments compress_by_bag(const FnTable& table) {
  BagMoments m;
  m.space = table.space;
  m.n = table.n;
  m.bags = enumerate_bags(table.space, table.seq_len());
  const std::uint64_t size = table.size();
  const std::size_t nbags = m.bags.size();
  const int N = table.seq_len();
  const int z = table.space.z_card();
  const std::uint64_t nblocks = size < kParallelCutoff ? 1 : kBlocks;
  const std::uint64_t chunk = (size + nblocks - 1) / nblocks;
  std::vector<std::vector<double>> partial(nblocks);
#pragma omp parallel for schedule(static)
  for (std::uint64_t b = 0; b < nblocks; ++b) {
    const std::uint64_t lo = b * chunk;
    const std::uint64_t hi = std::min(size, lo + chunk);
    if (lo >= hi) continue;
    std::vector<double> local(nbags, 0.0);
    std::vector<int> digits(N);
    std::vector<int> counts(z, 0);
    decode_sequence(lo, table.space, digits);
    for (int d : digits) ++counts[d];
    Bag probe;
    for (std::uint64_t idx = lo; idx < hi; ++idx) {
      probe.counts = counts;
      local[bag_rank(probe)] += table.values[idx];
      // advance odometer and the running counts
      int p = N - 1;
      while (p >= 0 && digits[p] == z - 1) {
        --counts[digits[p]];
        digits[p] = 0;
        ++counts[0];
        --p;
      }
      if (p >= 0) {
        --counts[digits[p]];
        ++digits[p];
        ++counts[digits[p]];
      }
    }
    partial[b] = std::move(local);
  }
  m.orbit_sums.assign(nbags, 0.0);
  for (const auto& local : partial) {
    if (local.empty()) continue;
    for (std::size_t i = 0; i < nbags; ++i) m.orbit_sums[i] += local[i];
  }
  return m;
}

ExpectationResult expectation_from_moments(const BagMoments& moments, const Distribution& q) {
  ExpectationResult r;
  long double sum = 0.0L;
  for (std::size_t i = 0; i < moments.bags.size(); ++i) {
    double prob = 1.0;
    const auto& counts = moments.bags[i].counts;
    for (std::size_t zc = 0; zc < counts.size(); ++zc)
      for (int k = 0; k < counts[zc]; ++k) prob *= q.probs[zc];
    const double v = moments.orbit_sums[i];
    if (prob == 0.0) {
      if (std::isinf(v)) r.inf_times_zero = true;
      continue;
    }
    sum += static_cast<long double>(v) * prob;
  }
  r.value = static_cast<double>(sum);
  return r;
}

namespace serial {

ExpectationResult iid_expectation(const FnTable& table, const Distribution& q) {
  return expectation_range(table, q, 0, table.size());
}

std::vector<double> orbit_mean_sweep(const FnTable& table, const std::vector<Bag>& bags) {
  std::vector<double> means(bags.size());
  for (std::size_t i = 0; i < bags.size(); ++i) means[i] = cplab::orbit_mean(table, bags[i]);
  return means;
}

FnTable map_table(const FnTable& in, const std::function<double(double)>& fn) {
  FnTable out = in;
  for (std::uint64_t i = 0; i < out.size(); ++i) out.values[i] = fn(in.values[i]);
  return out;
}

}  // namespace serial

}  // namespace cplab
