#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <vector>

namespace picann {

// Index into the simulation tree; children extend the path by an (a, b) pair
// following the recursion's grammar: (0,-k) terminal, (i,k) level, (-i,k) correction.
struct MultiIndex {
  std::vector<long long> path;

  static MultiIndex root(long long r = 0) { return MultiIndex{{r}}; }
  MultiIndex child(long long a, long long b) const {
    MultiIndex m = *this;
    m.path.push_back(a);
    m.path.push_back(b);
    return m;
  }
  bool operator<(const MultiIndex& o) const { return path < o.path; }
};

// Family of independent d-dimensional Brownian paths on [0, T] and uniform time
// draws, one per multi-index, generated counter-based from a master seed.
// Paths are memoized sorted time-maps refined by Brownian bridge, so one index
// can be queried at many times consistently.
class RandomField {
 public:
  RandomField(uint64_t master_seed, int d, double T);

  // Values of the index's path at the given nondecreasing times in [0, T].
  std::vector<std::vector<double>> brownian_at(const MultiIndex& theta,
                                               const std::vector<double>& times);

  // U_t = t + (T - t) u with u uniform on [0,1] attached to the index.
  double time_sample(const MultiIndex& theta, double t) const;

  uint64_t seed() const { return seed_; }
  int dim() const { return d_; }
  double horizon() const { return T_; }

 private:
  uint64_t seed_;
  int d_;
  double T_;
  std::map<std::vector<long long>, std::map<double, std::vector<double>>> paths_;
  mutable std::mutex mu_;

  std::vector<double> gauss_vec(const MultiIndex& theta, double t) const;
};

// splitmix64 mixing step, also usable as a standalone hash of one 64-bit word.
uint64_t mix64(uint64_t x);

}  // namespace picann
