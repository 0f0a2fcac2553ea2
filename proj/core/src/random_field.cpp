#include "picann/random_field.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace picann {

uint64_t mix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

namespace {

constexpr uint64_t kTagBrownian = 0x42524f574e49414eULL;
constexpr uint64_t kTagUniform = 0x554e49464f524d31ULL;

uint64_t hash_index(uint64_t seed, const MultiIndex& theta, uint64_t tag) {
  uint64_t h = mix64(seed ^ tag);
  for (long long v : theta.path) h = mix64(h ^ static_cast<uint64_t>(v));
  return h;
}

double to_unit(uint64_t h) {
  // (0, 1]: 53 mantissa bits, shifted away from zero for log()
  return (static_cast<double>(h >> 11) + 1.0) * 0x1p-53;
}

}  // namespace

RandomField::RandomField(uint64_t master_seed, int d, double T)
    : seed_(master_seed), d_(d), T_(T) {
  if (d < 1 || !(T > 0.0)) throw std::invalid_argument("random field needs d >= 1, T > 0");
}

std::vector<double> RandomField::gauss_vec(const MultiIndex& theta, double t) const {
  const uint64_t base = mix64(hash_index(seed_, theta, kTagBrownian) ^ std::bit_cast<uint64_t>(t));
  std::vector<double> z(static_cast<size_t>(d_));
  for (int c = 0; c < d_; ++c) {
    const uint64_t h1 = mix64(base ^ static_cast<uint64_t>(2 * c));
    const uint64_t h2 = mix64(base ^ static_cast<uint64_t>(2 * c + 1));
    const double u1 = to_unit(h1), u2 = to_unit(h2);
    z[static_cast<size_t>(c)] =
        std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
  }
  return z;
}

std::vector<std::vector<double>> RandomField::brownian_at(const MultiIndex& theta,
                                                          const std::vector<double>& times) {
  for (size_t i = 0; i < times.size(); ++i) {
    if (times[i] < 0.0 || times[i] > T_)
      throw std::invalid_argument("brownian_at: time outside [0, T]");
    if (i > 0 && times[i] < times[i - 1])
      throw std::invalid_argument("brownian_at: times must be nondecreasing");
  }
  std::lock_guard<std::mutex> lock(mu_);
  auto& path = paths_[theta.path];
  if (path.empty()) path.emplace(0.0, std::vector<double>(static_cast<size_t>(d_), 0.0));
  std::vector<std::vector<double>> out;
  out.reserve(times.size());
  for (double t : times) {
    auto it = path.find(t);
    if (it == path.end()) {
      auto next = path.upper_bound(t);
      auto prev = std::prev(next);
      const std::vector<double> z = gauss_vec(theta, t);
      std::vector<double> v(static_cast<size_t>(d_));
      if (next == path.end()) {
        const double sd = std::sqrt(t - prev->first);
        for (int c = 0; c < d_; ++c)
          v[static_cast<size_t>(c)] = prev->second[static_cast<size_t>(c)] + sd * z[static_cast<size_t>(c)];
      } else {
        const double t1 = prev->first, t2 = next->first;
        const double lam = (t - t1) / (t2 - t1);
        const double sd = std::sqrt((t - t1) * (t2 - t) / (t2 - t1));
        for (int c = 0; c < d_; ++c) {
          const double mean = prev->second[static_cast<size_t>(c)] +
                              lam * (next->second[static_cast<size_t>(c)] -
                                     prev->second[static_cast<size_t>(c)]);
          v[static_cast<size_t>(c)] = mean + sd * z[static_cast<size_t>(c)];
        }
      }
      it = path.emplace(t, std::move(v)).first;
    }
    out.push_back(it->second);
  }
  return out;
}

double RandomField::time_sample(const MultiIndex& theta, double t) const {
  if (t < 0.0 || t > T_) throw std::invalid_argument("time_sample: t outside [0, T]");
  const double u = to_unit(hash_index(seed_, theta, kTagUniform));
  return t + (T_ - t) * u;
}

}  // namespace picann
