#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace linkcomm {

// Deterministic random source. All draws go through hand-rolled helpers
// instead of <random> distributions, whose output is implementation-defined;
// this keeps runs reproducible across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Independent stream for a (generation, slot) work item. Workers seeded this
  // way produce the same results whether slots run serially or in parallel.
  static Rng stream(std::uint64_t root, std::uint64_t generation, std::uint64_t slot) {
    std::uint64_t s = mix(root);
    s = mix(s + 0x9e3779b97f4a7c15ULL * (generation + 1));
    s = mix(s + 0xbf58476d1ce4e5b9ULL * (slot + 1));
    return Rng(s);
  }

  std::uint64_t next() { return engine_(); }

  // Uniform in [0, n); n must be > 0. Rejection sampling keeps it unbiased.
  std::size_t below(std::size_t n) {
    const std::uint64_t bound = static_cast<std::uint64_t>(n);
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
      x = next();
    } while (x >= limit);
    return static_cast<std::size_t>(x % bound);
  }

  // Uniform in [lo, hi], inclusive.
  std::size_t range(std::size_t lo, std::size_t hi) { return lo + below(hi - lo + 1); }

  bool coin() { return (next() & 1u) != 0; }

  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  template <typename T>
  const T& choice(const std::vector<T>& items) {
    return items[below(items.size())];
  }

  // First `count` elements of a uniform permutation of `items` (partial
  // Fisher-Yates); count is capped at items.size().
  template <typename T>
  std::vector<T> sample(std::vector<T> items, std::size_t count) {
    if (count > items.size()) count = items.size();
    for (std::size_t i = 0; i < count; ++i) {
      std::size_t j = i + below(items.size() - i);
      std::swap(items[i], items[j]);
    }
    items.resize(count);
    return items;
  }

 private:
  static std::uint64_t mix(std::uint64_t x) {
    // splitmix64 finalizer
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  }

  std::mt19937_64 engine_;
};

}  // namespace linkcomm
