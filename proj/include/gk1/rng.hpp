#pragma once
// Seeded random generation. All randomized code draws through Rng so that a
// seed reproduces the same values on every platform and standard library
// (std::mt19937_64 is fully specified; the distributions in <random> are not,
// so we roll our own bounded draw and shuffle).

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace gk1 {

// Derive a fresh seed from a base seed and a stream index.
inline std::uint64_t mix_seed(std::uint64_t base, std::uint64_t stream) {
  std::uint64_t z = base ^ (stream + 0x9e3779b97f4a7c15ull + (base << 6) + (base >> 2));
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

class Rng {
public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  // draw in [0, n), n > 0
  std::uint64_t below(std::uint64_t n) { return next() % n; }

  // draw in [lo, hi], inclusive
  int in(int lo, int hi) { return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1))); }

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i)
      std::swap(v[i - 1], v[static_cast<std::size_t>(below(i))]);
  }

private:
  std::mt19937_64 eng_;
};

}  // namespace gk1
