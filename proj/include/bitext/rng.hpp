// Copyright 2026 The bitext-tools Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BITEXT_RNG_HPP
#define BITEXT_RNG_HPP

#include <algorithm>
#include <cstdint>
#include <random>
#include <unordered_set>
#include <vector>

namespace bitext {

// Seeded generator with platform-independent output. mt19937_64 has a
// standard-fixed sequence; std::uniform_int_distribution does not, so
// bounded draws are done here with rejection sampling.
class Rng {
 public:
  explicit Rng(uint64_t seed) : gen_(seed) {}

  uint64_t next() { return gen_(); }

  // Uniform in [0, n). n must be > 0.
  uint64_t below(uint64_t n) {
    const uint64_t threshold = (0 - n) % n;
    for (;;) {
      const uint64_t r = gen_();
      if (r >= threshold) return r % n;
    }
  }

 private:
  std::mt19937_64 gen_;
};

// In-place Fisher-Yates shuffle.
template <typename T>
void shuffle(std::vector<T>& items, Rng& rng) {
  for (size_t i = items.size(); i > 1; --i) {
    const size_t j = static_cast<size_t>(rng.below(i));
    using std::swap;
    swap(items[i - 1], items[j]);
  }
}

// Floyd's algorithm: k distinct indices drawn uniformly from [0, n),
// returned in ascending order. O(k) memory. Requires k <= n.
inline std::vector<uint64_t> sample_indices(uint64_t n, uint64_t k, Rng& rng) {
  std::unordered_set<uint64_t> chosen;
  chosen.reserve(static_cast<size_t>(k) * 2);
  for (uint64_t j = n - k; j < n; ++j) {
    const uint64_t t = rng.below(j + 1);
    if (!chosen.insert(t).second) chosen.insert(j);
  }
  std::vector<uint64_t> out(chosen.begin(), chosen.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace bitext

#endif  // BITEXT_RNG_HPP
