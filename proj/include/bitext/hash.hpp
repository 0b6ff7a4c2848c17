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

#ifndef BITEXT_HASH_HPP
#define BITEXT_HASH_HPP

#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <string>
#include <string_view>
#include <vector>

namespace bitext {

inline uint64_t fnv1a64(std::string_view data, uint64_t seed = 0xcbf29ce484222325ULL) {
  uint64_t h = seed;
  for (const char c : data) {
    h ^= static_cast<uint8_t>(c);
    h *= 0x100000001b3ULL;
  }
  return h;
}

inline std::string hex64(uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

struct Hash128 {
  uint64_t lo = 0;
  uint64_t hi = 0;

  friend bool operator==(const Hash128& a, const Hash128& b) {
    return a.lo == b.lo && a.hi == b.hi;
  }
};

namespace detail {

inline uint64_t rotl64(uint64_t x, int r) { return (x << r) | (x >> (64 - r)); }

inline uint64_t fmix64(uint64_t k) {
  k ^= k >> 33;
  k *= 0xff51afd7ed558ccdULL;
  k ^= k >> 33;
  k *= 0xc4ceb9fe1a85ec53ULL;
  k ^= k >> 33;
  return k;
}

inline uint64_t load64(const uint8_t* p) {
  uint64_t v;
  std::memcpy(&v, p, sizeof(v));
  return v;
}

}  // namespace detail

// MurmurHash3 x64 128-bit (Austin Appleby, public domain).
inline Hash128 murmur3_128(const void* key, size_t len, uint64_t seed = 0) {
  const uint8_t* data = static_cast<const uint8_t*>(key);
  const size_t nblocks = len / 16;

  uint64_t h1 = seed;
  uint64_t h2 = seed;
  const uint64_t c1 = 0x87c37b91114253d5ULL;
  const uint64_t c2 = 0x4cf5ad432745937fULL;

  for (size_t i = 0; i < nblocks; ++i) {
    uint64_t k1 = detail::load64(data + i * 16);
    uint64_t k2 = detail::load64(data + i * 16 + 8);
    k1 *= c1;
    k1 = detail::rotl64(k1, 31);
    k1 *= c2;
    h1 ^= k1;
    h1 = detail::rotl64(h1, 27);
    h1 += h2;
    h1 = h1 * 5 + 0x52dce729;
    k2 *= c2;
    k2 = detail::rotl64(k2, 33);
    k2 *= c1;
    h2 ^= k2;
    h2 = detail::rotl64(h2, 31);
    h2 += h1;
    h2 = h2 * 5 + 0x38495ab5;
  }

  const uint8_t* tail = data + nblocks * 16;
  uint64_t k1 = 0;
  uint64_t k2 = 0;
  switch (len & 15) {
    case 15: k2 ^= static_cast<uint64_t>(tail[14]) << 48; [[fallthrough]];
    case 14: k2 ^= static_cast<uint64_t>(tail[13]) << 40; [[fallthrough]];
    case 13: k2 ^= static_cast<uint64_t>(tail[12]) << 32; [[fallthrough]];
    case 12: k2 ^= static_cast<uint64_t>(tail[11]) << 24; [[fallthrough]];
    case 11: k2 ^= static_cast<uint64_t>(tail[10]) << 16; [[fallthrough]];
    case 10: k2 ^= static_cast<uint64_t>(tail[9]) << 8; [[fallthrough]];
    case 9:
      k2 ^= static_cast<uint64_t>(tail[8]);
      k2 *= c2;
      k2 = detail::rotl64(k2, 33);
      k2 *= c1;
      h2 ^= k2;
      [[fallthrough]];
    case 8: k1 ^= static_cast<uint64_t>(tail[7]) << 56; [[fallthrough]];
    case 7: k1 ^= static_cast<uint64_t>(tail[6]) << 48; [[fallthrough]];
    case 6: k1 ^= static_cast<uint64_t>(tail[5]) << 40; [[fallthrough]];
    case 5: k1 ^= static_cast<uint64_t>(tail[4]) << 32; [[fallthrough]];
    case 4: k1 ^= static_cast<uint64_t>(tail[3]) << 24; [[fallthrough]];
    case 3: k1 ^= static_cast<uint64_t>(tail[2]) << 16; [[fallthrough]];
    case 2: k1 ^= static_cast<uint64_t>(tail[1]) << 8; [[fallthrough]];
    case 1:
      k1 ^= static_cast<uint64_t>(tail[0]);
      k1 *= c1;
      k1 = detail::rotl64(k1, 31);
      k1 *= c2;
      h1 ^= k1;
      break;
    default:
      break;
  }

  h1 ^= static_cast<uint64_t>(len);
  h2 ^= static_cast<uint64_t>(len);
  h1 += h2;
  h2 += h1;
  h1 = detail::fmix64(h1);
  h2 = detail::fmix64(h2);
  h1 += h2;
  h2 += h1;
  return {h1, h2};
}

inline Hash128 murmur3_128(std::string_view data, uint64_t seed = 0) {
  return murmur3_128(data.data(), data.size(), seed);
}

// 128-bit identity of a text pair: length-prefixed so that ("ab","c") and
// ("a","bc") hash differently.
inline Hash128 pair_hash(std::string_view a, std::string_view b) {
  std::string buf;
  buf.reserve(a.size() + b.size() + 10);
  uint64_t la = a.size();
  buf.append(reinterpret_cast<const char*>(&la), sizeof(la));
  buf.append(a);
  buf.append(b);
  Hash128 h = murmur3_128(buf);
  if (h.lo == 0 && h.hi == 0) h.lo = 1;  // {0,0} is the empty-slot marker
  return h;
}

// Open-addressing set of Hash128 values with linear probing. Uses 16 bytes
// per slot at a max load factor of 7/10; 10M unique pairs fit in a 2^24
// table, 256 MiB final plus a 128 MiB rehash transient.
class Hash128Set {
 public:
  Hash128Set() { slots_.resize(kInitialCapacity); }

  // Returns true when h was newly inserted, false when already present.
  bool insert(Hash128 h) {
    if (h.lo == 0 && h.hi == 0) h.lo = 1;
    if ((size_ + 1) * 10 > slots_.size() * 7) grow();
    size_t idx = probe(slots_, h);
    if (!empty_slot(slots_[idx])) return false;
    slots_[idx] = h;
    ++size_;
    return true;
  }

  bool contains(Hash128 h) const {
    if (h.lo == 0 && h.hi == 0) h.lo = 1;
    return !empty_slot(slots_[probe(slots_, h)]);
  }

  size_t size() const { return size_; }

 private:
  static constexpr size_t kInitialCapacity = 1 << 10;

  static bool empty_slot(const Hash128& s) { return s.lo == 0 && s.hi == 0; }

  static size_t probe(const std::vector<Hash128>& slots, const Hash128& h) {
    const size_t mask = slots.size() - 1;
    size_t idx = static_cast<size_t>(h.lo) & mask;
    while (!empty_slot(slots[idx]) && !(slots[idx] == h)) {
      idx = (idx + 1) & mask;
    }
    return idx;
  }

  void grow() {
    std::vector<Hash128> next(slots_.size() * 2);
    for (const Hash128& s : slots_) {
      if (!empty_slot(s)) next[probe(next, s)] = s;
    }
    slots_.swap(next);
  }

  std::vector<Hash128> slots_;
  size_t size_ = 0;
};

}  // namespace bitext

#endif  // BITEXT_HASH_HPP
