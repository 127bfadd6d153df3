/*
Copyright 2026 The bdmbt Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace bdmbt::detail {

/// Fixed-width bitset over vertex ids, hashable for memo tables.
class VertexSet {
  public:
    VertexSet() = default;
    explicit VertexSet(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

    std::size_t size() const { return size_; }

    bool test(std::size_t v) const { return (words_[v >> 6] >> (v & 63)) & 1U; }
    void set(std::size_t v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_) {
            c += static_cast<std::size_t>(std::popcount(w));
        }
        return c;
    }

    bool operator==(const VertexSet &) const = default;

    std::size_t hash() const {
        std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ size_;
        for (auto w : words_) {
            std::uint64_t z = w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
            z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
            z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
            h ^= z ^ (z >> 31);
        }
        return static_cast<std::size_t>(h);
    }

  private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

struct VertexSetHash {
    std::size_t operator()(const VertexSet &s) const { return s.hash(); }
};

} // namespace bdmbt::detail
