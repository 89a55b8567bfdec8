// Copyright 2026 The ravqe Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace ravqe {

/// FNV-1a over the label bytes.
constexpr std::uint64_t stream_hash(std::string_view label) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : label) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return h;
}

constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Seed of stream (label, index) under a master seed. Independent of any
/// execution order; two labels never share a stream in practice.
constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index, std::string_view label) {
  return splitmix64(splitmix64(splitmix64(master) ^ stream_hash(label)) + index);
}

inline std::mt19937_64 make_rng(std::uint64_t master, std::uint64_t index, std::string_view label) {
  return std::mt19937_64(derive_seed(master, index, label));
}

}  // namespace ravqe
