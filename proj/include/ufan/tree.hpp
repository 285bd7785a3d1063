// Copyright 2026 The unitary-fanout developers
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

#pragma once

#include <bit>
#include <cstdint>

namespace ufan::tree {

/// Index arithmetic for the balanced binary splitter tree with N = 2^L
/// leaves. Internal nodes live on levels 1..L (level 1 = root); level L+1
/// holds the leaves / antenna ports. Node i at level l covers the contiguous
/// leaf block of size 2^{L-l+1} starting at entry_index(L, l, i). All indices
/// are 1-based to match the settings file layout.

inline int levels_for(int n) {
  int l = 0;
  while ((1 << l) < n) ++l;
  return l;  // log2(n) for n a power of two
}

inline bool is_power_of_two(std::int64_t n) {
  return n >= 1 && std::has_single_bit(static_cast<std::uint64_t>(n));
}

inline int nodes_at_level(int level) { return 1 << (level - 1); }

/// First leaf covered by node (level, i); the coordinate that carries the
/// block's undivided amplitude when driven from port 1.
inline int entry_index(int depth, int level, int i) {
  return (i - 1) * (1 << (depth - level + 1)) + 1;
}

/// Partner coordinate mixed with entry_index at this level; becomes the
/// entry index of the right child one level down.
inline int partner_index(int depth, int level, int i) {
  return entry_index(depth, level, i) + (1 << (depth - level));
}

inline int left_child(int i) { return 2 * i - 1; }
inline int right_child(int i) { return 2 * i; }

/// Number of right-child decisions on the root-to-leaf path to leaf n,
/// i.e. the Hamming weight of the depth-bit encoding of n-1.
inline int right_branch_count(int leaf, int /*depth*/) {
  return std::popcount(static_cast<std::uint32_t>(leaf - 1));
}

}  // namespace ufan::tree
