#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace relicut {

/// Calls fn(labels) for every partition of {0..k-1} into exactly `blocks`
/// nonempty blocks. Labels form a restricted growth string: labels[0] == 0
/// and each new block takes the next unused label, so every partition is
/// visited once, in lexicographic order of its string.
template <class Fn>
void for_each_set_partition(std::uint32_t k, std::uint32_t blocks, Fn&& fn) {
  if (blocks == 0 || blocks > k) return;
  std::vector<std::uint32_t> labels(k, 0);
  // prefix_max[i] = max label among labels[0..i]
  std::vector<std::uint32_t> prefix_max(k, 0);
  auto recurse = [&](auto&& self, std::uint32_t i) -> void {
    if (i == k) {
      if (prefix_max[k - 1] + 1 == blocks) fn(std::span<const std::uint32_t>(labels));
      return;
    }
    const std::uint32_t used = prefix_max[i - 1] + 1;
    // Remaining positions must still be able to open the missing blocks.
    const std::uint32_t remaining = k - i;
    for (std::uint32_t label = 0; label <= used && label < blocks; ++label) {
      const std::uint32_t now_used = label == used ? used + 1 : used;
      if (blocks > now_used + (remaining - 1)) continue;
      labels[i] = label;
      prefix_max[i] = now_used - 1;
      self(self, i + 1);
    }
  };
  if (k == 0) return;
  labels[0] = 0;
  prefix_max[0] = 0;
  if (k == 1) {
    if (blocks == 1) fn(std::span<const std::uint32_t>(labels));
    return;
  }
  recurse(recurse, 1);
}

/// Relabels blocks in order of first appearance.
inline std::vector<std::uint32_t> canonical_labels(std::span<const std::uint32_t> labels) {
  std::vector<std::uint32_t> remap;
  std::vector<std::uint32_t> out(labels.size());
  std::uint32_t next = 0;
  for (std::size_t v = 0; v < labels.size(); ++v) {
    const std::uint32_t l = labels[v];
    if (l >= remap.size()) remap.resize(l + 1, UINT32_MAX);
    if (remap[l] == UINT32_MAX) remap[l] = next++;
    out[v] = remap[l];
  }
  return out;
}

}  // namespace relicut
