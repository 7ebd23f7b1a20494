#pragma once

// Pseudo-polynomial Subset Sum with reconstruction. Rows are packed
// bitsets, so the suffix-reachability table costs (p+1)(t+1) bits and the
// fill is a shifted-OR per item. A one-row forward pass answers NO
// without touching the table; reconstruction prefers including
// lower-indexed weights.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace differsat {

namespace detail {

class SumBitRow {
  public:
    explicit SumBitRow(std::uint64_t bit_count) : words_((bit_count + 63) / 64, 0) {}

    bool get(std::uint64_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::uint64_t i) { words_[i >> 6] |= std::uint64_t(1) << (i & 63); }

    // *this |= *this << shift, truncated to the row width
    void shift_or(std::uint64_t shift) {
        if (shift == 0 || words_.empty()) return;
        const std::uint64_t word_shift = shift / 64, bit_shift = shift % 64;
        for (std::size_t w = words_.size(); w-- > 0;) {
            if (w < word_shift) break;
            std::uint64_t chunk = words_[w - word_shift] << bit_shift;
            if (bit_shift && w > word_shift)
                chunk |= words_[w - word_shift - 1] >> (64 - bit_shift);
            words_[w] |= chunk;
        }
    }

    std::size_t word_count() const { return words_.size(); }

  private:
    std::vector<std::uint64_t> words_;
};

}  // namespace detail

// Which sums in [0, cap] are reachable; entry s tells whether some
// sub-multiset of `weights` sums to s.
inline std::vector<char> subset_sum_reachable(const std::vector<std::uint64_t>& weights,
                                              std::uint64_t cap) {
    detail::SumBitRow row(cap + 1);
    row.set(0);
    for (std::uint64_t w : weights)
        if (w <= cap) row.shift_or(w);
    std::vector<char> out(cap + 1, 0);
    for (std::uint64_t s = 0; s <= cap; ++s) out[s] = row.get(s);
    return out;
}

// Guards the reconstruction table; larger instances get an honest error
// instead of an allocation failure.
inline constexpr std::uint64_t kSubsetSumTableLimitBytes = std::uint64_t(1) << 29;  // 512 MiB

// Indices (ascending) of a sub-multiset of `weights` summing to `target`,
// or nullopt if none exists. When several subsets work, reconstruction
// prefers including lower-indexed weights.
inline std::optional<std::vector<std::size_t>> subset_sum(
    const std::vector<std::uint64_t>& weights, std::uint64_t target) {
    const std::size_t p = weights.size();
    std::uint64_t total = 0;
    for (std::uint64_t w : weights) total += w;
    if (target > total) return std::nullopt;

    {  // cheap forward pass: most NO answers stop here
        detail::SumBitRow forward(target + 1);
        forward.set(0);
        for (std::uint64_t w : weights)
            if (w <= target) forward.shift_or(w);
        if (!forward.get(target)) return std::nullopt;
    }

    const std::uint64_t words_per_row = target / 64 + 1;
    if ((std::uint64_t(p) + 1) * words_per_row * 8 > kSubsetSumTableLimitBytes)
        throw std::runtime_error("subset_sum: reconstruction table would exceed the memory limit");

    // reach[i] holds the sums reachable from weights[i..p)
    std::vector<detail::SumBitRow> reach(p + 1, detail::SumBitRow(target + 1));
    reach[p].set(0);
    for (std::size_t i = p; i-- > 0;) {
        reach[i] = reach[i + 1];
        if (weights[i] <= target) reach[i].shift_or(weights[i]);
    }

    std::vector<std::size_t> chosen;
    std::uint64_t remaining = target;
    for (std::size_t i = 0; i < p; ++i) {
        if (weights[i] <= remaining && reach[i + 1].get(remaining - weights[i])) {
            chosen.push_back(i);
            remaining -= weights[i];
        }
    }
    return chosen;
}

}  // namespace differsat
