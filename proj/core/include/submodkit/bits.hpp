#pragma once

#include <bit>
#include <cstdint>
#include <string>

namespace submodkit {

/// Subsets of a ground set are bitmasks: bit i set <=> element i+1 is in
/// the subset (elements are displayed 1-based, bits are 0-based).
using Mask = std::uint32_t;

inline int popcount(Mask m) { return std::popcount(m); }

inline bool has_bit(Mask m, int i) { return (m >> i) & 1u; }

inline Mask full_mask(int n) {
    return n >= 32 ? ~Mask{0} : (Mask{1} << n) - 1u;
}

/// Smallest k-element subset mask: the k lowest bits.
inline Mask first_k_subset(int k) { return (k == 0) ? 0u : full_mask(k); }

/// Gosper's hack: next k-element subset in ascending numeric order.
/// Returns 0 when `m` was the last k-subset below 2^n.
inline Mask next_k_subset(Mask m, int n) {
    if (m == 0) return 0;
    Mask c = m & (~m + 1u);
    Mask r = m + c;
    Mask next = (((r ^ m) >> 2) / c) | r;
    return next < (Mask{1} << n) ? next : 0u;
}

/// Spreads the bits of `packed` (a subset of {0..popcount(domain)-1})
/// onto the set bit positions of `domain`, lowest positions first.
inline Mask expand_subset(Mask packed, Mask domain) {
    Mask out = 0;
    int j = 0;
    for (Mask d = domain; d != 0; d &= d - 1u, ++j) {
        if (has_bit(packed, j)) out |= d & (~d + 1u);
    }
    return out;
}

/// Inverse of expand_subset for sub ⊆ domain.
inline Mask compress_subset(Mask sub, Mask domain) {
    Mask out = 0;
    int j = 0;
    for (Mask d = domain; d != 0; d &= d - 1u, ++j) {
        if (sub & (d & (~d + 1u))) out |= Mask{1} << j;
    }
    return out;
}

/// Exact binomial coefficient in 128-bit arithmetic (exact far beyond the
/// n <= 30 word sizes used here).
inline unsigned __int128 binom128(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    unsigned __int128 r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
    }
    return r;
}

inline double binom_double(int n, int k) {
    return static_cast<double>(binom128(n, k));
}

inline std::uint64_t binom_u64(int n, int k) {
    return static_cast<std::uint64_t>(binom128(n, k));
}

/// Renders a mask as an n-character binary numeral, element n first
/// (ordinary most-significant-bit-first binary).
inline std::string mask_to_binary(Mask m, int n) {
    std::string s(static_cast<std::size_t>(n), '0');
    for (int i = 0; i < n; ++i) {
        if (has_bit(m, i)) s[static_cast<std::size_t>(n - 1 - i)] = '1';
    }
    return s;
}

}  // namespace submodkit
