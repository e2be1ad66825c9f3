#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

#include "dvt/word.hpp"

namespace dvt {

/// Backward differences: y_i = x_i - x_{i+1} mod q, last entry copied.
Word diff(const Word& w);
Word diff_inv(const Word& y);

/// Scaled differences for a multiplier p coprime to q; p = 1 is diff.
Word p_transform(const Word& w, unsigned p);
Word p_transform_inv(const Word& y, unsigned p);

/// Raw weighted sum  sum_i i * w_i  with 1-based positions.
std::uint64_t vt_weight(std::span<const Symbol> w);
std::uint64_t vt_syndrome(const Word& w, std::uint64_t modulus);

std::uint64_t symbol_sum(const Word& w, std::uint64_t modulus);

/// Binary word of length n-1 whose bit i is 1 iff w_{i+1} >= w_i.
Word signature(const Word& w);

/// Weighted sum and plain sum of diff(w) without materialising diff(w).
std::uint64_t diff_weight(std::span<const Symbol> w, unsigned q);
std::uint64_t diff_total(std::span<const Symbol> w, unsigned q);

std::size_t max_run(std::span<const Symbol> w);
inline std::size_t max_run(const Word& w) { return max_run(w.symbols()); }

/// Longest substring with period 2, i.e. satisfying u_j = u_{j+2} throughout.
std::size_t max_period2_run(std::span<const Symbol> w);

/// (w_i, w_{i+s}, w_{i+2s}, ...), with 1 <= i <= s.
Word subsequence(const Word& w, std::size_t i, std::size_t s);

/// Smallest m >= 0 with base^m >= value (value >= 1).
unsigned ceil_log(std::uint64_t base, std::uint64_t value);

std::uint64_t ipow(std::uint64_t base, unsigned exp);

/// Returns w with `symbol` inserted so that it becomes position `position`.
Word insert_at(const Word& w, std::size_t position, Symbol symbol);
Word erase_at(const Word& w, std::size_t position);

}  // namespace dvt
