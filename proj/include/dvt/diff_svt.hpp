#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "dvt/word.hpp"

namespace dvt {

/// Differential shifted VT code: diff(x) has weighted sum a mod q(P+1) and
/// plain sum b mod q+1. Corrects one deletion whose position is known to
/// within P consecutive slots.
class DiffSvtCode {
 public:
  DiffSvtCode(unsigned q, std::size_t n, std::size_t window, std::uint64_t a, std::uint64_t b);

  unsigned q() const noexcept { return q_; }
  std::size_t n() const noexcept { return n_; }
  std::size_t window() const noexcept { return window_; }
  std::uint64_t a() const noexcept { return a_; }
  std::uint64_t b() const noexcept { return b_; }
  std::uint64_t modulus() const noexcept { return modulus_; }

  bool is_member(const Word& w) const;
  bool is_member(std::span<const Symbol> w) const;

  /// Re-inserts the missing symbol, given that the deletion hit a position in
  /// [lo, hi] (clipped to [1, n]). The span may be at most `window` long.
  Word decode_windowed(const Word& received, std::size_t lo, std::size_t hi) const;

  /// Same as decode_windowed but returns the leftmost 1-based insertion slot.
  std::size_t locate(std::span<const Symbol> received, std::size_t lo, std::size_t hi) const;
  Symbol missing_symbol(std::span<const Symbol> received) const;

  /// Encoder; requires n >= 3q(P+1).
  std::size_t message_length() const;
  std::size_t redundancy() const { return n_ - message_length(); }
  std::vector<std::size_t> check_positions() const;
  Word encode(const Word& msg) const;
  Word extract_message(const Word& codeword) const;

  std::vector<Word> enumerate() const;

 private:
  void require_encoder() const;

  unsigned q_;
  std::size_t n_;
  std::size_t window_;
  std::uint64_t a_;
  std::uint64_t b_;
  std::uint64_t modulus_;
};

/// Histogram indexed by a*(q+1) + b over the full space.
std::vector<std::uint64_t> diff_svt_coset_sizes(unsigned q, std::size_t n, std::size_t window);

/// Residues (a, b) of an arbitrary word under the given window.
std::pair<std::uint64_t, std::uint64_t> diff_svt_residues(std::span<const Symbol> w, unsigned q, std::size_t window);

}  // namespace dvt
