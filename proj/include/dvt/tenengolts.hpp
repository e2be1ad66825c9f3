#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "dvt/word.hpp"

namespace dvt {

/// Tenengolts' q-ary single-deletion code: the signature lies in the binary
/// VT code of length n-1 with residue a mod n, and the symbols sum to b mod q.
class TenengoltsCode {
 public:
  TenengoltsCode(unsigned q, std::size_t n, std::uint64_t a, std::uint64_t b);

  bool is_member(const Word& w) const;
  bool is_member(std::span<const Symbol> w) const;
  std::vector<Word> enumerate() const;

  unsigned q() const noexcept { return q_; }
  std::size_t n() const noexcept { return n_; }
  std::uint64_t a() const noexcept { return a_; }
  std::uint64_t b() const noexcept { return b_; }

 private:
  unsigned q_;
  std::size_t n_;
  std::uint64_t a_;
  std::uint64_t b_;
};

/// Histogram indexed by a*q + b.
std::vector<std::uint64_t> tenengolts_coset_sizes(unsigned q, std::size_t n);

enum class CodeFamily { tenengolts, diff_vt };

std::string_view to_string(CodeFamily family);

struct BestCoset {
  CodeFamily family;
  std::uint64_t a = 0;
  std::uint64_t b = 0;  // unused for diff_vt
  std::uint64_t size = 0;
  std::uint64_t pigeonhole = 0;  // ceil(q^n / (q n))
};

/// Largest coset (smallest residues on ties) found by enumeration.
BestCoset best_coset_size(unsigned q, std::size_t n, CodeFamily family);

}  // namespace dvt
