#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "dvt/word.hpp"

namespace dvt {

enum class CaseTag { no_error, case1_front, case2a, case2b, insertion };

std::string_view to_string(CaseTag tag);

struct DecodeReport {
  Word recovered;
  CaseTag case_tag = CaseTag::no_error;
  std::uint64_t delta = 0;
  std::uint64_t s = 0;
  Symbol gamma = 0;
  /// 1-based index where gamma was re-inserted (deletions) or removed (insertions).
  std::size_t position = 0;
};

/// Words x of length n whose differential vector has weighted sum a modulo
/// `modulus`. The modulus defaults to q*n; any q*N with N >= n also yields a
/// single deletion/insertion correcting code.
class DiffVtCode {
 public:
  DiffVtCode(unsigned q, std::size_t n, std::uint64_t a, std::uint64_t modulus = 0);

  unsigned q() const noexcept { return q_; }
  std::size_t n() const noexcept { return n_; }
  std::uint64_t a() const noexcept { return a_; }
  std::uint64_t modulus() const noexcept { return modulus_; }

  bool is_member(const Word& w) const;
  bool is_member(std::span<const Symbol> w) const;

  DecodeReport decode_deletion(const Word& received) const;
  DecodeReport decode_insertion(const Word& received) const;
  /// Dispatches on length: n, n-1 or n+1.
  DecodeReport decode(const Word& received) const;

  /// Systematic encoder; requires n >= q and modulus q*n.
  std::size_t message_length() const;
  std::size_t redundancy() const { return n_ - message_length(); }
  /// Sorted 1-based positions of the differential vector holding redundancy.
  std::vector<std::size_t> check_positions() const;
  Word encode(const Word& msg) const;
  Word extract_message(const Word& codeword) const;
  Word dec_message(const Word& received) const;

  std::vector<Word> enumerate() const;

 private:
  void require_encoder() const;

  unsigned q_;
  std::size_t n_;
  std::uint64_t a_;
  std::uint64_t modulus_;
};

/// Sizes of every coset a = 0..modulus-1 over the full space.
std::vector<std::uint64_t> diff_vt_coset_sizes(unsigned q, std::size_t n, std::uint64_t modulus = 0);

/// Message positions: [1, n] minus the check positions, ascending.
std::vector<std::size_t> complement_positions(std::size_t n, const std::vector<std::size_t>& checks);

}  // namespace dvt
