#pragma once

#include <cstddef>

#include "dvt/word.hpp"

namespace dvt {

/// Run-length-limiting map from n-1 symbols to n symbols whose longest run
/// is at most ceil(log_q n) + 3.
///
/// Runs of length >= run_limit()+1 are cut out left to right and each cut is
/// logged as a fixed-size record appended behind the data:
///   [sep, position (m digits, MSB first), run symbol, sep, more]
/// where `more` is 1 when another record precedes this one. The final symbol
/// repeats its predecessor when records are present and differs from it
/// otherwise.
class RllCodec {
 public:
  RllCodec(unsigned q, std::size_t n);

  unsigned q() const noexcept { return q_; }
  std::size_t n() const noexcept { return n_; }
  std::size_t run_limit() const noexcept { return digits_ + 3; }
  std::size_t record_length() const noexcept { return digits_ + 4; }

  Word encode(const Word& msg) const;
  Word decode(const Word& codeword) const;

 private:
  unsigned q_;
  std::size_t n_;
  unsigned digits_;
};

/// Run bound for a differential VT codeword whose check-free part came from
/// RllCodec: max_run(cw) <= 2 ceil(log_q n) + 5.
std::size_t composite_run_bound(unsigned q, std::size_t n);
bool check_composite_bound(const Word& cw, unsigned q, std::size_t n);

}  // namespace dvt
