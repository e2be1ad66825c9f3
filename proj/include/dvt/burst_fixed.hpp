#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "dvt/word.hpp"

namespace dvt {

/// t rows; row i holds positions i, i+t, i+2t, ... of the flattened word.
struct CodewordArray {
  std::size_t t = 1;
  std::vector<Word> rows;
};

CodewordArray to_array(const Word& w, std::size_t t);
Word from_array(const CodewordArray& array);

/// Array code for one burst of exactly t deletions. Row 1 is a differential
/// VT codeword whose runs are at most `run_limit` long; rows 2..t are
/// differential shifted VT codewords with window P.
class BurstCode {
 public:
  /// Defaults: run_limit = ceil(log_q(n/t)) + 3 and P = run_limit + 1.
  BurstCode(unsigned q, std::size_t n, std::size_t t, std::uint64_t a1, std::uint64_t a2, std::uint64_t b);

  /// Explicit limits, for small lengths where the defaults are meaningless.
  static BurstCode with_limits(unsigned q, std::size_t n, std::size_t t, std::uint64_t a1, std::uint64_t a2,
                               std::uint64_t b, std::size_t run_limit, std::size_t window);

  /// Limits guaranteed by the encoder: run_limit = 2 ceil(log_q(n/t)) + 5.
  static BurstCode for_encoder(unsigned q, std::size_t n, std::size_t t, std::uint64_t a1, std::uint64_t a2,
                               std::uint64_t b);

  unsigned q() const noexcept { return q_; }
  std::size_t n() const noexcept { return n_; }
  std::size_t t() const noexcept { return t_; }
  std::size_t row_length() const noexcept { return n_ / t_; }
  std::size_t run_limit() const noexcept { return run_limit_; }
  std::size_t window() const noexcept { return window_; }
  std::uint64_t a1() const noexcept { return a1_; }
  std::uint64_t a2() const noexcept { return a2_; }
  std::uint64_t b() const noexcept { return b_; }

  bool is_member(const Word& w) const;

  /// Recovers the codeword from a word that lost one burst of t symbols.
  Word decode_burst(const Word& received) const;

  std::size_t message_length() const;
  std::size_t first_row_message_length() const;
  std::size_t other_row_message_length() const;
  std::size_t redundancy() const { return n_ - message_length(); }
  Word encode_burst(const Word& msg) const;
  Word extract_message(const Word& codeword) const;
  /// Accepts a clean codeword (length n) or a burst-corrupted one (n - t).
  Word decode_message(const Word& received) const;

 private:
  BurstCode(unsigned q, std::size_t n, std::size_t t, std::uint64_t a1, std::uint64_t a2, std::uint64_t b,
            std::size_t run_limit, std::size_t window);
  void require_encoder() const;

  unsigned q_;
  std::size_t n_;
  std::size_t t_;
  std::uint64_t a1_;
  std::uint64_t a2_;
  std::uint64_t b_;
  std::size_t run_limit_;
  std::size_t window_;
};

/// Shortened variant for lengths that t does not divide. The word is padded
/// to the next multiple of t with zeros that the encoder forces by pinning
/// the final message symbol of each padded row; only n symbols are sent.
class ShortenedBurstCode {
 public:
  ShortenedBurstCode(unsigned q, std::size_t n, std::size_t t, std::uint64_t a1, std::uint64_t a2,
                     std::uint64_t b);

  std::size_t n() const noexcept { return n_; }
  std::size_t padding() const noexcept { return inner_.n() - n_; }
  const BurstCode& inner() const noexcept { return inner_; }

  std::size_t message_length() const;
  Word encode_burst(const Word& msg) const;
  Word decode_burst(const Word& received) const;
  Word decode_message(const Word& received) const;

 private:
  std::vector<std::size_t> pinned_indices() const;

  std::size_t n_;
  BurstCode inner_;
};

}  // namespace dvt
