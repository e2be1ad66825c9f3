#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "dvt/word.hpp"

namespace dvt {

/// Splits a symbol as bit * ceil(q/2) + residual.
std::pair<Symbol, Symbol> tau(Symbol symbol, unsigned q);
Symbol tau_inv(Symbol bit, Symbol residual, unsigned q);

struct TwoRowDecomposition {
  Word bits;      // q = 2
  Word residual;  // q = ceil(q/2)
};

TwoRowDecomposition decompose(const Word& w);
Word recompose(const TwoRowDecomposition& rows, unsigned q);

/// Binary code that corrects one burst of at most two deletions and keeps
/// every period-2 stretch short. Implementations are interchangeable.
class FirstRowCode {
 public:
  virtual ~FirstRowCode() = default;
  virtual std::size_t length() const = 0;
  virtual std::size_t message_length() const = 0;
  virtual std::size_t period2_limit() const = 0;
  virtual bool is_member(const Word& w) const = 0;
  virtual Word encode(const Word& bits) const = 0;
  /// Accepts lengths n, n-1 and n-2.
  virtual Word decode(const Word& received) const = 0;
  /// All codewords; backends that cannot list them throw CapacityError.
  virtual std::vector<Word> codebook() const = 0;
};

/// Exhaustive backend: scans binary words in lexicographic order, keeps
/// those whose period-2 stretches are short enough and whose error balls
/// miss every ball kept so far.
class CodebookFirstRowCode final : public FirstRowCode {
 public:
  /// `period2_limit` of 0 selects ceil(log2 n) + 5.
  static std::shared_ptr<const CodebookFirstRowCode> build(std::size_t n, std::size_t period2_limit = 0);

  std::size_t length() const override { return n_; }
  std::size_t message_length() const override;
  std::size_t period2_limit() const override { return limit_; }
  bool is_member(const Word& w) const override;
  Word encode(const Word& bits) const override;
  Word decode(const Word& received) const override;
  std::vector<Word> codebook() const override;

  const std::vector<std::uint64_t>& codewords() const noexcept { return codewords_; }
  std::size_t size() const noexcept { return codewords_.size(); }
  Word codeword(std::size_t index) const;

 private:
  CodebookFirstRowCode(std::size_t n, std::size_t limit) : n_(n), limit_(limit) {}

  std::size_t n_;
  std::size_t limit_;
  std::vector<std::uint64_t> codewords_;
  std::unordered_map<std::uint64_t, std::uint32_t> members_;
  std::unordered_map<std::uint64_t, std::uint32_t> ball_owner_;
};

/// Residues of the three shifted VT constraints on the residual row: the
/// whole row, its odd positions and its even positions.
struct Le2Residues {
  std::array<std::uint64_t, 3> a{};
  std::array<std::uint64_t, 3> b{};
};

Le2Residues le2_residues(const Word& residual_row, std::size_t window);

/// q-ary code (q even) correcting one burst of at most two deletions.
class Le2Code {
 public:
  /// `window` of 0 selects ceil(log2 n) + 6.
  Le2Code(unsigned q, std::size_t n, std::shared_ptr<const FirstRowCode> first_row, Le2Residues residues,
          std::size_t window = 0);

  unsigned q() const noexcept { return q_; }
  std::size_t n() const noexcept { return n_; }
  std::size_t window() const noexcept { return window_; }
  unsigned residual_alphabet() const noexcept { return (q_ + 1) / 2; }

  bool is_member(const Word& w) const;
  Word decode(const Word& received) const;

  std::vector<Word> enumerate() const;

 private:
  unsigned q_;
  std::size_t n_;
  std::shared_ptr<const FirstRowCode> first_row_;
  Le2Residues residues_;
  std::size_t window_;
};

/// Burst starts p for which deleting `count` symbols of `codeword` starting
/// at p yields `received`. Returns an empty range as {1, 0}.
std::pair<std::size_t, std::size_t> consistent_burst_starts(std::span<const Symbol> codeword,
                                                            std::span<const Symbol> received);

/// Systematic marker code: the data is followed by a seven-symbol marker and
/// the base-q residues of the three shifted VT constraints.
class MarkerCode {
 public:
  MarkerCode(unsigned q, std::size_t n, std::size_t window);

  unsigned q() const noexcept { return q_; }
  std::size_t n() const noexcept { return n_; }
  std::size_t window() const noexcept { return window_; }
  std::size_t message_length() const noexcept { return k_; }
  std::size_t residue_digits() const noexcept { return digits_; }
  std::size_t redundancy() const noexcept { return n_ - k_; }

  Word encode(const Word& msg) const;

  /// `burst_window` bounds the first deleted position when the data part
  /// may have been hit.
  Word decode(const Word& received, std::optional<std::pair<std::size_t, std::size_t>> burst_window) const;

 private:
  unsigned q_;
  std::size_t n_;
  std::size_t window_;
  std::size_t digits_;
  std::size_t k_;
};

}  // namespace dvt
