#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dvt {

using Symbol = std::uint16_t;

/// Largest supported alphabet size.
inline constexpr unsigned kMaxAlphabet = 1u << 16;

/// Positions in all coding arithmetic are 1-based. This is the only place
/// where a position is turned into a storage offset.
constexpr std::size_t storage_index(std::size_t position) noexcept { return position - 1; }

/// A finite sequence over the alphabet {0, ..., q-1}.
class Word {
 public:
  Word() = default;
  explicit Word(unsigned q);
  Word(unsigned q, std::vector<Symbol> symbols);
  Word(unsigned q, std::initializer_list<Symbol> symbols);

  static Word zeros(unsigned q, std::size_t n);

  /// Parses base-36 digits ("0"-"9", "a"-"z"). Whitespace is not allowed.
  static Word parse(std::string_view digits, unsigned q);

  unsigned q() const noexcept { return q_; }
  std::size_t size() const noexcept { return symbols_.size(); }
  bool empty() const noexcept { return symbols_.empty(); }

  /// Symbol at a 1-based position.
  Symbol at(std::size_t position) const;

  std::span<const Symbol> symbols() const noexcept { return symbols_; }
  const std::vector<Symbol>& vec() const noexcept { return symbols_; }

  /// Base-36 rendering; only valid for q <= 36.
  std::string str() const;

  friend bool operator==(const Word&, const Word&) = default;
  friend std::strong_ordering operator<=>(const Word& lhs, const Word& rhs);

 private:
  unsigned q_ = 2;
  std::vector<Symbol> symbols_;
};

void validate_alphabet(unsigned q);

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept;
};

}  // namespace dvt

template <>
struct std::hash<dvt::Word> : dvt::WordHash {};
