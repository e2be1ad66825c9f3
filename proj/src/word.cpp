#include "dvt/word.hpp"

#include <algorithm>

#include "dvt/errors.hpp"

namespace dvt {

namespace {

constexpr std::string_view kDigits = "0123456789abcdefghijklmnopqrstuvwxyz";

int digit_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'z') return c - 'a' + 10;
  if (c >= 'A' && c <= 'Z') return c - 'A' + 10;
  return -1;
}

}  // namespace

void validate_alphabet(unsigned q) {
  if (q < 2 || q > kMaxAlphabet) {
    throw DomainError("alphabet size must lie in [2, 65536], got " + std::to_string(q));
  }
}

Word::Word(unsigned q) : q_(q) { validate_alphabet(q); }

Word::Word(unsigned q, std::vector<Symbol> symbols) : q_(q), symbols_(std::move(symbols)) {
  validate_alphabet(q);
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    if (symbols_[i] >= q_) {
      throw DomainError("symbol " + std::to_string(symbols_[i]) + " at position " +
                        std::to_string(i + 1) + " is outside the alphabet of size " +
                        std::to_string(q_));
    }
  }
}

Word::Word(unsigned q, std::initializer_list<Symbol> symbols)
    : Word(q, std::vector<Symbol>(symbols)) {}

Word Word::zeros(unsigned q, std::size_t n) { return Word(q, std::vector<Symbol>(n, 0)); }

Word Word::parse(std::string_view digits, unsigned q) {
  validate_alphabet(q);
  if (q > kDigits.size()) {
    throw DomainError("digit notation supports q <= 36 only");
  }
  std::vector<Symbol> out;
  out.reserve(digits.size());
  for (char c : digits) {
    int v = digit_value(c);
    if (v < 0 || static_cast<unsigned>(v) >= q) {
      throw DomainError(std::string("malformed symbol '") + c + "' for q=" + std::to_string(q));
    }
    out.push_back(static_cast<Symbol>(v));
  }
  return Word(q, std::move(out));
}

Symbol Word::at(std::size_t position) const {
  if (position == 0 || position > symbols_.size()) {
    throw DomainError("position " + std::to_string(position) + " outside [1, " +
                      std::to_string(symbols_.size()) + "]");
  }
  return symbols_[storage_index(position)];
}

std::string Word::str() const {
  if (q_ > kDigits.size()) {
    throw DomainError("digit notation supports q <= 36 only");
  }
  std::string out;
  out.reserve(symbols_.size());
  for (Symbol s : symbols_) out.push_back(kDigits[s]);
  return out;
}

std::strong_ordering operator<=>(const Word& lhs, const Word& rhs) {
  if (auto c = lhs.q_ <=> rhs.q_; c != 0) return c;
  if (auto c = lhs.symbols_.size() <=> rhs.symbols_.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(lhs.symbols_.begin(), lhs.symbols_.end(),
                                                rhs.symbols_.begin(), rhs.symbols_.end());
}

std::size_t WordHash::operator()(const Word& w) const noexcept {
  // FNV-1a over the symbols, seeded with length and alphabet.
  std::uint64_t h = 1469598103934665603ull ^ (static_cast<std::uint64_t>(w.q()) << 32) ^ w.size();
  for (Symbol s : w.symbols()) {
    h ^= s;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

}  // namespace dvt
