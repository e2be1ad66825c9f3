#include "dvt/error_model.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <string>
#include <unordered_map>

#include "dvt/errors.hpp"

namespace dvt {

namespace {

constexpr std::uint64_t kDefaultCap = 10'000'000;

void sort_unique(std::vector<Word>& words) {
  std::sort(words.begin(), words.end());
  words.erase(std::unique(words.begin(), words.end()), words.end());
}

// Appends every insertion of `len` symbols into w, enumerating the inserted
// block as a base-q counter.
void add_insertions(const Word& w, std::size_t len, std::vector<Word>& out) {
  const unsigned q = w.q();
  const auto& x = w.vec();
  std::vector<Symbol> block(len, 0);
  for (;;) {
    for (std::size_t after = 0; after <= x.size(); ++after) {
      std::vector<Symbol> y;
      y.reserve(x.size() + len);
      y.insert(y.end(), x.begin(), x.begin() + static_cast<std::ptrdiff_t>(after));
      y.insert(y.end(), block.begin(), block.end());
      y.insert(y.end(), x.begin() + static_cast<std::ptrdiff_t>(after), x.end());
      out.emplace_back(q, std::move(y));
    }
    std::size_t i = 0;
    while (i < len && ++block[i] == q) block[i++] = 0;
    if (i == len) break;
  }
}

void add_deletions(const Word& w, std::size_t len, std::vector<Word>& out) {
  const auto& x = w.vec();
  if (len > x.size()) return;
  for (std::size_t start = 0; start + len <= x.size(); ++start) {
    std::vector<Symbol> y;
    y.reserve(x.size() - len);
    y.insert(y.end(), x.begin(), x.begin() + static_cast<std::ptrdiff_t>(start));
    y.insert(y.end(), x.begin() + static_cast<std::ptrdiff_t>(start + len), x.end());
    out.emplace_back(w.q(), std::move(y));
  }
}

std::pair<std::size_t, std::size_t> burst_lengths(std::size_t t, BallMode mode) {
  if (t == 0) throw DomainError("burst length must be at least 1");
  return {mode == BallMode::exact ? t : 1, t};
}

void guard_ball(const Word& w, std::size_t t) {
  std::uint64_t bound = 0;
  for (std::size_t s = 1; s <= t; ++s) {
    std::uint64_t q_pow = space_size(w.q(), s);
    std::uint64_t ins = q_pow == std::numeric_limits<std::uint64_t>::max()
                            ? q_pow
                            : q_pow * (w.size() + 1);
    bound = (bound > std::numeric_limits<std::uint64_t>::max() - ins) ? std::numeric_limits<std::uint64_t>::max()
                                                                      : bound + ins + w.size();
  }
  require_within_cap(bound, "error ball");
}

}  // namespace

ErrorSpec ErrorSpec::deletion(std::size_t start, std::size_t length) {
  return ErrorSpec{ErrorKind::deletion, start, length, {}};
}

ErrorSpec ErrorSpec::insertion(std::size_t after, std::vector<Symbol> symbols) {
  const std::size_t len = symbols.size();
  return ErrorSpec{ErrorKind::insertion, after, len, std::move(symbols)};
}

Word apply(const Word& w, const ErrorSpec& e) {
  std::vector<Symbol> y = w.vec();
  if (e.kind == ErrorKind::deletion) {
    if (e.length == 0 || e.start == 0 || e.start + e.length - 1 > w.size()) {
      throw DomainError("deletion burst [" + std::to_string(e.start) + ", " +
                        std::to_string(e.start + e.length - 1) + "] outside word of length " +
                        std::to_string(w.size()));
    }
    auto first = y.begin() + static_cast<std::ptrdiff_t>(storage_index(e.start));
    y.erase(first, first + static_cast<std::ptrdiff_t>(e.length));
  } else {
    if (e.inserted.empty() || e.inserted.size() != e.length) {
      throw DomainError("insertion burst needs exactly `length` symbols");
    }
    if (e.start > w.size()) {
      throw DomainError("insertion point " + std::to_string(e.start) + " beyond word of length " +
                        std::to_string(w.size()));
    }
    y.insert(y.begin() + static_cast<std::ptrdiff_t>(e.start), e.inserted.begin(), e.inserted.end());
  }
  return Word(w.q(), std::move(y));
}

std::vector<Word> deletion_ball(const Word& w, std::size_t t, BallMode mode) {
  auto [lo, hi] = burst_lengths(t, mode);
  std::vector<Word> out;
  for (std::size_t s = lo; s <= hi; ++s) add_deletions(w, s, out);
  sort_unique(out);
  return out;
}

std::vector<Word> error_ball(const Word& w, std::size_t t, BallMode mode) {
  auto [lo, hi] = burst_lengths(t, mode);
  guard_ball(w, hi);
  std::vector<Word> out;
  for (std::size_t s = lo; s <= hi; ++s) {
    add_deletions(w, s, out);
    add_insertions(w, s, out);
  }
  sort_unique(out);
  return out;
}

bool confusable(const Word& u, const Word& v, std::size_t t, BallMode mode) {
  if (u.q() != v.q()) throw DomainError("confusable requires a common alphabet");
  const std::size_t gap = u.size() > v.size() ? u.size() - v.size() : v.size() - u.size();
  if (gap > 2 * t) return false;
  auto bu = error_ball(u, t, mode);
  auto bv = error_ball(v, t, mode);
  std::vector<Word> common;
  std::set_intersection(bu.begin(), bu.end(), bv.begin(), bv.end(), std::back_inserter(common));
  return !common.empty();
}

bool code_is_correcting(std::span<const Word> code, std::size_t t, BallMode mode) {
  std::unordered_map<Word, std::size_t> owner;
  for (std::size_t idx = 0; idx < code.size(); ++idx) {
    if (idx > 0 && (code[idx].size() != code[0].size() || code[idx].q() != code[0].q())) {
      throw DomainError("code members must share length and alphabet");
    }
    for (Word& member : error_ball(code[idx], t, mode)) {
      auto [it, fresh] = owner.emplace(std::move(member), idx);
      if (!fresh && code[it->second] != code[idx]) return false;
    }
  }
  return true;
}

std::uint64_t enumeration_cap() {
  if (const char* env = std::getenv("DVT_ENUM_CAP"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != nullptr && *end == '\0' && v > 0) return v;
    throw DomainError(std::string("DVT_ENUM_CAP must be a positive integer, got '") + env + "'");
  }
  return kDefaultCap;
}

void require_within_cap(std::uint64_t count, const char* what) {
  const std::uint64_t cap = enumeration_cap();
  if (count > cap) {
    throw CapacityError(std::string(what) + " would visit " + std::to_string(count) +
                        " items, above the enumeration cap of " + std::to_string(cap));
  }
}

std::uint64_t space_size(unsigned q, std::size_t n) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (total > std::numeric_limits<std::uint64_t>::max() / q) return std::numeric_limits<std::uint64_t>::max();
    total *= q;
  }
  return total;
}

void for_each_word(unsigned q, std::size_t n, const std::function<void(std::span<const Symbol>)>& visit) {
  validate_alphabet(q);
  require_within_cap(space_size(q, n), "word enumeration");
  std::vector<Symbol> w(n, 0);
  for (;;) {
    visit(w);
    std::size_t i = n;
    while (i > 0) {
      if (++w[i - 1] < q) break;
      w[--i] = 0;
    }
    if (i == 0) break;
  }
}

std::vector<Word> all_words(unsigned q, std::size_t n) {
  std::vector<Word> out;
  for_each_word(q, n, [&](std::span<const Symbol> w) { out.emplace_back(q, std::vector<Symbol>(w.begin(), w.end())); });
  return out;
}

}  // namespace dvt
