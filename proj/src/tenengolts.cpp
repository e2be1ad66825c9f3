#include "dvt/tenengolts.hpp"

#include <string>

#include "dvt/diff_vt.hpp"
#include "dvt/error_model.hpp"
#include "dvt/errors.hpp"

namespace dvt {

namespace {

std::pair<std::uint64_t, std::uint64_t> residues(std::span<const Symbol> w, unsigned q) {
  const std::size_t n = w.size();
  std::uint64_t syn = 0;
  std::uint64_t sum = w.empty() ? 0 : w.back();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (w[i + 1] >= w[i]) syn += i + 1;
    sum += w[i];
  }
  return {syn % n, sum % q};
}

}  // namespace

TenengoltsCode::TenengoltsCode(unsigned q, std::size_t n, std::uint64_t a, std::uint64_t b)
    : q_(q), n_(n), a_(a), b_(b) {
  validate_alphabet(q);
  if (n < 2) throw DomainError("code length must be at least 2");
  if (a >= n) throw DomainError("residue a must be below n");
  if (b >= q) throw DomainError("residue b must be below q");
}

bool TenengoltsCode::is_member(std::span<const Symbol> w) const {
  return residues(w, q_) == std::pair<std::uint64_t, std::uint64_t>{a_, b_};
}

bool TenengoltsCode::is_member(const Word& w) const {
  if (w.q() != q_ || w.size() != n_) throw DomainError("expected a word of length " + std::to_string(n_));
  return is_member(w.symbols());
}

std::vector<Word> TenengoltsCode::enumerate() const {
  std::vector<Word> out;
  for_each_word(q_, n_, [&](std::span<const Symbol> w) {
    if (is_member(w)) out.emplace_back(q_, std::vector<Symbol>(w.begin(), w.end()));
  });
  return out;
}

std::vector<std::uint64_t> tenengolts_coset_sizes(unsigned q, std::size_t n) {
  TenengoltsCode(q, n, 0, 0);
  std::vector<std::uint64_t> sizes(n * q, 0);
  for_each_word(q, n, [&](std::span<const Symbol> w) {
    auto [a, b] = residues(w, q);
    ++sizes[a * q + b];
  });
  return sizes;
}

std::string_view to_string(CodeFamily family) {
  return family == CodeFamily::tenengolts ? "tenengolts" : "diff_vt";
}

BestCoset best_coset_size(unsigned q, std::size_t n, CodeFamily family) {
  BestCoset best{family};
  const std::uint64_t total = space_size(q, n);
  const std::uint64_t classes = static_cast<std::uint64_t>(q) * n;
  best.pigeonhole = (total + classes - 1) / classes;
  const std::vector<std::uint64_t> sizes =
      family == CodeFamily::tenengolts ? tenengolts_coset_sizes(q, n) : diff_vt_coset_sizes(q, n);
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (sizes[i] <= best.size) continue;
    best.size = sizes[i];
    if (family == CodeFamily::tenengolts) {
      best.a = i / q;
      best.b = i % q;
    } else {
      best.a = i;
    }
  }
  return best;
}

}  // namespace dvt
