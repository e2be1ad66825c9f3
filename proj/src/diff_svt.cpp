#include "dvt/diff_svt.hpp"

#include <algorithm>
#include <string>

#include "dvt/diff_vt.hpp"
#include "dvt/error_model.hpp"
#include "dvt/errors.hpp"
#include "dvt/sequence.hpp"

namespace dvt {

DiffSvtCode::DiffSvtCode(unsigned q, std::size_t n, std::size_t window, std::uint64_t a, std::uint64_t b)
    : q_(q), n_(n), window_(window), a_(a), b_(b), modulus_(static_cast<std::uint64_t>(q) * (window + 1)) {
  validate_alphabet(q);
  if (n == 0) throw DomainError("code length must be positive");
  if (window == 0) throw DomainError("window length must be at least 1");
  if (a >= modulus_) throw DomainError("residue a must be below q(P+1) = " + std::to_string(modulus_));
  if (b > q) throw DomainError("residue b must be at most q");
}

std::pair<std::uint64_t, std::uint64_t> diff_svt_residues(std::span<const Symbol> w, unsigned q,
                                                          std::size_t window) {
  return {diff_weight(w, q) % (static_cast<std::uint64_t>(q) * (window + 1)), diff_total(w, q) % (q + 1)};
}

bool DiffSvtCode::is_member(std::span<const Symbol> w) const {
  return diff_weight(w, q_) % modulus_ == a_ && diff_total(w, q_) % (q_ + 1) == b_;
}

bool DiffSvtCode::is_member(const Word& w) const {
  if (w.q() != q_ || w.size() != n_) {
    throw DomainError("expected a word of length " + std::to_string(n_) + " over q=" + std::to_string(q_));
  }
  return is_member(w.symbols());
}

Symbol DiffSvtCode::missing_symbol(std::span<const Symbol> received) const {
  std::uint64_t total = 0;
  for (Symbol v : received) total += v;
  return static_cast<Symbol>((a_ % q_ + q_ - total % q_) % q_);
}

std::size_t DiffSvtCode::locate(std::span<const Symbol> r, std::size_t lo, std::size_t hi) const {
  if (r.size() + 1 != n_) throw DomainError("windowed decoding expects a word of length " + std::to_string(n_ - 1));
  lo = std::max<std::size_t>(lo, 1);
  hi = std::min(hi, n_);
  if (lo > hi) throw DomainError("empty decoding window");
  if (hi - lo + 1 > window_) {
    throw DomainError("window of " + std::to_string(hi - lo + 1) + " slots exceeds P = " + std::to_string(window_));
  }
  const Symbol gamma = missing_symbol(r);
  const std::size_t len = r.size();
  const unsigned q = q_;
  auto rs = [&](std::size_t pos) -> std::uint64_t { return r[storage_index(pos)]; };
  auto yd = [&](std::size_t k) -> std::uint64_t { return k < len ? (rs(k) + q - rs(k + 1)) % q : rs(k); };

  // pw[k], ps[k]: weighted and plain prefix sums of diff(received) through k.
  std::vector<std::uint64_t> pw(len + 1, 0);
  std::vector<std::uint64_t> ps(len + 1, 0);
  for (std::size_t k = 1; k <= len; ++k) {
    pw[k] = pw[k - 1] + k * yd(k);
    ps[k] = ps[k - 1] + yd(k);
  }

  std::size_t found = 0;
  for (std::size_t j = lo; j <= hi; ++j) {
    const std::uint64_t pw_before = j >= 2 ? pw[j - 2] : 0;
    const std::uint64_t ps_before = j >= 2 ? ps[j - 2] : 0;
    const std::uint64_t pw_upto = pw[j - 1];
    const std::uint64_t ps_upto = ps[j - 1];
    std::uint64_t u = j >= 2 ? (rs(j - 1) + q - gamma) % q : 0;
    std::uint64_t v = j <= len ? (gamma + q - rs(j)) % q : gamma;
    std::uint64_t syn = pw_before + (j - 1) * u + j * v + (pw[len] - pw_upto) + (ps[len] - ps_upto);
    std::uint64_t sum = ps_before + u + v + (ps[len] - ps_upto);
    if (syn % modulus_ != a_ || sum % (q_ + 1) != b_) continue;
    if (found == 0) {
      found = j;
      continue;
    }
    for (std::size_t k = found; k < j; ++k) {
      if (rs(k) != gamma) throw InternalInvariantViolation("two distinct codewords fit inside the window");
    }
  }
  if (found == 0) throw DecodeError("no codeword is consistent with a deletion inside the window");
  while (found > 1 && rs(found - 1) == gamma) --found;
  return found;
}

Word DiffSvtCode::decode_windowed(const Word& received, std::size_t lo, std::size_t hi) const {
  if (received.q() != q_) throw DomainError("alphabet mismatch");
  const std::size_t pos = locate(received.symbols(), lo, hi);
  return insert_at(received, pos, missing_symbol(received.symbols()));
}

void DiffSvtCode::require_encoder() const {
  if (n_ < 3 * modulus_) {
    throw DomainError("the encoder needs n >= 3q(P+1) = " + std::to_string(3 * modulus_));
  }
}

std::vector<std::size_t> DiffSvtCode::check_positions() const {
  require_encoder();
  const unsigned m = ceil_log(q_, modulus_);
  std::vector<std::size_t> out;
  for (unsigned j = 0; j < m; ++j) out.push_back(ipow(q_, j));
  out.push_back(2 * modulus_);
  out.push_back(3 * modulus_);
  return out;
}

std::size_t DiffSvtCode::message_length() const {
  require_encoder();
  return n_ - ceil_log(q_, modulus_) - 2;
}

Word DiffSvtCode::encode(const Word& msg) const {
  const auto checks = check_positions();
  const auto info = complement_positions(n_, checks);
  if (msg.q() != q_ || msg.size() != info.size()) {
    throw DomainError("message must have length " + std::to_string(info.size()));
  }
  std::vector<Symbol> c(n_, 0);
  for (std::size_t i = 0; i < info.size(); ++i) c[storage_index(info[i])] = msg.vec()[i];

  std::uint64_t shortfall = (a_ + modulus_ - vt_weight(c) % modulus_) % modulus_;
  const std::size_t digits = checks.size() - 2;
  for (std::size_t j = 0; j < digits; ++j) {
    c[storage_index(checks[j])] = static_cast<Symbol>(shortfall % q_);
    shortfall /= q_;
  }

  // The last two checks sit at multiples of q(P+1), so they only move the
  // plain sum. Pick the lexicographically smallest pair.
  std::uint64_t rest = 0;
  for (Symbol v : c) rest += v;
  const std::uint64_t r = (b_ + (q_ + 1) - rest % (q_ + 1)) % (q_ + 1);
  const std::size_t i0 = checks[digits];
  const std::size_t i1 = checks[digits + 1];
  if (r <= q_ - 1) {
    c[storage_index(i1)] = static_cast<Symbol>(r);
  } else {
    c[storage_index(i0)] = 1;
    c[storage_index(i1)] = static_cast<Symbol>(q_ - 1);
  }
  return diff_inv(Word(q_, std::move(c)));
}

Word DiffSvtCode::extract_message(const Word& codeword) const {
  if (codeword.q() != q_ || codeword.size() != n_) throw DomainError("codeword has the wrong shape");
  const auto info = complement_positions(n_, check_positions());
  const Word y = diff(codeword);
  std::vector<Symbol> msg;
  msg.reserve(info.size());
  for (std::size_t i : info) msg.push_back(y.at(i));
  return Word(q_, std::move(msg));
}

std::vector<Word> DiffSvtCode::enumerate() const {
  std::vector<Word> out;
  for_each_word(q_, n_, [&](std::span<const Symbol> w) {
    if (is_member(w)) out.emplace_back(q_, std::vector<Symbol>(w.begin(), w.end()));
  });
  return out;
}

std::vector<std::uint64_t> diff_svt_coset_sizes(unsigned q, std::size_t n, std::size_t window) {
  const std::uint64_t modulus = static_cast<std::uint64_t>(q) * (window + 1);
  std::vector<std::uint64_t> sizes(modulus * (q + 1), 0);
  for_each_word(q, n, [&](std::span<const Symbol> w) {
    auto [a, b] = diff_svt_residues(w, q, window);
    ++sizes[a * (q + 1) + b];
  });
  return sizes;
}

}  // namespace dvt
