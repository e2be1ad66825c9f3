#include "dvt/burst_fixed.hpp"

#include <algorithm>
#include <string>

#include "dvt/diff_svt.hpp"
#include "dvt/diff_vt.hpp"
#include "dvt/errors.hpp"
#include "dvt/rll.hpp"
#include "dvt/sequence.hpp"

namespace dvt {

namespace {

std::vector<Word> split_rows(const Word& w, std::size_t t) {
  std::vector<Word> rows;
  rows.reserve(t);
  for (std::size_t i = 1; i <= t; ++i) rows.push_back(subsequence(w, i, t));
  return rows;
}

std::size_t row_count_checked(unsigned q, std::size_t n, std::size_t t) {
  validate_alphabet(q);
  if (t == 0 || n == 0 || n % t != 0) {
    throw DomainError("burst length " + std::to_string(t) + " must divide the code length " + std::to_string(n));
  }
  return n / t;
}

std::size_t default_run_limit(unsigned q, std::size_t n, std::size_t t) {
  return ceil_log(q, row_count_checked(q, n, t)) + 3;
}

Word interleave(const std::vector<Word>& rows, unsigned q) {
  std::vector<Symbol> out;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  out.reserve(cols * rows.size());
  for (std::size_t c = 0; c < cols; ++c) {
    for (const Word& row : rows) out.push_back(row.vec()[c]);
  }
  return Word(q, std::move(out));
}

}  // namespace

CodewordArray to_array(const Word& w, std::size_t t) {
  if (t == 0 || w.size() % t != 0) {
    throw DomainError("burst length " + std::to_string(t) + " must divide the word length " +
                      std::to_string(w.size()));
  }
  return CodewordArray{t, split_rows(w, t)};
}

Word from_array(const CodewordArray& array) {
  if (array.rows.size() != array.t || array.rows.empty()) throw DomainError("array must have t rows");
  for (const Word& row : array.rows) {
    if (row.size() != array.rows[0].size() || row.q() != array.rows[0].q()) {
      throw DomainError("array rows must share length and alphabet");
    }
  }
  return interleave(array.rows, array.rows[0].q());
}

BurstCode::BurstCode(unsigned q, std::size_t n, std::size_t t, std::uint64_t a1, std::uint64_t a2, std::uint64_t b,
                     std::size_t run_limit, std::size_t window)
    : q_(q), n_(n), t_(t), a1_(a1), a2_(a2), b_(b), run_limit_(run_limit), window_(window) {
  row_count_checked(q, n, t);
  if (run_limit == 0 || window == 0) throw DomainError("run limit and window must be positive");
  // Validate residues through the row codes.
  DiffVtCode(q, row_length(), a1);
  if (t > 1) DiffSvtCode(q, row_length(), window, a2, b);
}

BurstCode::BurstCode(unsigned q, std::size_t n, std::size_t t, std::uint64_t a1, std::uint64_t a2, std::uint64_t b)
    : BurstCode(q, n, t, a1, a2, b, default_run_limit(q, n, t), default_run_limit(q, n, t) + 1) {}

BurstCode BurstCode::with_limits(unsigned q, std::size_t n, std::size_t t, std::uint64_t a1, std::uint64_t a2,
                                 std::uint64_t b, std::size_t run_limit, std::size_t window) {
  return BurstCode(q, n, t, a1, a2, b, run_limit, window);
}

BurstCode BurstCode::for_encoder(unsigned q, std::size_t n, std::size_t t, std::uint64_t a1, std::uint64_t a2,
                                 std::uint64_t b) {
  const std::size_t limit = composite_run_bound(q, row_count_checked(q, n, t));
  return BurstCode(q, n, t, a1, a2, b, limit, limit + 1);
}

bool BurstCode::is_member(const Word& w) const {
  if (w.q() != q_ || w.size() != n_) throw DomainError("expected a word of length " + std::to_string(n_));
  const auto rows = split_rows(w, t_);
  if (!DiffVtCode(q_, row_length(), a1_).is_member(rows[0]) || max_run(rows[0]) > run_limit_) return false;
  if (t_ == 1) return true;
  const DiffSvtCode svt(q_, row_length(), window_, a2_, b_);
  return std::all_of(rows.begin() + 1, rows.end(), [&](const Word& row) { return svt.is_member(row); });
}

Word BurstCode::decode_burst(const Word& received) const {
  if (received.q() != q_ || received.size() + t_ != n_) {
    throw DomainError("burst decoding expects a word of length " + std::to_string(n_ - t_));
  }
  auto rows = split_rows(received, t_);
  const std::size_t len = row_length();
  const DecodeReport first = DiffVtCode(q_, len, a1_).decode_deletion(rows[0]);
  const Word& head = first.recovered;
  if (max_run(head) > run_limit_) throw DecodeError("first row violates the run-length limit");

  // The other rows lost the same column as row 1 or the one before it, and
  // row 1's true column is somewhere in the run around the decoded slot.
  std::size_t run_end = first.position;
  while (run_end < len && head.at(run_end + 1) == head.at(first.position)) ++run_end;
  const std::size_t lo = std::max<std::size_t>(first.position, 2) - 1;
  const std::size_t hi = run_end;

  std::vector<Word> out;
  out.reserve(t_);
  out.push_back(head);
  if (t_ > 1) {
    const DiffSvtCode svt(q_, len, window_, a2_, b_);
    for (std::size_t i = 1; i < t_; ++i) out.push_back(svt.decode_windowed(rows[i], lo, hi));
  }
  return interleave(out, q_);
}

void BurstCode::require_encoder() const {
  const std::size_t len = row_length();
  const unsigned m = ceil_log(q_, len);
  if (len < m + 2) throw DomainError("row length too short for the first-row encoder");
  RllCodec(q_, len - m - 1);
  DiffVtCode(q_, len, a1_).message_length();
  if (t_ > 1) DiffSvtCode(q_, len, window_, a2_, b_).message_length();
}

std::size_t BurstCode::first_row_message_length() const {
  require_encoder();
  return row_length() - ceil_log(q_, row_length()) - 2;
}

std::size_t BurstCode::other_row_message_length() const {
  require_encoder();
  if (t_ == 1) return 0;
  return DiffSvtCode(q_, row_length(), window_, a2_, b_).message_length();
}

std::size_t BurstCode::message_length() const {
  return first_row_message_length() + (t_ - 1) * other_row_message_length();
}

Word BurstCode::encode_burst(const Word& msg) const {
  const std::size_t k1 = first_row_message_length();
  const std::size_t k2 = other_row_message_length();
  if (msg.q() != q_ || msg.size() != k1 + (t_ - 1) * k2) {
    throw DomainError("message must have length " + std::to_string(k1 + (t_ - 1) * k2));
  }
  const std::size_t len = row_length();
  const auto& m = msg.vec();
  std::vector<Word> rows;
  rows.reserve(t_);
  const RllCodec rll(q_, k1 + 1);
  const DiffVtCode vt(q_, len, a1_);
  rows.push_back(vt.encode(rll.encode(Word(q_, std::vector<Symbol>(m.begin(), m.begin() + static_cast<std::ptrdiff_t>(k1))))));
  if (t_ > 1) {
    const DiffSvtCode svt(q_, len, window_, a2_, b_);
    for (std::size_t i = 0; i + 1 < t_; ++i) {
      auto from = m.begin() + static_cast<std::ptrdiff_t>(k1 + i * k2);
      rows.push_back(svt.encode(Word(q_, std::vector<Symbol>(from, from + static_cast<std::ptrdiff_t>(k2)))));
    }
  }
  return interleave(rows, q_);
}

Word BurstCode::extract_message(const Word& codeword) const {
  if (codeword.q() != q_ || codeword.size() != n_) throw DomainError("codeword has the wrong shape");
  const std::size_t k1 = first_row_message_length();
  const auto rows = split_rows(codeword, t_);
  const RllCodec rll(q_, k1 + 1);
  std::vector<Symbol> out = rll.decode(DiffVtCode(q_, row_length(), a1_).extract_message(rows[0])).vec();
  if (t_ > 1) {
    const DiffSvtCode svt(q_, row_length(), window_, a2_, b_);
    for (std::size_t i = 1; i < t_; ++i) {
      const Word part = svt.extract_message(rows[i]);
      out.insert(out.end(), part.vec().begin(), part.vec().end());
    }
  }
  return Word(q_, std::move(out));
}

Word BurstCode::decode_message(const Word& received) const {
  if (received.size() == n_) {
    if (!is_member(received)) throw DecodeError("word of full length is not a codeword");
    return extract_message(received);
  }
  return extract_message(decode_burst(received));
}

ShortenedBurstCode::ShortenedBurstCode(unsigned q, std::size_t n, std::size_t t, std::uint64_t a1,
                                       std::uint64_t a2, std::uint64_t b)
    : n_(n), inner_(BurstCode::for_encoder(q, t == 0 ? n : (n + t - 1) / t * t, t, a1, a2, b)) {
  if (n < t) throw DomainError("code length must be at least the burst length");
  if (padding() > 0 && inner_.other_row_message_length() == 0) {
    throw DomainError("padding needs rows beyond the first");
  }
  // The last message symbol of an SVT row must sit at the final slot.
  if (padding() > 0) {
    const DiffSvtCode svt(q, inner_.row_length(), inner_.window(), a2, b);
    const auto checks = svt.check_positions();
    if (std::find(checks.begin(), checks.end(), inner_.row_length()) != checks.end()) {
      throw DomainError("row length collides with a check position");
    }
  }
}

std::vector<std::size_t> ShortenedBurstCode::pinned_indices() const {
  // Padded rows are the last `padding()` rows, i.e. message blocks
  // t-padding .. t-1 (0-based among the t-1 SVT rows: t-1-padding .. t-2).
  const std::size_t k1 = inner_.first_row_message_length();
  const std::size_t k2 = inner_.other_row_message_length();
  const std::size_t t = inner_.t();
  std::vector<std::size_t> out;
  for (std::size_t row = t - padding(); row < t; ++row) out.push_back(k1 + row * k2 - 1);
  return out;
}

std::size_t ShortenedBurstCode::message_length() const { return inner_.message_length() - padding(); }

Word ShortenedBurstCode::encode_burst(const Word& msg) const {
  if (msg.size() != message_length()) {
    throw DomainError("message must have length " + std::to_string(message_length()));
  }
  const auto pins = pinned_indices();
  std::vector<Symbol> full;
  full.reserve(inner_.message_length());
  std::size_t src = 0;
  for (std::size_t i = 0; i < inner_.message_length(); ++i) {
    if (std::binary_search(pins.begin(), pins.end(), i)) {
      full.push_back(0);
    } else {
      full.push_back(msg.vec()[src++]);
    }
  }
  Word padded = inner_.encode_burst(Word(msg.q(), std::move(full)));
  std::vector<Symbol> out(padded.vec().begin(), padded.vec().begin() + static_cast<std::ptrdiff_t>(n_));
  for (std::size_t i = n_; i < padded.size(); ++i) {
    if (padded.vec()[i] != 0) throw InternalInvariantViolation("padding positions are not zero");
  }
  return Word(msg.q(), std::move(out));
}

Word ShortenedBurstCode::decode_burst(const Word& received) const {
  if (received.size() + inner_.t() != n_) {
    throw DomainError("burst decoding expects a word of length " + std::to_string(n_ - inner_.t()));
  }
  std::vector<Symbol> padded = received.vec();
  padded.resize(padded.size() + padding(), 0);
  Word full = inner_.decode_burst(Word(received.q(), std::move(padded)));
  return Word(received.q(), std::vector<Symbol>(full.vec().begin(), full.vec().begin() + static_cast<std::ptrdiff_t>(n_)));
}

Word ShortenedBurstCode::decode_message(const Word& received) const {
  std::vector<Symbol> padded = received.vec();
  padded.resize(padded.size() + padding(), 0);
  const Word full = inner_.decode_message(Word(received.q(), std::move(padded)));
  const auto pins = pinned_indices();
  std::vector<Symbol> out;
  out.reserve(message_length());
  for (std::size_t i = 0; i < full.size(); ++i) {
    if (!std::binary_search(pins.begin(), pins.end(), i)) out.push_back(full.vec()[i]);
  }
  return Word(received.q(), std::move(out));
}

}  // namespace dvt
