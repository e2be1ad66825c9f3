#include "dvt/burst_le2.hpp"

#include <algorithm>
#include <string>

#include "dvt/diff_svt.hpp"
#include "dvt/error_model.hpp"
#include "dvt/errors.hpp"
#include "dvt/sequence.hpp"

namespace dvt {

namespace {

// Binary words of length < 40 packed as (length << 40) | bits, first symbol
// in the most significant bit.
constexpr unsigned kLengthShift = 40;
constexpr std::size_t kMaxPackedLength = 38;

std::uint64_t pack_bits(std::span<const Symbol> w) {
  std::uint64_t v = 0;
  for (Symbol s : w) v = (v << 1) | s;
  return (static_cast<std::uint64_t>(w.size()) << kLengthShift) | v;
}

std::vector<Symbol> unpack_bits(std::uint64_t key) {
  const std::size_t len = key >> kLengthShift;
  std::vector<Symbol> out(len);
  for (std::size_t i = 0; i < len; ++i) out[i] = static_cast<Symbol>((key >> (len - 1 - i)) & 1u);
  return out;
}

// Keys of every word one burst of one or two deletions away; `insertions`
// adds the insertion side as well.
void burst_ball_keys(const std::vector<Symbol>& w, bool insertions, std::vector<std::uint64_t>& out) {
  out.clear();
  std::vector<Symbol> buf;
  for (std::size_t len = 1; len <= 2 && len <= w.size(); ++len) {
    for (std::size_t start = 0; start + len <= w.size(); ++start) {
      buf.assign(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(start));
      buf.insert(buf.end(), w.begin() + static_cast<std::ptrdiff_t>(start + len), w.end());
      out.push_back(pack_bits(buf));
    }
  }
  if (insertions) {
    for (std::size_t len = 1; len <= 2; ++len) {
      for (unsigned block = 0; block < (1u << len); ++block) {
        for (std::size_t after = 0; after <= w.size(); ++after) {
          buf.assign(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(after));
          for (std::size_t b = len; b-- > 0;) buf.push_back(static_cast<Symbol>((block >> b) & 1u));
          buf.insert(buf.end(), w.begin() + static_cast<std::ptrdiff_t>(after), w.end());
          out.push_back(pack_bits(buf));
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
}

Word interleave_halves(const Word& odd, const Word& even) {
  std::vector<Symbol> out;
  out.reserve(odd.size() + even.size());
  for (std::size_t i = 0; i < odd.size(); ++i) {
    out.push_back(odd.vec()[i]);
    if (i < even.size()) out.push_back(even.vec()[i]);
  }
  return Word(odd.q(), std::move(out));
}

// Slots of the odd and even subsequences hit by a 2-burst starting at p.
std::size_t odd_slot(std::size_t p) { return p / 2 + 1; }
std::size_t even_slot(std::size_t p) { return (p + 1) / 2; }

}  // namespace

std::pair<Symbol, Symbol> tau(Symbol symbol, unsigned q) {
  validate_alphabet(q);
  if (symbol >= q) throw DomainError("symbol outside the alphabet");
  const unsigned half = (q + 1) / 2;
  return {static_cast<Symbol>(symbol / half), static_cast<Symbol>(symbol % half)};
}

Symbol tau_inv(Symbol bit, Symbol residual, unsigned q) {
  validate_alphabet(q);
  const unsigned half = (q + 1) / 2;
  if (bit > 1 || residual >= half || bit * half + residual >= q) {
    throw DomainError("pair (" + std::to_string(bit) + ", " + std::to_string(residual) +
                      ") does not recompose to a symbol below " + std::to_string(q));
  }
  return static_cast<Symbol>(bit * half + residual);
}

TwoRowDecomposition decompose(const Word& w) {
  const unsigned q = w.q();
  std::vector<Symbol> bits;
  std::vector<Symbol> rest;
  bits.reserve(w.size());
  rest.reserve(w.size());
  for (Symbol s : w.symbols()) {
    auto [b, r] = tau(s, q);
    bits.push_back(b);
    rest.push_back(r);
  }
  return {Word(2, std::move(bits)), Word((q + 1) / 2, std::move(rest))};
}

Word recompose(const TwoRowDecomposition& rows, unsigned q) {
  if (rows.bits.size() != rows.residual.size()) throw DomainError("rows must have equal length");
  std::vector<Symbol> out(rows.bits.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = tau_inv(rows.bits.vec()[i], rows.residual.vec()[i], q);
  return Word(q, std::move(out));
}

std::shared_ptr<const CodebookFirstRowCode> CodebookFirstRowCode::build(std::size_t n, std::size_t period2_limit) {
  if (n < 2 || n > kMaxPackedLength - 2) {
    throw DomainError("codebook backend supports lengths 2.." + std::to_string(kMaxPackedLength - 2));
  }
  require_within_cap(space_size(2, n), "first-row codebook search");
  const std::size_t limit = period2_limit == 0 ? ceil_log(2, n) + 5 : period2_limit;
  std::shared_ptr<CodebookFirstRowCode> code(new CodebookFirstRowCode(n, limit));

  std::vector<Symbol> w(n);
  std::vector<std::uint64_t> keys;
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
    for (std::size_t i = 0; i < n; ++i) w[i] = static_cast<Symbol>((v >> (n - 1 - i)) & 1u);
    if (max_period2_run(w) > limit) continue;
    burst_ball_keys(w, true, keys);
    if (std::any_of(keys.begin(), keys.end(), [&](std::uint64_t k) { return code->ball_owner_.count(k) > 0; })) {
      continue;
    }
    const auto index = static_cast<std::uint32_t>(code->codewords_.size());
    code->codewords_.push_back(pack_bits(w));
    code->members_.emplace(code->codewords_.back(), index);
    for (std::uint64_t k : keys) code->ball_owner_.emplace(k, index);
  }
  return code;
}

std::size_t CodebookFirstRowCode::message_length() const {
  std::size_t bits = 0;
  while ((std::uint64_t{1} << (bits + 1)) <= codewords_.size()) ++bits;
  return bits;
}

Word CodebookFirstRowCode::codeword(std::size_t index) const { return Word(2, unpack_bits(codewords_.at(index))); }

bool CodebookFirstRowCode::is_member(const Word& w) const {
  return w.q() == 2 && w.size() == n_ && members_.count(pack_bits(w.symbols())) > 0;
}

Word CodebookFirstRowCode::encode(const Word& bits) const {
  if (bits.q() != 2 || bits.size() != message_length()) {
    throw DomainError("first-row message must be " + std::to_string(message_length()) + " bits");
  }
  std::size_t index = 0;
  for (Symbol s : bits.symbols()) index = (index << 1) | s;
  return codeword(index);
}

Word CodebookFirstRowCode::decode(const Word& received) const {
  if (received.q() != 2 || received.size() > n_ || received.size() + 2 < n_) {
    throw DomainError("first-row decoding expects a binary word of length n, n-1 or n-2");
  }
  const std::uint64_t key = pack_bits(received.symbols());
  const auto& table = received.size() == n_ ? members_ : ball_owner_;
  auto it = table.find(key);
  if (it == table.end()) throw DecodeError("first row is not within one short burst of any codeword");
  return codeword(it->second);
}

std::vector<Word> CodebookFirstRowCode::codebook() const {
  std::vector<Word> out;
  out.reserve(codewords_.size());
  for (std::size_t i = 0; i < codewords_.size(); ++i) out.push_back(codeword(i));
  return out;
}

std::pair<std::size_t, std::size_t> consistent_burst_starts(std::span<const Symbol> codeword,
                                                            std::span<const Symbol> received) {
  if (received.size() > codeword.size()) throw DomainError("received word is longer than the codeword");
  const std::size_t n = codeword.size();
  const std::size_t s = n - received.size();
  if (s == 0) return {1, 0};
  std::size_t prefix = 0;
  while (prefix < received.size() && codeword[prefix] == received[prefix]) ++prefix;
  std::size_t suffix = 0;
  while (suffix < received.size() && codeword[n - 1 - suffix] == received[received.size() - 1 - suffix]) ++suffix;
  const std::size_t last = std::min(prefix + 1, n - s + 1);
  const std::size_t first = std::max<std::size_t>(1, n - s + 1 > suffix ? n - s + 1 - suffix : 1);
  if (first > last) return {1, 0};
  return {first, last};
}

Le2Residues le2_residues(const Word& residual_row, std::size_t window) {
  Le2Residues out;
  const Word parts[3] = {residual_row, subsequence(residual_row, 1, 2), subsequence(residual_row, 2, 2)};
  for (std::size_t i = 0; i < 3; ++i) {
    auto [a, b] = diff_svt_residues(parts[i].symbols(), residual_row.q(), window);
    out.a[i] = a;
    out.b[i] = b;
  }
  return out;
}

Le2Code::Le2Code(unsigned q, std::size_t n, std::shared_ptr<const FirstRowCode> first_row, Le2Residues residues,
                 std::size_t window)
    : q_(q), n_(n), first_row_(std::move(first_row)), residues_(residues), window_(window) {
  validate_alphabet(q);
  if (q % 2 != 0) {
    throw DomainError("odd alphabets are not supported: independent rows can recompose above q-1");
  }
  if (n < 2 || n % 2 != 0) throw DomainError("code length must be even and at least 2");
  if (!first_row_ || first_row_->length() != n) throw DomainError("first-row code must have length n");
  if (window_ == 0) window_ = ceil_log(2, n) + 6;
  const unsigned half = residual_alphabet();
  if (half < 2) throw DomainError("alphabet too small for a residual row");
  // Validates the residues.
  DiffSvtCode(half, n, window_, residues_.a[0], residues_.b[0]);
  DiffSvtCode(half, n / 2, window_, residues_.a[1], residues_.b[1]);
  DiffSvtCode(half, n / 2, window_, residues_.a[2], residues_.b[2]);
}

bool Le2Code::is_member(const Word& w) const {
  if (w.q() != q_ || w.size() != n_) throw DomainError("expected a word of length " + std::to_string(n_));
  const TwoRowDecomposition rows = decompose(w);
  if (!first_row_->is_member(rows.bits)) return false;
  const Le2Residues r = le2_residues(rows.residual, window_);
  return r.a == residues_.a && r.b == residues_.b;
}

Word Le2Code::decode(const Word& received) const {
  if (received.q() != q_) throw DomainError("alphabet mismatch");
  if (received.size() == n_) {
    if (!is_member(received)) throw DecodeError("word of full length is not a codeword");
    return received;
  }
  if (received.size() + 1 != n_ && received.size() + 2 != n_) {
    throw DomainError("received length must be n, n-1 or n-2");
  }
  const std::size_t s = n_ - received.size();
  const TwoRowDecomposition rows = decompose(received);
  const Word head = first_row_->decode(rows.bits);
  const auto [lo, hi] = consistent_burst_starts(head.symbols(), rows.bits.symbols());
  if (lo > hi) throw DecodeError("first row does not explain the burst");

  const unsigned half = residual_alphabet();
  Word tail;
  if (s == 1) {
    tail = DiffSvtCode(half, n_, window_, residues_.a[0], residues_.b[0]).decode_windowed(rows.residual, lo, hi);
  } else {
    // A burst of two removes one symbol from each parity class.
    const DiffSvtCode odd(half, n_ / 2, window_, residues_.a[1], residues_.b[1]);
    const DiffSvtCode even(half, n_ / 2, window_, residues_.a[2], residues_.b[2]);
    const Word odd_part = odd.decode_windowed(subsequence(rows.residual, 1, 2), odd_slot(lo), odd_slot(hi));
    const Word even_part = even.decode_windowed(subsequence(rows.residual, 2, 2), even_slot(lo), even_slot(hi));
    tail = interleave_halves(odd_part, even_part);
  }
  return recompose({head, tail}, q_);
}

std::vector<Word> Le2Code::enumerate() const {
  const unsigned half = residual_alphabet();
  std::vector<Word> tails;
  for_each_word(half, n_, [&](std::span<const Symbol> w) {
    const Word word(half, std::vector<Symbol>(w.begin(), w.end()));
    const Le2Residues r = le2_residues(word, window_);
    if (r.a == residues_.a && r.b == residues_.b) tails.push_back(word);
  });
  const std::vector<Word> heads = first_row_->codebook();
  require_within_cap(static_cast<std::uint64_t>(heads.size()) * tails.size(), "code enumeration");
  std::vector<Word> out;
  out.reserve(heads.size() * tails.size());
  for (const Word& h : heads) {
    for (const Word& t : tails) out.push_back(recompose({h, t}, q_));
  }
  std::sort(out.begin(), out.end());
  return out;
}

MarkerCode::MarkerCode(unsigned q, std::size_t n, std::size_t window) : q_(q), n_(n), window_(window) {
  validate_alphabet(q);
  if (q <= 2) throw DomainError("the marker needs at least three distinct symbols (q > 2)");
  if (window == 0) throw DomainError("window must be positive");
  digits_ = ceil_log(q, static_cast<std::uint64_t>(q) * (window + 1));
  const std::size_t overhead = 3 * (digits_ + 2) + 7;
  if (n < overhead + 2) throw DomainError("code length too short for the marker layout");
  k_ = n - overhead;
  if (k_ % 2 != 0) throw DomainError("message length " + std::to_string(k_) + " must be even");
}

Word MarkerCode::encode(const Word& msg) const {
  if (msg.q() != q_ || msg.size() != k_) throw DomainError("message must have length " + std::to_string(k_));
  const Word parts[3] = {msg, subsequence(msg, 1, 2), subsequence(msg, 2, 2)};
  std::vector<Symbol> tail;
  for (const Word& part : parts) {
    auto [a, b] = diff_svt_residues(part.symbols(), q_, window_);
    std::vector<Symbol> u(digits_);
    for (std::size_t d = digits_; d-- > 0;) {
      u[d] = static_cast<Symbol>(a % q_);
      a /= q_;
    }
    tail.insert(tail.end(), u.begin(), u.end());
    tail.push_back(static_cast<Symbol>(b / q_));
    tail.push_back(static_cast<Symbol>(b % q_));
  }
  const Symbol last = msg.vec().back();
  const Symbol beta = tail.front();
  Symbol gamma = 0;
  while (gamma == last || gamma == beta) ++gamma;

  std::vector<Symbol> out = msg.vec();
  out.insert(out.end(), {last, last, gamma, gamma, gamma, beta, beta});
  out.insert(out.end(), tail.begin(), tail.end());
  return Word(q_, std::move(out));
}

Word MarkerCode::decode(const Word& received,
                        std::optional<std::pair<std::size_t, std::size_t>> burst_window) const {
  if (received.q() != q_) throw DomainError("alphabet mismatch");
  if (received.size() > n_ || received.size() + 2 < n_) throw DomainError("received length must be n, n-1 or n-2");
  const std::size_t s = n_ - received.size();
  const auto& r = received.vec();
  const std::size_t k = k_;
  if (s == 0) return Word(q_, std::vector<Symbol>(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(k)));

  // These three slots survive any short burst unchanged.
  const Symbol last = r[storage_index(k)];
  const Symbol gamma = r[storage_index(k + 3)];
  const Symbol beta = r[storage_index(k + 6)];
  Symbol expected_gamma = 0;
  while (expected_gamma == last || expected_gamma == beta) ++expected_gamma;
  if (gamma != expected_gamma) throw DecodeError("marker anchors are inconsistent");

  std::size_t run_start = k + 3;
  while (run_start > 1 && r[storage_index(run_start - 1)] == gamma) --run_start;
  const std::size_t shift = k + 3 - run_start;
  if (shift > s) throw DecodeError("marker run moved further than the burst length");
  if (shift < s) {
    // The burst sits at or after the marker's middle; data is intact.
    return Word(q_, std::vector<Symbol>(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(k)));
  }

  if (!burst_window) throw DomainError("the data part may be hit; a burst window is required");
  const std::size_t limit = k - s + 1;
  std::size_t lo = std::max<std::size_t>(burst_window->first, 1);
  std::size_t hi = burst_window->second;
  if (hi < lo) throw DomainError("empty burst window");
  if (hi - lo + 1 > window_) throw DomainError("burst window longer than P");
  // Bursts touching the two marker copies of the last data symbol look like
  // a burst at the end of the data.
  lo = std::min(lo, limit);
  hi = std::min(hi, limit);

  auto read_residue = [&](std::size_t offset, std::size_t count) {
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < count; ++i) v = v * q_ + r[storage_index(offset + i)];
    return v;
  };
  std::uint64_t a[3];
  std::uint64_t b[3];
  std::size_t at = k + 8 - s;
  for (std::size_t i = 0; i < 3; ++i) {
    a[i] = read_residue(at, digits_);
    b[i] = read_residue(at + digits_, 2);
    at += digits_ + 2;
  }
  const std::uint64_t modulus = static_cast<std::uint64_t>(q_) * (window_ + 1);
  for (std::size_t i = 0; i < 3; ++i) {
    if (a[i] >= modulus || b[i] > q_) throw DecodeError("residue suffix is corrupted");
  }

  const Word data(q_, std::vector<Symbol>(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(k - s)));
  if (s == 1) return DiffSvtCode(q_, k, window_, a[0], b[0]).decode_windowed(data, lo, hi);
  const Word odd = DiffSvtCode(q_, k / 2, window_, a[1], b[1])
                       .decode_windowed(subsequence(data, 1, 2), odd_slot(lo), odd_slot(hi));
  const Word even = DiffSvtCode(q_, k / 2, window_, a[2], b[2])
                        .decode_windowed(subsequence(data, 2, 2), even_slot(lo), even_slot(hi));
  return interleave_halves(odd, even);
}

}  // namespace dvt
