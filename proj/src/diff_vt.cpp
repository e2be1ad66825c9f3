#include "dvt/diff_vt.hpp"

#include <algorithm>
#include <string>

#include "dvt/error_model.hpp"
#include "dvt/errors.hpp"
#include "dvt/sequence.hpp"

namespace dvt {

std::string_view to_string(CaseTag tag) {
  switch (tag) {
    case CaseTag::no_error: return "no_error";
    case CaseTag::case1_front: return "case1_front";
    case CaseTag::case2a: return "case2a";
    case CaseTag::case2b: return "case2b";
    case CaseTag::insertion: return "insertion";
  }
  return "unknown";
}

DiffVtCode::DiffVtCode(unsigned q, std::size_t n, std::uint64_t a, std::uint64_t modulus)
    : q_(q), n_(n), a_(a), modulus_(modulus == 0 ? static_cast<std::uint64_t>(q) * n : modulus) {
  validate_alphabet(q);
  if (n == 0) throw DomainError("code length must be positive");
  if (modulus_ % q != 0 || modulus_ / q < n) {
    throw DomainError("modulus must be q*N with N >= n, got " + std::to_string(modulus_));
  }
  if (a >= modulus_) {
    throw DomainError("residue " + std::to_string(a) + " must be below the modulus " + std::to_string(modulus_));
  }
}

bool DiffVtCode::is_member(std::span<const Symbol> w) const {
  return diff_weight(w, q_) % modulus_ == a_;
}

bool DiffVtCode::is_member(const Word& w) const {
  if (w.q() != q_ || w.size() != n_) {
    throw DomainError("expected a word of length " + std::to_string(n_) + " over q=" + std::to_string(q_));
  }
  return is_member(w.symbols());
}

DecodeReport DiffVtCode::decode_deletion(const Word& received) const {
  if (received.q() != q_ || received.size() + 1 != n_) {
    throw DomainError("deletion decoding expects a word of length " + std::to_string(n_ - 1));
  }
  const auto& r = received.vec();
  DecodeReport rep;
  std::uint64_t total = 0;
  for (Symbol v : r) total += v;
  rep.gamma = static_cast<Symbol>((a_ % q_ + q_ - total % q_) % q_);

  std::vector<Symbol> y;
  if (!r.empty()) y = diff(received).vec();
  const std::uint64_t syn = vt_weight(y) % modulus_;
  rep.delta = (a_ + modulus_ - syn) % modulus_;
  for (Symbol v : y) rep.s += v;

  const std::size_t len = y.size();  // n - 1
  std::size_t pos = 1;
  if (rep.delta <= rep.s) {
    rep.case_tag = CaseTag::case2a;
    // Largest h whose tail sum exceeds delta; if even the full sum does not,
    // the merged pair sits at the very front.
    std::uint64_t tail = 0;
    for (std::size_t h = len; h >= 1; --h) {
      tail += y[storage_index(h)];
      if (tail > rep.delta) {
        pos = h + 1;
        break;
      }
    }
  } else if (rep.delta < rep.s + q_) {
    rep.case_tag = CaseTag::case1_front;
  } else if (rep.delta == rep.s + q_) {
    throw InternalInvariantViolation("syndrome gap equals s+q, which no single deletion produces");
  } else {
    rep.case_tag = CaseTag::case2b;
    std::uint64_t tail = 0;
    for (std::size_t h = len; h >= 1; --h) {
      tail += y[storage_index(h)];
      if (q_ * static_cast<std::uint64_t>(h) + tail < rep.delta) {
        pos = h + 1;
        break;
      }
    }
  }
  // Any slot inside a run of gamma yields the same word; report the leftmost.
  while (pos > 1 && r[storage_index(pos - 1)] == rep.gamma) --pos;
  rep.position = pos;
  rep.recovered = insert_at(received, pos, rep.gamma);
  if (!is_member(rep.recovered)) {
    throw DecodeError("received word is not one deletion away from any codeword");
  }
  return rep;
}

DecodeReport DiffVtCode::decode_insertion(const Word& received) const {
  if (received.q() != q_ || received.size() != n_ + 1) {
    throw DomainError("insertion decoding expects a word of length " + std::to_string(n_ + 1));
  }
  const auto& r = received.vec();
  std::vector<Symbol> scratch(n_);
  DecodeReport rep;
  rep.case_tag = CaseTag::insertion;
  bool found = false;
  for (std::size_t pos = 1; pos <= r.size(); ++pos) {
    // Deleting inside a run gives the same word as deleting its first symbol.
    if (pos > 1 && r[storage_index(pos)] == r[storage_index(pos - 1)]) continue;
    std::copy(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(storage_index(pos)), scratch.begin());
    std::copy(r.begin() + static_cast<std::ptrdiff_t>(pos), r.end(),
              scratch.begin() + static_cast<std::ptrdiff_t>(storage_index(pos)));
    if (!is_member(std::span<const Symbol>(scratch))) continue;
    if (found) {
      throw InternalInvariantViolation("two distinct codewords explain one insertion");
    }
    found = true;
    rep.position = pos;
    rep.gamma = r[storage_index(pos)];
    rep.recovered = Word(q_, scratch);
  }
  if (!found) throw DecodeError("received word is not one insertion away from any codeword");
  return rep;
}

DecodeReport DiffVtCode::decode(const Word& received) const {
  if (received.size() == n_) {
    if (received.q() != q_ || !is_member(received)) throw DecodeError("word of full length is not a codeword");
    DecodeReport rep;
    rep.recovered = received;
    return rep;
  }
  if (received.size() + 1 == n_) return decode_deletion(received);
  if (received.size() == n_ + 1) return decode_insertion(received);
  throw DomainError("received length " + std::to_string(received.size()) + " is not within one of " +
                    std::to_string(n_));
}

void DiffVtCode::require_encoder() const {
  if (n_ < q_) throw DomainError("the encoder needs n >= q");
  if (modulus_ != static_cast<std::uint64_t>(q_) * n_) throw DomainError("the encoder needs modulus q*n");
}

std::vector<std::size_t> DiffVtCode::check_positions() const {
  require_encoder();
  const unsigned m = ceil_log(q_, n_);
  std::vector<std::size_t> out;
  for (unsigned j = 0; j < m; ++j) out.push_back(ipow(q_, j));
  out.push_back(n_);
  return out;
}

std::vector<std::size_t> complement_positions(std::size_t n, const std::vector<std::size_t>& checks) {
  std::vector<bool> taken(n + 1, false);
  for (std::size_t c : checks) taken[c] = true;
  std::vector<std::size_t> out;
  for (std::size_t i = 1; i <= n; ++i) {
    if (!taken[i]) out.push_back(i);
  }
  return out;
}

std::size_t DiffVtCode::message_length() const {
  require_encoder();
  return n_ - ceil_log(q_, n_) - 1;
}

Word DiffVtCode::encode(const Word& msg) const {
  const auto checks = check_positions();
  const auto info = complement_positions(n_, checks);
  if (msg.q() != q_ || msg.size() != info.size()) {
    throw DomainError("message must have length " + std::to_string(info.size()));
  }
  std::vector<Symbol> y(n_, 0);
  for (std::size_t i = 0; i < info.size(); ++i) y[storage_index(info[i])] = msg.vec()[i];

  const std::uint64_t shortfall = (a_ + modulus_ - vt_weight(y) % modulus_) % modulus_;
  const std::uint64_t beta = shortfall / n_;
  y[storage_index(n_)] = static_cast<Symbol>(beta);
  std::uint64_t rest = shortfall - beta * n_;
  for (std::size_t j = 0; j + 1 < checks.size(); ++j) {
    y[storage_index(checks[j])] = static_cast<Symbol>(rest % q_);
    rest /= q_;
  }
  return diff_inv(Word(q_, std::move(y)));
}

Word DiffVtCode::extract_message(const Word& codeword) const {
  if (codeword.q() != q_ || codeword.size() != n_) throw DomainError("codeword has the wrong shape");
  const auto info = complement_positions(n_, check_positions());
  const Word y = diff(codeword);
  std::vector<Symbol> msg;
  msg.reserve(info.size());
  for (std::size_t i : info) msg.push_back(y.at(i));
  return Word(q_, std::move(msg));
}

Word DiffVtCode::dec_message(const Word& received) const {
  return extract_message(decode(received).recovered);
}

std::vector<Word> DiffVtCode::enumerate() const {
  std::vector<Word> out;
  for_each_word(q_, n_, [&](std::span<const Symbol> w) {
    if (is_member(w)) out.emplace_back(q_, std::vector<Symbol>(w.begin(), w.end()));
  });
  return out;
}

std::vector<std::uint64_t> diff_vt_coset_sizes(unsigned q, std::size_t n, std::uint64_t modulus) {
  const DiffVtCode probe(q, n, 0, modulus);
  std::vector<std::uint64_t> sizes(probe.modulus(), 0);
  for_each_word(q, n, [&](std::span<const Symbol> w) { ++sizes[diff_weight(w, q) % probe.modulus()]; });
  return sizes;
}

}  // namespace dvt
