#include "dvt/rll.hpp"

#include <string>
#include <vector>

#include "dvt/errors.hpp"
#include "dvt/sequence.hpp"

namespace dvt {

namespace {

Symbol smallest_other(Symbol avoid) { return avoid == 0 ? 1 : 0; }

}  // namespace

RllCodec::RllCodec(unsigned q, std::size_t n) : q_(q), n_(n) {
  validate_alphabet(q);
  if (n < 2) throw DomainError("run-length limiting needs n >= 2");
  digits_ = ceil_log(q, n);
  if (n < static_cast<std::size_t>(q) * q || n < 2 * record_length()) {
    throw DomainError("run-length limiting needs n >= q^2 and n >= 2(ceil(log_q n)+4); got n=" +
                      std::to_string(n));
  }
}

Word RllCodec::encode(const Word& msg) const {
  if (msg.q() != q_ || msg.size() + 1 != n_) {
    throw DomainError("run-length limiting expects a message of length " + std::to_string(n_ - 1));
  }
  const std::size_t cut = record_length();
  std::vector<Symbol> data = msg.vec();
  struct Cut {
    std::size_t start;
    Symbol symbol;
  };
  std::vector<Cut> cuts;

  // Every cut removes `cut` symbols and adds a record of the same size, so
  // the data part strictly shrinks and the loop ends.
  for (;;) {
    std::size_t found = data.size();
    for (std::size_t i = 0, j = 0; i < data.size(); i = j) {
      while (j < data.size() && data[j] == data[i]) ++j;
      if (j - i >= cut) {
        found = i;
        break;
      }
    }
    if (found == data.size()) break;
    cuts.push_back({found, data[found]});
    data.erase(data.begin() + static_cast<std::ptrdiff_t>(found),
               data.begin() + static_cast<std::ptrdiff_t>(found + cut));
  }

  std::vector<Symbol> out = std::move(data);
  out.reserve(n_);
  for (std::size_t r = 0; r < cuts.size(); ++r) {
    out.push_back(out.empty() ? Symbol{0} : smallest_other(out.back()));
    std::size_t pos = cuts[r].start;
    std::vector<Symbol> digits(digits_);
    for (std::size_t d = digits_; d-- > 0;) {
      digits[d] = static_cast<Symbol>(pos % q_);
      pos /= q_;
    }
    out.insert(out.end(), digits.begin(), digits.end());
    out.push_back(cuts[r].symbol);
    out.push_back(smallest_other(cuts[r].symbol));
    out.push_back(r > 0 ? 1 : 0);
  }
  if (cuts.empty()) {
    out.push_back(out.empty() ? Symbol{0} : static_cast<Symbol>((out.back() + 1) % q_));
  } else {
    out.push_back(out.back());
  }
  return Word(q_, std::move(out));
}

Word RllCodec::decode(const Word& codeword) const {
  if (codeword.q() != q_ || codeword.size() != n_) {
    throw DomainError("run-length decoding expects a word of length " + std::to_string(n_));
  }
  std::vector<Symbol> body(codeword.vec().begin(), codeword.vec().end() - 1);
  const bool has_records = body.size() >= 1 && codeword.vec().back() == body.back();
  if (!has_records) {
    if (!body.empty() && codeword.vec().back() != (body.back() + 1) % q_) {
      throw DecodeError("malformed run-length terminator");
    }
    return Word(q_, std::move(body));
  }

  const std::size_t cut = record_length();
  struct Record {
    std::size_t pos;
    Symbol symbol;
  };
  // Parse the whole chain first: separators were chosen against the body as
  // it stood before any run was restored.
  std::vector<Record> records;
  std::size_t end = body.size();
  for (bool more = true; more;) {
    // Each record stands for one cut, and a cut needs `cut` message symbols.
    if (records.size() >= (n_ - 1) / cut) throw DecodeError("too many run-length records");
    if (end < cut) throw DecodeError("truncated run-length record");
    const std::size_t base = end - cut;
    if (body[base] != (base == 0 ? Symbol{0} : smallest_other(body[base - 1]))) {
      throw DecodeError("malformed run-length record separator");
    }
    std::size_t pos = 0;
    for (std::size_t d = 0; d < digits_; ++d) pos = pos * q_ + body[base + 1 + d];
    const Symbol symbol = body[base + 1 + digits_];
    const Symbol flag = body[base + cut - 1];
    if (body[base + cut - 2] != smallest_other(symbol) || flag > 1) {
      throw DecodeError("malformed run-length record");
    }
    records.push_back({pos, symbol});
    more = flag == 1;
    end = base;
  }
  body.resize(end);
  for (const Record& rec : records) {
    if (rec.pos > body.size()) throw DecodeError("run-length record points past the data");
    body.insert(body.begin() + static_cast<std::ptrdiff_t>(rec.pos), cut, rec.symbol);
  }
  if (body.size() + 1 != n_) throw DecodeError("run-length records do not restore the message length");
  return Word(q_, std::move(body));
}

std::size_t composite_run_bound(unsigned q, std::size_t n) { return 2 * ceil_log(q, n) + 5; }

bool check_composite_bound(const Word& cw, unsigned q, std::size_t n) {
  return max_run(cw) <= composite_run_bound(q, n);
}

}  // namespace dvt
