#include "dvt/sequence.hpp"

#include <numeric>
#include <string>

#include "dvt/errors.hpp"

namespace dvt {

namespace {

void require_nonempty(const Word& w, const char* op) {
  if (w.empty()) throw DomainError(std::string(op) + " requires a nonempty word");
}

void require_modulus(std::uint64_t modulus) {
  if (modulus == 0) throw DomainError("modulus must be positive");
}

Symbol sub_mod(Symbol a, Symbol b, unsigned q) {
  return static_cast<Symbol>((a + q - b) % q);
}

unsigned mod_inverse(unsigned p, unsigned q) {
  for (unsigned v = 1; v < q; ++v) {
    if (static_cast<std::uint64_t>(p) * v % q == 1) return v;
  }
  throw DomainError("no inverse for " + std::to_string(p) + " mod " + std::to_string(q));
}

void require_multiplier(unsigned p, unsigned q) {
  if (p == 0 || p >= q || std::gcd(p, q) != 1) {
    throw DomainError("multiplier " + std::to_string(p) + " must lie in [1, q-1] and be coprime to " +
                      std::to_string(q));
  }
}

}  // namespace

Word diff(const Word& w) { return p_transform(w, 1); }

Word diff_inv(const Word& y) { return p_transform_inv(y, 1); }

Word p_transform(const Word& w, unsigned p) {
  require_nonempty(w, "diff");
  const unsigned q = w.q();
  require_multiplier(p, q);
  const auto& x = w.vec();
  std::vector<Symbol> y(x.size());
  for (std::size_t i = 0; i + 1 < x.size(); ++i) {
    y[i] = static_cast<Symbol>(static_cast<std::uint64_t>(p) * sub_mod(x[i], x[i + 1], q) % q);
  }
  y.back() = static_cast<Symbol>(static_cast<std::uint64_t>(p) * x.back() % q);
  return Word(q, std::move(y));
}

Word p_transform_inv(const Word& y, unsigned p) {
  require_nonempty(y, "inverse diff");
  const unsigned q = y.q();
  require_multiplier(p, q);
  const unsigned inv = mod_inverse(p, q);
  const auto& d = y.vec();
  std::vector<Symbol> x(d.size());
  std::uint64_t acc = 0;
  for (std::size_t i = d.size(); i-- > 0;) {
    acc = (acc + static_cast<std::uint64_t>(inv) * d[i]) % q;
    x[i] = static_cast<Symbol>(acc);
  }
  return Word(q, std::move(x));
}

std::uint64_t vt_weight(std::span<const Symbol> w) {
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < w.size(); ++i) total += (i + 1) * static_cast<std::uint64_t>(w[i]);
  return total;
}

std::uint64_t vt_syndrome(const Word& w, std::uint64_t modulus) {
  require_modulus(modulus);
  return vt_weight(w.symbols()) % modulus;
}

std::uint64_t symbol_sum(const Word& w, std::uint64_t modulus) {
  require_modulus(modulus);
  std::uint64_t total = 0;
  for (Symbol s : w.symbols()) total += s;
  return total % modulus;
}

Word signature(const Word& w) {
  if (w.size() < 2) throw DomainError("signature requires length >= 2");
  const auto& x = w.vec();
  std::vector<Symbol> bits(x.size() - 1);
  for (std::size_t i = 0; i + 1 < x.size(); ++i) bits[i] = x[i + 1] >= x[i] ? 1 : 0;
  return Word(2, std::move(bits));
}

std::uint64_t diff_weight(std::span<const Symbol> w, unsigned q) {
  if (w.empty()) return 0;
  std::uint64_t total = 0;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) total += (i + 1) * static_cast<std::uint64_t>(sub_mod(w[i], w[i + 1], q));
  return total + w.size() * static_cast<std::uint64_t>(w.back());
}

std::uint64_t diff_total(std::span<const Symbol> w, unsigned q) {
  if (w.empty()) return 0;
  std::uint64_t total = w.back();
  for (std::size_t i = 0; i + 1 < w.size(); ++i) total += sub_mod(w[i], w[i + 1], q);
  return total;
}

std::size_t max_run(std::span<const Symbol> w) {
  std::size_t best = 0;
  std::size_t run = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    run = (i > 0 && w[i] == w[i - 1]) ? run + 1 : 1;
    if (run > best) best = run;
  }
  return best;
}

std::size_t max_period2_run(std::span<const Symbol> w) {
  if (w.size() <= 2) return w.size();
  std::size_t best = 2;
  std::size_t run = 2;
  for (std::size_t i = 2; i < w.size(); ++i) {
    run = (w[i] == w[i - 2]) ? run + 1 : 2;
    if (run > best) best = run;
  }
  return best;
}

Word subsequence(const Word& w, std::size_t i, std::size_t s) {
  if (s == 0 || i == 0 || i > s) throw DomainError("subsequence requires 1 <= i <= s");
  std::vector<Symbol> out;
  for (std::size_t pos = i; pos <= w.size(); pos += s) out.push_back(w.vec()[storage_index(pos)]);
  return Word(w.q(), std::move(out));
}

unsigned ceil_log(std::uint64_t base, std::uint64_t value) {
  if (base < 2 || value == 0) throw DomainError("ceil_log requires base >= 2 and value >= 1");
  unsigned m = 0;
  std::uint64_t power = 1;
  while (power < value) {
    power *= base;
    ++m;
  }
  return m;
}

std::uint64_t ipow(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

Word insert_at(const Word& w, std::size_t position, Symbol symbol) {
  if (position == 0 || position > w.size() + 1) throw DomainError("insertion position out of range");
  std::vector<Symbol> out = w.vec();
  out.insert(out.begin() + static_cast<std::ptrdiff_t>(storage_index(position)), symbol);
  return Word(w.q(), std::move(out));
}

Word erase_at(const Word& w, std::size_t position) {
  if (position == 0 || position > w.size()) throw DomainError("deletion position out of range");
  std::vector<Symbol> out = w.vec();
  out.erase(out.begin() + static_cast<std::ptrdiff_t>(storage_index(position)));
  return Word(w.q(), std::move(out));
}

}  // namespace dvt
