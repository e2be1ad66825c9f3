#include "dvt/word_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "dvt/errors.hpp"

namespace dvt {

namespace {

constexpr unsigned kDigitAlphabet = 36;

std::string header(unsigned q) { return "#q=" + std::to_string(q); }

}  // namespace

std::string format_word(const Word& w) {
  if (w.q() <= kDigitAlphabet) return w.str();
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0) out.push_back(' ');
    out += std::to_string(w.vec()[i]);
  }
  return out;
}

Word parse_word(const std::string& line, unsigned q) {
  validate_alphabet(q);
  if (q <= kDigitAlphabet) return Word::parse(line, q);
  std::vector<Symbol> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == ' ') {
      ++i;
      continue;
    }
    unsigned v = 0;
    auto [end, ec] = std::from_chars(line.data() + i, line.data() + line.size(), v);
    if (ec != std::errc() || (end != line.data() + line.size() && *end != ' ')) {
      throw DomainError("malformed symbol in '" + line + "'");
    }
    if (v >= q) throw DomainError("symbol " + std::to_string(v) + " outside the alphabet of size " + std::to_string(q));
    out.push_back(static_cast<Symbol>(v));
    i = static_cast<std::size_t>(end - line.data());
  }
  return Word(q, std::move(out));
}

void write_words(std::ostream& out, const std::vector<Word>& words, unsigned q) {
  if (q > kDigitAlphabet) out << header(q) << '\n';
  for (const Word& w : words) {
    if (w.q() != q) throw DomainError("word alphabet does not match the file alphabet");
    out << format_word(w) << '\n';
  }
}

std::vector<Word> read_words(std::istream& in, unsigned q) {
  validate_alphabet(q);
  std::vector<Word> out;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (first && line.rfind("#q=", 0) == 0) {
      first = false;
      if (line != header(q)) throw DomainError("file header " + line + " does not match q=" + std::to_string(q));
      continue;
    }
    if (first && q > kDigitAlphabet) throw DomainError("files for q > 36 must start with " + header(q));
    first = false;
    out.push_back(parse_word(line, q));
  }
  return out;
}

std::vector<Word> load_words(const std::string& path, unsigned q) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open " + path);
  return read_words(in, q);
}

void save_words(const std::string& path, const std::vector<Word>& words, unsigned q) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DomainError("cannot write " + path);
  write_words(out, words, q);
}

}  // namespace dvt
