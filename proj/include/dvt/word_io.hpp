#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "dvt/word.hpp"

namespace dvt {

/// Word files hold one word per line. Alphabets up to 36 use one base-36
/// digit per symbol; larger alphabets start with a "#q=<q>" line and use
/// space-separated decimals.
void write_words(std::ostream& out, const std::vector<Word>& words, unsigned q);
std::vector<Word> read_words(std::istream& in, unsigned q);

std::string format_word(const Word& w);
Word parse_word(const std::string& line, unsigned q);

std::vector<Word> load_words(const std::string& path, unsigned q);
void save_words(const std::string& path, const std::vector<Word>& words, unsigned q);

}  // namespace dvt
