#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "dvt/word.hpp"

namespace dvt {

enum class ErrorKind { deletion, insertion };

/// One burst. Deletions remove positions start..start+length-1; insertions
/// splice `inserted` in after position `start` (0 means in front).
struct ErrorSpec {
  ErrorKind kind = ErrorKind::deletion;
  std::size_t start = 1;
  std::size_t length = 1;
  std::vector<Symbol> inserted;

  static ErrorSpec deletion(std::size_t start, std::size_t length = 1);
  static ErrorSpec insertion(std::size_t after, std::vector<Symbol> symbols);
};

Word apply(const Word& w, const ErrorSpec& e);

enum class BallMode { exact, at_most };

/// Every word reachable by one burst of deletions or insertions, sorted.
/// The word itself is never included.
std::vector<Word> error_ball(const Word& w, std::size_t t, BallMode mode);

/// Only the deletion half of the ball (also sorted and deduplicated).
std::vector<Word> deletion_ball(const Word& w, std::size_t t, BallMode mode);

bool confusable(const Word& u, const Word& v, std::size_t t, BallMode mode);

/// True iff no two distinct members have intersecting error balls.
bool code_is_correcting(std::span<const Word> code, std::size_t t, BallMode mode);

/// Upper bound on the number of items any exhaustive routine may visit.
/// Defaults to 10^7; the DVT_ENUM_CAP environment variable overrides it.
std::uint64_t enumeration_cap();

/// Throws CapacityError when `count` exceeds the cap.
void require_within_cap(std::uint64_t count, const char* what);

/// Number of words of length n over q symbols, saturating at UINT64_MAX.
std::uint64_t space_size(unsigned q, std::size_t n);

/// Visits every word of length n in lexicographic order. The span is only
/// valid for the duration of the callback.
void for_each_word(unsigned q, std::size_t n, const std::function<void(std::span<const Symbol>)>& visit);

std::vector<Word> all_words(unsigned q, std::size_t n);

}  // namespace dvt
