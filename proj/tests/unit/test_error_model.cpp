#include <cstdlib>
#include <random>
#include <set>

#include "doctest.h"

#include "dvt/diff_vt.hpp"
#include "dvt/error_model.hpp"
#include "dvt/errors.hpp"
#include "oracle.hpp"

using dvt::BallMode;
using dvt::ErrorSpec;
using dvt::Word;

namespace {

Word w(const char* digits, unsigned q) { return Word::parse(digits, q); }

std::set<oracle::Seq> as_set(const std::vector<Word>& words) {
  std::set<oracle::Seq> out;
  for (const Word& x : words) out.insert(oracle::Seq(x.vec().begin(), x.vec().end()));
  return out;
}

}  // namespace

TEST_CASE("applying bursts") {
  CHECK(dvt::apply(w("0211301", 4), ErrorSpec::deletion(2, 1)).str() == "011301");
  CHECK(dvt::apply(w("0103112013", 4), ErrorSpec::deletion(8, 1)).str() == "010311213");
  CHECK(dvt::apply(w("0211301", 4), ErrorSpec::deletion(1, 7)).empty());
  CHECK(dvt::apply(w("012", 3), ErrorSpec::insertion(0, {2, 2})).str() == "22012");
  CHECK(dvt::apply(w("012", 3), ErrorSpec::insertion(3, {1})).str() == "0121");
  CHECK_THROWS_AS(dvt::apply(w("012", 3), ErrorSpec::deletion(3, 2)), dvt::DomainError);
  CHECK_THROWS_AS(dvt::apply(w("012", 3), ErrorSpec::deletion(0, 1)), dvt::DomainError);
  CHECK_THROWS_AS(dvt::apply(w("012", 3), ErrorSpec::insertion(4, {1})), dvt::DomainError);
  CHECK_THROWS_AS(dvt::apply(w("012", 3), ErrorSpec::insertion(1, {3})), dvt::DomainError);
}

TEST_CASE("single-error ball of a short word") {
  const auto ball = dvt::error_ball(w("00", 2), 1, BallMode::exact);
  std::vector<std::string> got;
  for (const Word& x : ball) got.push_back(x.str());
  CHECK(got == std::vector<std::string>{"0", "000", "001", "010", "100"});
}

TEST_CASE("deletion side has one member per run") {
  for (const auto& x : oracle::space(3, 6)) {
    Word word(3, std::vector<dvt::Symbol>(x.begin(), x.end()));
    REQUIRE(dvt::deletion_ball(word, 1, BallMode::exact).size() == oracle::runs(x));
  }
}

TEST_CASE("balls agree with an independent enumeration") {
  for (std::size_t t = 1; t <= 2; ++t) {
    for (bool at_most : {false, true}) {
      for (const auto& x : oracle::space(3, 5)) {
        Word word(3, std::vector<dvt::Symbol>(x.begin(), x.end()));
        const auto ball = dvt::error_ball(word, t, at_most ? BallMode::at_most : BallMode::exact);
        REQUIRE(std::is_sorted(ball.begin(), ball.end()));
        REQUIRE(as_set(ball) == oracle::ball(x, 3, t, at_most));
        REQUIRE(as_set(ball).size() == ball.size());
      }
    }
  }
}

TEST_CASE("deletion results are subsequences of the right length") {
  const Word x = w("0120210", 3);
  for (std::size_t t = 1; t <= 3; ++t) {
    const auto dels = dvt::deletion_ball(x, t, BallMode::exact);
    CHECK(dels.size() <= x.size() - t + 1);
    for (const Word& y : dels) {
      REQUIRE(y.size() == x.size() - t);
      std::size_t j = 0;
      for (std::size_t i = 0; i < x.size() && j < y.size(); ++i) {
        if (x.vec()[i] == y.vec()[j]) ++j;
      }
      REQUIRE(j == y.size());
    }
  }
}

TEST_CASE("confusability") {
  // Same prefix and suffix around 213 versus 132.
  CHECK(dvt::confusable(w("02130", 4), w("01320", 4), 1, BallMode::exact));
  CHECK_FALSE(dvt::confusable(w("0", 4), w("0123", 4), 1, BallMode::exact));
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> sym(0, 2);
  for (int trial = 0; trial < 300; ++trial) {
    oracle::Seq a(5), b(5);
    for (auto& v : a) v = sym(rng);
    for (auto& v : b) v = sym(rng);
    if (a == b) continue;
    Word u(3, std::vector<dvt::Symbol>(a.begin(), a.end()));
    Word v(3, std::vector<dvt::Symbol>(b.begin(), b.end()));
    const auto ba = oracle::ball(a, 3, 1, false);
    const auto bb = oracle::ball(b, 3, 1, false);
    bool meet = false;
    for (const auto& s : ba) meet = meet || bb.count(s) > 0;
    REQUIRE(dvt::confusable(u, v, 1, BallMode::exact) == meet);
    REQUIRE(dvt::confusable(v, u, 1, BallMode::exact) == meet);
  }
}

TEST_CASE("deletion and insertion are dual at the ball level") {
  for (const auto& x : oracle::space(3, 4)) {
    Word u(3, std::vector<dvt::Symbol>(x.begin(), x.end()));
    for (const Word& y : dvt::deletion_ball(u, 1, BallMode::exact)) {
      const auto up = dvt::error_ball(y, 1, BallMode::exact);
      REQUIRE(std::binary_search(up.begin(), up.end(), u));
    }
  }
}

TEST_CASE("code_is_correcting") {
  const std::vector<Word> single{w("0101", 2)};
  CHECK(dvt::code_is_correcting(single, 1, BallMode::exact));
  CHECK_FALSE(dvt::code_is_correcting(dvt::all_words(2, 3), 1, BallMode::exact));
  CHECK(dvt::code_is_correcting(dvt::DiffVtCode(3, 6, 0).enumerate(), 1, BallMode::exact));
  for (std::uint64_t a = 0; a < 8; ++a) {
    REQUIRE(dvt::code_is_correcting(dvt::DiffVtCode(2, 4, a).enumerate(), 1, BallMode::exact));
  }
}

TEST_CASE("enumeration cap") {
  CHECK(dvt::all_words(2, 3).size() == 8);
  CHECK(dvt::all_words(3, 0).size() == 1);
  setenv("DVT_ENUM_CAP", "100", 1);
  CHECK(dvt::enumeration_cap() == 100);
  CHECK_THROWS_AS(dvt::all_words(2, 7), dvt::CapacityError);
  CHECK_THROWS_AS(dvt::error_ball(Word::zeros(4, 20), 2, BallMode::exact), dvt::CapacityError);
  setenv("DVT_ENUM_CAP", "zero", 1);
  CHECK_THROWS_AS(dvt::enumeration_cap(), dvt::DomainError);
  unsetenv("DVT_ENUM_CAP");
  CHECK(dvt::enumeration_cap() == 10'000'000);
}
