// dvtcodes: encode, decode, corrupt and verify from the command line.
// Exit codes: 0 ok, 1 property failure, 2 bad input or cap, 3 decode failure.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "dvt/burst_fixed.hpp"
#include "dvt/burst_le2.hpp"
#include "dvt/diff_svt.hpp"
#include "dvt/diff_vt.hpp"
#include "dvt/error_model.hpp"
#include "dvt/errors.hpp"
#include "dvt/sequence.hpp"
#include "dvt/tenengolts.hpp"
#include "dvt/word_io.hpp"

using json = nlohmann::ordered_json;
using dvt::Word;

namespace {

constexpr std::uint64_t kDefaultSeed = 0x5eed5eedULL;

struct CodeArgs {
  std::string code = "diffvt";
  unsigned q = 2;
  std::size_t n = 0;
  std::uint64_t a = 0;
  std::uint64_t b = 0;
  std::size_t window = 0;
  std::size_t t = 2;
  std::uint64_t a1 = 0;
  std::uint64_t a2 = 0;
};

struct IoArgs {
  std::string in;
  std::string out;
};

void add_code_options(CLI::App* cmd, CodeArgs& c) {
  cmd->add_option("--code", c.code, "diffvt, diffsvt, burst or marker")
      ->check(CLI::IsMember({"diffvt", "diffsvt", "burst", "marker"}));
  cmd->add_option("--q", c.q, "alphabet size")->required();
  cmd->add_option("--n", c.n, "code length")->required();
  cmd->add_option("--a", c.a, "residue a (diffvt, diffsvt)");
  cmd->add_option("--b", c.b, "residue b (diffsvt, burst)");
  cmd->add_option("--P", c.window, "window length (diffsvt, marker)");
  cmd->add_option("--t", c.t, "burst length (burst)");
  cmd->add_option("--a1", c.a1, "first-row residue (burst)");
  cmd->add_option("--a2", c.a2, "other-row residue (burst)");
}

json params(const CodeArgs& c) {
  json j;
  j["code"] = c.code;
  j["q"] = c.q;
  j["n"] = c.n;
  if (c.code == "diffvt") j["a"] = c.a;
  if (c.code == "diffsvt") {
    j["P"] = c.window;
    j["a"] = c.a;
    j["b"] = c.b;
  }
  if (c.code == "burst") {
    j["t"] = c.t;
    j["a1"] = c.a1;
    j["a2"] = c.a2;
    j["b"] = c.b;
  }
  if (c.code == "marker") j["P"] = c.window;
  return j;
}

std::vector<Word> read_input(const std::string& path, unsigned q) {
  if (path.empty() || path == "-") return dvt::read_words(std::cin, q);
  return dvt::load_words(path, q);
}

void write_output(const std::string& path, const std::vector<Word>& words, unsigned q) {
  if (!path.empty()) dvt::save_words(path, words, q);
}

void emit(const json& report) { std::cout << report.dump(2) << "\n"; }

// --- encode / decode ------------------------------------------------------

int run_encode(const CodeArgs& c, const IoArgs& io) {
  json report = params(c);
  std::vector<Word> out;
  json items = json::array();
  for (const Word& msg : read_input(io.in, c.q)) {
    Word cw;
    if (c.code == "diffvt") {
      cw = dvt::DiffVtCode(c.q, c.n, c.a).encode(msg);
    } else if (c.code == "diffsvt") {
      cw = dvt::DiffSvtCode(c.q, c.n, c.window, c.a, c.b).encode(msg);
    } else if (c.code == "burst") {
      cw = dvt::ShortenedBurstCode(c.q, c.n, c.t, c.a1, c.a2, c.b).encode_burst(msg);
    } else {
      cw = dvt::MarkerCode(c.q, c.n, c.window).encode(msg);
    }
    items.push_back({{"message", dvt::format_word(msg)}, {"codeword", dvt::format_word(cw)}});
    out.push_back(std::move(cw));
  }
  report["words"] = std::move(items);
  write_output(io.out, out, c.q);
  emit(report);
  return 0;
}

int run_decode(const CodeArgs& c, const IoArgs& io, std::optional<std::size_t> lo, std::optional<std::size_t> hi) {
  json report = params(c);
  std::vector<Word> out;
  json items = json::array();
  std::optional<std::pair<std::size_t, std::size_t>> where;
  if (lo && hi) where = std::make_pair(*lo, *hi);
  if (lo.has_value() != hi.has_value()) throw dvt::DomainError("--lo and --hi go together");

  for (const Word& r : read_input(io.in, c.q)) {
    json item{{"received", dvt::format_word(r)}};
    Word msg;
    if (c.code == "diffvt") {
      const dvt::DiffVtCode code(c.q, c.n, c.a);
      const auto rep = code.decode(r);
      item["case_tag"] = std::string(dvt::to_string(rep.case_tag));
      if (rep.case_tag != dvt::CaseTag::no_error && rep.case_tag != dvt::CaseTag::insertion) {
        item["delta"] = rep.delta;
        item["s"] = rep.s;
        item["gamma"] = rep.gamma;
      }
      if (rep.case_tag != dvt::CaseTag::no_error) item["position"] = rep.position;
      item["codeword"] = dvt::format_word(rep.recovered);
      msg = code.extract_message(rep.recovered);
    } else if (c.code == "diffsvt") {
      const dvt::DiffSvtCode code(c.q, c.n, c.window, c.a, c.b);
      Word cw = r;
      if (r.size() + 1 == c.n) {
        if (!where) throw dvt::DomainError("diffsvt decoding needs --lo and --hi");
        cw = code.decode_windowed(r, where->first, where->second);
      } else if (!code.is_member(r)) {
        throw dvt::DecodeError("received word is not a codeword");
      }
      item["codeword"] = dvt::format_word(cw);
      msg = code.extract_message(cw);
    } else if (c.code == "burst") {
      const dvt::ShortenedBurstCode code(c.q, c.n, c.t, c.a1, c.a2, c.b);
      item["codeword"] = dvt::format_word(code.decode_burst(r));
      msg = code.decode_message(r);
    } else {
      msg = dvt::MarkerCode(c.q, c.n, c.window).decode(r, where);
    }
    item["message"] = dvt::format_word(msg);
    items.push_back(std::move(item));
    out.push_back(std::move(msg));
  }
  report["words"] = std::move(items);
  write_output(io.out, out, c.q);
  emit(report);
  return 0;
}

// --- corrupt --------------------------------------------------------------

struct CorruptArgs {
  unsigned q = 2;
  std::string kind = "del";
  std::size_t start = 0;
  std::size_t len = 1;
  std::string symbols;
  bool random = false;
  std::uint64_t seed = kDefaultSeed;
};

int run_corrupt(const CorruptArgs& c, const IoArgs& io) {
  std::mt19937_64 rng(c.seed);
  std::vector<Word> out;
  json items = json::array();
  for (const Word& w : read_input(io.in, c.q)) {
    std::size_t start = c.start;
    if (c.random) {
      const std::size_t slots = c.kind == "del" ? (w.size() >= c.len ? w.size() - c.len + 1 : 0) : w.size() + 1;
      if (slots == 0) throw dvt::DomainError("word shorter than the burst");
      start = c.kind == "del" ? 1 + rng() % slots : rng() % slots;
    }
    dvt::ErrorSpec e;
    if (c.kind == "del") {
      if (!c.random && start == 0) throw dvt::DomainError("--start is 1-based for deletions");
      e = dvt::ErrorSpec::deletion(start, c.len);
    } else {
      std::vector<dvt::Symbol> block;
      if (c.symbols.empty()) {
        for (std::size_t i = 0; i < c.len; ++i) block.push_back(static_cast<dvt::Symbol>(rng() % c.q));
      } else {
        block = dvt::parse_word(c.symbols, c.q).vec();
      }
      e = dvt::ErrorSpec::insertion(start, std::move(block));
    }
    Word r = dvt::apply(w, e);
    json item{{"input", dvt::format_word(w)}, {"kind", c.kind}, {"start", start}, {"length", e.kind == dvt::ErrorKind::deletion ? e.length : e.inserted.size()}};
    item["output"] = dvt::format_word(r);
    items.push_back(std::move(item));
    out.push_back(std::move(r));
  }
  json report{{"q", c.q}, {"seed", c.seed}, {"words", std::move(items)}};
  write_output(io.out, out, c.q);
  emit(report);
  return 0;
}

// --- verify ---------------------------------------------------------------

struct VerifyArgs {
  std::string suite;
  unsigned q = 2;
  std::size_t n = 8;
  std::size_t t = 2;
  std::size_t window = 2;
  std::size_t limit = 3;
  std::size_t samples = 100;
  std::uint64_t seed = kDefaultSeed;
  std::string csv;
};

struct Tally {
  std::uint64_t checks = 0;
  std::uint64_t failures = 0;
  void record(bool ok) {
    ++checks;
    if (!ok) ++failures;
  }
  template <class F>
  void attempt(F&& f) {
    bool ok = false;
    try {
      ok = f();
    } catch (const dvt::DecodeError&) {
    }
    record(ok);
  }
};

void write_csv(const std::string& path, const std::string& header, const std::vector<std::string>& rows) {
  if (path.empty()) return;
  std::ofstream f(path);
  if (!f) throw dvt::DomainError("cannot write " + path);
  f << header << "\n";
  for (const auto& r : rows) f << r << "\n";
}

json verify_diffvt(const VerifyArgs& v, Tally& tally) {
  dvt::require_within_cap(dvt::space_size(v.q, v.n), "verify diffvt");
  const auto sizes = dvt::diff_vt_coset_sizes(v.q, v.n);
  std::vector<dvt::DiffVtCode> codes;
  for (std::uint64_t a = 0; a < sizes.size(); ++a) codes.emplace_back(v.q, v.n, a);
  dvt::for_each_word(v.q, v.n, [&](std::span<const dvt::Symbol> s) {
    const Word c(v.q, std::vector<dvt::Symbol>(s.begin(), s.end()));
    const auto& code = codes[dvt::vt_syndrome(dvt::diff(c), v.q * v.n)];
    for (std::size_t i = 1; i <= v.n; ++i) tally.attempt([&] { return code.decode(dvt::erase_at(c, i)).recovered == c; });
    for (std::size_t i = 1; i <= v.n + 1; ++i) {
      for (dvt::Symbol x = 0; x < v.q; ++x) {
        tally.attempt([&] { return code.decode(dvt::insert_at(c, i, x)).recovered == c; });
      }
    }
  });

  // Encoder round trips, where the length allows one.
  std::mt19937_64 rng(v.seed);
  json encoder = nullptr;
  try {
    const dvt::DiffVtCode code(v.q, v.n, rng() % (v.q * v.n));
    const std::size_t k = code.message_length();
    for (std::size_t i = 0; i < v.samples; ++i) {
      std::vector<dvt::Symbol> m(k);
      for (auto& x : m) x = static_cast<dvt::Symbol>(rng() % v.q);
      const Word msg(v.q, m);
      tally.attempt([&] {
        const Word cw = code.encode(msg);
        return code.is_member(cw) && code.extract_message(cw) == msg;
      });
    }
    encoder = {{"message_length", k}, {"samples", v.samples}};
  } catch (const dvt::DomainError&) {
  }

  const auto best = dvt::best_coset_size(v.q, v.n, dvt::CodeFamily::diff_vt);
  std::vector<std::string> rows;
  for (std::size_t a = 0; a < sizes.size(); ++a) rows.push_back(std::to_string(a) + "," + std::to_string(sizes[a]));
  write_csv(v.csv, "a,size", rows);
  return {{"best_a", best.a}, {"max_coset", best.size}, {"pigeonhole", best.pigeonhole}, {"encoder", encoder}};
}

json verify_diffsvt(const VerifyArgs& v, Tally& tally) {
  dvt::require_within_cap(dvt::space_size(v.q, v.n) * v.n * v.window, "verify diffsvt");
  const std::uint64_t span = static_cast<std::uint64_t>(v.q) * (v.window + 1);
  std::map<std::pair<std::uint64_t, std::uint64_t>, dvt::DiffSvtCode> codes;
  std::map<std::pair<std::uint64_t, std::uint64_t>, std::uint64_t> sizes;
  for (std::uint64_t a = 0; a < span; ++a) {
    for (std::uint64_t b = 0; b <= v.q; ++b) {
      codes.emplace(std::make_pair(a, b), dvt::DiffSvtCode(v.q, v.n, v.window, a, b));
      sizes[{a, b}] = 0;
    }
  }
  dvt::for_each_word(v.q, v.n, [&](std::span<const dvt::Symbol> s) {
    const Word c(v.q, std::vector<dvt::Symbol>(s.begin(), s.end()));
    const auto key = dvt::diff_svt_residues(s, v.q, v.window);
    ++sizes[key];
    const auto& code = codes.at(key);
    for (std::size_t d = 1; d <= v.n; ++d) {
      const Word r = dvt::erase_at(c, d);
      for (std::size_t lo = d > v.window ? d - v.window + 1 : 1; lo <= d; ++lo) {
        const std::size_t hi = std::min(v.n, lo + v.window - 1);
        tally.attempt([&] { return code.decode_windowed(r, lo, hi) == c; });
      }
    }
  });
  std::pair<std::uint64_t, std::uint64_t> best{0, 0};
  std::vector<std::string> rows;
  for (const auto& [key, size] : sizes) {
    if (size > sizes[best]) best = key;
    rows.push_back(std::to_string(key.first) + "," + std::to_string(key.second) + "," + std::to_string(size));
  }
  write_csv(v.csv, "a,b,size", rows);
  return {{"P", v.window}, {"best_a", best.first}, {"best_b", best.second}, {"max_coset", sizes[best]}};
}

json verify_burst_t(const VerifyArgs& v, Tally& tally) {
  dvt::require_within_cap(dvt::space_size(v.q, v.n), "verify burst-t");
  if (v.t == 0 || v.n % v.t != 0) throw dvt::DomainError("burst-t needs t dividing n");
  const std::size_t row = v.n / v.t;
  const std::size_t window = v.limit + 1;
  std::uint64_t words = 0;
  dvt::for_each_word(v.q, v.n, [&](std::span<const dvt::Symbol> s) {
    const Word x(v.q, std::vector<dvt::Symbol>(s.begin(), s.end()));
    const auto arr = dvt::to_array(x, v.t);
    if (dvt::max_run(arr.rows[0]) > v.limit) return;
    const std::uint64_t a1 = dvt::vt_syndrome(dvt::diff(arr.rows[0]), v.q * row);
    // Later rows share one residue pair; use row 2's and skip words that disagree.
    std::pair<std::uint64_t, std::uint64_t> ab{0, 0};
    if (v.t > 1) {
      ab = dvt::diff_svt_residues(arr.rows[1].symbols(), v.q, window);
      for (std::size_t i = 2; i < v.t; ++i) {
        if (dvt::diff_svt_residues(arr.rows[i].symbols(), v.q, window) != ab) return;
      }
    }
    const auto code = dvt::BurstCode::with_limits(v.q, v.n, v.t, a1, ab.first, ab.second, v.limit, window);
    for (std::size_t start = 1; start + v.t - 1 <= v.n; ++start) {
      tally.attempt([&] { return code.decode_burst(dvt::apply(x, dvt::ErrorSpec::deletion(start, v.t))) == x; });
    }
    ++words;
  });
  return {{"t", v.t}, {"run_limit", v.limit}, {"P", window}, {"codewords", words}};
}

json verify_burst_le2(const VerifyArgs& v, Tally& tally) {
  if (v.q % 2 != 0) throw dvt::DomainError("burst-le2 needs an even alphabet");
  const unsigned half = v.q / 2;
  dvt::require_within_cap(dvt::space_size(half, v.n), "verify burst-le2");
  const auto first = dvt::CodebookFirstRowCode::build(v.n);
  const std::size_t window = dvt::ceil_log(2, v.n) + 6;
  std::map<std::pair<std::array<std::uint64_t, 3>, std::array<std::uint64_t, 3>>, std::uint64_t> counts;
  dvt::for_each_word(half, v.n, [&](std::span<const dvt::Symbol> s) {
    const auto r = dvt::le2_residues(Word(half, std::vector<dvt::Symbol>(s.begin(), s.end())), window);
    ++counts[{r.a, r.b}];
  });
  auto best = counts.begin();
  for (auto it = counts.begin(); it != counts.end(); ++it) {
    if (it->second > best->second) best = it;
  }
  dvt::Le2Residues residues;
  residues.a = best->first.first;
  residues.b = best->first.second;
  const dvt::Le2Code code(v.q, v.n, first, residues);
  const auto book = code.enumerate();
  tally.record(dvt::code_is_correcting(book, 2, dvt::BallMode::at_most));
  for (const Word& c : book) {
    for (std::size_t len = 1; len <= 2; ++len) {
      for (std::size_t p = 1; p + len - 1 <= v.n; ++p) {
        tally.attempt([&] { return code.decode(dvt::apply(c, dvt::ErrorSpec::deletion(p, len))) == c; });
      }
    }
  }
  return {{"first_row_size", first->size()}, {"codewords", book.size()}, {"P", code.window()}};
}

json verify_baselines(const VerifyArgs& v, Tally& tally) {
  dvt::require_within_cap(dvt::space_size(v.q, v.n), "verify baselines");
  const auto d = dvt::best_coset_size(v.q, v.n, dvt::CodeFamily::diff_vt);
  const auto t = dvt::best_coset_size(v.q, v.n, dvt::CodeFamily::tenengolts);
  tally.record(d.size >= d.pigeonhole);
  tally.record(t.size >= t.pigeonhole);
  const auto book = dvt::TenengoltsCode(v.q, v.n, t.a, t.b).enumerate();
  tally.record(dvt::code_is_correcting(book, 1, dvt::BallMode::exact));

  const auto sizes = dvt::tenengolts_coset_sizes(v.q, v.n);
  std::vector<std::string> rows;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    rows.push_back(std::to_string(i / v.q) + "," + std::to_string(i % v.q) + "," + std::to_string(sizes[i]));
  }
  write_csv(v.csv, "a,b,size", rows);
  return {{"pigeonhole", d.pigeonhole},
          {"diff_vt", {{"a", d.a}, {"max_coset", d.size}}},
          {"tenengolts", {{"a", t.a}, {"b", t.b}, {"max_coset", t.size}}}};
}

int run_verify(const VerifyArgs& v) {
  Tally tally;
  json details;
  if (v.suite == "diffvt") details = verify_diffvt(v, tally);
  if (v.suite == "diffsvt") details = verify_diffsvt(v, tally);
  if (v.suite == "burst-t") details = verify_burst_t(v, tally);
  if (v.suite == "burst-le2") details = verify_burst_le2(v, tally);
  if (v.suite == "baselines") details = verify_baselines(v, tally);
  json report{{"suite", v.suite},
              {"q", v.q},
              {"n", v.n},
              {"seed", v.seed},
              {"pass", tally.failures == 0},
              {"checks", tally.checks},
              {"failures", tally.failures},
              {"details", details}};
  emit(report);
  return tally.failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Differential VT codes for deletions, insertions and bursts"};
  app.require_subcommand(1);

  CodeArgs enc_code;
  IoArgs enc_io;
  auto* enc = app.add_subcommand("encode", "encode message words");
  add_code_options(enc, enc_code);
  enc->add_option("--in", enc_io.in, "message word file (default stdin)");
  enc->add_option("--out", enc_io.out, "codeword file");

  CodeArgs dec_code;
  IoArgs dec_io;
  std::optional<std::size_t> lo;
  std::optional<std::size_t> hi;
  auto* dec = app.add_subcommand("decode", "decode received words to messages");
  add_code_options(dec, dec_code);
  dec->add_option("--in", dec_io.in, "received word file (default stdin)");
  dec->add_option("--out", dec_io.out, "message file");
  dec->add_option("--lo", lo, "first position of the error window");
  dec->add_option("--hi", hi, "last position of the error window");

  CorruptArgs cor;
  IoArgs cor_io;
  auto* corrupt = app.add_subcommand("corrupt", "apply a deletion or insertion burst");
  corrupt->add_option("--q", cor.q, "alphabet size")->required();
  corrupt->add_option("--kind", cor.kind, "del or ins")->check(CLI::IsMember({"del", "ins"}));
  corrupt->add_option("--start", cor.start, "deletion start (1-based) or insertion point (symbols kept before it)");
  corrupt->add_option("--len", cor.len, "burst length");
  corrupt->add_option("--symbols", cor.symbols, "inserted symbols; random when absent");
  corrupt->add_flag("--random", cor.random, "pick the position from the seed");
  corrupt->add_option("--seed", cor.seed, "64-bit seed");
  corrupt->add_option("--in", cor_io.in, "word file (default stdin)");
  corrupt->add_option("--out", cor_io.out, "corrupted word file");

  VerifyArgs ver;
  auto* verify = app.add_subcommand("verify", "run an exhaustive property suite");
  verify->add_option("--suite", ver.suite, "suite name")
      ->required()
      ->check(CLI::IsMember({"diffvt", "diffsvt", "burst-t", "burst-le2", "baselines"}));
  verify->add_option("--q", ver.q, "alphabet size");
  verify->add_option("--n", ver.n, "code length");
  verify->add_option("--t", ver.t, "burst length (burst-t)");
  verify->add_option("--P", ver.window, "window length (diffsvt)");
  verify->add_option("--limit", ver.limit, "first-row run limit (burst-t)");
  verify->add_option("--samples", ver.samples, "encoder samples (diffvt)");
  verify->add_option("--seed", ver.seed, "64-bit seed");
  verify->add_option("--csv", ver.csv, "write the coset-size table here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*enc) return run_encode(enc_code, enc_io);
    if (*dec) return run_decode(dec_code, dec_io, lo, hi);
    if (*corrupt) return run_corrupt(cor, cor_io);
    return run_verify(ver);
  } catch (const dvt::DecodeError& e) {
    std::cerr << "decode error: " << e.what() << "\n";
    return 3;
  } catch (const dvt::CapacityError& e) {
    std::cerr << "capacity error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
