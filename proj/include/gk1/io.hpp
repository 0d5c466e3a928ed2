#pragma once
// The canonical element file format:
//
//   G <k>
//   <p> -> <q>
//   ...
//
// Words are digit strings, the empty word is written "-". Canonical output is
// maximally extended, sorted by dictionary order of the domain word, every
// line newline-terminated, no trailing blank line. Parse errors report line
// and column.

#include <istream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "gk1/error.hpp"
#include "gk1/tables.hpp"
#include "gk1/words.hpp"

namespace gk1 {

namespace detail {

[[noreturn]] inline void parse_fail(std::size_t line, std::size_t col, const std::string& msg) {
  fail(Errc::ParseError, "line " + std::to_string(line) + ", col " + std::to_string(col) + ": " + msg);
}

// token must be "-" or digits below k
inline Word parse_word_token(std::string_view token, int k, std::size_t line, std::size_t col) {
  if (token.empty()) parse_fail(line, col, "missing word (the empty word is written \"-\")");
  if (token == "-") return Word();
  Word w;
  for (std::size_t i = 0; i < token.size(); ++i) {
    char c = token[i];
    if (c < '0' || c > '9')
      parse_fail(line, col + i, std::string("invalid character '") + c + "' in word");
    int letter = c - '0';
    if (letter >= k)
      parse_fail(line, col + i,
                 "letter " + std::to_string(letter) + " out of range for k=" + std::to_string(k));
    w = w.append(letter);
  }
  return w;
}

}  // namespace detail

// Reads a (not necessarily canonical) table; validity is a separate concern,
// see diagnose()/validate().
inline Table parse_element(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) detail::parse_fail(1, 1, "missing header \"G <k>\"");
  if (line.size() < 3 || line[0] != 'G' || line[1] != ' ')
    detail::parse_fail(1, 1, "header must be \"G <k>\"");
  int k = 0;
  for (std::size_t i = 2; i < line.size(); ++i) {
    if (line[i] < '0' || line[i] > '9') detail::parse_fail(1, i + 1, "header must be \"G <k>\"");
    k = 10 * k + (line[i] - '0');
    if (k > kMaxAlphabet) detail::parse_fail(1, 3, "alphabet size exceeds " + std::to_string(kMaxAlphabet));
  }
  if (k < kMinAlphabet)
    detail::parse_fail(1, 3, "alphabet size must be at least " + std::to_string(kMinAlphabet));

  std::vector<Entry> entries;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) detail::parse_fail(lineno, 1, "blank line in element file");
    const std::string sep = " -> ";
    std::size_t pos = line.find(sep);
    if (pos == std::string::npos) detail::parse_fail(lineno, 1, "expected \"<p> -> <q>\"");
    std::string_view dom_tok(line.data(), pos);
    std::string_view img_tok(line.data() + pos + sep.size(), line.size() - pos - sep.size());
    Word dom = detail::parse_word_token(dom_tok, k, lineno, 1);
    Word img = detail::parse_word_token(img_tok, k, lineno, pos + sep.size() + 1);
    entries.push_back(Entry{std::move(dom), std::move(img)});
  }
  return Table(Alphabet(k), std::move(entries));
}

inline Table parse_element(const std::string& text) {
  std::istringstream in(text);
  return parse_element(in);
}

inline std::string serialize(const Table& t) {
  std::string out = "G " + std::to_string(t.k()) + "\n";
  for (const Entry& e : t.entries()) out += e.dom.str() + " -> " + e.img.str() + "\n";
  return out;
}

inline std::string serialize(const GroupElement& g) { return serialize(g.table()); }

// single-line rendering for diagnostics and failure reports
inline std::string one_line(const Table& t) {
  std::string out = "G " + std::to_string(t.k());
  for (const Entry& e : t.entries()) out += " | " + e.dom.str() + " -> " + e.img.str();
  return out;
}

inline std::string one_line(const GroupElement& g) { return one_line(g.table()); }

// comma-separated word list, e.g. "0,10,11"
inline std::vector<Word> parse_word_list(std::string_view text) {
  std::vector<Word> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view token = text.substr(start, comma - start);
    if (token.empty()) fail(Errc::ParseError, "empty word in list (the empty word is written \"-\")");
    out.push_back(Word::parse(token));
    start = comma + 1;
  }
  return out;
}

}  // namespace gk1
