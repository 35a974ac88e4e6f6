#pragma once

// Words are std::strings whose chars are letters. The coding letters of the
// rotation are '1' and '2'; induced maps use 'A', 'B', ... with display names
// held by an Alphabet.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pwrot {

using Word = std::string;

inline Word repeat(const Word& w, std::size_t n) {
  Word out;
  out.reserve(w.size() * n);
  for (std::size_t i = 0; i < n; ++i) out += w;
  return out;
}

/// Shortlex order: shorter first, then lexicographic.
inline bool shortlex_less(const Word& u, const Word& v) {
  if (u.size() != v.size()) return u.size() < v.size();
  return u < v;
}

/// Shortest p with w = p^k.
inline Word primitive_root(const Word& w) {
  const std::size_t n = w.size();
  for (std::size_t p = 1; p < n; ++p) {
    if (n % p) continue;
    bool ok = true;
    for (std::size_t i = p; i < n && ok; ++i) ok = w[i] == w[i - p];
    if (ok) return w.substr(0, p);
  }
  return w;
}

/// Lexicographically least rotation of w.
inline Word least_rotation(const Word& w) {
  Word best = w;
  for (std::size_t i = 1; i < w.size(); ++i) best = std::min(best, w.substr(i) + w.substr(0, i));
  return best;
}

namespace detail {

inline std::size_t read_exponent(std::string_view s, std::size_t& i) {
  if (i >= s.size() || s[i] != '^') return 1;
  ++i;
  bool brace = i < s.size() && s[i] == '{';
  if (brace) ++i;
  // without braces the exponent is one digit: 12^41^3 is 1 2^4 1^3
  std::size_t start = i, n = 0;
  while (i < s.size() && s[i] >= '0' && s[i] <= '9' && (brace || i == start))
    n = n * 10 + static_cast<std::size_t>(s[i++] - '0');
  if (i == start) throw std::invalid_argument("word: missing exponent");
  if (brace) {
    if (i >= s.size() || s[i] != '}') throw std::invalid_argument("word: unclosed exponent brace");
    ++i;
  }
  return n;
}

inline Word parse_seq(std::string_view s, std::size_t& i) {
  Word out;
  while (i < s.size() && s[i] != ')') {
    Word atom;
    if (s[i] == '(') {
      ++i;
      atom = parse_seq(s, i);
      if (i >= s.size() || s[i] != ')') throw std::invalid_argument("word: unbalanced parenthesis");
      ++i;
    } else if (s[i] == ' ') {
      ++i;
      continue;
    } else {
      atom = Word(1, s[i++]);
    }
    out += repeat(atom, read_exponent(s, i));
  }
  return out;
}

// UTF-8 superscript digits to "^n".
inline std::string expand_superscripts(std::string_view s) {
  static const char* sup[] = {"⁰", "¹", "²", "³", "⁴",
                              "⁵", "⁶", "⁷", "⁸", "⁹"};
  std::string out;
  bool in_exp = false;
  for (std::size_t i = 0; i < s.size();) {
    int digit = -1;
    std::size_t len = 0;
    for (int dgt = 0; dgt < 10; ++dgt) {
      std::string_view t(sup[dgt]);
      if (s.substr(i, t.size()) == t) {
        digit = dgt;
        len = t.size();
        break;
      }
    }
    if (digit >= 0) {
      if (!in_exp) out += "^{";
      out += static_cast<char>('0' + digit);
      in_exp = true;
      i += len;
    } else {
      if (in_exp) out += '}';
      out += s[i++];
      in_exp = false;
    }
  }
  if (in_exp) out += '}';
  return out;
}

}  // namespace detail

/// Parses "12^41^3", "1(22)^{12}1", "12⁴1³" into a plain word.
inline Word parse_word(std::string_view text) {
  std::string s = detail::expand_superscripts(text);
  std::size_t i = 0;
  Word w = detail::parse_seq(s, i);
  if (i != s.size()) throw std::invalid_argument("word: unbalanced parenthesis");
  return w;
}

/// Run-length display: "122221111" -> "12^41^3".
inline std::string compact(const Word& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size();) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    out += w[i];
    if (j - i > 9) out += "^{" + std::to_string(j - i) + "}";
    else if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

/// Ordered letters with printable names ("A", "A1", ...).
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::string letters) {
    for (char c : letters) add(c, std::string(1, c));
  }

  void add(char letter, std::string name) {
    if (contains(letter)) throw std::invalid_argument(std::string("alphabet: duplicate letter ") + letter);
    letters_.push_back(letter);
    names_[letter] = std::move(name);
  }

  const std::string& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool contains(char c) const { return names_.count(c) > 0; }
  const std::string& name(char c) const {
    auto it = names_.find(c);
    if (it == names_.end()) throw std::invalid_argument(std::string("alphabet: unknown letter ") + c);
    return it->second;
  }
  std::optional<char> letter(std::string_view name) const {
    for (const auto& [c, n] : names_)
      if (n == name) return c;
    return std::nullopt;
  }
  /// Space-free rendering when all names are single chars, else names joined by spaces.
  std::string spell(const Word& w) const {
    bool simple = std::all_of(letters_.begin(), letters_.end(), [&](char c) { return names_.at(c).size() == 1; });
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (!simple && i) out += ' ';
      out += name(w[i]);
    }
    return out;
  }

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::string letters_;
  std::map<char, std::string> names_;
};

/// Letters 'A', 'B', ... named by themselves.
inline Alphabet letter_alphabet(std::size_t n) {
  if (n > 26) throw std::invalid_argument("alphabet: more than 26 letters");
  Alphabet a;
  for (std::size_t i = 0; i < n; ++i) a.add(static_cast<char>('A' + i), std::string(1, static_cast<char>('A' + i)));
  return a;
}

/// Letters 'A', 'B', ... named stem1, stem2, ...
inline Alphabet indexed_alphabet(std::size_t n, const std::string& stem) {
  if (n > 26) throw std::invalid_argument("alphabet: more than 26 letters");
  Alphabet a;
  for (std::size_t i = 0; i < n; ++i) a.add(static_cast<char>('A' + i), stem + std::to_string(i + 1));
  return a;
}

}  // namespace pwrot
