#pragma once

#include "pwrot/words/word.hpp"

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pwrot {

/// A morphism of the free monoid given by the images of letters.
class Substitution {
 public:
  Substitution() = default;
  explicit Substitution(std::map<char, Word> images) : images_(std::move(images)) {}

  const std::map<char, Word>& images() const { return images_; }
  bool defined_on(char c) const { return images_.count(c) > 0; }
  const Word& image(char c) const {
    auto it = images_.find(c);
    if (it == images_.end()) throw std::invalid_argument(std::string("substitution: unknown letter ") + c);
    return it->second;
  }
  void set(char c, Word w) { images_[c] = std::move(w); }

  Word operator()(const Word& w) const {
    Word out;
    for (char c : w) out += image(c);
    return out;
  }
  /// s^n(w); s^0 is the identity.
  Word apply(Word w, std::size_t n = 1) const {
    for (std::size_t i = 0; i < n; ++i) w = (*this)(w);
    return w;
  }
  /// (this o other)(w) = this(other(w)).
  Substitution compose(const Substitution& other) const {
    std::map<char, Word> out;
    for (const auto& [c, w] : other.images_) out[c] = (*this)(w);
    return Substitution(std::move(out));
  }

  friend bool operator==(const Substitution&, const Substitution&) = default;

  std::string to_string(const Alphabet* from = nullptr, const Alphabet* to = nullptr) const {
    std::string s;
    for (const auto& [c, w] : images_) {
      if (!s.empty()) s += ", ";
      s += (from ? from->name(c) : std::string(1, c)) + "->" + (to ? to->spell(w) : w);
    }
    return s;
  }

 private:
  std::map<char, Word> images_;
};

/// Concatenated images under a letter-to-word morphism.
inline Word recode(const Word& w, const Substitution& morphism) { return morphism(w); }

/// A factor-closed set of words of length 1..max_length.
class Language {
 public:
  explicit Language(std::size_t max_length = 0) : max_length_(max_length) {}

  std::size_t max_length() const { return max_length_; }
  const std::set<Word>& words() const { return words_; }
  std::size_t size() const { return words_.size(); }
  bool contains(const Word& w) const { return words_.count(w) > 0; }

  /// Adds every factor of w (of length <= max_length); returns the number added.
  std::size_t add_factors(const Word& w) {
    std::size_t added = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
      for (std::size_t n = 1; n <= max_length_ && i + n <= w.size(); ++n) added += words_.insert(w.substr(i, n)).second;
    return added;
  }
  /// Adds every factor of the bi-infinite periodic word w^omega.
  std::size_t add_periodic(const Word& w) {
    if (w.empty()) return 0;
    Word p = primitive_root(w);
    Word unrolled = repeat(p, max_length_ / p.size() + 2);
    std::size_t added = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
      for (std::size_t n = 1; n <= max_length_; ++n) added += words_.insert(unrolled.substr(i, n)).second;
    return added;
  }
  void insert(const Word& w) {
    if (w.empty() || w.size() > max_length_) throw std::invalid_argument("language: word length out of range");
    words_.insert(w);
  }
  void merge(const Language& o) {
    if (o.max_length_ != max_length_) throw std::invalid_argument("language: mismatched lengths");
    words_.insert(o.words_.begin(), o.words_.end());
  }

  bool factor_closed() const {
    for (const auto& w : words_)
      if (w.size() > 1 && (!contains(w.substr(1)) || !contains(w.substr(0, w.size() - 1)))) return false;
    return true;
  }
  /// Number of words of each length 1..max_length.
  std::vector<std::size_t> complexity() const {
    std::vector<std::size_t> c(max_length_ + 1, 0);
    for (const auto& w : words_) ++c[w.size()];
    return c;
  }

  friend bool operator==(const Language&, const Language&) = default;

 private:
  std::size_t max_length_;
  std::set<Word> words_;
};

struct LanguageDiff {
  std::vector<Word> only_left, only_right;
  bool equal() const { return only_left.empty() && only_right.empty(); }
};

inline LanguageDiff language_compare(const Language& l1, const Language& l2) {
  if (l1.max_length() != l2.max_length()) throw std::invalid_argument("language_compare: mismatched lengths");
  LanguageDiff d;
  for (const auto& w : l1.words())
    if (!l2.contains(w)) d.only_left.push_back(w);
  for (const auto& w : l2.words())
    if (!l1.contains(w)) d.only_right.push_back(w);
  return d;
}

/// Periodic words chain(s^n(seed))^omega for n = 0, 1, ... (or just chain(seed)
/// without a substitution). The chain is applied last element first.
struct SeedFamily {
  Word seed;
  std::optional<Substitution> power;
  std::vector<Substitution> chain;
};

class NonStabilizing : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Factors of length <= L of the seed families' periodic words, each family
/// iterated until `patience` consecutive powers add no new factor.
inline Language substitutive_language(const std::vector<SeedFamily>& seeds, std::size_t L,
                                      std::size_t max_power = 200, std::size_t patience = 3) {
  Language lang(L);
  for (const auto& f : seeds) {
    auto realize = [&](const Word& w) {
      Word out = w;
      for (auto it = f.chain.rbegin(); it != f.chain.rend(); ++it) out = (*it)(out);
      return out;
    };
    Word cur = f.seed;
    if (!f.power) {
      lang.add_periodic(realize(cur));
      continue;
    }
    std::size_t quiet = 0;
    for (std::size_t n = 0;; ++n) {
      if (n > max_power) throw NonStabilizing("substitutive_language: no stabilization within the power cap");
      quiet = lang.add_periodic(realize(cur)) ? 0 : quiet + 1;
      if (quiet >= patience) break;
      cur = (*f.power)(cur);
    }
  }
  return lang;
}

}  // namespace pwrot
