#pragma once

#include <string>
#include <vector>

#include "dmwb/errors.hpp"

namespace dmwb {

/// A word in a free group, stored as a reduced sequence of signed 1-based
/// generator indices (+i = generator i, -i = its inverse).  Reduction is
/// eager: every constructor and operation returns a freely reduced word.
struct Word {
  std::vector<int> letters;

  bool empty() const { return letters.empty(); }
  std::size_t length() const { return letters.size(); }

  friend bool operator==(const Word& a, const Word& b) { return a.letters == b.letters; }
  friend bool operator!=(const Word& a, const Word& b) { return !(a == b); }
};

inline Word free_reduce(const std::vector<int>& letters) {
  Word w;
  for (int l : letters) {
    if (l == 0) throw Error("0 is not a generator letter");
    if (!w.letters.empty() && w.letters.back() == -l) w.letters.pop_back();
    else w.letters.push_back(l);
  }
  return w;
}

inline Word word(std::initializer_list<int> letters) {
  return free_reduce(std::vector<int>(letters));
}

inline Word concat(const Word& a, const Word& b) {
  std::vector<int> ls = a.letters;
  ls.insert(ls.end(), b.letters.begin(), b.letters.end());
  return free_reduce(ls);
}

inline Word inverse(const Word& a) {
  std::vector<int> ls;
  for (auto it = a.letters.rbegin(); it != a.letters.rend(); ++it) ls.push_back(-*it);
  return Word{ls};  // reversal of a reduced word is reduced
}

inline Word conjugate(const Word& u, const Word& w) {  // u w u^-1
  return concat(concat(u, w), inverse(u));
}

inline Word power(const Word& w, int n) {
  Word out;
  Word base = n < 0 ? inverse(w) : w;
  for (int i = 0; i < (n < 0 ? -n : n); ++i) out = concat(out, base);
  return out;
}

/// Cyclic reduction: strips matching first/last inverse letters.  Returns the
/// core; if conjugator is given, fills it with u such that w = u core u^-1.
inline Word cyclic_reduce(const Word& w, Word* conjugator = nullptr) {
  std::vector<int> core = w.letters;
  std::vector<int> prefix;
  while (core.size() >= 2 && core.front() == -core.back()) {
    prefix.push_back(core.front());
    core.erase(core.begin());
    core.pop_back();
  }
  if (conjugator) *conjugator = Word{prefix};
  return Word{core};
}

/// Words are conjugate in the free group iff their cyclic reductions are
/// cyclic rotations of each other.
inline bool conjugate_in_free_group(const Word& a, const Word& b) {
  Word ca = cyclic_reduce(a);
  Word cb = cyclic_reduce(b);
  if (ca.length() != cb.length()) return false;
  const std::size_t n = ca.length();
  if (n == 0) return true;
  for (std::size_t r = 0; r < n; ++r) {
    bool match = true;
    for (std::size_t i = 0; i < n && match; ++i)
      match = ca.letters[(r + i) % n] == cb.letters[i];
    if (match) return true;
  }
  return false;
}

inline std::string format_word(const Word& w, const std::vector<std::string>& names) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    int l = w.letters[i];
    int idx = (l > 0 ? l : -l) - 1;
    if (idx >= static_cast<int>(names.size())) throw Error("letter out of range");
    if (i) out += " ";
    out += names[idx];
    if (l < 0) out += "^-1";
  }
  return out;
}

} // namespace dmwb
