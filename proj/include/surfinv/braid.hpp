#pragma once

#include <cstddef>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace surfinv {

/// One Artin generator with its exponent sign: index i in [1, m-1], sign +1/-1.
struct BraidLetter {
  int index = 1;
  int sign = 1;

  friend bool operator==(const BraidLetter&, const BraidLetter&) = default;
};

/// A word in the braid group of fixed degree m. The empty word is the
/// identity braid. Letters are stored left to right; we read words as
/// stacking crossings bottom to top.
struct BraidWord {
  int degree = 1;
  std::vector<BraidLetter> letters;

  BraidWord() = default;
  explicit BraidWord(int m) : degree(m) {
    if (m < 1) throw std::invalid_argument("braid degree must be >= 1");
  }
  BraidWord(int m, std::vector<BraidLetter> ls) : degree(m), letters(std::move(ls)) {
    if (m < 1) throw std::invalid_argument("braid degree must be >= 1");
    for (const auto& l : letters) check_letter(l);
  }

  void check_letter(const BraidLetter& l) const {
    if (l.index < 1 || l.index >= degree)
      throw std::invalid_argument("braid letter index " + std::to_string(l.index) +
                                  " out of range for degree " + std::to_string(degree));
    if (l.sign != 1 && l.sign != -1)
      throw std::invalid_argument("braid letter sign must be +1 or -1");
  }

  void push(int index, int sign) {
    BraidLetter l{index, sign};
    check_letter(l);
    letters.push_back(l);
  }

  std::size_t size() const { return letters.size(); }

  friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

/// Concatenation u.v (u first).
inline BraidWord operator*(const BraidWord& u, const BraidWord& v) {
  if (u.degree != v.degree) throw std::invalid_argument("braid degree mismatch");
  BraidWord r = u;
  r.letters.insert(r.letters.end(), v.letters.begin(), v.letters.end());
  return r;
}

/// Letterwise inverse: reverse order, negate signs.
inline BraidWord reverse_inverse(const BraidWord& w) {
  BraidWord r(w.degree);
  r.letters.reserve(w.size());
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    r.letters.push_back({it->index, -it->sign});
  return r;
}

/// Parses whitespace-separated signed integers; k < 0 means sigma_{|k|}^{-1}.
inline BraidWord parse_braid(const std::string& text, int degree) {
  BraidWord w(degree);
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    std::size_t pos = 0;
    int k = 0;
    try {
      k = std::stoi(tok, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("braid word: non-integer token '" + tok + "'");
    }
    if (pos != tok.size())
      throw std::invalid_argument("braid word: non-integer token '" + tok + "'");
    if (k == 0) throw std::invalid_argument("braid word: zero is not a generator");
    w.push(k > 0 ? k : -k, k > 0 ? 1 : -1);
  }
  return w;
}

inline std::string to_text(const BraidWord& w) {
  std::string s;
  for (const auto& l : w.letters) {
    if (!s.empty()) s += ' ';
    s += std::to_string(l.sign * l.index);
  }
  return s;
}

/// Garside's positive half twist: (s1..s_{m-1})(s1..s_{m-2})...(s1).
inline BraidWord garside_delta(int degree) {
  if (degree < 2) throw std::invalid_argument("garside_delta requires degree >= 2");
  BraidWord w(degree);
  for (int top = degree - 1; top >= 1; --top)
    for (int i = 1; i <= top; ++i) w.push(i, 1);
  return w;
}

/// Bijection on {0..m-1}; images[j] is where the strand starting at j ends.
struct Permutation {
  std::vector<int> images;

  static Permutation identity(int m) {
    Permutation p;
    p.images.resize(m);
    std::iota(p.images.begin(), p.images.end(), 0);
    return p;
  }

  bool is_identity() const {
    for (std::size_t j = 0; j < images.size(); ++j)
      if (images[j] != static_cast<int>(j)) return false;
    return true;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
};

/// Underlying permutation of a braid word (signs are irrelevant).
inline Permutation permutation_of(const BraidWord& w) {
  Permutation p = Permutation::identity(w.degree);
  for (const auto& l : w.letters) {
    int a = l.index - 1, b = l.index;
    for (auto& img : p.images) {
      if (img == a) img = b;
      else if (img == b) img = a;
    }
  }
  return p;
}

}  // namespace surfinv
