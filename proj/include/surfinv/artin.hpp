#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "surfinv/braid.hpp"

namespace surfinv {

/// A freely reduced word in F_m = <x_1..x_m>. Letters are nonzero signed
/// generator indices: j > 0 is x_j, j < 0 is x_j^{-1}. The representation
/// keeps no adjacent inverse pair.
struct FreeWord {
  std::vector<int> letters;

  FreeWord() = default;
  explicit FreeWord(std::vector<int> ls) : letters(std::move(ls)) { reduce(); }

  static FreeWord generator(int j) { return FreeWord({j}); }

  bool empty() const { return letters.empty(); }
  std::size_t size() const { return letters.size(); }

  void push(int j) {
    if (j == 0) throw std::invalid_argument("free word letter must be nonzero");
    if (!letters.empty() && letters.back() == -j) letters.pop_back();
    else letters.push_back(j);
  }

  void reduce() {
    std::vector<int> out;
    out.reserve(letters.size());
    for (int j : letters) {
      if (j == 0) throw std::invalid_argument("free word letter must be nonzero");
      if (!out.empty() && out.back() == -j) out.pop_back();
      else out.push_back(j);
    }
    letters = std::move(out);
  }

  bool is_reduced() const {
    for (std::size_t i = 1; i < letters.size(); ++i)
      if (letters[i] == -letters[i - 1]) return false;
    return true;
  }

  FreeWord inverse() const {
    FreeWord r;
    r.letters.reserve(letters.size());
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) r.letters.push_back(-*it);
    return r;
  }

  friend FreeWord operator*(const FreeWord& u, const FreeWord& v) {
    FreeWord r = u;
    for (int j : v.letters) r.push(j);
    return r;
  }

  /// Exponent sums per generator (1-based indexing into a size-m vector).
  std::vector<long long> exponent_sums(int m) const {
    std::vector<long long> s(m, 0);
    for (int j : letters) {
      int g = j > 0 ? j : -j;
      if (g > m) throw std::invalid_argument("free word letter exceeds rank");
      s[g - 1] += j > 0 ? 1 : -1;
    }
    return s;
  }

  std::string to_string() const {
    std::string s;
    for (int j : letters) {
      if (!s.empty()) s += ' ';
      s += std::to_string(j);
    }
    return s.empty() ? "1" : s;
  }

  friend bool operator==(const FreeWord&, const FreeWord&) = default;
};

/// An endomorphism of F_m given by the images of the generators.
struct GeneratorImages {
  int degree = 0;
  std::vector<FreeWord> images;  // images[j-1] is the image of x_j

  static GeneratorImages identity(int m) {
    GeneratorImages g;
    g.degree = m;
    g.images.reserve(m);
    for (int j = 1; j <= m; ++j) g.images.push_back(FreeWord::generator(j));
    return g;
  }

  bool is_identity() const {
    for (int j = 1; j <= degree; ++j) {
      const auto& w = images[j - 1].letters;
      if (w.size() != 1 || w[0] != j) return false;
    }
    return true;
  }

  const FreeWord& image(int j) const { return images[j - 1]; }

  /// Applies the map to a word by substitution, reducing as it goes.
  FreeWord apply(const FreeWord& w) const {
    FreeWord out;
    for (int j : w.letters) {
      int g = j > 0 ? j : -j;
      if (g > degree) throw std::invalid_argument("word letter exceeds degree");
      const FreeWord& img = images[g - 1];
      if (j > 0) {
        for (int k : img.letters) out.push(k);
      } else {
        for (auto it = img.letters.rbegin(); it != img.letters.rend(); ++it) out.push(-*it);
      }
    }
    return out;
  }

  /// The permutation of generator classes induced on the abelianization.
  /// Throws if some image is not a conjugate of a single generator class
  /// (never happens for braid automorphisms).
  Permutation class_permutation() const {
    Permutation p;
    p.images.assign(degree, -1);
    std::vector<bool> hit(degree, false);
    for (int j = 1; j <= degree; ++j) {
      auto sums = images[j - 1].exponent_sums(degree);
      int target = -1;
      for (int g = 0; g < degree; ++g) {
        if (sums[g] == 0) continue;
        if (sums[g] != 1 || target != -1)
          throw std::logic_error("images do not permute generator classes");
        target = g;
      }
      if (target == -1 || hit[target])
        throw std::logic_error("images do not permute generator classes");
      hit[target] = true;
      p.images[j - 1] = target;
    }
    return p;
  }

  friend bool operator==(const GeneratorImages&, const GeneratorImages&) = default;
};

/// Composition as maps: (outer . inner)(x_j) = outer(inner(x_j)).
inline GeneratorImages compose(const GeneratorImages& outer, const GeneratorImages& inner) {
  if (outer.degree != inner.degree) throw std::invalid_argument("degree mismatch");
  GeneratorImages r;
  r.degree = outer.degree;
  r.images.reserve(r.degree);
  for (int j = 1; j <= r.degree; ++j) r.images.push_back(outer.apply(inner.image(j)));
  return r;
}

/// Artin's action of a braid word on the free group F_m:
///   sigma_i:      x_i -> x_i x_{i+1} x_i^{-1},  x_{i+1} -> x_i
///   sigma_i^{-1}: x_i -> x_{i+1},               x_{i+1} -> x_{i+1}^{-1} x_i x_{i+1}
/// with Artin(uv) = Artin(v) . Artin(u), realized by substituting each
/// letter's rule into the accumulated images left to right.
inline GeneratorImages artin(const BraidWord& w) {
  const int m = w.degree;
  GeneratorImages acc = GeneratorImages::identity(m);
  for (const auto& l : w.letters) {
    const int i = l.index;
    FreeWord img_i, img_i1;
    if (l.sign > 0) {
      img_i = FreeWord({i, i + 1, -i});
      img_i1 = FreeWord::generator(i);
    } else {
      img_i = FreeWord::generator(i + 1);
      img_i1 = FreeWord({-(i + 1), i, i + 1});
    }
    for (auto& image : acc.images) {
      FreeWord out;
      for (int j : image.letters) {
        int g = j > 0 ? j : -j;
        const FreeWord* sub = nullptr;
        if (g == i) sub = &img_i;
        else if (g == i + 1) sub = &img_i1;
        if (!sub) {
          out.push(j);
        } else if (j > 0) {
          for (int k : sub->letters) out.push(k);
        } else {
          for (auto it = sub->letters.rbegin(); it != sub->letters.rend(); ++it) out.push(-*it);
        }
      }
      image = std::move(out);
    }
  }
  return acc;
}

inline constexpr std::size_t kDefaultEqualityCap = 64;

/// Exact braid word problem through the (faithful) Artin representation:
/// u = v iff Artin(u v^{-1}) is the identity map. Image growth is
/// exponential in the worst case, so combined input length is capped.
inline bool braids_equal(const BraidWord& u, const BraidWord& v,
                         std::size_t max_letters = kDefaultEqualityCap) {
  if (u.degree != v.degree) throw std::invalid_argument("braid degree mismatch");
  if (u.size() + v.size() > max_letters)
    throw std::length_error("braid equality check capped at " + std::to_string(max_letters) +
                            " letters (got " + std::to_string(u.size() + v.size()) + ")");
  return artin(u * reverse_inverse(v)).is_identity();
}

inline bool commute(const BraidWord& a, const BraidWord& b,
                    std::size_t max_letters = kDefaultEqualityCap) {
  return braids_equal(a * b, b * a, max_letters);
}

}  // namespace surfinv
