#pragma once

// Freely reduced words in a free group F_m = <f_1, ..., f_m>.

#include <cstddef>
#include <functional>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace burau {

/// A syllable f_gen^exp with exp != 0.
struct Letter {
  int gen = 0;
  int exp = 0;
  friend bool operator==(const Letter&, const Letter&) = default;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

/// Element of F_rank in canonical form: adjacent syllables have distinct
/// generators and no syllable has exponent zero. Equality is sequence equality.
class FreeWord {
 public:
  FreeWord() = default;
  explicit FreeWord(int rank) : rank_(rank) {
    if (rank < 1) throw std::invalid_argument("FreeWord: rank must be positive");
  }

  /// Reduces an arbitrary syllable sequence.
  FreeWord(int rank, std::span<const Letter> letters) : FreeWord(rank) {
    for (const Letter& l : letters) push(l);
  }
  FreeWord(int rank, std::initializer_list<Letter> letters)
      : FreeWord(rank, std::span<const Letter>(letters.begin(), letters.size())) {}

  static FreeWord generator(int rank, int gen, int exp = 1) {
    FreeWord w(rank);
    w.push({gen, exp});
    return w;
  }

  int rank() const { return rank_; }
  const std::vector<Letter>& letters() const { return letters_; }
  bool is_identity() const { return letters_.empty(); }

  /// Number of letters counted with multiplicity |exp|.
  std::size_t length() const {
    std::size_t n = 0;
    for (const Letter& l : letters_) n += static_cast<std::size_t>(l.exp < 0 ? -l.exp : l.exp);
    return n;
  }
  int exponent_sum() const {
    int s = 0;
    for (const Letter& l : letters_) s += l.exp;
    return s;
  }

  /// Same letters viewed in a different rank (used by the embeddings F_m -> F_{m'}).
  FreeWord with_rank(int rank) const {
    for (const Letter& l : letters_)
      if (l.gen > rank) throw std::invalid_argument("FreeWord: generator exceeds target rank");
    FreeWord w(rank);
    w.letters_ = letters_;
    return w;
  }

  void push(Letter l) {
    if (l.gen < 1 || l.gen > rank_) throw std::out_of_range("FreeWord: generator index out of range");
    if (l.exp == 0) return;
    if (!letters_.empty() && letters_.back().gen == l.gen) {
      letters_.back().exp += l.exp;
      if (letters_.back().exp == 0) letters_.pop_back();
    } else {
      letters_.push_back(l);
    }
  }

  FreeWord inverse() const {
    FreeWord w(rank_);
    w.letters_.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) w.letters_.push_back({it->gen, -it->exp});
    return w;
  }

  std::string to_string() const {
    if (letters_.empty()) return "1";
    std::ostringstream os;
    for (std::size_t i = 0; i < letters_.size(); ++i) {
      if (i) os << ' ';
      os << 'f' << letters_[i].gen;
      if (letters_[i].exp != 1) os << '^' << letters_[i].exp;
    }
    return os.str();
  }

  friend bool operator==(const FreeWord& a, const FreeWord& b) {
    return a.rank_ == b.rank_ && a.letters_ == b.letters_;
  }
  friend auto operator<=>(const FreeWord& a, const FreeWord& b) {
    if (auto c = a.rank_ <=> b.rank_; c != 0) return c;
    return a.letters_ <=> b.letters_;
  }

 private:
  int rank_ = 1;
  std::vector<Letter> letters_;
};

namespace detail {
inline void require_same_rank(const FreeWord& a, const FreeWord& b) {
  if (a.rank() != b.rank()) throw std::invalid_argument("FreeWord: rank mismatch");
}
}  // namespace detail

inline FreeWord multiply(const FreeWord& u, const FreeWord& v) {
  detail::require_same_rank(u, v);
  FreeWord r = u;
  for (const Letter& l : v.letters()) r.push(l);
  return r;
}

inline FreeWord operator*(const FreeWord& u, const FreeWord& v) { return multiply(u, v); }

inline FreeWord inverse(const FreeWord& w) { return w.inverse(); }

/// x y x^-1
inline FreeWord ad(const FreeWord& x, const FreeWord& y) { return x * y * x.inverse(); }

/// x y x^-1 y^-1
inline FreeWord commutator(const FreeWord& x, const FreeWord& y) {
  return x * y * x.inverse() * y.inverse();
}

inline FreeWord power(const FreeWord& w, int k) {
  FreeWord base = k < 0 ? w.inverse() : w;
  FreeWord r(w.rank());
  for (int i = 0; i < (k < 0 ? -k : k); ++i) r = r * base;
  return r;
}

/// Homomorphic substitution f_i -> images[i-1]. All images must share one rank,
/// which becomes the rank of the result.
inline FreeWord apply_endomorphism(std::span<const FreeWord> images, const FreeWord& w) {
  if (static_cast<int>(images.size()) != w.rank())
    throw std::invalid_argument("apply_endomorphism: need one image per generator");
  if (images.empty()) throw std::invalid_argument("apply_endomorphism: missing images");
  const int target = images.front().rank();
  for (const FreeWord& im : images)
    if (im.rank() != target) throw std::invalid_argument("apply_endomorphism: image rank mismatch");
  FreeWord r(target);
  for (const Letter& l : w.letters()) {
    const FreeWord& im = images[static_cast<std::size_t>(l.gen - 1)];
    r = r * power(im, l.exp);
  }
  return r;
}

/// Identity images for F_rank.
inline std::vector<FreeWord> identity_images(int rank) {
  std::vector<FreeWord> v;
  v.reserve(static_cast<std::size_t>(rank));
  for (int i = 1; i <= rank; ++i) v.push_back(FreeWord::generator(rank, i));
  return v;
}

struct FreeWordHash {
  std::size_t operator()(const FreeWord& w) const noexcept {
    std::size_t h = std::hash<int>{}(w.rank());
    for (const Letter& l : w.letters()) {
      h ^= std::hash<int>{}(l.gen * 131 + l.exp) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

}  // namespace burau
