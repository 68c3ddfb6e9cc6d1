#pragma once

// Braid words on a fixed number of strands, the permutations they induce,
// and the standard constructions (pure braids A(i,j), positive permutation
// braids, trivial-strand embeddings) the rest of the library builds on.
//
// Conventions, used everywhere in the library:
//  * strands and generator indices are 1-based (sigma_1 .. sigma_{n-1});
//  * words are read left to right and the leftmost letter acts first, so the
//    group product a*b is the concatenation of the words a and b;
//  * a Permutation p records where strands go: p(i) is the final position of
//    the strand that starts at position i. Consequently
//    permutation_of(a*b) == permutation_of(a).then(permutation_of(b)).

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace braidforce {

inline constexpr int kMaxStrands = 32;

struct Letter {
  int index = 1;  // generator sigma_index, 1 <= index <= strands-1
  int sign = 1;   // +1 or -1

  friend bool operator==(const Letter&, const Letter&) = default;
};

class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(int size);  // identity on {1..size}

  static Permutation from_images(std::span<const int> one_based_images);
  // Swap of the two points i and j (1-based).
  static Permutation transposition(int size, int i, int j);
  // i -> size+1-i.
  static Permutation reversal(int size);

  int size() const { return size_; }
  int operator()(int i) const { return img_[i - 1] + 1; }

  Permutation inverse() const;
  // Apply *this first, then next.
  Permutation then(const Permutation& next) const;
  int sign() const;
  int inversions() const;
  bool is_identity() const;
  std::vector<int> images() const;
  // Lengths of the cycles, sorted descending (fixed points included).
  std::vector<int> cycle_type() const;
  // "[2 3 1]"
  std::string one_line() const;

  // 0-based raw access for the Garside hot paths.
  int at(int i0) const { return img_[i0]; }
  void set(int i0, int v0) { img_[i0] = static_cast<std::uint8_t>(v0); }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::uint8_t size_ = 0;
  std::array<std::uint8_t, kMaxStrands> img_{};
};

class BraidWord {
 public:
  BraidWord() = default;
  explicit BraidWord(int strands);  // identity braid
  BraidWord(int strands, std::vector<Letter> letters);

  int strands() const { return strands_; }
  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  void append(Letter l);
  void append(const BraidWord& w);

  // "1 -2 3"; the identity renders as "" .
  std::string to_string() const;

  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  int strands_ = 1;
  std::vector<Letter> letters_;
};

// Whitespace-separated tokens: k or sk means sigma_k, -k or sk^-1 means
// sigma_k^-1, sk^e is a power, and A(i,j) or A(i,j)^e expands to the standard pure braid (to the power e).
BraidWord parse_word(std::string_view text, int strands);

BraidWord concat(const BraidWord& a, const BraidWord& b);
BraidWord inverse(const BraidWord& a);
BraidWord free_reduce(const BraidWord& a);
BraidWord power(const BraidWord& a, int exponent);

Permutation permutation_of(const BraidWord& a);
int exponent_sum(const BraidWord& a);

// A(i,j) = s_{j-1} ... s_{i+1} s_i^2 s_{i+1}^-1 ... s_{j-1}^-1.
BraidWord pure_braid(int i, int j, int strands);
BraidWord embed_trivial(const BraidWord& a, int strands);
// Shift every generator index up by `offset`, landing in B_strands.
BraidWord shift(const BraidWord& a, int offset, int strands);

// The positive braid realising p in which every pair of strands crosses at
// most once (bubble-sort crossing order).
BraidWord permutation_braid(const Permutation& p);

}  // namespace braidforce
