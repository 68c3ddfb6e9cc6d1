#pragma once

// Garside structure of the Artin braid group B_n: left normal forms, the
// word problem, cycling/decycling, super and ultra summit sets, and the
// conjugacy machinery built on them.
//
// A simple element (positive permutation braid) is stored as the
// Permutation it induces. Strands i < j cross in it iff p(i) > p(j).
// Conjugation follows x^c = c^-1 x c.

#include <chrono>
#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "braidforce/braid.hpp"

namespace braidforce {

struct CanonicalForm {
  int strands = 1;
  int delta_power = 0;
  std::vector<Permutation> factors;  // left-weighted, none trivial, none equal to Delta

  CanonicalForm() = default;
  explicit CanonicalForm(int n) : strands(n) {}

  int inf() const { return delta_power; }
  int sup() const { return delta_power + static_cast<int>(factors.size()); }
  int canonical_length() const { return static_cast<int>(factors.size()); }
  bool is_delta_power() const { return factors.empty(); }

  // "Δ^p | [2 1 3] | [1 3 2]"
  std::string to_string() const;

  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
  // (strands, delta_power, factor count, factors lexicographically)
  friend std::strong_ordering operator<=>(const CanonicalForm& a, const CanonicalForm& b);
};

namespace simple {

// Bit k-1 stands for sigma_k.
using Gens = unsigned;

Permutation identity(int n);
Permutation delta(int n);
Permutation generator(int n, int k);
bool is_identity(const Permutation& a);
bool is_delta(const Permutation& a);
// {k : a = sigma_k b}
Gens starting_set(const Permutation& a);
// {k : a = b sigma_k}
Gens finishing_set(const Permutation& a);
// Delta^-1 a Delta
Permutation tau(const Permutation& a, int power = 1);
// a^-1 Delta
Permutation right_complement(const Permutation& a);
// a is a prefix of b
bool prefix_of(const Permutation& a, const Permutation& b);
Permutation meet(const Permutation& a, const Permutation& b);
Permutation join(const Permutation& a, const Permutation& b);
// a^-1 (a v b)
Permutation under(const Permutation& a, const Permutation& b);
// Makes (a, b) left-weighted in place; returns whether anything moved.
bool left_weight(Permutation& a, Permutation& b);

}  // namespace simple

CanonicalForm identity_form(int n);
CanonicalForm delta_form(int n, int power = 1);
CanonicalForm simple_form(const Permutation& s);

CanonicalForm normal_form(const BraidWord& a);
CanonicalForm multiply(const CanonicalForm& x, const CanonicalForm& y);
CanonicalForm inverse(const CanonicalForm& x);
// c^-1 x c
CanonicalForm conjugate(const CanonicalForm& x, const CanonicalForm& c);
CanonicalForm power(const CanonicalForm& x, int exponent);
bool equal(const BraidWord& a, const BraidWord& b);
Permutation permutation_of(const CanonicalForm& x);
BraidWord to_word(const CanonicalForm& x);

// Conjugates by tau^p(A_1) and by A_k^-1 respectively.
CanonicalForm cycling(const CanonicalForm& x);
CanonicalForm decycling(const CanonicalForm& x);
Permutation cycling_conjugator(const CanonicalForm& x);

enum class SummitKind { super_summit, ultra_summit };

// A wall-clock limit; limit_ms is only used in the error message.
struct Deadline {
  std::chrono::steady_clock::time_point at;
  std::size_t limit_ms = 0;

  static Deadline after(double seconds);
  bool passed() const { return std::chrono::steady_clock::now() > at; }
};

struct SummitOptions {
  std::size_t max_elements = 100000;
  SummitKind kind = SummitKind::ultra_summit;
  // Checked while a summit set grows.
  std::optional<Deadline> deadline;
};

struct SummitSet {
  SummitKind kind = SummitKind::ultra_summit;
  CanonicalForm source;
  std::vector<CanonicalForm> elements;
  // elements[i] = conjugate(source, conjugators[i])
  std::vector<CanonicalForm> conjugators;

  std::size_t size() const { return elements.size(); }
  // Index of x in elements, if present.
  std::optional<std::size_t> find(const CanonicalForm& x) const;
};

// Conjugates x into its super summit set by cycling then decycling.
// On return conj satisfies result = conjugate(x, conj).
CanonicalForm slide_to_super_summit(const CanonicalForm& x, CanonicalForm& conj);
// Further cycles an element of the super summit set until it lies in the
// ultra summit set.
CanonicalForm slide_to_ultra_summit(const CanonicalForm& x, CanonicalForm& conj);
bool in_ultra_summit(const CanonicalForm& x);

// Minimal simple c with s a prefix of c and x^c in the same summit set as x
// (x must already be in it).
Permutation minimal_simple_super(const CanonicalForm& x, const Permutation& s);
Permutation minimal_simple_ultra(const CanonicalForm& x, const Permutation& s);

SummitSet summit_set(const CanonicalForm& x, const SummitOptions& opts = {});
SummitSet summit_set(const BraidWord& a, const SummitOptions& opts = {});

// w with w a w^-1 = b in B_n, or nothing when a and b are not conjugate.
std::optional<BraidWord> conjugate_test(const BraidWord& a, const BraidWord& b,
                                        const SummitOptions& opts = {});
std::optional<CanonicalForm> conjugate_test(const CanonicalForm& a, const CanonicalForm& b,
                                            const SummitOptions& opts = {});

CanonicalForm class_representative(const CanonicalForm& x, const SummitOptions& opts = {});
CanonicalForm class_representative(const BraidWord& a, const SummitOptions& opts = {});

bool is_periodic(const BraidWord& a);
bool is_periodic(const CanonicalForm& x);

}  // namespace braidforce
