#pragma once

// Integral group ring of B_N with exact (GMP) coefficients, and the
// projection onto formal sums of conjugacy classes.

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>

#include "braidforce/braid.hpp"
#include "braidforce/garside.hpp"

namespace braidforce {

struct Term {
  mpz_class coefficient;
  BraidWord sample;  // one word for the element, kept for display only
};

class GroupRingElement {
 public:
  using Terms = std::map<CanonicalForm, Term>;

  explicit GroupRingElement(int strands = 1) : strands_(strands) {}
  static GroupRingElement one(int strands);
  static GroupRingElement monomial(const BraidWord& w, const mpz_class& coefficient = 1);

  int strands() const { return strands_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  // Coefficient of the element with this normal form (0 if absent).
  mpz_class coefficient(const CanonicalForm& key) const;

  void add_term(const CanonicalForm& key, const mpz_class& coefficient, const BraidWord& sample);

  // Coefficients and keys only; samples are ignored.
  friend bool operator==(const GroupRingElement& a, const GroupRingElement& b);

 private:
  int strands_;
  Terms terms_;
};

GroupRingElement gre_add(const GroupRingElement& x, const GroupRingElement& y);
GroupRingElement gre_mul(const GroupRingElement& x, const GroupRingElement& y);
GroupRingElement gre_neg(const GroupRingElement& x);
GroupRingElement gre_scale(const GroupRingElement& x, const mpz_class& k);
// Inverts every group element, keeping coefficients.
GroupRingElement involution(const GroupRingElement& x);

inline GroupRingElement operator+(const GroupRingElement& x, const GroupRingElement& y) { return gre_add(x, y); }
inline GroupRingElement operator-(const GroupRingElement& x, const GroupRingElement& y) { return gre_add(x, gre_neg(y)); }
inline GroupRingElement operator*(const GroupRingElement& x, const GroupRingElement& y) { return gre_mul(x, y); }

class ClassSum {
 public:
  using Terms = std::map<CanonicalForm, Term>;

  explicit ClassSum(int strands = 1) : strands_(strands) {}
  int strands() const { return strands_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  mpz_class coefficient(const CanonicalForm& representative) const;

  // representative must already be a class_representative output.
  void add_term(const CanonicalForm& representative, const mpz_class& coefficient,
                const BraidWord& sample);

  friend bool operator==(const ClassSum& a, const ClassSum& b);

 private:
  int strands_;
  Terms terms_;
};

// Memoized, thread-safe class representative.
CanonicalForm cached_class_representative(const CanonicalForm& x, const SummitOptions& opts = {});
void clear_class_cache();

ClassSum project_classes(const GroupRingElement& x, const SummitOptions& opts = {});
// A ClassSum seen as a group ring element supported on its representatives.
GroupRingElement embed(const ClassSum& c);

// "s1 s2^-1 A(1,5) A(3,4)^-1": generators with pure-braid runs recognised.
std::string render_word(const BraidWord& w);

struct RenderOptions {
  // When set, every term is shown as "β · w" with w = beta^-1 * sample.
  std::optional<BraidWord> beta;
};

std::string to_string(const GroupRingElement& x, const RenderOptions& opts = {});
std::string to_string(const ClassSum& x, const RenderOptions& opts = {});

}  // namespace braidforce
