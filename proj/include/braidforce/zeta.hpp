#pragma once

// The representation zeta_{n,m} of B_n by matrices over Z[B_{n+m}], acting
// on row vectors indexed by compositions of m into n-1 parts. Matrices of a
// word multiply in word order.

#include <gmpxx.h>

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "braidforce/braid.hpp"
#include "braidforce/groupring.hpp"

namespace braidforce {

struct Composition {
  int n = 2;
  int m = 0;
  std::vector<int> parts;  // mu_1 .. mu_{n-1}

  int operator[](int i) const { return parts[i - 1]; }  // 1-based
  // u_j = mu_j + ... + mu_{n-1}, with u_j = m for j <= 0 and 0 for j >= n.
  int suffix(int j) const;
  std::string to_string() const;

  friend bool operator==(const Composition&, const Composition&) = default;
};

// Compositions of m into n-1 parts in colexicographic order.
std::vector<Composition> basis(int n, int m);
// C(m+n-2, m)
std::size_t basis_size(int n, int m);

// Permutation of {1..m} sending i+1, ..., l to
// k+1, ..., l, k, k-1, ..., j+1, i+1, ..., j and fixing everything else.
// Requires 0 <= i <= j <= k <= l <= m.
Permutation theta_perm(int i, int j, int k, int l, int m);
// Shuffles fixing everything outside (j, l] and increasing on (j, k] and on (k, l].
std::vector<Permutation> theta_set(int j, int k, int l, int m);

// sgn(eta) * alpha_eta^{sign}, where alpha_eta is the positive permutation
// braid on strands n+1..n+m realising eta.
GroupRingElement eta_signed(const Permutation& eta, int sign, int n, int m);

class RepMatrix {
 public:
  using Row = std::map<int, GroupRingElement>;

  RepMatrix() = default;
  RepMatrix(int n, int m);
  static RepMatrix identity(int n, int m);

  int n() const { return n_; }
  int m() const { return m_; }
  int strands() const { return n_ + m_; }
  int dim() const { return static_cast<int>(rows_.size()); }
  const std::vector<Composition>& index() const { return basis_; }

  const Row& row(int r) const { return rows_[r]; }
  const GroupRingElement& at(int r, int c) const;
  void set(int r, int c, GroupRingElement value);
  std::size_t nonzero_count() const;

  friend bool operator==(const RepMatrix& a, const RepMatrix& b);

 private:
  int n_ = 2;
  int m_ = 0;
  std::vector<Composition> basis_;
  std::vector<Row> rows_;
  GroupRingElement zero_;
};

RepMatrix operator*(const RepMatrix& a, const RepMatrix& b);
// Entrywise involution of the transpose.
RepMatrix dual(const RepMatrix& a);

// Matrix of sigma_i^{sign}; memoized.
const RepMatrix& gen_matrix(int n, int m, int i, int sign);
RepMatrix rep(const BraidWord& a, int m);

// Row-major dump; one "row r: (c) entry" line per nonzero entry.
std::string dump(const RepMatrix& a, const RenderOptions& opts = {});

// Integer Laurent polynomial in one variable a.
class Laurent {
 public:
  Laurent() = default;
  static Laurent monomial(int exponent, const mpz_class& coefficient = 1);

  const std::map<int, mpz_class>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add(int exponent, const mpz_class& coefficient);
  std::string to_string() const;

  friend bool operator==(const Laurent&, const Laurent&) = default;
  friend Laurent operator+(const Laurent& x, const Laurent& y);
  friend Laurent operator*(const Laurent& x, const Laurent& y);

 private:
  std::map<int, mpz_class> terms_;
};

using LaurentMatrix = std::vector<std::vector<Laurent>>;

// Power of a picked up by a braid in which strand `special` returns home:
// half the signed count of crossings involving that strand.
int linking_exponent(const BraidWord& w, int special);
// sigma_j -> 1, A(i,n+1) -> a. Only for m = 1.
LaurentMatrix burau_specialize(const RepMatrix& a);
LaurentMatrix operator*(const LaurentMatrix& x, const LaurentMatrix& y);

}  // namespace braidforce
