#pragma once

// Hand-transcribed reference matrices and trace formulas, in the
// library's word syntax. Shared by the unit and acceptance tests.

#include <string>
#include <utility>
#include <vector>

#include "braidforce/groupring.hpp"
#include "braidforce/zeta.hpp"

namespace reference {

using braidforce::BraidWord;
using braidforce::GroupRingElement;
using braidforce::RepMatrix;

// Sum of coefficient * prefix word suffix.
inline GroupRingElement sum(int strands, const std::string& prefix,
                            const std::vector<std::pair<long, std::string>>& terms,
                            const std::string& suffix = "") {
  GroupRingElement x(strands);
  for (const auto& [c, w] : terms) {
    const BraidWord word = braidforce::parse_word(prefix + " " + w + " " + suffix, strands);
    x = x + GroupRingElement::monomial(word, c);
  }
  return x;
}

using Cells = std::vector<std::vector<std::vector<std::pair<long, std::string>>>>;

inline RepMatrix matrix(int n, int m, const std::string& prefix, const Cells& cells,
                        const std::string& suffix = "") {
  RepMatrix a(n, m);
  for (int r = 0; r < a.dim(); ++r)
    for (int c = 0; c < a.dim(); ++c) {
      if (cells[r][c].empty()) continue;
      a.set(r, c, sum(n + m, prefix, cells[r][c], suffix));
    }
  return a;
}

// zeta_{3,2} of sigma_1, sigma_1^-1, sigma_2, sigma_2^-1, basis (2,0),(1,1),(0,2).
inline RepMatrix zeta32_s1() {
  return matrix(3, 2, "1",
                {{{{-1, "A(1,4) A(1,5) 4"}}, {{-1, "A(1,4) A(1,5)"}}, {{1, "A(1,4) A(1,5)"}}},
                 {{}, {{-1, "A(1,5)"}}, {{1, "A(1,5)"}, {-1, "A(1,5) 4"}}},
                 {{}, {}, {{1, ""}}}});
}

inline RepMatrix zeta32_s1_inv() {
  return matrix(3, 2, "",
                {{{{-1, "-4 A(1,5)^-1 A(1,4)^-1"}}, {{1, "-4 A(1,5)^-1"}}, {{1, ""}}},
                 {{}, {{-1, "A(1,5)^-1"}}, {{1, ""}, {-1, "4"}}},
                 {{}, {}, {{1, ""}}}},
                "-1");
}

inline RepMatrix zeta32_s2() {
  return matrix(3, 2, "2",
                {{{{1, ""}}, {}, {}},
                 {{{1, ""}, {-1, "4"}}, {{-1, "A(2,4)"}}, {}},
                 {{{1, ""}}, {{-1, "A(2,4)"}}, {{-1, "A(2,4) A(2,5) 4"}}}});
}

inline RepMatrix zeta32_s2_inv() {
  return matrix(3, 2, "",
                {{{{1, ""}}, {}, {}},
                 {{{1, "A(2,4)^-1"}, {-1, "A(2,4)^-1 4"}}, {{-1, "A(2,4)^-1"}}, {}},
                 {{{1, "A(2,5)^-1 A(2,4)^-1"}},
                  {{1, "-4 A(2,5)^-1 A(2,4)^-1"}},
                  {{-1, "-4 A(2,5)^-1 A(2,4)^-1"}}}},
                "-2");
}

// zeta_{n,1}(sigma_i) as transcribed: sigma_i times the identity with
// rows i-1..i+1 replaced by (1 0 0 / A -A 1 / 0 0 1), A = A(i,n+1).
inline RepMatrix zeta_n1_reference(int n, int i) {
  RepMatrix a(n, 1);
  const std::string s = std::to_string(i);
  const std::string A = "A(" + s + "," + std::to_string(n + 1) + ")";
  for (int r = 0; r < n - 1; ++r) {
    if (r == i - 1) continue;
    a.set(r, r, sum(n + 1, s, {{1, ""}}));
  }
  if (i - 2 >= 0) a.set(i - 1, i - 2, sum(n + 1, s, {{1, A}}));
  a.set(i - 1, i - 1, sum(n + 1, s, {{-1, A}}));
  if (i < n - 1) a.set(i - 1, i, sum(n + 1, s, {{1, ""}}));
  return a;
}

// zeta_{5,1}(beta) for beta = s1 s2 s3^-1 s4^-1, as transcribed (11 terms).
inline RepMatrix zeta51_s1s2s3inv4inv() {
  const std::string b = "1 2 -3 -4";
  return matrix(5, 1, b,
                {{{},
                  {{-1, "A(1,6) A(2,6)"}, {1, "A(1,6) A(2,6) A(5,6)^-1"}},
                  {},
                  {{1, "A(1,6) A(2,6) A(5,6)^-1"}}},
                 {{{1, ""}},
                  {{-1, "A(2,6)"}, {1, "A(2,6) A(5,6)^-1"}},
                  {},
                  {{1, "A(2,6) A(5,6)^-1"}}},
                 {{}, {{1, "A(5,6)^-1"}}, {}, {{-1, "A(5,6)^-1"}}},
                 {{}, {}, {{1, "A(5,6)^-1"}}, {{-1, "A(5,6)^-1"}}}});
}

// beta = s1 s2^-1 in B_3 with m = 2; the merged trace terms as
// written, beta prefixed, with their signs.
inline std::vector<std::pair<long, std::string>> s1s2inv_terms() {
  return {{1, ""},
          {-1, "A(3,5)^-1 A(3,4)^-1 -4"},
          {-1, "A(1,4) A(1,5) 4"},
          {-1, "A(3,4)^-1"},
          {-1, "A(1,5)"},
          {1, "A(3,4)^-1 -4"},
          {1, "A(1,5) 4"},
          {1, "A(1,5) A(3,4)^-1"}};
}

// The six-summand pre-merge diagonal for s1 s2^-1, m = 2, in expanded form:
// s1 ( ... ) s2^-1.
inline std::vector<std::pair<long, std::string>> s1s2inv_raw_diagonal() {
  return {{-1, "A(1,4) A(1,5) 4"},
          {-1, "A(1,4) A(1,5) A(2,4)^-1"},
          {1, "A(1,4) A(1,5) A(2,4)^-1 4"},
          {1, "A(1,4) A(1,5) A(2,5)^-1 A(2,4)^-1"},
          {1, "A(1,5) A(2,4)^-1"},
          {1, "A(1,5) -4 A(2,5)^-1 A(2,4)^-1"},
          {-1, "A(1,5) 4 -4 A(2,5)^-1 A(2,4)^-1"},
          {-1, "-4 A(2,5)^-1 A(2,4)^-1"}};
}

}  // namespace reference
