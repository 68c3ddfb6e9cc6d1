#include "braidforce/curves.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>

#include "braidforce/errors.hpp"

namespace braidforce {

namespace {

long pos(long x) { return std::max(x, 0L); }
long neg(long x) { return std::min(x, 0L); }

int coord_size(int punctures) { return std::max(0, 2 * punctures - 4); }

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t x, std::size_t y) { parent[find(x)] = find(y); }
};

void bad_arcs(const LaminationCoords& c) {
  throw ValidationError("coordinates " + c.to_string() + " do not glue to a lamination");
}

}  // namespace

LaminationCoords::LaminationCoords(int punctures)
    : punctures_(punctures), coords_(coord_size(punctures), 0) {
  if (punctures < 1) throw ValidationError("lamination needs at least one puncture");
}

LaminationCoords::LaminationCoords(int punctures, std::vector<long> coords)
    : punctures_(punctures), coords_(std::move(coords)) {
  if (punctures < 1) throw ValidationError("lamination needs at least one puncture");
  if (static_cast<int>(coords_.size()) != coord_size(punctures)) {
    throw ValidationError("expected " + std::to_string(coord_size(punctures)) +
                          " coordinates for " + std::to_string(punctures) + " punctures");
  }
}

bool LaminationCoords::is_empty() const {
  return std::all_of(coords_.begin(), coords_.end(), [](long x) { return x == 0; });
}

std::string LaminationCoords::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(coords_[i]);
  }
  return s + ")";
}

LaminationCoords operator+(const LaminationCoords& x, const LaminationCoords& y) {
  if (x.punctures() != y.punctures()) throw ValidationError("puncture-count mismatch");
  std::vector<long> v = x.coords();
  for (std::size_t i = 0; i < v.size(); ++i) v[i] += y.coords()[i];
  return LaminationCoords(x.punctures(), std::move(v));
}

Intersections intersections(const LaminationCoords& c) {
  const int n = c.punctures();
  Intersections r;
  if (n < 3) return r;
  const int k = n - 2;
  long best = 0, partial = 0;
  for (int i = 1; i <= k; ++i) {
    best = std::max(best, std::labs(c.a(i)) + pos(c.b(i)) + partial);
    partial += c.b(i);
  }
  r.beta.resize(n - 1);
  r.beta[0] = 2 * best;
  for (int i = 1; i < n - 1; ++i) r.beta[i] = r.beta[i - 1] - 2 * c.b(i);
  for (int i = 1; i <= k; ++i) {
    const long half = std::max(r.beta[i - 1], r.beta[i]) / 2;
    r.up.push_back(half + c.a(i));
    r.down.push_back(half - c.a(i));
  }
  return r;
}

int component_count(const LaminationCoords& c) {
  const int n = c.punctures();
  if (c.is_empty()) return 0;
  const Intersections s = intersections(c);
  // Node offsets: beta_1..beta_{n-1}, then up and down arcs of punctures 2..n-1.
  std::vector<std::size_t> beta_at(n - 1), up_at(n - 2), down_at(n - 2);
  std::size_t total = 0;
  for (int i = 0; i < n - 1; ++i) {
    if (s.beta[i] < 0) bad_arcs(c);
    beta_at[i] = total;
    total += s.beta[i];
  }
  for (int i = 0; i < n - 2; ++i) {
    if (s.up[i] < 0 || s.down[i] < 0) bad_arcs(c);
    up_at[i] = total;
    total += s.up[i];
    down_at[i] = total;
    total += s.down[i];
  }
  UnionFind uf(total);
  auto cap = [&](int line) {
    const long m = s.beta[line];
    for (long j = 0; j < m / 2; ++j) uf.unite(beta_at[line] + j, beta_at[line] + m - 1 - j);
  };
  cap(0);
  cap(n - 2);
  for (int p = 0; p < n - 2; ++p) {
    const long u = s.up[p], d = s.down[p];
    for (int side = 0; side < 2; ++side) {
      const int line = p + side;
      const long m = s.beta[line];
      if ((u + d - m) % 2 != 0) bad_arcs(c);
      const long z = (u + d - m) / 2, x = u - z, y = d - z;
      if (z < 0 || x < 0 || y < 0) bad_arcs(c);
      for (long j = 0; j < z; ++j) uf.unite(up_at[p] + j, down_at[p] + j);
      for (long j = z; j < z + x; ++j) uf.unite(up_at[p] + j, beta_at[line] + (z + x - 1 - j));
      for (long j = z; j < z + y; ++j) uf.unite(down_at[p] + j, beta_at[line] + (m - y + (j - z)));
    }
  }
  std::set<std::size_t> roots;
  for (std::size_t i = 0; i < total; ++i) roots.insert(uf.find(i));
  return static_cast<int>(roots.size());
}

LaminationCoords act(const LaminationCoords& c, const Letter& l) {
  const int n = c.punctures();
  if (l.index < 1 || l.index >= n) {
    throw ValidationError("generator " + std::to_string(l.index) + " out of range for " +
                          std::to_string(n) + " punctures");
  }
  if (n < 3) return c;
  std::vector<long> v = c.coords();
  auto A = [&](int i) -> long& { return v[2 * (i - 1)]; };
  auto B = [&](int i) -> long& { return v[2 * (i - 1) + 1]; };
  // sigma_i^-1 is sigma_i conjugated by the top-bottom reflection, which
  // negates every a_i.
  auto mirror = [&] {
    for (int k = 1; k <= n - 2; ++k) A(k) = -A(k);
  };
  if (l.sign < 0) mirror();
  const int i = l.index;
  if (i == 1) {
    const long a = A(1), b = B(1);
    A(1) = -b + pos(a + pos(b));
    B(1) = a + pos(b);
  } else if (i == n - 1) {
    const long a = A(n - 2), b = B(n - 2);
    A(n - 2) = -b + neg(a + neg(b));
    B(n - 2) = a + neg(b);
  } else {
    const long a0 = A(i - 1), b0 = B(i - 1), a1 = A(i), b1 = B(i);
    const long t = a0 - a1 - pos(b1) + neg(b0);
    A(i - 1) = a0 - pos(b0) + neg(-pos(b1) - t);
    B(i - 1) = b1 + neg(t);
    A(i) = a1 - neg(b1) + pos(t - neg(b0));
    B(i) = b0 - neg(t);
  }
  if (l.sign < 0) mirror();
  return LaminationCoords(n, std::move(v));
}

LaminationCoords act(const LaminationCoords& c, const BraidWord& a) {
  if (a.strands() != c.punctures()) {
    throw ValidationError("braid on " + std::to_string(a.strands()) + " strands acting on " +
                          std::to_string(c.punctures()) + " punctures");
  }
  LaminationCoords r = c;
  for (const Letter& l : a.letters()) r = act(r, l);
  return r;
}

void RoundMulticurve::validate() const {
  for (const auto& [a, b] : blocks) {
    if (a < 1 || b > punctures || a >= b) {
      throw ValidationError("block [" + std::to_string(a) + "," + std::to_string(b) +
                            "] is not an interval of at least two punctures");
    }
    if (b - a + 1 >= punctures) {
      throw ValidationError("block [" + std::to_string(a) + "," + std::to_string(b) +
                            "] encloses every puncture");
    }
  }
  for (std::size_t i = 0; i < blocks.size(); ++i)
    for (std::size_t j = i + 1; j < blocks.size(); ++j) {
      const auto [a, b] = blocks[i];
      const auto [c, d] = blocks[j];
      const bool disjoint = b < c || d < a;
      const bool nested = (a <= c && d <= b) || (c <= a && b <= d);
      if (blocks[i] == blocks[j] || !(disjoint || nested)) {
        throw ValidationError("blocks " + to_string() + " cross or repeat");
      }
    }
}

std::string RoundMulticurve::to_string() const {
  std::string s = "{";
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (i) s += ",";
    s += "[" + std::to_string(blocks[i].first) + "," + std::to_string(blocks[i].second) + "]";
  }
  return s + "}";
}

LaminationCoords round_coords(const RoundMulticurve& r) {
  r.validate();
  std::vector<long> v(coord_size(r.punctures), 0);
  for (const auto& [a, b] : r.blocks) {
    if (a >= 2) v[2 * (a - 2) + 1] -= 1;
    if (b <= r.punctures - 1) v[2 * (b - 2) + 1] += 1;
  }
  return LaminationCoords(r.punctures, std::move(v));
}

std::optional<RoundMulticurve> invariant_round_multicurve(const BraidWord& a) {
  const int n = a.strands();
  const Permutation p = permutation_of(a);
  for (int s = 1; s <= n; ++s) {
    for (int e = s + 1; e <= n && e - s + 1 < n; ++e) {
      RoundMulticurve r{n, {}};
      std::pair<int, int> block{s, e};
      bool ok = true;
      do {
        r.blocks.push_back(block);
        int lo = n + 1, hi = 0;
        for (int k = block.first; k <= block.second; ++k) {
          lo = std::min(lo, p(k));
          hi = std::max(hi, p(k));
        }
        if (hi - lo != e - s) {
          ok = false;
          break;
        }
        block = {lo, hi};
      } while (block != std::pair<int, int>{s, e});
      if (!ok) continue;
      std::sort(r.blocks.begin(), r.blocks.end());
      bool disjoint = true;
      for (std::size_t i = 0; i + 1 < r.blocks.size(); ++i)
        disjoint = disjoint && r.blocks[i].second < r.blocks[i + 1].first;
      if (!disjoint) continue;
      const LaminationCoords c = round_coords(r);
      if (act(c, a) == c) return r;
    }
  }
  return std::nullopt;
}

bool is_reducible(const BraidWord& a, const SummitOptions& opts) {
  if (a.strands() < 3) return false;
  SummitOptions o = opts;
  o.kind = SummitKind::super_summit;
  const SummitSet sss = summit_set(a, o);
  for (const CanonicalForm& x : sss.elements) {
    if (invariant_round_multicurve(to_word(x))) return true;
  }
  return false;
}

std::string to_string(ThurstonType t) {
  switch (t) {
    case ThurstonType::periodic:
      return "periodic";
    case ThurstonType::reducible:
      return "reducible";
    case ThurstonType::pseudo_anosov:
      return "pseudo_anosov";
  }
  return "?";
}

ThurstonType thurston_type(const BraidWord& a, const SummitOptions& opts) {
  if (is_periodic(a)) return ThurstonType::periodic;
  if (is_reducible(a, opts)) return ThurstonType::reducible;
  return ThurstonType::pseudo_anosov;
}

}  // namespace braidforce
