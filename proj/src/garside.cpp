#include "braidforce/garside.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <map>
#include <set>

#include "braidforce/errors.hpp"

namespace braidforce {

std::string CanonicalForm::to_string() const {
  std::string s = "Δ^" + std::to_string(delta_power);
  for (const Permutation& f : factors) s += " | " + f.one_line();
  return s;
}

std::strong_ordering operator<=>(const CanonicalForm& a, const CanonicalForm& b) {
  if (auto c = a.strands <=> b.strands; c != 0) return c;
  if (auto c = a.delta_power <=> b.delta_power; c != 0) return c;
  if (auto c = a.factors.size() <=> b.factors.size(); c != 0) return c;
  for (std::size_t i = 0; i < a.factors.size(); ++i) {
    if (auto c = a.factors[i] <=> b.factors[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

namespace simple {

namespace {

// Crossing relation: bit j of row i (i < j) set iff strands starting at i and
// j cross.
using Crossings = std::array<std::uint32_t, kMaxStrands>;

Crossings crossings(const Permutation& a) {
  Crossings x{};
  const int n = a.size();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (a.at(i) > a.at(j)) x[i] |= 1u << j;
  return x;
}

Permutation from_crossings(const Crossings& x, int n) {
  Permutation p(n);
  for (int i = 0; i < n; ++i) {
    int pos = 0;
    for (int j = 0; j < i; ++j)
      if (!(x[j] >> i & 1u)) ++pos;
    pos += std::popcount(x[i]);
    p.set(i, pos);
  }
  return p;
}

// a * sigma_{k+1}, valid when k is not in the finishing set of a.
void times_gen(Permutation& a, int k) {
  for (int s = 0; s < a.size(); ++s) {
    const int v = a.at(s);
    if (v == k) a.set(s, k + 1);
    else if (v == k + 1) a.set(s, k);
  }
}

// sigma_{k+1}^-1 * b, valid when k is in the starting set of b.
void gen_inv_times(Permutation& b, int k) {
  const int t = b.at(k);
  b.set(k, b.at(k + 1));
  b.set(k + 1, t);
}

}  // namespace

Permutation identity(int n) { return Permutation(n); }

Permutation delta(int n) { return Permutation::reversal(n); }

Permutation generator(int n, int k) { return Permutation::transposition(n, k, k + 1); }

bool is_identity(const Permutation& a) { return a.is_identity(); }

bool is_delta(const Permutation& a) {
  const int n = a.size();
  for (int i = 0; i < n; ++i)
    if (a.at(i) != n - 1 - i) return false;
  return true;
}

Gens starting_set(const Permutation& a) {
  Gens g = 0;
  for (int k = 0; k + 1 < a.size(); ++k)
    if (a.at(k) > a.at(k + 1)) g |= 1u << k;
  return g;
}

Gens finishing_set(const Permutation& a) {
  const Permutation inv = a.inverse();
  return starting_set(inv);
}

Permutation tau(const Permutation& a, int power) {
  if (power % 2 == 0) return a;
  const int n = a.size();
  Permutation r(n);
  for (int s = 0; s < n; ++s) r.set(s, n - 1 - a.at(n - 1 - s));
  return r;
}

Permutation right_complement(const Permutation& a) {
  const int n = a.size();
  const Permutation inv = a.inverse();
  Permutation r(n);
  for (int s = 0; s < n; ++s) r.set(s, n - 1 - inv.at(s));
  return r;
}

bool prefix_of(const Permutation& a, const Permutation& b) {
  const Crossings xa = crossings(a), xb = crossings(b);
  for (int i = 0; i < a.size(); ++i)
    if (xa[i] & ~xb[i]) return false;
  return true;
}

Permutation meet(const Permutation& a, const Permutation& b) {
  Permutation c = identity(a.size());
  Permutation ra = a, rb = b;
  for (;;) {
    const Gens common = starting_set(ra) & starting_set(rb);
    if (!common) return c;
    const int k = std::countr_zero(common);
    times_gen(c, k);
    gen_inv_times(ra, k);
    gen_inv_times(rb, k);
  }
}

Permutation join(const Permutation& a, const Permutation& b) {
  const int n = a.size();
  Crossings x = crossings(a);
  const Crossings xb = crossings(b);
  for (int i = 0; i < n; ++i) x[i] |= xb[i];
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if (x[i] >> j & 1u) x[i] |= x[j];
  return from_crossings(x, n);
}

Permutation under(const Permutation& a, const Permutation& b) {
  return a.inverse().then(join(a, b));
}

bool left_weight(Permutation& a, Permutation& b) {
  bool changed = false;
  for (;;) {
    const Gens bad = starting_set(b) & ~finishing_set(a);
    if (!bad) return changed;
    const int k = std::countr_zero(bad);
    times_gen(a, k);
    gen_inv_times(b, k);
    changed = true;
  }
}

}  // namespace simple

namespace {

void right_mul_delta(CanonicalForm& x, int q) {
  x.delta_power += q;
  if (q % 2 != 0) {
    for (Permutation& f : x.factors) f = simple::tau(f);
  }
}

void right_mul_simple(CanonicalForm& x, const Permutation& s) {
  if (simple::is_identity(s)) return;
  if (simple::is_delta(s)) {
    right_mul_delta(x, 1);
    return;
  }
  auto& f = x.factors;
  f.push_back(s);
  for (std::size_t i = f.size() - 1; i > 0; --i) {
    if (!simple::left_weight(f[i - 1], f[i])) break;
  }
  std::size_t lead = 0;
  while (lead < f.size() && simple::is_delta(f[lead])) ++lead;
  if (lead) {
    // Leading Delta factors commute to the front unchanged.
    f.erase(f.begin(), f.begin() + static_cast<std::ptrdiff_t>(lead));
    x.delta_power += static_cast<int>(lead);
  }
  while (!f.empty() && simple::is_identity(f.back())) f.pop_back();
}

void check_same(const CanonicalForm& x, const CanonicalForm& y) {
  if (x.strands != y.strands) {
    throw ValidationError("strand-count mismatch: B_" + std::to_string(x.strands) + " vs B_" +
                          std::to_string(y.strands));
  }
}

// Positive element Delta^-inf(x) x.
CanonicalForm positive_part(const CanonicalForm& x) {
  CanonicalForm p(x.strands);
  p.factors = x.factors;
  return p;
}

// (Q \ t) for a positive normal form Q and a simple t.
Permutation under_positive(const CanonicalForm& q, Permutation t) {
  if (q.delta_power > 0) return simple::identity(q.strands);
  for (const Permutation& f : q.factors) {
    t = simple::under(f, t);
    if (simple::is_identity(t)) break;
  }
  return t;
}

}  // namespace

CanonicalForm identity_form(int n) {
  if (n < 1 || n > kMaxStrands) throw ValidationError("strand count out of range");
  return CanonicalForm(n);
}

CanonicalForm delta_form(int n, int power) {
  CanonicalForm x = identity_form(n);
  x.delta_power = n > 1 ? power : 0;
  return x;
}

CanonicalForm simple_form(const Permutation& s) {
  CanonicalForm x = identity_form(std::max(s.size(), 1));
  right_mul_simple(x, s);
  return x;
}

CanonicalForm normal_form(const BraidWord& a) {
  const int n = a.strands();
  CanonicalForm x = identity_form(n);
  for (const Letter& l : a.letters()) {
    const Permutation g = simple::generator(n, l.index);
    if (l.sign > 0) {
      right_mul_simple(x, g);
    } else {
      right_mul_simple(x, simple::right_complement(g));
      right_mul_delta(x, -1);
    }
  }
  return x;
}

CanonicalForm multiply(const CanonicalForm& x, const CanonicalForm& y) {
  check_same(x, y);
  CanonicalForm r = x;
  right_mul_delta(r, y.delta_power);
  for (const Permutation& f : y.factors) right_mul_simple(r, f);
  return r;
}

CanonicalForm inverse(const CanonicalForm& x) {
  const int k = x.canonical_length();
  CanonicalForm r = delta_form(x.strands, -x.delta_power - k);
  for (int i = k; i >= 1; --i) {
    right_mul_simple(r, simple::tau(simple::right_complement(x.factors[i - 1]), i + x.delta_power));
  }
  return r;
}

CanonicalForm conjugate(const CanonicalForm& x, const CanonicalForm& c) {
  return multiply(multiply(inverse(c), x), c);
}

CanonicalForm power(const CanonicalForm& x, int exponent) {
  const CanonicalForm base = exponent < 0 ? inverse(x) : x;
  CanonicalForm r = identity_form(x.strands);
  for (int i = 0; i < std::abs(exponent); ++i) r = multiply(r, base);
  return r;
}

bool equal(const BraidWord& a, const BraidWord& b) {
  if (a.strands() != b.strands()) {
    throw ValidationError("strand-count mismatch: B_" + std::to_string(a.strands()) + " vs B_" +
                          std::to_string(b.strands()));
  }
  return normal_form(a) == normal_form(b);
}

Permutation permutation_of(const CanonicalForm& x) {
  const int n = x.strands;
  Permutation p = (x.delta_power % 2 != 0) ? simple::delta(n) : simple::identity(n);
  for (const Permutation& f : x.factors) p = p.then(f);
  return p;
}

BraidWord to_word(const CanonicalForm& x) {
  const int n = x.strands;
  BraidWord w(n);
  if (n > 1) {
    const BraidWord d = permutation_braid(simple::delta(n));
    w.append(power(d, x.delta_power));
  }
  for (const Permutation& f : x.factors) w.append(permutation_braid(f));
  return w;
}

Permutation cycling_conjugator(const CanonicalForm& x) {
  if (x.factors.empty()) return simple::identity(x.strands);
  return simple::tau(x.factors.front(), x.delta_power);
}

CanonicalForm cycling(const CanonicalForm& x) {
  if (x.factors.empty()) return x;
  CanonicalForm r = x;
  const Permutation t = cycling_conjugator(x);
  r.factors.erase(r.factors.begin());
  right_mul_simple(r, t);
  return r;
}

CanonicalForm decycling(const CanonicalForm& x) {
  if (x.factors.empty()) return x;
  CanonicalForm r = identity_form(x.strands);
  r.delta_power = x.delta_power;
  right_mul_simple(r, simple::tau(x.factors.back(), x.delta_power));
  for (std::size_t i = 0; i + 1 < x.factors.size(); ++i) right_mul_simple(r, x.factors[i]);
  return r;
}

std::optional<std::size_t> SummitSet::find(const CanonicalForm& x) const {
  for (std::size_t i = 0; i < elements.size(); ++i)
    if (elements[i] == x) return i;
  return std::nullopt;
}

CanonicalForm slide_to_super_summit(const CanonicalForm& x, CanonicalForm& conj) {
  conj = identity_form(x.strands);
  CanonicalForm y = x;
  if (y.factors.empty()) return y;
  const int patience = x.strands * (x.strands - 1) / 2;

  int quiet = 0;
  while (quiet < patience && !y.factors.empty()) {
    const Permutation t = cycling_conjugator(y);
    const CanonicalForm next = cycling(y);
    conj = multiply(conj, simple_form(t));
    if (next.inf() > y.inf()) quiet = 0;
    else ++quiet;
    y = next;
  }
  quiet = 0;
  while (quiet < patience && !y.factors.empty()) {
    const CanonicalForm c = inverse(simple_form(y.factors.back()));
    const CanonicalForm next = decycling(y);
    conj = multiply(conj, c);
    if (next.sup() < y.sup()) quiet = 0;
    else ++quiet;
    y = next;
  }
  return y;
}

CanonicalForm slide_to_ultra_summit(const CanonicalForm& x, CanonicalForm& conj) {
  std::map<CanonicalForm, std::size_t> seen;
  std::vector<CanonicalForm> orbit, conjs;
  CanonicalForm y = x;
  CanonicalForm c = identity_form(x.strands);
  for (;;) {
    auto [it, fresh] = seen.emplace(y, orbit.size());
    if (!fresh) {
      conj = multiply(conj, conjs[it->second]);
      return orbit[it->second];
    }
    orbit.push_back(y);
    conjs.push_back(c);
    c = multiply(c, simple_form(cycling_conjugator(y)));
    y = cycling(y);
  }
}

bool in_ultra_summit(const CanonicalForm& x) {
  std::set<CanonicalForm> seen;
  CanonicalForm y = x;
  for (;;) {
    if (!seen.insert(y).second) return y == x;
    y = cycling(y);
    if (y == x) return true;
  }
}

Permutation minimal_simple_super(const CanonicalForm& x, const Permutation& s) {
  const CanonicalForm xi = inverse(x);
  const CanonicalForm px = positive_part(x), pxi = positive_part(xi);
  const int p = x.delta_power, pi = xi.delta_power;
  auto fix = [](const CanonicalForm& pos, int inf, const Permutation& c) {
    const CanonicalForm q = multiply(pos, simple_form(c));
    const Permutation need = under_positive(q, simple::tau(c, inf));
    const Permutation r = c.then(need);
    if (r.inversions() != c.inversions() + need.inversions()) {
      throw std::logic_error("summit conjugator left the simple elements");
    }
    return r;
  };
  Permutation c = s;
  for (;;) {
    const Permutation c1 = fix(px, p, c);
    const Permutation c2 = fix(pxi, pi, c);
    const Permutation next = simple::join(c1, c2);
    if (next == c) return c;
    c = next;
  }
}

Permutation minimal_simple_ultra(const CanonicalForm& x, const Permutation& s) {
  const Permutation start = minimal_simple_super(x, s);
  auto valid = [&](const Permutation& c) { return in_ultra_summit(conjugate(x, simple_form(c))); };
  if (valid(start)) return start;
  // The valid elements above s are closed under meets, so the first one met
  // in a breadth-first walk up the prefix order is the minimum.
  const int n = x.strands;
  std::set<Permutation> level{start}, visited{start};
  while (!level.empty()) {
    std::set<Permutation> next;
    for (const Permutation& c : level) {
      const simple::Gens free = ~simple::finishing_set(c);
      for (int k = 0; k + 1 < n; ++k) {
        if (!(free >> k & 1u)) continue;
        Permutation d = c.then(simple::generator(n, k + 1));
        if (visited.insert(d).second) next.insert(d);
      }
    }
    for (const Permutation& c : next)
      if (valid(c)) return c;
    level = std::move(next);
  }
  return simple::delta(n);
}

Deadline Deadline::after(double seconds) {
  const auto span = std::chrono::duration_cast<std::chrono::steady_clock::duration>(
      std::chrono::duration<double>(seconds));
  return Deadline{std::chrono::steady_clock::now() + span, static_cast<std::size_t>(seconds * 1000)};
}

SummitSet summit_set(const CanonicalForm& x, const SummitOptions& opts) {
  SummitSet out;
  out.kind = opts.kind;
  out.source = x;
  const int n = x.strands;

  CanonicalForm conj;
  CanonicalForm y = slide_to_super_summit(x, conj);
  if (opts.kind == SummitKind::ultra_summit) y = slide_to_ultra_summit(y, conj);

  std::map<CanonicalForm, std::size_t> index;
  auto add = [&](const CanonicalForm& e, const CanonicalForm& c) {
    if (index.count(e)) return false;
    if (out.elements.size() >= opts.max_elements) {
      throw ResourceError("summit-set elements", opts.max_elements);
    }
    if (opts.deadline && opts.deadline->passed()) {
      throw ResourceError("stage time (ms)", opts.deadline->limit_ms);
    }
    index.emplace(e, out.elements.size());
    out.elements.push_back(e);
    out.conjugators.push_back(c);
    return true;
  };
  add(y, conj);
  if (y.factors.empty()) return out;

  for (std::size_t head = 0; head < out.elements.size(); ++head) {
    const CanonicalForm e = out.elements[head];
    const CanonicalForm ce = out.conjugators[head];
    std::set<Permutation> tried;
    for (int k = 1; k < n; ++k) {
      const Permutation g = simple::generator(n, k);
      const Permutation c = opts.kind == SummitKind::ultra_summit ? minimal_simple_ultra(e, g)
                                                                  : minimal_simple_super(e, g);
      if (!tried.insert(c).second) continue;
      const CanonicalForm cf = simple_form(c);
      add(conjugate(e, cf), multiply(ce, cf));
    }
  }
  return out;
}

SummitSet summit_set(const BraidWord& a, const SummitOptions& opts) {
  return summit_set(normal_form(a), opts);
}

std::optional<CanonicalForm> conjugate_test(const CanonicalForm& a, const CanonicalForm& b,
                                            const SummitOptions& opts) {
  check_same(a, b);
  if (permutation_of(a).cycle_type() != permutation_of(b).cycle_type()) return std::nullopt;

  CanonicalForm cb;
  CanonicalForm yb = slide_to_super_summit(b, cb);
  if (opts.kind == SummitKind::ultra_summit) yb = slide_to_ultra_summit(yb, cb);

  CanonicalForm ca;
  CanonicalForm ya = slide_to_super_summit(a, ca);
  if (ya.inf() != yb.inf() || ya.sup() != yb.sup()) return std::nullopt;

  const SummitSet sa = summit_set(a, opts);
  const auto hit = sa.find(yb);
  if (!hit) return std::nullopt;
  // yb = C_i^-1 a C_i = cb^-1 b cb, so (cb C_i^-1) a (cb C_i^-1)^-1 = b.
  return multiply(cb, inverse(sa.conjugators[*hit]));
}

std::optional<BraidWord> conjugate_test(const BraidWord& a, const BraidWord& b,
                                        const SummitOptions& opts) {
  if (a.strands() != b.strands()) {
    throw ValidationError("strand-count mismatch: B_" + std::to_string(a.strands()) + " vs B_" +
                          std::to_string(b.strands()));
  }
  if (exponent_sum(a) != exponent_sum(b)) return std::nullopt;
  auto w = conjugate_test(normal_form(a), normal_form(b), opts);
  if (!w) return std::nullopt;
  return to_word(*w);
}

CanonicalForm class_representative(const CanonicalForm& x, const SummitOptions& opts) {
  const SummitSet s = summit_set(x, opts);
  return *std::min_element(s.elements.begin(), s.elements.end());
}

CanonicalForm class_representative(const BraidWord& a, const SummitOptions& opts) {
  return class_representative(normal_form(a), opts);
}

bool is_periodic(const CanonicalForm& x) {
  const int n = x.strands;
  if (n <= 2) return true;
  for (int e : {n, n - 1}) {
    const CanonicalForm y = power(x, e);
    if (y.factors.empty() && y.delta_power % 2 == 0) return true;
  }
  return false;
}

bool is_periodic(const BraidWord& a) { return is_periodic(normal_form(a)); }

}  // namespace braidforce
