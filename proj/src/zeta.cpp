#include "braidforce/zeta.hpp"

#include <algorithm>
#include <mutex>
#include <tuple>

#include "braidforce/errors.hpp"

namespace braidforce {

int Composition::suffix(int j) const {
  if (j <= 0) return m;
  int s = 0;
  for (int k = j; k <= n - 1; ++k) s += parts[k - 1];
  return s;
}

std::string Composition::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts[i]);
  }
  return s + ")";
}

namespace {

void fill(std::vector<int>& cur, int pos, int left, std::vector<Composition>& out, int n, int m) {
  if (pos + 1 == static_cast<int>(cur.size())) {
    cur[pos] = left;
    out.push_back(Composition{n, m, cur});
    return;
  }
  for (int x = 0; x <= left; ++x) {
    cur[pos] = x;
    fill(cur, pos + 1, left - x, out, n, m);
  }
}

GroupRingElement word_element(const BraidWord& w, int coefficient = 1) {
  return GroupRingElement::monomial(w, coefficient);
}

}  // namespace

std::vector<Composition> basis(int n, int m) {
  if (n < 2) throw ValidationError("basis needs n >= 2, got " + std::to_string(n));
  if (m < 0) throw ValidationError("basis needs m >= 0, got " + std::to_string(m));
  std::vector<Composition> out;
  std::vector<int> cur(n - 1, 0);
  fill(cur, 0, m, out, n, m);
  std::sort(out.begin(), out.end(), [](const Composition& a, const Composition& b) {
    return std::lexicographical_compare(a.parts.rbegin(), a.parts.rend(), b.parts.rbegin(),
                                        b.parts.rend());
  });
  return out;
}

std::size_t basis_size(int n, int m) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(m + n - 2), static_cast<unsigned long>(m));
  return r.get_ui();
}

Permutation theta_perm(int i, int j, int k, int l, int m) {
  if (!(0 <= i && i <= j && j <= k && k <= l && l <= m)) {
    throw ValidationError("theta needs 0 <= i <= j <= k <= l <= m");
  }
  std::vector<int> img(m);
  for (int x = 1; x <= m; ++x) img[x - 1] = x;
  std::vector<int> target;
  for (int x = k + 1; x <= l; ++x) target.push_back(x);
  for (int x = k; x >= j + 1; --x) target.push_back(x);
  for (int x = i + 1; x <= j; ++x) target.push_back(x);
  for (int x = i + 1; x <= l; ++x) img[x - 1] = target[x - i - 1];
  return Permutation::from_images(img);
}

std::vector<Permutation> theta_set(int j, int k, int l, int m) {
  if (!(0 <= j && j <= k && k <= l && l <= m)) {
    throw ValidationError("Theta needs 0 <= j <= k <= l <= m");
  }
  const int len = l - j, first = k - j;
  std::vector<Permutation> out;
  // chosen[t] marks the slots j+1+t that receive the first run.
  std::vector<bool> chosen(len, false);
  std::fill(chosen.begin(), chosen.begin() + first, true);
  do {
    std::vector<int> img(m);
    for (int x = 1; x <= m; ++x) img[x - 1] = x;
    int a = j + 1, b = k + 1;
    for (int t = 0; t < len; ++t) {
      const int value = j + 1 + t;
      if (chosen[t]) img[(a++) - 1] = value;
      else img[(b++) - 1] = value;
    }
    out.push_back(Permutation::from_images(img));
  } while (std::prev_permutation(chosen.begin(), chosen.end()));
  return out;
}

GroupRingElement eta_signed(const Permutation& eta, int sign, int n, int m) {
  if (eta.size() != m) throw ValidationError("eta must act on m points");
  const int strands = n + m;
  BraidWord alpha = shift(permutation_braid(eta), n, strands);
  if (sign < 0) alpha = inverse(alpha);
  return word_element(alpha, eta.sign());
}

namespace {

GroupRingElement theta_sum(int j, int k, int l, int n, int m) {
  GroupRingElement s(n + m);
  for (const Permutation& eta : theta_set(j, k, l, m)) s = s + eta_signed(eta, 1, n, m);
  return s;
}

// A(i,n+lo) A(i,n+lo+1) ... A(i,n+hi)
BraidWord a_product(int i, int lo, int hi, int n, int m) {
  BraidWord w(n + m);
  for (int k = lo; k <= hi; ++k) w.append(pure_braid(i, n + k, n + m));
  return w;
}

bool nonvanishing(const Composition& mu, const Composition& nu, int i) {
  const int n = mu.n;
  for (int k = 1; k <= n - 1; ++k) {
    if (k == i - 1 || k == i + 1) {
      if (mu[k] > nu[k]) return false;
    } else if (k != i && mu[k] != nu[k]) {
      return false;
    }
  }
  return true;
}

GroupRingElement entry(const Composition& mu, const Composition& nu, int i, int sign) {
  const int n = mu.n, m = mu.m, strands = n + m;
  auto u = [&](int j) { return mu.suffix(j); };
  auto v = [&](int j) { return nu.suffix(j); };
  const int parity = nu[i] % 2 == 0 ? 1 : -1;
  const GroupRingElement shuffles =
      theta_sum(v(i), u(i), v(i - 1), n, m) * theta_sum(v(i + 2), u(i + 1), v(i + 1), n, m);
  BraidWord gen(strands);
  gen.append(Letter{i, sign});
  if (sign > 0) {
    const BraidWord head = concat(gen, a_product(i, u(i + 1) + 1, v(i), n, m));
    const Permutation th = theta_perm(v(i + 1), v(i + 1), v(i), v(i), m);
    return word_element(head, parity) * eta_signed(th, 1, n, m) * shuffles;
  }
  // The inverse-side block rearrangement is read in the opposite direction;
  // with the literal reading sigma_i^{+1} sigma_i^{-1} fails to be 1 once m >= 3.
  const Permutation th = theta_perm(u(i + 1), v(i + 1), v(i), u(i), m).inverse();
  const BraidWord a_inv = inverse(a_product(i, v(i + 1) + 1, u(i), n, m));
  return gre_scale(eta_signed(th, -1, n, m), parity) * word_element(a_inv) * shuffles *
         word_element(gen);
}

RepMatrix build_generator(int n, int m, int i, int sign) {
  RepMatrix out(n, m);
  const auto& idx = out.index();
  for (int r = 0; r < out.dim(); ++r) {
    for (int c = 0; c < out.dim(); ++c) {
      if (!nonvanishing(idx[r], idx[c], i)) continue;
      out.set(r, c, entry(idx[r], idx[c], i, sign));
    }
  }
  return out;
}

}  // namespace

RepMatrix::RepMatrix(int n, int m)
    : n_(n), m_(m), basis_(basis(n, m)), rows_(basis_.size()), zero_(n + m) {
  if (n + m > kMaxStrands) throw ValidationError("n + m exceeds the strand limit");
}

RepMatrix RepMatrix::identity(int n, int m) {
  RepMatrix r(n, m);
  for (int i = 0; i < r.dim(); ++i) r.set(i, i, GroupRingElement::one(n + m));
  return r;
}

const GroupRingElement& RepMatrix::at(int r, int c) const {
  auto it = rows_[r].find(c);
  return it == rows_[r].end() ? zero_ : it->second;
}

void RepMatrix::set(int r, int c, GroupRingElement value) {
  if (value.strands() != strands()) throw ValidationError("matrix entry lives in the wrong braid group");
  if (value.is_zero()) rows_[r].erase(c);
  else rows_[r][c] = std::move(value);
}

std::size_t RepMatrix::nonzero_count() const {
  std::size_t k = 0;
  for (const Row& r : rows_) k += r.size();
  return k;
}

bool operator==(const RepMatrix& a, const RepMatrix& b) {
  if (a.n_ != b.n_ || a.m_ != b.m_) return false;
  for (int r = 0; r < a.dim(); ++r) {
    if (a.rows_[r].size() != b.rows_[r].size()) return false;
    for (const auto& [c, x] : a.rows_[r]) {
      if (!(b.at(r, c) == x)) return false;
    }
  }
  return true;
}

RepMatrix operator*(const RepMatrix& a, const RepMatrix& b) {
  if (a.n() != b.n() || a.m() != b.m()) throw ValidationError("matrix shape mismatch");
  RepMatrix out(a.n(), a.m());
  for (int r = 0; r < a.dim(); ++r) {
    std::map<int, GroupRingElement> acc;
    for (const auto& [k, x] : a.row(r)) {
      for (const auto& [c, y] : b.row(k)) {
        auto it = acc.find(c);
        if (it == acc.end()) acc.emplace(c, x * y);
        else it->second = it->second + x * y;
      }
    }
    for (auto& [c, x] : acc) out.set(r, c, std::move(x));
  }
  return out;
}

RepMatrix dual(const RepMatrix& a) {
  RepMatrix out(a.n(), a.m());
  for (int r = 0; r < a.dim(); ++r)
    for (const auto& [c, x] : a.row(r)) out.set(c, r, involution(x));
  return out;
}

const RepMatrix& gen_matrix(int n, int m, int i, int sign) {
  if (n < 2) throw ValidationError("zeta needs n >= 2");
  if (i < 1 || i > n - 1) {
    throw ValidationError("generator index " + std::to_string(i) + " out of range for B_" +
                          std::to_string(n));
  }
  if (sign != 1 && sign != -1) throw ValidationError("sign must be +1 or -1");
  static std::mutex mutex;
  static std::map<std::tuple<int, int, int, int>, std::unique_ptr<RepMatrix>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[{n, m, i, sign}];
  if (!slot) slot = std::make_unique<RepMatrix>(build_generator(n, m, i, sign));
  return *slot;
}

RepMatrix rep(const BraidWord& a, int m) {
  RepMatrix out = RepMatrix::identity(a.strands(), m);
  for (const Letter& l : a.letters()) out = out * gen_matrix(a.strands(), m, l.index, l.sign);
  return out;
}

std::string dump(const RepMatrix& a, const RenderOptions& opts) {
  std::string s;
  const auto& idx = a.index();
  for (int r = 0; r < a.dim(); ++r) {
    for (const auto& [c, x] : a.row(r)) {
      s += idx[r].to_string() + " -> " + idx[c].to_string() + ": " + to_string(x, opts) + "\n";
    }
  }
  return s;
}

Laurent Laurent::monomial(int exponent, const mpz_class& coefficient) {
  Laurent l;
  l.add(exponent, coefficient);
  return l;
}

void Laurent::add(int exponent, const mpz_class& coefficient) {
  if (coefficient == 0) return;
  auto& c = terms_[exponent];
  c += coefficient;
  if (c == 0) terms_.erase(exponent);
}

std::string Laurent::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [e, c] : terms_) {
    std::string t = c.get_str();
    if (e != 0) t += "*a^" + std::to_string(e);
    if (!s.empty()) s += " + ";
    s += t;
  }
  return s;
}

Laurent operator+(const Laurent& x, const Laurent& y) {
  Laurent r = x;
  for (const auto& [e, c] : y.terms_) r.add(e, c);
  return r;
}

Laurent operator*(const Laurent& x, const Laurent& y) {
  Laurent r;
  for (const auto& [ex, cx] : x.terms_)
    for (const auto& [ey, cy] : y.terms_) r.add(ex + ey, cx * cy);
  return r;
}

int linking_exponent(const BraidWord& w, int special) {
  int pos = special, twice = 0;
  for (const Letter& l : w.letters()) {
    if (l.index == pos) {
      twice += l.sign;
      pos = l.index + 1;
    } else if (l.index + 1 == pos) {
      twice += l.sign;
      pos = l.index;
    }
  }
  if (pos != special) throw ValidationError("strand " + std::to_string(special) + " does not return home");
  return twice / 2;
}

LaurentMatrix burau_specialize(const RepMatrix& a) {
  if (a.m() != 1) throw ValidationError("Burau specialization needs m = 1");
  const int d = a.dim();
  LaurentMatrix out(d, std::vector<Laurent>(d));
  for (int r = 0; r < d; ++r) {
    for (const auto& [c, x] : a.row(r)) {
      for (const auto& [key, term] : x.terms()) {
        out[r][c].add(linking_exponent(term.sample, a.n() + 1), term.coefficient);
      }
    }
  }
  return out;
}

LaurentMatrix operator*(const LaurentMatrix& x, const LaurentMatrix& y) {
  const std::size_t d = x.size();
  LaurentMatrix out(d, std::vector<Laurent>(d));
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t k = 0; k < d; ++k) {
      if (x[r][k].is_zero()) continue;
      for (std::size_t c = 0; c < d; ++c) out[r][c] = out[r][c] + x[r][k] * y[k][c];
    }
  return out;
}

}  // namespace braidforce
