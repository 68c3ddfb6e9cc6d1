#include "braidforce/groupring.hpp"

#include <mutex>
#include <shared_mutex>

#include "braidforce/errors.hpp"

namespace braidforce {

namespace {

void check_same(int a, int b) {
  if (a != b) {
    throw ValidationError("strand-count mismatch: B_" + std::to_string(a) + " vs B_" +
                          std::to_string(b));
  }
}

template <class Map>
void accumulate(Map& terms, const CanonicalForm& key, const mpz_class& c, const BraidWord& sample) {
  if (c == 0) return;
  auto it = terms.find(key);
  if (it == terms.end()) {
    terms.emplace(key, Term{c, sample});
    return;
  }
  it->second.coefficient += c;
  if (it->second.coefficient == 0) terms.erase(it);
}

template <class Map>
bool same_terms(const Map& a, const Map& b) {
  if (a.size() != b.size()) return false;
  for (auto ia = a.begin(), ib = b.begin(); ia != a.end(); ++ia, ++ib) {
    if (!(ia->first == ib->first) || ia->second.coefficient != ib->second.coefficient) return false;
  }
  return true;
}

struct ClassCache {
  std::shared_mutex mutex;
  std::map<std::pair<int, CanonicalForm>, CanonicalForm> reps;
};

ClassCache& class_cache() {
  static ClassCache cache;
  return cache;
}

template <class Map>
std::string render_terms(const Map& terms, const RenderOptions& opts) {
  if (terms.empty()) return "0";
  std::string out;
  for (const auto& [key, term] : terms) {
    mpz_class c = term.coefficient;
    const bool negative = c < 0;
    if (negative) c = -c;
    std::string body;
    if (opts.beta) {
      const BraidWord rest = free_reduce(concat(inverse(*opts.beta), term.sample));
      body = rest.empty() ? "β" : "β " + render_word(rest);
    } else {
      body = term.sample.empty() ? "" : render_word(term.sample);
    }
    std::string text;
    if (body.empty()) text = c.get_str();
    else if (c == 1) text = body;
    else text = c.get_str() + " " + body;
    if (out.empty()) out = negative ? "-" + text : text;
    else out += (negative ? " - " : " + ") + text;
  }
  return out;
}

}  // namespace

GroupRingElement GroupRingElement::one(int strands) {
  return monomial(BraidWord(strands));
}

GroupRingElement GroupRingElement::monomial(const BraidWord& w, const mpz_class& coefficient) {
  GroupRingElement x(w.strands());
  x.add_term(normal_form(w), coefficient, w);
  return x;
}

mpz_class GroupRingElement::coefficient(const CanonicalForm& key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? mpz_class(0) : it->second.coefficient;
}

void GroupRingElement::add_term(const CanonicalForm& key, const mpz_class& coefficient,
                                const BraidWord& sample) {
  check_same(strands_, key.strands);
  accumulate(terms_, key, coefficient, sample);
}

bool operator==(const GroupRingElement& a, const GroupRingElement& b) {
  return a.strands_ == b.strands_ && same_terms(a.terms_, b.terms_);
}

GroupRingElement gre_add(const GroupRingElement& x, const GroupRingElement& y) {
  check_same(x.strands(), y.strands());
  GroupRingElement r = x;
  for (const auto& [k, t] : y.terms()) r.add_term(k, t.coefficient, t.sample);
  return r;
}

GroupRingElement gre_mul(const GroupRingElement& x, const GroupRingElement& y) {
  check_same(x.strands(), y.strands());
  GroupRingElement r(x.strands());
  for (const auto& [kx, tx] : x.terms()) {
    for (const auto& [ky, ty] : y.terms()) {
      r.add_term(multiply(kx, ky), tx.coefficient * ty.coefficient, concat(tx.sample, ty.sample));
    }
  }
  return r;
}

GroupRingElement gre_neg(const GroupRingElement& x) { return gre_scale(x, -1); }

GroupRingElement gre_scale(const GroupRingElement& x, const mpz_class& k) {
  GroupRingElement r(x.strands());
  if (k == 0) return r;
  for (const auto& [key, t] : x.terms()) r.add_term(key, t.coefficient * k, t.sample);
  return r;
}

GroupRingElement involution(const GroupRingElement& x) {
  GroupRingElement r(x.strands());
  for (const auto& [key, t] : x.terms()) r.add_term(inverse(key), t.coefficient, inverse(t.sample));
  return r;
}

mpz_class ClassSum::coefficient(const CanonicalForm& representative) const {
  auto it = terms_.find(representative);
  return it == terms_.end() ? mpz_class(0) : it->second.coefficient;
}

void ClassSum::add_term(const CanonicalForm& representative, const mpz_class& coefficient,
                        const BraidWord& sample) {
  check_same(strands_, representative.strands);
  accumulate(terms_, representative, coefficient, sample);
}

bool operator==(const ClassSum& a, const ClassSum& b) {
  return a.strands_ == b.strands_ && same_terms(a.terms_, b.terms_);
}

CanonicalForm cached_class_representative(const CanonicalForm& x, const SummitOptions& opts) {
  ClassCache& cache = class_cache();
  const auto key = std::make_pair(static_cast<int>(opts.kind), x);
  {
    std::shared_lock lock(cache.mutex);
    auto it = cache.reps.find(key);
    if (it != cache.reps.end()) return it->second;
  }
  CanonicalForm rep = class_representative(x, opts);
  std::unique_lock lock(cache.mutex);
  cache.reps.emplace(key, rep);
  return rep;
}

void clear_class_cache() {
  ClassCache& cache = class_cache();
  std::unique_lock lock(cache.mutex);
  cache.reps.clear();
}

ClassSum project_classes(const GroupRingElement& x, const SummitOptions& opts) {
  ClassSum out(x.strands());
  for (const auto& [key, t] : x.terms()) {
    out.add_term(cached_class_representative(key, opts), t.coefficient, t.sample);
  }
  return out;
}

GroupRingElement embed(const ClassSum& c) {
  GroupRingElement r(c.strands());
  for (const auto& [key, t] : c.terms()) r.add_term(key, t.coefficient, t.sample);
  return r;
}

std::string render_word(const BraidWord& w) {
  const auto& ls = w.letters();
  const int n = w.strands();
  std::string out;
  auto emit = [&](const std::string& s) {
    if (!out.empty()) out += ' ';
    out += s;
  };
  std::size_t pos = 0;
  while (pos < ls.size()) {
    std::size_t best_len = 0;
    std::string best;
    for (int i = 1; i < n; ++i) {
      for (int j = i + 1; j <= n; ++j) {
        const std::size_t len = static_cast<std::size_t>(2 * (j - i));
        if (len <= best_len || pos + len > ls.size() || len < 4) continue;
        for (int e : {1, -1}) {
          const BraidWord pattern = e > 0 ? pure_braid(i, j, n) : inverse(pure_braid(i, j, n));
          if (std::equal(pattern.letters().begin(), pattern.letters().end(), ls.begin() + pos)) {
            best_len = len;
            best = "A(" + std::to_string(i) + "," + std::to_string(j) + ")" + (e > 0 ? "" : "^-1");
          }
        }
      }
    }
    if (best_len) {
      emit(best);
      pos += best_len;
      continue;
    }
    const Letter& l = ls[pos];
    emit("s" + std::to_string(l.index) + (l.sign > 0 ? "" : "^-1"));
    ++pos;
  }
  return out;
}

std::string to_string(const GroupRingElement& x, const RenderOptions& opts) {
  return render_terms(x.terms(), opts);
}

std::string to_string(const ClassSum& x, const RenderOptions& opts) {
  return render_terms(x.terms(), opts);
}

}  // namespace braidforce
