#include "braidforce/braid.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "braidforce/errors.hpp"

namespace braidforce {

namespace {

void check_size(int size) {
  if (size < 0 || size > kMaxStrands) {
    throw ValidationError("permutation size " + std::to_string(size) +
                          " outside [0, " + std::to_string(kMaxStrands) + "]");
  }
}

void check_strands(int strands) {
  if (strands < 1 || strands > kMaxStrands) {
    throw ValidationError("strand count " + std::to_string(strands) +
                          " outside [1, " + std::to_string(kMaxStrands) + "]");
  }
}

bool parse_int(std::string_view s, int& out) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  if (s.empty()) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

}  // namespace

Permutation::Permutation(int size) {
  check_size(size);
  size_ = static_cast<std::uint8_t>(size);
  for (int i = 0; i < size; ++i) img_[i] = static_cast<std::uint8_t>(i);
}

Permutation Permutation::from_images(std::span<const int> one_based_images) {
  const int n = static_cast<int>(one_based_images.size());
  Permutation p(n);
  std::array<bool, kMaxStrands> seen{};
  for (int i = 0; i < n; ++i) {
    const int v = one_based_images[i];
    if (v < 1 || v > n || seen[v - 1]) {
      throw ValidationError("images do not form a permutation of {1.." +
                            std::to_string(n) + "}");
    }
    seen[v - 1] = true;
    p.img_[i] = static_cast<std::uint8_t>(v - 1);
  }
  return p;
}

Permutation Permutation::transposition(int size, int i, int j) {
  Permutation p(size);
  if (i < 1 || j < 1 || i > size || j > size) {
    throw ValidationError("transposition points out of range");
  }
  std::swap(p.img_[i - 1], p.img_[j - 1]);
  return p;
}

Permutation Permutation::reversal(int size) {
  Permutation p(size);
  for (int i = 0; i < size; ++i) p.img_[i] = static_cast<std::uint8_t>(size - 1 - i);
  return p;
}

Permutation Permutation::inverse() const {
  Permutation r(size_);
  for (int i = 0; i < size_; ++i) r.img_[img_[i]] = static_cast<std::uint8_t>(i);
  return r;
}

Permutation Permutation::then(const Permutation& next) const {
  if (next.size_ != size_) throw ValidationError("permutation size mismatch");
  Permutation r(size_);
  for (int i = 0; i < size_; ++i) r.img_[i] = next.img_[img_[i]];
  return r;
}

int Permutation::inversions() const {
  int count = 0;
  for (int i = 0; i < size_; ++i)
    for (int j = i + 1; j < size_; ++j)
      if (img_[i] > img_[j]) ++count;
  return count;
}

int Permutation::sign() const { return inversions() % 2 == 0 ? 1 : -1; }

bool Permutation::is_identity() const {
  for (int i = 0; i < size_; ++i)
    if (img_[i] != i) return false;
  return true;
}

std::vector<int> Permutation::images() const {
  std::vector<int> out(size_);
  for (int i = 0; i < size_; ++i) out[i] = img_[i] + 1;
  return out;
}

std::vector<int> Permutation::cycle_type() const {
  std::vector<int> lengths;
  std::array<bool, kMaxStrands> seen{};
  for (int i = 0; i < size_; ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (int j = i; !seen[j]; j = img_[j]) {
      seen[j] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.rbegin(), lengths.rend());
  return lengths;
}

std::string Permutation::one_line() const {
  std::string s = "[";
  for (int i = 0; i < size_; ++i) {
    if (i) s += ' ';
    s += std::to_string(img_[i] + 1);
  }
  return s + "]";
}

BraidWord::BraidWord(int strands) : strands_(strands) { check_strands(strands); }

BraidWord::BraidWord(int strands, std::vector<Letter> letters) : strands_(strands) {
  check_strands(strands);
  for (const Letter& l : letters) append(l);
}

void BraidWord::append(Letter l) {
  if (l.index < 1 || l.index >= strands_) {
    throw ValidationError("generator index " + std::to_string(l.index) +
                          " out of range for B_" + std::to_string(strands_));
  }
  if (l.sign != 1 && l.sign != -1) throw ValidationError("letter sign must be +1 or -1");
  letters_.push_back(l);
}

void BraidWord::append(const BraidWord& w) {
  if (w.strands_ != strands_) {
    throw ValidationError("strand-count mismatch: B_" + std::to_string(strands_) +
                          " vs B_" + std::to_string(w.strands_));
  }
  letters_.insert(letters_.end(), w.letters_.begin(), w.letters_.end());
}

std::string BraidWord::to_string() const {
  std::string s;
  for (const Letter& l : letters_) {
    if (!s.empty()) s += ' ';
    s += std::to_string(l.sign * l.index);
  }
  return s;
}

BraidWord parse_word(std::string_view text, int strands) {
  check_strands(strands);
  BraidWord word(strands);
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    if (token.rfind("A(", 0) == 0) {
      const auto close = token.find(')');
      const auto comma = token.find(',');
      int i = 0, j = 0, e = 1;
      if (close == std::string::npos || comma == std::string::npos || comma > close ||
          !parse_int(std::string_view(token).substr(2, comma - 2), i) ||
          !parse_int(std::string_view(token).substr(comma + 1, close - comma - 1), j)) {
        throw ParseError(token, "expected A(i,j)");
      }
      std::string_view rest = std::string_view(token).substr(close + 1);
      if (!rest.empty()) {
        if (rest.front() != '^' || !parse_int(rest.substr(1), e)) {
          throw ParseError(token, "expected A(i,j)^e");
        }
      }
      if (!(1 <= i && i < j && j <= strands)) {
        throw ParseError(token, "pure braid indices need 1 <= i < j <= " + std::to_string(strands));
      }
      word.append(power(pure_braid(i, j, strands), e));
      continue;
    }
    int k = 0;
    if (token.front() == 's') {
      const auto caret = token.find('^');
      int e = 1;
      if (!parse_int(std::string_view(token).substr(1, caret == std::string::npos ? caret : caret - 1), k) ||
          k <= 0 || (caret != std::string::npos && !parse_int(std::string_view(token).substr(caret + 1), e))) {
        throw ParseError(token, "expected sk or sk^e");
      }
      if (k >= strands) {
        throw ParseError(token, "generator index out of range for B_" + std::to_string(strands));
      }
      for (int r = 0; r < std::abs(e); ++r) word.append(Letter{k, e > 0 ? 1 : -1});
      continue;
    }
    if (!parse_int(token, k)) throw ParseError(token, "not an integer");
    if (k == 0) throw ParseError(token, "generator index 0 does not exist");
    if (std::abs(k) >= strands) {
      throw ParseError(token, "generator index out of range for B_" + std::to_string(strands));
    }
    word.append(Letter{std::abs(k), k > 0 ? 1 : -1});
  }
  return word;
}

BraidWord concat(const BraidWord& a, const BraidWord& b) {
  BraidWord r = a;
  r.append(b);
  return r;
}

BraidWord inverse(const BraidWord& a) {
  BraidWord r(a.strands());
  for (auto it = a.letters().rbegin(); it != a.letters().rend(); ++it) {
    r.append(Letter{it->index, -it->sign});
  }
  return r;
}

BraidWord free_reduce(const BraidWord& a) {
  std::vector<Letter> stack;
  stack.reserve(a.length());
  for (const Letter& l : a.letters()) {
    if (!stack.empty() && stack.back().index == l.index && stack.back().sign == -l.sign) {
      stack.pop_back();
    } else {
      stack.push_back(l);
    }
  }
  return BraidWord(a.strands(), std::move(stack));
}

BraidWord power(const BraidWord& a, int exponent) {
  const BraidWord base = exponent < 0 ? inverse(a) : a;
  BraidWord r(a.strands());
  for (int k = 0; k < std::abs(exponent); ++k) r.append(base);
  return r;
}

Permutation permutation_of(const BraidWord& a) {
  const int n = a.strands();
  // at[pos] = strand currently occupying pos.
  std::array<int, kMaxStrands> at{};
  for (int i = 0; i < n; ++i) at[i] = i;
  for (const Letter& l : a.letters()) std::swap(at[l.index - 1], at[l.index]);
  Permutation p(n);
  for (int pos = 0; pos < n; ++pos) p.set(at[pos], pos);
  return p;
}

int exponent_sum(const BraidWord& a) {
  int s = 0;
  for (const Letter& l : a.letters()) s += l.sign;
  return s;
}

BraidWord pure_braid(int i, int j, int strands) {
  if (!(1 <= i && i < j && j <= strands)) {
    throw ValidationError("A(" + std::to_string(i) + "," + std::to_string(j) +
                          ") needs 1 <= i < j <= " + std::to_string(strands));
  }
  BraidWord w(strands);
  for (int k = j - 1; k > i; --k) w.append(Letter{k, 1});
  w.append(Letter{i, 1});
  w.append(Letter{i, 1});
  for (int k = i + 1; k < j; ++k) w.append(Letter{k, -1});
  return w;
}

BraidWord embed_trivial(const BraidWord& a, int strands) {
  if (strands < a.strands()) {
    throw ValidationError("cannot embed B_" + std::to_string(a.strands()) + " into B_" +
                          std::to_string(strands));
  }
  return BraidWord(strands, a.letters());
}

BraidWord shift(const BraidWord& a, int offset, int strands) {
  BraidWord r(strands);
  for (const Letter& l : a.letters()) r.append(Letter{l.index + offset, l.sign});
  return r;
}

BraidWord permutation_braid(const Permutation& p) {
  const int n = p.size();
  BraidWord w(std::max(n, 1));
  // target[pos] = final position wanted by the strand now at pos.
  std::array<int, kMaxStrands> target{};
  for (int i = 0; i < n; ++i) target[i] = p.at(i);
  bool swapped = true;
  while (swapped) {
    swapped = false;
    for (int k = 0; k + 1 < n; ++k) {
      if (target[k] > target[k + 1]) {
        std::swap(target[k], target[k + 1]);
        w.append(Letter{k + 1, 1});
        swapped = true;
      }
    }
  }
  return w;
}

}  // namespace braidforce
