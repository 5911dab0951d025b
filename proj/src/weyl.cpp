#include "schubert/weyl.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <unordered_set>

namespace schubert {

namespace {

using Matrix = std::vector<std::int64_t>;

Matrix identity_matrix(std::size_t n) {
  Matrix m(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) m[i * n + i] = 1;
  return m;
}

// X <- X * s: column c becomes col_c - A_sc col_s.
void right_multiply_simple(const CartanMatrix& A, Letter s, Matrix& X) {
  const std::size_t n = A.size();
  const auto us = static_cast<std::size_t>(s);
  for (std::size_t c = 0; c < n; ++c) {
    if (c == us) continue;
    const std::int64_t a = A(s, static_cast<Letter>(c));
    if (a == 0) continue;
    for (std::size_t r = 0; r < n; ++r) X[r * n + c] = checked::sub_mul(X[r * n + c], a, X[r * n + us]);
  }
  for (std::size_t r = 0; r < n; ++r) X[r * n + us] = checked::sub(0, X[r * n + us]);
}

// X <- s * X: row s becomes row_s - sum_k A_sk row_k.
void left_multiply_simple(const CartanMatrix& A, Letter s, Matrix& X) {
  const std::size_t n = A.size();
  const auto us = static_cast<std::size_t>(s);
  for (std::size_t c = 0; c < n; ++c) {
    std::int64_t acc = X[us * n + c];
    for (std::size_t k = 0; k < n; ++k) acc = checked::sub_mul(acc, A(s, static_cast<Letter>(k)), X[k * n + c]);
    X[us * n + c] = acc;
  }
}

Matrix multiply_matrices(const Matrix& X, const Matrix& Y, std::size_t n) {
  Matrix Z(n * n, 0);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t k = 0; k < n; ++k) {
      const std::int64_t x = X[r * n + k];
      if (x == 0) continue;
      for (std::size_t c = 0; c < n; ++c) Z[r * n + c] = checked::add(Z[r * n + c], checked::mul(x, Y[k * n + c]));
    }
  return Z;
}

bool column_negative(const Matrix& X, std::size_t n, Letter s) {
  // Columns are real roots, so one sign test at the first nonzero entry suffices.
  for (std::size_t r = 0; r < n; ++r) {
    const std::int64_t v = X[r * n + static_cast<std::size_t>(s)];
    if (v != 0) return v < 0;
  }
  return false;
}

void require_same_context(const WeylElement& a, const WeylElement& b) {
  if (a.context() == b.context()) return;
  if (a.cartan() == b.cartan()) return;
  throw Error(ErrorKind::MixedContexts, {}, "elements belong to different Weyl groups");
}

}  // namespace

void reflect(const CartanMatrix& A, Letter s, RootVector& v) {
  std::int64_t pairing = 0;
  for (std::size_t t = 0; t < v.size(); ++t)
    pairing = checked::add(pairing, checked::mul(A(s, static_cast<Letter>(t)), v.coords[t]));
  auto& c = v.coords[static_cast<std::size_t>(s)];
  c = checked::sub(c, pairing);
}

void reflect(const CartanMatrix& A, Letter s, CorootVector& h) {
  std::int64_t pairing = 0;
  for (std::size_t t = 0; t < h.size(); ++t)
    pairing = checked::add(pairing, checked::mul(A(static_cast<Letter>(t), s), h.coords[t]));
  auto& c = h.coords[static_cast<std::size_t>(s)];
  c = checked::sub(c, pairing);
}

WeylElement::WeylElement(std::shared_ptr<const CartanMatrix> cartan, std::vector<std::int64_t> action,
                         std::vector<std::int64_t> inverse)
    : cartan_(std::move(cartan)), action_(std::move(action)), inverse_(std::move(inverse)) {
  // Strip the least left descent until the identity is reached.
  const std::size_t n = rank();
  Matrix inv = inverse_;
  for (;;) {
    Letter descent = -1;
    for (Letter s = 0; s < static_cast<Letter>(n); ++s) {
      if (column_negative(inv, n, s)) {
        descent = s;
        break;
      }
    }
    if (descent < 0) break;
    word_.push_back(descent);
    right_multiply_simple(*cartan_, descent, inv);
  }
}

std::vector<std::string> WeylElement::canonical_labels() const { return cartan_->index_set().labels_of(word_); }

std::string WeylElement::to_string() const {
  if (word_.empty()) return "e";
  std::string out;
  for (std::size_t i = 0; i < word_.size(); ++i) {
    if (i) out += ' ';
    out += cartan_->index_set().label(word_[i]);
  }
  return out;
}

RootVector WeylElement::image_of_simple_root(Letter t) const {
  RootVector v(std::vector<std::int64_t>(rank(), 0));
  for (Letter r = 0; r < static_cast<Letter>(rank()); ++r) v.coords[static_cast<std::size_t>(r)] = action(r, t);
  return v;
}

RootVector WeylElement::apply(const RootVector& v) const {
  const std::size_t n = rank();
  RootVector out(std::vector<std::int64_t>(n, 0));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      out.coords[r] = checked::add(out.coords[r], checked::mul(action_[r * n + c], v.coords[c]));
  return out;
}

CorootVector WeylElement::apply(const CorootVector& h) const {
  CorootVector out = h;
  for (auto it = word_.rbegin(); it != word_.rend(); ++it) reflect(*cartan_, *it, out);
  return out;
}

bool WeylElement::is_left_descent(Letter s) const noexcept { return column_negative(inverse_, rank(), s); }
bool WeylElement::is_right_descent(Letter s) const noexcept { return column_negative(action_, rank(), s); }

WeylElement WeylElement::inverse() const { return WeylElement(cartan_, inverse_, action_); }

WeylElement WeylElement::times_simple(Letter s) const {
  Matrix a = action_, inv = inverse_;
  right_multiply_simple(*cartan_, s, a);
  left_multiply_simple(*cartan_, s, inv);
  return WeylElement(cartan_, std::move(a), std::move(inv));
}

WeylElement WeylElement::simple_times(Letter s) const {
  Matrix a = action_, inv = inverse_;
  left_multiply_simple(*cartan_, s, a);
  right_multiply_simple(*cartan_, s, inv);
  return WeylElement(cartan_, std::move(a), std::move(inv));
}

std::size_t WeylElement::hash() const noexcept {
  std::uint64_t h = 1469598103934665603ULL;
  for (auto v : action_) {
    h ^= static_cast<std::uint64_t>(v);
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

bool operator==(const WeylElement& a, const WeylElement& b) noexcept {
  if (a.cartan_ != b.cartan_ && !(*a.cartan_ == *b.cartan_)) return false;
  return a.action_ == b.action_;
}

bool shortlex_less(const WeylElement& a, const WeylElement& b) noexcept {
  if (a.length() != b.length()) return a.length() < b.length();
  return a.canonical_word() < b.canonical_word();
}

WeylGroup::WeylGroup(CartanMatrix A) : cartan_(std::make_shared<const CartanMatrix>(std::move(A))) {}
WeylGroup::WeylGroup(std::shared_ptr<const CartanMatrix> A) : cartan_(std::move(A)) {}

WeylElement WeylGroup::identity() const {
  return WeylElement(cartan_, identity_matrix(rank()), identity_matrix(rank()));
}

WeylElement WeylGroup::simple_reflection(Letter s) const {
  if (s < 0 || static_cast<std::size_t>(s) >= rank())
    throw Error(ErrorKind::UnknownLabel, {std::to_string(s)}, "letter out of range");
  return element_from_word({s});
}

WeylElement WeylGroup::simple_reflection(std::string_view label) const {
  return simple_reflection(cartan_->index_set().index_of(label));
}

WeylElement WeylGroup::element_from_word(const Word& word) const {
  Matrix a = identity_matrix(rank()), inv = identity_matrix(rank());
  for (Letter s : word) {
    if (s < 0 || static_cast<std::size_t>(s) >= rank())
      throw Error(ErrorKind::UnknownLabel, {std::to_string(s)}, "letter out of range");
    right_multiply_simple(*cartan_, s, a);
    left_multiply_simple(*cartan_, s, inv);
  }
  return WeylElement(cartan_, std::move(a), std::move(inv));
}

WeylElement WeylGroup::element_from_labels(const std::vector<std::string>& labels) const {
  Word word;
  word.reserve(labels.size());
  for (const auto& l : labels) word.push_back(cartan_->index_set().index_of(l));
  return element_from_word(word);
}

WeylElement multiply(const WeylElement& x, const WeylElement& y) {
  require_same_context(x, y);
  const std::size_t n = x.rank();
  return WeylElement(x.cartan_, multiply_matrices(x.action_, y.action_, n), multiply_matrices(y.inverse_, x.inverse_, n));
}

LetterSet left_descents(const WeylElement& w) {
  LetterSet out;
  for (Letter s = 0; s < static_cast<Letter>(w.rank()); ++s)
    if (w.is_left_descent(s)) out.push_back(s);
  return out;
}

LetterSet right_descents(const WeylElement& w) {
  LetterSet out;
  for (Letter s = 0; s < static_cast<Letter>(w.rank()); ++s)
    if (w.is_right_descent(s)) out.push_back(s);
  return out;
}

LetterSet support(const WeylElement& w) {
  LetterSet out(w.canonical_word().begin(), w.canonical_word().end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool bruhat_leq(const WeylElement& u, const WeylElement& w) {
  require_same_context(u, w);
  if (u.length() > w.length()) return false;
  // The least left descent of w is the first letter of its canonical word,
  // and stripping it leaves the canonical word of sw; so the recursion walks
  // that word. u is tracked through its left descents.
  WeylElement cur = u;
  std::size_t u_len = u.length();
  const Word& word = w.canonical_word();
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (u_len == 0) return true;
    if (u_len > word.size() - i) return false;
    const Letter s = word[i];
    if (cur.is_left_descent(s)) {
      cur = cur.simple_times(s);
      --u_len;
    }
  }
  return u_len == 0;
}

bool two_letter_leq(Letter s, Letter t, const WeylElement& w) {
  const LetterSet supp = support(w);
  const auto& labels = w.cartan().index_set();
  auto in_support = [&](Letter x) { return std::binary_search(supp.begin(), supp.end(), x); };
  if (s == t || !in_support(s) || !in_support(t)) {
    std::vector<std::string> offending;
    for (Letter x : {s, t}) offending.push_back(x >= 0 && static_cast<std::size_t>(x) < w.rank() ? labels.label(x) : std::to_string(x));
    throw Error(ErrorKind::NotInSupport, offending, "two_letter_leq needs distinct letters of S(w)");
  }
  if (w.cartan()(s, t) == 0) return true;
  bool seen_s = false;
  for (Letter x : w.canonical_word()) {
    if (x == s) seen_s = true;
    if (x == t && seen_s) return true;
  }
  return false;
}

std::vector<Word> reduced_words(const WeylElement& w, std::size_t max_length) {
  if (w.length() > max_length)
    throw Error(ErrorKind::LengthCapExceeded, {},
                "length " + std::to_string(w.length()) + " exceeds cap " + std::to_string(max_length));
  ElementMap<std::vector<Word>> memo;
  std::function<const std::vector<Word>&(const WeylElement&)> red = [&](const WeylElement& v) -> const std::vector<Word>& {
    if (auto it = memo.find(v); it != memo.end()) return it->second;
    std::vector<Word> out;
    if (v.is_identity()) {
      out.emplace_back();
    } else {
      for (Letter s : right_descents(v)) {
        for (Word word : red(v.times_simple(s))) {
          word.push_back(s);
          out.push_back(std::move(word));
        }
      }
      std::sort(out.begin(), out.end());
    }
    return memo.emplace(v, std::move(out)).first->second;
  };
  return red(w);
}

std::vector<RootVector> inversion_set(const WeylElement& w) {
  const Word& word = w.canonical_word();
  std::vector<RootVector> out;
  out.reserve(word.size());
  for (std::size_t i = 0; i < word.size(); ++i) {
    RootVector beta = RootVector::basis(w.rank(), word[i]);
    for (std::size_t j = i; j-- > 0;) reflect(w.cartan(), word[j], beta);
    out.push_back(std::move(beta));
  }
  return out;
}

Reflection cover_reflection(const WeylElement& u, const WeylElement& v) {
  require_same_context(u, v);
  if (v.length() != u.length() + 1)
    throw Error(ErrorKind::NotACover, {u.to_string(), v.to_string()}, "lengths do not differ by one");
  const WeylGroup W(v.context());
  const Word& word = v.canonical_word();
  // t_i = s_1..s_{i-1} s_i s_{i-1}..s_1 satisfies t_i v = v with letter i deleted.
  for (std::size_t i = 0; i < word.size(); ++i) {
    Word deleted = word;
    deleted.erase(deleted.begin() + static_cast<std::ptrdiff_t>(i));
    if (!(W.element_from_word(deleted) == u)) continue;
    Word reflection_word(word.begin(), word.begin() + static_cast<std::ptrdiff_t>(i) + 1);
    for (std::size_t j = i; j-- > 0;) reflection_word.push_back(word[j]);
    RootVector root = RootVector::basis(v.rank(), word[i]);
    CorootVector coroot = CorootVector::basis(v.rank(), word[i]);
    for (std::size_t j = i; j-- > 0;) {
      reflect(v.cartan(), word[j], root);
      reflect(v.cartan(), word[j], coroot);
    }
    return Reflection{W.element_from_word(reflection_word), std::move(root), std::move(coroot)};
  }
  throw Error(ErrorKind::NotACover, {u.to_string(), v.to_string()});
}

BruhatInterval::BruhatInterval(const WeylElement& w, std::size_t max_length) {
  if (w.length() > max_length)
    throw Error(ErrorKind::LengthCapExceeded, {},
                "length " + std::to_string(w.length()) + " exceeds cap " + std::to_string(max_length));
  // Subword products of the canonical word, deduplicated prefix by prefix.
  const WeylGroup W(w.context());
  std::vector<WeylElement> found{W.identity()};
  std::unordered_set<WeylElement, WeylElementHash> seen{W.identity()};
  for (Letter s : w.canonical_word()) {
    const std::size_t before = found.size();
    for (std::size_t i = 0; i < before; ++i) {
      WeylElement next = found[i].times_simple(s);
      if (seen.insert(next).second) found.push_back(std::move(next));
    }
  }
  std::sort(found.begin(), found.end(), shortlex_less);
  elements_ = std::move(found);
  for (std::size_t i = 0; i < elements_.size(); ++i) index_.emplace(elements_[i], i);

  // Lower covers of v: delete one letter of a reduced word and keep the
  // results of length l(v) - 1.
  upper_.assign(elements_.size(), {});
  lower_.assign(elements_.size(), {});
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    const Word& word = elements_[i].canonical_word();
    for (std::size_t p = 0; p < word.size(); ++p) {
      Word deleted = word;
      deleted.erase(deleted.begin() + static_cast<std::ptrdiff_t>(p));
      const WeylElement u = W.element_from_word(deleted);
      if (u.length() + 1 != elements_[i].length()) continue;
      lower_[i].push_back(index_.at(u));
    }
    std::sort(lower_[i].begin(), lower_[i].end());
    lower_[i].erase(std::unique(lower_[i].begin(), lower_[i].end()), lower_[i].end());
    for (std::size_t j : lower_[i]) upper_[j].push_back(i);
  }
  for (auto& up : upper_) std::sort(up.begin(), up.end());
}

std::optional<std::size_t> BruhatInterval::find(const WeylElement& u) const {
  if (auto it = index_.find(u); it != index_.end()) return it->second;
  return std::nullopt;
}

std::size_t BruhatInterval::index_of(const WeylElement& u) const {
  if (auto i = find(u)) return *i;
  throw Error(ErrorKind::NotInInterval, {u.to_string()}, "element is not below " + top().to_string());
}

BruhatInterval interval(const WeylElement& w, std::size_t max_length) { return BruhatInterval(w, max_length); }

std::vector<WeylElement> enumerate_elements(const WeylGroup& W, std::size_t max_length, std::size_t max_elements) {
  std::vector<WeylElement> out{W.identity()};
  std::vector<WeylElement> layer{W.identity()};
  for (std::size_t len = 1; len <= max_length && !layer.empty(); ++len) {
    std::unordered_set<WeylElement, WeylElementHash> next_set;
    std::vector<WeylElement> next;
    for (const auto& w : layer) {
      for (Letter s = 0; s < static_cast<Letter>(W.rank()); ++s) {
        if (w.is_right_descent(s)) continue;
        WeylElement ws = w.times_simple(s);
        if (next_set.insert(ws).second) {
          next.push_back(std::move(ws));
          if (out.size() + next.size() > max_elements)
            throw Error(ErrorKind::EnumerationCapExceeded, {},
                        "more than " + std::to_string(max_elements) + " elements of length <= " +
                            std::to_string(max_length));
        }
      }
    }
    std::sort(next.begin(), next.end(), shortlex_less);
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

}  // namespace schubert
