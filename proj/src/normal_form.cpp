#include "schubert/normal_form.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <optional>

#include "schubert/error.hpp"

namespace schubert::nf {

// ---- Polynomial ----

Polynomial Polynomial::constant(std::int64_t c) {
  Polynomial p;
  p.add_term({}, c);
  return p;
}

Polynomial Polynomial::variable(int s, int t) {
  Polynomial p;
  p.add_term({{Variable{s, t}, 1}}, 1);
  return p;
}

bool Polynomial::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

std::int64_t Polynomial::constant_term() const {
  auto it = terms_.find(PolyMonomial{});
  return it == terms_.end() ? 0 : it->second;
}

bool Polynomial::depends_on(int s, int t) const {
  for (const auto& [m, c] : terms_)
    for (const auto& [v, e] : m)
      if (v.s == s && v.t == t) return true;
  return false;
}

void Polynomial::add_term(const PolyMonomial& m, std::int64_t c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second = checked::add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      std::map<Variable, int> exps;
      for (const auto& [v, e] : ma) exps[v] += e;
      for (const auto& [v, e] : mb) exps[v] += e;
      out.add_term(PolyMonomial(exps.begin(), exps.end()), checked::mul(ca, cb));
    }
  }
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial out;
  for (const auto& [m, c] : terms_) out.add_term(m, checked::sub(0, c));
  return out;
}

namespace {

std::string variable_name(const Variable& v) {
  if (v.s >= 0 && v.s <= 9 && v.t >= 0 && v.t <= 9) return "a" + std::to_string(v.s) + std::to_string(v.t);
  return "a" + std::to_string(v.s) + "_" + std::to_string(v.t);
}

int total_degree(const PolyMonomial& m) {
  return std::accumulate(m.begin(), m.end(), 0, [](int acc, const auto& p) { return acc + p.second; });
}

}  // namespace

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<PolyMonomial, std::int64_t>> sorted(terms_.begin(), terms_.end());
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const auto& a, const auto& b) { return total_degree(a.first) > total_degree(b.first); });
  std::string out;
  for (const auto& [m, c] : sorted) {
    std::string vars;
    for (const auto& [v, e] : m) {
      if (!vars.empty()) vars += "*";
      vars += variable_name(v);
      if (e != 1) vars += "^" + std::to_string(e);
    }
    std::string term;
    if (vars.empty()) term = std::to_string(c);
    else if (c == 1) term = vars;
    else if (c == -1) term = "-" + vars;
    else term = std::to_string(c) + "*" + vars;
    if (!out.empty() && term.front() != '-') out += "+";
    out += term;
  }
  return out;
}

// ---- FreeAlgebraElement ----

FreeAlgebraElement FreeAlgebraElement::scalar(Polynomial c) {
  FreeAlgebraElement out;
  out.add({}, c);
  return out;
}

FreeAlgebraElement FreeAlgebraElement::symbol(Symbol s) {
  FreeAlgebraElement out;
  out.add({s}, Polynomial::constant(1));
  return out;
}

void FreeAlgebraElement::add(const Monomial& m, const Polynomial& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

FreeAlgebraElement& FreeAlgebraElement::operator+=(const FreeAlgebraElement& other) {
  for (const auto& [m, c] : other.terms_) add(m, c);
  return *this;
}

FreeAlgebraElement operator*(const FreeAlgebraElement& a, const FreeAlgebraElement& b) {
  FreeAlgebraElement out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      Monomial m = ma;
      m.insert(m.end(), mb.begin(), mb.end());
      out.add(m, ca * cb);
    }
  }
  return out;
}

FreeAlgebraElement FreeAlgebraElement::operator-() const {
  FreeAlgebraElement out;
  for (const auto& [m, c] : terms_) out.add(m, -c);
  return out;
}

namespace {

char kind_char(SymbolKind k) {
  switch (k) {
    case SymbolKind::F: return 'f';
    case SymbolKind::H: return 'h';
    case SymbolKind::E: return 'e';
  }
  return '?';
}

}  // namespace

std::string FreeAlgebraElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    std::string word;
    for (const auto& sym : m) {
      if (!word.empty()) word += "*";
      word += kind_char(sym.kind) + std::to_string(sym.index);
    }
    std::string coeff;
    if (!c.is_constant()) coeff = "(" + c.to_string() + ")";
    else if (const auto v = c.constant_term(); word.empty() || (v != 1 && v != -1)) coeff = std::to_string(v);
    else coeff = v == -1 ? "-" : "";

    std::string term = coeff;
    if (!word.empty()) {
      if (!coeff.empty() && coeff != "-") term += "*";
      term += word;
    }
    if (!out.empty()) out += " + ";
    out += term;
  }
  return out;
}

// ---- Parsing ----

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  FreeAlgebraElement parse_all() {
    FreeAlgebraElement out = expr();
    skip();
    if (pos_ != text_.size()) fail("unexpected character");
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorKind::ParseError, {std::string(text_)}, what + " at offset " + std::to_string(pos_));
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::int64_t number() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, v);
    if (ec != std::errc() || ptr != text_.data() + pos_) fail("number out of range");
    return v;
  }

  FreeAlgebraElement expr() {
    FreeAlgebraElement out = term();
    for (;;) {
      if (accept('+')) out += term();
      else if (accept('-')) out += -term();
      else return out;
    }
  }

  FreeAlgebraElement term() {
    FreeAlgebraElement out = unary();
    while (accept('*')) out = out * unary();
    return out;
  }

  FreeAlgebraElement unary() {
    if (accept('-')) return -unary();
    FreeAlgebraElement base = primary();
    if (accept('^')) {
      skip();
      const std::int64_t n = number();
      if (n > 64) fail("exponent too large");
      FreeAlgebraElement power = FreeAlgebraElement::scalar(Polynomial::constant(1));
      for (std::int64_t i = 0; i < n; ++i) power = power * base;
      return power;
    }
    return base;
  }

  FreeAlgebraElement primary() {
    skip();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      FreeAlgebraElement inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return FreeAlgebraElement::scalar(Polynomial::constant(number()));
    if (c == 'f' || c == 'h' || c == 'e') {
      ++pos_;
      const SymbolKind kind = c == 'f' ? SymbolKind::F : c == 'h' ? SymbolKind::H : SymbolKind::E;
      return FreeAlgebraElement::symbol(Symbol{kind, static_cast<int>(index())});
    }
    if (c == 'a') {
      ++pos_;
      const std::size_t start = pos_;
      const std::int64_t first = index();
      if (pos_ < text_.size() && text_[pos_] == '_') {
        ++pos_;
        const std::int64_t second = index();
        return FreeAlgebraElement::scalar(Polynomial::variable(static_cast<int>(first), static_cast<int>(second)));
      }
      if (pos_ - start != 2) fail("variable needs two single-digit indices or the form a<s>_<t>");
      return FreeAlgebraElement::scalar(
          Polynomial::variable(text_[start] - '0', text_[start + 1] - '0'));
    }
    fail("unexpected character");
  }

  std::int64_t index() {
    const std::int64_t v = number();
    if (v > 1000000) fail("index too large");
    return v;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

FreeAlgebraElement parse(std::string_view text) { return Parser(text).parse_all(); }

// ---- Rewriting ----

namespace {

// Position of the left symbol of the rightmost e~f~ or h~f~ pair.
std::optional<std::size_t> rightmost_violation(const Monomial& m) {
  for (std::size_t i = m.size(); i-- > 1;)
    if (m[i].kind == SymbolKind::F && m[i - 1].kind != SymbolKind::F) return i - 1;
  return std::nullopt;
}

template <class Coefficient>
FreeAlgebraElement rewrite(const FreeAlgebraElement& tau, Coefficient a) {
  FreeAlgebraElement current = tau;
  for (;;) {
    bool changed = false;
    FreeAlgebraElement next;
    for (const auto& [m, c] : current.terms()) {
      const auto i = rightmost_violation(m);
      if (!i) {
        next.add(m, c);
        continue;
      }
      changed = true;
      const Symbol left = m[*i];
      const Symbol f = m[*i + 1];
      Monomial swapped = m;
      std::swap(swapped[*i], swapped[*i + 1]);
      next.add(swapped, c);
      Monomial shorter = m;
      if (left.kind == SymbolKind::E) {
        // e_s f_t -> f_t e_s + delta_st h_s
        if (left.index == f.index) {
          shorter.erase(shorter.begin() + static_cast<std::ptrdiff_t>(*i) + 1);
          shorter[*i] = Symbol{SymbolKind::H, left.index};
          next.add(shorter, c);
        }
      } else {
        // h_s f_t -> f_t h_s - a_st f_t
        shorter.erase(shorter.begin() + static_cast<std::ptrdiff_t>(*i));
        next.add(shorter, -(c * a(left.index, f.index)));
      }
    }
    if (!changed) return current;
    current = std::move(next);
  }
}

Letter letter_for(const CartanMatrix& A, int index) {
  if (index < 1 || static_cast<std::size_t>(index) > A.size())
    throw Error(ErrorKind::UnknownLabel, {std::to_string(index)}, "index has no letter in the Cartan matrix");
  return index - 1;
}

std::int64_t entry_for(const CartanMatrix& A, int s, int t) {
  const Letter ls = letter_for(A, s);
  const Letter lt = letter_for(A, t);
  return ls == lt ? 2 : A(ls, lt);
}

}  // namespace

bool is_normal(const FreeAlgebraElement& tau) {
  return std::none_of(tau.terms().begin(), tau.terms().end(),
                      [](const auto& term) { return rightmost_violation(term.first).has_value(); });
}

FreeAlgebraElement eta(const FreeAlgebraElement& tau) {
  return rewrite(tau, [](int s, int t) { return Polynomial::variable(s, t); });
}

FreeAlgebraElement eta(const FreeAlgebraElement& tau, const CartanMatrix& A) {
  return rewrite(tau, [&](int s, int t) { return Polynomial::constant(entry_for(A, s, t)); });
}

FreeAlgebraElement specialize(const FreeAlgebraElement& tau, const CartanMatrix& A) {
  FreeAlgebraElement out;
  for (const auto& [m, c] : tau.terms()) {
    for (const Symbol& x : m) letter_for(A, x.index);
    Polynomial value;
    for (const auto& [pm, coeff] : c.terms()) {
      std::int64_t v = coeff;
      for (const auto& [var, e] : pm) {
        const std::int64_t x = entry_for(A, var.s, var.t);
        for (int i = 0; i < e; ++i) v = checked::mul(v, x);
      }
      value += Polynomial::constant(v);
    }
    out.add(m, value);
  }
  return out;
}

bool depends_on(const FreeAlgebraElement& tau, int s, int t) {
  return std::any_of(tau.terms().begin(), tau.terms().end(),
                     [&](const auto& term) { return term.second.depends_on(s, t); });
}

}  // namespace schubert::nf
