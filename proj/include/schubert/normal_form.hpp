#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "schubert/cartan.hpp"

namespace schubert::nf {

/// The commuting variable a_{st}. Indices are the ones written in the text
/// syntax, so a12 is {1, 2}.
struct Variable {
  int s = 0;
  int t = 0;
  friend auto operator<=>(const Variable&, const Variable&) = default;
};

/// Sorted (variable, exponent) pairs with positive exponents.
using PolyMonomial = std::vector<std::pair<Variable, int>>;

/// Integer polynomial in the a_{st}.
class Polynomial {
 public:
  Polynomial() = default;
  static Polynomial constant(std::int64_t c);
  static Polynomial variable(int s, int t);

  const std::map<PolyMonomial, std::int64_t>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  /// Constant term; the whole value when is_constant().
  std::int64_t constant_term() const;
  bool depends_on(int s, int t) const;

  Polynomial& operator+=(const Polynomial& other);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial operator-() const;

  std::string to_string() const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void add_term(const PolyMonomial& m, std::int64_t c);
  std::map<PolyMonomial, std::int64_t> terms_;
};

enum class SymbolKind { F, H, E };

struct Symbol {
  SymbolKind kind = SymbolKind::F;
  int index = 0;
  friend auto operator<=>(const Symbol&, const Symbol&) = default;
};

using Monomial = std::vector<Symbol>;

/// An element of the free algebra on f~, h~, e~ over Z[a_{st}].
class FreeAlgebraElement {
 public:
  FreeAlgebraElement() = default;
  static FreeAlgebraElement scalar(Polynomial c);
  static FreeAlgebraElement symbol(Symbol s);

  const std::map<Monomial, Polynomial>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  void add(const Monomial& m, const Polynomial& c);
  FreeAlgebraElement& operator+=(const FreeAlgebraElement& other);
  friend FreeAlgebraElement operator+(FreeAlgebraElement a, const FreeAlgebraElement& b) { return a += b; }
  friend FreeAlgebraElement operator*(const FreeAlgebraElement& a, const FreeAlgebraElement& b);
  FreeAlgebraElement operator-() const;

  /// Terms in monomial order joined by " + "; "0" for zero.
  std::string to_string() const;

  friend bool operator==(const FreeAlgebraElement&, const FreeAlgebraElement&) = default;

 private:
  std::map<Monomial, Polynomial> terms_;
};

/// Errors: ParseError.
FreeAlgebraElement parse(std::string_view text);

/// True when no monomial has an e~ or h~ immediately left of an f~.
bool is_normal(const FreeAlgebraElement& tau);

/// Rewrites the rightmost e~_s f~_t or h~_s f~_t of every monomial, round by
/// round, until every f~ is to the left. a_ss stays a variable.
FreeAlgebraElement eta(const FreeAlgebraElement& tau);
/// The same rules with a_{st} replaced by the entries of A.
FreeAlgebraElement eta(const FreeAlgebraElement& tau, const CartanMatrix& A);

/// a_{st} -> A at letters (s-1, t-1), a_{ss} -> 2. Errors: UnknownLabel, also for
/// symbol indices outside the index set.
FreeAlgebraElement specialize(const FreeAlgebraElement& tau, const CartanMatrix& A);

bool depends_on(const FreeAlgebraElement& tau, int s, int t);

}  // namespace schubert::nf
