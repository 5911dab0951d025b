#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "schubert/cartan.hpp"

namespace schubert {

inline constexpr std::size_t kDefaultLengthCap = 20;
inline constexpr std::size_t kDefaultElementCap = 200000;

/// Integer coordinates over a basis indexed by S. The tag keeps root-lattice
/// vectors (basis alpha_s) and coroot vectors (basis h_s) apart.
template <class Tag>
struct LatticeVector {
  std::vector<std::int64_t> coords;

  LatticeVector() = default;
  explicit LatticeVector(std::vector<std::int64_t> c) : coords(std::move(c)) {}

  static LatticeVector basis(std::size_t rank, Letter s) {
    LatticeVector v(std::vector<std::int64_t>(rank, 0));
    v.coords[static_cast<std::size_t>(s)] = 1;
    return v;
  }

  std::int64_t operator[](Letter s) const { return coords[static_cast<std::size_t>(s)]; }
  std::size_t size() const noexcept { return coords.size(); }

  bool is_zero() const noexcept {
    for (auto c : coords)
      if (c != 0) return false;
    return true;
  }
  bool is_positive() const noexcept {
    bool any = false;
    for (auto c : coords) {
      if (c < 0) return false;
      any = any || c > 0;
    }
    return any;
  }
  bool is_negative() const noexcept {
    bool any = false;
    for (auto c : coords) {
      if (c > 0) return false;
      any = any || c < 0;
    }
    return any;
  }
  bool has_uniform_sign() const noexcept { return is_positive() || is_negative(); }

  LatticeVector operator-() const {
    LatticeVector out = *this;
    for (auto& c : out.coords) c = checked::sub(0, c);
    return out;
  }

  friend auto operator<=>(const LatticeVector&, const LatticeVector&) = default;
};

struct RootTag {};
struct CorootTag {};
using RootVector = LatticeVector<RootTag>;
using CorootVector = LatticeVector<CorootTag>;

/// s(alpha_t) = alpha_t - A_st alpha_s, applied in place.
void reflect(const CartanMatrix& A, Letter s, RootVector& v);
/// s(h_t) = h_t - A_ts h_s, applied in place.
void reflect(const CartanMatrix& A, Letter s, CorootVector& h);

/// An element of W(A), identified by its (faithful) action on the root lattice.
/// Length and the ShortLex-least reduced word are computed on construction.
class WeylElement {
 public:
  const std::shared_ptr<const CartanMatrix>& context() const noexcept { return cartan_; }
  const CartanMatrix& cartan() const noexcept { return *cartan_; }
  std::size_t rank() const noexcept { return cartan_->size(); }

  std::size_t length() const noexcept { return word_.size(); }
  const Word& canonical_word() const noexcept { return word_; }
  std::vector<std::string> canonical_labels() const;
  /// Space separated labels; "e" for the identity.
  std::string to_string() const;

  /// Coefficient of alpha_row in w(alpha_col).
  std::int64_t action(Letter row, Letter col) const noexcept { return action_[index(row, col)]; }
  RootVector image_of_simple_root(Letter t) const;
  RootVector apply(const RootVector& v) const;
  CorootVector apply(const CorootVector& h) const;

  bool is_identity() const noexcept { return word_.empty(); }
  /// l(sw) < l(w): w^{-1}(alpha_s) is negative.
  bool is_left_descent(Letter s) const noexcept;
  /// l(ws) < l(w): w(alpha_s) is negative.
  bool is_right_descent(Letter s) const noexcept;

  WeylElement inverse() const;
  WeylElement times_simple(Letter s) const;
  WeylElement simple_times(Letter s) const;

  std::size_t hash() const noexcept;

  /// Elements over different Cartan matrices compare unequal.
  friend bool operator==(const WeylElement& a, const WeylElement& b) noexcept;

 private:
  friend class WeylGroup;
  friend WeylElement multiply(const WeylElement&, const WeylElement&);

  WeylElement(std::shared_ptr<const CartanMatrix> cartan, std::vector<std::int64_t> action,
              std::vector<std::int64_t> inverse);

  std::size_t index(Letter r, Letter c) const noexcept {
    return static_cast<std::size_t>(r) * rank() + static_cast<std::size_t>(c);
  }

  std::shared_ptr<const CartanMatrix> cartan_;
  std::vector<std::int64_t> action_;
  std::vector<std::int64_t> inverse_;
  Word word_;
};

struct WeylElementHash {
  std::size_t operator()(const WeylElement& w) const noexcept { return w.hash(); }
};

template <class V>
using ElementMap = std::unordered_map<WeylElement, V, WeylElementHash>;

/// (length, canonical word) order.
bool shortlex_less(const WeylElement& a, const WeylElement& b) noexcept;

/// Shared context for building elements of W(A).
class WeylGroup {
 public:
  explicit WeylGroup(CartanMatrix A);
  explicit WeylGroup(std::shared_ptr<const CartanMatrix> A);

  const CartanMatrix& cartan() const noexcept { return *cartan_; }
  const std::shared_ptr<const CartanMatrix>& context() const noexcept { return cartan_; }
  std::size_t rank() const noexcept { return cartan_->size(); }

  WeylElement identity() const;
  WeylElement simple_reflection(Letter s) const;
  WeylElement simple_reflection(std::string_view label) const;
  /// Product of simple reflections; the word need not be reduced.
  WeylElement element_from_word(const Word& word) const;
  WeylElement element_from_labels(const std::vector<std::string>& labels) const;

 private:
  std::shared_ptr<const CartanMatrix> cartan_;
};

/// Errors: MixedContexts.
WeylElement multiply(const WeylElement& x, const WeylElement& y);

LetterSet left_descents(const WeylElement& w);
LetterSet right_descents(const WeylElement& w);

/// Letters of the canonical reduced word.
LetterSet support(const WeylElement& w);

/// Bruhat order by left-descent recursion. Errors: MixedContexts.
bool bruhat_leq(const WeylElement& u, const WeylElement& w);

/// Whether st <= w, decided from the canonical word alone (s, t in S(w),
/// s != t). Errors: NotInSupport.
bool two_letter_leq(Letter s, Letter t, const WeylElement& w);

/// Red(w), sorted lexicographically. Errors: LengthCapExceeded.
std::vector<Word> reduced_words(const WeylElement& w, std::size_t max_length = kDefaultLengthCap);

/// beta_i = s_1 ... s_{i-1}(alpha_{s_i}) along the canonical word.
std::vector<RootVector> inversion_set(const WeylElement& w);

struct Reflection {
  WeylElement element;
  RootVector root;
  CorootVector coroot;
};

/// The reflection r with r u = v for a Bruhat cover u < v. Errors: NotACover.
Reflection cover_reflection(const WeylElement& u, const WeylElement& v);

/// The lower interval [e,w] with its Hasse diagram. Elements are sorted in
/// (length, canonical word) order, so index 0 is e and the last index is w.
class BruhatInterval {
 public:
  /// Errors: LengthCapExceeded.
  explicit BruhatInterval(const WeylElement& w, std::size_t max_length = kDefaultLengthCap);

  std::size_t size() const noexcept { return elements_.size(); }
  const WeylElement& operator[](std::size_t i) const { return elements_.at(i); }
  const std::vector<WeylElement>& elements() const noexcept { return elements_; }
  const WeylElement& top() const noexcept { return elements_.back(); }
  std::size_t top_index() const noexcept { return elements_.size() - 1; }

  std::optional<std::size_t> find(const WeylElement& u) const;
  /// Errors: NotInInterval.
  std::size_t index_of(const WeylElement& u) const;

  const std::vector<std::size_t>& upper_covers(std::size_t i) const { return upper_.at(i); }
  const std::vector<std::size_t>& lower_covers(std::size_t i) const { return lower_.at(i); }

 private:
  std::vector<WeylElement> elements_;
  ElementMap<std::size_t> index_;
  std::vector<std::vector<std::size_t>> upper_;
  std::vector<std::vector<std::size_t>> lower_;
};

BruhatInterval interval(const WeylElement& w, std::size_t max_length = kDefaultLengthCap);

/// All elements of length <= max_length by breadth-first right multiplication,
/// in (length, canonical word) order. Errors: EnumerationCapExceeded.
std::vector<WeylElement> enumerate_elements(const WeylGroup& W, std::size_t max_length,
                                            std::size_t max_elements = kDefaultElementCap);

}  // namespace schubert
