#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "schubert/error.hpp"

namespace schubert {

/// Position of a generator inside its IndexSet. The input order of the labels
/// is the total order used for every lexicographic tie-break in the library.
using Letter = int;

/// A word over an index set.
using Word = std::vector<Letter>;

/// Sorted, duplicate-free set of letters.
using LetterSet = std::vector<Letter>;

/// A bijection of an index set onto itself; entry i is the image of letter i.
using Permutation = std::vector<Letter>;

class IndexSet {
 public:
  explicit IndexSet(std::vector<std::string> labels);

  std::size_t size() const noexcept { return labels_.size(); }
  const std::string& label(Letter s) const { return labels_.at(static_cast<std::size_t>(s)); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  std::optional<Letter> find(std::string_view label) const noexcept;
  /// Throws UnknownLabel.
  Letter index_of(std::string_view label) const;

  std::vector<std::string> labels_of(std::span<const Letter> letters) const;

  friend bool operator==(const IndexSet&, const IndexSet&) = default;

 private:
  std::vector<std::string> labels_;
};

/// Coxeter exponent m_st; infinity is its own state rather than a sentinel.
class CoxeterExponent {
 public:
  static CoxeterExponent finite(int m) { return CoxeterExponent(m); }
  static CoxeterExponent infinite() { return CoxeterExponent(std::nullopt); }

  bool is_infinite() const noexcept { return !value_; }
  /// Throws std::logic_error for the infinite exponent.
  int value() const;

  friend bool operator==(const CoxeterExponent&, const CoxeterExponent&) = default;

 private:
  explicit CoxeterExponent(std::optional<int> v) : value_(v) {}
  std::optional<int> value_;
};

std::string to_string(const CoxeterExponent& m);

/// A generalized Cartan matrix. Instances are always valid: the only way to
/// build one is through validate(), which checks the three axioms.
class CartanMatrix {
 public:
  /// Row-major entries A_st; row and column order follow `labels`.
  /// Errors: NonSquare, DiagonalNotTwo(s), PositiveOffDiagonal(s,t), ZeroAsymmetry(s,t).
  static CartanMatrix validate(const std::vector<std::vector<std::int64_t>>& entries, IndexSet labels);

  const IndexSet& index_set() const noexcept { return index_set_; }
  std::size_t size() const noexcept { return index_set_.size(); }

  std::int64_t operator()(Letter s, Letter t) const noexcept {
    return entries_[static_cast<std::size_t>(s) * size() + static_cast<std::size_t>(t)];
  }
  std::int64_t entry(std::string_view s, std::string_view t) const;

  std::vector<std::vector<std::int64_t>> rows() const;
  bool is_symmetric() const noexcept;

  /// Restriction to J x J, keeping this matrix's label order. Errors: UnknownLabel.
  CartanMatrix submatrix(const std::vector<std::string>& labels) const;
  CartanMatrix submatrix(const LetterSet& letters) const;

  friend bool operator==(const CartanMatrix&, const CartanMatrix&) = default;

 private:
  CartanMatrix(IndexSet labels, std::vector<std::int64_t> entries)
      : index_set_(std::move(labels)), entries_(std::move(entries)) {}

  IndexSet index_set_;
  std::vector<std::int64_t> entries_;
};

/// m_ss = 1; otherwise 2, 3, 4, 6, infinity as A_st * A_ts = 0, 1, 2, 3, >= 4.
CoxeterExponent coxeter_exponent(const CartanMatrix& A, Letter s, Letter t);
CoxeterExponent coxeter_exponent(const CartanMatrix& A, std::string_view s, std::string_view t);

/// Gamma(A): vertex set S, edge {s,t} iff A_st != 0 with s != t.
class SimpleCoxeterGraph {
 public:
  explicit SimpleCoxeterGraph(const CartanMatrix& A);

  const IndexSet& vertices() const noexcept { return vertices_; }
  std::size_t size() const noexcept { return vertices_.size(); }
  bool adjacent(Letter s, Letter t) const noexcept {
    return adjacency_[static_cast<std::size_t>(s) * size() + static_cast<std::size_t>(t)];
  }
  std::size_t degree(Letter s) const noexcept;
  /// Unordered edges as pairs (s,t) with s < t, in lexicographic order.
  std::vector<std::pair<Letter, Letter>> edges() const;

 private:
  IndexSet vertices_;
  std::vector<bool> adjacency_;
};

SimpleCoxeterGraph simple_graph(const CartanMatrix& A);

inline constexpr std::size_t kMaxAutomorphismRank = 12;

/// All graph automorphisms in lexicographic order of the image sequence.
/// Errors: TooLarge when |S| exceeds kMaxAutomorphismRank.
std::vector<Permutation> graph_automorphisms(const SimpleCoxeterGraph& G);

/// All permutations with A_st = A_{sigma(s) sigma(t)}, in lexicographic order.
std::vector<Permutation> diagram_automorphisms(const CartanMatrix& A);

}  // namespace schubert
