#include "schubert/cartan.hpp"

#include <algorithm>
#include <functional>
#include <unordered_set>

namespace schubert {

IndexSet::IndexSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.empty()) throw Error(ErrorKind::EmptyIndexSet, {}, "index set must be nonempty");
  std::unordered_set<std::string> seen;
  for (const auto& l : labels_) {
    if (l.empty()) throw Error(ErrorKind::ParseError, {}, "empty generator label");
    if (!seen.insert(l).second) throw Error(ErrorKind::DuplicateLabel, {l});
  }
}

std::optional<Letter> IndexSet::find(std::string_view label) const noexcept {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return static_cast<Letter>(i);
  return std::nullopt;
}

Letter IndexSet::index_of(std::string_view label) const {
  if (auto s = find(label)) return *s;
  throw Error(ErrorKind::UnknownLabel, {std::string(label)});
}

std::vector<std::string> IndexSet::labels_of(std::span<const Letter> letters) const {
  std::vector<std::string> out;
  out.reserve(letters.size());
  for (Letter s : letters) out.push_back(label(s));
  return out;
}

int CoxeterExponent::value() const {
  if (!value_) throw std::logic_error("infinite Coxeter exponent has no integer value");
  return *value_;
}

std::string to_string(const CoxeterExponent& m) { return m.is_infinite() ? "inf" : std::to_string(m.value()); }

CartanMatrix CartanMatrix::validate(const std::vector<std::vector<std::int64_t>>& entries, IndexSet labels) {
  const std::size_t n = labels.size();
  if (entries.size() != n)
    throw Error(ErrorKind::NonSquare, {},
                "matrix has " + std::to_string(entries.size()) + " rows for " + std::to_string(n) + " labels");
  for (std::size_t r = 0; r < n; ++r) {
    if (entries[r].size() != n)
      throw Error(ErrorKind::NonSquare, {labels.label(static_cast<Letter>(r))},
                  "row has " + std::to_string(entries[r].size()) + " entries, expected " + std::to_string(n));
  }
  std::vector<std::int64_t> flat;
  flat.reserve(n * n);
  for (const auto& row : entries) flat.insert(flat.end(), row.begin(), row.end());

  for (std::size_t s = 0; s < n; ++s) {
    const auto ls = labels.label(static_cast<Letter>(s));
    if (flat[s * n + s] != 2)
      throw Error(ErrorKind::DiagonalNotTwo, {ls}, "diagonal entry is " + std::to_string(flat[s * n + s]));
    for (std::size_t t = 0; t < n; ++t) {
      if (s == t) continue;
      const auto lt = labels.label(static_cast<Letter>(t));
      if (flat[s * n + t] > 0)
        throw Error(ErrorKind::PositiveOffDiagonal, {ls, lt}, "entry is " + std::to_string(flat[s * n + t]));
      if ((flat[s * n + t] == 0) != (flat[t * n + s] == 0)) throw Error(ErrorKind::ZeroAsymmetry, {ls, lt});
    }
  }
  return CartanMatrix(std::move(labels), std::move(flat));
}

std::int64_t CartanMatrix::entry(std::string_view s, std::string_view t) const {
  return (*this)(index_set_.index_of(s), index_set_.index_of(t));
}

std::vector<std::vector<std::int64_t>> CartanMatrix::rows() const {
  const std::size_t n = size();
  std::vector<std::vector<std::int64_t>> out(n);
  for (std::size_t r = 0; r < n; ++r) out[r].assign(entries_.begin() + r * n, entries_.begin() + (r + 1) * n);
  return out;
}

bool CartanMatrix::is_symmetric() const noexcept {
  const auto n = static_cast<Letter>(size());
  for (Letter s = 0; s < n; ++s)
    for (Letter t = s + 1; t < n; ++t)
      if ((*this)(s, t) != (*this)(t, s)) return false;
  return true;
}

CartanMatrix CartanMatrix::submatrix(const std::vector<std::string>& labels) const {
  LetterSet letters;
  for (const auto& l : labels) letters.push_back(index_set_.index_of(l));
  std::sort(letters.begin(), letters.end());
  letters.erase(std::unique(letters.begin(), letters.end()), letters.end());
  return submatrix(letters);
}

CartanMatrix CartanMatrix::submatrix(const LetterSet& letters) const {
  std::vector<std::string> labels;
  std::vector<std::int64_t> flat;
  for (Letter s : letters) {
    if (s < 0 || static_cast<std::size_t>(s) >= size())
      throw Error(ErrorKind::UnknownLabel, {std::to_string(s)}, "letter out of range");
    labels.push_back(index_set_.label(s));
    for (Letter t : letters) flat.push_back((*this)(s, t));
  }
  // A restriction of a valid matrix is valid; the axioms are entrywise.
  return CartanMatrix(IndexSet(std::move(labels)), std::move(flat));
}

CoxeterExponent coxeter_exponent(const CartanMatrix& A, Letter s, Letter t) {
  if (s == t) return CoxeterExponent::finite(1);
  const std::int64_t p = checked::mul(A(s, t), A(t, s));
  switch (p) {
    case 0: return CoxeterExponent::finite(2);
    case 1: return CoxeterExponent::finite(3);
    case 2: return CoxeterExponent::finite(4);
    case 3: return CoxeterExponent::finite(6);
    default: return CoxeterExponent::infinite();
  }
}

CoxeterExponent coxeter_exponent(const CartanMatrix& A, std::string_view s, std::string_view t) {
  return coxeter_exponent(A, A.index_set().index_of(s), A.index_set().index_of(t));
}

SimpleCoxeterGraph::SimpleCoxeterGraph(const CartanMatrix& A)
    : vertices_(A.index_set()), adjacency_(A.size() * A.size(), false) {
  const auto n = static_cast<Letter>(A.size());
  for (Letter s = 0; s < n; ++s)
    for (Letter t = 0; t < n; ++t)
      if (s != t && A(s, t) != 0) adjacency_[static_cast<std::size_t>(s) * A.size() + static_cast<std::size_t>(t)] = true;
}

std::size_t SimpleCoxeterGraph::degree(Letter s) const noexcept {
  std::size_t d = 0;
  for (Letter t = 0; t < static_cast<Letter>(size()); ++t) d += adjacent(s, t) ? 1 : 0;
  return d;
}

std::vector<std::pair<Letter, Letter>> SimpleCoxeterGraph::edges() const {
  std::vector<std::pair<Letter, Letter>> out;
  const auto n = static_cast<Letter>(size());
  for (Letter s = 0; s < n; ++s)
    for (Letter t = s + 1; t < n; ++t)
      if (adjacent(s, t)) out.emplace_back(s, t);
  return out;
}

SimpleCoxeterGraph simple_graph(const CartanMatrix& A) { return SimpleCoxeterGraph(A); }

namespace {

// Depth-first assignment of images in increasing order, which yields the
// surviving permutations in lexicographic order. `compatible(s,t,fs,ft)`
// must hold for every ordered pair of assigned letters.
std::vector<Permutation> search_permutations(std::size_t n,
                                             const std::function<bool(Letter, Letter, Letter, Letter)>& compatible) {
  if (n > kMaxAutomorphismRank)
    throw Error(ErrorKind::TooLarge, {}, "automorphism search is capped at " + std::to_string(kMaxAutomorphismRank) +
                                             " generators, got " + std::to_string(n));
  std::vector<Permutation> out;
  Permutation image(n, -1);
  std::vector<bool> used(n, false);
  std::function<void(std::size_t)> extend = [&](std::size_t pos) {
    if (pos == n) {
      out.push_back(image);
      return;
    }
    const auto s = static_cast<Letter>(pos);
    for (Letter cand = 0; cand < static_cast<Letter>(n); ++cand) {
      if (used[static_cast<std::size_t>(cand)]) continue;
      if (!compatible(s, s, cand, cand)) continue;
      bool ok = true;
      for (Letter t = 0; t < s && ok; ++t) {
        const Letter ft = image[static_cast<std::size_t>(t)];
        ok = compatible(s, t, cand, ft) && compatible(t, s, ft, cand);
      }
      if (!ok) continue;
      image[pos] = cand;
      used[static_cast<std::size_t>(cand)] = true;
      extend(pos + 1);
      used[static_cast<std::size_t>(cand)] = false;
    }
    image[pos] = -1;
  };
  extend(0);
  return out;
}

}  // namespace

std::vector<Permutation> graph_automorphisms(const SimpleCoxeterGraph& G) {
  return search_permutations(G.size(), [&](Letter s, Letter t, Letter fs, Letter ft) {
    return G.adjacent(s, t) == G.adjacent(fs, ft);
  });
}

std::vector<Permutation> diagram_automorphisms(const CartanMatrix& A) {
  return search_permutations(A.size(), [&](Letter s, Letter t, Letter fs, Letter ft) { return A(s, t) == A(fs, ft); });
}

}  // namespace schubert
