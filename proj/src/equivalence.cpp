#include "schubert/equivalence.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace schubert {

Letter EquivalenceWitness::image(Letter s) const {
  for (const auto& [from, to] : sigma)
    if (from == s) return to;
  throw Error(ErrorKind::NotInSupport, {std::to_string(s)}, "letter is outside the witness domain");
}

namespace {

std::vector<std::size_t> support_degrees(const CartanMatrix& A, const LetterSet& supp) {
  std::vector<std::size_t> deg(supp.size(), 0);
  for (std::size_t i = 0; i < supp.size(); ++i)
    for (std::size_t j = 0; j < supp.size(); ++j)
      if (i != j && A(supp[i], supp[j]) != 0) ++deg[i];
  return deg;
}

}  // namespace

std::optional<EquivalenceWitness> check_equivalence(const WeylElement& w, const WeylElement& w_prime) {
  if (w.length() != w_prime.length()) return std::nullopt;
  const LetterSet S = support(w);
  const LetterSet T = support(w_prime);
  if (S.size() != T.size()) return std::nullopt;
  const std::size_t k = S.size();
  const CartanMatrix& A = w.cartan();
  const CartanMatrix& B = w_prime.cartan();

  const auto deg_s = support_degrees(A, S);
  const auto deg_t = support_degrees(B, T);
  {
    auto a = deg_s, b = deg_t;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return std::nullopt;
  }

  // below[i][j]: S[i] S[j] <= w.
  std::vector<std::vector<bool>> below(k, std::vector<bool>(k, false));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (i != j) below[i][j] = two_letter_leq(S[i], S[j], w);

  const WeylGroup target_group(w_prime.context());
  std::vector<std::size_t> image(k, 0);
  std::vector<bool> used(k, false);
  std::optional<EquivalenceWitness> found;

  std::function<bool(std::size_t)> extend = [&](std::size_t i) -> bool {
    if (i == k) {
      Word target_word;
      target_word.reserve(w.length());
      for (Letter s : w.canonical_word()) {
        const auto pos = static_cast<std::size_t>(std::lower_bound(S.begin(), S.end(), s) - S.begin());
        target_word.push_back(T[image[pos]]);
      }
      if (!(target_group.element_from_word(target_word) == w_prime)) return false;
      EquivalenceWitness witness{w, w_prime, {}, w.canonical_word(), std::move(target_word)};
      for (std::size_t p = 0; p < k; ++p) witness.sigma.emplace_back(S[p], T[image[p]]);
      found = std::move(witness);
      return true;
    }
    for (std::size_t j = 0; j < k; ++j) {
      if (used[j] || deg_s[i] != deg_t[j]) continue;
      bool ok = true;
      for (std::size_t p = 0; p < i && ok; ++p) {
        const std::size_t q = image[p];
        ok = (A(S[i], S[p]) != 0) == (B(T[j], T[q]) != 0);
        if (ok && below[i][p]) ok = A(S[i], S[p]) == B(T[j], T[q]);
        if (ok && below[p][i]) ok = A(S[p], S[i]) == B(T[q], T[j]);
      }
      if (!ok) continue;
      image[i] = j;
      used[j] = true;
      if (extend(i + 1)) return true;
      used[j] = false;
    }
    return false;
  };
  extend(0);
  return found;
}

bool verify_witness(const EquivalenceWitness& witness) {
  const WeylElement& w = witness.source;
  const WeylElement& w2 = witness.target;
  const LetterSet S = support(w);
  const LetterSet T = support(w2);
  if (witness.sigma.size() != S.size() || S.size() != T.size()) return false;
  LetterSet domain, range;
  for (const auto& [from, to] : witness.sigma) {
    domain.push_back(from);
    range.push_back(to);
  }
  std::sort(domain.begin(), domain.end());
  std::sort(range.begin(), range.end());
  if (domain != S || range != T) return false;

  if (witness.source_word.size() != w.length() || witness.target_word.size() != w2.length()) return false;
  if (!(WeylGroup(w.context()).element_from_word(witness.source_word) == w)) return false;
  if (!(WeylGroup(w2.context()).element_from_word(witness.target_word) == w2)) return false;
  for (std::size_t i = 0; i < witness.source_word.size(); ++i)
    if (witness.image(witness.source_word[i]) != witness.target_word[i]) return false;

  for (Letter s : S)
    for (Letter t : S)
      if (s != t && two_letter_leq(s, t, w) && w.cartan()(s, t) != w2.cartan()(witness.image(s), witness.image(t)))
        return false;
  return true;
}

EquivalenceWitness invert(const EquivalenceWitness& witness) {
  EquivalenceWitness out{witness.target, witness.source, {}, witness.target_word, witness.source_word};
  for (const auto& [from, to] : witness.sigma) out.sigma.emplace_back(to, from);
  std::sort(out.sigma.begin(), out.sigma.end());
  return out;
}

IntervalTransport transport_interval(const EquivalenceWitness& witness, std::size_t max_length) {
  if (!verify_witness(witness)) throw Error(ErrorKind::InvalidWitness, {}, "witness fails its defining conditions");
  IntervalTransport out{BruhatInterval(witness.source, max_length), BruhatInterval(witness.target, max_length), {}};
  const WeylGroup target_group(witness.target.context());
  std::vector<bool> hit(out.target.size(), false);
  for (const auto& v : out.source.elements()) {
    Word image;
    for (Letter s : v.canonical_word()) image.push_back(witness.image(s));
    const WeylElement v2 = target_group.element_from_word(image);
    const std::size_t j = out.target.index_of(v2);
    if (hit[j] || v2.length() != v.length()) throw std::logic_error("transported map is not a bijection");
    hit[j] = true;
    out.map.push_back(j);
  }
  if (out.map.size() != out.target.size()) throw std::logic_error("transported map is not onto");
  for (std::size_t i = 0; i < out.source.size(); ++i) {
    std::vector<std::size_t> mapped;
    for (std::size_t c : out.source.upper_covers(i)) mapped.push_back(out.map[c]);
    std::sort(mapped.begin(), mapped.end());
    if (mapped != out.target.upper_covers(out.map[i])) throw std::logic_error("transported map does not preserve covers");
  }
  return out;
}

std::vector<IsomClass> isom_classes(const WeylGroup& W, std::size_t max_length, std::size_t max_elements) {
  const auto elements = enumerate_elements(W, max_length, max_elements);
  std::vector<IsomClass> classes;
  // Cheap invariants of a class: length and the degree sequence of the
  // support graph. Only representatives sharing them are compared.
  using Key = std::pair<std::size_t, std::vector<std::size_t>>;
  std::map<Key, std::vector<std::size_t>> buckets;
  for (const auto& w : elements) {
    auto degrees = support_degrees(W.cartan(), support(w));
    std::sort(degrees.begin(), degrees.end());
    auto& bucket = buckets[Key{w.length(), std::move(degrees)}];
    bool placed = false;
    for (std::size_t c : bucket) {
      if (auto witness = check_equivalence(classes[c].representative, w)) {
        classes[c].members.push_back(w);
        classes[c].witnesses.push_back(std::move(*witness));
        placed = true;
        break;
      }
    }
    if (placed) continue;
    auto self = check_equivalence(w, w);
    if (!self) throw std::logic_error("Cartan equivalence failed reflexivity");
    bucket.push_back(classes.size());
    classes.push_back(IsomClass{w, {w}, {std::move(*self)}});
  }
  return classes;
}

IsomClassBound isom_class_bound(const CartanMatrix& A, const WeylElement& w) {
  if (!(w.cartan() == A)) throw Error(ErrorKind::MixedContexts, {}, "element is not over the given Cartan matrix");
  const LetterSet supp = support(w);
  if (supp.size() != A.size()) {
    std::vector<std::string> missing;
    for (Letter s = 0; s < static_cast<Letter>(A.size()); ++s)
      if (!std::binary_search(supp.begin(), supp.end(), s)) missing.push_back(A.index_set().label(s));
    throw Error(ErrorKind::NotFullySupported, missing);
  }
  IsomClassBound out;
  out.graph_automorphisms = graph_automorphisms(simple_graph(A)).size();
  if (A.is_symmetric()) out.diagram_automorphisms = diagram_automorphisms(A).size();
  return out;
}

}  // namespace schubert
