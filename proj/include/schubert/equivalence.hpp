#pragma once

#include <optional>
#include <vector>

#include "schubert/weyl.hpp"

namespace schubert {

/// Certificate that (source, A) and (target, A') are Cartan equivalent.
struct EquivalenceWitness {
  WeylElement source;
  WeylElement target;
  /// (s, sigma(s)) for s in S(source), sorted by s.
  std::vector<std::pair<Letter, Letter>> sigma;
  Word source_word;
  Word target_word;

  /// Errors: NotInSupport when s is outside S(source).
  Letter image(Letter s) const;
};

/// First witness over bijections S(w) -> S(w') in lexicographic order, or
/// nullopt when the pairs are not Cartan equivalent.
std::optional<EquivalenceWitness> check_equivalence(const WeylElement& w, const WeylElement& w_prime);

/// Whether a witness satisfies its three defining conditions.
bool verify_witness(const EquivalenceWitness& witness);

/// The inverse witness, from target back to source.
EquivalenceWitness invert(const EquivalenceWitness& witness);

/// Poset isomorphism [e,w] -> [e,w'] induced by a witness.
struct IntervalTransport {
  BruhatInterval source;
  BruhatInterval target;
  /// source index -> target index.
  std::vector<std::size_t> map;
};

/// Errors: InvalidWitness, LengthCapExceeded.
IntervalTransport transport_interval(const EquivalenceWitness& witness, std::size_t max_length = kDefaultLengthCap);

struct IsomClass {
  WeylElement representative;
  /// Members in (length, canonical word) order; the first is the representative.
  std::vector<WeylElement> members;
  /// witnesses[i] maps the representative to members[i].
  std::vector<EquivalenceWitness> witnesses;
};

/// Partition of {w : l(w) <= max_length} by Cartan equivalence, ordered by
/// representative. Errors: EnumerationCapExceeded.
std::vector<IsomClass> isom_classes(const WeylGroup& W, std::size_t max_length,
                                    std::size_t max_elements = kDefaultElementCap);

struct IsomClassBound {
  std::size_t graph_automorphisms = 0;
  /// |Aut(A)|, present only for symmetric A.
  std::optional<std::size_t> diagram_automorphisms;

  std::size_t value() const noexcept {
    return diagram_automorphisms ? std::min(*diagram_automorphisms, graph_automorphisms) : graph_automorphisms;
  }
};

/// Upper bound on |Isom(w,A)| for fully supported w. Errors: NotFullySupported.
IsomClassBound isom_class_bound(const CartanMatrix& A, const WeylElement& w);

}  // namespace schubert
