#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "schubert/cohomology.hpp"

namespace schubert {

using IdWord = std::vector<std::string>;

struct RecoveredCartan {
  CartanMatrix cartan;
  /// Ordered pairs whose entry no case determined; each is set to -1.
  std::vector<std::pair<std::string, std::string>> free_entries;
};

struct ReconstructedPresentation {
  /// Over the generator ids, in the oracle's generator order.
  CartanMatrix cartan;
  IdWord word;
  std::vector<std::pair<std::string, std::string>> free_entries;

  WeylElement element() const;
};

/// Works on a validated oracle. Every failure, including validation, is
/// reported as MalformedOracle.
class Reconstructor {
 public:
  explicit Reconstructor(const CohomologyOracle& oracle);

  const std::vector<std::string>& generators() const noexcept { return generators_; }
  const std::string& unit() const noexcept { return ids_[unit_]; }
  const std::string& top() const noexcept { return ids_[top_]; }

  RecoveredCartan recover_cartan() const;
  /// D~_R(v), in generator order.
  std::vector<std::string> descent_set(const std::string& v) const;
  /// Red~(v) for every basis id, each set sorted lexicographically by generator order.
  std::map<std::string, std::vector<IdWord>> reduced_word_sets() const;
  /// The lexicographically least word of Red~(v), without building the whole set.
  IdWord least_word(const std::string& v) const;
  ReconstructedPresentation reconstruct() const;

 private:
  std::size_t index_of(const std::string& id) const;
  const std::map<std::size_t, std::int64_t>& product(std::size_t g, std::size_t b) const { return products_[g][b]; }
  std::vector<std::size_t> support_of_product(std::size_t g, std::size_t b) const;
  std::vector<std::size_t> descents(std::size_t v) const;
  /// The unique u of degree deg(v)-2 with u in E^{g} and v in Supp(g u).
  std::size_t predecessor(std::size_t v, std::size_t g) const;

  std::vector<std::string> ids_;
  std::map<std::string, std::size_t> index_;
  std::vector<int> degree_;
  std::vector<std::string> generators_;
  std::vector<std::size_t> generator_basis_;  // generator position -> basis index
  std::size_t unit_ = 0;
  std::size_t top_ = 0;
  // products_[g][b]: basis index -> coefficient of generator g times basis b.
  std::vector<std::vector<std::map<std::size_t, std::int64_t>>> products_;
  // closure_[g][b]: b lies in E^{g}, the closure under all generators but g.
  std::vector<std::vector<bool>> closure_;
  // Basis indices sorted by degree.
  std::vector<std::size_t> by_degree_;
};

/// Errors: MalformedOracle.
void validate_oracle(const CohomologyOracle& oracle);
RecoveredCartan recover_cartan(const CohomologyOracle& oracle);
std::vector<std::string> descent_set(const CohomologyOracle& oracle, const std::string& v);
std::map<std::string, std::vector<IdWord>> reduced_word_sets(const CohomologyOracle& oracle);
ReconstructedPresentation reconstruct(const CohomologyOracle& oracle);

}  // namespace schubert
