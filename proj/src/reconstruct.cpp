#include "schubert/reconstruct.hpp"

#include <algorithm>
#include <optional>
#include <set>

namespace schubert {

namespace {

[[noreturn]] void malformed(std::vector<std::string> labels, const std::string& detail) {
  throw Error(ErrorKind::MalformedOracle, std::move(labels), detail);
}

}  // namespace

WeylElement ReconstructedPresentation::element() const { return WeylGroup(cartan).element_from_labels(word); }

Reconstructor::Reconstructor(const CohomologyOracle& oracle) {
  if (oracle.basis.empty()) malformed({}, "empty basis");
  for (const auto& entry : oracle.basis) {
    if (!index_.emplace(entry.id, ids_.size()).second) malformed({entry.id}, "duplicate basis id");
    if (entry.degree < 0 || entry.degree % 2 != 0) malformed({entry.id}, "degree must be even and nonnegative");
    ids_.push_back(entry.id);
    degree_.push_back(entry.degree);
  }
  const std::size_t n = ids_.size();

  by_degree_.resize(n);
  for (std::size_t i = 0; i < n; ++i) by_degree_[i] = i;
  std::stable_sort(by_degree_.begin(), by_degree_.end(),
                   [&](std::size_t a, std::size_t b) { return degree_[a] < degree_[b]; });
  const int top_degree = degree_[by_degree_.back()];
  std::vector<std::string> units, tops;
  for (std::size_t i = 0; i < n; ++i) {
    if (degree_[i] == 0) units.push_back(ids_[i]);
    if (degree_[i] == top_degree) tops.push_back(ids_[i]);
  }
  if (units.size() != 1) malformed(units, "need exactly one degree-0 id");
  if (tops.size() != 1) malformed(tops, "need exactly one id of maximal degree");
  unit_ = index_.at(units.front());
  top_ = index_.at(tops.front());

  std::set<std::string> seen;
  for (const auto& g : oracle.generators) {
    auto it = index_.find(g);
    if (it == index_.end()) malformed({g}, "generator is not a basis id");
    if (degree_[it->second] != 2) malformed({g}, "generator must have degree 2");
    if (!seen.insert(g).second) malformed({g}, "duplicate generator");
    generators_.push_back(g);
    generator_basis_.push_back(it->second);
  }
  for (std::size_t i = 0; i < n; ++i)
    if (degree_[i] == 2 && !seen.count(ids_[i])) malformed({ids_[i]}, "degree-2 id missing from generators");
  if (generators_.empty()) malformed({ids_[unit_]}, "no generators; a point has no presentation over a nonempty index set");

  const std::size_t k = generators_.size();
  std::map<std::string, std::size_t> generator_pos;
  for (std::size_t g = 0; g < k; ++g) generator_pos[generators_[g]] = g;

  products_.assign(k, std::vector<std::map<std::size_t, std::int64_t>>(n));
  std::vector<std::vector<bool>> filled(k, std::vector<bool>(n, false));
  for (const auto& [key, terms] : oracle.products) {
    const auto& [g_id, b_id] = key;
    auto g = generator_pos.find(g_id);
    if (g == generator_pos.end()) malformed({g_id}, "product row for a non-generator");
    auto b = index_.find(b_id);
    if (b == index_.end()) malformed({b_id}, "product column for an unknown id");
    auto& cell = products_[g->second][b->second];
    filled[g->second][b->second] = true;
    for (const auto& term : terms) {
      auto v = index_.find(term.id);
      if (v == index_.end()) malformed({g_id, b_id, term.id}, "product term with unknown id");
      if (degree_[v->second] != degree_[b->second] + 2) malformed({g_id, b_id, term.id}, "product must raise degree by 2");
      if (term.coeff < 0) malformed({g_id, b_id, term.id}, "negative structure constant");
      if (cell.count(v->second)) malformed({g_id, b_id, term.id}, "repeated term in product");
      if (term.coeff != 0) cell.emplace(v->second, term.coeff);
    }
  }
  for (std::size_t g = 0; g < k; ++g) {
    for (std::size_t b = 0; b < n; ++b)
      if (!filled[g][b]) malformed({generators_[g], ids_[b]}, "product table is not total");
    const std::map<std::size_t, std::int64_t> expected{{generator_basis_[g], 1}};
    if (products_[g][unit_] != expected) malformed({generators_[g], ids_[unit_]}, "degree-0 id does not act as the unit");
  }

  closure_.assign(k, std::vector<bool>(n, false));
  for (std::size_t excluded = 0; excluded < k; ++excluded) {
    auto& in = closure_[excluded];
    std::vector<std::size_t> frontier{unit_};
    in[unit_] = true;
    while (!frontier.empty()) {
      const std::size_t u = frontier.back();
      frontier.pop_back();
      for (std::size_t g = 0; g < k; ++g) {
        if (g == excluded) continue;
        for (const auto& [v, c] : products_[g][u]) {
          if (!in[v]) {
            in[v] = true;
            frontier.push_back(v);
          }
        }
      }
    }
  }
}

std::size_t Reconstructor::index_of(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) malformed({id}, "unknown basis id");
  return it->second;
}

std::vector<std::size_t> Reconstructor::support_of_product(std::size_t g, std::size_t b) const {
  std::vector<std::size_t> out;
  for (const auto& [v, c] : products_[g][b]) out.push_back(v);
  return out;
}

RecoveredCartan Reconstructor::recover_cartan() const {
  const std::size_t k = generators_.size();
  std::vector<std::vector<std::int64_t>> entries(k, std::vector<std::int64_t>(k, 0));
  std::vector<std::pair<std::string, std::string>> free_entries;
  for (std::size_t a = 0; a < k; ++a) {
    const auto square_a = support_of_product(a, generator_basis_[a]);
    for (std::size_t b = 0; b < k; ++b) {
      if (a == b) {
        entries[a][b] = 2;
        continue;
      }
      const auto mixed = support_of_product(a, generator_basis_[b]);
      const auto square_b = support_of_product(b, generator_basis_[b]);
      std::vector<std::size_t> with_b;
      std::set_intersection(mixed.begin(), mixed.end(), square_b.begin(), square_b.end(), std::back_inserter(with_b));
      std::vector<std::size_t> with_a;
      std::set_intersection(mixed.begin(), mixed.end(), square_a.begin(), square_a.end(), std::back_inserter(with_a));
      if (with_a.empty() && with_b.empty()) {
        entries[a][b] = 0;
      } else if (with_b.size() == 1) {
        entries[a][b] = -products_[b][generator_basis_[b]].at(with_b.front());
      } else if (with_b.empty()) {
        entries[a][b] = -1;
        free_entries.emplace_back(generators_[a], generators_[b]);
      } else {
        std::vector<std::string> labels{generators_[a], generators_[b]};
        for (std::size_t v : with_b) labels.push_back(ids_[v]);
        malformed(labels, "product and square share more than one basis element");
      }
    }
  }
  try {
    return RecoveredCartan{CartanMatrix::validate(entries, IndexSet(generators_)), std::move(free_entries)};
  } catch (const Error& e) {
    malformed(e.labels(), std::string("recovered matrix is not a Cartan matrix: ") + e.what());
  }
}

std::vector<std::size_t> Reconstructor::descents(std::size_t v) const {
  std::vector<std::size_t> out;
  for (std::size_t g = 0; g < generators_.size(); ++g)
    if (!closure_[g][v]) out.push_back(g);
  return out;
}

std::vector<std::string> Reconstructor::descent_set(const std::string& v) const {
  std::vector<std::string> out;
  for (std::size_t g : descents(index_of(v))) out.push_back(generators_[g]);
  return out;
}

std::size_t Reconstructor::predecessor(std::size_t v, std::size_t g) const {
  std::optional<std::size_t> found;
  for (std::size_t u = 0; u < ids_.size(); ++u) {
    if (degree_[u] + 2 != degree_[v] || !closure_[g][u] || !products_[g][u].count(v)) continue;
    if (found) malformed({ids_[v], generators_[g], ids_[*found], ids_[u]}, "predecessor is not unique");
    found = u;
  }
  if (!found) malformed({ids_[v], generators_[g]}, "no predecessor for a descent");
  return *found;
}

std::map<std::string, std::vector<IdWord>> Reconstructor::reduced_word_sets() const {
  // Words are kept as generator positions so that sorting follows generator order.
  std::vector<std::vector<std::vector<std::size_t>>> words(ids_.size());
  for (std::size_t v : by_degree_) {
    if (v == unit_) {
      words[v] = {{}};
      continue;
    }
    const auto d = descents(v);
    if (d.empty()) malformed({ids_[v]}, "positive-degree element without descents");
    for (std::size_t g : d) {
      for (auto w : words[predecessor(v, g)]) {
        w.push_back(g);
        words[v].push_back(std::move(w));
      }
    }
    std::sort(words[v].begin(), words[v].end());
  }
  std::map<std::string, std::vector<IdWord>> out;
  for (std::size_t v = 0; v < ids_.size(); ++v) {
    auto& target = out[ids_[v]];
    for (const auto& w : words[v]) {
      IdWord word;
      for (std::size_t g : w) word.push_back(generators_[g]);
      target.push_back(std::move(word));
    }
  }
  return out;
}

IdWord Reconstructor::least_word(const std::string& id) const {
  // The least word ending in g is the least word of the predecessor followed
  // by g, so the minimum over descents suffices.
  std::vector<std::optional<std::vector<std::size_t>>> memo(ids_.size());
  for (std::size_t v : by_degree_) {
    if (v == unit_) {
      memo[v] = std::vector<std::size_t>{};
      continue;
    }
    const auto d = descents(v);
    if (d.empty()) malformed({ids_[v]}, "positive-degree element without descents");
    for (std::size_t g : d) {
      auto w = *memo[predecessor(v, g)];
      w.push_back(g);
      if (!memo[v] || w < *memo[v]) memo[v] = std::move(w);
    }
  }
  IdWord out;
  for (std::size_t g : *memo[index_of(id)]) out.push_back(generators_[g]);
  return out;
}

ReconstructedPresentation Reconstructor::reconstruct() const {
  auto [cartan, free_entries] = recover_cartan();
  IdWord word = least_word(top());
  ReconstructedPresentation out{std::move(cartan), std::move(word), std::move(free_entries)};
  const std::size_t expected = static_cast<std::size_t>(degree_[top_] / 2);
  if (out.word.size() != expected || out.element().length() != expected)
    malformed(out.word, "reconstructed word is not reduced of length top degree / 2");
  return out;
}

void validate_oracle(const CohomologyOracle& oracle) { Reconstructor{oracle}; }

RecoveredCartan recover_cartan(const CohomologyOracle& oracle) { return Reconstructor(oracle).recover_cartan(); }

std::vector<std::string> descent_set(const CohomologyOracle& oracle, const std::string& v) {
  return Reconstructor(oracle).descent_set(v);
}

std::map<std::string, std::vector<IdWord>> reduced_word_sets(const CohomologyOracle& oracle) {
  return Reconstructor(oracle).reduced_word_sets();
}

ReconstructedPresentation reconstruct(const CohomologyOracle& oracle) { return Reconstructor(oracle).reconstruct(); }

}  // namespace schubert
