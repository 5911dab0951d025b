#include "schubert/cohomology.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

namespace schubert {

SchubertClass::SchubertClass(std::shared_ptr<const BruhatInterval> interval, std::map<std::size_t, std::int64_t> coeffs)
    : interval_(std::move(interval)) {
  for (const auto& [i, c] : coeffs) add(i, c);
}

std::int64_t SchubertClass::coefficient(std::size_t index) const {
  auto it = coeffs_.find(index);
  return it == coeffs_.end() ? 0 : it->second;
}

std::int64_t SchubertClass::coefficient(const WeylElement& u) const {
  if (auto i = interval_->find(u)) return coefficient(*i);
  return 0;
}

bool SchubertClass::is_homogeneous() const noexcept {
  if (coeffs_.empty()) return true;
  const std::size_t len = (*interval_)[coeffs_.begin()->first].length();
  for (const auto& [i, c] : coeffs_)
    if ((*interval_)[i].length() != len) return false;
  return true;
}

std::optional<std::size_t> SchubertClass::degree() const {
  if (coeffs_.empty() || !is_homogeneous()) return std::nullopt;
  return 2 * (*interval_)[coeffs_.begin()->first].length();
}

SchubertClass& SchubertClass::add(std::size_t index, std::int64_t coeff) {
  if (index >= interval_->size())
    throw Error(ErrorKind::NotInInterval, {std::to_string(index)}, "basis index out of range");
  if (coeff == 0) return *this;
  auto [it, inserted] = coeffs_.emplace(index, coeff);
  if (!inserted) {
    it->second = checked::add(it->second, coeff);
    if (it->second == 0) coeffs_.erase(it);
  }
  return *this;
}

SchubertClass& SchubertClass::operator+=(const SchubertClass& other) {
  if (interval_ != other.interval_) throw Error(ErrorKind::MixedContexts, {}, "classes live in different rings");
  for (const auto& [i, c] : other.coeffs_) add(i, c);
  return *this;
}

SchubertClass operator*(std::int64_t c, const SchubertClass& a) {
  SchubertClass out(a.interval_);
  for (const auto& [i, v] : a.coeffs_) out.add(i, checked::mul(c, v));
  return out;
}

std::vector<std::size_t> support(const SchubertClass& F) {
  std::vector<std::size_t> out;
  for (const auto& [i, c] : F.coeffs()) out.push_back(i);
  return out;
}

SchubertCohomology::SchubertCohomology(const WeylElement& w, std::size_t max_length)
    : interval_(std::make_shared<const BruhatInterval>(w, max_length)), generators_(schubert::support(w)) {
  const BruhatInterval& I = *interval_;
  covers_.resize(I.size());
  for (std::size_t u = 0; u < I.size(); ++u) {
    const WeylElement u_inverse = I[u].inverse();
    for (std::size_t v : I.upper_covers(u)) {
      const Reflection r = cover_reflection(I[u], I[v]);
      covers_[u].push_back(Cover{v, u_inverse.apply(r.coroot)});
    }
  }
}

void SchubertCohomology::require_generator(Letter s) const {
  const auto& labels = element().cartan().index_set();
  if (s < 0 || static_cast<std::size_t>(s) >= labels.size())
    throw Error(ErrorKind::UnknownLabel, {std::to_string(s)}, "letter out of range");
  if (!std::binary_search(generators_.begin(), generators_.end(), s))
    throw Error(ErrorKind::NotInSupport, {labels.label(s)}, "xi_s requires s in S(w)");
}

SchubertClass SchubertCohomology::basis(std::size_t index) const {
  SchubertClass out(interval_);
  out.add(index, 1);
  return out;
}

SchubertClass SchubertCohomology::basis(const WeylElement& u) const { return basis(interval_->index_of(u)); }

SchubertClass SchubertCohomology::chevalley_product(Letter s, std::size_t u) const {
  require_generator(s);
  if (u >= interval_->size())
    throw Error(ErrorKind::NotInInterval, {std::to_string(u)}, "basis index out of range");
  SchubertClass out(interval_);
  for (const auto& cover : covers_[u]) {
    const std::int64_t c = cover.pulled_back_coroot[s];
    if (c < 0) throw std::logic_error("negative Chevalley coefficient");
    out.add(cover.target, c);
  }
  return out;
}

SchubertClass SchubertCohomology::chevalley_product(Letter s, const WeylElement& u) const {
  return chevalley_product(s, interval_->index_of(u));
}

SchubertClass SchubertCohomology::multiply_by_simple(Letter s, const SchubertClass& F) const {
  require_generator(s);
  if (&F.interval() != interval_.get()) throw Error(ErrorKind::MixedContexts, {}, "class lives in a different ring");
  SchubertClass out(interval_);
  for (const auto& [u, c] : F.coeffs()) out += c * chevalley_product(s, u);
  return out;
}

SchubertClass SchubertCohomology::simple_square_closed_form(Letter t) const {
  require_generator(t);
  const WeylGroup W(element().context());
  const CartanMatrix& A = element().cartan();
  SchubertClass out(interval_);
  for (Letter s : generators_) {
    if (s == t || A(s, t) == 0) continue;
    const WeylElement st = W.element_from_word({s, t});
    if (!bruhat_leq(st, element())) continue;
    out.add(interval_->index_of(st), checked::sub(0, A(s, t)));
  }
  return out;
}

std::vector<std::size_t> SchubertCohomology::support_closure(const LetterSet& J) const {
  for (Letter j : J) require_generator(j);
  LetterSet others;
  std::set_difference(generators_.begin(), generators_.end(), J.begin(), J.end(), std::back_inserter(others));
  // Coefficients are nonnegative, so no cancellation can remove a basis
  // element from the support of a monomial; a fixpoint over basis elements
  // gives the whole support set of the subring.
  std::vector<bool> in(interval_->size(), false);
  std::vector<std::size_t> frontier{0};
  in[0] = true;
  while (!frontier.empty()) {
    const std::size_t u = frontier.back();
    frontier.pop_back();
    for (Letter s : others) {
      for (std::size_t v : support(chevalley_product(s, u))) {
        if (!in[v]) {
          in[v] = true;
          frontier.push_back(v);
        }
      }
    }
  }
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < in.size(); ++i)
    if (in[i]) out.push_back(i);
  return out;
}

std::vector<std::size_t> SchubertCohomology::minimal_coset_reps(const LetterSet& J) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < interval_->size(); ++i) {
    const WeylElement& u = (*interval_)[i];
    if (std::none_of(J.begin(), J.end(), [&](Letter s) { return u.is_right_descent(s); })) out.push_back(i);
  }
  return out;
}

std::vector<std::string> SchubertCohomology::oracle_ids(std::uint64_t seed) const {
  // Fisher-Yates with raw mt19937_64 draws, so ids are stable across
  // standard libraries.
  std::vector<std::size_t> perm(interval_->size());
  std::iota(perm.begin(), perm.end(), 0);
  std::mt19937_64 rng(seed);
  for (std::size_t i = perm.size(); i > 1; --i) std::swap(perm[i - 1], perm[rng() % i]);
  std::vector<std::string> ids;
  ids.reserve(perm.size());
  for (std::size_t p : perm) ids.push_back("b" + std::to_string(p));
  return ids;
}

CohomologyOracle SchubertCohomology::export_oracle(std::uint64_t seed) const {
  const auto ids = oracle_ids(seed);
  const BruhatInterval& I = *interval_;
  CohomologyOracle out;
  for (std::size_t i = 0; i < I.size(); ++i) out.basis.push_back({ids[i], static_cast<int>(2 * I[i].length())});
  std::sort(out.basis.begin(), out.basis.end(), [](const auto& a, const auto& b) {
    return std::tie(a.degree, a.id) < std::tie(b.degree, b.id);
  });
  for (Letter s : generators_) {
    const std::size_t gi = I.index_of(WeylGroup(element().context()).simple_reflection(s));
    out.generators.push_back(ids[gi]);
    for (std::size_t u = 0; u < I.size(); ++u) {
      std::vector<CohomologyOracle::Term> terms;
      const SchubertClass product = chevalley_product(s, u);
      for (const auto& [v, c] : product.coeffs()) terms.push_back({ids[v], c});
      std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
      out.products.emplace(std::make_pair(ids[gi], ids[u]), std::move(terms));
    }
  }
  std::sort(out.generators.begin(), out.generators.end());
  return out;
}

}  // namespace schubert
