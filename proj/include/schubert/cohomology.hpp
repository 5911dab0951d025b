#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "schubert/weyl.hpp"

namespace schubert {

/// Integer combination of Schubert classes xi_v, v in [e,w], keyed by
/// interval index. Zero coefficients are never stored.
class SchubertClass {
 public:
  explicit SchubertClass(std::shared_ptr<const BruhatInterval> interval, std::map<std::size_t, std::int64_t> coeffs = {});

  const BruhatInterval& interval() const noexcept { return *interval_; }
  const std::map<std::size_t, std::int64_t>& coeffs() const noexcept { return coeffs_; }

  /// xi_v(x_u): the coefficient at u.
  std::int64_t coefficient(std::size_t index) const;
  std::int64_t coefficient(const WeylElement& u) const;

  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_homogeneous() const noexcept;
  /// 2 l(v) shared by all terms; nullopt for zero or mixed degree.
  std::optional<std::size_t> degree() const;

  SchubertClass& add(std::size_t index, std::int64_t coeff);
  SchubertClass& operator+=(const SchubertClass& other);
  friend SchubertClass operator+(SchubertClass a, const SchubertClass& b) { return a += b; }
  friend SchubertClass operator*(std::int64_t c, const SchubertClass& a);

  friend bool operator==(const SchubertClass& a, const SchubertClass& b) noexcept {
    return a.interval_ == b.interval_ && a.coeffs_ == b.coeffs_;
  }

 private:
  std::shared_ptr<const BruhatInterval> interval_;
  std::map<std::size_t, std::int64_t> coeffs_;
};

/// Supp(F): interval indices with nonzero coefficient, ascending.
std::vector<std::size_t> support(const SchubertClass& F);

/// The abstract data a reconstruction is allowed to see: opaque basis ids with
/// degrees, the degree-2 ids, and every product (generator, basis element).
struct CohomologyOracle {
  struct BasisEntry {
    std::string id;
    int degree = 0;
    friend bool operator==(const BasisEntry&, const BasisEntry&) = default;
  };
  struct Term {
    std::string id;
    std::int64_t coeff = 0;
    friend bool operator==(const Term&, const Term&) = default;
  };

  std::vector<BasisEntry> basis;
  std::vector<std::string> generators;
  std::map<std::pair<std::string, std::string>, std::vector<Term>> products;

  friend bool operator==(const CohomologyOracle&, const CohomologyOracle&) = default;
};

/// H^*(X(w,A)) on the Schubert basis.
class SchubertCohomology {
 public:
  /// Errors: LengthCapExceeded.
  explicit SchubertCohomology(const WeylElement& w, std::size_t max_length = kDefaultLengthCap);

  const WeylElement& element() const noexcept { return interval_->top(); }
  const BruhatInterval& interval() const noexcept { return *interval_; }
  const std::shared_ptr<const BruhatInterval>& interval_ptr() const noexcept { return interval_; }
  /// S(w); the degree-2 basis elements are xi_s for these letters.
  const LetterSet& generators() const noexcept { return generators_; }

  SchubertClass zero() const { return SchubertClass(interval_); }
  SchubertClass basis(std::size_t index) const;
  /// Errors: NotInInterval.
  SchubertClass basis(const WeylElement& u) const;

  /// xi_s * xi_u by the Chevalley formula. Errors: UnknownLabel, NotInSupport, NotInInterval.
  SchubertClass chevalley_product(Letter s, std::size_t u) const;
  SchubertClass chevalley_product(Letter s, const WeylElement& u) const;
  SchubertClass multiply_by_simple(Letter s, const SchubertClass& F) const;

  /// sum over s' != t with s't <= w of -A_{s't} xi_{s't}; an independent route to xi_t^2.
  SchubertClass simple_square_closed_form(Letter t) const;

  /// E^J: supports of the subring generated by xi_s, s in S(w) \ J.
  /// Errors: NotInSupport when J is not inside S(w).
  std::vector<std::size_t> support_closure(const LetterSet& J) const;
  /// W^J cap [e,w]: elements with no right descent in J.
  std::vector<std::size_t> minimal_coset_reps(const LetterSet& J) const;

  /// Opaque ids for each interval index, scrambled by `seed`.
  std::vector<std::string> oracle_ids(std::uint64_t seed) const;
  CohomologyOracle export_oracle(std::uint64_t seed) const;

 private:
  struct Cover {
    std::size_t target;
    // u^{-1}(beta^vee) for the cover u -> s_beta u.
    CorootVector pulled_back_coroot;
  };

  void require_generator(Letter s) const;

  std::shared_ptr<const BruhatInterval> interval_;
  LetterSet generators_;
  std::vector<std::vector<Cover>> covers_;
};

}  // namespace schubert
