#pragma once

#include <random>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "schubert/weyl.hpp"

namespace testing_support {

using namespace schubert;

inline std::vector<std::string> labels(std::size_t n, const std::string& prefix = "s") {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

inline CartanMatrix cartan(const oracle::Matrix& m, const std::string& prefix = "s") {
  return CartanMatrix::validate(m, IndexSet(labels(m.size(), prefix)));
}

inline oracle::Matrix type_a(std::size_t n) {
  oracle::Matrix m(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    m[i][i] = 2;
    if (i + 1 < n) m[i][i + 1] = m[i + 1][i] = -1;
  }
  return m;
}

inline const oracle::Matrix kA3 = type_a(3);
inline const oracle::Matrix kC3 = {{2, -1, 0}, {-1, 2, -1}, {0, -2, 2}};
inline const oracle::Matrix kB2 = {{2, -2}, {-1, 2}};
inline const oracle::Matrix kAffineA1 = {{2, -2}, {-2, 2}};
inline const oracle::Matrix kD4 = {{2, -1, 0, 0}, {-1, 2, -1, -1}, {0, -1, 2, 0}, {0, -1, 0, 2}};

inline oracle::Matrix plain(const CartanMatrix& A) { return A.rows(); }

inline oracle::Matrix action_matrix(const WeylElement& w) {
  oracle::Matrix m(w.rank(), std::vector<std::int64_t>(w.rank(), 0));
  for (Letter r = 0; r < static_cast<Letter>(w.rank()); ++r)
    for (Letter c = 0; c < static_cast<Letter>(w.rank()); ++c) m[r][c] = w.action(r, c);
  return m;
}

inline oracle::Word plain(const Word& w) { return oracle::Word(w.begin(), w.end()); }

/// Random word of length <= max_length over n letters.
inline Word random_word(std::mt19937_64& rng, std::size_t n, std::size_t max_length) {
  std::uniform_int_distribution<std::size_t> len(0, max_length);
  std::uniform_int_distribution<int> letter(0, static_cast<int>(n) - 1);
  Word w(len(rng));
  for (auto& s : w) s = letter(rng);
  return w;
}

/// Reduced random element with length exactly `length` (or shorter when the
/// group runs out of length), built by appending non-descents.
inline WeylElement random_element(std::mt19937_64& rng, const WeylGroup& W, std::size_t length) {
  WeylElement w = W.identity();
  std::uniform_int_distribution<int> letter(0, static_cast<int>(W.rank()) - 1);
  for (std::size_t tries = 0; w.length() < length && tries < 50 * (length + 1); ++tries) {
    const Letter s = letter(rng);
    if (!w.is_right_descent(s)) w = w.times_simple(s);
  }
  return w;
}

}  // namespace testing_support
