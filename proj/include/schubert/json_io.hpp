#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "schubert/cohomology.hpp"
#include "schubert/equivalence.hpp"
#include "schubert/reconstruct.hpp"

namespace schubert::io {

using nlohmann::json;

/// Errors: ParseError.
json parse_json(std::string_view text);
/// Inline JSON when `source` starts with '{' or '[', otherwise a file path.
/// Errors: ParseError.
json load_json(const std::string& source);

json to_json(const CartanMatrix& A);
/// {"index_set":[...],"matrix":[[...]]}. Errors: ParseError plus the Cartan axiom errors.
CartanMatrix cartan_from_json(const json& j);

/// Whitespace-separated labels or a JSON array of labels. "e" and the empty
/// string are the identity unless "e" is a label. Errors: UnknownLabel, ParseError.
Word parse_word(const CartanMatrix& A, std::string_view text);

json labels_json(const CartanMatrix& A, const Word& word);
json to_json(const WeylElement& w);
json to_json(const EquivalenceWitness& witness);
json to_json(const std::vector<IsomClass>& classes);

json to_json(const CohomologyOracle& oracle);
/// Errors: ParseError for shape problems; content is checked by the reconstructor.
CohomologyOracle oracle_from_json(const json& j);

json to_json(const ReconstructedPresentation& p);

}  // namespace schubert::io
