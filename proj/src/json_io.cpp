#include "schubert/json_io.hpp"

#include <fstream>
#include <sstream>

namespace schubert::io {

namespace {

[[noreturn]] void parse_error(std::vector<std::string> labels, const std::string& detail) {
  throw Error(ErrorKind::ParseError, std::move(labels), detail);
}

const json& field(const json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) parse_error({name}, "missing field");
  return j.at(name);
}

std::string string_value(const json& j, const std::string& where) {
  if (!j.is_string()) parse_error({where}, "expected a string");
  return j.get<std::string>();
}

std::int64_t int_value(const json& j, std::vector<std::string> where) {
  if (!j.is_number_integer()) parse_error(std::move(where), "expected an integer");
  return j.get<std::int64_t>();
}

}  // namespace

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    parse_error({}, e.what());
  }
}

json load_json(const std::string& source) {
  const auto first = source.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (source[first] == '{' || source[first] == '[')) return parse_json(source);
  std::ifstream in(source);
  if (!in) parse_error({source}, "cannot open file");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_json(buffer.str());
}

json to_json(const CartanMatrix& A) {
  json matrix = json::array();
  for (const auto& row : A.rows()) matrix.push_back(row);
  return json{{"index_set", A.index_set().labels()}, {"matrix", matrix}};
}

CartanMatrix cartan_from_json(const json& j) {
  const json& labels_json = field(j, "index_set");
  if (!labels_json.is_array()) parse_error({"index_set"}, "expected an array of labels");
  std::vector<std::string> labels;
  for (const auto& l : labels_json) labels.push_back(string_value(l, "index_set"));
  IndexSet index(labels);

  const json& matrix = field(j, "matrix");
  if (!matrix.is_array()) parse_error({"matrix"}, "expected an array of rows");
  std::vector<std::vector<std::int64_t>> entries;
  for (std::size_t r = 0; r < matrix.size(); ++r) {
    const std::string row_label = r < labels.size() ? labels[r] : std::to_string(r);
    if (!matrix[r].is_array()) parse_error({row_label}, "matrix row must be an array");
    std::vector<std::int64_t> row;
    for (std::size_t c = 0; c < matrix[r].size(); ++c) {
      const std::string col_label = c < labels.size() ? labels[c] : std::to_string(c);
      row.push_back(int_value(matrix[r][c], {row_label, col_label}));
    }
    entries.push_back(std::move(row));
  }
  return CartanMatrix::validate(entries, std::move(index));
}

Word parse_word(const CartanMatrix& A, std::string_view text) {
  const IndexSet& S = A.index_set();
  std::vector<std::string> labels;
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '[') {
    const json j = parse_json(text);
    for (const auto& l : j) labels.push_back(string_value(l, "word"));
  } else {
    std::istringstream in{std::string(text)};
    for (std::string l; in >> l;) labels.push_back(l);
    if (labels.size() == 1 && labels[0] == "e" && !S.find("e")) labels.clear();
  }
  Word word;
  for (const auto& l : labels) word.push_back(S.index_of(l));
  return word;
}

json labels_json(const CartanMatrix& A, const Word& word) {
  json out = json::array();
  for (Letter s : word) out.push_back(A.index_set().label(s));
  return out;
}

json to_json(const WeylElement& w) {
  return json{{"cartan", to_json(w.cartan())}, {"word", labels_json(w.cartan(), w.canonical_word())}};
}

json to_json(const EquivalenceWitness& witness) {
  const CartanMatrix& A = witness.source.cartan();
  const CartanMatrix& B = witness.target.cartan();
  json sigma = json::object();
  for (const auto& [from, to] : witness.sigma) sigma[A.index_set().label(from)] = B.index_set().label(to);
  return json{{"sigma", sigma},
              {"source_word", labels_json(A, witness.source_word)},
              {"target_word", labels_json(B, witness.target_word)}};
}

json to_json(const std::vector<IsomClass>& classes) {
  json out = json::array();
  for (const auto& c : classes) {
    json members = json::array();
    for (const auto& m : c.members) members.push_back(labels_json(m.cartan(), m.canonical_word()));
    out.push_back(json{{"representative", labels_json(c.representative.cartan(), c.representative.canonical_word())},
                       {"members", members}});
  }
  return out;
}

json to_json(const CohomologyOracle& oracle) {
  json basis = json::array();
  for (const auto& b : oracle.basis) basis.push_back(json{{"id", b.id}, {"degree", b.degree}});
  json products = json::object();
  for (const auto& [key, terms] : oracle.products) {
    json row = json::array();
    for (const auto& t : terms) row.push_back(json{{"id", t.id}, {"coeff", t.coeff}});
    products[key.first + "|" + key.second] = row;
  }
  return json{{"basis", basis}, {"generators", oracle.generators}, {"products", products}};
}

CohomologyOracle oracle_from_json(const json& j) {
  CohomologyOracle out;
  const json& basis = field(j, "basis");
  if (!basis.is_array()) parse_error({"basis"}, "expected an array");
  for (const auto& b : basis) {
    const std::string id = string_value(field(b, "id"), "basis");
    const std::int64_t degree = int_value(field(b, "degree"), {id});
    if (degree < 0 || degree > 1000000) parse_error({id}, "degree out of range");
    out.basis.push_back({id, static_cast<int>(degree)});
  }
  const json& generators = field(j, "generators");
  if (!generators.is_array()) parse_error({"generators"}, "expected an array");
  for (const auto& g : generators) out.generators.push_back(string_value(g, "generators"));
  const json& products = field(j, "products");
  if (!products.is_object()) parse_error({"products"}, "expected an object");
  for (const auto& [key, row] : products.items()) {
    const auto bar = key.find('|');
    if (bar == std::string::npos) parse_error({key}, "product key must be \"generator|basis\"");
    if (!row.is_array()) parse_error({key}, "expected an array of terms");
    std::vector<CohomologyOracle::Term> terms;
    for (const auto& t : row)
      terms.push_back({string_value(field(t, "id"), key), int_value(field(t, "coeff"), {key})});
    out.products.emplace(std::make_pair(key.substr(0, bar), key.substr(bar + 1)), std::move(terms));
  }
  return out;
}

json to_json(const ReconstructedPresentation& p) {
  json free_entries = json::array();
  for (const auto& [a, b] : p.free_entries) free_entries.push_back(json::array({a, b}));
  return json{{"cartan", to_json(p.cartan)}, {"word", p.word}, {"free_entries", free_entries}};
}

}  // namespace schubert::io
