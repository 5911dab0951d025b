#include "schubert/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <optional>

#include "schubert/json_io.hpp"
#include "schubert/normal_form.hpp"

namespace schubert::cli {

namespace {

using io::json;

struct Options {
  std::string format = "json";
  bool strict = false;
  std::size_t max_length = kDefaultLengthCap;
  std::size_t max_elements = kDefaultElementCap;
  std::uint64_t seed = 0;
  std::string output;
};

struct Result {
  json value;
  bool negative = false;  // a domain "no" that --strict turns into exit 1
};

std::string cell(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

// Arrays of objects become one row per element under the union of keys;
// objects become key/value rows; anything else prints as is.
std::string render_table(const json& v) {
  std::vector<std::vector<std::string>> rows;
  if (v.is_array() && !v.empty() && std::all_of(v.begin(), v.end(), [](const json& r) { return r.is_object(); })) {
    std::vector<std::string> keys;
    for (const auto& r : v)
      for (const auto& [k, x] : r.items())
        if (std::find(keys.begin(), keys.end(), k) == keys.end()) keys.push_back(k);
    rows.push_back(keys);
    for (const auto& r : v) {
      std::vector<std::string> row;
      for (const auto& k : keys) row.push_back(r.contains(k) ? cell(r[k]) : "");
      rows.push_back(std::move(row));
    }
  } else if (v.is_object()) {
    for (const auto& [k, x] : v.items()) rows.push_back({k, cell(x)});
  } else if (v.is_array()) {
    for (const auto& x : v) rows.push_back({cell(x)});
  } else {
    return cell(v) + "\n";
  }
  std::vector<std::size_t> width;
  for (const auto& r : rows)
    for (std::size_t c = 0; c < r.size(); ++c) {
      if (width.size() <= c) width.push_back(0);
      width[c] = std::max(width[c], r[c].size());
    }
  std::string out;
  for (const auto& r : rows) {
    std::string line;
    for (std::size_t c = 0; c < r.size(); ++c) {
      line += r[c];
      if (c + 1 < r.size()) line += std::string(width[c] - r[c].size() + 2, ' ');
    }
    out += line + "\n";
  }
  return out;
}

json permutations_json(const CartanMatrix& A, const std::vector<Permutation>& perms) {
  json out = json::array();
  for (const auto& p : perms) out.push_back(io::labels_json(A, p));
  return out;
}

/// "source:word", where an inline JSON source runs to its matching brace.
std::pair<std::string, std::string> split_element_argument(const std::string& arg) {
  std::size_t colon = std::string::npos;
  if (!arg.empty() && arg.front() == '{') {
    int depth = 0;
    for (std::size_t i = 0; i < arg.size(); ++i) {
      if (arg[i] == '{') ++depth;
      if (arg[i] == '}' && --depth == 0) {
        colon = i + 1;
        break;
      }
    }
    if (colon >= arg.size() || arg[colon] != ':')
      throw Error(ErrorKind::ParseError, {arg}, "expected SOURCE:WORD");
  } else {
    colon = arg.find(':');
    if (colon == std::string::npos) throw Error(ErrorKind::ParseError, {arg}, "expected SOURCE:WORD");
  }
  return {arg.substr(0, colon), arg.substr(colon + 1)};
}

WeylElement load_element(const std::string& cartan_source, const std::string& word) {
  const WeylGroup W(io::cartan_from_json(io::load_json(cartan_source)));
  return W.element_from_word(io::parse_word(W.cartan(), word));
}

json element_summary(const WeylElement& w) {
  const CartanMatrix& A = w.cartan();
  return json{{"word", io::labels_json(A, w.canonical_word())},
              {"length", w.length()},
              {"left_descents", io::labels_json(A, left_descents(w))},
              {"right_descents", io::labels_json(A, right_descents(w))},
              {"support", io::labels_json(A, support(w))}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Schubert varieties of Kac-Moody flag varieties: Cartan equivalence, cohomology, reconstruction"};
  app.require_subcommand(1, 1);
  Options opt;
  app.add_option("--format", opt.format, "json or table")->check(CLI::IsMember({"json", "table"}));
  app.add_flag("--strict", opt.strict, "exit 1 on a negative result");
  app.add_option("--max-length", opt.max_length, "length cap");
  app.add_option("--max-elements", opt.max_elements, "element-count cap for enumeration");
  app.add_option("--seed", opt.seed, "seed for oracle id scrambling");
  app.add_option("--output", opt.output, "write output to FILE");

  std::function<Result()> action;
  auto sub = [&](const char* name, const char* help) {
    CLI::App* s = app.add_subcommand(name, help);
    s->fallthrough();
    return s;
  };

  std::string cartan_src, word_text, other_word, left, right, oracle_src, expression, specialize_src;
  bool canonical = false, reduced = false, inversions = false, show_interval = false;

  auto* validate = sub("validate", "check the Cartan matrix axioms");
  validate->add_option("cartan", cartan_src, "Cartan matrix JSON")->required();
  validate->callback([&] {
    action = [&] {
      const CartanMatrix A = io::cartan_from_json(io::load_json(cartan_src));
      json exps = json::object();
      for (Letter s = 0; s < static_cast<Letter>(A.size()); ++s)
        for (Letter t = s + 1; t < static_cast<Letter>(A.size()); ++t)
          exps[A.index_set().label(s) + "|" + A.index_set().label(t)] = to_string(coxeter_exponent(A, s, t));
      return Result{json{{"valid", true}, {"symmetric", A.is_symmetric()}, {"coxeter_exponents", exps}}};
    };
  });

  auto* word = sub("word", "canonical word, descents, reduced words, inversions or interval");
  word->add_option("cartan", cartan_src)->required();
  word->add_option("word", word_text)->required();
  auto* f_canon = word->add_flag("--canonical", canonical, "print only the canonical reduced word");
  auto* f_red = word->add_flag("--reduced-words", reduced, "print every reduced word");
  auto* f_inv = word->add_flag("--inversions", inversions, "print the inversion set");
  auto* f_int = word->add_flag("--interval", show_interval, "print the Bruhat interval [e,w]");
  f_canon->excludes(f_red)->excludes(f_inv)->excludes(f_int);
  f_red->excludes(f_inv)->excludes(f_int);
  f_inv->excludes(f_int);
  word->callback([&] {
    action = [&] {
      const WeylElement w = load_element(cartan_src, word_text);
      const CartanMatrix& A = w.cartan();
      if (canonical) return Result{io::labels_json(A, w.canonical_word())};
      if (reduced) {
        json all = json::array();
        for (const auto& r : reduced_words(w, opt.max_length)) all.push_back(io::labels_json(A, r));
        return Result{all};
      }
      if (inversions) {
        json roots = json::array();
        for (const auto& beta : inversion_set(w)) roots.push_back(beta.coords);
        return Result{json{{"index_set", A.index_set().labels()}, {"inversions", roots}}};
      }
      if (show_interval) {
        const BruhatInterval I(w, opt.max_length);
        json elements = json::array();
        for (std::size_t i = 0; i < I.size(); ++i) {
          json covers = json::array();
          for (std::size_t c : I.upper_covers(i)) covers.push_back(c);
          elements.push_back(json{{"index", i},
                                  {"word", io::labels_json(A, I[i].canonical_word())},
                                  {"upper_covers", covers}});
        }
        return Result{elements};
      }
      return Result{element_summary(w)};
    };
  });

  auto* bruhat = sub("bruhat", "decide u <= w in Bruhat order");
  bruhat->add_option("cartan", cartan_src)->required();
  bruhat->add_option("u", word_text)->required();
  bruhat->add_option("w", other_word)->required();
  bruhat->callback([&] {
    action = [&] {
      const WeylGroup W(io::cartan_from_json(io::load_json(cartan_src)));
      const WeylElement u = W.element_from_word(io::parse_word(W.cartan(), word_text));
      const WeylElement w = W.element_from_word(io::parse_word(W.cartan(), other_word));
      const bool leq = bruhat_leq(u, w);
      return Result{json{{"leq", leq}}, !leq};
    };
  });

  auto* equiv = sub("equiv", "decide Cartan equivalence of two pairs (w, A)");
  equiv->add_option("--left", left, "CARTAN:WORD")->required();
  equiv->add_option("--right", right, "CARTAN:WORD")->required();
  equiv->callback([&] {
    action = [&] {
      const auto [ls, lw] = split_element_argument(left);
      const auto [rs, rw] = split_element_argument(right);
      const auto witness = check_equivalence(load_element(ls, lw), load_element(rs, rw));
      json result{{"equivalent", witness.has_value()}};
      if (witness) result["witness"] = io::to_json(*witness);
      return Result{result, !witness};
    };
  });

  auto* classes = sub("isom-classes", "partition {w : l(w) <= max-length} by Cartan equivalence");
  classes->add_option("cartan", cartan_src)->required();
  classes->callback([&] {
    action = [&] {
      const WeylGroup W(io::cartan_from_json(io::load_json(cartan_src)));
      return Result{io::to_json(isom_classes(W, opt.max_length, opt.max_elements))};
    };
  });

  auto* cohomology = sub("cohomology", "Chevalley table of H^*(X(w,A)) on the Schubert basis");
  cohomology->add_option("cartan", cartan_src)->required();
  cohomology->add_option("word", word_text)->required();
  cohomology->callback([&] {
    action = [&] {
      const SchubertCohomology H(load_element(cartan_src, word_text), opt.max_length);
      const CartanMatrix& A = H.element().cartan();
      const BruhatInterval& I = H.interval();
      json table = json::array();
      for (Letter s : H.generators()) {
        for (std::size_t u = 0; u < I.size(); ++u) {
          json terms = json::array();
          const SchubertClass product = H.chevalley_product(s, u);
          for (const auto& [v, c] : product.coeffs())
            terms.push_back(json{{"word", io::labels_json(A, I[v].canonical_word())}, {"coeff", c}});
          table.push_back(json{{"generator", A.index_set().label(s)},
                               {"basis", io::labels_json(A, I[u].canonical_word())},
                               {"product", terms}});
        }
      }
      return Result{table};
    };
  });

  auto* exporter = sub("export-oracle", "cohomology data under scrambled ids");
  exporter->add_option("cartan", cartan_src)->required();
  exporter->add_option("word", word_text)->required();
  exporter->callback([&] {
    action = [&] {
      const SchubertCohomology H(load_element(cartan_src, word_text), opt.max_length);
      return Result{io::to_json(H.export_oracle(opt.seed))};
    };
  });

  auto* reconstructor = sub("reconstruct", "rebuild (w', A') from an oracle");
  reconstructor->add_option("oracle", oracle_src)->required();
  reconstructor->callback([&] {
    action = [&] {
      return Result{io::to_json(reconstruct(io::oracle_from_json(io::load_json(oracle_src))))};
    };
  });

  auto* normal = sub("normal-form", "rewrite a free-algebra element with eta");
  normal->add_option("expression", expression)->required();
  normal->add_option("--specialize", specialize_src, "Cartan matrix JSON to substitute");
  normal->callback([&] {
    action = [&] {
      const nf::FreeAlgebraElement tau = nf::parse(expression);
      const nf::FreeAlgebraElement normal_form = nf::eta(tau);
      json result{{"input", tau.to_string()}, {"normal_form", normal_form.to_string()}};
      if (!specialize_src.empty()) {
        const CartanMatrix A = io::cartan_from_json(io::load_json(specialize_src));
        result["specialized"] = nf::specialize(normal_form, A).to_string();
      }
      return Result{result};
    };
  });

  auto* autos = sub("automorphisms", "automorphisms of the Coxeter graph and of the Cartan matrix");
  autos->add_option("cartan", cartan_src)->required();
  autos->add_option("--word", word_text, "fully supported word for the Isom class bound");
  autos->callback([&] {
    action = [&] {
      const CartanMatrix A = io::cartan_from_json(io::load_json(cartan_src));
      const auto graph = graph_automorphisms(simple_graph(A));
      const auto diagram = diagram_automorphisms(A);
      json result{{"graph", permutations_json(A, graph)},
                  {"graph_count", graph.size()},
                  {"diagram", permutations_json(A, diagram)},
                  {"diagram_count", diagram.size()}};
      if (!word_text.empty()) {
        const WeylGroup W(A);
        const auto bound = isom_class_bound(W.cartan(), W.element_from_word(io::parse_word(A, word_text)));
        result["isom_class_bound"] = bound.value();
      }
      return Result{result};
    };
  });

  std::vector<std::string> argv_storage;
  argv_storage.push_back("schubert");
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_storage) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    const Result result = action();
    const std::string text = opt.format == "table" ? render_table(result.value) : result.value.dump(2) + "\n";
    if (opt.output.empty()) {
      out << text;
    } else {
      std::ofstream file(opt.output);
      if (!file) throw Error(ErrorKind::ParseError, {opt.output}, "cannot open output file");
      file << text;
    }
    return opt.strict && result.negative ? 1 : 0;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace schubert::cli
