#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "hyperring/classify.hpp"
#include "hyperring/constructions.hpp"
#include "hyperring/theorems.hpp"
#include "hyperring/workbench.hpp"

using namespace hyperring;
using nlohmann::ordered_json;

namespace {

  constexpr int kOk        = 0;
  constexpr int kViolation = 1;
  constexpr int kUsage     = 2;

  std::string read_text(std::string const& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw InputError("cannot read '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  void write_text(std::string const& path, std::string const& text) {
    if (path == "-") {
      std::cout << text;
      return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
      throw InputError("cannot write '" + path + "'");
    }
    out << text;
  }

  // A path, or a builtin name when no such file exists.
  TableData load_tables(std::string const& arg) {
    std::vector<std::string> warnings;
    if (!std::filesystem::exists(arg)) {
      for (auto const& name : builtin_names()) {
        if (name == arg) {
          return builtin_structure(arg).tables();
        }
      }
    }
    TableData d = parse_tables(read_text(arg), &warnings);
    for (auto const& w : warnings) {
      std::cerr << "warning: " << w << "\n";
    }
    return d;
  }

  StructurePtr load(std::string const& arg) {
    return std::make_shared<HyperStructure const>(HyperStructure::create(load_tables(arg)));
  }

  ElementSet parse_elements(std::string const& text, std::size_t size) {
    ElementSet         out;
    std::stringstream  ss(text);
    std::string        item;
    while (std::getline(ss, item, ',')) {
      std::size_t   pos = 0;
      unsigned long v   = 0;
      try {
        v = std::stoul(item, &pos);
      } catch (std::exception const&) {
        pos = 0;
      }
      if (pos == 0 || pos != item.size() || v >= size) {
        throw InputError("bad element '" + item + "'");
      }
      out.insert(static_cast<Element>(v));
    }
    return out;
  }

  ordered_json report_json(ValidationReport const& report) {
    ordered_json arr = ordered_json::array();
    for (auto const& v : report.violations) {
      arr.push_back({{"axiom", v.axiom}, {"witness", v.witness}, {"explanation", v.explanation}});
    }
    return {{"valid", report.valid()}, {"violations", std::move(arr)}};
  }

  int cmd_validate(std::string const& file, bool json) {
    ValidationReport const report = validate_structure(load_tables(file));
    if (json) {
      std::cout << report_json(report).dump(2) << "\n";
    } else if (report.valid()) {
      std::cout << "valid\n";
    } else {
      for (auto const& v : report.violations) {
        std::cout << v.axiom << " " << to_string(v.witness) << "  " << v.explanation << "\n";
      }
    }
    return report.valid() ? kOk : kViolation;
  }

  int cmd_ideals(std::string const& file, bool json) {
    auto const         g   = load(file);
    IdealLattice const lat = enumerate_hyperideals(*g);
    if (json) {
      ordered_json arr = ordered_json::array();
      for (std::size_t i = 0; i < lat.size(); ++i) {
        arr.push_back({{"ideal", lat[i].elements()},
                       {"prime", lat.is_prime(i)},
                       {"maximal", lat.is_maximal(i)},
                       {"radical", lat.radical(i).elements()}});
      }
      ordered_json root = {{"structure", g->name()}, {"ideals", std::move(arr)}, {"findings", lat.findings()}};
      std::cout << root.dump(2) << "\n";
    } else {
      std::cout << std::left << std::setw(24) << "ideal" << std::setw(7) << "prime" << std::setw(9) << "maximal"
                << "radical\n";
      for (std::size_t i = 0; i < lat.size(); ++i) {
        std::cout << std::setw(24) << lat[i].to_string() << std::setw(7) << (lat.is_prime(i) ? "yes" : "-")
                  << std::setw(9) << (lat.is_maximal(i) ? "yes" : "-") << lat.radical(i).to_string() << "\n";
      }
      for (auto const& f : lat.findings()) {
        std::cout << "finding: " << f << "\n";
      }
    }
    return lat.findings().empty() ? kOk : kViolation;
  }

  int cmd_classify(std::string const& file, std::string const& spec, std::vector<std::size_t> const& s_values,
                   bool json) {
    auto const         g     = load(file);
    IdealLattice const lat   = enumerate_hyperideals(*g);
    Expansion const    delta = parse_expansion_spec(spec, *g, lat);
    ClassifyOptions    options;
    if (!s_values.empty()) {
      options.s_values = s_values;
    }
    std::vector<std::string> notes;
    auto const               records = classify_all(*g, lat, delta, options, &notes);
    if (json) {
      ordered_json arr = ordered_json::array();
      for (auto const& r : records) {
        ordered_json flags = ordered_json::object();
        for (auto const& [k, v] : r.flags) {
          flags[k] = v;
        }
        ordered_json witnesses = ordered_json::object();
        for (auto const& [k, w] : r.witnesses) {
          ordered_json entry = {{"tuple", w.tuple}};
          if (w.position) {
            entry["position"] = *w.position;
          }
          witnesses[k] = std::move(entry);
        }
        arr.push_back({{"ideal", r.ideal.elements()}, {"flags", std::move(flags)}, {"witnesses", std::move(witnesses)}});
      }
      ordered_json root = {{"structure", g->name()},
                           {"expansion", delta.label()},
                           {"deltaZero", delta.zero_image().elements()},
                           {"records", std::move(arr)},
                           {"notes", notes}};
      std::cout << root.dump(2) << "\n";
      return kOk;
    }
    std::cout << g->name() << "  " << delta.label() << "  delta(0) = " << delta.zero_image().to_string() << "\n";
    for (auto const& r : records) {
      std::cout << r.ideal.to_string() << "\n";
      for (auto const& [k, v] : r.flags) {
        std::cout << "  " << std::left << std::setw(30) << k << (v ? "true" : "false");
        if (auto it = r.witnesses.find(k); it != r.witnesses.end()) {
          std::cout << "  witness " << to_string(it->second.tuple);
          if (it->second.position) {
            std::cout << " at " << *it->second.position;
          }
        }
        std::cout << "\n";
      }
    }
    for (auto const& n : notes) {
      std::cout << "note: " << n << "\n";
    }
    return kOk;
  }

  int emit_structure(HyperStructure const& g, std::string const& out) {
    write_text(out.empty() ? "-" : out, serialize_structure(g));
    return kOk;
  }

  std::vector<std::string> split(std::string const& text) {
    std::vector<std::string> out;
    std::stringstream        ss(text);
    std::string              item;
    while (std::getline(ss, item, ',')) {
      if (!item.empty()) {
        out.push_back(item);
      }
    }
    return out;
  }

  std::vector<SuiteItem> corpus_from(std::string const& spec) {
    CorpusSpec const cs = spec == "default" ? default_corpus_spec() : parse_corpus_spec(read_text(spec));
    std::vector<std::string> warnings;
    auto                     items = generate_corpus(cs, &warnings);
    for (auto const& w : warnings) {
      std::cerr << "warning: " << w << "\n";
    }
    return items;
  }

  int cmd_theorems(std::string const& file, std::string const& corpus, std::string const& only,
                   std::string const& expansion, std::string const& json_out) {
    std::vector<SuiteItem> items;
    if (!corpus.empty()) {
      items = corpus_from(corpus);
    } else if (!file.empty()) {
      SuiteItem item;
      item.structure = load(file);
      if (!expansion.empty()) {
        IdealLattice const lat = enumerate_hyperideals(*item.structure);
        item.expansions.push_back(parse_expansion_spec(expansion, *item.structure, lat));
      }
      items.push_back(std::move(item));
    } else {
      throw CLI::ValidationError("theorems", "a structure file or --corpus is required");
    }
    SuiteConfig config;
    config.only              = split(only);
    SuiteReport const report = run_suite(items, config);
    if (!json_out.empty()) {
      write_text(json_out, to_json(report));
    }
    if (json_out != "-") {
      std::cout << std::left << std::setw(6) << "id" << std::right << std::setw(8) << "pass" << std::setw(8)
                << "cex" << std::setw(9) << "vacuous" << std::setw(12) << "hypotheses" << "\n";
      for (auto const& s : report.summary) {
        std::cout << std::left << std::setw(6) << s.id << std::right << std::setw(8) << s.pass << std::setw(8)
                  << s.counterexample << std::setw(9) << s.vacuous << std::setw(12) << s.hypothesis_total << "\n";
      }
      for (auto const& [id, results] : report.per_theorem) {
        for (auto const& r : results) {
          for (auto const& w : r.witnesses) {
            std::cout << id << " " << r.structure << " " << r.expansion << ": " << w.description;
            for (auto const& [k, v] : w.bindings) {
              std::cout << " " << k << "=" << v;
            }
            std::cout << "\n";
          }
        }
      }
    }
    for (auto const& e : report.errors) {
      std::cerr << "error: " << e << "\n";
    }
    return report.counterexamples() == 0 && report.errors.empty() ? kOk : kViolation;
  }

  std::string file_stem(std::string name) {
    for (char& c : name) {
      if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '-') {
        c = '_';
      }
    }
    return name;
  }

  int cmd_corpus(std::string const& spec, std::string const& out) {
    auto const items = corpus_from(spec);
    std::filesystem::create_directories(out);
    std::size_t k = 0;
    for (auto const& item : items) {
      std::ostringstream name;
      name << std::setw(3) << std::setfill('0') << k++ << "_" << file_stem(item.structure->name()) << ".json";
      write_text((std::filesystem::path(out) / name.str()).string(), serialize_structure(*item.structure));
    }
    std::cout << items.size() << " structures written to " << out << "\n";
    return kOk;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite Krasner (m,n)-hyperring workbench"};
  app.require_subcommand(1);

  std::string file;
  std::string file2;
  bool        json = false;

  auto* validate = app.add_subcommand("validate", "check every axiom");
  validate->add_option("file", file, "structure file or builtin name")->required();
  validate->add_flag("--json", json, "JSON output");

  auto* ideals = app.add_subcommand("ideals", "list hyperideals");
  ideals->add_option("file", file, "structure file or builtin name")->required();
  ideals->add_flag("--json", json, "JSON output");

  std::string              expansion;
  std::vector<std::size_t> s_values;
  auto* classify = app.add_subcommand("classify", "classify every proper hyperideal");
  classify->add_option("file", file, "structure file or builtin name")->required();
  classify->add_option("--expansion,-e", expansion, "delta0|delta1|deltaG|deltaM|residual:a,b|@file")->required();
  classify->add_option("--s", s_values, "absorbing parameter (repeatable)");
  classify->add_flag("--json", json, "JSON output");

  std::string out;
  std::string elements;
  std::size_t target_m = 2;
  std::size_t target_n = 2;
  auto* construct = app.add_subcommand("construct", "build a new structure");
  construct->require_subcommand(1);
  auto* c_product = construct->add_subcommand("product", "G1 x G2");
  c_product->add_option("first", file)->required();
  c_product->add_option("second", file2)->required();
  auto* c_quotient = construct->add_subcommand("quotient", "G/A");
  c_quotient->add_option("file", file)->required();
  c_quotient->add_option("--ideal", elements, "comma-separated elements")->required();
  auto* c_localize = construct->add_subcommand("localize", "S^-1 G");
  c_localize->add_option("file", file)->required();
  c_localize->add_option("--subset", elements, "comma-separated elements")->required();
  auto* c_derive = construct->add_subcommand("derive", "(m,n) form of a binary structure");
  c_derive->add_option("file", file)->required();
  c_derive->add_option("--m", target_m)->required();
  c_derive->add_option("--n", target_n)->required();
  for (auto* sub : {c_product, c_quotient, c_localize, c_derive}) {
    sub->add_option("--out,-o", out, "output file (default stdout)");
  }

  std::string corpus;
  std::string only;
  std::string json_out;
  auto* theorems = app.add_subcommand("theorems", "run the theorem suite");
  theorems->add_option("file", file, "structure file or builtin name");
  theorems->add_option("--corpus", corpus, "'default' or a corpus spec file");
  theorems->add_option("--only", only, "comma-separated ids, e.g. T7,T8");
  theorems->add_option("--expansion,-e", expansion, "single expansion for a file run");
  theorems->add_option("--json", json_out, "write the JSON report ('-' for stdout)");

  std::string spec;
  auto* corpus_cmd = app.add_subcommand("corpus", "write a generated corpus");
  corpus_cmd->add_option("spec", spec, "'default' or a corpus spec file")->required();
  corpus_cmd->add_option("--out", out, "output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int const code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*validate) {
      return cmd_validate(file, json);
    }
    if (*ideals) {
      return cmd_ideals(file, json);
    }
    if (*classify) {
      return cmd_classify(file, expansion, s_values, json);
    }
    if (*c_product) {
      auto const a = load(file);
      auto const b = load(file2);
      return emit_structure(product(*a, *b), out);
    }
    if (*c_quotient) {
      auto const g = load(file);
      return emit_structure(*quotient(g, parse_elements(elements, g->size())).structure, out);
    }
    if (*c_localize) {
      auto const g = load(file);
      return emit_structure(*localize(g, parse_elements(elements, g->size())).structure, out);
    }
    if (*c_derive) {
      return emit_structure(derive_arity(*load(file), target_m, target_n), out);
    }
    if (*theorems) {
      return cmd_theorems(file, corpus, only, expansion, json_out);
    }
    if (*corpus_cmd) {
      return cmd_corpus(spec, out);
    }
  } catch (CLI::ValidationError const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (AxiomError const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kViolation;
  } catch (ConstructionError const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kViolation;
  } catch (Error const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
