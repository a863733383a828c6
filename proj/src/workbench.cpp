#include "hyperring/workbench.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

#include <json.hpp>

#include "hyperring/constructions.hpp"
#include "hyperring/tuples.hpp"

namespace hyperring {

  namespace {

    using nlohmann::json;
    using nlohmann::ordered_json;

    TableData zmod(std::size_t k) {
      TableData d;
      d.name       = "Z" + std::to_string(k);
      d.provenance = "builtin";
      d.size       = k;
      d.one        = k > 1 ? 1 : 0;
      for (TupleOdometer t(k, 2); t.valid(); t.next()) {
        auto const& x = t.tuple();
        d.add_table.push_back(ElementSet::singleton(static_cast<Element>((x[0] + x[1]) % k)));
        d.mul_table.push_back(static_cast<Element>((x[0] * x[1]) % k));
      }
      return d;
    }

    TableData krasner2() {
      TableData d;
      d.name       = "krasner2";
      d.provenance = "builtin";
      d.size       = 2;
      d.one        = 1;
      d.add_table  = {ElementSet::of({0}), ElementSet::of({1}), ElementSet::of({1}), ElementSet::of({0, 1})};
      d.mul_table  = {0, 0, 0, 1};
      return d;
    }

    // 0, + (1), - (2).
    TableData sign3() {
      TableData d;
      d.name       = "sign3";
      d.provenance = "builtin";
      d.size       = 3;
      d.one        = 1;
      d.add_table  = {ElementSet::of({0}),
                      ElementSet::of({1}),
                      ElementSet::of({2}),
                      ElementSet::of({1}),
                      ElementSet::of({1}),
                      ElementSet::of({0, 1, 2}),
                      ElementSet::of({2}),
                      ElementSet::of({0, 1, 2}),
                      ElementSet::of({2})};
      d.mul_table  = {0, 0, 0, 0, 1, 2, 0, 2, 1};
      return d;
    }

    std::size_t as_index(json const& v, char const* what) {
      if (!v.is_number_integer() || v.get<long long>() < 0) {
        throw InputError(std::string(what) + " must be a non-negative integer");
      }
      return v.get<std::size_t>();
    }

    json const& field(json const& obj, char const* key) {
      auto it = obj.find(key);
      if (it == obj.end()) {
        throw InputError(std::string("missing field '") + key + "'");
      }
      return *it;
    }

    // Walks a table nested `depth` levels deep, calling leaf() in
    // lexicographic order.
    void walk(json const& node, std::size_t depth, std::size_t size, std::string const& path,
              std::function<void(json const&, std::string const&)> const& leaf) {
      if (depth == 0) {
        leaf(node, path);
        return;
      }
      if (!node.is_array() || node.size() != size) {
        throw InputError("table level at " + (path.empty() ? std::string("top") : path) + " must be an array of "
                         + std::to_string(size) + " entries");
      }
      for (std::size_t i = 0; i < size; ++i) {
        walk(node[i], depth - 1, size, path + "[" + std::to_string(i) + "]", leaf);
      }
    }

    ElementSet parse_set(json const& v, std::size_t size, std::string const& where) {
      if (!v.is_array()) {
        throw InputError(where + ": expected an array of elements");
      }
      ElementSet out;
      for (auto const& e : v) {
        std::size_t const x = as_index(e, "element");
        if (x >= size) {
          throw InputError(where + ": element " + std::to_string(x) + " out of range");
        }
        out.insert(static_cast<Element>(x));
      }
      return out;
    }

    json parse_json(std::string_view text) {
      try {
        return json::parse(text.begin(), text.end());
      } catch (json::parse_error const& e) {
        throw InputError(std::string("malformed JSON: ") + e.what());
      }
    }

    // Applies the transposition (0 z) to every table.
    TableData swap_zero(TableData const& d, Element z) {
      auto p = [z](Element x) -> Element {
        return x == 0 ? z : (x == z ? 0 : x);
      };
      TableData out = d;
      out.one       = p(d.one);
      std::vector<Element> y;
      for (TupleOdometer t(d.size, d.m); t.valid(); t.next()) {
        y = t.tuple();
        for (auto& e : y) {
          e = p(e);
        }
        ElementSet v;
        for (Element e : d.add_table[tuple_rank(y, d.size)]) {
          v.insert(p(e));
        }
        out.add_table[tuple_rank(t.tuple(), d.size)] = v;
      }
      for (TupleOdometer t(d.size, d.n); t.valid(); t.next()) {
        y = t.tuple();
        for (auto& e : y) {
          e = p(e);
        }
        out.mul_table[tuple_rank(t.tuple(), d.size)] = p(d.mul_table[tuple_rank(y, d.size)]);
      }
      return out;
    }

    ordered_json nest(std::size_t depth, std::size_t size, std::size_t& rank,
                      std::function<ordered_json(std::size_t)> const& leaf) {
      if (depth == 0) {
        return leaf(rank++);
      }
      ordered_json arr = ordered_json::array();
      for (std::size_t i = 0; i < size; ++i) {
        arr.push_back(nest(depth - 1, size, rank, leaf));
      }
      return arr;
    }

    std::string read_file(std::string const& path) {
      std::ifstream in(path, std::ios::binary);
      if (!in) {
        throw InputError("cannot read '" + path + "'");
      }
      std::ostringstream ss;
      ss << in.rdbuf();
      return ss.str();
    }

    std::string table_key(TableData const& d) {
      std::string key = std::to_string(d.size) + ":" + std::to_string(d.m) + ":" + std::to_string(d.n)
                        + ":" + std::to_string(d.one) + ":";
      for (auto s : d.add_table) {
        key += std::to_string(s.mask()) + ",";
      }
      key += ";";
      for (auto e : d.mul_table) {
        key += std::to_string(e) + ",";
      }
      return key;
    }

  }  // namespace

  std::vector<std::string> const& builtin_names() {
    static std::vector<std::string> const names = {"Z2", "Z3", "Z4", "Z6", "Z8", "krasner2", "sign3"};
    return names;
  }

  HyperStructure builtin_structure(std::string_view name) {
    if (name == "krasner2") {
      return HyperStructure::create(krasner2());
    }
    if (name == "sign3") {
      return HyperStructure::create(sign3());
    }
    for (std::size_t k : {2, 3, 4, 6, 8}) {
      if (name == "Z" + std::to_string(k)) {
        return HyperStructure::create(zmod(k));
      }
    }
    throw InputError("unknown builtin structure '" + std::string(name) + "'");
  }

  TableData parse_tables(std::string_view text, std::vector<std::string>* warnings) {
    json const root = parse_json(text);
    if (!root.is_object()) {
      throw InputError("structure file must be a JSON object");
    }
    TableData d;
    d.name = field(root, "name").is_string() ? field(root, "name").get<std::string>()
                                             : throw InputError("name must be a string");
    d.m    = as_index(field(root, "m"), "m");
    d.n    = as_index(field(root, "n"), "n");
    d.size = as_index(field(root, "size"), "size");
    if (d.m < 2 || d.n < 2) {
      throw InputError("arities must be at least 2");
    }
    if (d.size == 0 || d.size > kMaxCarrier) {
      throw InputError("size must be in [1, 64]");
    }
    if (!checked_pow(d.size, std::max(d.m, d.n)) || *checked_pow(d.size, std::max(d.m, d.n)) > (1U << 24)) {
      throw InputError("tables too large");
    }
    std::size_t const zero = as_index(field(root, "zero"), "zero");
    std::size_t const one  = as_index(field(root, "one"), "one");
    if (zero >= d.size || one >= d.size) {
      throw InputError("zero/one index out of range");
    }
    d.one = static_cast<Element>(one);
    if (auto it = root.find("provenance"); it != root.end()) {
      if (!it->is_string()) {
        throw InputError("provenance must be a string");
      }
      d.provenance = it->get<std::string>();
    }
    walk(field(root, "fTable"), d.m, d.size, "fTable", [&](json const& leaf, std::string const& path) {
      ElementSet const v = parse_set(leaf, d.size, path);
      if (v.empty()) {
        throw InputError(path + ": empty hyperoperation value");
      }
      d.add_table.push_back(v);
    });
    walk(field(root, "gTable"), d.n, d.size, "gTable", [&](json const& leaf, std::string const& path) {
      std::size_t const x = as_index(leaf, "gTable entry");
      if (x >= d.size) {
        throw InputError(path + ": element " + std::to_string(x) + " out of range");
      }
      d.mul_table.push_back(static_cast<Element>(x));
    });
    if (zero != 0) {
      d = swap_zero(d, static_cast<Element>(zero));
      if (warnings != nullptr) {
        warnings->push_back("zero was element " + std::to_string(zero) + "; swapped with 0");
      }
    }
    return d;
  }

  HyperStructure parse_structure(std::string_view text, std::vector<std::string>* warnings) {
    return HyperStructure::create(parse_tables(text, warnings));
  }

  std::string serialize_structure(HyperStructure const& g) {
    TableData const& d = g.tables();
    ordered_json     root;
    root["name"]       = d.name;
    root["m"]          = d.m;
    root["n"]          = d.n;
    root["size"]       = d.size;
    root["zero"]       = 0;
    root["one"]        = d.one;
    std::size_t rank   = 0;
    root["fTable"]     = nest(d.m, d.size, rank, [&](std::size_t r) {
      ordered_json v = ordered_json::array();
      for (Element e : d.add_table[r]) {
        v.push_back(e);
      }
      return v;
    });
    rank               = 0;
    root["gTable"]     = nest(d.n, d.size, rank, [&](std::size_t r) { return ordered_json(d.mul_table[r]); });
    root["provenance"] = d.provenance;
    return root.dump(2) + "\n";
  }

  Expansion parse_expansion_file(std::string_view text, IdealLattice const& lattice) {
    json const root = parse_json(text);
    if (!root.is_object()) {
      throw InputError("expansion file must be a JSON object");
    }
    std::string label = "custom";
    if (auto it = root.find("label"); it != root.end() && it->is_string()) {
      label = it->get<std::string>();
    }
    json const& table = field(root, "table");
    if (!table.is_array()) {
      throw InputError("table must be an array");
    }
    std::size_t const size = lattice.carrier().size();
    std::vector<std::pair<ElementSet, ElementSet>> pairs;
    for (std::size_t i = 0; i < table.size(); ++i) {
      std::string const where = "table[" + std::to_string(i) + "]";
      if (!table[i].is_object()) {
        throw InputError(where + " must be an object");
      }
      pairs.emplace_back(parse_set(field(table[i], "ideal"), size, where),
                         parse_set(field(table[i], "image"), size, where));
    }
    return custom_expansion(lattice, pairs, label);
  }

  Expansion parse_expansion_spec(std::string_view spec, HyperStructure const& g, IdealLattice const& lattice) {
    if (spec.starts_with("residual:")) {
      ElementSet  b;
      std::string rest(spec.substr(9));
      std::stringstream ss(rest);
      std::string       item;
      while (std::getline(ss, item, ',')) {
        std::size_t pos = 0;
        unsigned long v = 0;
        try {
          v = std::stoul(item, &pos);
        } catch (std::exception const&) {
          pos = 0;
        }
        if (pos == 0 || pos != item.size() || v >= g.size()) {
          throw InputError("bad element '" + item + "' in '" + std::string(spec) + "'");
        }
        b.insert(static_cast<Element>(v));
      }
      if (!lattice.contains(b)) {
        throw InputError(b.to_string() + " is not a hyperideal");
      }
      return residual_expansion(g, lattice, b);
    }
    if (spec.starts_with("@")) {
      return parse_expansion_file(read_file(std::string(spec.substr(1))), lattice);
    }
    return builtin_expansion(g, lattice, spec);
  }

  CorpusSpec default_corpus_spec() {
    CorpusSpec spec;
    spec.seeds       = builtin_names();
    spec.max_size    = 12;
    spec.arities     = {{3, 2}, {2, 3}, {3, 3}};
    spec.operations  = {"product", "quotient", "localize", "deriveArity"};
    spec.derive_from = {"Z3", "Z4", "Z6", "krasner2", "sign3"};
    return spec;
  }

  CorpusSpec parse_corpus_spec(std::string_view text) {
    json const root = parse_json(text);
    if (!root.is_object()) {
      throw InputError("corpus spec must be a JSON object");
    }
    CorpusSpec spec;
    auto strings = [&](char const* key, std::vector<std::string>& out) {
      auto it = root.find(key);
      if (it == root.end()) {
        return;
      }
      if (!it->is_array()) {
        throw InputError(std::string(key) + " must be an array");
      }
      for (auto const& v : *it) {
        if (!v.is_string()) {
          throw InputError(std::string(key) + " entries must be strings");
        }
        out.push_back(v.get<std::string>());
      }
    };
    strings("seeds", spec.seeds);
    strings("operations", spec.operations);
    strings("deriveFrom", spec.derive_from);
    if (auto it = root.find("maxSize"); it != root.end()) {
      spec.max_size = as_index(*it, "maxSize");
    }
    if (auto it = root.find("maxLocalHost"); it != root.end()) {
      spec.max_local_host = as_index(*it, "maxLocalHost");
    }
    if (auto it = root.find("arities"); it != root.end()) {
      if (!it->is_array()) {
        throw InputError("arities must be an array");
      }
      for (auto const& a : *it) {
        if (!a.is_array() || a.size() != 2) {
          throw InputError("arities entries must be [m, n]");
        }
        spec.arities.emplace_back(as_index(a[0], "m"), as_index(a[1], "n"));
      }
    }
    for (auto const& op : spec.operations) {
      if (op != "product" && op != "quotient" && op != "localize" && op != "deriveArity") {
        throw InputError("unknown corpus operation '" + op + "'");
      }
    }
    if (spec.max_size > 16) {
      throw InputError("maxSize above 16");
    }
    return spec;
  }

  std::vector<SuiteItem> generate_corpus(CorpusSpec const& spec, std::vector<std::string>* warnings) {
    auto has = [&](char const* op) {
      return std::find(spec.operations.begin(), spec.operations.end(), op) != spec.operations.end();
    };
    auto warn = [&](std::string text) {
      if (warnings != nullptr) {
        warnings->push_back(std::move(text));
      }
    };

    std::vector<SuiteItem> items;
    std::set<std::string>  seen;
    auto add = [&](SuiteItem item) {
      if (item.structure->size() > spec.max_size) {
        return false;
      }
      if (!seen.insert(table_key(item.structure->tables())).second) {
        return false;
      }
      items.push_back(std::move(item));
      return true;
    };

    std::vector<StructurePtr> seeds;
    for (auto const& name : spec.seeds) {
      seeds.push_back(std::make_shared<HyperStructure const>(builtin_structure(name)));
      add({seeds.back(), std::nullopt, {}});
    }

    std::vector<StructurePtr> bases = seeds;
    if (has("product")) {
      for (std::size_t i = 0; i < seeds.size(); ++i) {
        for (std::size_t j = i; j < seeds.size(); ++j) {
          if (seeds[i]->size() * seeds[j]->size() > spec.max_size) {
            continue;
          }
          try {
            auto p = std::make_shared<HyperStructure const>(product(*seeds[i], *seeds[j]));
            if (add({p, std::make_pair(seeds[i], seeds[j]), {}})) {
              bases.push_back(p);
            }
          } catch (Error const& e) {
            warn("product " + seeds[i]->name() + "," + seeds[j]->name() + " skipped: " + e.what());
          }
        }
      }
    }

    if (has("quotient")) {
      for (auto const& b : bases) {
        IdealLattice const lat = enumerate_hyperideals(*b);
        for (ElementSet a : lat.ideals()) {
          try {
            add({quotient(b, a).structure, std::nullopt, {}});
          } catch (Error const& e) {
            warn("quotient " + b->name() + "/" + a.to_string() + " skipped: " + e.what());
          }
        }
      }
    }

    if (has("localize")) {
      for (auto const& b : bases) {
        if (b->size() > spec.max_local_host) {
          continue;
        }
        for (ElementSet::Mask mask = 1; mask <= b->carrier().mask(); ++mask) {
          ElementSet const s = ElementSet::from_mask(mask);
          if (!is_multiplicative_subset(*b, s)) {
            continue;
          }
          try {
            add({localize(b, s).structure, std::nullopt, {}});
          } catch (Error const& e) {
            warn("localization " + b->name() + " at " + s.to_string() + " skipped: " + e.what());
          }
        }
      }
    }

    if (has("deriveArity")) {
      for (auto const& seed : seeds) {
        if (!spec.derive_from.empty()
            && std::find(spec.derive_from.begin(), spec.derive_from.end(), seed->name()) == spec.derive_from.end()) {
          continue;
        }
        for (auto [m, n] : spec.arities) {
          try {
            add({std::make_shared<HyperStructure const>(derive_arity(*seed, m, n)), std::nullopt, {}});
          } catch (Error const& e) {
            warn("derivation " + seed->name() + " (" + std::to_string(m) + "," + std::to_string(n)
                 + ") skipped: " + e.what());
          }
        }
      }
    }
    return items;
  }

}  // namespace hyperring
