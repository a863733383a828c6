#include "hyperring/expansions.hpp"

#include <algorithm>

namespace hyperring {

  namespace {

    Expansion checked(Expansion e) {
      ValidationReport const report = validate_expansion(e);
      if (!report.valid()) {
        auto const& v = report.violations.front();
        throw ConstructionError("expansion " + e.label() + " is not a hyperideal expansion ("
                                + v.axiom + ": " + v.explanation + ")");
      }
      return e;
    }

  }  // namespace

  Expansion::Expansion(std::string             label,
                       std::vector<ElementSet> domain,
                       std::vector<ElementSet> image)
      : label_(std::move(label)), domain_(std::move(domain)), image_(std::move(image)) {
    if (domain_.empty() || domain_.size() != image_.size()) {
      throw InputError("expansion table must map every ideal of the lattice");
    }
  }

  ElementSet Expansion::operator()(ElementSet ideal) const {
    auto it = std::lower_bound(domain_.begin(), domain_.end(), ideal, CanonicalLess{});
    if (it == domain_.end() || *it != ideal) {
      throw DomainError(ideal.to_string() + " is not in the domain of " + label_);
    }
    return image_[static_cast<std::size_t>(it - domain_.begin())];
  }

  ValidationReport validate_expansion(Expansion const& e) {
    ValidationReport report;
    auto const&      dom = e.domain();
    auto const&      img = e.image();
    for (std::size_t i = 0; i < dom.size(); ++i) {
      if (std::find(dom.begin(), dom.end(), img[i]) == dom.end()) {
        report.violations.push_back({"image_not_ideal",
                                     {static_cast<Element>(i)},
                                     "image " + img[i].to_string() + " of " + dom[i].to_string()
                                         + " is not an ideal"});
        break;
      }
    }
    for (std::size_t i = 0; i < dom.size(); ++i) {
      if (!dom[i].subset_of(img[i])) {
        report.violations.push_back({"extensive",
                                     {static_cast<Element>(i)},
                                     dom[i].to_string() + " not within its image "
                                         + img[i].to_string()});
        break;
      }
    }
    bool found = false;
    for (std::size_t i = 0; i < dom.size() && !found; ++i) {
      for (std::size_t j = 0; j < dom.size(); ++j) {
        if (dom[i].subset_of(dom[j]) && !img[i].subset_of(img[j])) {
          report.violations.push_back({"monotone",
                                       {static_cast<Element>(i), static_cast<Element>(j)},
                                       dom[i].to_string() + " within " + dom[j].to_string()
                                           + " but images " + img[i].to_string() + ", "
                                           + img[j].to_string()});
          found = true;
          break;
        }
      }
    }
    return report;
  }

  Expansion builtin_expansion(HyperStructure const& g,
                              IdealLattice const&   lattice,
                              std::string_view      name) {
    auto const&             dom = lattice.ideals();
    std::vector<ElementSet> img(dom.size());
    for (std::size_t i = 0; i < dom.size(); ++i) {
      if (name == "delta0") {
        img[i] = dom[i];
      } else if (name == "delta1") {
        img[i] = lattice.radical(i);
      } else if (name == "deltaG") {
        img[i] = g.carrier();
      } else if (name == "deltaM") {
        ElementSet meet = g.carrier();
        for (ElementSet m : lattice.maximals()) {
          if (dom[i].subset_of(m)) {
            meet &= m;
          }
        }
        img[i] = meet;
      } else {
        throw InputError("unknown expansion '" + std::string(name) + "'");
      }
    }
    return checked(Expansion(std::string(name), dom, std::move(img)));
  }

  Expansion residual_expansion(HyperStructure const& g,
                               IdealLattice const&   lattice,
                               ElementSet            b) {
    lattice.require(b);
    auto const&             dom = lattice.ideals();
    std::vector<ElementSet> img(dom.size());
    for (std::size_t i = 0; i < dom.size(); ++i) {
      img[i] = residual_set(g, dom[i], b);
    }
    return checked(Expansion("residual" + b.to_string(), dom, std::move(img)));
  }

  Expansion custom_expansion(IdealLattice const&                                   lattice,
                             std::vector<std::pair<ElementSet, ElementSet>> const& pairs,
                             std::string                                           label) {
    auto const&                            dom = lattice.ideals();
    std::vector<std::optional<ElementSet>> img(dom.size());
    for (auto const& [from, to] : pairs) {
      std::size_t const i = lattice.require(from);
      if (img[i] && *img[i] != to) {
        throw InputError("expansion maps " + from.to_string() + " twice");
      }
      img[i] = to;
    }
    std::vector<ElementSet> table;
    for (std::size_t i = 0; i < dom.size(); ++i) {
      if (!img[i]) {
        throw InputError("expansion table misses ideal " + dom[i].to_string());
      }
      table.push_back(*img[i]);
    }
    return checked(Expansion(std::move(label), dom, std::move(table)));
  }

  Expansion compose_expansions(Expansion const& outer, Expansion const& inner) {
    if (outer.domain() != inner.domain()) {
      throw InputError("composed expansions must share a lattice");
    }
    std::vector<ElementSet> img;
    img.reserve(inner.domain().size());
    for (ElementSet b : inner.image()) {
      img.push_back(outer(b));
    }
    return checked(Expansion("composed(" + outer.label() + "," + inner.label() + ")",
                             inner.domain(),
                             std::move(img)));
  }

  Expansion quotient_expansion(Quotient const&     q,
                               Expansion const&    delta,
                               IdealLattice const& quotient_lattice) {
    auto const&             dom = quotient_lattice.ideals();
    std::vector<ElementSet> img;
    img.reserve(dom.size());
    for (ElementSet ideal : dom) {
      ElementSet const b = ideal_preimage(q.projection, ideal);
      if (!q.by.subset_of(b)) {
        throw ConstructionError("preimage of a quotient ideal misses the kernel");
      }
      ElementSet const image = ideal_image(q.projection, delta(b));
      if (!quotient_lattice.contains(image)) {
        throw ConstructionError(delta(b).to_string() + "/A is not an ideal of the quotient");
      }
      img.push_back(image);
    }
    return checked(Expansion(delta.label() + "_q", dom, std::move(img)));
  }

  Expansion localize_expansion(Localization const& loc,
                               std::size_t         host_size,
                               Expansion const&    delta,
                               IdealLattice const& localized_lattice) {
    auto const&                            dom = localized_lattice.ideals();
    std::vector<std::optional<ElementSet>> img(dom.size());
    std::vector<ElementSet>                source(dom.size());
    for (ElementSet a : delta.domain()) {
      ElementSet const ext = extend_to_fractions(loc, host_size, a);
      auto const       i   = localized_lattice.index_of(ext);
      if (!i) {
        throw ConstructionError("S^{-1}" + a.to_string() + " is not an ideal of the localization");
      }
      ElementSet const image = extend_to_fractions(loc, host_size, delta(a));
      if (!localized_lattice.contains(image)) {
        throw ConstructionError("S^{-1}" + delta(a).to_string()
                                + " is not an ideal of the localization");
      }
      if (img[*i] && *img[*i] != image) {
        throw ConstructionError("transport of " + delta.label() + " is ill-defined: "
                                + source[*i].to_string() + " and " + a.to_string()
                                + " share an extension but their images do not");
      }
      img[*i]    = image;
      source[*i] = a;
    }
    std::vector<ElementSet> table;
    for (std::size_t i = 0; i < dom.size(); ++i) {
      if (!img[i]) {
        throw ConstructionError(dom[i].to_string() + " of the localization is not an extension");
      }
      table.push_back(*img[i]);
    }
    return checked(Expansion(delta.label() + "_S", dom, std::move(table)));
  }

  std::vector<Expansion> standard_expansions(HyperStructure const& g,
                                             IdealLattice const&   lattice) {
    std::vector<Expansion> out;
    auto                   add = [&out](Expansion e) {
      for (auto const& existing : out) {
        if (existing.same_table(e)) {
          return;
        }
      }
      out.push_back(std::move(e));
    };
    for (char const* name : {"delta0", "delta1", "deltaG", "deltaM"}) {
      add(builtin_expansion(g, lattice, name));
    }
    for (std::size_t i = 1; i + 1 < lattice.size(); ++i) {
      add(residual_expansion(g, lattice, lattice[i]));
    }
    return out;
  }

}  // namespace hyperring
