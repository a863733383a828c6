#include "hyperring/element_set.hpp"

namespace hyperring {

  std::vector<Element> ElementSet::elements() const {
    std::vector<Element> out;
    out.reserve(size());
    for (Element e : *this) {
      out.push_back(e);
    }
    return out;
  }

  std::string ElementSet::to_string() const {
    std::string out = "{";
    bool        first = true;
    for (Element e : *this) {
      if (!first) {
        out += ',';
      }
      out += std::to_string(e);
      first = false;
    }
    out += '}';
    return out;
  }

  std::string to_string(std::vector<Element> const& tuple) {
    std::string out = "(";
    for (std::size_t i = 0; i < tuple.size(); ++i) {
      if (i != 0) {
        out += ',';
      }
      out += std::to_string(tuple[i]);
    }
    out += ')';
    return out;
  }

}  // namespace hyperring
