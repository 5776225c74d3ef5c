#include "cfpo/dot.hpp"

#include <sstream>

namespace cfpo {

namespace {

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string emit_dot(const ColoredPoset& p, const std::set<std::string>& u,
                     const std::set<std::string>& virtuals) {
  std::ostringstream os;
  os << "digraph poset {\n  rankdir=BT;\n  node [shape=ellipse];\n";
  for (int i = 0; i < p.size(); ++i) {
    const std::string& id = p.id_of(i);
    os << "  " << quote(id);
    std::vector<std::string> attrs;
    if (u.count(id)) attrs.push_back("style=filled, fillcolor=lightgrey");
    if (virtuals.count(id)) attrs.push_back("style=dashed");
    auto cols = p.colors_of(i);
    cols.erase("U");
    cols.erase("VIRTUAL");
    if (!cols.empty()) {
      std::string label = id + "\\n";
      for (const auto& c : cols) label += c + " ";
      attrs.push_back("label=" + quote(label));
    }
    if (!attrs.empty()) {
      os << " [";
      for (size_t k = 0; k < attrs.size(); ++k) os << (k ? ", " : "") << attrs[k];
      os << "]";
    }
    os << ";\n";
  }
  for (auto [lo, hi] : covers(p).edges)
    os << "  " << quote(p.id_of(lo)) << " -> " << quote(p.id_of(hi)) << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace cfpo
