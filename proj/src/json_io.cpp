#include "cfpo/json_io.hpp"

#include "cfpo/error.hpp"

namespace cfpo {

using nlohmann::json;

ColoredPoset parse_poset(const json& doc, bool allow_reserved_colors) {
  if (!doc.is_object() || !doc.contains("elements") || !doc["elements"].is_array())
    fail("MalformedInput", "expected an object with an \"elements\" array");
  for (const auto& [key, value] : doc.items())
    if (key != "elements" && key != "leq" && key != "colors")
      fail("MalformedInput", "unknown key \"" + key + "\" (expected elements, leq, colors)");
  std::vector<std::string> elements;
  for (const auto& e : doc["elements"]) {
    if (!e.is_string()) fail("MalformedInput", "element ids must be strings");
    elements.push_back(e.get<std::string>());
  }
  std::vector<std::pair<std::string, std::string>> rels;
  if (doc.contains("leq")) {
    if (!doc["leq"].is_array()) fail("MalformedInput", "\"leq\" must be an array of pairs");
    for (const auto& pair : doc["leq"]) {
      if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() || !pair[1].is_string())
        fail("MalformedInput", "\"leq\" entries must be [x, y] string pairs");
      rels.emplace_back(pair[0].get<std::string>(), pair[1].get<std::string>());
    }
  }
  ColoredPoset::Colors colors;
  if (doc.contains("colors")) {
    if (!doc["colors"].is_object()) fail("MalformedInput", "\"colors\" must be an object");
    for (const auto& [name, members] : doc["colors"].items()) {
      if (!members.is_array()) fail("MalformedInput", "colour classes must be arrays");
      for (const auto& m : members) {
        if (!m.is_string()) fail("MalformedInput", "colour members must be strings");
        colors[name].insert(m.get<std::string>());
      }
      colors.try_emplace(name);
    }
  }
  return ColoredPoset::build(std::move(elements), rels, colors, allow_reserved_colors);
}

ColoredPoset parse_poset_text(const std::string& text, bool allow_reserved_colors) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    fail("MalformedInput", e.what());
  }
  return parse_poset(doc, allow_reserved_colors);
}

json poset_to_json(const ColoredPoset& p) {
  json doc;
  doc["elements"] = p.elements();
  json leq = json::array();
  for (const auto& [x, y] : p.relation_pairs()) leq.push_back(json::array({x, y}));
  doc["leq"] = leq;
  json colors = json::object();
  for (const auto& [name, members] : p.colors()) colors[name] = members;
  doc["colors"] = colors;
  return doc;
}

json completion_to_json(const Completion& c) {
  json doc = poset_to_json(c.completed);
  doc["virtual"] = c.virtual_ids;
  return doc;
}

json treeify_to_json(const TreeifyResult& t) {
  json doc;
  doc["poset"] = poset_to_json(t.tree);
  doc["u"] = t.u;
  doc["root"] = t.root;
  doc["provenance"] = t.provenance;
  std::vector<std::string> virtuals;
  auto it = t.tree.colors().find("VIRTUAL");
  if (it != t.tree.colors().end()) virtuals.assign(it->second.begin(), it->second.end());
  doc["virtual"] = virtuals;
  return doc;
}

}  // namespace cfpo
