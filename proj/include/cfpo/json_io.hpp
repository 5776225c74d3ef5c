#ifndef CFPO_JSON_IO_HPP
#define CFPO_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "cfpo/completion.hpp"
#include "cfpo/poset.hpp"
#include "cfpo/treeify.hpp"

namespace cfpo {

// {"elements": [...], "leq": [[x,y],...], "colors": {"name": [...]}}.
// Malformed documents raise Error("MalformedInput"); reserved colour names
// are rejected unless allowed (the interpret verb consumes "U").
ColoredPoset parse_poset(const nlohmann::json& doc, bool allow_reserved_colors = false);
ColoredPoset parse_poset_text(const std::string& text, bool allow_reserved_colors = false);

nlohmann::json poset_to_json(const ColoredPoset& p);
nlohmann::json completion_to_json(const Completion& c);
nlohmann::json treeify_to_json(const TreeifyResult& t);

}  // namespace cfpo

#endif
