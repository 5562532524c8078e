#pragma once

#include "cil/game_model.hpp"

#include <json.hpp>

#include <filesystem>
#include <string>

namespace cil
{

using Json = nlohmann::ordered_json;

// Model files are JSON objects with the keys states, agents, actions,
// indist, rules and valuation. States, agents and actions may be written as
// strings or integers. Throws LoadError on malformed documents; semantic
// checks are left to validate_model.
[[nodiscard]] GameModel model_from_json( const Json& document );
[[nodiscard]] GameModel parse_model( const std::string& text );
[[nodiscard]] GameModel load_model( const std::filesystem::path& path );

[[nodiscard]] Json model_to_json( const GameModel& model );
[[nodiscard]] Json assignment_to_json( const ActionAssignment& assignment );

[[nodiscard]] std::string read_text_file( const std::filesystem::path& path );

} // namespace cil
