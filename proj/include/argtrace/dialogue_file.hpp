#pragma once

#include "argtrace/aaf.hpp"
#include "argtrace/translate.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

namespace argtrace {

/// Input document:
///   { "title": "...", "notes": "...",
///     "arguments": [ {"id": "a", "rank": 0}, ... ],
///     "attacks": [ ["b", "a"], ... ] }
struct DialogueFile {
    ArgGraph graph;
    Dialogue dialogue;
    std::optional<std::string> title;
    std::optional<std::string> notes;
};

/// Throws ParseError on malformed JSON or schema violations. Graph-level
/// checks (cycles, unknown ids) are left to validate_graph.
DialogueFile parse_dialogue_file(std::string_view json_text);
DialogueFile load_dialogue_file(const std::filesystem::path& path);

std::string to_json(const DialogueFile& file);

}  // namespace argtrace
