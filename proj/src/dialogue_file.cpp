#include "argtrace/dialogue_file.hpp"

#include "argtrace/error.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace argtrace {

using nlohmann::json;

namespace {

[[noreturn]] void schema_error(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

}  // namespace

DialogueFile parse_dialogue_file(std::string_view json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        schema_error(e.what());
    }
    if (!doc.is_object()) schema_error("top level must be an object");

    DialogueFile file;
    if (!doc.contains("arguments") || !doc["arguments"].is_array()) schema_error("'arguments' must be an array");
    for (const auto& entry : doc["arguments"]) {
        if (!entry.is_object() || !entry.contains("id") || !entry["id"].is_string()) {
            schema_error("each argument needs a string 'id'");
        }
        if (!entry.contains("rank") || !entry["rank"].is_number_unsigned()) {
            schema_error("argument '" + entry["id"].get<std::string>() + "' needs a nonnegative integer 'rank'");
        }
        const auto id = entry["id"].get<std::string>();
        file.graph.arguments.push_back(id);
        file.dialogue.push_back({id, entry["rank"].get<std::uint64_t>()});
    }
    if (doc.contains("attacks")) {
        if (!doc["attacks"].is_array()) schema_error("'attacks' must be an array");
        for (const auto& pair : doc["attacks"]) {
            if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() || !pair[1].is_string()) {
                schema_error("each attack must be [attacker, target]");
            }
            file.graph.attacks.emplace_back(pair[0].get<std::string>(), pair[1].get<std::string>());
        }
    }
    for (const char* key : {"title", "notes"}) {
        if (!doc.contains(key)) continue;
        if (!doc[key].is_string()) schema_error(std::string("'") + key + "' must be a string");
        (std::string_view(key) == "title" ? file.title : file.notes) = doc[key].get<std::string>();
    }
    return file;
}

DialogueFile load_dialogue_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::ParseError, "cannot read " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_dialogue_file(buffer.str());
}

std::string to_json(const DialogueFile& file) {
    json doc;
    if (file.title) doc["title"] = *file.title;
    if (file.notes) doc["notes"] = *file.notes;
    doc["arguments"] = json::array();
    for (const auto& entry : file.dialogue) doc["arguments"].push_back({{"id", entry.arg}, {"rank", entry.rank}});
    doc["attacks"] = json::array();
    for (const auto& [from, to] : file.graph.attacks) doc["attacks"].push_back({from, to});
    return doc.dump(2) + "\n";
}

}  // namespace argtrace
