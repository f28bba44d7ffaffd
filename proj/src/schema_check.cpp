#include "seamlab/schema_check.hpp"

namespace seamlab {

namespace {

using nlohmann::json;

bool type_matches(const json& doc, const std::string& type) {
    if (type == "object") return doc.is_object();
    if (type == "array") return doc.is_array();
    if (type == "string") return doc.is_string();
    if (type == "boolean") return doc.is_boolean();
    if (type == "integer") return doc.is_number_integer();
    if (type == "number") return doc.is_number();
    return false; // unknown type names in the schema are authoring bugs
}

void check(const json& doc, const json& schema, const std::string& path,
           std::vector<std::string>& out) {
    if (schema.contains("type")) {
        const std::string type = schema["type"].get<std::string>();
        if (!type_matches(doc, type)) {
            out.push_back(path + ": expected " + type + ", got " +
                          doc.type_name());
            return; // structural checks below would only cascade
        }
    }
    if (schema.contains("enum")) {
        bool hit = false;
        for (const json& v : schema["enum"])
            if (doc == v) {
                hit = true;
                break;
            }
        if (!hit)
            out.push_back(path + ": value " + doc.dump() +
                          " not in enum " + schema["enum"].dump());
    }
    if (schema.contains("required") && doc.is_object()) {
        for (const json& name : schema["required"])
            if (!doc.contains(name.get<std::string>()))
                out.push_back(path + ": missing required member '" +
                              name.get<std::string>() + "'");
    }
    if (schema.contains("properties") && doc.is_object()) {
        for (const auto& [name, sub] : schema["properties"].items())
            if (doc.contains(name))
                check(doc[name], sub, path + "/" + name, out);
    }
    if (schema.contains("items") && doc.is_array()) {
        const json& sub = schema["items"];
        for (std::size_t i = 0; i < doc.size(); ++i)
            check(doc[i], sub, path + "/" + std::to_string(i), out);
    }
}

} // namespace

std::vector<std::string> schema_violations(const json& doc, const json& schema) {
    std::vector<std::string> out;
    check(doc, schema, "", out);
    return out;
}

} // namespace seamlab
