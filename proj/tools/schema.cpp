#include <regex>

#include "cli.hpp"

namespace ect::cli {

namespace {

bool has_type(const json& v, const std::string& t) {
    if (t == "object") return v.is_object();
    if (t == "array") return v.is_array();
    if (t == "string") return v.is_string();
    if (t == "integer") return v.is_number_integer();
    if (t == "number") return v.is_number();
    if (t == "boolean") return v.is_boolean();
    if (t == "null") return v.is_null();
    return false;
}

void check(const json& v, const json& s, const std::string& path, std::vector<SchemaIssue>& out) {
    auto issue = [&](const std::string& m) { out.push_back({path.empty() ? "/" : path, m}); };
    if (s.contains("type")) {
        bool ok = false;
        if (s["type"].is_array()) {
            for (const auto& t : s["type"]) ok = ok || has_type(v, t.get<std::string>());
        } else {
            ok = has_type(v, s["type"].get<std::string>());
        }
        if (!ok) {
            issue("expected type " + s["type"].dump());
            return;
        }
    }
    if (s.contains("const") && v != s["const"]) issue("expected " + s["const"].dump());
    if (s.contains("enum")) {
        bool found = false;
        for (const auto& e : s["enum"]) found = found || e == v;
        if (!found) issue("value not in " + s["enum"].dump());
    }
    if (v.is_number()) {
        if (s.contains("minimum") && v.get<double>() < s["minimum"].get<double>())
            issue("below minimum " + s["minimum"].dump());
        if (s.contains("maximum") && v.get<double>() > s["maximum"].get<double>())
            issue("above maximum " + s["maximum"].dump());
    }
    if (v.is_string() && s.contains("minLength") && v.get<std::string>().size() < s["minLength"].get<size_t>())
        issue("string too short");
    if (v.is_string() && s.contains("pattern")) {
        std::regex re(s["pattern"].get<std::string>());
        if (!std::regex_search(v.get<std::string>(), re)) issue("does not match " + s["pattern"].dump());
    }
    if (v.is_array()) {
        if (s.contains("minItems") && v.size() < s["minItems"].get<size_t>()) issue("too few items");
        if (s.contains("maxItems") && v.size() > s["maxItems"].get<size_t>()) issue("too many items");
        if (s.contains("items"))
            for (size_t i = 0; i < v.size(); ++i) check(v[i], s["items"], path + "/" + std::to_string(i), out);
    }
    if (v.is_object()) {
        if (s.contains("required"))
            for (const auto& r : s["required"])
                if (!v.contains(r.get<std::string>())) out.push_back({path + "/" + r.get<std::string>(), "missing"});
        const json props = s.value("properties", json::object());
        for (auto it = v.begin(); it != v.end(); ++it) {
            std::string p = path + "/" + it.key();
            if (props.contains(it.key())) {
                check(it.value(), props[it.key()], p, out);
            } else if (s.contains("additionalProperties")) {
                const json& ap = s["additionalProperties"];
                if (ap.is_boolean() && !ap.get<bool>())
                    out.push_back({p, "unexpected field"});
                else if (ap.is_object())
                    check(it.value(), ap, p, out);
            }
        }
    }
    if (s.contains("anyOf")) {
        bool any = false;
        for (const auto& alt : s["anyOf"]) {
            std::vector<SchemaIssue> sub;
            check(v, alt, path, sub);
            if (sub.empty()) any = true;
        }
        if (!any) issue("matches none of the allowed forms");
    }
    if (s.contains("$ref")) {
        // only references into the shared definitions document are used
        std::string ref = s["$ref"].get<std::string>();
        const std::string prefix = "defs.json#/";
        if (ref.rfind(prefix, 0) != 0) {
            issue("unsupported reference " + ref);
            return;
        }
        check(v, schema("defs")[ref.substr(prefix.size())], path, out);
    }
}

}  // namespace

std::vector<SchemaIssue> validate(const json& doc, const json& s) {
    std::vector<SchemaIssue> out;
    check(doc, s, "", out);
    return out;
}

}  // namespace ect::cli
