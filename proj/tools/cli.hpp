#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace ect::cli {

using nlohmann::json;

extern const char* const kVersion;
const std::vector<std::string>& commands();

struct JobConfig {
    std::string command;
    long prec = 50;  // digits
    long budget = 4000;
    int threads = 1;
    std::uint64_t seed = 1;
};

struct RunResult {
    json doc;
    int exit_code = 0;
};

// Validates `input` against the command's schema, runs it and wraps the
// result (or the error) in the output envelope.
RunResult run(const JobConfig& config, const json& input);

// Schema documents, keyed "<command>.input", "<command>.output" and "error".
const json& schema(const std::string& name);

struct SchemaIssue {
    std::string path, message;
};
std::vector<SchemaIssue> validate(const json& doc, const json& schema);

// Deterministic serialization used for files and stdout.
std::string dump(const json& doc);

}  // namespace ect::cli
