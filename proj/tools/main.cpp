#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>

#include "CLI11.hpp"
#include "cli.hpp"

using ect::cli::json;

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    int depth = 0;
    std::string cur;
    for (char c : s) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == sep && depth == 0) {
            out.push_back(cur);
            cur.clear();
        } else if (c != ' ') {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

json strings(const std::string& s, char sep = ',') {
    json a = json::array();
    for (const auto& p : split(s, sep)) a.push_back(p);
    return a;
}

json ints(const std::string& s) {
    json a = json::array();
    for (const auto& p : split(s, ',')) {
        try {
            a.push_back(std::stol(p));
        } catch (const std::exception&) {
            a.push_back(p);  // left for the schema to reject
        }
    }
    return a;
}

json rows(const std::string& s) {
    json a = json::array();
    for (const auto& r : split(s, ';')) a.push_back(strings(r));
    return a;
}

template <class T>
void env_default(const char* name, T& v) {
    if (const char* e = std::getenv(name)) {
        try {
            if constexpr (std::is_same_v<T, std::uint64_t>)
                v = std::stoull(e);
            else
                v = static_cast<T>(std::stol(e));
        } catch (const std::exception&) {
            std::cerr << "ignoring malformed " << name << "\n";
        }
    }
}

// Flag values as raw strings, converted into input fields after parsing.
struct Field {
    std::string key;
    std::string raw;
    json (*convert)(const std::string&);
};

}  // namespace

int main(int argc, char** argv) {
    ect::cli::JobConfig cfg;
    env_default("ECT_PREC", cfg.prec);
    env_default("ECT_BUDGET", cfg.budget);
    env_default("ECT_THREADS", cfg.threads);
    env_default("ECT_SEED", cfg.seed);

    CLI::App app{"Torsion, Tate-curve, height and period computations", "ect"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string in_file, out_file;
    app.add_option("--prec", cfg.prec, "working precision in decimal digits (env ECT_PREC)");
    app.add_option("--budget", cfg.budget, "work budget (env ECT_BUDGET)");
    app.add_option("--threads", cfg.threads, "worker threads (env ECT_THREADS)");
    app.add_option("--seed", cfg.seed, "seed for sampled checks (env ECT_SEED)");
    app.add_option("--out", out_file, "write the JSON document to FILE");
    app.add_option("--in", in_file, "read input fields from a JSON file");
    app.set_version_flag("--version", ect::cli::kVersion);

    auto as_string = +[](const std::string& s) { return json(s); };
    auto as_int = +[](const std::string& s) -> json {
        try {
            return std::stol(s);
        } catch (const std::exception&) {
            return s;
        }
    };
    auto as_strings = +[](const std::string& s) { return strings(s); };
    auto as_ints = +[](const std::string& s) { return ints(s); };
    auto as_rows = +[](const std::string& s) { return rows(s); };
    auto as_points = +[](const std::string& s) -> json { return s == "auto123" ? json(s) : strings(s, ';'); };

    std::map<std::string, std::vector<Field>> fields;
    auto sub = [&](const std::string& name, const std::string& help,
                   std::vector<std::tuple<std::string, std::string, json (*)(const std::string&)>> opts) {
        CLI::App* s = app.add_subcommand(name, help);
        auto& fs = fields[name];
        fs.reserve(opts.size());
        for (auto& [flag, key, conv] : opts) {
            fs.push_back({key, "", conv});
            s->add_option("--" + flag, fs.back().raw);
        }
    };
    sub("search", "solve the torsion-order system on a parameter surface",
        {{"spec", "spec", as_strings}, {"orders", "orders", as_ints}, {"nmax", "nmax", as_int}, {"fixed-b", "fixed_b", as_string}});
    sub("cmscan", "scan y^2 = x^3 + a x for torsion at x = 0, 1, -1", {{"nmax", "nmax", as_int}});
    sub("verify", "re-verify instance records from a search document", {});
    sub("periods", "period lattice of the Legendre curve", {{"lambda", "lambda", as_string}, {"samples", "samples", as_int}});
    sub("theta", "period coordinates of three points",
        {{"a", "a", as_string}, {"b", "b", as_string}, {"xs", "xs", as_strings}, {"N", "N", as_int}, {"embedding", "embedding", as_int}});
    sub("tate-a4a6", "Tate-curve coefficient series", {{"K", "K", as_int}});
    sub("tate-units", "units attached to singular reductions",
        {{"pair", "pair", as_ints}, {"triple", "triple", as_ints}, {"bound", "bound", as_int}});
    sub("ffheights", "bad places, S sets and heights over Q(t)",
        {{"curve", "curve", as_strings}, {"legendre", "legendre", as_string}, {"points", "points", as_points}});
    sub("siegel", "small relation for torsion coordinates",
        {{"N", "N", as_string}, {"R", "R", as_string}, {"coords", "coords", as_rows}});
    sub("count", "count points up to height T", {{"T", "T", as_string}, {"points", "points", as_rows}});

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }
    cfg.command = app.get_subcommands().front()->get_name();

    json input = json::object();
    if (!in_file.empty()) {
        std::ifstream f(in_file);
        try {
            input = json::parse(f);
        } catch (const json::exception& e) {
            std::cerr << "cannot read " << in_file << ": " << e.what() << "\n";
            return 2;
        }
    }
    for (const auto& f : fields[cfg.command])
        if (!f.raw.empty()) input[f.key] = f.convert(f.raw);

    auto res = ect::cli::run(cfg, input);
    std::string text = ect::cli::dump(res.doc);
    if (out_file.empty()) {
        std::cout << text;
    } else {
        std::ofstream(out_file) << text;
    }
    return res.exit_code;
}
