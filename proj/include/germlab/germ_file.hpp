#ifndef GERMLAB_GERM_FILE_HPP
#define GERMLAB_GERM_FILE_HPP

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include <germlab/jet.hpp>
#include <germlab/parser.hpp>
#include <germlab/rational.hpp>

namespace germlab
{

// {"n":1,"p":2,"order":6,"components":["x1^2","x1^3"]} plus optional
// "name", "note" and "exact_germ".
struct germ_file {
    std::string name;
    std::string note;
    unsigned n = 0;
    unsigned p = 0;
    unsigned order = 0;
    std::vector<std::string> components;
    bool exact_germ = false;
    germ_jet germ;
};

namespace detail
{

inline unsigned json_unsigned(const nlohmann::json &j, const char *key, const std::string &src)
{
    if (!j.contains(key)) {
        throw user_error(src + ": missing field \"" + key + "\"");
    }
    const auto &v = j.at(key);
    if (!v.is_number_integer() || v.get<long long>() < 0) {
        throw user_error(src + ": field \"" + key + "\" must be a non-negative integer");
    }
    return v.get<unsigned>();
}

} // namespace detail

inline germ_file parse_germ_json(const nlohmann::json &j, const std::string &src = "germ")
{
    if (!j.is_object()) {
        throw user_error(src + ": expected a JSON object");
    }
    germ_file g;
    g.n = detail::json_unsigned(j, "n", src);
    g.p = detail::json_unsigned(j, "p", src);
    g.order = detail::json_unsigned(j, "order", src);
    if (g.n < 1 || g.p < 1 || g.order < 1) {
        throw user_error(src + ": n, p and order must be positive");
    }
    if (g.n > 8 || g.p > 8) {
        throw user_error(src + ": n and p are limited to 8");
    }
    if (!j.contains("components") || !j.at("components").is_array()) {
        throw user_error(src + ": \"components\" must be an array of strings");
    }
    for (const auto &c : j.at("components")) {
        if (!c.is_string()) {
            throw user_error(src + ": \"components\" must be an array of strings");
        }
        g.components.push_back(c.get<std::string>());
    }
    if (g.components.size() != g.p) {
        throw user_error(src + ": expected " + std::to_string(g.p) + " components, got "
                         + std::to_string(g.components.size()));
    }
    g.name = j.value("name", std::string{});
    g.note = j.value("note", std::string{});
    g.exact_germ = j.value("exact_germ", false);

    std::vector<jet_poly> comps;
    for (std::size_t i = 0; i < g.components.size(); ++i) {
        try {
            comps.push_back(parse_jet(g.components[i], g.n, g.order));
        } catch (const parse_error &e) {
            throw user_error(src + ": component " + std::to_string(i + 1) + ": " + e.what());
        }
        if (!detail::is_zero(comps.back().constant_term())) {
            throw user_error(src + ": component " + std::to_string(i + 1) + " has a nonzero constant term");
        }
    }
    g.germ = germ_jet(std::move(comps));
    return g;
}

inline germ_file parse_germ_text(const std::string &text, const std::string &src = "germ")
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
        // e.what() carries "line L, column C".
        throw user_error(src + ": " + e.what());
    }
    return parse_germ_json(j, src);
}

inline germ_file load_germ_file(const std::filesystem::path &path)
{
    std::ifstream in(path);
    if (!in) {
        throw user_error("cannot open germ file " + path.string());
    }
    std::stringstream ss;
    ss << in.rdbuf();
    auto g = parse_germ_text(ss.str(), path.string());
    if (g.name.empty()) {
        g.name = path.stem().string();
    }
    return g;
}

inline std::filesystem::path fixture_dir()
{
#ifdef GERMLAB_FIXTURE_DIR
    return GERMLAB_FIXTURE_DIR;
#else
    return "fixtures";
#endif
}

// All *.json germs in dir, sorted by file name.
inline std::vector<germ_file> load_fixtures(const std::filesystem::path &dir = fixture_dir())
{
    if (!std::filesystem::is_directory(dir)) {
        throw user_error("fixture directory not found: " + dir.string());
    }
    std::vector<std::filesystem::path> paths;
    for (const auto &e : std::filesystem::directory_iterator(dir)) {
        if (e.is_regular_file() && e.path().extension() == ".json") {
            paths.push_back(e.path());
        }
    }
    std::sort(paths.begin(), paths.end());
    std::vector<germ_file> out;
    for (const auto &p : paths) {
        out.push_back(load_germ_file(p));
    }
    return out;
}

// Germ jet of order at least k+1. A shorter jet is padded with zeros, which is
// only right for exact polynomial germs; padded reports that this happened.
inline germ_jet germ_for_order(const germ_file &g, unsigned k, bool *padded = nullptr)
{
    const bool pad = g.order < k + 1;
    if (padded) {
        *padded = pad;
    }
    return pad ? g.germ.with_order(k + 1) : g.germ;
}

} // namespace germlab

#endif
