#ifndef GUESSWORK_IO_HPP
#define GUESSWORK_IO_HPP

#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "guesswork/dist.hpp"
#include "guesswork/errors.hpp"
#include "guesswork/oracle.hpp"

namespace guesswork {

// All floats are emitted with 15 significant digits.
inline std::string format_g15(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.15g", x);
    return buf;
}

// Dist JSON form: {"alphabet": ["a","b","c"], "probs": [0.05,0.1,0.85]}.
// Parsing is strict: both keys required, nothing else allowed.
inline Dist dist_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw DomainError("distribution JSON must be an object");
    for (const auto& item : j.items())
        if (item.key() != "alphabet" && item.key() != "probs")
            throw DomainError("unknown key '" + item.key() + "' in distribution JSON");
    if (!j.contains("alphabet") || !j.contains("probs"))
        throw DomainError("distribution JSON needs 'alphabet' and 'probs'");
    std::vector<std::string> labels = j.at("alphabet").get<std::vector<std::string>>();
    std::vector<double> probs = j.at("probs").get<std::vector<double>>();
    return Dist(std::move(probs), Alphabet(std::move(labels)));
}

inline nlohmann::json dist_to_json(const Dist& d) {
    return nlohmann::json{{"alphabet", d.alphabet().labels()}, {"probs", d.probs()}};
}

inline Dist load_dist(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open distribution file '" + path + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw DomainError("bad JSON in '" + path + "': " + e.what());
    }
    return dist_from_json(j);
}

// "start:stop:count" with both endpoints included.
inline std::vector<double> parse_grid(const std::string& text) {
    double start = 0.0, stop = 0.0;
    int count = 0;
    char extra = 0;
    if (std::sscanf(text.c_str(), "%lf:%lf:%d%c", &start, &stop, &count, &extra) != 3)
        throw DomainError("grid must be start:stop:count, got '" + text + "'");
    if (count < 2) throw DomainError("grid needs at least 2 points");
    if (!(stop > start)) throw DomainError("grid stop must exceed start");
    return linspace(start, stop, count);
}

// comma-separated positive integers
inline std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(tok, &used);
        } catch (const std::exception&) {
            throw DomainError("bad integer '" + tok + "' in list");
        }
        if (used != tok.size() || v < 1)
            throw DomainError("bad integer '" + tok + "' in list");
        out.push_back(v);
    }
    return out;
}

// CSV export: one row per type, counts first (one column per symbol).
inline void write_guess_table_csv(std::ostream& os, const GuessTable& table) {
    const auto& labels = table.model().alphabet().labels();
    for (const auto& l : labels) os << "count_" << l << ",";
    os << "log_class_size,nu_score,log_guesswork,log_mu_prob\n";
    for (const auto& r : table.records()) {
        for (int c : r.counts) os << c << ",";
        os << format_g15(r.log_class_size) << "," << format_g15(r.nu_score) << ","
           << format_g15(r.log_guesswork) << "," << format_g15(r.log_mu_prob) << "\n";
    }
}

} // namespace guesswork

#endif // GUESSWORK_IO_HPP
