// io.hpp -- JSON input/output for lattice sets, indexed families and
// staircase sequences, plus the text renderings shared by the CLI and tests.
// Serialization is canonical: fixed key order (ordered_json), two-space
// indent, trailing newline, so round-trips are byte-identical.  Counts and
// coefficients travel as decimal strings; coordinates and arities are plain
// JSON numbers.

#pragma once

#include "bigint.hpp"
#include "lattice.hpp"
#include "mu.hpp"
#include "polynomial.hpp"

#include <nlohmann/json.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace kolchin {

using json = nlohmann::ordered_json;

inline std::string canonical_dump(const json& j)
{
    return j.dump(2) + "\n";
}

// ---- parsing --------------------------------------------------------------

inline std::vector<multidegree> parse_points(const json& j, int m, const char* where)
{
    if (!j.is_array())
        throw std::runtime_error(std::string(where) + ": \"points\" must be an array");
    std::vector<multidegree> points;
    for (const auto& entry : j) {
        if (!entry.is_array() || static_cast<int>(entry.size()) != m)
            throw std::runtime_error(std::string(where) + ": each point must be an array of " +
                                     std::to_string(m) + " coordinates");
        multidegree p;
        for (const auto& coord : entry) {
            if (!coord.is_number_integer() || coord.get<long long>() < 0)
                throw std::runtime_error(std::string(where) + ": coordinates must be nonnegative integers");
            p.push_back(coord.get<int>());
        }
        points.push_back(std::move(p));
    }
    return points;
}

inline lattice_set parse_lattice_set(const json& j)
{
    if (!j.is_object() || !j.contains("m") || !j.contains("points"))
        throw std::runtime_error("lattice set: expected an object with \"m\" and \"points\"");
    if (!j.at("m").is_number_integer() || j.at("m").get<long long>() < 0)
        throw std::runtime_error("lattice set: \"m\" must be a nonnegative integer");
    int m = j.at("m").get<int>();
    return minimal_elements(m, parse_points(j.at("points"), m, "lattice set"));
}

inline indexed_family parse_indexed_family(const json& j)
{
    if (!j.is_object() || !j.contains("n") || !j.contains("sets"))
        throw std::runtime_error("family: expected an object with \"n\" and \"sets\"");
    if (!j.at("n").is_number_integer() || j.at("n").get<long long>() < 1)
        throw std::runtime_error("family: \"n\" must be a positive integer");
    if (!j.at("sets").is_array())
        throw std::runtime_error("family: \"sets\" must be an array");
    std::vector<lattice_set> sets;
    for (const auto& entry : j.at("sets"))
        sets.push_back(parse_lattice_set(entry));
    if (static_cast<int>(sets.size()) != j.at("n").get<int>())
        throw std::runtime_error("family: \"n\" does not match the number of sets");
    return make_family(std::move(sets));
}

inline bool looks_like_family(const json& j)
{
    return j.is_object() && j.contains("sets");
}

inline mu_sequence parse_mu_sequence(const json& j)
{
    if (!j.is_object() || !j.contains("m") || !j.contains("r0") || !j.contains("points"))
        throw std::runtime_error("mu sequence: expected an object with \"m\", \"r0\" and \"points\"");
    mu_sequence seq;
    seq.m = j.at("m").get<int>();
    seq.r0 = j.at("r0").get<long long>();
    seq.elems = parse_points(j.at("points"), seq.m, "mu sequence");
    return seq;
}

// ---- serialization --------------------------------------------------------

inline json points_to_json(const std::vector<multidegree>& points)
{
    json arr = json::array();
    for (const auto& p : points) {
        json row = json::array();
        for (int u : p)
            row.push_back(u);
        arr.push_back(std::move(row));
    }
    return arr;
}

inline json to_json(const lattice_set& E)
{
    json j;
    j["m"] = E.m;
    j["points"] = points_to_json(E.mins);
    return j;
}

inline json to_json(const indexed_family& f)
{
    json j;
    j["n"] = f.n;
    json sets = json::array();
    for (const auto& s : f.sets)
        sets.push_back(to_json(s));
    j["sets"] = std::move(sets);
    return j;
}

inline json to_json(const mu_sequence& seq)
{
    json j;
    j["m"] = seq.m;
    j["r0"] = seq.r0;
    j["ordered"] = true;
    j["points"] = points_to_json(seq.elems);
    return j;
}

inline json to_json(const numerical_polynomial& p)
{
    json j;
    j["expansion"] = to_expression_string(p);
    json coeffs = json::array();
    for (const bigint& c : p.coefficients())
        coeffs.push_back(c.str());
    j["coefficients"] = std::move(coeffs);
    if (p.is_zero()) {
        j["type"] = "undefined";
        j["typical_dimension"] = "undefined";
    } else {
        j["type"] = p.degree();
        j["typical_dimension"] = p.leading().str();
    }
    return j;
}

// One-line text rendering used by the CLI:
//   "constant 16; type 0; typical dim 16"
//   "3*C(t+2,2) + C(t+1,1) + 4; type 2; typical dim 3"
//   "constant 0; type undefined"
inline std::string render_polynomial_line(const numerical_polynomial& p)
{
    std::string line;
    if (p.degree() <= 0)
        line = "constant " + (p.is_zero() ? std::string("0") : p.coeff(0).str());
    else
        line = to_expression_string(p);
    if (p.is_zero())
        line += "; type undefined";
    else
        line += "; type " + std::to_string(p.degree()) + "; typical dim " + p.leading().str();
    return line;
}

} // namespace kolchin
