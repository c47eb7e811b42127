// kolpoly -- command-line front end: polynomials of lattice sets, staircase
// sequences and their extremal entries, dimension bounds, the bracket, the
// Ackermann ladder, and the verification suites.
//
// Exit codes: 0 success, 1 usage or parse error, 2 magnitude cap exceeded,
// 3 verification failure.

#include "kolchin/binomial.hpp"
#include "kolchin/bounds.hpp"
#include "kolchin/io.hpp"
#include "kolchin/lattice.hpp"
#include "kolchin/mu.hpp"
#include "kolchin/oracle.hpp"
#include "kolchin/suites.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

constexpr int exit_ok = 0;
constexpr int exit_usage = 1;
constexpr int exit_cap = 2;
constexpr int exit_verification = 3;

// Input can be a file path, a literal JSON object, or "-" (or nothing) for
// stdin.
std::string slurp_input(const std::string& spec)
{
    if (spec.empty() || spec == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    if (spec.front() == '{')
        return spec;
    std::ifstream file(spec);
    if (!file)
        throw std::runtime_error("cannot open input file: " + spec);
    std::ostringstream buffer;
    buffer << file.rdbuf();
    return buffer.str();
}

int run_kolchin(const std::string& input_spec, const std::string& format, bool compare)
{
    kolchin::json doc = kolchin::json::parse(slurp_input(input_spec));
    kolchin::numerical_polynomial poly;
    kolchin::json echo;
    std::vector<kolchin::lattice_set> components;
    if (kolchin::looks_like_family(doc)) {
        kolchin::indexed_family fam = kolchin::parse_indexed_family(doc);
        poly = kolchin::family_polynomial(fam);
        echo = kolchin::to_json(fam);
        components = fam.sets;
    } else {
        kolchin::lattice_set E = kolchin::parse_lattice_set(doc);
        poly = kolchin::kolchin_polynomial(E);
        echo = kolchin::to_json(E);
        components.push_back(std::move(E));
    }

    bool oracle_agrees = true;
    if (compare) {
        kolchin::numerical_polynomial fitted;
        for (const auto& component : components) {
            kolchin::fit_report fit = kolchin::fit_from_volumes(component);
            if (!fit.ok) {
                oracle_agrees = false;
                break;
            }
            fitted += fit.poly;
        }
        oracle_agrees = oracle_agrees && fitted == poly;
    }

    if (format == "json-like") {
        kolchin::json out = echo;
        out["polynomial"] = kolchin::to_json(poly);
        if (compare)
            out["count_fit_agrees"] = oracle_agrees;
        std::cout << kolchin::canonical_dump(out);
    } else {
        std::cout << kolchin::render_polynomial_line(poly) << "\n";
        if (compare)
            std::cout << (oracle_agrees ? "count-fit oracle agrees" : "count-fit oracle DISAGREES")
                      << "\n";
    }
    return oracle_agrees ? exit_ok : exit_verification;
}

int run_bound(long r, int m, int n, int tau, const std::string& format, bool compare,
              const kolchin::cap_settings& caps)
{
    kolchin::bound_result res =
        kolchin::typical_dim_bound(r, m, n, tau, kolchin::ext_convention::zero_at_one, caps);
    if (res.exceeds_cap()) {
        std::cerr << "exceeds cap: " << res.cap_expression << "\n";
        return exit_cap;
    }

    std::optional<kolchin::bigint> tail_sum;
    std::optional<kolchin::bigint> constant_term;
    std::string tail_refused, constant_refused;
    if (compare) {
        try {
            auto cb = kolchin::coefficient_bound(r, m, n, caps);
            tail_sum = cb.sums[static_cast<std::size_t>(m - tau)];
        } catch (const kolchin::cap_error& e) {
            tail_refused = e.expression();
        }
        if (tau == 0) {
            try {
                constant_term = kolchin::type_zero_alt_bound(r, m, n, caps);
            } catch (const kolchin::cap_error& e) {
                constant_refused = e.expression();
            }
        }
    }

    if (format == "json-like") {
        kolchin::json out;
        out["r"] = r;
        out["m"] = m;
        out["n"] = n;
        out["tau"] = tau;
        out["value"] = res.value->str();
        out["provenance"] = res.provenance;
        if (compare) {
            out["tail_sum_bound"] =
                tail_sum ? kolchin::json(tail_sum->str()) : kolchin::json(nullptr);
            if (tau == 0)
                out["constant_term_bound"] =
                    constant_term ? kolchin::json(constant_term->str()) : kolchin::json(nullptr);
        }
        std::cout << kolchin::canonical_dump(out);
    } else {
        std::cout << res.value->str();
        if (compare) {
            std::cout << "  tail-sum "
                      << (tail_sum ? tail_sum->str() : "over-cap(" + tail_refused + ")");
            if (tau == 0)
                std::cout << "  constant-term "
                          << (constant_term ? constant_term->str()
                                            : "over-cap(" + constant_refused + ")");
        }
        std::cout << "\n";
    }
    return exit_ok;
}

std::string listing_line(const std::vector<kolchin::multidegree>& elems)
{
    std::string line;
    for (std::size_t i = 0; i < elems.size(); ++i) {
        if (i)
            line += ",";
        line += "(";
        for (std::size_t k = 0; k < elems[i].size(); ++k) {
            if (k)
                line += ",";
            line += std::to_string(elems[i][k]);
        }
        line += ")";
    }
    return line;
}

int run_mu(long long r0, int m, int n, const std::string& format,
           const kolchin::cap_settings& caps)
{
    if (n < 1)
        throw std::invalid_argument("mu: the block count must be >= 1");

    if (n == 1) {
        kolchin::mu_sequence seq = kolchin::build_mu(r0, m, caps);
        kolchin::bigint vol = kolchin::vol_mu(seq);
        if (format == "json-like") {
            kolchin::json out = kolchin::to_json(seq);
            out["volume"] = vol.str();
            out["extremal"] = kolchin::json::array();
            for (int tau = m - 1; tau >= 0; --tau) {
                auto entry = kolchin::m_frak(static_cast<long>(r0), m, 1, tau, caps);
                kolchin::json row;
                row["tau"] = tau;
                row["entry"] = entry.value.str();
                row["position"] = entry.index;
                out["extremal"].push_back(row);
            }
            out["prefixes"] = kolchin::json::array();
            for (std::size_t ell = 1; ell <= seq.elems.size(); ++ell)
                out["prefixes"].push_back(kolchin::to_json(kolchin::omega_mu_prefix(seq, ell)));
            std::cout << kolchin::canonical_dump(out);
        } else {
            std::cout << listing_line(seq.elems) << "; Vol " << vol.str() << "\n";
            for (int tau = m - 1; tau >= 0; --tau) {
                auto entry = kolchin::m_frak(static_cast<long>(r0), m, 1, tau, caps);
                std::cout << "tau " << tau << ": entry " << entry.value.str() << " at position "
                          << entry.index << "\n";
            }
            for (std::size_t ell = 1; ell <= seq.elems.size(); ++ell)
                std::cout << "prefix " << ell << ": "
                          << kolchin::render_polynomial_line(kolchin::omega_mu_prefix(seq, ell))
                          << "\n";
        }
        return exit_ok;
    }

    kolchin::concatenated_mu con =
        kolchin::build_concatenated(static_cast<long>(r0), m, n, caps);
    kolchin::bigint total = 0;
    for (const auto& block : con.blocks)
        total += kolchin::vol_mu(block);
    if (format == "json-like") {
        kolchin::json out;
        out["r"] = con.r;
        out["m"] = con.m;
        out["n"] = con.n;
        out["blocks"] = kolchin::json::array();
        for (std::size_t j = 0; j < con.blocks.size(); ++j) {
            kolchin::json block = kolchin::to_json(con.blocks[j]);
            block["variable"] = con.variable_of_block[j];
            block["volume"] = kolchin::vol_mu(con.blocks[j]).str();
            out["blocks"].push_back(block);
        }
        out["total_volume"] = total.str();
        out["extremal"] = kolchin::json::array();
        for (int tau = m - 1; tau >= 0; --tau) {
            auto entry = kolchin::m_frak(static_cast<long>(r0), m, n, tau, caps);
            kolchin::json row;
            row["tau"] = tau;
            row["entry"] = entry.value.str();
            row["position"] = entry.index;
            out["extremal"].push_back(row);
        }
        std::cout << kolchin::canonical_dump(out);
    } else {
        for (std::size_t j = 0; j < con.blocks.size(); ++j)
            std::cout << "block " << (j + 1) << " (variable " << con.variable_of_block[j]
                      << "): " << listing_line(con.blocks[j].elems) << "; Vol "
                      << kolchin::vol_mu(con.blocks[j]).str() << "\n";
        std::cout << "total Vol " << total.str() << "\n";
        for (int tau = m - 1; tau >= 0; --tau) {
            auto entry = kolchin::m_frak(static_cast<long>(r0), m, n, tau, caps);
            std::cout << "tau " << tau << ": entry " << entry.value.str() << " at position "
                      << entry.index << "\n";
        }
    }
    return exit_ok;
}

int run_macaulay(const std::string& a_text, long d, const std::string& format)
{
    kolchin::bigint a(a_text);
    if (a < 0)
        throw std::invalid_argument("macaulay: a must be >= 0");
    if (d < 1)
        throw std::invalid_argument("macaulay: d must be >= 1");
    kolchin::bigint value = kolchin::macaulay_bracket(a, d);
    if (format == "json-like") {
        kolchin::json out;
        out["a"] = a.str();
        out["d"] = d;
        out["bracket"] = value.str();
        std::cout << kolchin::canonical_dump(out);
    } else {
        std::cout << value.str() << "\n";
    }
    return exit_ok;
}

int run_ackermann(unsigned long x, const std::string& y_text, const std::string& format,
                  const kolchin::cap_settings& caps)
{
    kolchin::bigint y(y_text);
    kolchin::bigint value = kolchin::ackermann(x, y, caps);
    if (format == "json-like") {
        kolchin::json out;
        out["x"] = x;
        out["y"] = y.str();
        out["value"] = value.str();
        std::cout << kolchin::canonical_dump(out);
    } else {
        std::cout << value.str() << "\n";
    }
    return exit_ok;
}

int run_verify(std::vector<std::string> names, std::uint64_t seed, const std::string& format)
{
    if (names.empty())
        names = kolchin::suite_names();
    for (const auto& name : names)
        if (std::find(kolchin::suite_names().begin(), kolchin::suite_names().end(), name) ==
            kolchin::suite_names().end())
            throw std::invalid_argument("unknown verification suite: " + name);

    std::vector<kolchin::suite_report> reports;
    reports.reserve(names.size());
    for (const auto& name : names)
        reports.push_back(kolchin::run_suite(name, seed));

    bool all_pass = true;
    for (const auto& rep : reports)
        all_pass = all_pass && rep.passed();

    if (format == "json-like") {
        kolchin::json out;
        out["suites"] = kolchin::json::array();
        for (const auto& rep : reports) {
            kolchin::json j;
            j["name"] = rep.name;
            j["checked"] = rep.checked;
            j["violations"] = rep.violations;
            if (!rep.first_violation.empty())
                j["first_violation"] = rep.first_violation;
            j["notes"] = rep.notes;
            out["suites"].push_back(j);
        }
        out["passed"] = all_pass;
        std::cout << kolchin::canonical_dump(out);
    } else {
        for (const auto& rep : reports) {
            std::cout << "suite " << rep.name << ": " << (rep.passed() ? "pass" : "FAIL")
                      << "; checked " << rep.checked << "; violations " << rep.violations << "\n";
            if (!rep.first_violation.empty())
                std::cout << "  first violation: " << rep.first_violation << "\n";
            for (const auto& note : rep.notes)
                std::cout << "  note: " << note << "\n";
        }
    }
    return all_pass ? exit_ok : exit_verification;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Kolchin polynomials of lattice sets, staircase sequences, and dimension bounds"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "text";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json-like"}));
    unsigned long cap_bits = kolchin::default_caps().max_bits;
    app.add_option("--cap-bits", cap_bits, "bit cap for intermediate integers")
        ->envname("KOLPOLY_CAP_BITS");
    std::uint64_t seed = 0;
    app.add_option("--seed", seed, "seed offset for the randomized verification sweeps");
    bool compare = false;
    app.add_flag("--compare", compare, "print independent cross-checks next to the result");

    auto* sc_kolchin =
        app.add_subcommand("kolchin", "polynomial of a lattice set or an indexed family");
    std::string kolchin_input;
    sc_kolchin->add_option("input", kolchin_input,
                           "document path, literal JSON object, or - for stdin");

    auto* sc_bound = app.add_subcommand("bound", "typical differential dimension bound");
    long b_r = 0;
    int b_m = 1, b_n = 1, b_tau = 0;
    sc_bound->add_option("r", b_r, "system order")->required();
    sc_bound->add_option("m", b_m, "number of derivations")->required();
    sc_bound->add_option("n", b_n, "number of variables")->required();
    sc_bound->add_option("tau", b_tau, "differential type")->required();

    auto* sc_mu = app.add_subcommand(
        "mu", "staircase sequence: listing, volume, extremal entries, prefix polynomials");
    long long mu_r0 = 0;
    int mu_m = 1, mu_n = 1;
    sc_mu->add_option("r0", mu_r0, "starting order")->required();
    sc_mu->add_option("m", mu_m, "number of coordinates")->required();
    sc_mu->add_option("n", mu_n, "optional block count for concatenation");

    auto* sc_macaulay = app.add_subcommand("macaulay", "bracket value a^<d>");
    std::string mac_a;
    long mac_d = 1;
    sc_macaulay->add_option("a", mac_a, "nonnegative integer, decimal")->required();
    sc_macaulay->add_option("d", mac_d, "level, >= 1")->required();

    auto* sc_ackermann = app.add_subcommand("ackermann", "two-argument Ackermann value");
    unsigned long ack_x = 0;
    std::string ack_y;
    sc_ackermann->add_option("x", ack_x, "first argument")->required();
    sc_ackermann->add_option("y", ack_y, "second argument, decimal")->required();

    auto* sc_verify = app.add_subcommand("verify", "run verification suites");
    std::vector<std::string> verify_names;
    sc_verify->add_option("suites", verify_names, "suite names (default: all)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    kolchin::cap_settings caps = kolchin::default_caps();
    caps.max_bits = cap_bits;

    try {
        if (sc_kolchin->parsed())
            return run_kolchin(kolchin_input, format, compare);
        if (sc_bound->parsed())
            return run_bound(b_r, b_m, b_n, b_tau, format, compare, caps);
        if (sc_mu->parsed())
            return run_mu(mu_r0, mu_m, mu_n, format, caps);
        if (sc_macaulay->parsed())
            return run_macaulay(mac_a, mac_d, format);
        if (sc_ackermann->parsed())
            return run_ackermann(ack_x, ack_y, format, caps);
        if (sc_verify->parsed())
            return run_verify(verify_names, seed, format);
    } catch (const kolchin::cap_error& e) {
        std::cerr << "exceeds cap: " << e.expression() << " -- " << e.what() << "\n";
        return exit_cap;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}
