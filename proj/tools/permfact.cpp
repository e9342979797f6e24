// permfact command line front end.
//
// Every numeric token printed is exact: integers in decimal, rationals as
// "p/q". For a fixed query and format the bytes on stdout are identical
// across runs, worker counts and cache states; diagnostics go to stderr.
//
// Exit codes: 0 success, 1 mathematical report failure (routes disagree, a
// scan flag is false, a triple is invalid, a budget ran out), 2 usage error.

#include <exception>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "permfact/brute.hpp"
#include "permfact/cache.hpp"
#include "permfact/charalg.hpp"
#include "permfact/hurwitz.hpp"
#include "permfact/jack.hpp"
#include "permfact/maps.hpp"
#include "permfact/numbers.hpp"
#include "permfact/partition.hpp"
#include "permfact/permutation.hpp"
#include "permfact/series.hpp"

namespace {

using namespace permfact;
using ordered_json = nlohmann::ordered_json;

struct Route {
    std::string name;
    std::string value;
};

// Common payload every subcommand fills in; emit() renders it in the three
// formats. Tables (columns + rows) are optional and drive the csv form when
// present; notes are human-facing lines for the text form.
struct Output {
    ordered_json query = ordered_json::object();
    std::string value;
    std::vector<Route> routes;
    bool agreement = true;
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> notes;
};

std::string csv_cell(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

void emit_json(const Output& out, std::ostream& os) {
    ordered_json j;
    j["query"] = out.query;
    j["value"] = out.value;
    ordered_json routes = ordered_json::array();
    for (const auto& r : out.routes) routes.push_back({{"name", r.name}, {"value", r.value}});
    j["routes"] = routes;
    j["agreement"] = out.agreement;
    if (!out.columns.empty()) {
        j["columns"] = out.columns;
        ordered_json rows = ordered_json::array();
        for (const auto& row : out.rows) rows.push_back(row);
        j["rows"] = rows;
    }
    if (!out.notes.empty()) j["notes"] = out.notes;
    os << j.dump(2) << "\n";
}

void emit_csv(const Output& out, std::ostream& os) {
    if (!out.columns.empty()) {
        for (size_t i = 0; i < out.columns.size(); ++i)
            os << (i ? "," : "") << csv_cell(out.columns[i]);
        os << "\n";
        for (const auto& row : out.rows) {
            for (size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_cell(row[i]);
            os << "\n";
        }
        return;
    }
    os << "name,value\n";
    os << "value," << csv_cell(out.value) << "\n";
    for (const auto& r : out.routes) os << csv_cell(r.name) << "," << csv_cell(r.value) << "\n";
    os << "agreement," << (out.agreement ? "true" : "false") << "\n";
}

void emit_text(const Output& out, std::ostream& os) {
    os << "value: " << out.value << "\n";
    for (const auto& r : out.routes) os << "route " << r.name << ": " << r.value << "\n";
    if (out.routes.size() > 1)
        os << (out.agreement ? "routes agree" : "ROUTES DISAGREE") << "\n";
    if (!out.columns.empty()) {
        std::vector<size_t> width(out.columns.size());
        for (size_t i = 0; i < out.columns.size(); ++i) width[i] = out.columns[i].size();
        for (const auto& row : out.rows)
            for (size_t i = 0; i < row.size() && i < width.size(); ++i)
                width[i] = std::max(width[i], row[i].size());
        auto line = [&](const std::vector<std::string>& cells) {
            for (size_t i = 0; i < cells.size(); ++i) {
                os << cells[i];
                if (i + 1 < cells.size())
                    os << std::string(width[i] - cells[i].size() + 2, ' ');
            }
            os << "\n";
        };
        line(out.columns);
        for (const auto& row : out.rows) line(row);
    }
    for (const auto& n : out.notes) os << n << "\n";
}

void emit(const Output& out, const std::string& format) {
    if (format == "json")
        emit_json(out, std::cout);
    else if (format == "csv")
        emit_csv(out, std::cout);
    else
        emit_text(out, std::cout);
}

Int rat_to_int(const Rat& r) {
    if (!is_integer(r)) throw std::logic_error("expected an integer, got " + to_string(r));
    return numerator(r);
}

bool routes_agree(const std::vector<Route>& routes) {
    for (size_t i = 1; i < routes.size(); ++i)
        if (routes[i].value != routes[0].value) return false;
    return true;
}

std::string format_monomial(const std::vector<int>& exps, const std::vector<std::string>& vars) {
    std::string mono;
    for (size_t i = 0; i < exps.size() && i < vars.size(); ++i) {
        if (exps[i] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += vars[i];
        if (exps[i] > 1) mono += "^" + std::to_string(exps[i]);
    }
    return mono;
}

std::string format_lattice_fit(const std::map<std::vector<int>, Rat>& fit,
                               const std::vector<std::string>& vars) {
    if (fit.empty()) return "0";
    std::string out;
    for (const auto& [exps, c] : fit) {
        std::string mono = format_monomial(exps, vars);
        std::string term;
        if (mono.empty())
            term = to_string(c);
        else if (c == Rat(1))
            term = mono;
        else if (c == Rat(-1))
            term = "-" + mono;
        else
            term = to_string(c) + "*" + mono;
        if (out.empty())
            out = term;
        else if (term[0] == '-')
            out += " - " + term.substr(1);
        else
            out += " + " + term;
    }
    return out;
}

// Options shared across subcommands.
struct Common {
    std::string format = "text";
    std::string cache_dir;
    int workers = 1;
    std::uint64_t budget = 200'000'000;

    brute::SearchBudget search_budget() const { return {budget, workers}; }
};

std::vector<Partition> parse_partition_list(const std::vector<std::string>& texts) {
    std::vector<Partition> out;
    out.reserve(texts.size());
    for (const auto& t : texts) out.push_back(parse_partition(t));
    return out;
}

int run_count_fact(const Common& common, const std::string& target_text,
                   const std::vector<std::string>& factor_texts, bool brute_check) {
    charalg::FactorizationSpec spec{parse_partition(target_text),
                                    parse_partition_list(factor_texts)};
    spec.validate();

    Output out;
    out.query["command"] = "count-fact";
    out.query["target"] = format_partition(spec.target);
    ordered_json factors = ordered_json::array();
    for (const auto& f : spec.factors) factors.push_back(format_partition(f));
    out.query["factors"] = factors;

    out.routes.push_back({"class-algebra", to_string(charalg::factorization_count(spec))});

    // independent route: multiply class sums through the idempotent basis
    int n = spec.weight();
    charalg::ClassVector acc =
        charalg::ClassVector::class_sum(Partition(std::vector<int>(n, 1)));
    for (const auto& f : spec.factors)
        acc = acc.multiplied_by(charalg::ClassVector::class_sum(f));
    Rat coeff;
    if (auto it = acc.coords.find(spec.target); it != acc.coords.end()) coeff = it->second;
    out.routes.push_back({"idempotent-basis", to_string(rat_to_int(coeff * Rat(class_size(spec.target))))});

    if (brute_check)
        out.routes.push_back({"brute-force", to_string(brute::enumerate_factorizations(
                                                 spec, std::nullopt, common.search_budget()))});

    out.value = out.routes.front().value;
    out.agreement = routes_agree(out.routes);
    emit(out, common.format);
    return out.agreement ? 0 : 1;
}

int run_count_transitive(const Common& common, const std::string& target_text,
                         const std::vector<std::string>& factor_texts, bool brute_check) {
    charalg::FactorizationSpec spec{parse_partition(target_text),
                                    parse_partition_list(factor_texts)};
    spec.validate();

    Output out;
    out.query["command"] = "count-transitive";
    out.query["target"] = format_partition(spec.target);
    ordered_json factors = ordered_json::array();
    for (const auto& f : spec.factors) factors.push_back(format_partition(f));
    out.query["factors"] = factors;

    out.routes.push_back(
        {"inclusion-exclusion", to_string(charalg::transitive_factorization_count(spec))});
    if (brute_check)
        out.routes.push_back(
            {"brute-force", to_string(brute::enumerate_transitive_factorizations(
                                spec, std::nullopt, common.search_budget()))});

    out.value = out.routes.front().value;
    out.agreement = routes_agree(out.routes);
    emit(out, common.format);
    return out.agreement ? 0 : 1;
}

int run_maps(const Common& common, const std::string& vertices_text,
             const std::string& faces_text, const std::string& edges_text, bool brute_check) {
    Partition lambda = parse_partition(vertices_text);
    Partition mu = parse_partition(faces_text);
    int n = lambda.weight();
    Partition tau;
    if (!edges_text.empty()) {
        tau = parse_partition(edges_text);
    } else {
        if (n % 2 != 0)
            throw std::invalid_argument(
                "plain maps need an even symbol count; pass --edges for hypermaps");
        tau = Partition(std::vector<int>(static_cast<size_t>(n / 2), 2));
    }

    Output out;
    out.query["command"] = "maps";
    out.query["vertices"] = format_partition(lambda);
    out.query["faces"] = format_partition(mu);
    out.query["edges"] = format_partition(tau);

    out.routes.push_back({"character", to_string(maps::count_rooted_hypermaps(lambda, mu, tau))});
    if (brute_check) {
        Int raw = brute::enumerate_decorated_maps(lambda, mu, tau, common.search_budget());
        Int denom = factorial(n - 1);
        if (raw % denom != 0)
            throw std::logic_error("decorated map count not divisible by (N-1)!");
        out.routes.push_back({"brute-force", to_string(Int(raw / denom))});
    }

    out.value = out.routes.front().value;
    out.agreement = routes_agree(out.routes);
    emit(out, common.format);
    return out.agreement ? 0 : 1;
}

int run_hurwitz(const Common& common, const std::string& alpha_text, int genus) {
    hurwitz::HurwitzQuery q{parse_partition(alpha_text), std::nullopt, genus};

    Output out;
    out.query["command"] = "hurwitz";
    out.query["alpha"] = format_partition(q.alpha);
    out.query["genus"] = genus;

    out.routes.push_back({"character", to_string(hurwitz::hurwitz_char(q))});
    if (genus == 0) {
        out.routes.push_back({"closed-form", to_string(hurwitz::hurwitz_g0_closed(q.alpha))});
        auto table = hurwitz::joincut_table(q.alpha.weight());
        out.routes.push_back({"join-cut", to_string(table.hurwitz(q.alpha))});
    }

    out.value = out.routes.front().value;
    out.agreement = routes_agree(out.routes);
    emit(out, common.format);
    return out.agreement ? 0 : 1;
}

int run_double_hurwitz(const Common& common, const std::string& alpha_text,
                       const std::string& beta_text, int genus) {
    hurwitz::HurwitzQuery q{parse_partition(alpha_text), parse_partition(beta_text), genus};

    Output out;
    out.query["command"] = "double-hurwitz";
    out.query["alpha"] = format_partition(q.alpha);
    out.query["beta"] = format_partition(*q.beta);
    out.query["genus"] = genus;

    out.routes.push_back({"character", to_string(hurwitz::double_hurwitz(q))});
    hurwitz::HurwitzQuery swapped{*q.beta, q.alpha, genus};
    out.routes.push_back({"character-swapped", to_string(hurwitz::double_hurwitz(swapped))});

    out.value = out.routes.front().value;
    out.agreement = routes_agree(out.routes);
    emit(out, common.format);
    return out.agreement ? 0 : 1;
}

int run_joincut_table(const Common& common, int max_weight) {
    auto table = hurwitz::joincut_table(max_weight);

    Output out;
    out.query["command"] = "joincut-table";
    out.query["max-weight"] = max_weight;
    out.columns = {"partition", "genus", "value"};

    bool all_match = true;
    for (const auto& [alpha, h] : table.value) {
        out.rows.push_back({format_partition(alpha), "0", to_string(h)});
        if (h != hurwitz::hurwitz_g0_closed(alpha)) all_match = false;
    }
    out.value = std::to_string(out.rows.size()) + " entries";
    out.routes.push_back({"closed-form",
                          all_match ? "matches every entry" : "MISMATCH against the table"});
    out.agreement = all_match;
    emit(out, common.format);
    return all_match ? 0 : 1;
}

int run_b_scan(const Common& common, int max_weight) {
    auto reports = jack::b_conjecture_scan(max_weight);

    Output out;
    out.query["command"] = "b-scan";
    out.query["max-weight"] = max_weight;
    out.columns = {"lambda", "mu",        "tau",        "coefficient",
                   "b-form", "integral",  "nonnegative", "pass"};

    int failures = 0;
    for (const auto& r : reports) {
        bool ok = r.pass();
        if (!ok) ++failures;
        out.rows.push_back({format_partition(r.triple.lambda), format_partition(r.triple.mu),
                            format_partition(r.triple.tau), format_alpha_rat(r.coefficient),
                            r.alpha_polynomial ? format_poly(r.b_poly, "b") : "not a polynomial",
                            r.integer_coefficients ? "true" : "false",
                            r.nonnegative_coefficients ? "true" : "false",
                            ok ? "true" : "false"});
    }
    out.agreement = failures == 0;
    out.value = out.agreement
                    ? "pass (" + std::to_string(reports.size()) + " coefficients)"
                    : "fail (" + std::to_string(failures) + " of " +
                          std::to_string(reports.size()) + " coefficients)";
    emit(out, common.format);
    return out.agreement ? 0 : 1;
}

int run_psi_coeff(const Common& common, const std::string& lambda_text,
                  const std::string& mu_text, const std::string& tau_text) {
    Partition lambda = parse_partition(lambda_text);
    Partition mu = parse_partition(mu_text);
    Partition tau = parse_partition(tau_text);

    AlphaRat c = jack::psi_coefficient(lambda, mu, tau);

    Output out;
    out.query["command"] = "psi-coeff";
    out.query["lambda"] = format_partition(lambda);
    out.query["mu"] = format_partition(mu);
    out.query["tau"] = format_partition(tau);

    out.routes.push_back({"jack-series", format_alpha_rat(c)});
    // cross-check the specialization at parameter 1 against the Schur route
    int w = lambda.weight();
    Rat at_one = c.eval(Rat(1));
    Rat schur = jack::schur_triple_series(w).coefficient({lambda, mu, tau});
    out.routes.push_back({"schur-at-1", to_string(schur)});
    out.agreement = at_one == schur;
    out.notes.push_back("value at parameter 1: " + to_string(at_one));

    out.value = out.routes.front().value;
    emit(out, common.format);
    return out.agreement ? 0 : 1;
}

int run_validate_map(const Common& common, const std::string& nu_text,
                     const std::string& eps_text, const std::string& phi_text, bool hypermap,
                     int symbols) {
    maps::MapTriple t{parse_perm(nu_text, symbols), parse_perm(eps_text, symbols),
                      parse_perm(phi_text, symbols)};

    Output out;
    out.query["command"] = "validate-map";
    out.query["vertices"] = format_perm(t.nu);
    out.query["edges"] = format_perm(t.eps);
    out.query["faces"] = format_perm(t.phi);
    out.query["hypermap"] = hypermap;

    auto report = maps::validate_triple(t, hypermap);
    if (report.ok()) {
        auto genus = maps::map_genus(t, hypermap);
        out.value = "valid, genus " + std::to_string(genus.genus);
        out.notes.push_back("vertex type " + format_partition(cycle_type(t.nu)) + ", face type " +
                            format_partition(cycle_type(t.phi)) + ", edge type " +
                            format_partition(cycle_type(t.eps)));
    } else {
        out.value = "invalid: " + report.detail;
    }
    out.agreement = report.ok();
    emit(out, common.format);
    return report.ok() ? 0 : 1;
}

int run_character(const Common& common, const std::string& lambda_text,
                  const std::string& theta_text) {
    Partition lambda = parse_partition(lambda_text);
    Partition theta = parse_partition(theta_text);
    if (lambda.weight() != theta.weight())
        throw std::invalid_argument("character needs two partitions of one weight");

    Output out;
    out.query["command"] = "character";
    out.query["lambda"] = format_partition(lambda);
    out.query["theta"] = format_partition(theta);
    out.routes.push_back({"murnaghan-nakayama", to_string(charalg::character(lambda, theta))});
    out.value = out.routes.front().value;
    emit(out, common.format);
    return 0;
}

int run_lagrange_check(const Common& common, int max_degree) {
    auto report = hurwitz::lagrange_consistency_check(max_degree);

    Output out;
    out.query["command"] = "lagrange-check";
    out.query["max-degree"] = max_degree;
    if (report.pass) {
        out.value = "pass through degree " + std::to_string(max_degree);
    } else {
        out.value = "fail at degree " + std::to_string(report.degree) + ", monomial " +
                    format_partition(report.monomial);
        out.notes.push_back("series side " + to_string(report.lhs) + ", change-of-variables side " +
                            to_string(report.rhs));
    }
    out.agreement = report.pass;
    emit(out, common.format);
    return report.pass ? 0 : 1;
}

int run_poly_probe(const Common& common, int genus, int length, int part_bound) {
    auto report = hurwitz::polynomiality_probe(genus, length, part_bound);

    Output out;
    out.query["command"] = "poly-probe";
    out.query["genus"] = genus;
    out.query["length"] = length;
    out.query["part-bound"] = part_bound;

    out.columns = {"monomial", "coefficient"};
    for (const auto& [m, c] : report.fit)
        out.rows.push_back({"m" + format_partition(m), to_string(c)});

    if (report.fit_found)
        out.value = "fit of degree " + std::to_string(report.degree) + " on " +
                    std::to_string(report.grid_points) + " grid points";
    else
        out.value = "no polynomial fit";
    if (genus == 0)
        out.notes.push_back(std::string("closed-form display ") +
                            (report.g0_display_match ? "matches" : "does NOT match") +
                            " on the whole grid");
    if (!report.note.empty()) out.notes.push_back(report.note);

    bool ok = report.fit_found || (genus == 0 && report.g0_display_match);
    out.agreement = ok;
    emit(out, common.format);
    return ok ? 0 : 1;
}

int run_piecewise_probe(const Common& common, const std::string& family_name, int bound) {
    hurwitz::PiecewiseFamily family;
    if (family_name == "one-part-beta")
        family = hurwitz::PiecewiseFamily::one_part_beta;
    else if (family_name == "two-part-beta")
        family = hurwitz::PiecewiseFamily::two_part_beta;
    else if (family_name == "cycle-diagonal")
        family = hurwitz::PiecewiseFamily::cycle_diagonal;
    else
        throw std::invalid_argument("unknown family " + family_name);

    auto report = hurwitz::double_piecewise_probe(family, bound);

    Output out;
    out.query["command"] = "piecewise-probe";
    out.query["family"] = family_name;
    out.query["bound"] = bound;

    out.columns = {"chamber", "degree", "points", "held-out", "polynomial"};
    bool fits_ok = true;
    for (const auto& ch : report.chambers) {
        if (!ch.fit_found) fits_ok = false;
        out.rows.push_back({ch.chamber, std::to_string(ch.degree), std::to_string(ch.fit_points),
                            std::to_string(ch.held_out),
                            ch.fit_found ? format_lattice_fit(ch.fit, report.coordinates)
                                         : "no fit"});
    }

    if (report.witness) {
        std::string pt = "(";
        for (size_t i = 0; i < report.witness->point.size(); ++i)
            pt += (i ? "," : "") + std::to_string(report.witness->point[i]);
        pt += ")";
        out.value = "wall crossing witnessed at " + pt;
        out.notes.push_back("first chamber's fit predicts " + to_string(report.witness->predicted) +
                            " at " + pt + " (" + report.witness->located + "), actual value " +
                            to_string(report.witness->actual));
    } else if (!report.chambers.empty()) {
        out.value = report.chamber_fits_differ ? "chamber fits differ, no witness point located"
                                               : "single polynomial fits every chamber";
    } else {
        out.value = report.note;
    }
    if (!report.note.empty() && out.value != report.note) out.notes.push_back(report.note);
    out.notes.push_back("observed degree " + std::to_string(report.observed_degree) +
                        "; degree candidates " + std::to_string(report.degree_if_plus) + " and " +
                        std::to_string(report.degree_if_minus) + " (reported, not asserted)");
    out.agreement = fits_ok;
    emit(out, common.format);
    return fits_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact counts of permutation factorizations, rooted maps and Hurwitz numbers"};
    app.require_subcommand(1);

    Common common;
    app.add_option("--format", common.format, "output format")
        ->check(CLI::IsMember({"json", "csv", "text"}))
        ->capture_default_str();
    app.add_option("--cache-dir", common.cache_dir,
                   "table cache directory (default: PERMFACT_CACHE_DIR)");
    app.add_option("--workers", common.workers, "worker threads for brute-force checks")
        ->check(CLI::Range(1, 64))
        ->capture_default_str();
    app.add_option("--budget", common.budget, "tuple budget for brute-force checks")
        ->capture_default_str();

    std::vector<std::pair<CLI::App*, std::function<int()>>> handlers;

    {
        auto* c = app.add_subcommand("count-fact", "count factor tuples with a given product");
        auto target = std::make_shared<std::string>();
        auto factors = std::make_shared<std::vector<std::string>>();
        auto brute_check = std::make_shared<bool>(false);
        c->add_option("--target", *target, "target class, e.g. [3,1]")->required();
        c->add_option("--factors", *factors, "factor class, repeat once per factor")
            ->allow_extra_args(false);
        c->add_flag("--brute-check", *brute_check, "add a brute-force route");
        handlers.emplace_back(c, [&common, target, factors, brute_check] {
            return run_count_fact(common, *target, *factors, *brute_check);
        });
    }
    {
        auto* c = app.add_subcommand("count-transitive",
                                     "count factor tuples generating a transitive group");
        auto target = std::make_shared<std::string>();
        auto factors = std::make_shared<std::vector<std::string>>();
        auto brute_check = std::make_shared<bool>(false);
        c->add_option("--target", *target, "target class")->required();
        c->add_option("--factors", *factors, "factor class, repeat once per factor")
            ->allow_extra_args(false);
        c->add_flag("--brute-check", *brute_check, "add a brute-force route");
        handlers.emplace_back(c, [&common, target, factors, brute_check] {
            return run_count_transitive(common, *target, *factors, *brute_check);
        });
    }
    {
        auto* c = app.add_subcommand("maps", "count rooted maps or hypermaps");
        auto vertices = std::make_shared<std::string>();
        auto faces = std::make_shared<std::string>();
        auto edges = std::make_shared<std::string>();
        auto brute_check = std::make_shared<bool>(false);
        c->add_option("--vertices", *vertices, "vertex degree partition")->required();
        c->add_option("--faces", *faces, "face degree partition")->required();
        c->add_option("--edges", *edges, "hyperedge partition (default: all 2s)");
        c->add_flag("--brute-check", *brute_check, "add a brute-force route");
        handlers.emplace_back(c, [&common, vertices, faces, edges, brute_check] {
            return run_maps(common, *vertices, *faces, *edges, *brute_check);
        });
    }
    {
        auto* c = app.add_subcommand("hurwitz", "single Hurwitz number");
        auto alpha = std::make_shared<std::string>();
        auto genus = std::make_shared<int>(0);
        c->add_option("--alpha", *alpha, "ramification partition")->required();
        c->add_option("--genus", *genus, "genus")->check(CLI::Range(0, 8))->capture_default_str();
        handlers.emplace_back(
            c, [&common, alpha, genus] { return run_hurwitz(common, *alpha, *genus); });
    }
    {
        auto* c = app.add_subcommand("double-hurwitz", "double Hurwitz number");
        auto alpha = std::make_shared<std::string>();
        auto beta = std::make_shared<std::string>();
        auto genus = std::make_shared<int>(0);
        c->add_option("--alpha", *alpha, "first ramification partition")->required();
        c->add_option("--beta", *beta, "second ramification partition")->required();
        c->add_option("--genus", *genus, "genus")->check(CLI::Range(0, 8))->capture_default_str();
        handlers.emplace_back(c, [&common, alpha, beta, genus] {
            return run_double_hurwitz(common, *alpha, *beta, *genus);
        });
    }
    {
        auto* c = app.add_subcommand("joincut-table",
                                     "genus 0 Hurwitz numbers from the join-cut recurrence");
        auto max_weight = std::make_shared<int>(6);
        c->add_option("--max-weight", *max_weight, "largest partition weight")
            ->check(CLI::Range(1, 16))
            ->capture_default_str();
        handlers.emplace_back(c,
                              [&common, max_weight] { return run_joincut_table(common, *max_weight); });
    }
    {
        auto* c = app.add_subcommand(
            "b-scan", "check series coefficients for nonnegative integer b-polynomials");
        auto max_weight = std::make_shared<int>(4);
        c->add_option("--max-weight", *max_weight, "largest coefficient weight")
            ->check(CLI::Range(1, 8))
            ->capture_default_str();
        handlers.emplace_back(c, [&common, max_weight] { return run_b_scan(common, *max_weight); });
    }
    {
        auto* c = app.add_subcommand("psi-coeff", "one coefficient of the deformed triple series");
        auto lambda = std::make_shared<std::string>();
        auto mu = std::make_shared<std::string>();
        auto tau = std::make_shared<std::string>();
        c->add_option("--lambda", *lambda, "first partition")->required();
        c->add_option("--mu", *mu, "second partition")->required();
        c->add_option("--tau", *tau, "third partition")->required();
        handlers.emplace_back(c, [&common, lambda, mu, tau] {
            return run_psi_coeff(common, *lambda, *mu, *tau);
        });
    }
    {
        auto* c = app.add_subcommand("validate-map", "validate a vertex/edge/face triple");
        auto nu = std::make_shared<std::string>();
        auto eps = std::make_shared<std::string>();
        auto phi = std::make_shared<std::string>();
        auto hypermap = std::make_shared<bool>(false);
        auto symbols = std::make_shared<int>(0);
        c->add_option("--vertices", *nu, "vertex rotation, cycle notation or image table")
            ->required();
        c->add_option("--edges", *eps, "edge involution")->required();
        c->add_option("--faces", *phi, "face permutation")->required();
        c->add_flag("--hypermap", *hypermap, "allow arbitrary edge permutations");
        c->add_option("--symbols", *symbols, "widen all three words to this many symbols");
        handlers.emplace_back(c, [&common, nu, eps, phi, hypermap, symbols] {
            return run_validate_map(common, *nu, *eps, *phi, *hypermap, *symbols);
        });
    }
    {
        auto* c = app.add_subcommand("character", "one irreducible symmetric group character value");
        auto lambda = std::make_shared<std::string>();
        auto theta = std::make_shared<std::string>();
        c->add_option("--lambda", *lambda, "irreducible label")->required();
        c->add_option("--theta", *theta, "class label")->required();
        handlers.emplace_back(
            c, [&common, lambda, theta] { return run_character(common, *lambda, *theta); });
    }
    {
        auto* c = app.add_subcommand("lagrange-check",
                                     "verify the genus 0 series change-of-variables identity");
        auto max_degree = std::make_shared<int>(6);
        c->add_option("--max-degree", *max_degree, "largest z degree")
            ->check(CLI::Range(1, 12))
            ->capture_default_str();
        handlers.emplace_back(
            c, [&common, max_degree] { return run_lagrange_check(common, *max_degree); });
    }
    {
        auto* c = app.add_subcommand("poly-probe",
                                     "fit the scaled single Hurwitz numbers by a polynomial");
        auto genus = std::make_shared<int>(0);
        auto length = std::make_shared<int>(2);
        auto part_bound = std::make_shared<int>(4);
        c->add_option("--genus", *genus, "genus")->check(CLI::Range(0, 1))->capture_default_str();
        c->add_option("--length", *length, "number of parts")
            ->check(CLI::Range(1, 3))
            ->capture_default_str();
        c->add_option("--part-bound", *part_bound, "largest part on the grid")
            ->check(CLI::Range(2, 8))
            ->capture_default_str();
        handlers.emplace_back(c, [&common, genus, length, part_bound] {
            return run_poly_probe(common, *genus, *length, *part_bound);
        });
    }
    {
        auto* c = app.add_subcommand("piecewise-probe",
                                     "chamber-wise fits of a double Hurwitz family");
        auto family = std::make_shared<std::string>();
        auto bound = std::make_shared<int>(8);
        c->add_option("--family", *family, "one-part-beta, two-part-beta or cycle-diagonal")
            ->required()
            ->check(CLI::IsMember({"one-part-beta", "two-part-beta", "cycle-diagonal"}));
        c->add_option("--bound", *bound, "lattice bound")->check(CLI::Range(2, 12))->capture_default_str();
        handlers.emplace_back(c, [&common, family, bound] {
            return run_piecewise_probe(common, *family, *bound);
        });
    }

    // global options may be written after the subcommand name
    for (auto& [sub, run] : handlers) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    auto cache_path = cache::resolve_dir(common.cache_dir);
    if (!cache_path.empty()) {
        auto stats = cache::load(cache_path);
        if (!stats.warning.empty()) std::cerr << "warning: " << stats.warning << "\n";
    }

    int code = 0;
    try {
        for (const auto& [sub, handler] : handlers)
            if (app.got_subcommand(sub)) {
                code = handler();
                break;
            }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const brute::BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    if (!cache_path.empty()) {
        try {
            cache::store(cache_path);
        } catch (const std::exception& e) {
            std::cerr << "warning: cache not written: " << e.what() << "\n";
        }
    }
    return code;
}
