#include "hyperkirch/cli.hpp"

#include "hyperkirch/io.hpp"
#include "hyperkirch/kirchhoff.hpp"
#include "hyperkirch/lattice.hpp"
#include "hyperkirch/stability.hpp"
#include "hyperkirch/volume.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <ostream>

namespace hyperkirch::cli {

using io::Json;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Config {
    std::string format = "json";
    std::uint64_t budget = 0;
    unsigned threads = 1;
    std::uint64_t seed = 0;

    std::string graph;
    std::string weights;
    std::string eta;
    std::string spec;
    std::string pieces;
    std::string method = "delcon";
    std::string character;
    std::uint64_t q = 0;
    std::uint64_t p = 0;
    unsigned k = 0;
    std::int64_t N = 0;
    std::int64_t search = -1;
    std::uint64_t samples = 10000;
    bool oracle = false;
    bool monte_carlo = false;
};

std::string decimal(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

Json integers(const std::vector<Integer>& v) {
    Json out = Json::array();
    for (const auto& z : v) out.push_back(to_string(z));
    return out;
}

Multigraph load_graph(const Config& c) { return io::graph_from_json(io::load_document(c.graph)); }

std::vector<Integer> load_weights(const Config& c, const Multigraph& g) {
    return io::edge_values_from_json(io::load_document(c.weights), g);
}

StabilityParam load_eta(const Config& c, const Multigraph& g) {
    return StabilityParam::make(g, io::vertex_values_from_json(io::load_document(c.eta), g), c.N);
}

void warn_small_N(const Config& c, std::ostream& err) {
    if (c.N == 1) err << "warning: N = 1, the map from orbits to faces is not injective\n";
}

Json cmd_psi(const Config& c) {
    const Multigraph g = load_graph(c);
    MultilinearPoly poly(std::vector<std::string>{});
    Json doc;
    doc["command"] = "psi";
    doc["method"] = c.method;
    if (c.method == "enum") {
        poly = psi_enum(g, c.budget);
    } else if (c.method == "delcon") {
        poly = psi_delcon(g);
    } else {
        poly = psi_enum(g, c.budget);
        doc["engines_agree"] = equal(poly, psi_delcon(g));
    }
    doc["variables"] = poly.variables();
    doc["h1"] = betti1(g);
    doc["monomials"] = io::poly_to_json(poly);
    if (!c.weights.empty()) {
        const auto x = load_weights(c, g);
        const Integer value = poly.evaluate(x);
        doc["weights"] = io::edge_values_to_json(x, g);
        doc["value"] = to_string(value);
        doc["det_agrees"] = psi_det(g, x) == value;
    }
    return doc;
}

Json cmd_tamagawa(const Config& c) {
    const Multigraph g = load_graph(c);
    const auto x = load_weights(c, g);
    const ComponentGroup group = component_group(g, x);
    Json doc;
    doc["command"] = "tamagawa";
    doc["weights"] = io::edge_values_to_json(x, g);
    doc["tau_matrix"] = io::matrix_to_json(tau_matrix(g, x));
    doc["invariant_factors"] = integers(group.invariant_factors);
    doc["order"] = to_string(group.order);
    doc["psi"] = to_string(psi_enum(g, c.budget).evaluate(x));
    return doc;
}

Json cmd_volume(const Config& c) {
    const Multigraph g = load_graph(c);
    const Valuation nu = Valuation::make(g, load_weights(c, g));
    const Rational vol = fibre_volume(g, nu, c.q);
    Json doc;
    doc["command"] = "volume";
    doc["q"] = c.q;
    doc["h1"] = betti1(g);
    doc["psi"] = to_string(psi_enum(g, c.budget).evaluate(nu.nu));
    doc["volume"] = to_string(vol);
    return doc;
}

Json cmd_total_volume(const Config& c) {
    const Multigraph g = load_graph(c);
    Json doc;
    doc["command"] = "total-volume";
    const Integer total = total_volume(g);
    doc["total_volume"] = to_string(total);
    if (c.oracle) {
        const auto params = LocalFieldParams::make(c.p, c.k);
        const OracleResult r = total_volume_padic_oracle(g, params, c.budget, c.threads);
        const Rational gap = Rational(total) - r.estimate;
        doc["oracle"] = {{"p", c.p},
                         {"k", c.k},
                         {"residue_classes", r.residue_classes},
                         {"estimate", to_string(r.estimate)},
                         {"error_bound", to_string(r.error_bound)},
                         {"within_bound", gap >= 0 && gap <= r.error_bound}};
    }
    if (c.monte_carlo) {
        const auto params = LocalFieldParams::make(c.p, c.k);
        const MonteCarloResult r = total_volume_padic_monte_carlo(g, params, c.samples, c.seed);
        doc["monte_carlo"] = {{"p", c.p},
                              {"k", c.k},
                              {"samples", r.samples},
                              {"seed", c.seed},
                              {"estimate", decimal(r.estimate)},
                              {"radius99", decimal(r.radius99)}};
    }
    return doc;
}

Json cmd_point_count(const Config& c) {
    const Multigraph g = load_graph(c);
    Json doc;
    doc["command"] = "point-count";
    doc["q"] = c.q;
    doc["h1"] = betti1(g);
    doc["point_count"] = to_string(central_fibre_point_count(g, c.q));
    doc["total_volume"] = to_string(total_volume(g));
    return doc;
}

Json cmd_stability(const Config& c, std::ostream& err) {
    Json doc;
    doc["command"] = "stability";
    doc["N"] = c.N;
    warn_small_N(c, err);
    if (!c.character.empty()) {
        const auto comma = c.character.find(',');
        if (comma == std::string::npos) throw UsageError("--character expects k,m");
        Integer k, m;
        try {
            k = parse_integer(c.character.substr(0, comma));
            m = parse_integer(c.character.substr(comma + 1));
        } catch (const std::invalid_argument&) {
            throw UsageError("--character expects two integers k,m");
        }
        doc["character"] = {{"k", to_string(k)}, {"m", to_string(m)},
                            {"position", to_string(delta_membership(k, m, c.N))}};
    }
    if (!c.spec.empty()) {
        const Multigraph g = load_graph(c);
        const StabilityParam sp = load_eta(c, g);
        const OrbitSpec spec = io::orbit_spec_from_json(io::load_document(c.spec), g);
        doc["eta"] = io::vertex_values_to_json(sp.eta, g);
        doc["char_box"] = io::char_box_to_json(orbit_char_set(spec, c.N), g);
        doc["semistable"] = is_semistable(g, sp, spec);
    }
    return doc;
}

Json cmd_generic(const Config& c, std::ostream& err) {
    const Multigraph g = load_graph(c);
    Json doc;
    doc["command"] = "generic";
    doc["N"] = c.N;
    warn_small_N(c, err);
    if (!c.eta.empty()) {
        const StabilityParam sp = load_eta(c, g);
        doc["eta"] = io::vertex_values_to_json(sp.eta, g);
        doc["generic"] = is_generic(g, sp, c.budget);
    } else {
        if (c.N < 1) throw DomainError("N must be at least 1");
        const auto found = find_generic_eta(g, c.N, c.search, c.budget);
        doc["search_range"] = c.search;
        doc["found"] = found.has_value();
        doc["eta"] = found ? io::vertex_values_to_json(*found, g) : Json(nullptr);
    }
    return doc;
}

Json cmd_trop(const Config& c) {
    const Multigraph g = load_graph(c);
    const auto w = load_weights(c, g);
    const TropTorus torus = tropical_jacobian(g, w);
    Json doc;
    doc["command"] = "trop";
    doc["rank"] = torus.rank;
    doc["gram"] = io::matrix_to_json(torus.gram);
    doc["covolume"] = to_string(torus.covolume);
    if (c.q != 0) {
        doc["q"] = c.q;
        doc["volume_check"] = trop_volume_check(g, Valuation::make(g, w), c.q);
    }
    return doc;
}

std::vector<std::int64_t> small_values(const std::vector<Integer>& v) {
    std::vector<std::int64_t> out;
    for (const auto& z : v) {
        if (!z.fits_slong_p()) throw DomainError("fragmentation count out of range");
        out.push_back(z.get_si());
    }
    return out;
}

void emit(const Json& doc, const std::string& format, std::ostream& out) {
    if (format == "table") {
        for (const auto& [key, value] : doc.items())
            out << key << '\t' << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
        return;
    }
    out << doc.dump(2) << '\n';
}

Json error_record(const char* kind, const std::string& message) {
    return {{"error", {{"kind", kind}, {"message", message}}}};
}

}  // namespace

std::uint64_t default_budget() {
    constexpr std::uint64_t fallback = 100000000;
    const char* env = std::getenv("HYPERKIRCH_BUDGET");
    if (env == nullptr || *env == '\0') return fallback;
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (*end != '\0' || v == 0) return fallback;
    return v;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Config c;
    c.budget = default_budget();

    CLI::App app{"Kirchhoff polynomials, component groups, p-adic volumes and stability strata of graphs",
                 "hyperkirch"};
    app.require_subcommand(1, 1);
    app.fallthrough();
    app.add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "table", "dot"}));
    app.add_option("--budget", c.budget, "Enumeration cap (default $HYPERKIRCH_BUDGET or 1e8)")
        ->check(CLI::PositiveNumber);
    app.add_option("--threads", c.threads, "Worker threads")->check(CLI::Range(1U, 256U));
    app.add_option("--seed", c.seed, "Seed for the Monte Carlo estimator");

    auto graph_opt = [&](CLI::App* sub) {
        sub->add_option("--graph", c.graph, "Graph document (file or inline JSON)")->required();
    };

    auto* psi = app.add_subcommand("psi", "Kirchhoff polynomial");
    graph_opt(psi);
    psi->add_option("--method", c.method, "enum, delcon (default) or both")->check(CLI::IsMember({"enum", "delcon", "both"}));
    psi->add_option("--weights", c.weights, "Edge weights to evaluate at");

    auto* tamagawa = app.add_subcommand("tamagawa", "Component group of the weighted cycle pairing");
    graph_opt(tamagawa);
    tamagawa->add_option("--weights", c.weights, "Positive integer edge weights")->required();

    auto* volume = app.add_subcommand("volume", "Fibre volume over a base point");
    graph_opt(volume);
    volume->add_option("--weights", c.weights, "Edge valuations")->required();
    volume->add_option("--q", c.q, "Residue field size")->required();

    auto* total = app.add_subcommand("total-volume", "Total volume of the central fibre");
    graph_opt(total);
    total->add_flag("--oracle", c.oracle, "Also run the exhaustive residue-class estimate");
    total->add_flag("--monte-carlo", c.monte_carlo, "Also run the sampling estimate");
    total->add_option("--p", c.p, "Prime for the estimators");
    total->add_option("--k", c.k, "Precision for the estimators");
    total->add_option("--samples", c.samples, "Monte Carlo sample count")->check(CLI::PositiveNumber);

    auto* points = app.add_subcommand("point-count", "Points of the central fibre over F_q");
    graph_opt(points);
    points->add_option("--q", c.q, "Residue field size")->required();

    auto* stability = app.add_subcommand("stability", "Semistability of an orbit, or the position of a character");
    stability->add_option("--graph", c.graph, "Graph document (file or inline JSON)");
    stability->add_option("--eta", c.eta, "Vertex map eta");
    stability->add_option("--N", c.N, "Level N >= 1")->required();
    stability->add_option("--spec", c.spec, "Edge map of orbit types");
    stability->add_option("--character", c.character, "Character k,m to locate relative to Delta^N");

    auto* generic = app.add_subcommand("generic", "Genericity of eta, or a search for a generic eta");
    graph_opt(generic);
    generic->add_option("--N", c.N, "Level N >= 1")->required();
    auto* eta_opt = generic->add_option("--eta", c.eta, "Vertex map eta");
    auto* search_opt = generic->add_option("--search", c.search, "Search eta entries in [-R, R]")
                           ->check(CLI::NonNegativeNumber);
    eta_opt->excludes(search_opt);

    auto* strata = app.add_subcommand("strata", "Components of the special fibre and their intersections");
    graph_opt(strata);
    strata->add_option("--eta", c.eta, "Vertex map eta")->required();
    strata->add_option("--N", c.N, "Level N >= 1")->required();

    auto* trop = app.add_subcommand("trop", "Tropical Jacobian");
    graph_opt(trop);
    trop->add_option("--weights", c.weights, "Positive integer edge lengths")->required();
    trop->add_option("--q", c.q, "Also check the volume identity at this q");

    auto* frag = app.add_subcommand("fragment", "Subdivide edges");
    graph_opt(frag);
    frag->add_option("--n", c.pieces, "Edge map of piece counts")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
        if (c.format == "dot" && !strata->parsed() && !frag->parsed())
            throw CLI::ValidationError("--format", "dot output is only available for strata and fragment");
        if (stability->parsed()) {
            if (c.spec.empty() && c.character.empty())
                throw CLI::ValidationError("stability", "give --spec or --character");
            if (!c.spec.empty() && (c.graph.empty() || c.eta.empty()))
                throw CLI::ValidationError("stability", "--spec needs --graph and --eta");
        }
        if (generic->parsed() && c.eta.empty() && c.search < 0)
            throw CLI::ValidationError("generic", "give --eta or --search");
        if (total->parsed() && (c.oracle || c.monte_carlo) && (c.p == 0 || c.k == 0))
            throw CLI::ValidationError("total-volume", "the estimators need --p and --k");
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    }

    try {
        Json doc;
        if (psi->parsed()) doc = cmd_psi(c);
        else if (tamagawa->parsed()) doc = cmd_tamagawa(c);
        else if (volume->parsed()) doc = cmd_volume(c);
        else if (total->parsed()) doc = cmd_total_volume(c);
        else if (points->parsed()) doc = cmd_point_count(c);
        else if (stability->parsed()) doc = cmd_stability(c, err);
        else if (generic->parsed()) doc = cmd_generic(c, err);
        else if (trop->parsed()) doc = cmd_trop(c);
        else if (strata->parsed()) {
            const Multigraph g = load_graph(c);
            const StabilityParam sp = load_eta(c, g);
            warn_small_N(c, err);
            const StrataComplex s = strata_complex(g, sp, c.budget, c.threads);
            if (c.format == "dot") {
                out << io::strata_to_dot(s, g);
                return 0;
            }
            doc = io::strata_to_json(s, g);
        } else if (frag->parsed()) {
            const Multigraph g = load_graph(c);
            const auto n = small_values(io::edge_values_from_json(io::load_document(c.pieces), g));
            const Multigraph f = fragment(g, n);
            if (c.format == "dot") {
                out << io::graph_to_dot(f);
                return 0;
            }
            doc = io::graph_to_json(f);
        }
        emit(doc, c.format, out);
        return 0;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const BudgetExceeded& e) {
        emit(error_record("budget", e.what()), "json", out);
    } catch (const DomainError& e) {
        emit(error_record("domain", e.what()), "json", out);
    } catch (const io::InputError& e) {
        emit(error_record("input", e.what()), "json", out);
    } catch (const std::invalid_argument& e) {
        emit(error_record("input", e.what()), "json", out);
    }
    return 1;
}

}  // namespace hyperkirch::cli
