#include "cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <limits>
#include <optional>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"
#include "stasheff/face_poset.hpp"
#include "stasheff/gauge.hpp"
#include "stasheff/poset_io.hpp"
#include "stasheff/realization.hpp"
#include "stasheff/steenrod.hpp"
#include "stasheff/trees.hpp"
#include "stasheff/verify.hpp"

namespace stasheff::cli {

namespace {

using ojson = nlohmann::ordered_json;

struct RunConfig {
    std::string kind = "K";
    int n = 4;
    int n_max = 5;
    std::optional<int> dim;
    bool vertices_only = false;
    bool check = false;
    std::string format;
    std::string cache_dir;
    bool no_cache = false;
    bool verbose = false;
    std::string word;
    int prime = 3;
    int trials = 1000;
    int max_len = 4;
    int max_exp = 8;
    std::uint64_t seed = 20240601;
    std::int64_t k = 0;
    std::int64_t k2 = 0;
    std::int64_t kmax = 1000;
};

std::string csv_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

ojson big_json(const BigInt& v) {
    if (v >= 0 && v <= std::numeric_limits<std::uint64_t>::max()) return v.convert_to<std::uint64_t>();
    return v.str();
}

ojson invariant_json(const SU2Invariant& inv) {
    ojson o = ojson::object();
    for (const auto& e : inv.entries) o[std::to_string(e.prime)] = e.value;
    return o;
}

std::optional<std::filesystem::path> cache_dir_for(const RunConfig& cfg) {
    if (cfg.no_cache) return std::nullopt;
    if (!cfg.cache_dir.empty()) return std::filesystem::path(cfg.cache_dir);
    if (const char* env = std::getenv(kCacheEnv); env && *env) return std::filesystem::path(env);
    if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) return std::filesystem::path(xdg) / "stasheff";
    if (const char* home = std::getenv("HOME"); home && *home)
        return std::filesystem::path(home) / ".cache" / "stasheff";
    return std::nullopt;
}

// ---------------------------------------------------------------- enumerate

int cmd_enumerate(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const auto kind = parse_kind(cfg.kind);
    const std::string format = cfg.format.empty() ? "text" : cfg.format;

    std::vector<std::pair<int, std::string>> faces;
    if (cfg.vertices_only) {
        if (kind == PolytopeKind::K)
            for (const auto& t : enumerate_planar_vertices(cfg.n)) faces.emplace_back(0, t.canonical());
        else
            for (const auto& t : enumerate_painted_vertices(cfg.n)) faces.emplace_back(0, t.canonical());
    } else {
        std::optional<FacePoset> poset;
        const auto dir = cache_dir_for(cfg);
        if (dir) {
            std::string warning;
            poset = load_or_build(*dir, kind, cfg.n, &warning);
            if (!warning.empty()) err << "warning: " << warning << "\n";
            if (cfg.verbose) err << "cache: " << cache_file(*dir, kind, cfg.n).string() << "\n";
        } else {
            poset = FacePoset::build(kind, cfg.n);
        }
        if (format == "json" && !cfg.dim) {
            out << poset_to_json(*poset).dump() << "\n";
            return kExitOk;
        }
        for (int d = 0; d <= poset->top_dimension(); ++d) {
            if (cfg.dim && *cfg.dim != d) continue;
            for (const auto& code : poset->faces(d)) faces.emplace_back(d, code);
        }
    }

    if (format == "json") {
        ojson doc = {{"schema_version", kPosetSchemaVersion}, {"kind", to_string(kind)}, {"n", cfg.n}};
        if (cfg.vertices_only)
            doc["dim"] = 0;
        else if (cfg.dim)
            doc["dim"] = *cfg.dim;
        ojson list = ojson::array();
        for (const auto& [d, code] : faces) list.push_back({{"dim", d}, {"tree", code}});
        doc["faces"] = std::move(list);
        out << doc.dump() << "\n";
    } else if (format == "csv") {
        out << "dim,tree\n";
        for (const auto& [d, code] : faces) out << d << "," << csv_quote(code) << "\n";
    } else {
        for (const auto& [d, code] : faces) out << d << " " << code << "\n";
    }
    return kExitOk;
}

// ---------------------------------------------------------------- verify

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
    const auto report = verify_relations(parse_kind(cfg.kind), cfg.n_max);
    if (cfg.format == "json") {
        out << report_to_json(report).dump() << "\n";
    } else {
        out << report.map_name << " n_max=" << report.n_max << " instances=" << report.instances
            << " passed=" << report.checks_passed << " failures=" << report.failures.size() << "\n";
        for (const auto& t : report.tallies) out << "  " << t.check << " " << t.instances << " " << t.failed << "\n";
        for (const auto& f : report.failures)
            out << "FAIL " << f.check << " " << f.inputs << " expected " << f.expected << " got " << f.got << "\n";
    }
    return report.ok() ? kExitOk : kExitFailures;
}

// ---------------------------------------------------------------- realize

int cmd_realize(const RunConfig& cfg, std::ostream& out) {
    const auto emb = build_embedding(cfg.n);
    std::optional<FacetSupportReport> support;
    if (cfg.check) support = facet_support_check(cfg.n);

    if (cfg.format == "json") {
        ojson doc = {{"n", cfg.n}};
        ojson verts = ojson::array();
        for (const auto& [code, x] : emb.points) verts.push_back({{"tree", code}, {"coordinates", x}});
        doc["vertices"] = std::move(verts);
        if (support) {
            doc["affine_dimension"] = affine_dimension(emb);
            ojson viol = ojson::array();
            for (const auto& v : support->violations)
                viol.push_back({{"facet", v.facet},
                                {"vertex", v.vertex},
                                {"partial_sum", v.partial_sum},
                                {"bound", v.bound},
                                {"in_facet", v.in_facet}});
            doc["facet_support"] = {{"facets_checked", support->facets_checked},
                                    {"vertex_checks", support->vertex_checks},
                                    {"violations", std::move(viol)}};
        }
        out << doc.dump() << "\n";
    } else {
        out << "tree";
        for (int i = 1; i < cfg.n; ++i) out << ",x_" << i;
        out << "\n";
        for (const auto& [code, x] : emb.points) {
            out << csv_quote(code);
            for (auto v : x) out << "," << v;
            out << "\n";
        }
    }
    return support && !support->ok() ? kExitFailures : kExitOk;
}

// ---------------------------------------------------------------- steenrod

int cmd_steenrod(const RunConfig& cfg, std::ostream& out) {
    const auto input = SteenrodElement::parse(cfg.word, cfg.prime);
    RewriteStats stats;
    const auto normal = adem_reduce(input, RewriteStrategy::Leftmost, &stats);
    if (cfg.format == "json") {
        ojson terms = ojson::array();
        for (auto it = normal.terms().rbegin(); it != normal.terms().rend(); ++it)
            terms.push_back({{"coefficient", it->second}, {"word", it->first}});
        out << ojson{{"prime", cfg.prime},
                     {"input", input.to_string()},
                     {"normal_form", normal.to_string()},
                     {"degree", normal.is_zero() ? input.degree() : normal.degree()},
                     {"terms", std::move(terms)},
                     {"rewrite_steps", stats.steps}}
                   .dump()
            << "\n";
    } else {
        out << normal.to_string() << "\n";
    }
    return kExitOk;
}

int cmd_probe(const RunConfig& cfg, std::ostream& out) {
    const auto rep = confluence_probe(cfg.prime, cfg.trials, cfg.max_len, cfg.max_exp, cfg.seed);
    out << ojson{{"prime", rep.prime},
                 {"trials", rep.trials},
                 {"seed", rep.seed},
                 {"disagreements", rep.disagreements},
                 {"degree_violations", rep.degree_violations},
                 {"fixed_point_failures", rep.fixed_point_failures},
                 {"non_admissible_outputs", rep.non_admissible_outputs},
                 {"admissible_inputs", rep.admissible_inputs},
                 {"rewrite_steps", rep.rewrite_steps},
                 {"examples", rep.examples}}
               .dump()
        << "\n";
    return rep.ok() ? kExitOk : kExitFailures;
}

// ---------------------------------------------------------------- gauge

int cmd_classify(const RunConfig& cfg, std::ostream& out) {
    out << ojson{{"invariant_k", invariant_json(su2_invariant(cfg.k, cfg.n))},
                 {"invariant_k2", invariant_json(su2_invariant(cfg.k2, cfg.n))},
                 {"verdict", to_string(su2_an_equivalent(cfg.k, cfg.k2, cfg.n))}}
               .dump()
        << "\n";
    return kExitOk;
}

int cmd_census(const RunConfig& cfg, std::ostream& out) {
    const auto rows = census(cfg.n, cfg.kmax);
    const auto shape = su2_invariant(1, cfg.n);
    for (const auto& e : shape.entries) out << "v_" << e.prime << ",";
    out << "count,representative,witness\n";
    for (const auto& row : rows) {
        for (const auto& e : row.invariant.entries) out << e.value << ",";
        out << row.count << "," << row.representative << "," << invariant_witness(row.invariant) << "\n";
    }
    return kExitOk;
}

int cmd_order(const RunConfig& cfg, std::ostream& out) {
    const auto t = an_triviality_order(cfg.n);
    out << ojson{{"odd_part", big_json(t.odd_part)}, {"v2_lower", t.v2_lower}, {"v2_upper", t.v2_upper}}.dump()
        << "\n";
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    CLI::App app{"Associahedra, multiplihedra, Adem rewriting and SU(2) gauge-group arithmetic", "stasheff"};
    app.require_subcommand(1);
    app.add_flag("-v,--verbose", cfg.verbose, "Diagnostics on stderr");

    const std::vector<std::string> kinds{"K", "J"};

    auto* enumerate = app.add_subcommand("enumerate", "List the faces of K_n or J_n");
    enumerate->add_option("--kind", cfg.kind, "K or J")->check(CLI::IsMember(kinds));
    enumerate->add_option("--n", cfg.n, "Number of leaves")->required();
    enumerate->add_option("--dim", cfg.dim, "Only faces of this dimension");
    enumerate->add_flag("--vertices-only", cfg.vertices_only, "Binary trees only (larger n allowed)");
    enumerate->add_option("--format", cfg.format, "text, csv or json")
        ->check(CLI::IsMember({"text", "csv", "json"}));
    enumerate->add_option("--cache-dir", cfg.cache_dir, std::string("Face cache directory (default $") + kCacheEnv + ")");
    enumerate->add_flag("--no-cache", cfg.no_cache, "Do not read or write the face cache");

    auto* verify = app.add_subcommand("verify", "Exhaustively check the face-map identities");
    verify->add_option("--kind", cfg.kind, "K or J")->check(CLI::IsMember(kinds));
    verify->add_option("--n-max", cfg.n_max, "Largest leaf count checked")->required();
    verify->add_option("--format", cfg.format, "text or json")->check(CLI::IsMember({"text", "json"}));

    auto* realize = app.add_subcommand("realize", "Integer vertex coordinates of K_n");
    realize->add_option("--n", cfg.n, "Number of leaves")->required();
    realize->add_option("--format", cfg.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    realize->add_flag("--check", cfg.check, "Also check the facet supporting equalities");

    auto* steenrod = app.add_subcommand("steenrod", "Admissible normal form of a Steenrod element");
    steenrod->add_option("word", cfg.word, "e.g. \"P^1.P^1\" or \"2*P^2 + P^3.P^1\"")->required();
    steenrod->add_option("--prime", cfg.prime, "Odd prime");
    steenrod->add_option("--format", cfg.format, "text or json")->check(CLI::IsMember({"text", "json"}));

    auto* probe = app.add_subcommand("probe", "Compare normal forms under two rewrite orders");
    probe->add_option("--prime", cfg.prime, "Odd prime");
    probe->add_option("--trials", cfg.trials, "Random words")->check(CLI::NonNegativeNumber);
    probe->add_option("--max-len", cfg.max_len, "Longest word")->check(CLI::PositiveNumber);
    probe->add_option("--max-exp", cfg.max_exp, "Largest exponent")->check(CLI::PositiveNumber);
    probe->add_option("--seed", cfg.seed, "Generator seed");

    auto* classify = app.add_subcommand("classify", "Decide A_n-equivalence of the gauge groups of P_k, P_k'");
    classify->add_option("--n", cfg.n, "Level")->required();
    classify->add_option("--k", cfg.k, "First bundle")->required();
    classify->add_option("--k2", cfg.k2, "Second bundle")->required();

    auto* census_cmd = app.add_subcommand("census", "Invariant classes of k in [-kmax, kmax]");
    census_cmd->add_option("--n", cfg.n, "Level")->required();
    census_cmd->add_option("--kmax", cfg.kmax, "Scan bound")->check(CLI::NonNegativeNumber);

    auto* order = app.add_subcommand("order", "Odd part and 2-adic bounds of the A_n-triviality order");
    order->add_option("--n", cfg.n, "Level")->required();

    std::vector<const char*> argv{"stasheff"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*enumerate) return cmd_enumerate(cfg, out, err);
        if (*verify) return cmd_verify(cfg, out);
        if (*realize) return cmd_realize(cfg, out);
        if (*steenrod) return cmd_steenrod(cfg, out);
        if (*probe) return cmd_probe(cfg, out);
        if (*classify) return cmd_classify(cfg, out);
        if (*census_cmd) return cmd_census(cfg, out);
        if (*order) return cmd_order(cfg, out);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitFailures;
    }
    err << app.help();
    return kExitUsage;
}

}  // namespace stasheff::cli
