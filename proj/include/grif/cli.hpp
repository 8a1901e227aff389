#pragma once

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "grif/dimacs.hpp"
#include "grif/eigen.hpp"
#include "grif/field.hpp"
#include "grif/generators.hpp"
#include "grif/gravity.hpp"
#include "grif/oracle.hpp"
#include "grif/refine.hpp"
#include "grif/sat.hpp"
#include "grif/splitting.hpp"

namespace grif {
namespace cli {

using Json = nlohmann::ordered_json;

inline std::string fnv1a_hex(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    std::ostringstream out;
    out << "fnv1a:" << std::hex << std::setfill('0') << std::setw(16) << h;
    return out.str();
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline void write_file(const std::string& path, std::string_view content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << content;
}

// Blocks of 0-based vertex indices, one block per line; '#' comments.
inline std::vector<std::vector<std::size_t>> parse_partition(std::string_view text) {
    std::vector<std::vector<std::size_t>> blocks;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto tok = detail::split_ws(line);
        if (tok.empty() || tok[0].front() == '#') continue;
        std::vector<std::size_t> block;
        for (const auto& t : tok)
            block.push_back(detail::parse_int<std::size_t>(t, line_no, "vertex"));
        blocks.push_back(std::move(block));
    }
    return blocks;
}

inline std::uint64_t env_default_seed() {
    if (const char* v = std::getenv("GRIF_SEED")) {
        char* end = nullptr;
        const unsigned long long parsed = std::strtoull(v, &end, 10);
        if (end && *end == '\0') return parsed;
    }
    return 0;
}

inline Json basis_json(const SplittingBasis<F61>& s) {
    Json j;
    Json alphas = Json::array();
    for (const auto& a : s.alphas) alphas.push_back(std::to_string(a.value()));
    j["alphas"] = std::move(alphas);
    Json supp = Json::array();
    const std::size_t n = s.dim();
    for (const auto& cells : supports(s)) {
        Json list = Json::array();
        for (std::size_t cell : cells) list.push_back(Json::array({cell / n, cell % n}));
        supp.push_back(std::move(list));
    }
    j["supports"] = std::move(supp);
    return j;
}

inline Json constants_json(const StructureConstants<F61>& c) {
    Json j;
    j["closed"] = c.closed;
    j["commutative"] = c.commutative();
    Json triples = Json::array();
    for (const auto& e : c.d) {
        const std::size_t u = e.key % c.m, w = (e.key / c.m) % c.m, v = e.key / c.m / c.m;
        triples.push_back(Json::array({v, w, u, std::to_string(e.value.value())}));
    }
    j["d"] = std::move(triples);
    if (c.witness) {
        j["witness"] = {{"v", c.witness->v},
                        {"w", c.witness->w},
                        {"u", c.witness->u},
                        {"row", c.witness->row},
                        {"col", c.witness->col},
                        {"expected", std::to_string(c.witness->expected.value())},
                        {"found", std::to_string(c.witness->found.value())}};
    }
    return j;
}

inline Json comparison_json(const AlgebraComparison<F61>& cmp) {
    Json j;
    j["match"] = cmp.match;
    j["first"] = constants_json(cmp.constants1);
    j["second"] = constants_json(cmp.constants2);
    return j;
}

inline Json verdict_json(const IsoVerdict<F61>& v) {
    Json j;
    j["verdict"] = v.isomorphic ? "isomorphic" : "non-isomorphic";
    j["steps"] = v.steps;
    j["stabilized"] = v.stabilized;
    if (!v.note.empty()) j["note"] = v.note;
    if (v.stabilized && v.basis1) {
        Json s;
        s["first"] = basis_json(*v.basis1);
        s["second"] = basis_json(*v.basis2);
        s["ring_first"] = basis_json(*v.ring_basis1);
        s["ring_second"] = basis_json(*v.ring_basis2);
        s["symmetric"] = comparison_json(*v.symmetric);
        s["standard"] = comparison_json(*v.standard);
        s["meta_span_ok"] = v.meta_span_ok;
        s["indicators_symmetric"] = v.indicators_symmetric;
        j["splitting"] = std::move(s);
    }
    return j;
}

struct ReportSink {
    std::string out_path;  // empty: stdout
    std::ostream* fallback = nullptr;

    void emit(const Json& report) const {
        const std::string text = report.dump(2) + "\n";
        if (out_path.empty())
            *fallback << text;
        else
            write_file(out_path, text);
    }
};

namespace detail_cli {

inline void add_gravity_flags(CLI::App* cmd, GravityParams& p) {
    cmd->add_option("--g", p.g, "gravitation coefficient");
    cmd->add_option("--g1", p.g1, "anti-gravitation coefficient (0 disables repulsion)");
    cmd->add_option("--s", p.s, "attraction distance exponent");
    cmd->add_option("--s1", p.s1, "repulsion distance exponent");
    cmd->add_option("--eps", p.eps, "integration step scale");
    cmd->add_option("--steps", p.steps, "integration steps per round (0 = 5*n)");
    cmd->add_option("--d-min", p.d_min, "distance clamp");
}

inline Json gravity_params_json(const GravityParams& p, std::size_t n) {
    return Json{{"g", p.g},     {"g1", p.g1},     {"s", p.s},          {"s1", p.s1},
                {"eps", p.eps}, {"steps", p.steps_for(n)}, {"d_min", p.d_min}};
}

inline Json rounds_json(const std::vector<GravityRound>& rounds) {
    Json arr = Json::array();
    for (const auto& r : rounds)
        arr.push_back({{"round", r.round},
                       {"subgraph_size", r.subgraph_size},
                       {"chosen", Json::array({r.chosen.first, r.chosen.second})},
                       {"min_distance", r.min_distance}});
    return arr;
}

struct TrajectoryWriter {
    std::ofstream file;
    std::size_t last_round = 0;

    explicit TrajectoryWriter(const std::string& path) : file(path) {
        if (!file) throw std::runtime_error("cannot write '" + path + "'");
        file << "step,vertex,x0,x1,x2,min_edge_dist\n";
        file << std::setprecision(17);
    }

    void operator()(std::size_t round, std::size_t step, const PointCloud& x, double min_dist,
                    const std::vector<std::size_t>& labels) {
        if (round != last_round) {
            file << "# round " << round << " on " << x.count << " vertices\n";
            last_round = round;
        }
        for (std::size_t j = 0; j < x.count; ++j) {
            file << step << ',' << labels[j];
            for (std::size_t i = 0; i < 3; ++i)
                file << ',' << (i < x.dim ? x.at(i, j) : 0.0);
            file << ',' << min_dist << '\n';
        }
    }
};

} // namespace detail_cli

// Parses and runs one command line (program name excluded). Reports go to
// `out` or the --out file; diagnostics to `err`. Usage errors exit 2,
// runtime failures 1; heuristic verdicts, including Unknown, are exit 0.
inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    const auto t0 = std::chrono::steady_clock::now();
    auto wall_ms = [&t0]() {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
            .count();
    };

    CLI::App app{"spectrum-refinement isomorphism testing and gravitational clique search"};
    app.require_subcommand(1);
    app.fallthrough();  // app-level flags like --out may follow the subcommand
    std::string out_path;
    app.add_option("--out", out_path, "write the JSON report here instead of stdout")
        ->configurable(false);

    std::uint64_t seed = env_default_seed();

    // --- iso ---------------------------------------------------------------
    auto* iso = app.add_subcommand("iso", "spectrum-refinement isomorphism test on two graphs");
    std::string iso_a, iso_b, iso_mode = "poly", iso_partition;
    RefineConfig iso_cfg;
    iso->add_option("a", iso_a, "first DIMACS graph file")->required();
    iso->add_option("b", iso_b, "second DIMACS graph file")->required();
    iso->add_option("--mode", iso_mode, "poly or meta")
        ->check(CLI::IsMember({"poly", "meta"}));
    iso->add_option("--seed", seed, "random seed (default GRIF_SEED or 0)");
    iso->add_option("--max-steps", iso_cfg.max_steps, "step budget (0 = n^2)");
    iso->add_option("--meta-terms", iso_cfg.meta_terms, "meta-powers per meta-polynomial");
    iso->add_option("--meta-factor-bound", iso_cfg.meta_factor_bound,
                    "max factors per meta-power");
    iso->add_option("--partition", iso_partition,
                    "vertex partition file (meta mode): one block of 0-based indices per line");

    // --- clique ------------------------------------------------------------
    auto* clique = app.add_subcommand("clique", "gravitational-contraction clique heuristic");
    std::string clique_file, clique_dump;
    GravityParams clique_params;
    clique->add_option("graph", clique_file, "DIMACS graph file")->required();
    detail_cli::add_gravity_flags(clique, clique_params);
    clique->add_option("--seed", seed, "random seed (echoed in the report)");
    clique->add_option("--dump-trajectory", clique_dump, "write a per-step CSV trajectory here");

    // --- sat ---------------------------------------------------------------
    auto* sat = app.add_subcommand("sat", "clique-reduction SAT heuristic on a DIMACS CNF");
    std::string sat_file;
    GravityParams sat_params;
    sat->add_option("cnf", sat_file, "DIMACS CNF file")->required();
    detail_cli::add_gravity_flags(sat, sat_params);
    sat->add_option("--seed", seed, "random seed (echoed in the report)");

    // --- glue --------------------------------------------------------------
    auto* glue = app.add_subcommand("glue", "bipartite gluing of two graphs");
    std::string glue_a, glue_b, glue_file;
    glue->add_option("a", glue_a, "first DIMACS graph file")->required();
    glue->add_option("b", glue_b, "second DIMACS graph file")->required();
    glue->add_option("--file", glue_file, "also write the glued graph to this file");

    // --- gen ---------------------------------------------------------------
    auto* gen_cmd = app.add_subcommand("gen", "emit instances (graphs, graph pairs, CNFs)");
    std::string gen_kind, gen_file, gen_file_b;
    std::size_t gen_n = 8, gen_k = 3, gen_vars = 20, gen_clauses = 20, gen_size = 3, gen_occ = 3;
    double gen_density = 0.5;
    gen_cmd
        ->add_option("kind", gen_kind,
                     "cycle|path|complete|random|pair|regular|petersen|shrikhande|rook4|cnf")
        ->required()
        ->check(CLI::IsMember({"cycle", "path", "complete", "random", "pair", "regular",
                               "petersen", "shrikhande", "rook4", "cnf"}));
    gen_cmd->add_option("--n", gen_n, "vertex count");
    gen_cmd->add_option("--k", gen_k, "regular degree");
    gen_cmd->add_option("--density", gen_density, "edge density");
    gen_cmd->add_option("--vars", gen_vars, "CNF variable count");
    gen_cmd->add_option("--clauses", gen_clauses, "CNF clause count");
    gen_cmd->add_option("--max-clause-size", gen_size, "CNF clause size bound");
    gen_cmd->add_option("--max-occurrence", gen_occ, "CNF per-variable occurrence bound");
    gen_cmd->add_option("--seed", seed, "random seed");
    gen_cmd->add_option("--file", gen_file, "write the instance to this file");
    gen_cmd->add_option("--file-b", gen_file_b, "second output file (kind pair)");

    // --- oracle ------------------------------------------------------------
    auto* oracle_cmd = app.add_subcommand("oracle", "exact brute-force solvers");
    oracle_cmd->require_subcommand(1);
    auto* oracle_iso = oracle_cmd->add_subcommand("iso", "exact isomorphism witness search");
    std::string oiso_a, oiso_b;
    oracle_iso->add_option("a", oiso_a)->required();
    oracle_iso->add_option("b", oiso_b)->required();
    auto* oracle_clique = oracle_cmd->add_subcommand("clique", "exact maximum clique");
    std::string oclique_file;
    oracle_clique->add_option("graph", oclique_file)->required();
    auto* oracle_sat = oracle_cmd->add_subcommand("sat", "exhaustive SAT (<= 24 variables)");
    std::string osat_file;
    oracle_sat->add_option("cnf", osat_file)->required();

    // --- sweep -------------------------------------------------------------
    auto* sweep = app.add_subcommand("sweep", "scan gravity parameter grids against the oracle");
    std::vector<std::string> sweep_graphs;
    std::vector<double> sweep_g{1.0}, sweep_g1{0.3}, sweep_s{1.0}, sweep_s1{1.0},
        sweep_eps{0.001};
    std::vector<std::size_t> sweep_steps{0};
    std::size_t sweep_n = 16, sweep_instances = 20;
    double sweep_density = 0.5;
    sweep->add_option("--graphs", sweep_graphs, "DIMACS graph files to use as instances");
    sweep->add_option("--n", sweep_n, "random instance size (when no --graphs)");
    sweep->add_option("--density", sweep_density, "random instance density");
    sweep->add_option("--instances", sweep_instances, "random instance count");
    sweep->add_option("--seed", seed, "random seed for instance generation");
    sweep->add_option("--g", sweep_g, "gravitation values")->delimiter(',');
    sweep->add_option("--g1", sweep_g1, "anti-gravitation values")->delimiter(',');
    sweep->add_option("--s", sweep_s, "attraction exponents")->delimiter(',');
    sweep->add_option("--s1", sweep_s1, "repulsion exponents")->delimiter(',');
    sweep->add_option("--eps", sweep_eps, "step scales")->delimiter(',');
    sweep->add_option("--steps", sweep_steps, "step counts (0 = 5*n)")->delimiter(',');

    try {
        std::reverse(args.begin(), args.end());
        app.parse(std::move(args));
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    const ReportSink sink{out_path, &out};

    try {
        Json rep;
        if (*iso) {
            const std::string text_a = read_file(iso_a), text_b = read_file(iso_b);
            const Graph a = parse_dimacs_graph(text_a), b = parse_dimacs_graph(text_b);
            iso_cfg.mode = iso_mode == "meta" ? RefineMode::metapolynomial
                                              : RefineMode::polynomial;
            iso_cfg.seed = seed;
            if (!iso_partition.empty()) {
                if (iso_cfg.mode != RefineMode::metapolynomial)
                    throw CLI::ValidationError("--partition requires --mode meta");
                iso_cfg.partition = parse_partition(read_file(iso_partition));
            }
            const IsoVerdict<F61> v = iso_test<F61>(a, b, iso_cfg);
            rep["command"] = "iso";
            rep["inputs"] = {{iso_a, fnv1a_hex(text_a)}, {iso_b, fnv1a_hex(text_b)}};
            rep["seed"] = seed;
            rep["parameters"] = {{"mode", iso_mode},
                                 {"max_steps", iso_cfg.max_steps},
                                 {"meta_terms", iso_cfg.meta_terms},
                                 {"meta_factor_bound", iso_cfg.meta_factor_bound},
                                 {"partitioned", !iso_partition.empty()}};
            rep["result"] = verdict_json(v);
            rep["log"] = {{"sp_trajectory", v.sp_history},
                          {"ring_steps_from", v.ring_history_start}};
        } else if (*clique) {
            const std::string text = read_file(clique_file);
            const Graph g = parse_dimacs_graph(text);
            clique_params.validate();
            CliqueRun run;
            if (!clique_dump.empty()) {
                detail_cli::TrajectoryWriter writer(clique_dump);
                run = gravity_clique_run(g, clique_params, std::ref(writer));
            } else {
                run = gravity_clique_run(g, clique_params);
            }
            rep["command"] = "clique";
            rep["inputs"] = {{clique_file, fnv1a_hex(text)}};
            rep["seed"] = seed;
            rep["parameters"] = detail_cli::gravity_params_json(clique_params, g.vertex_count());
            rep["result"] = {{"clique", run.clique}, {"size", run.clique.size()}};
            rep["log"] = {{"rounds", detail_cli::rounds_json(run.rounds)}};
        } else if (*sat) {
            const std::string text = read_file(sat_file);
            const CnfFormula f = parse_dimacs_cnf(text);
            sat_params.validate();
            const SatResult res = sat_solve(f, sat_params);
            rep["command"] = "sat";
            rep["inputs"] = {{sat_file, fnv1a_hex(text)}};
            rep["seed"] = seed;
            std::size_t literal_count = 0;
            for (const auto& clause : f.clauses) literal_count += clause.size();
            rep["parameters"] = detail_cli::gravity_params_json(sat_params, literal_count);
            Json result;
            result["verdict"] = res.sat ? "sat" : "unknown";
            result["clique_size"] = res.clique.size();
            result["clause_count"] = f.clauses.size();
            if (res.sat) {
                Json assignment = Json::array();
                for (bool v : res.assignment) assignment.push_back(v);
                result["assignment"] = std::move(assignment);
            }
            rep["result"] = std::move(result);
            rep["log"] = {{"rounds", detail_cli::rounds_json(res.rounds)}};
        } else if (*glue) {
            const std::string text_a = read_file(glue_a), text_b = read_file(glue_b);
            const Graph a = parse_dimacs_graph(text_a), b = parse_dimacs_graph(text_b);
            const Graph glued = bipartite_glue(a, b);
            const std::string dimacs = emit_dimacs_graph(glued);
            if (!glue_file.empty()) write_file(glue_file, dimacs);
            rep["command"] = "glue";
            rep["inputs"] = {{glue_a, fnv1a_hex(text_a)}, {glue_b, fnv1a_hex(text_b)}};
            rep["seed"] = seed;
            rep["parameters"] = Json::object();
            rep["result"] = {{"vertices", glued.vertex_count()},
                             {"edges", glued.edge_count()},
                             {"dimacs", dimacs}};
            rep["log"] = Json::object();
        } else if (*gen_cmd) {
            Rng rng(seed);
            Json result;
            auto emit_graph = [&](const Graph& g) {
                const std::string dimacs = emit_dimacs_graph(g);
                if (!gen_file.empty()) write_file(gen_file, dimacs);
                result["vertices"] = g.vertex_count();
                result["edges"] = g.edge_count();
                result["dimacs"] = dimacs;
            };
            if (gen_kind == "cycle") emit_graph(gen::cycle(gen_n));
            else if (gen_kind == "path") emit_graph(gen::path(gen_n));
            else if (gen_kind == "complete") emit_graph(gen::complete(gen_n));
            else if (gen_kind == "random") emit_graph(gen::erdos_renyi(gen_n, gen_density, rng));
            else if (gen_kind == "regular") emit_graph(gen::random_regular(gen_n, gen_k, rng));
            else if (gen_kind == "petersen") emit_graph(gen::petersen());
            else if (gen_kind == "shrikhande") emit_graph(gen::shrikhande());
            else if (gen_kind == "rook4") emit_graph(gen::rook4());
            else if (gen_kind == "pair") {
                const auto [g, h, pi] = gen::random_graph_pair(gen_n, gen_density, seed);
                const std::string da = emit_dimacs_graph(g), db = emit_dimacs_graph(h);
                if (!gen_file.empty()) write_file(gen_file, da);
                if (!gen_file_b.empty()) write_file(gen_file_b, db);
                result["vertices"] = g.vertex_count();
                result["edges"] = g.edge_count();
                result["dimacs_a"] = da;
                result["dimacs_b"] = db;
                result["permutation"] = pi.images();
            } else {  // cnf
                const CnfFormula f =
                    random_cnf_bounded(gen_vars, gen_clauses, gen_size, gen_occ, rng);
                const std::string text = emit_dimacs_cnf(f);
                if (!gen_file.empty()) write_file(gen_file, text);
                result["vars"] = f.num_vars;
                result["clauses"] = f.clauses.size();
                result["dimacs"] = text;
            }
            rep["command"] = "gen";
            rep["inputs"] = Json::object();
            rep["seed"] = seed;
            rep["parameters"] = {{"kind", gen_kind}};
            rep["result"] = std::move(result);
            rep["log"] = Json::object();
        } else if (*oracle_cmd) {
            Json result;
            Json inputs = Json::object();
            std::string sub;
            if (*oracle_iso) {
                sub = "iso";
                const std::string ta = read_file(oiso_a), tb = read_file(oiso_b);
                inputs[oiso_a] = fnv1a_hex(ta);
                inputs[oiso_b] = fnv1a_hex(tb);
                const auto witness =
                    oracle::brute_force_isomorphism(parse_dimacs_graph(ta), parse_dimacs_graph(tb));
                result["isomorphic"] = witness.permutation.has_value();
                if (witness.permutation) result["permutation"] = witness.permutation->images();
            } else if (*oracle_clique) {
                sub = "clique";
                const std::string t = read_file(oclique_file);
                inputs[oclique_file] = fnv1a_hex(t);
                const auto best = oracle::max_clique_exact(parse_dimacs_graph(t));
                result["clique"] = best;
                result["size"] = best.size();
            } else {
                sub = "sat";
                const std::string t = read_file(osat_file);
                inputs[osat_file] = fnv1a_hex(t);
                const auto assignment = oracle::exhaustive_sat(parse_dimacs_cnf(t));
                result["satisfiable"] = assignment.has_value();
                if (assignment) {
                    Json arr = Json::array();
                    for (bool v : *assignment) arr.push_back(v);
                    result["assignment"] = std::move(arr);
                }
            }
            rep["command"] = "oracle " + sub;
            rep["inputs"] = std::move(inputs);
            rep["seed"] = seed;
            rep["parameters"] = Json::object();
            rep["result"] = std::move(result);
            rep["log"] = Json::object();
        } else if (*sweep) {
            std::vector<Graph> instances;
            Json inputs = Json::object();
            if (!sweep_graphs.empty()) {
                for (const auto& path : sweep_graphs) {
                    const std::string t = read_file(path);
                    inputs[path] = fnv1a_hex(t);
                    instances.push_back(parse_dimacs_graph(t));
                }
            } else {
                Rng rng(seed);
                for (std::size_t i = 0; i < sweep_instances; ++i) {
                    Rng inst = rng.child(i);
                    instances.push_back(gen::erdos_renyi(sweep_n, sweep_density, inst));
                }
            }
            std::vector<std::size_t> optima;
            optima.reserve(instances.size());
            for (const auto& g : instances)
                optima.push_back(oracle::max_clique_exact(g).size());

            Json grid = Json::array();
            for (double g : sweep_g)
                for (double g1 : sweep_g1)
                    for (double s : sweep_s)
                        for (double s1 : sweep_s1)
                            for (double eps : sweep_eps)
                                for (std::size_t steps : sweep_steps) {
                                    GravityParams p{g, g1, s, s1, eps, steps, 1e-6};
                                    p.validate();
                                    std::size_t exact = 0;
                                    for (std::size_t i = 0; i < instances.size(); ++i)
                                        if (gravity_clique(instances[i], p).size() == optima[i])
                                            ++exact;
                                    grid.push_back(
                                        {{"g", g},
                                         {"g1", g1},
                                         {"s", s},
                                         {"s1", s1},
                                         {"eps", eps},
                                         {"steps", steps},
                                         {"exact", exact},
                                         {"total", instances.size()},
                                         {"rate", static_cast<double>(exact) /
                                                      static_cast<double>(instances.size())}});
                                }
            std::size_t best = 0;
            for (std::size_t i = 1; i < grid.size(); ++i)
                if (grid[i]["exact"].get<std::size_t>() > grid[best]["exact"].get<std::size_t>())
                    best = i;
            Json best_entry = grid.empty() ? Json() : grid[best];
            rep["command"] = "sweep";
            rep["inputs"] = std::move(inputs);
            rep["seed"] = seed;
            rep["parameters"] = {{"instances", instances.size()},
                                 {"n", sweep_n},
                                 {"density", sweep_density}};
            rep["result"] = {{"grid", std::move(grid)}, {"best", std::move(best_entry)}};
            rep["log"] = Json::object();
        }
        rep["wall_time_ms"] = wall_ms();
        sink.emit(rep);
        return 0;
    } catch (const CLI::ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace cli
} // namespace grif
