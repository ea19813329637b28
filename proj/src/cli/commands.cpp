#include "commands.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "cgc/bounds.hpp"
#include "cgc/brkga.hpp"
#include "cgc/coloring.hpp"
#include "cgc/exact.hpp"
#include "cgc/graph.hpp"
#include "cgc/heuristics.hpp"
#include "cgc/ipgen.hpp"
#include "cgc/localsearch.hpp"
#include "cgc/metrics.hpp"
#include "cgc/rng.hpp"

namespace cgc::cli {

namespace {

using nlohmann::json;

std::string format_eta(double eta) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%g", eta);
    return buf;
}

std::string format_fixed(double x, int digits = 2) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", digits, x);
    return buf;
}

json instance_info(const std::string& path, const Graph& g) {
    json info;
    info["file"] = path;
    info["n"] = g.n;
    info["m"] = g.m;
    if (g.n >= 2) info["density"] = density(g);
    return info;
}

json sequence_to_json(const VertexSequence& s) {
    return json(s.order);
}

// per-vertex colors for vertices 1..n
json coloring_to_json(const Coloring& c) {
    return json(std::vector<int>(c.color.begin() + 1, c.color.end()));
}

void emit_report(const json& report, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << report.dump(2) << "\n";
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot write " + out_path);
    out << report.dump(2) << "\n";
}

// The connected problem is defined on connected graphs; disconnected inputs
// are repaired and the repair recorded in the report.
Graph prepare_connected(const Graph& g, json& report) {
    if (is_connected(g)) {
        report["connectified"] = false;
        return g;
    }
    int added = 0;
    Graph fixed = connectify(g, &added);
    report["connectified"] = true;
    report["edges_added"] = added;
    return fixed;
}

struct GenOptions {
    std::string cls = "rand";
    int n = 10;
    double eta = 0.5;
    int count = 5;
    std::uint64_t seed = 1;
    std::string out_dir = ".";
};

int cmd_gen(const GenOptions& opt) {
    const GraphClass cls = graph_class_from_name(opt.cls);
    const std::string group = opt.cls + "_" + std::to_string(opt.n) + "_" + format_eta(opt.eta);
    std::filesystem::create_directories(opt.out_dir);

    json manifest;
    manifest["format"] = "cgc-manifest";
    manifest["version"] = 1;
    manifest["group"] = group;
    manifest["class"] = opt.cls;
    manifest["n"] = opt.n;
    manifest["eta"] = opt.eta;
    manifest["count"] = opt.count;
    manifest["seed"] = opt.seed;
    manifest["instances"] = json::array();

    for (int i = 1; i <= opt.count; ++i) {
        InstanceSpec spec;
        spec.cls = cls;
        spec.n = opt.n;
        spec.eta = opt.eta;
        spec.seed = mix_seed(opt.seed, static_cast<std::uint64_t>(i));
        const Graph g = generate(spec);
        const std::string file = group + "_" + std::to_string(i) + ".col";
        const std::string path = (std::filesystem::path(opt.out_dir) / file).string();
        std::ofstream out(path);
        if (!out) throw std::runtime_error("cannot write " + path);
        out << write_dimacs(g);

        json entry;
        entry["file"] = file;
        entry["seed"] = spec.seed;
        entry["n"] = g.n;
        entry["m"] = g.m;
        entry["connected"] = is_connected(g);
        manifest["instances"].push_back(entry);
    }

    const std::string manifest_path =
        (std::filesystem::path(opt.out_dir) / (group + "_manifest.json")).string();
    std::ofstream out(manifest_path);
    if (!out) throw std::runtime_error("cannot write " + manifest_path);
    out << manifest.dump(2) << "\n";
    std::cout << "wrote " << opt.count << " instances and " << manifest_path << "\n";
    return 0;
}

struct SolveOptions {
    std::string instance;
    std::string algo = "brkga-rls";
    std::string mode = "connected";
    std::uint64_t seed = 1;
    double time_limit = 10.0;
    long long max_generations = 0;
    int population = 0;
    double population_factor = 0.0;  // 0 = per-algorithm default
    double elite_fraction = 0.30;
    double mutant_fraction = 0.10;
    double elite_inheritance = 0.60;
    long long reset_threshold = 2000;
    int ls_count = 5;
    int exact_limit = 10;
    std::string out;
};

BrkgaParams brkga_params_for(const std::string& algo, const SolveOptions& opt, Mode mode) {
    BrkgaParams params;
    if (algo == "brkga-rls") {
        params.population_factor = 1.7;
        params.ls_enabled = true;
        params.reset_enabled = true;
    } else if (algo == "brkga-b") {
        params.population_factor = 3.0;
        params.ls_enabled = false;
        params.reset_enabled = false;
    } else {
        throw std::invalid_argument("unknown algorithm: " + algo);
    }
    if (opt.population_factor > 0) params.population_factor = opt.population_factor;
    params.population_size = opt.population;
    params.elite_fraction = opt.elite_fraction;
    params.mutant_fraction = opt.mutant_fraction;
    params.elite_inheritance = opt.elite_inheritance;
    params.reset_threshold = opt.reset_threshold;
    params.ls_count = opt.ls_count;
    params.time_limit = opt.time_limit;
    params.max_generations = opt.max_generations;
    params.mode = mode;
    params.seed = opt.seed;
    return params;
}

json params_to_json(const BrkgaParams& p, int n) {
    json out;
    out["population_size"] = p.population_size;
    out["population_factor"] = p.population_factor;
    out["elite_fraction"] = p.elite_fraction;
    out["mutant_fraction"] = p.mutant_fraction;
    out["elite_inheritance"] = p.elite_inheritance;
    out["reset_threshold"] = p.reset_threshold;
    out["reset_enabled"] = p.reset_enabled;
    out["ls_count"] = p.ls_count;
    out["ls_enabled"] = p.ls_enabled;
    out["time_limit"] = p.time_limit;
    out["max_generations"] = p.max_generations;
    out["mode"] = mode_name(p.mode);
    out["seed"] = p.seed;
    out["n"] = n;
    return out;
}

json run_stats_to_json(const RunStats& stats) {
    json result;
    result["value"] = stats.best_value;
    result["sequence"] = sequence_to_json(stats.best_sequence);
    result["time_to_best"] = stats.time_to_best;
    result["generations"] = stats.generations;
    result["resets"] = stats.resets;
    result["ls_invocations"] = stats.ls_invocations;
    json events = json::array();
    for (const RunEvent& e : stats.events) {
        json je;
        je["generation"] = e.generation;
        je["kind"] = e.kind;
        je["value"] = e.value;
        events.push_back(je);
    }
    result["events"] = events;
    result["event_log"] = event_log_to_string(stats);
    return result;
}

// name -> sequence for the named construction heuristic; connected-family
// names require a connected graph (callers repair first)
std::pair<VertexSequence, Coloring> run_heuristic(const Graph& g, const std::string& name) {
    if (name == "cmindf") {
        VertexSequence s = connected_smallest_degree_first(g);
        return {s, first_fit(g, s)};
    }
    if (name == "cmdf") {
        VertexSequence s = connected_max_degree_first(g);
        return {s, first_fit(g, s)};
    }
    if (name == "dsatur") return dsatur_sequence(g);
    VertexSequence s = plain_greedy_sequence(g, plain_criterion_from_name(name));
    return {s, first_fit(g, s)};
}

bool is_connected_family(const std::string& name) {
    return name == "cmindf" || name == "cmdf" || name == "dsatur";
}

int cmd_solve(const SolveOptions& opt) {
    const Mode mode = opt.mode == "plain" ? Mode::plain : Mode::connected;
    Graph g = parse_dimacs_file(opt.instance);

    json report;
    report["command"] = "solve";
    report["instance"] = instance_info(opt.instance, g);
    report["algorithm"] = opt.algo;
    report["mode"] = opt.mode;
    report["seed"] = opt.seed;
    report["connectified"] = false;
    if (mode == Mode::connected) g = prepare_connected(g, report);

    if (opt.algo.rfind("heuristic:", 0) == 0) {
        const std::string name = opt.algo.substr(10);
        auto [seq, coloring] = run_heuristic(g, name);
        report["result"]["value"] = coloring.used_colors;
        report["result"]["sequence"] = sequence_to_json(seq);
        report["result"]["coloring"] = coloring_to_json(coloring);
        emit_report(report, opt.out);
        return 0;
    }
    if (opt.algo == "exact") {
        const ExactResult res = mode == Mode::connected ? brute_gamma_c(g, opt.exact_limit)
                                                        : brute_gamma(g, opt.exact_limit);
        report["result"]["value"] = res.value;
        report["result"]["sequence"] = sequence_to_json(res.witness);
        report["result"]["coloring"] = coloring_to_json(first_fit(g, res.witness));
        emit_report(report, opt.out);
        return 0;
    }

    const BrkgaParams params = brkga_params_for(opt.algo, opt, mode);
    const RunStats stats = run(g, params);
    BrkgaParams resolved = params;
    if (resolved.population_size == 0)
        resolved.population_size =
            std::max(3, static_cast<int>(std::lround(resolved.population_factor * g.n)));
    report["params"] = params_to_json(resolved, g.n);
    report["result"] = run_stats_to_json(stats);
    report["result"]["coloring"] = coloring_to_json(first_fit(g, stats.best_sequence));
    emit_report(report, opt.out);
    return 0;
}

struct BoundsOptions {
    std::string instance;
    int stair_limit = 20;
    std::string out;
};

int cmd_bounds(const BoundsOptions& opt) {
    const Graph g = parse_dimacs_file(opt.instance);
    const BoundsReport bounds = compute_bounds(g, opt.stair_limit);

    json report;
    report["command"] = "bounds";
    report["instance"] = instance_info(opt.instance, g);
    report["max_degree_plus_one"] = g.max_degree() + 1;
    report["delta2_plus_one"] = bounds.delta2_plus_one;
    report["psi"] = bounds.psi_global;
    report["stair_limit"] = opt.stair_limit;
    if (bounds.stair_factor)
        report["stair_factor"] = *bounds.stair_factor;
    else
        report["stair_factor"] = nullptr;
    report["best"] = bounds.best;
    emit_report(report, opt.out);
    return 0;
}

struct ExactOptions {
    std::string instance;
    std::string measure = "gamma-c";
    int limit = 0;  // 0 = the measure's default budget
    std::string out;
};

int cmd_exact(const ExactOptions& opt) {
    Graph g = parse_dimacs_file(opt.instance);

    json report;
    report["command"] = "exact";
    report["instance"] = instance_info(opt.instance, g);
    report["measure"] = opt.measure;
    report["connectified"] = false;

    if (opt.measure == "gamma-c") {
        g = prepare_connected(g, report);
        const ExactResult res = brute_gamma_c(g, opt.limit > 0 ? opt.limit : 10);
        report["value"] = res.value;
        report["sequence"] = sequence_to_json(res.witness);
    } else if (opt.measure == "gamma") {
        const ExactResult res = brute_gamma(g, opt.limit > 0 ? opt.limit : 9);
        report["value"] = res.value;
        report["sequence"] = sequence_to_json(res.witness);
    } else if (opt.measure == "chi") {
        report["value"] = brute_chromatic(g, opt.limit > 0 ? opt.limit : 12);
    } else {
        throw std::invalid_argument("unknown measure: " + opt.measure);
    }
    emit_report(report, opt.out);
    return 0;
}

struct HeuristicOptions {
    std::string instance;
    std::string name = "dsatur";
    std::string out;
};

int cmd_heuristic(const HeuristicOptions& opt) {
    Graph g = parse_dimacs_file(opt.instance);

    json report;
    report["command"] = "heuristic";
    report["instance"] = instance_info(opt.instance, g);
    report["name"] = opt.name;
    report["connectified"] = false;
    if (is_connected_family(opt.name)) g = prepare_connected(g, report);

    auto [seq, coloring] = run_heuristic(g, opt.name);
    report["value"] = coloring.used_colors;
    report["sequence"] = sequence_to_json(seq);
    report["coloring"] = coloring_to_json(coloring);
    report["connected_sequence"] = is_connected_sequence(g, seq);
    emit_report(report, opt.out);
    return 0;
}

struct LsOptions {
    std::string instance;
    std::string sequence;
    std::string mode = "connected";
    std::string out;
};

int cmd_ls(const LsOptions& opt) {
    const Graph g = parse_dimacs_file(opt.instance);
    const Mode mode = opt.mode == "plain" ? Mode::plain : Mode::connected;

    VertexSequence seq;
    std::string cleaned = opt.sequence;
    for (char& c : cleaned)
        if (c == ',') c = ' ';
    std::istringstream in(cleaned);
    int v;
    while (in >> v) seq.order.push_back(v);
    if (!is_permutation(seq, g.n))
        throw std::invalid_argument("sequence is not a permutation of 1.." + std::to_string(g.n));

    const int initial = first_fit(g, seq).used_colors;
    const LocalSearchResult res = local_search(g, seq, mode);

    json report;
    report["command"] = "ls";
    report["instance"] = instance_info(opt.instance, g);
    report["mode"] = opt.mode;
    report["initial_value"] = initial;
    report["value"] = res.value;
    report["sequence"] = sequence_to_json(res.sequence);
    report["coloring"] = coloring_to_json(res.coloring);
    report["accepted_moves"] = res.accepted_moves;
    emit_report(report, opt.out);
    return 0;
}

struct ExportOptions {
    std::string instance;
    std::string model = "both";
    std::string out_dir = ".";
    bool no_warm_start = false;
    bool solve = false;
    std::string solver_cmd;
    double time_limit = 60.0;
    int stair_limit = 20;
    std::string out;
};

int cmd_export_ip(const ExportOptions& opt) {
    Graph g = parse_dimacs_file(opt.instance);

    json report;
    report["command"] = "export-ip";
    report["instance"] = instance_info(opt.instance, g);
    report["connectified"] = false;
    g = prepare_connected(g, report);

    const BoundsReport bounds = compute_bounds(g, opt.stair_limit);
    const ColorSets cs = build_color_sets(g, bounds);
    report["color_bound"] = cs.best;

    VertexSequence start_seq;
    Coloring start_coloring;
    if (!opt.no_warm_start) {
        std::tie(start_seq, start_coloring) = warm_start(g, Mode::connected);
        report["warm_start_value"] = start_coloring.used_colors;
        report["warm_start_sequence"] = sequence_to_json(start_seq);
    }

    std::string solver = opt.solver_cmd;
    if (solver.empty() && opt.solve) {
        const char* env = std::getenv("CGC_SOLVER_CMD");
        if (env != nullptr) solver = env;
    }

    std::filesystem::create_directories(opt.out_dir);
    const std::string stem = std::filesystem::path(opt.instance).stem().string();

    std::vector<ModelKind> kinds;
    if (opt.model == "both" || opt.model == "standard") kinds.push_back(ModelKind::standard);
    if (opt.model == "both" || opt.model == "representatives")
        kinds.push_back(ModelKind::representatives);
    if (kinds.empty()) throw std::invalid_argument("unknown model: " + opt.model);

    int exit_code = 0;
    report["models"] = json::object();
    for (ModelKind kind : kinds) {
        IpModel model =
            kind == ModelKind::standard ? emit_standard(g, cs) : emit_representatives(g, cs);
        if (!opt.no_warm_start)
            model.warm_start = warm_start_from(g, cs, start_seq, start_coloring, kind);

        const std::string base = stem + "_" + model_kind_name(kind);
        const std::string lp_path =
            (std::filesystem::path(opt.out_dir) / (base + ".lp")).string();
        std::ofstream lp(lp_path);
        if (!lp) throw std::runtime_error("cannot write " + lp_path);
        lp << write_lp(model);

        json info;
        info["lp_file"] = lp_path;
        info["variables"] = model.variables.size();
        info["constraints"] = model.constraints.size();
        if (!model.warm_start.empty()) {
            const std::string mst_path =
                (std::filesystem::path(opt.out_dir) / (base + ".mst")).string();
            std::ofstream mst(mst_path);
            if (!mst) throw std::runtime_error("cannot write " + mst_path);
            mst << write_mst(model.warm_start);
            info["mst_file"] = mst_path;
            info["warm_start_violations"] = violated_constraints(model, model.warm_start).size();
        }

        if (opt.solve) {
            try {
                const SolveResult res = solve_external(model, solver, opt.time_limit);
                json solved;
                solved["status"] = res.status;
                if (res.status == "optimal" || res.status == "feasible")
                    solved["objective"] = res.objective;
                info["solve"] = solved;
            } catch (const SolveError& e) {
                json solved;
                solved["status"] = "error";
                solved["message"] = e.what();
                solved["output"] = e.output;
                info["solve"] = solved;
                exit_code = 1;
            }
        }
        report["models"][model_kind_name(kind)] = info;
    }
    emit_report(report, opt.out);
    return exit_code;
}

struct BenchOptions {
    std::vector<std::string> manifests;
    std::string algos = "brkga-b,brkga-rls";
    int runs = 5;
    double time_limit = 10.0;
    long long max_generations = 0;
    std::uint64_t seed = 1;
    std::string mode = "connected";
    std::string out = "bench.csv";
};

struct BenchCell {
    bool present = false;
    double mean = 0.0;
    double max = 0.0;
    double ttb_mean = 0.0;
    int runs = 0;
};

std::vector<std::string> split_csv(const std::string& text) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

// one algorithm on one instance: `runs` seeded runs aggregated
BenchCell bench_cell(const Graph& g, const std::string& algo, const BenchOptions& opt,
                     std::uint64_t cell_seed) {
    BenchCell cell;
    cell.runs = opt.runs;

    // construction heuristics and the exact oracle are deterministic: one
    // evaluation covers every run
    if (algo.rfind("heuristic:", 0) == 0 || algo == "exact") {
        double value = 0.0;
        if (algo == "exact") {
            const Mode mode = opt.mode == "plain" ? Mode::plain : Mode::connected;
            value = mode == Mode::connected ? brute_gamma_c(g).value : brute_gamma(g).value;
        } else {
            auto [seq, coloring] = run_heuristic(g, algo.substr(10));
            value = coloring.used_colors;
        }
        cell.present = true;
        cell.mean = value;
        cell.max = value;
        cell.ttb_mean = 0.0;
        return cell;
    }

    double value_sum = 0.0, ttb_sum = 0.0, value_max = 0.0;
    for (int r = 0; r < opt.runs; ++r) {
        const std::uint64_t run_seed = mix_seed(cell_seed, static_cast<std::uint64_t>(r));
        double value = 0.0, ttb = 0.0;
        {
            SolveOptions sopt;
            sopt.algo = algo;
            sopt.mode = opt.mode;
            sopt.time_limit = opt.time_limit;
            sopt.max_generations = opt.max_generations;
            sopt.seed = run_seed;
            const BrkgaParams params =
                brkga_params_for(algo, sopt, opt.mode == "plain" ? Mode::plain : Mode::connected);
            const RunStats stats = run(g, params);
            value = stats.best_value;
            ttb = stats.time_to_best;
        }
        value_sum += value;
        ttb_sum += ttb;
        value_max = std::max(value_max, value);
    }
    cell.present = true;
    cell.mean = value_sum / opt.runs;
    cell.max = value_max;
    cell.ttb_mean = ttb_sum / opt.runs;
    return cell;
}

int cmd_bench(const BenchOptions& opt) {
    const std::vector<std::string> algos = split_csv(opt.algos);
    if (algos.empty()) throw std::invalid_argument("no algorithms given");
    if (opt.runs < 1) throw std::invalid_argument("runs must be at least 1");

    std::ostringstream csv;
    csv << "group,instance,algo,runs,mean,max,ttb_mean,diff_m,diff_x\n";

    // diff columns compare each algorithm against the first listed one, from
    // unrounded means
    const auto diff_cols = [&](const BenchCell& cell, const BenchCell& base,
                               bool is_base) -> std::string {
        if (is_base || !base.present || base.mean == 0.0 || base.max == 0.0) return ",";
        return format_fixed(metric_diff(cell.mean, base.mean)) + "," +
               format_fixed(metric_diff(cell.max, base.max));
    };

    std::uint64_t instance_ordinal = 0;
    for (const std::string& manifest_path : opt.manifests) {
        std::ifstream in(manifest_path);
        if (!in) throw std::runtime_error("cannot read manifest " + manifest_path);
        json manifest = json::parse(in);
        const std::string group = manifest.value("group", manifest_path);
        const auto base_dir = std::filesystem::path(manifest_path).parent_path();

        // group aggregates: per algo, averages over the group's instances
        std::vector<BenchCell> group_sum(algos.size());
        std::vector<int> group_count(static_cast<std::size_t>(algos.size()), 0);

        for (const json& entry : manifest.at("instances")) {
            const std::string file = entry.at("file").get<std::string>();
            const std::string path = (base_dir / file).string();
            ++instance_ordinal;
            if (!std::filesystem::exists(path)) {
                std::cerr << "missing instance file: " << path << " (skipped)\n";
                continue;
            }
            Graph g = parse_dimacs_file(path);
            if (opt.mode == "connected" && !is_connected(g)) g = connectify(g);

            std::vector<BenchCell> cells(algos.size());
            for (std::size_t a = 0; a < algos.size(); ++a) {
                const std::uint64_t cell_seed =
                    mix_seed(mix_seed(opt.seed, instance_ordinal), static_cast<std::uint64_t>(a));
                try {
                    cells[a] = bench_cell(g, algos[a], opt, cell_seed);
                } catch (const BudgetExceeded& e) {
                    std::cerr << "skipping " << algos[a] << " on " << file << ": " << e.what()
                              << "\n";
                    continue;
                }
                group_sum[a].mean += cells[a].mean;
                group_sum[a].max += cells[a].max;
                group_sum[a].ttb_mean += cells[a].ttb_mean;
                group_sum[a].present = true;
                ++group_count[a];
            }
            for (std::size_t a = 0; a < algos.size(); ++a) {
                if (!cells[a].present) continue;
                csv << group << "," << file << "," << algos[a] << "," << cells[a].runs << ","
                    << format_fixed(cells[a].mean) << "," << format_fixed(cells[a].max) << ","
                    << format_fixed(cells[a].ttb_mean) << ","
                    << diff_cols(cells[a], cells[0], a == 0) << "\n";
            }
        }

        std::vector<BenchCell> group_avg(algos.size());
        for (std::size_t a = 0; a < algos.size(); ++a) {
            if (group_count[a] == 0) continue;
            group_avg[a].present = true;
            group_avg[a].mean = group_sum[a].mean / group_count[a];
            group_avg[a].max = group_sum[a].max / group_count[a];
            group_avg[a].ttb_mean = group_sum[a].ttb_mean / group_count[a];
            group_avg[a].runs = opt.runs;
        }
        for (std::size_t a = 0; a < algos.size(); ++a) {
            if (!group_avg[a].present) continue;
            csv << group << ",ALL," << algos[a] << "," << opt.runs << ","
                << format_fixed(group_avg[a].mean) << "," << format_fixed(group_avg[a].max) << ","
                << format_fixed(group_avg[a].ttb_mean) << ","
                << diff_cols(group_avg[a], group_avg[0], a == 0) << "\n";
        }
    }

    if (opt.out.empty()) {
        std::cout << csv.str();
    } else {
        std::ofstream out(opt.out);
        if (!out) throw std::runtime_error("cannot write " + opt.out);
        out << csv.str();
        std::cout << "wrote " << opt.out << "\n";
    }
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args) {
    CLI::App app{"connected Grundy coloring toolkit"};
    app.require_subcommand(1);
    app.set_config("--config", "", "options file (key=value, [subcommand] sections)");

    int exit_code = 0;

    auto gen_opt = std::make_shared<GenOptions>();
    CLI::App* gen = app.add_subcommand("gen", "generate a seeded instance group");
    gen->add_option("--class", gen_opt->cls, "graph class")
        ->check(CLI::IsMember({"rand", "geo", "bip", "cbip"}))
        ->required();
    gen->add_option("--n", gen_opt->n, "vertex count")->check(CLI::PositiveNumber)->required();
    gen->add_option("--eta", gen_opt->eta, "class parameter (edge probability or geometric radius)")
        ->required();
    gen->add_option("--count", gen_opt->count, "instances in the group")
        ->check(CLI::PositiveNumber);
    gen->add_option("--seed", gen_opt->seed, "master seed");
    gen->add_option("--out", gen_opt->out_dir, "output directory");
    gen->callback([gen_opt, &exit_code] { exit_code = cmd_gen(*gen_opt); });

    auto solve_opt = std::make_shared<SolveOptions>();
    CLI::App* solve = app.add_subcommand("solve", "run a solver on one instance");
    solve->add_option("--instance", solve_opt->instance, "DIMACS instance file")->required();
    solve->add_option("--algo", solve_opt->algo,
                      "brkga-rls | brkga-b | heuristic:<name> | exact");
    solve->add_option("--mode", solve_opt->mode, "sequence family")
        ->check(CLI::IsMember({"connected", "plain"}));
    solve->add_option("--seed", solve_opt->seed, "run seed");
    solve->add_option("--time-limit", solve_opt->time_limit, "seconds; <=0 disables");
    solve->add_option("--max-generations", solve_opt->max_generations,
                      "generation budget; >0 enables deterministic runs");
    solve->add_option("--population", solve_opt->population, "population size (0 = factor*n)");
    solve->add_option("--population-factor", solve_opt->population_factor,
                      "population size as a multiple of n (0 = algorithm default)");
    solve->add_option("--elite-fraction", solve_opt->elite_fraction, "elite share");
    solve->add_option("--mutant-fraction", solve_opt->mutant_fraction, "mutant share");
    solve->add_option("--elite-inheritance", solve_opt->elite_inheritance,
                      "child key bias toward the elite parent");
    solve->add_option("--reset-threshold", solve_opt->reset_threshold,
                      "stale generations before a reset");
    solve->add_option("--ls-count", solve_opt->ls_count, "solutions refined per improvement");
    solve->add_option("--exact-limit", solve_opt->exact_limit, "vertex budget for --algo exact");
    solve->add_option("--out", solve_opt->out, "write the JSON report here (default stdout)");
    solve->callback([solve_opt, &exit_code] { exit_code = cmd_solve(*solve_opt); });

    auto bounds_opt = std::make_shared<BoundsOptions>();
    CLI::App* bounds = app.add_subcommand("bounds", "combinatorial upper bounds");
    bounds->add_option("--instance", bounds_opt->instance, "DIMACS instance file")->required();
    bounds->add_option("--stair-limit", bounds_opt->stair_limit,
                       "max n for the exact stair bound");
    bounds->add_option("--out", bounds_opt->out, "write the JSON report here (default stdout)");
    bounds->callback([bounds_opt, &exit_code] { exit_code = cmd_bounds(*bounds_opt); });

    auto exact_opt = std::make_shared<ExactOptions>();
    CLI::App* exact = app.add_subcommand("exact", "brute-force values for small graphs");
    exact->add_option("--instance", exact_opt->instance, "DIMACS instance file")->required();
    exact->add_option("--measure", exact_opt->measure, "gamma-c | gamma | chi")
        ->check(CLI::IsMember({"gamma-c", "gamma", "chi"}));
    exact->add_option("--limit", exact_opt->limit, "vertex budget (0 = measure default)");
    exact->add_option("--out", exact_opt->out, "write the JSON report here (default stdout)");
    exact->callback([exact_opt, &exit_code] { exit_code = cmd_exact(*exact_opt); });

    auto heur_opt = std::make_shared<HeuristicOptions>();
    CLI::App* heur = app.add_subcommand("heuristic", "construction heuristics");
    heur->add_option("--instance", heur_opt->instance, "DIMACS instance file")->required();
    heur->add_option("--name", heur_opt->name, "cmindf | cmdf | dsatur | mdf | amd | sdl")
        ->required();
    heur->add_option("--out", heur_opt->out, "write the JSON report here (default stdout)");
    heur->callback([heur_opt, &exit_code] { exit_code = cmd_heuristic(*heur_opt); });

    auto ls_opt = std::make_shared<LsOptions>();
    CLI::App* ls = app.add_subcommand("ls", "one-shot local search on a given sequence");
    ls->add_option("--instance", ls_opt->instance, "DIMACS instance file")->required();
    ls->add_option("--sequence", ls_opt->sequence, "vertex order, space or comma separated")
        ->required();
    ls->add_option("--mode", ls_opt->mode, "sequence family")
        ->check(CLI::IsMember({"connected", "plain"}));
    ls->add_option("--out", ls_opt->out, "write the JSON report here (default stdout)");
    ls->callback([ls_opt, &exit_code] { exit_code = cmd_ls(*ls_opt); });

    auto export_opt = std::make_shared<ExportOptions>();
    CLI::App* exp = app.add_subcommand("export-ip", "write LP (and warm-start) files");
    exp->add_option("--instance", export_opt->instance, "DIMACS instance file")->required();
    exp->add_option("--model", export_opt->model, "standard | representatives | both")
        ->check(CLI::IsMember({"standard", "representatives", "both"}));
    exp->add_option("--out-dir", export_opt->out_dir, "directory for .lp/.mst files");
    exp->add_flag("--no-warm-start", export_opt->no_warm_start, "skip the heuristic warm start");
    exp->add_flag("--solve", export_opt->solve, "invoke the external solver");
    exp->add_option("--solver-cmd", export_opt->solver_cmd,
                    "command template with {model} {mst} {timeout} (default $CGC_SOLVER_CMD)");
    exp->add_option("--time-limit", export_opt->time_limit, "solver seconds");
    exp->add_option("--stair-limit", export_opt->stair_limit, "max n for the exact stair bound");
    exp->add_option("--out", export_opt->out, "write the JSON report here (default stdout)");
    exp->callback([export_opt, &exit_code] { exit_code = cmd_export_ip(*export_opt); });

    auto bench_opt = std::make_shared<BenchOptions>();
    CLI::App* bench = app.add_subcommand("bench", "batch runs over instance groups");
    bench->add_option("--manifest", bench_opt->manifests, "instance group manifest (repeatable)")
        ->required();
    bench->add_option("--algos", bench_opt->algos,
                      "comma list; first is the diff baseline");
    bench->add_option("--runs", bench_opt->runs, "independent runs per cell");
    bench->add_option("--time-limit", bench_opt->time_limit, "seconds per run");
    bench->add_option("--max-generations", bench_opt->max_generations,
                      "generation budget per run (deterministic mode)");
    bench->add_option("--seed", bench_opt->seed, "master seed");
    bench->add_option("--mode", bench_opt->mode, "sequence family")
        ->check(CLI::IsMember({"connected", "plain"}));
    bench->add_option("--out", bench_opt->out, "CSV output path (empty = stdout)");
    bench->callback([bench_opt, &exit_code] { exit_code = cmd_bench(*bench_opt); });

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("cgc");
    for (const std::string& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const BudgetExceeded& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return exit_code;
}

int run_cli(int argc, char** argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run_cli(args);
}

}  // namespace cgc::cli
