// Drives the full argument parser in-process through run_cli: instance
// generation determinism, report shapes of every subcommand, config files,
// the bench CSV schema, exit codes, and the export-ip golden files.

#include "doctest.h"

#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

#include "commands.hpp"
#include "json.hpp"

#include "cgc/coloring.hpp"
#include "cgc/exact.hpp"
#include "cgc/graph.hpp"
#include "cgc/heuristics.hpp"
#include "cgc/metrics.hpp"
#include "cgc/rng.hpp"
#include "test_util.hpp"

using namespace cgc;
using namespace cgc::testutil;
using nlohmann::json;

namespace {

int run(const std::vector<std::string>& args) { return cli::run_cli(args); }

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

json load_json(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    return json::parse(in);
}

// fresh scratch directory per test case, removed on scope exit
struct TempDir {
    std::filesystem::path path;
    explicit TempDir(const std::string& tag) {
        static int counter = 0;
        path = std::filesystem::temp_directory_path() /
               ("cgc_cli_" + std::to_string(::getpid()) + "_" + tag + "_" +
                std::to_string(++counter));
        std::filesystem::remove_all(path);
        std::filesystem::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path, ec);
    }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

std::string write_instance(const TempDir& dir, const std::string& name, const Graph& g) {
    const std::string p = dir.file(name);
    std::ofstream out(p);
    REQUIRE(out.good());
    out << write_dimacs(g);
    return p;
}

// six-vertex five-cycle with a chord vertex: gamma_c = 3, gamma = 4, chi = 3
Graph example6() {
    return make_graph(6, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 1}, {1, 6}, {2, 6}});
}

VertexSequence sequence_from(const json& arr) {
    VertexSequence s;
    for (const json& v : arr) s.order.push_back(v.get<int>());
    return s;
}

// Command template for the bundled MILP script (scipy/HiGHS backed).
std::string bundled_solver() {
    return "python3 " + data_path("../../tools/lp_solve.py") + " {model} {mst} {timeout}";
}

bool solver_available() {
    static int cached = -1;
    if (cached < 0) {
        int rc = std::system("python3 -c 'import scipy.optimize' >/dev/null 2>&1");
        cached = rc == 0 ? 1 : 0;
    }
    return cached == 1;
}

}  // namespace

TEST_CASE("gen writes byte-identical instances per seed plus a manifest") {
    TempDir a("gen_a"), b("gen_b");
    const std::vector<std::string> args{"gen",     "--class", "rand", "--n",    "8",
                                        "--eta",   "0.4",     "--count", "3",   "--seed",
                                        "7",       "--out",   ""};
    auto with_out = [&](const TempDir& d) {
        std::vector<std::string> v = args;
        v.back() = d.path.string();
        return v;
    };
    CHECK(run(with_out(a)) == 0);
    CHECK(run(with_out(b)) == 0);

    json manifest = load_json(a.file("rand_8_0.4_manifest.json"));
    CHECK(manifest["format"] == "cgc-manifest");
    CHECK(manifest["version"] == 1);
    CHECK(manifest["group"] == "rand_8_0.4");
    CHECK(manifest["class"] == "rand");
    CHECK(manifest["n"] == 8);
    CHECK(manifest["eta"] == doctest::Approx(0.4));
    CHECK(manifest["count"] == 3);
    CHECK(manifest["seed"] == 7);
    REQUIRE(manifest["instances"].size() == 3);

    for (int i = 1; i <= 3; ++i) {
        const json& entry = manifest["instances"][static_cast<std::size_t>(i - 1)];
        const std::string file = "rand_8_0.4_" + std::to_string(i) + ".col";
        CHECK(entry["file"] == file);
        CHECK(entry["seed"] == mix_seed(7, static_cast<std::uint64_t>(i)));

        // same seed, same bytes; and the file round-trips as DIMACS
        CHECK(read_file(a.file(file)) == read_file(b.file(file)));
        Graph g = parse_dimacs_file(a.file(file));
        CHECK(g.n == 8);
        CHECK(entry["n"] == g.n);
        CHECK(entry["m"] == g.m);
        CHECK(entry["connected"] == is_connected(g));
    }
}

TEST_CASE("solve with brkga reports resolved params and a per-seed-stable log") {
    TempDir dir("solve");
    const std::string inst = write_instance(dir, "ex6.col", example6());

    auto solve_to = [&](const std::string& out, const std::string& seed) {
        return run({"solve", "--instance", inst, "--algo", "brkga-rls", "--seed", seed,
                    "--max-generations", "40", "--time-limit", "0", "--out", dir.file(out)});
    };
    CHECK(solve_to("r1.json", "5") == 0);
    CHECK(solve_to("r2.json", "5") == 0);

    json r1 = load_json(dir.file("r1.json"));
    json r2 = load_json(dir.file("r2.json"));

    CHECK(r1["command"] == "solve");
    CHECK(r1["algorithm"] == "brkga-rls");
    CHECK(r1["mode"] == "connected");
    CHECK(r1["seed"] == 5);
    CHECK(r1["connectified"] == false);
    CHECK(r1["instance"]["n"] == 6);
    CHECK(r1["instance"]["m"] == 7);

    // population 0 resolves to factor * n
    CHECK(r1["params"]["population_size"] == 10);  // lround(1.7 * 6)
    CHECK(r1["params"]["population_factor"] == doctest::Approx(1.7));
    CHECK(r1["params"]["reset_enabled"] == true);
    CHECK(r1["params"]["ls_enabled"] == true);
    CHECK(r1["params"]["mode"] == "connected");
    CHECK(r1["params"]["n"] == 6);

    // chi == gamma_c == 3 pins every connected decode to exactly 3
    CHECK(r1["result"]["value"] == 3);
    VertexSequence best = sequence_from(r1["result"]["sequence"]);
    CHECK(is_permutation(best, 6));
    CHECK(first_fit(example6(), best).used_colors == 3);
    CHECK(r1["result"]["coloring"].size() == 6);
    REQUIRE(r1["result"]["events"].size() >= 1);
    CHECK(r1["result"]["events"][0]["kind"] == "init");

    // identical run: byte-identical event log (wall clock never enters it)
    const std::string log1 = r1["result"]["event_log"].get<std::string>();
    CHECK(log1 == r2["result"]["event_log"].get<std::string>());
    CHECK(log1.rfind("best ", 0) == 0);
    CHECK(log1.find('.') == std::string::npos);

    // baseline variant flips the factor and toggles off ls/reset
    CHECK(run({"solve", "--instance", inst, "--algo", "brkga-b", "--seed", "5",
               "--max-generations", "5", "--time-limit", "0", "--out", dir.file("b.json")}) == 0);
    json rb = load_json(dir.file("b.json"));
    CHECK(rb["params"]["population_factor"] == doctest::Approx(3.0));
    CHECK(rb["params"]["population_size"] == 18);
    CHECK(rb["params"]["reset_enabled"] == false);
    CHECK(rb["params"]["ls_enabled"] == false);
    CHECK(rb["result"]["value"] == 3);
}

TEST_CASE("solve dispatches construction heuristics and the exact oracle") {
    TempDir dir("solve_disp");
    const std::string inst = write_instance(dir, "ex6.col", example6());
    const Graph g = example6();

    CHECK(run({"solve", "--instance", inst, "--algo", "heuristic:dsatur", "--out",
               dir.file("h.json")}) == 0);
    json h = load_json(dir.file("h.json"));
    auto [dseq, dcol] = dsatur_sequence(g);
    CHECK(h["result"]["value"] == dcol.used_colors);
    CHECK(sequence_from(h["result"]["sequence"]).order == dseq.order);

    CHECK(run({"solve", "--instance", inst, "--algo", "exact", "--out", dir.file("e.json")}) ==
          0);
    json e = load_json(dir.file("e.json"));
    CHECK(e["result"]["value"] == 3);
    VertexSequence wit = sequence_from(e["result"]["sequence"]);
    CHECK(is_connected_sequence(g, wit));
    CHECK(first_fit(g, wit).used_colors == 3);

    CHECK(run({"solve", "--instance", inst, "--algo", "nope"}) == 1);
}

TEST_CASE("exact subcommand: three measures, budget refusals exit 2") {
    TempDir dir("exact");
    const std::string inst = write_instance(dir, "ex6.col", example6());

    auto value_of = [&](const std::string& measure) {
        const std::string out = dir.file(measure + ".json");
        REQUIRE(run({"exact", "--instance", inst, "--measure", measure, "--out", out}) == 0);
        return load_json(out)["value"].get<int>();
    };
    CHECK(value_of("gamma-c") == 3);
    CHECK(value_of("gamma") == 4);
    CHECK(value_of("chi") == 3);

    // witness in the report achieves the reported value
    json gc = load_json(dir.file("gamma-c.json"));
    CHECK(first_fit(example6(), sequence_from(gc["sequence"])).used_colors == 3);

    // n above the budget is a refusal, not an error
    CHECK(run({"exact", "--instance", inst, "--measure", "gamma-c", "--limit", "3"}) == 2);
    Graph p12 = make_graph(12, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7},
                                {7, 8}, {8, 9}, {9, 10}, {10, 11}, {11, 12}});
    const std::string big = write_instance(dir, "p12.col", p12);
    CHECK(run({"exact", "--instance", big, "--measure", "gamma-c"}) == 2);
    CHECK(run({"solve", "--instance", big, "--algo", "exact"}) == 2);
}

TEST_CASE("bounds subcommand reports the full chain") {
    TempDir dir("bounds");
    const std::string inst = write_instance(dir, "ex6.col", example6());

    CHECK(run({"bounds", "--instance", inst, "--out", dir.file("b.json")}) == 0);
    json b = load_json(dir.file("b.json"));
    CHECK(b["command"] == "bounds");
    // gamma = 4 and max degree 3 squeeze every bound to exactly 4
    CHECK(b["max_degree_plus_one"] == 4);
    CHECK(b["delta2_plus_one"] == 4);
    CHECK(b["psi"] == 4);
    CHECK(b["stair_factor"] == 4);
    CHECK(b["best"] == 4);
    CHECK(b["instance"]["density"] == doctest::Approx(7.0 / 15.0));

    // a stair limit below n suppresses the exact bound
    CHECK(run({"bounds", "--instance", inst, "--stair-limit", "3", "--out",
               dir.file("b3.json")}) == 0);
    json b3 = load_json(dir.file("b3.json"));
    CHECK(b3["stair_factor"].is_null());
    CHECK(b3["best"] == 4);
}

TEST_CASE("heuristic subcommand pins sdl and records connectify repairs") {
    TempDir dir("heur");
    Graph p4 = make_graph(4, {{1, 2}, {2, 3}, {3, 4}});
    const std::string inst = write_instance(dir, "p4.col", p4);

    CHECK(run({"heuristic", "--instance", inst, "--name", "sdl", "--out", dir.file("s.json")}) ==
          0);
    json s = load_json(dir.file("s.json"));
    CHECK(s["command"] == "heuristic");
    CHECK(s["value"] == 2);
    CHECK(sequence_from(s["sequence"]).order == std::vector<int>{4, 3, 2, 1});
    CHECK(s["connected_sequence"] == true);
    CHECK(s["connectified"] == false);

    // connected-family heuristics repair disconnected inputs and say so
    Graph split = make_graph(4, {{1, 2}, {3, 4}});
    const std::string dis = write_instance(dir, "split.col", split);
    CHECK(run({"heuristic", "--instance", dis, "--name", "cmindf", "--out",
               dir.file("c.json")}) == 0);
    json c = load_json(dir.file("c.json"));
    CHECK(c["connectified"] == true);
    CHECK(c["edges_added"] == 1);
    CHECK(c["value"].get<int>() >= 1);
    CHECK(c["connected_sequence"] == true);
}

TEST_CASE("ls subcommand improves a pinned sequence and validates input") {
    TempDir dir("ls");
    // seven vertices; relocating one vertex lifts the greedy value from 3 to 4
    Graph g = make_graph(7, {{1, 2}, {1, 4}, {1, 7}, {2, 4}, {2, 7}, {3, 6}, {3, 7},
                             {4, 5}, {5, 7}, {6, 7}});
    const std::string inst = write_instance(dir, "g7.col", g);

    CHECK(run({"ls", "--instance", inst, "--sequence", "3,6,7,1,2,4,5", "--out",
               dir.file("up.json")}) == 0);
    json up = load_json(dir.file("up.json"));
    CHECK(up["initial_value"] == 3);
    CHECK(up["value"] == 4);
    CHECK(up["accepted_moves"].get<int>() >= 1);
    VertexSequence out_seq = sequence_from(up["sequence"]);
    CHECK(is_connected_sequence(g, out_seq));
    CHECK(first_fit(g, out_seq).used_colors == 4);

    // already-optimal input is a fixpoint with zero accepted moves
    Graph p6 = make_graph(6, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}});
    const std::string path_inst = write_instance(dir, "p6.col", p6);
    CHECK(run({"ls", "--instance", path_inst, "--sequence", "1 2 3 4 5 6", "--out",
               dir.file("fix.json")}) == 0);
    json fix = load_json(dir.file("fix.json"));
    CHECK(fix["initial_value"] == 2);
    CHECK(fix["value"] == 2);
    CHECK(fix["accepted_moves"] == 0);
    CHECK(sequence_from(fix["sequence"]).order == std::vector<int>{1, 2, 3, 4, 5, 6});

    // not a permutation; and a non-connected start in connected mode
    CHECK(run({"ls", "--instance", path_inst, "--sequence", "1,2,3"}) == 1);
    CHECK(run({"ls", "--instance", path_inst, "--sequence", "2,1,4,3,6,5"}) == 1);
    CHECK(run({"ls", "--instance", path_inst, "--sequence", "2,1,4,3,6,5", "--mode", "plain",
               "--out", dir.file("plain.json")}) == 0);
    CHECK(load_json(dir.file("plain.json"))["value"].get<int>() >= 2);
}

TEST_CASE("export-ip writes golden-identical LP files and model summaries") {
    TempDir dir("export");
    const std::string inst = write_instance(dir, "k2.col", make_graph(2, {{1, 2}}));
    const std::string out_dir = dir.file("ip");

    CHECK(run({"export-ip", "--instance", inst, "--out-dir", out_dir, "--out",
               dir.file("r.json")}) == 0);
    json r = load_json(dir.file("r.json"));
    CHECK(r["command"] == "export-ip");
    CHECK(r["color_bound"] == 2);
    CHECK(r["warm_start_value"] == 2);

    const json& std_info = r["models"]["standard"];
    CHECK(std_info["variables"] == 8);
    CHECK(std_info["constraints"] == 12);
    CHECK(std_info["warm_start_violations"] == 0);
    const json& rep_info = r["models"]["representatives"];
    CHECK(rep_info["variables"] == 6);
    CHECK(rep_info["constraints"] == 12);
    CHECK(rep_info["warm_start_violations"] == 0);

    // the files on disk match the frozen goldens byte for byte
    CHECK(read_file(std_info["lp_file"].get<std::string>()) ==
          read_file(data_path("k2_standard.lp")));
    CHECK(read_file(rep_info["lp_file"].get<std::string>()) ==
          read_file(data_path("k2_representatives.lp")));
    CHECK(std::filesystem::exists(std_info["mst_file"].get<std::string>()));
    CHECK(std::filesystem::exists(rep_info["mst_file"].get<std::string>()));

    // single model, no warm start
    CHECK(run({"export-ip", "--instance", inst, "--model", "standard", "--no-warm-start",
               "--out-dir", out_dir, "--out", dir.file("nws.json")}) == 0);
    json nws = load_json(dir.file("nws.json"));
    CHECK(nws["models"].size() == 1);
    CHECK_FALSE(nws["models"]["standard"].contains("mst_file"));
    CHECK_FALSE(nws.contains("warm_start_value"));

    CHECK(run({"export-ip", "--instance", inst, "--model", "bogus"}) != 0);

    // a command that cannot exec reports unavailable without failing the run
    CHECK(run({"export-ip", "--instance", inst, "--out-dir", out_dir, "--solve",
               "--solver-cmd", "this-cmd-does-not-exist-77 {model}", "--out",
               dir.file("un.json")}) == 0);
    json un = load_json(dir.file("un.json"));
    CHECK(un["models"]["standard"]["solve"]["status"] == "unavailable");

    if (solver_available()) {
        CHECK(run({"export-ip", "--instance", inst, "--out-dir", out_dir, "--solve",
                   "--solver-cmd", bundled_solver(), "--out", dir.file("sv.json")}) == 0);
        json sv = load_json(dir.file("sv.json"));
        for (const char* model : {"standard", "representatives"}) {
            CHECK(sv["models"][model]["solve"]["status"] == "optimal");
            CHECK(sv["models"][model]["solve"]["objective"] == doctest::Approx(2.0));
        }
    } else {
        MESSAGE("scipy unavailable: skipping solver integration");
    }
}

TEST_CASE("bench emits the documented CSV schema, deterministically") {
    TempDir dir("bench");
    CHECK(run({"gen", "--class", "rand", "--n", "7", "--eta", "0.5", "--count", "2", "--seed",
               "11", "--out", dir.path.string()}) == 0);
    const std::string manifest = dir.file("rand_7_0.5_manifest.json");

    auto bench_to = [&](const std::string& out) {
        return run({"bench", "--manifest", manifest, "--algos", "heuristic:dsatur,exact",
                    "--runs", "2", "--seed", "3", "--out", dir.file(out)});
    };
    CHECK(bench_to("a.csv") == 0);
    CHECK(bench_to("b.csv") == 0);

    const std::string csv = read_file(dir.file("a.csv"));
    CHECK(csv == read_file(dir.file("b.csv")));

    std::vector<std::string> lines;
    {
        std::istringstream in(csv);
        std::string line;
        while (std::getline(in, line)) lines.push_back(line);
    }
    REQUIRE(lines.size() == 7);  // header + 2 instances x 2 algos + 2 group rows
    CHECK(lines[0] == "group,instance,algo,runs,mean,max,ttb_mean,diff_m,diff_x");

    auto split_fields = [](const std::string& line) {
        std::vector<std::string> fields;
        std::string field;
        std::istringstream in(line);
        while (std::getline(in, field, ',')) fields.push_back(field);
        return fields;
    };

    // first pass: baseline (dsatur) mean per instance column
    std::map<std::string, double> base_mean;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const std::vector<std::string> f = split_fields(lines[i]);
        if (f.size() > 4 && f[2] == "heuristic:dsatur") base_mean[f[1]] = std::stod(f[4]);
    }

    for (std::size_t i = 1; i < lines.size(); ++i) {
        CAPTURE(lines[i]);
        const std::vector<std::string> fields = split_fields(lines[i]);
        REQUIRE(fields.size() >= 7);
        CHECK(fields[0] == "rand_7_0.5");
        CHECK((fields[2] == "heuristic:dsatur" || fields[2] == "exact"));
        CHECK(fields[3] == "2");
        CHECK(std::stod(fields[4]) >= 1.0);                          // mean
        CHECK(std::stod(fields[5]) >= std::stod(fields[4]) - 1e-9);  // max >= mean
        CHECK(std::stod(fields[6]) == 0.0);  // deterministic algos: ttb 0.00
        if (fields[2] == "heuristic:dsatur") {
            // baseline rows leave the diff columns empty; the trailing empty
            // token after the final comma never materializes
            CHECK(fields.size() == 8);
            CHECK(fields[7].empty());
        } else {
            REQUIRE(fields.size() == 9);
            const double expect = metric_diff(std::stod(fields[4]), base_mean.at(fields[1]));
            CHECK(std::stod(fields[7]) == doctest::Approx(expect).epsilon(0.02));
        }
    }

    // the two instance rows for exact carry the true gamma_c
    for (int i = 1; i <= 2; ++i) {
        Graph g = parse_dimacs_file(dir.file("rand_7_0.5_" + std::to_string(i) + ".col"));
        if (!is_connected(g)) g = connectify(g);
        const std::string needle =
            "rand_7_0.5,rand_7_0.5_" + std::to_string(i) + ".col,exact,2," +
            std::to_string(brute_gamma_c(g).value) + ".00";
        CHECK(csv.find(needle) != std::string::npos);
    }
}

TEST_CASE("config files feed subcommand options; command line wins") {
    TempDir dir("config");
    const std::string inst = write_instance(dir, "ex6.col", example6());
    const std::string report = dir.file("r.json");
    const std::string cfg = dir.file("cfg.ini");
    {
        std::ofstream out(cfg);
        out << "[exact]\n"
            << "instance=" << inst << "\n"
            << "measure=gamma-c\n"
            << "out=" << report << "\n";
    }

    CHECK(run({"--config", cfg, "exact"}) == 0);
    CHECK(load_json(report)["value"] == 3);

    // explicit flags override config values
    CHECK(run({"--config", cfg, "exact", "--measure", "gamma"}) == 0);
    CHECK(load_json(report)["value"] == 4);
}

TEST_CASE("deviation metrics match their worked examples") {
    CHECK(metric_dev(11, 10) == doctest::Approx(10.0));
    CHECK(metric_dev(10, 10) == doctest::Approx(0.0));
    CHECK(metric_dev(9, 10) == doctest::Approx(-10.0));
    CHECK(metric_diff(3.3, 3.0) == doctest::Approx(10.0));
    CHECK_THROWS_AS(metric_dev(1.0, 0.0), std::domain_error);
    CHECK_THROWS_AS(metric_diff(1.0, 0.0), std::domain_error);
}

TEST_CASE("parse failures and bad inputs produce distinct exit codes") {
    TempDir dir("exit");
    CHECK(run({"frobnicate"}) != 0);
    CHECK(run({"gen", "--bogus-flag"}) != 0);
    CHECK(run({"gen", "--n", "5"}) != 0);  // missing required --class/--eta
    CHECK(run({"solve", "--instance", dir.file("missing.col")}) == 1);
    CHECK(run({"bench", "--manifest", dir.file("missing.json")}) == 1);
}
