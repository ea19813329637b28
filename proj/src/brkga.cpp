#include "cgc/brkga.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <queue>
#include <sstream>
#include <stdexcept>

#include "cgc/localsearch.hpp"

namespace cgc {

namespace {

int resolve_population(const BrkgaParams& p, int n) {
    if (p.population_size > 0) return p.population_size;
    return std::max(3, static_cast<int>(std::lround(p.population_factor * n)));
}

RandomKeyVector random_vector(int n, Rng& rng) {
    RandomKeyVector x;
    x.keys.assign(static_cast<std::size_t>(n) + 1, 0.0);
    for (int v = 1; v <= n; ++v) x.keys[v] = rng.uniform01();
    return x;
}

}  // namespace

void validate_params(const BrkgaParams& p, int n) {
    const int pop = resolve_population(p, n);
    if (pop < 3) throw std::invalid_argument("population must have at least 3 individuals");
    if (p.elite_fraction <= 0 || p.mutant_fraction < 0 ||
        p.elite_fraction + p.mutant_fraction >= 1.0)
        throw std::invalid_argument("need elite_fraction > 0 and elite+mutant fractions < 1");
    if (p.elite_inheritance <= 0.5 || p.elite_inheritance >= 1.0)
        throw std::invalid_argument("elite_inheritance must lie in (0.5, 1)");
    if (p.ls_count < 1) throw std::invalid_argument("ls_count must be at least 1");
    if (p.reset_threshold < 1) throw std::invalid_argument("reset_threshold must be at least 1");
    if (p.time_limit <= 0 && p.max_generations <= 0)
        throw std::invalid_argument("need a stop condition: time_limit or max_generations");
}

GenerationPlan plan_generation(int population, double elite_fraction, double mutant_fraction) {
    GenerationPlan plan;
    plan.elites = static_cast<int>(std::floor(elite_fraction * population));
    plan.elites = std::clamp(plan.elites, 1, population - 2);
    plan.mutants = static_cast<int>(std::ceil(mutant_fraction * population));
    plan.mutants = std::min(plan.mutants, population - plan.elites);
    plan.children = population - plan.elites - plan.mutants;
    return plan;
}

DecodeResult decode_connected(const Graph& g, const RandomKeyVector& x) {
    if (x.size() != g.n) throw std::invalid_argument("key vector length != n");

    DecodeResult res;
    res.coloring = empty_coloring(g.n);
    if (g.n == 0) return res;

    // max-heap on key, ties broken toward the lower vertex index
    struct Entry {
        double key;
        int vertex;
        bool operator<(const Entry& o) const {
            if (key != o.key) return key < o.key;
            return vertex > o.vertex;
        }
    };
    std::priority_queue<Entry> queue;
    std::vector<char> reached(static_cast<std::size_t>(g.n) + 1, 0);

    int start = 1;
    for (int v = 2; v <= g.n; ++v)
        if (x.keys[v] > x.keys[start]) start = v;
    queue.push({x.keys[start], start});
    reached[start] = 1;

    res.sequence.order.reserve(static_cast<std::size_t>(g.n));
    while (!queue.empty()) {
        const int v = queue.top().vertex;
        queue.pop();
        res.sequence.order.push_back(v);
        res.coloring.color[v] = color_vertex(g, v, res.coloring);
        res.coloring.used_colors = std::max(res.coloring.used_colors, res.coloring.color[v]);
        for (int u : g.adj[v]) {
            if (reached[u]) continue;
            reached[u] = 1;
            queue.push({x.keys[u], u});
        }
    }
    if (res.sequence.size() != g.n)
        throw std::invalid_argument("decode_connected requires a connected graph");
    res.value = res.coloring.used_colors;
    return res;
}

DecodeResult decode_plain(const Graph& g, const RandomKeyVector& x) {
    if (x.size() != g.n) throw std::invalid_argument("key vector length != n");

    DecodeResult res;
    res.sequence.order.resize(static_cast<std::size_t>(g.n));
    for (int v = 1; v <= g.n; ++v) res.sequence.order[v - 1] = v;
    std::sort(res.sequence.order.begin(), res.sequence.order.end(), [&x](int a, int b) {
        if (x.keys[a] != x.keys[b]) return x.keys[a] > x.keys[b];
        return a < b;
    });
    res.coloring = first_fit(g, res.sequence);
    res.value = res.coloring.used_colors;
    return res;
}

DecodeResult decode(const Graph& g, const RandomKeyVector& x, Mode mode) {
    return mode == Mode::connected ? decode_connected(g, x) : decode_plain(g, x);
}

RandomKeyVector crossover(const RandomKeyVector& elite, const RandomKeyVector& non_elite,
                          double rho_e, Rng& rng) {
    if (elite.size() != non_elite.size()) throw std::invalid_argument("parent length mismatch");
    RandomKeyVector child;
    child.keys.assign(elite.keys.size(), 0.0);
    for (int v = 1; v <= elite.size(); ++v)
        child.keys[v] = rng.bernoulli(rho_e) ? elite.keys[v] : non_elite.keys[v];
    return child;
}

RandomKeyVector encode_sequence(const VertexSequence& s) {
    const int n = s.size();
    RandomKeyVector x;
    x.keys.assign(static_cast<std::size_t>(n) + 1, 0.0);
    for (int i = 1; i <= n; ++i)
        x.keys[s.at_position(i)] = static_cast<double>(n - i + 1) / (n + 1);
    return x;
}

std::vector<Individual> evolve(const std::vector<Individual>& population, const Graph& g,
                               const BrkgaParams& params, Rng& rng) {
    const int pop = static_cast<int>(population.size());
    const GenerationPlan plan =
        plan_generation(pop, params.elite_fraction, params.mutant_fraction);

    std::vector<Individual> next;
    next.reserve(population.size());
    for (int i = 0; i < plan.elites; ++i) next.push_back(population[i]);
    for (int i = 0; i < plan.mutants; ++i) {
        Individual ind;
        ind.keys = random_vector(g.n, rng);
        ind.value = decode(g, ind.keys, params.mode).value;
        next.push_back(std::move(ind));
    }
    for (int i = 0; i < plan.children; ++i) {
        const int ei = static_cast<int>(rng.below(static_cast<std::uint64_t>(plan.elites)));
        const int ni = plan.elites +
                       static_cast<int>(rng.below(static_cast<std::uint64_t>(pop - plan.elites)));
        Individual ind;
        ind.keys = crossover(population[ei].keys, population[ni].keys,
                             params.elite_inheritance, rng);
        ind.value = decode(g, ind.keys, params.mode).value;
        next.push_back(std::move(ind));
    }
    return next;
}

std::string event_log_to_string(const RunStats& stats) {
    std::ostringstream out;
    out << "best " << stats.best_value << "\n";
    out << "generations " << stats.generations << "\n";
    out << "resets " << stats.resets << "\n";
    out << "ls_invocations " << stats.ls_invocations << "\n";
    for (const RunEvent& e : stats.events)
        out << e.generation << " " << e.kind << " " << e.value << "\n";
    return out.str();
}

RunStats run(const Graph& g, const BrkgaParams& params) {
    if (g.n < 1) throw std::invalid_argument("run: empty graph");
    validate_params(params, g.n);
    if (params.mode == Mode::connected && !is_connected(g))
        throw std::invalid_argument("run: connected mode requires a connected graph");

    BrkgaParams cfg = params;
    cfg.population_size = resolve_population(params, g.n);
    const GenerationPlan plan =
        plan_generation(cfg.population_size, cfg.elite_fraction, cfg.mutant_fraction);

    const auto start_time = std::chrono::steady_clock::now();
    const auto elapsed = [&start_time] {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_time)
            .count();
    };
    const auto out_of_time = [&] {
        return cfg.time_limit > 0 && elapsed() >= cfg.time_limit;
    };

    Rng rng(mix_seed(cfg.seed, 0));
    RunStats stats;

    std::vector<Individual> population;
    population.reserve(static_cast<std::size_t>(cfg.population_size));
    for (int i = 0; i < cfg.population_size; ++i) {
        Individual ind;
        ind.keys = random_vector(g.n, rng);
        ind.value = decode(g, ind.keys, cfg.mode).value;
        population.push_back(std::move(ind));
    }
    const auto by_value_desc = [](const Individual& a, const Individual& b) {
        return a.value > b.value;
    };
    std::stable_sort(population.begin(), population.end(), by_value_desc);

    stats.best_value = population.front().value;
    stats.best_sequence = decode(g, population.front().keys, cfg.mode).sequence;
    stats.time_to_best = elapsed();
    stats.events.push_back({0, "init", stats.best_value});

    long long stale = 0;
    while (!out_of_time() &&
           (cfg.max_generations <= 0 || stats.generations < cfg.max_generations)) {
        population = evolve(population, g, cfg, rng);
        std::stable_sort(population.begin(), population.end(), by_value_desc);
        ++stats.generations;

        bool improved = population.front().value > stats.best_value;
        if (improved) {
            stats.best_value = population.front().value;
            stats.best_sequence = decode(g, population.front().keys, cfg.mode).sequence;
            stats.time_to_best = elapsed();
            stats.events.push_back({stats.generations, "improvement", stats.best_value});
            stale = 0;
        } else {
            ++stale;
        }

        if (improved && cfg.ls_enabled) {
            // local search on the best solution plus ls_count-1 distinct random
            // elites; the refined solutions are re-encoded over the worst slots
            const int b = std::min(cfg.ls_count, plan.elites);
            std::vector<int> targets{0};
            if (b > 1) {
                std::vector<int> pool;
                for (int i = 1; i < plan.elites; ++i) pool.push_back(i);
                for (int i = 0; i < b - 1; ++i) {
                    const std::size_t j =
                        static_cast<std::size_t>(i) + rng.below(pool.size() - i);
                    std::swap(pool[i], pool[j]);
                    targets.push_back(pool[i]);
                }
            }
            std::vector<Individual> refined;
            for (int t : targets) {
                const DecodeResult d = decode(g, population[t].keys, cfg.mode);
                const LocalSearchResult ls = local_search(g, d.sequence, cfg.mode,
                                                          StopCheck(out_of_time));
                ++stats.ls_invocations;
                Individual ind;
                ind.keys = encode_sequence(ls.sequence);
                ind.value = ls.value;
                refined.push_back(std::move(ind));
            }
            for (std::size_t i = 0; i < refined.size(); ++i)
                population[population.size() - refined.size() + i] = std::move(refined[i]);
            std::stable_sort(population.begin(), population.end(), by_value_desc);
            if (population.front().value > stats.best_value) {
                stats.best_value = population.front().value;
                stats.best_sequence = decode(g, population.front().keys, cfg.mode).sequence;
                stats.time_to_best = elapsed();
                stats.events.push_back({stats.generations, "ls", stats.best_value});
                stale = 0;
            }
        }

        if (cfg.reset_enabled && stale >= cfg.reset_threshold) {
            population.clear();
            Individual keeper;
            keeper.keys = encode_sequence(stats.best_sequence);
            keeper.value = decode(g, keeper.keys, cfg.mode).value;
            population.push_back(std::move(keeper));
            for (int i = 1; i < cfg.population_size; ++i) {
                Individual ind;
                ind.keys = random_vector(g.n, rng);
                ind.value = decode(g, ind.keys, cfg.mode).value;
                population.push_back(std::move(ind));
            }
            std::stable_sort(population.begin(), population.end(), by_value_desc);
            ++stats.resets;
            stale = 0;
            stats.events.push_back({stats.generations, "reset", stats.best_value});
        }
    }
    return stats;
}

}  // namespace cgc
