// Biased random-key genetic algorithm: the connected priority-queue decoder,
// the plain (descending-key) decoder, elite/mutant evolution, stale-population
// reset, and local-search injection.

#ifndef CGC_BRKGA_HPP
#define CGC_BRKGA_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "cgc/coloring.hpp"
#include "cgc/graph.hpp"
#include "cgc/heuristics.hpp"
#include "cgc/rng.hpp"

namespace cgc {

// Keys in [0,1), one per vertex (keys[0] unused to keep vertex indexing).
struct RandomKeyVector {
    std::vector<double> keys;  // size n+1

    int size() const { return static_cast<int>(keys.size()) - 1; }
};

struct BrkgaParams {
    int population_size = 0;          // 0 = derive from n at run() entry
    double population_factor = 1.7;   // used when population_size == 0
    double elite_fraction = 0.30;     // p_e
    double mutant_fraction = 0.10;    // p_m
    double elite_inheritance = 0.60;  // rho_e: chance a child key comes from the elite parent
    long long reset_threshold = 2000; // generations without improvement before a reset
    bool reset_enabled = true;
    int ls_count = 5;                 // b: solutions receiving local search per improvement
    double time_limit = 10.0;         // seconds; <= 0 means no time stop
    long long max_generations = 0;    // 0 = unbounded; the deterministic-mode stop
    Mode mode = Mode::connected;
    bool ls_enabled = true;
    std::uint64_t seed = 0;
};

// Throws std::invalid_argument when fractions/sizes are out of range.
void validate_params(const BrkgaParams& p, int n);

struct GenerationPlan {
    int elites = 0, mutants = 0, children = 0;
};

// floor(p_e*p) elites (at least 1, at most p-2), ceil(p_m*p) mutants, rest children.
GenerationPlan plan_generation(int population, double elite_fraction, double mutant_fraction);

struct DecodeResult {
    VertexSequence sequence;
    Coloring coloring;
    int value = 0;
};

// Grow a connected sequence: seed the queue with the global max-key vertex;
// repeatedly dequeue the reached vertex of highest key (ties: lowest index),
// first-fit color it, enqueue newly reached neighbors. O(n log n + m).
// Throws std::invalid_argument on a disconnected graph.
DecodeResult decode_connected(const Graph& g, const RandomKeyVector& x);

// Vertices sorted by key descending (ties: lowest index), first-fit colored.
DecodeResult decode_plain(const Graph& g, const RandomKeyVector& x);

DecodeResult decode(const Graph& g, const RandomKeyVector& x, Mode mode);

// Each key from elite with probability rho_e, else from non_elite.
RandomKeyVector crossover(const RandomKeyVector& elite, const RandomKeyVector& non_elite,
                          double rho_e, Rng& rng);

// Keys strictly decreasing along s: the i-th sequenced vertex (1-based) gets
// (n-i+1)/(n+1). Decoding in the matching mode reproduces s (for connected
// mode, whenever s is connected).
RandomKeyVector encode_sequence(const VertexSequence& s);

struct Individual {
    RandomKeyVector keys;
    int value = 0;
};

// One generation step. `population` must be sorted by value descending (ties by
// insertion order). Output layout is [elites][mutants][children], decoded and
// NOT re-sorted. RNG consumption order: mutants first (n draws each), then per
// child: elite index, non-elite index, n inheritance draws.
std::vector<Individual> evolve(const std::vector<Individual>& population, const Graph& g,
                               const BrkgaParams& params, Rng& rng);

struct RunEvent {
    long long generation = 0;
    std::string kind;  // "init" | "improvement" | "ls" | "reset"
    int value = 0;
};

struct RunStats {
    int best_value = 0;
    VertexSequence best_sequence;
    double time_to_best = 0.0;  // seconds; wall-clock, excluded from the event log
    long long generations = 0;
    long long resets = 0;
    long long ls_invocations = 0;
    std::vector<RunEvent> events;
};

// Deterministic given (g, params, seed) when the stop is max_generations; the
// event log (not time_to_best) is the byte-comparable record.
std::string event_log_to_string(const RunStats& stats);

RunStats run(const Graph& g, const BrkgaParams& params);

}  // namespace cgc

#endif
