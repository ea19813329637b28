// Integer-programming model builders for the sequence (time-indexed) and
// representatives formulations, LP/MST text emission, warm starts, an internal
// feasibility evaluator, and optional shelling out to an external solver.

#ifndef CGC_IPGEN_HPP
#define CGC_IPGEN_HPP

#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "cgc/bounds.hpp"
#include "cgc/coloring.hpp"
#include "cgc/graph.hpp"

namespace cgc {

enum class ModelKind { standard, representatives };

const char* model_kind_name(ModelKind kind);
ModelKind model_kind_from_name(const std::string& name);

struct LinTerm {
    double coef = 0.0;
    int var = 0;  // index into IpModel::variables
};

struct IpConstraint {
    std::string name;
    std::vector<LinTerm> terms;
    char sense = 'L';  // 'L' <=, 'E' =, 'G' >=
    double rhs = 0.0;
};

// All variables are binary. Declaration order is the emission order, which is
// what makes write_lp deterministic.
struct IpModel {
    std::string name;
    std::vector<std::string> variables;
    std::unordered_map<std::string, int> index;
    std::vector<LinTerm> objective;  // maximized
    std::vector<IpConstraint> constraints;
    std::map<std::string, double> warm_start;  // nonzero entries only

    int add_variable(const std::string& var_name);
    int variable(const std::string& var_name) const;  // throws std::out_of_range
    bool has_variable(const std::string& var_name) const;
};

// Variable naming scheme shared with solution files.
std::string z_name(int v, int k, int t);    // z_<v>_<k>_<t>
std::string w_name(int k);                  // w_<k>
std::string rep_name(int u, int v, int t);  // Z_<rep>_<member>_<t>
std::string y_name(int u, int v);           // y_<u>_<v>

// Time-indexed model: z_vkt = vertex v takes color k at time t (k in K_vt),
// w_k = color k used. Maximizes the number of used colors subject to proper
// coloring, one vertex per time slot, the greedy (Grundy) property, and
// connected growth.
// pre: g connected, n >= 1.
IpModel emit_standard(const Graph& g, const ColorSets& cs);

// Representatives model: Z_uvt = u represents v at time t (u <= v, v in the
// closed anti-neighborhood of u), y_uv = u's color precedes v's. Maximizes the
// number of representatives (= colors) under the same structure, without
// color-permutation symmetry.
// pre: g connected, n >= 1.
IpModel emit_representatives(const Graph& g, const ColorSets& cs);

// CPLEX-LP text: objective, constraints in declaration order, Bounds header,
// Binaries listing, End. Byte-identical across runs for the same model.
std::string write_lp(const IpModel& m);

// "<variable> <value>" lines, one per map entry, in map (lexicographic) order.
std::string write_mst(const std::map<std::string, double>& assignment);

// Nonzero variable assignment encoding the given connected greedy coloring.
// standard: z_v_k_t per sequence position and w_k per used color;
// representatives: the minimum-index vertex of each color class represents the
// class members at their sequence times, y ordered by first color use.
// Throws std::invalid_argument naming the vertex whose color exceeds the
// model's color sets.
std::map<std::string, double> warm_start_from(const Graph& g, const ColorSets& cs,
                                              const VertexSequence& s, const Coloring& c,
                                              ModelKind kind);

double objective_value(const IpModel& m, const std::map<std::string, double>& assignment);

// Names of constraints the assignment violates (absent variables read as 0).
// Empty result = feasible. The in-process check that keeps the test suite
// independent of any installed solver.
std::vector<std::string> violated_constraints(const IpModel& m,
                                              const std::map<std::string, double>& assignment,
                                              double tol = 1e-6);

struct SolveResult {
    std::string status;  // optimal | feasible | infeasible | unbounded | timeout | unavailable
    double objective = 0.0;
    std::map<std::string, double> assignment;
    std::string output;  // raw captured solver output
};

// Solver failure with the captured output attached.
class SolveError : public std::runtime_error {
public:
    SolveError(const std::string& message, std::string captured)
        : std::runtime_error(message), output(std::move(captured)) {}

    std::string output;
};

// Writes model.lp (and model.mst when a warm start is attached) to a fresh
// temp directory, substitutes {model}/{mst}/{timeout} into the command
// template, runs it through the shell, and parses stdout lines of the form
//   status <word>
//   objective <number>
//   <variable> <value>
// Empty command or exit 127 (command not found) -> status "unavailable".
// Any other failure or unparseable output -> SolveError.
SolveResult solve_external(const IpModel& m, const std::string& solver_command,
                           double time_limit);

}  // namespace cgc

#endif
