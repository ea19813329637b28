#include "cgc/ipgen.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <sys/wait.h>

namespace cgc {

const char* model_kind_name(ModelKind kind) {
    return kind == ModelKind::standard ? "standard" : "representatives";
}

ModelKind model_kind_from_name(const std::string& name) {
    if (name == "standard") return ModelKind::standard;
    if (name == "representatives") return ModelKind::representatives;
    throw std::invalid_argument("unknown model kind: " + name);
}

int IpModel::add_variable(const std::string& var_name) {
    auto [it, inserted] = index.emplace(var_name, static_cast<int>(variables.size()));
    if (!inserted) throw std::invalid_argument("duplicate variable: " + var_name);
    variables.push_back(var_name);
    return it->second;
}

int IpModel::variable(const std::string& var_name) const {
    auto it = index.find(var_name);
    if (it == index.end()) throw std::out_of_range("unknown variable: " + var_name);
    return it->second;
}

bool IpModel::has_variable(const std::string& var_name) const {
    return index.find(var_name) != index.end();
}

std::string z_name(int v, int k, int t) {
    return "z_" + std::to_string(v) + "_" + std::to_string(k) + "_" + std::to_string(t);
}

std::string w_name(int k) { return "w_" + std::to_string(k); }

std::string rep_name(int u, int v, int t) {
    return "Z_" + std::to_string(u) + "_" + std::to_string(v) + "_" + std::to_string(t);
}

std::string y_name(int u, int v) {
    return "y_" + std::to_string(u) + "_" + std::to_string(v);
}

namespace {

void require_connected_input(const Graph& g, const char* who) {
    if (g.n < 1) throw std::invalid_argument(std::string(who) + ": empty graph");
    if (!is_connected(g)) throw std::invalid_argument(std::string(who) + ": graph not connected");
}

}  // namespace

IpModel emit_standard(const Graph& g, const ColorSets& cs) {
    require_connected_input(g, "emit_standard");

    IpModel m;
    m.name = "standard";
    const int n = g.n;

    // z variables grouped by vertex, then color, then time
    for (int v = 1; v <= n; ++v)
        for (int k = 1; k <= cs.kv_max[v]; ++k)
            for (int t = k; t <= n; ++t) m.add_variable(z_name(v, k, t));
    for (int k = 1; k <= cs.best; ++k) m.add_variable(w_name(k));

    for (int k = 1; k <= cs.best; ++k) m.objective.push_back({1.0, m.variable(w_name(k))});

    // adjacent vertices never share a color
    for (const auto& [u, v] : g.edges()) {
        const int kmax = std::min(cs.kv_max[u], cs.kv_max[v]);
        for (int k = 1; k <= kmax; ++k) {
            IpConstraint c;
            c.name = "distinct_" + std::to_string(u) + "_" + std::to_string(v) + "_" +
                     std::to_string(k);
            for (int t = k; t <= n; ++t) c.terms.push_back({1.0, m.variable(z_name(u, k, t))});
            for (int t = k; t <= n; ++t) c.terms.push_back({1.0, m.variable(z_name(v, k, t))});
            c.terms.push_back({-1.0, m.variable(w_name(k))});
            c.sense = 'L';
            c.rhs = 0.0;
            m.constraints.push_back(std::move(c));
        }
    }

    // each vertex gets exactly one (color, time)
    for (int v = 1; v <= n; ++v) {
        IpConstraint c;
        c.name = "assign_" + std::to_string(v);
        for (int t = 1; t <= n; ++t)
            for (int k = 1; k <= cs.kvt_max(v, t); ++k)
                c.terms.push_back({1.0, m.variable(z_name(v, k, t))});
        c.sense = 'E';
        c.rhs = 1.0;
        m.constraints.push_back(std::move(c));
    }

    // w_k only when some vertex takes color k
    for (int k = 1; k <= cs.best; ++k) {
        IpConstraint c;
        c.name = "used_" + std::to_string(k);
        c.terms.push_back({1.0, m.variable(w_name(k))});
        for (int v : cs.V_k[k])
            for (int t = k; t <= n; ++t) c.terms.push_back({-1.0, m.variable(z_name(v, k, t))});
        c.sense = 'L';
        c.rhs = 0.0;
        m.constraints.push_back(std::move(c));
    }

    // greedy property: v can hold color k' by time t only after a neighbor
    // took every lower color k beforehand
    for (int v = 1; v <= n; ++v)
        for (int k = 1; k <= cs.kv_max[v]; ++k)
            for (int kp = k + 1; kp <= cs.kv_max[v]; ++kp)
                for (int t = kp; t <= n; ++t) {
                    IpConstraint c;
                    c.name = "greedy_" + std::to_string(v) + "_" + std::to_string(k) + "_" +
                             std::to_string(kp) + "_" + std::to_string(t);
                    for (int tp = kp; tp <= t; ++tp)
                        c.terms.push_back({1.0, m.variable(z_name(v, kp, tp))});
                    for (int u : g.adj[v]) {
                        if (cs.kv_max[u] < k) continue;
                        for (int tp = k; tp <= t - 1; ++tp)
                            c.terms.push_back({-1.0, m.variable(z_name(u, k, tp))});
                    }
                    c.sense = 'L';
                    c.rhs = 0.0;
                    m.constraints.push_back(std::move(c));
                }

    // one vertex per time slot
    for (int t = 1; t <= n; ++t) {
        IpConstraint c;
        c.name = "slot_" + std::to_string(t);
        for (int v = 1; v <= n; ++v)
            for (int k = 1; k <= cs.kvt_max(v, t); ++k)
                c.terms.push_back({1.0, m.variable(z_name(v, k, t))});
        c.sense = 'E';
        c.rhs = 1.0;
        m.constraints.push_back(std::move(c));
    }

    // connected growth: v colored at time t needs an earlier-colored neighbor
    for (int v = 1; v <= n; ++v)
        for (int t = 2; t <= n; ++t) {
            IpConstraint c;
            c.name = "connect_" + std::to_string(v) + "_" + std::to_string(t);
            for (int k = 1; k <= cs.kvt_max(v, t); ++k)
                c.terms.push_back({1.0, m.variable(z_name(v, k, t))});
            for (int u : g.adj[v])
                for (int tp = 1; tp <= t - 1; ++tp)
                    for (int k = 1; k <= cs.kvt_max(u, tp); ++k)
                        c.terms.push_back({-1.0, m.variable(z_name(u, k, tp))});
            c.sense = 'L';
            c.rhs = 0.0;
            m.constraints.push_back(std::move(c));
        }

    return m;
}

IpModel emit_representatives(const Graph& g, const ColorSets& cs) {
    require_connected_input(g, "emit_representatives");

    IpModel m;
    m.name = "representatives";
    const int n = g.n;

    // anti[u] = vertices v >= u representable by u (u itself plus non-neighbors)
    std::vector<std::vector<int>> anti(static_cast<std::size_t>(n) + 1);
    for (int u = 1; u <= n; ++u) {
        anti[u].push_back(u);
        for (int v = u + 1; v <= n; ++v)
            if (!g.has_edge(u, v)) anti[u].push_back(v);
    }
    // rep_of[v] = potential representatives u <= v of v (the transpose of anti)
    std::vector<std::vector<int>> rep_of(static_cast<std::size_t>(n) + 1);
    for (int u = 1; u <= n; ++u)
        for (int v : anti[u]) rep_of[v].push_back(u);

    for (int u = 1; u <= n; ++u)
        for (int v : anti[u])
            for (int t = 1; t <= n; ++t) m.add_variable(rep_name(u, v, t));
    for (int u = 1; u <= n; ++u)
        for (int v = 1; v <= n; ++v)
            if (u != v) m.add_variable(y_name(u, v));

    for (int u = 1; u <= n; ++u)
        for (int t = 1; t <= n; ++t) m.objective.push_back({1.0, m.variable(rep_name(u, u, t))});

    // adjacent members of one class would share a color
    for (int u = 1; u <= n; ++u)
        for (std::size_t i = 0; i < anti[u].size(); ++i)
            for (std::size_t j = i + 1; j < anti[u].size(); ++j) {
                const int v = anti[u][i], w = anti[u][j];
                if (!g.has_edge(v, w)) continue;
                IpConstraint c;
                c.name = "conflict_" + std::to_string(u) + "_" + std::to_string(v) + "_" +
                         std::to_string(w);
                for (int t = 1; t <= n; ++t) c.terms.push_back({1.0, m.variable(rep_name(u, v, t))});
                for (int t = 1; t <= n; ++t) c.terms.push_back({1.0, m.variable(rep_name(u, w, t))});
                for (int t = 1; t <= n; ++t)
                    c.terms.push_back({-1.0, m.variable(rep_name(u, u, t))});
                c.sense = 'L';
                c.rhs = 0.0;
                m.constraints.push_back(std::move(c));
            }

    // members untouched by the conflict rows still need their representative active
    for (int u = 1; u <= n; ++u)
        for (int v : anti[u]) {
            if (v == u) continue;
            bool isolated_in_anti = true;
            for (int w : g.adj[v])
                if (w > u && !g.has_edge(u, w)) {  // anti[u] holds only indices above u
                    isolated_in_anti = false;
                    break;
                }
            if (!isolated_in_anti) continue;
            IpConstraint c;
            c.name = "represent_" + std::to_string(u) + "_" + std::to_string(v);
            for (int t = 1; t <= n; ++t) c.terms.push_back({1.0, m.variable(rep_name(u, v, t))});
            for (int t = 1; t <= n; ++t) c.terms.push_back({-1.0, m.variable(rep_name(u, u, t))});
            c.sense = 'L';
            c.rhs = 0.0;
            m.constraints.push_back(std::move(c));
        }

    // every vertex represented exactly once
    for (int v = 1; v <= n; ++v) {
        IpConstraint c;
        c.name = "assign_" + std::to_string(v);
        for (int u : rep_of[v])
            for (int t = 1; t <= n; ++t) c.terms.push_back({1.0, m.variable(rep_name(u, v, t))});
        c.sense = 'E';
        c.rhs = 1.0;
        m.constraints.push_back(std::move(c));
    }

    // greedy property: when p's color precedes u's (y_pu), u may give v its
    // color by time t only after p colored some neighbor of v
    for (int u = 1; u <= n; ++u)
        for (int p = 1; p <= n; ++p) {
            if (p == u) continue;
            for (int v : anti[u])
                for (int t = 2; t <= n; ++t) {
                    IpConstraint c;
                    c.name = "greedy_" + std::to_string(p) + "_" + std::to_string(u) + "_" +
                             std::to_string(v) + "_" + std::to_string(t);
                    for (int tp = 1; tp <= t; ++tp)
                        c.terms.push_back({1.0, m.variable(rep_name(u, v, tp))});
                    for (int w : g.adj[v]) {
                        if (w < p || (w != p && g.has_edge(p, w))) continue;
                        for (int tp = 1; tp <= t - 1; ++tp)
                            c.terms.push_back({-1.0, m.variable(rep_name(p, w, tp))});
                    }
                    c.terms.push_back({1.0, m.variable(y_name(p, u))});
                    c.sense = 'L';
                    c.rhs = 1.0;
                    m.constraints.push_back(std::move(c));
                }
        }

    // at most one vertex per time slot; stacking several at t = 1 would slip
    // past the growth rows, which only exist for t >= 2
    for (int t = 1; t <= n; ++t) {
        IpConstraint c;
        c.name = "slot_" + std::to_string(t);
        for (int u = 1; u <= n; ++u)
            for (int v : anti[u]) c.terms.push_back({1.0, m.variable(rep_name(u, v, t))});
        c.sense = 'L';
        c.rhs = 1.0;
        m.constraints.push_back(std::move(c));
    }

    // connected growth over times
    for (int v = 1; v <= n; ++v)
        for (int t = 2; t <= n; ++t) {
            IpConstraint c;
            c.name = "connect_" + std::to_string(v) + "_" + std::to_string(t);
            for (int u : rep_of[v]) c.terms.push_back({1.0, m.variable(rep_name(u, v, t))});
            for (int vp : g.adj[v])
                for (int u : rep_of[vp])
                    for (int tp = 1; tp <= t - 1; ++tp)
                        c.terms.push_back({-1.0, m.variable(rep_name(u, vp, tp))});
            c.sense = 'L';
            c.rhs = 0.0;
            m.constraints.push_back(std::move(c));
        }

    // two representatives are ordered one way or the other
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) {
            IpConstraint c;
            c.name = "order_" + std::to_string(u) + "_" + std::to_string(v);
            c.terms.push_back({1.0, m.variable(y_name(v, u))});
            c.terms.push_back({1.0, m.variable(y_name(u, v))});
            for (int t = 1; t <= n; ++t) c.terms.push_back({-1.0, m.variable(rep_name(u, u, t))});
            for (int t = 1; t <= n; ++t) c.terms.push_back({-1.0, m.variable(rep_name(v, v, t))});
            c.sense = 'G';
            c.rhs = -1.0;
            m.constraints.push_back(std::move(c));
        }

    // only representatives are ordered
    for (int u = 1; u <= n; ++u)
        for (int v = 1; v <= n; ++v) {
            if (u == v) continue;
            IpConstraint c;
            c.name = "active_" + std::to_string(u) + "_" + std::to_string(v);
            c.terms.push_back({1.0, m.variable(y_name(u, v))});
            c.terms.push_back({1.0, m.variable(y_name(v, u))});
            for (int t = 1; t <= n; ++t) c.terms.push_back({-1.0, m.variable(rep_name(u, u, t))});
            c.sense = 'L';
            c.rhs = 0.0;
            m.constraints.push_back(std::move(c));
        }

    // representative count capped by the combinatorial bound
    {
        IpConstraint c;
        c.name = "total";
        for (int u = 1; u <= n; ++u)
            for (int t = 1; t <= n; ++t) c.terms.push_back({1.0, m.variable(rep_name(u, u, t))});
        c.sense = 'L';
        c.rhs = static_cast<double>(cs.best);
        m.constraints.push_back(std::move(c));
    }

    return m;
}

namespace {

// integral values print without a decimal point
std::string format_number(double x) {
    const double r = std::llround(x);
    if (std::abs(x - r) < 1e-9) return std::to_string(static_cast<long long>(r));
    std::ostringstream out;
    out.precision(12);
    out << x;
    return out.str();
}

void append_wrapped(std::string& out, std::string& line, const std::string& token,
                    std::size_t width = 200) {
    if (line.size() + token.size() + 1 > width) {
        out += line;
        out += "\n";
        line = "     ";
    }
    line += " ";
    line += token;
}

void write_expression(std::string& out, std::string& line, const IpModel& m,
                      const std::vector<LinTerm>& terms) {
    for (const LinTerm& term : terms) {
        std::string token = term.coef < 0 ? "-" : "+";
        const double mag = std::abs(term.coef);
        if (std::abs(mag - 1.0) > 1e-12) token += " " + format_number(mag);
        token += " " + m.variables[static_cast<std::size_t>(term.var)];
        append_wrapped(out, line, token);
    }
}

}  // namespace

std::string write_lp(const IpModel& m) {
    std::string out;
    out += "\\ " + m.name + " model\n";
    out += "Maximize\n";
    std::string line = " obj:";
    write_expression(out, line, m, m.objective);
    out += line + "\n";

    out += "Subject To\n";
    for (const IpConstraint& c : m.constraints) {
        line = " " + c.name + ":";
        write_expression(out, line, m, c.terms);
        const char* rel = c.sense == 'L' ? "<=" : (c.sense == 'G' ? ">=" : "=");
        append_wrapped(out, line, std::string(rel) + " " + format_number(c.rhs));
        out += line + "\n";
    }

    out += "Bounds\n";
    out += "Binaries\n";
    for (const std::string& v : m.variables) out += " " + v + "\n";
    out += "End\n";
    return out;
}

std::string write_mst(const std::map<std::string, double>& assignment) {
    std::string out;
    for (const auto& [name, value] : assignment) out += name + " " + format_number(value) + "\n";
    return out;
}

std::map<std::string, double> warm_start_from(const Graph& g, const ColorSets& cs,
                                              const VertexSequence& s, const Coloring& c,
                                              ModelKind kind) {
    if (!is_permutation(s, g.n)) throw std::invalid_argument("warm start: not a permutation");

    std::map<std::string, double> start;
    if (kind == ModelKind::standard) {
        for (int t = 1; t <= g.n; ++t) {
            const int v = s.at_position(t);
            const int k = c.color[v];
            if (k < 1 || k > cs.kvt_max(v, t))
                throw std::invalid_argument("warm start: color " + std::to_string(k) +
                                            " of vertex " + std::to_string(v) +
                                            " falls outside the model's color set");
            start[z_name(v, k, t)] = 1.0;
        }
        for (int k = 1; k <= c.used_colors; ++k) {
            if (k > cs.best)
                throw std::invalid_argument("warm start: color " + std::to_string(k) +
                                            " exceeds the color bound");
            start[w_name(k)] = 1.0;
        }
        return start;
    }

    // representatives: lowest-index member of each color class represents all
    // of its members at their sequence times
    std::vector<int> rep(static_cast<std::size_t>(c.used_colors) + 1, 0);
    for (int v = 1; v <= g.n; ++v) {
        const int k = c.color[v];
        if (k < 1)
            throw std::invalid_argument("warm start: vertex " + std::to_string(v) +
                                        " is uncolored");
        if (rep[k] == 0 || v < rep[k]) rep[k] = v;
    }
    std::vector<int> pos(static_cast<std::size_t>(g.n) + 1, 0);
    for (int t = 1; t <= g.n; ++t) pos[s.at_position(t)] = t;
    for (int v = 1; v <= g.n; ++v) start[rep_name(rep[c.color[v]], v, pos[v])] = 1.0;
    for (int k = 1; k <= c.used_colors; ++k)
        for (int j = k + 1; j <= c.used_colors; ++j) start[y_name(rep[k], rep[j])] = 1.0;
    return start;
}

namespace {

double lookup(const std::map<std::string, double>& assignment, const std::string& name) {
    auto it = assignment.find(name);
    return it == assignment.end() ? 0.0 : it->second;
}

}  // namespace

double objective_value(const IpModel& m, const std::map<std::string, double>& assignment) {
    double total = 0.0;
    for (const LinTerm& term : m.objective)
        total += term.coef * lookup(assignment, m.variables[static_cast<std::size_t>(term.var)]);
    return total;
}

std::vector<std::string> violated_constraints(const IpModel& m,
                                              const std::map<std::string, double>& assignment,
                                              double tol) {
    std::vector<std::string> violated;
    for (const IpConstraint& c : m.constraints) {
        double lhs = 0.0;
        for (const LinTerm& term : c.terms)
            lhs += term.coef * lookup(assignment, m.variables[static_cast<std::size_t>(term.var)]);
        const bool ok = c.sense == 'L'   ? lhs <= c.rhs + tol
                        : c.sense == 'G' ? lhs >= c.rhs - tol
                                         : std::abs(lhs - c.rhs) <= tol;
        if (!ok) violated.push_back(c.name);
    }
    return violated;
}

namespace {

void replace_all(std::string& text, const std::string& from, const std::string& to) {
    std::size_t pos = 0;
    while ((pos = text.find(from, pos)) != std::string::npos) {
        text.replace(pos, from.size(), to);
        pos += to.size();
    }
}

struct TempDir {
    std::filesystem::path path;

    explicit TempDir(const std::string& prefix) {
        std::string tmpl = (std::filesystem::temp_directory_path() / (prefix + "XXXXXX")).string();
        std::vector<char> buf(tmpl.begin(), tmpl.end());
        buf.push_back('\0');
        if (mkdtemp(buf.data()) == nullptr)
            throw std::runtime_error("cannot create temp directory");
        path = buf.data();
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path, ec);
    }
};

bool is_blank(const std::string& text) {
    return text.find_first_not_of(" \t\r\n") == std::string::npos;
}

}  // namespace

SolveResult solve_external(const IpModel& m, const std::string& solver_command,
                           double time_limit) {
    SolveResult res;
    if (is_blank(solver_command)) {
        res.status = "unavailable";
        return res;
    }

    TempDir dir("cgc_ip_");
    const std::string lp_path = (dir.path / "model.lp").string();
    const std::string mst_path = (dir.path / "model.mst").string();
    {
        std::ofstream lp(lp_path);
        lp << write_lp(m);
        std::ofstream mst(mst_path);
        mst << write_mst(m.warm_start);
    }

    std::string cmd = solver_command;
    replace_all(cmd, "{model}", lp_path);
    replace_all(cmd, "{mst}", mst_path);
    {
        std::ostringstream t;
        t.precision(6);
        t << time_limit;
        replace_all(cmd, "{timeout}", t.str());
    }

    FILE* pipe = popen((cmd + " 2>&1").c_str(), "r");
    if (pipe == nullptr) throw SolveError("cannot launch solver command", "");
    std::string output;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) output.append(buf, got);
    const int rc = pclose(pipe);
    const int exit_code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    res.output = output;

    if (exit_code == 127) {  // shell: command not found
        res.status = "unavailable";
        return res;
    }
    if (exit_code != 0)
        throw SolveError("solver exited with code " + std::to_string(exit_code), output);

    bool have_objective = false;
    std::istringstream lines(output);
    std::string line;
    while (std::getline(lines, line)) {
        std::istringstream fields(line);
        std::string head;
        if (!(fields >> head)) continue;
        if (head == "status") {
            fields >> res.status;
        } else if (head == "objective") {
            have_objective = static_cast<bool>(fields >> res.objective);
        } else if (m.has_variable(head)) {
            double value = 0.0;
            if (fields >> value) res.assignment[head] = value;
        }
    }
    if (res.status.empty()) throw SolveError("solver output has no status line", output);
    if ((res.status == "optimal" || res.status == "feasible") && !have_objective)
        throw SolveError("solver output has no objective line", output);
    return res;
}

}  // namespace cgc
