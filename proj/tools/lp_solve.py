#!/usr/bin/env python3
"""Solve a binary LP file with scipy's HiGHS backend.

Usage: lp_solve.py MODEL.lp [WARMSTART.mst] [TIMEOUT_SECONDS]

Reads the LP dialect emitted by this project's write_lp (Maximize / Subject To /
Bounds / Binaries / End, all variables binary). When a warm-start file is given
it is validated against the constraints before solving; HiGHS via scipy takes
no incumbent, so the warm start is a feasibility check only.

Output contract (parsed by the caller):
    status optimal|feasible|infeasible|unbounded|timeout
    objective <value>
    <variable> <value>        (nonzero variables, sorted by name)
"""

import sys

import numpy as np
from scipy import sparse
from scipy.optimize import Bounds, LinearConstraint, milp


def fail(message, code=4):
    print(f"error: {message}")
    sys.exit(code)


def tokenize_lp(path):
    """Yield (section, token) pairs; comment lines start with a backslash."""
    section = None
    headers = {
        "maximize": "objective",
        "subject": "constraints",
        "bounds": "bounds",
        "binaries": "binaries",
        "end": "end",
    }
    with open(path) as fh:
        for line in fh:
            if line.lstrip().startswith("\\"):
                continue
            stripped = line.strip()
            head = stripped.split(" ", 1)[0].lower() if stripped else ""
            if head in headers and (head != "subject" or stripped.lower().startswith("subject to")):
                section = headers[head]
                continue
            for token in stripped.split():
                yield section, token


def parse_lp(path):
    objective = {}  # name -> coefficient
    constraints = []  # (name, {var: coef}, sense, rhs)
    binaries = []

    current = None  # mutable constraint row being filled
    sign = 1.0
    magnitude = None
    expecting_rhs = False

    def flush_term(name):
        nonlocal sign, magnitude
        coef = sign * (1.0 if magnitude is None else magnitude)
        target = objective if current is None else current[1]
        target[name] = target.get(name, 0.0) + coef
        sign, magnitude = 1.0, None

    for section, token in tokenize_lp(path):
        if section == "objective":
            if token.endswith(":"):
                continue
            if token == "+":
                sign = 1.0
            elif token == "-":
                sign = -1.0
            else:
                try:
                    magnitude = float(token)
                except ValueError:
                    flush_term(token)
        elif section == "constraints":
            if expecting_rhs:
                current[3] = sign * float(token)
                sign, magnitude = 1.0, None
                expecting_rhs = False
            elif token.endswith(":"):
                current = [token[:-1], {}, None, 0.0]
                constraints.append(current)
                sign, magnitude = 1.0, None
            elif token in ("<=", ">=", "="):
                current[2] = token
                expecting_rhs = True
            elif token == "+":
                sign = 1.0
            elif token == "-":
                sign = -1.0
            else:
                try:
                    magnitude = float(token)
                except ValueError:
                    flush_term(token)
        elif section == "binaries":
            binaries.append(token)
    if not binaries:
        fail("no binary variables found in LP file")
    declared = set(binaries)
    for name, terms, sense, _ in constraints:
        if sense is None:
            fail(f"constraint {name} has no relation")
        for var in terms:
            if var not in declared:
                fail(f"constraint {name} references undeclared variable {var}")
    return objective, constraints, binaries


def read_warm_start(path, index):
    values = {}
    with open(path) as fh:
        for lineno, line in enumerate(fh, 1):
            parts = line.split()
            if not parts:
                continue
            if len(parts) != 2:
                fail(f"warm start line {lineno} is not '<name> <value>'")
            name, value = parts
            if name not in index:
                fail(f"warm start names unknown variable {name}")
            values[name] = float(value)
    return values


def main():
    if len(sys.argv) < 2:
        fail("usage: lp_solve.py MODEL.lp [WARMSTART.mst] [TIMEOUT]", code=5)
    model_path = sys.argv[1]
    mst_path = sys.argv[2] if len(sys.argv) > 2 else ""
    timeout = float(sys.argv[3]) if len(sys.argv) > 3 else 60.0

    objective, constraints, binaries = parse_lp(model_path)
    index = {name: i for i, name in enumerate(binaries)}
    n = len(binaries)

    c = np.zeros(n)
    for name, coef in objective.items():
        if name not in index:
            fail(f"objective references undeclared variable {name}")
        c[index[name]] = -coef  # milp minimizes

    rows, cols, vals = [], [], []
    lb, ub = [], []
    for row, (name, terms, sense, rhs) in enumerate(constraints):
        for var, coef in terms.items():
            rows.append(row)
            cols.append(index[var])
            vals.append(coef)
        if sense == "<=":
            lb.append(-np.inf)
            ub.append(rhs)
        elif sense == ">=":
            lb.append(rhs)
            ub.append(np.inf)
        else:
            lb.append(rhs)
            ub.append(rhs)
    matrix = sparse.csr_matrix((vals, (rows, cols)), shape=(len(constraints), n))

    if mst_path:
        try:
            warm = read_warm_start(mst_path, index)
        except FileNotFoundError:
            warm = {}
        if warm:
            x0 = np.zeros(n)
            for name, value in warm.items():
                x0[index[name]] = value
            activity = matrix @ x0
            for row, (name, _, _, _) in enumerate(constraints):
                if not (lb[row] - 1e-6 <= activity[row] <= ub[row] + 1e-6):
                    fail(f"warm start violates constraint {name}")
            print(f"warmstart feasible objective {float(-c @ x0):.9g}")

    kwargs = {}
    if constraints:
        kwargs["constraints"] = LinearConstraint(matrix, lb, ub)
    res = milp(
        c,
        integrality=np.ones(n),
        bounds=Bounds(np.zeros(n), np.ones(n)),
        options={"time_limit": timeout},
        **kwargs,
    )

    if res.status == 0:
        status = "optimal"
    elif res.status == 1:
        status = "feasible" if res.x is not None else "timeout"
    elif res.status == 2:
        status = "infeasible"
    elif res.status == 3:
        status = "unbounded"
    else:
        fail(f"solver returned status {res.status}: {res.message}")

    print(f"status {status}")
    if res.x is not None:
        print(f"objective {float(-res.fun):.9g}")
        assignment = {name: round(float(res.x[i])) for name, i in index.items()}
        for name in sorted(assignment):
            if assignment[name] != 0:
                print(f"{name} {assignment[name]}")


if __name__ == "__main__":
    main()
