#!/usr/bin/env python3
# Copyright 2026 The FairCC Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Solve a free-format MPS file with the HiGHS solver bundled in SciPy.

Prints "status: ..." and "objective: ..." lines. The objective includes the
constant stored as the negated RHS of the objective row.
"""

import argparse
import sys

import numpy as np
from scipy.optimize import linprog
from scipy.sparse import coo_matrix


def read_mps(path):
    rows = {}
    row_order = []
    objective = None
    columns = {}
    col_order = []
    entries = []
    rhs = {}
    lower = {}
    upper = {}
    section = None
    with open(path, encoding="utf-8") as handle:
        for raw in handle:
            line = raw.rstrip("\n")
            if not line.strip() or line.startswith("*"):
                continue
            if not line[0].isspace():
                section = line.split()[0]
                continue
            fields = line.split()
            if section == "ROWS":
                kind, name = fields
                if kind == "N":
                    if objective is None:
                        objective = name
                    continue
                rows[name] = kind
                row_order.append(name)
            elif section == "COLUMNS":
                col = fields[0]
                if col not in columns:
                    columns[col] = len(col_order)
                    col_order.append(col)
                for k in range(1, len(fields), 2):
                    entries.append((fields[k], col, float(fields[k + 1])))
            elif section == "RHS":
                for k in range(1, len(fields), 2):
                    rhs[fields[k]] = float(fields[k + 1])
            elif section == "BOUNDS":
                kind, _, col, *value = fields
                v = float(value[0]) if value else None
                if kind == "UP":
                    upper[col] = v
                elif kind == "LO":
                    lower[col] = v
                elif kind == "FX":
                    lower[col] = upper[col] = v
                elif kind == "FR":
                    lower[col], upper[col] = None, None
                else:
                    raise ValueError(f"unsupported bound type {kind}")
            elif section == "OBJSENSE":
                if fields[0] not in ("MIN", "MINIMIZE"):
                    raise ValueError("only minimization is supported")
    return rows, row_order, objective, col_order, columns, entries, rhs, lower, upper


def solve(path):
    rows, row_order, objective, col_order, columns, entries, rhs, lower, upper = read_mps(path)
    n = len(col_order)
    c = np.zeros(n)
    ub_index = {}
    eq_index = {}
    for name in row_order:
        if rows[name] in ("L", "G"):
            ub_index[name] = len(ub_index)
        else:
            eq_index[name] = len(eq_index)
    ub = ([], [], [])
    eq = ([], [], [])
    for row, col, value in entries:
        j = columns[col]
        if row == objective:
            c[j] += value
        elif row in ub_index:
            sign = -1.0 if rows[row] == "G" else 1.0
            ub[0].append(ub_index[row])
            ub[1].append(j)
            ub[2].append(sign * value)
        elif row in eq_index:
            eq[0].append(eq_index[row])
            eq[1].append(j)
            eq[2].append(value)
        else:
            raise ValueError(f"unknown row {row}")
    b_ub = np.zeros(len(ub_index))
    for name, i in ub_index.items():
        b_ub[i] = rhs.get(name, 0.0) * (-1.0 if rows[name] == "G" else 1.0)
    b_eq = np.zeros(len(eq_index))
    for name, i in eq_index.items():
        b_eq[i] = rhs.get(name, 0.0)
    offset = -rhs.get(objective, 0.0)
    bounds = [(lower.get(col, 0.0), upper.get(col)) for col in col_order]
    kwargs = {}
    if ub_index:
        kwargs["A_ub"] = coo_matrix((ub[2], (ub[0], ub[1])), shape=(len(ub_index), n)).tocsr()
        kwargs["b_ub"] = b_ub
    if eq_index:
        kwargs["A_eq"] = coo_matrix((eq[2], (eq[0], eq[1])), shape=(len(eq_index), n)).tocsr()
        kwargs["b_eq"] = b_eq
    result = linprog(c, bounds=bounds, method="highs", **kwargs)
    return result, offset, col_order


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("mps")
    parser.add_argument("--solution", help="write 'name value' lines")
    args = parser.parse_args()
    result, offset, col_order = solve(args.mps)
    status = {0: "optimal", 2: "infeasible", 3: "unbounded"}.get(result.status, "error")
    print(f"status: {status}")
    if result.status != 0:
        return 2
    print(f"objective: {result.fun + offset:.12g}")
    if args.solution:
        with open(args.solution, "w", encoding="utf-8") as out:
            for name, value in zip(col_order, result.x):
                out.write(f"{name} {value:.17g}\n")
    return 0


if __name__ == "__main__":
    sys.exit(main())
