#!/usr/bin/env python3
"""Solve an LP/MILP written in the rcpcut LP subset with scipy (HiGHS).

Usage: external_solve.py <model.lp> <solution.out>

Reads the CPLEX-LP subset emitted by the library (Minimize/Maximize, Subject
To, Bounds, Generals, Binaries, End) and writes:

    status optimal|infeasible|unbounded|limit|error
    objective <value>
    <name> <value>        one line per column
"""
import re
import sys

import numpy as np
from scipy.optimize import linprog, milp, LinearConstraint, Bounds


def tokenize(text):
    text = re.sub(r"\\\s*\n", " ", text)
    lines = []
    for raw in text.splitlines():
        line = raw.split("\\")[0].strip()
        if line:
            lines.append(line)
    return lines


SECTIONS = {"minimize", "maximize", "subject to", "st", "s.t.", "bounds",
            "generals", "general", "binaries", "binary", "end"}


def section_of(line):
    low = line.strip().lower()
    return low if low in SECTIONS else None


TERM_RE = re.compile(r"([+-])?\s*(\d+(?:\.\d*)?(?:[eE][+-]?\d+)?)?\s*([A-Za-z_][\w().,]*)")


def parse_expr(expr):
    out = {}
    pos = 0
    expr = expr.strip()
    while pos < len(expr):
        m = TERM_RE.match(expr, pos)
        if not m:
            m2 = re.match(r"\s*([+-])?\s*(\d+(?:\.\d*)?(?:[eE][+-]?\d+)?)\s*", expr[pos:])
            if m2:  # constant term
                pos += m2.end()
                continue
            raise ValueError(f"cannot parse term at: {expr[pos:]!r}")
        sign = -1.0 if m.group(1) == "-" else 1.0
        coef = float(m.group(2)) if m.group(2) else 1.0
        name = m.group(3)
        out[name] = out.get(name, 0.0) + sign * coef
        pos = m.end()
        while pos < len(expr) and expr[pos] in " \t":
            pos += 1
    return out


def main():
    lppath, outpath = sys.argv[1], sys.argv[2]
    lines = tokenize(open(lppath).read())
    maximize = False
    section = None
    obj = {}
    rows = []  # (coeffs, sense, rhs)
    bounds = {}
    integers = set()
    obj_buf = []
    row_buf = []

    def flush_row():
        nonlocal row_buf
        if not row_buf:
            return
        joined = " ".join(row_buf)
        joined = joined.split(":", 1)[-1]
        m = re.search(r"(<=|>=|=)\s*([+-]?\d+(?:\.\d*)?(?:[eE][+-]?\d+)?)\s*$", joined)
        if not m:
            raise ValueError(f"row without relation: {joined!r}")
        sense = m.group(1)
        rhs = float(m.group(2))
        rows.append((parse_expr(joined[:m.start()]), sense, rhs))
        row_buf = []

    for line in lines:
        sec = section_of(line)
        if sec:
            if section in ("subject to", "st", "s.t."):
                flush_row()
            if sec in ("minimize", "maximize"):
                maximize = sec == "maximize"
                section = sec
            else:
                section = sec
            continue
        if section in ("minimize", "maximize"):
            obj_buf.append(line)
        elif section in ("subject to", "st", "s.t."):
            # a new row starts when the line carries a label
            if re.match(r"^[\w().,]+\s*:", line) and row_buf:
                flush_row()
            row_buf.append(line)
            if re.search(r"(<=|>=|=)\s*[+-]?\d", line):
                flush_row()
        elif section == "bounds":
            low = line.strip()
            m = re.match(r"^([\w().,]+)\s+free$", low, re.I)
            if m:
                bounds[m.group(1)] = (-np.inf, np.inf)
                continue
            m = re.match(r"^(-?[\d.eE+-]+|-inf)\s*<=\s*([\w().,]+)\s*(?:<=\s*(-?[\d.eE+-]+))?$", low)
            if m:
                lo = -np.inf if m.group(1) == "-inf" else float(m.group(1))
                hi = float(m.group(3)) if m.group(3) else np.inf
                bounds[m.group(2)] = (lo, hi)
                continue
            m = re.match(r"^([\w().,]+)\s*(<=|>=)\s*(-?[\d.eE+-]+)$", low)
            if m:
                name, op, v = m.group(1), m.group(2), float(m.group(3))
                lo, hi = bounds.get(name, (0.0, np.inf))
                bounds[name] = (lo, v) if op == "<=" else (v, hi)
                continue
            raise ValueError(f"cannot parse bound: {line!r}")
        elif section in ("generals", "general", "binaries", "binary"):
            for name in line.split():
                integers.add(name)
                if section in ("binaries", "binary") and name not in bounds:
                    bounds[name] = (0.0, 1.0)
    flush_row()
    obj = parse_expr(" ".join(obj_buf).split(":", 1)[-1]) if obj_buf else {}

    names = []
    seen = set()
    for src in [obj] + [r[0] for r in rows] + [dict.fromkeys(bounds)]:
        for name in src:
            if name not in seen:
                seen.add(name)
                names.append(name)
    idx = {n: i for i, n in enumerate(names)}
    n = len(names)
    c = np.zeros(n)
    for k, v in obj.items():
        c[idx[k]] = v
    if maximize:
        c = -c
    lb = np.zeros(n)
    ub = np.full(n, np.inf)
    for k, (lo, hi) in bounds.items():
        lb[idx[k]] = lo
        ub[idx[k]] = hi
    A = []
    lo_r = []
    hi_r = []
    for coeffs, sense, rhs in rows:
        row = np.zeros(n)
        for k, v in coeffs.items():
            row[idx[k]] = v
        A.append(row)
        if sense == "<=":
            lo_r.append(-np.inf); hi_r.append(rhs)
        elif sense == ">=":
            lo_r.append(rhs); hi_r.append(np.inf)
        else:
            lo_r.append(rhs); hi_r.append(rhs)

    status = "error"
    objective = 0.0
    values = np.zeros(n)
    try:
        if integers:
            integrality = np.array([1 if name in integers else 0 for name in names])
            cons = [LinearConstraint(np.array(A), lo_r, hi_r)] if A else []
            res = milp(c=c, constraints=cons, bounds=Bounds(lb, ub), integrality=integrality)
            if res.status == 0:
                status = "optimal"; values = res.x; objective = res.fun
            elif res.status == 2:
                status = "infeasible"
            elif res.status == 3:
                status = "unbounded"
            else:
                status = "limit" if res.x is not None else "error"
                if res.x is not None:
                    values = res.x; objective = res.fun
        else:
            kw = {}
            if A:
                ao, bo = [], []
                ae, be = [], []
                for row, lo, hi in zip(A, lo_r, hi_r):
                    if lo == hi:
                        ae.append(row); be.append(lo)
                    else:
                        if np.isfinite(hi):
                            ao.append(row); bo.append(hi)
                        if np.isfinite(lo):
                            ao.append(-row); bo.append(-lo)
                if ao:
                    kw["A_ub"] = np.array(ao); kw["b_ub"] = np.array(bo)
                if ae:
                    kw["A_eq"] = np.array(ae); kw["b_eq"] = np.array(be)
            res = linprog(c, bounds=list(zip(lb, ub)), method="highs", **kw)
            if res.status == 0:
                status = "optimal"; values = res.x; objective = res.fun
            elif res.status == 2:
                status = "infeasible"
            elif res.status == 3:
                status = "unbounded"
            else:
                status = "error"
    except Exception as e:  # pragma: no cover
        print("external solver failure:", e, file=sys.stderr)
        status = "error"

    if maximize and status in ("optimal", "limit"):
        objective = -objective

    with open(outpath, "w") as f:
        f.write(f"status {status}\n")
        f.write(f"objective {objective:.12g}\n")
        if status in ("optimal", "limit"):
            for name, v in zip(names, values):
                f.write(f"{name} {v:.12g}\n")


if __name__ == "__main__":
    main()
