#!/usr/bin/env python3
"""Writes data/resolutions/*.json and the skeleton of data/corpus.json.

Expected values are filled in afterwards with `ztop corpus data/corpus.json --bless`.
"""
import itertools
import json
import pathlib
from fractions import Fraction

ROOT = pathlib.Path(__file__).resolve().parent.parent
DATA = ROOT / "data"
RES = DATA / "resolutions"


def write(path, doc):
    path.write_text(json.dumps(doc, indent=2) + "\n")


def resolution(name, n, components, strata, scope="local", empty=(0, 0), **meta):
    doc = {
        "schema_version": 1,
        "name": name,
        "scope": scope,
        "ambient_dim": n,
        "components": [{"id": i, "N": N, "nu": nu, "meets_origin_fiber": m} for i, N, nu, m in components],
        "strata": [{"ids": ids, "chi_total": t, "chi_origin": o} for ids, t, o in strata],
        "empty_stratum": {"chi_total": empty[0], "chi_origin": empty[1]},
    }
    doc.update(meta)
    return doc


def subsets(ids, sizes):
    for k in sizes:
        yield from (list(c) for c in itertools.combinations(ids, k))


def monomial(n, N):
    # identity resolution of prod x_i^N: only the full intersection (the origin) has chi != 0
    ids = list(range(1, n + 1))
    strata = [(s, 1 if len(s) == n else 0, 1 if len(s) == n else 0) for s in subsets(ids, range(1, n + 1))]
    return resolution(f"prod x_i^{N}, n = {n}", n, [(i, N, 1, True) for i in ids], strata,
                      reduced=(N == 1), isolated=True)


def blown_up_monomial(n, N):
    # blowup of the origin: E = P^{n-1} with (nN, n); the n coordinate points of E carry chi 1
    hs = list(range(1, n + 1))
    E = n + 1
    comps = [(i, N, 1, True) for i in hs] + [(E, n * N, n, True)]
    strata = []
    for s in subsets(hs, range(1, n)):
        strata.append((s, 0, 0))
    for s in subsets(hs, range(0, n)):
        chi = 1 if len(s) == n - 1 else 0
        strata.append((sorted(s + [E]), chi, chi))
    return resolution(f"prod x_i^{N} blown up at the origin, n = {n}", n, comps, strata,
                      reduced=(N == 1), isolated=True)


def b_roots_xa_yb(a, b):
    vals = {Fraction(i, a) + Fraction(j, b) for i in range(1, a) for j in range(1, b)}
    roots = {Fraction(1): 1}
    for v in vals:
        roots[v] = roots.get(v, 0) + 1
    return [{"root": {"num": -r.numerator, "den": r.denominator}, "multiplicity": m}
            for r, m in sorted(roots.items())]


def main():
    RES.mkdir(parents=True, exist_ok=True)
    files = []
    for n in range(1, 7):
        for N in range(1, 7):
            name = f"monomial_n{n}_N{N}.json"
            write(RES / name, monomial(n, N))
            files.append(name)
    for n in range(2, 7):
        for N in range(1, 4):
            name = f"blown_up_monomial_n{n}_N{N}.json"
            write(RES / name, blown_up_monomial(n, N))
            files.append(name)
    # cusp with global Euler characteristics; the affine complement of the curve has chi 0
    write(RES / "cusp_global.json", resolution(
        "x^2 + y^3, global data", 2,
        [(1, 2, 2, True), (2, 3, 3, True), (3, 6, 5, True), (4, 1, 1, True)],
        [([1], 1, 1), ([2], 1, 1), ([3], -1, -1), ([4], 0, 0), ([1, 3], 1, 1), ([2, 3], 1, 1), ([3, 4], 1, 1)],
        scope="global", reduced=True, isolated=True))
    files.append("cusp_global.json")
    write(RES / "hyperplane_global_n3.json", resolution(
        "x_1 on C^3, global data", 3, [(1, 1, 1, True)], [([1], 1, 1)], scope="global", empty=(2, 0)))
    files.append("hyperplane_global_n3.json")

    entries = []
    for k in range(1, 9):
        entries.append({"name": f"A{k}", "poly": f"x^2 + y^{k + 1}", "b_roots": b_roots_xa_yb(2, k + 1)})
    for a in range(3, 8):
        for b in range(a, 8):
            entries.append({"name": f"x^{a} + y^{b}", "poly": f"x^{a} + y^{b}", "b_roots": b_roots_xa_yb(a, b)})
    entries += [
        {"name": "smooth", "poly": "x", "b_roots": [{"root": {"num": -1, "den": 1}, "multiplicity": 1}]},
        {"name": "smooth tangent", "poly": "x + y^2"},
        {"name": "node xy", "poly": "x*y", "b_roots": [{"root": {"num": -1, "den": 1}, "multiplicity": 2}]},
        {"name": "node y^2 - x^2", "poly": "y^2 - x^2"},
        {"name": "ordinary triple point", "poly": "x^3 + y^3 + x^2*y^2"},
        {"name": "ordinary 4-fold point", "poly": "x^4 - y^4 + x^3*y^2"},
        {"name": "ordinary 5-fold point", "poly": "x*y*(x - y)*(x + y)*(x - 2*y) + y^6"},
        {"name": "ordinary 6-fold point", "poly": "x^6 + y^6 + x^4*y^3"},
        {"name": "D4 three lines", "poly": "x*y*(x + y)"},
        {"name": "D5", "poly": "x^2*y + y^4"},
        {"name": "E6", "poly": "x^3 + y^4 + x^2*y^2"},
        {"name": "E7", "poly": "x^3 + x*y^3"},
        {"name": "E8", "poly": "x^3 + y^5 + x^2*y^3"},
        {"name": "tacnode pair", "poly": "y*(y - x^2)"},
        {"name": "degenerate A4 form", "poly": "(y - x^2)^2 - x^5"},
        {"name": "degenerate A6 form", "poly": "(y - x^2 + 3*x^3)^2 - x^7"},
        {"name": "two Puiseux pairs", "poly": "(y^2 - x^3)^2 - 4*x^5*y - x^7"},
        {"name": "conjugate tangents", "poly": "x^2 + y^2 + x^3"},
        {"name": "x^2 y (non-reduced)", "poly": "x^2*y", "allow_nonreduced": True},
        {"name": "x^2 y^2 (non-reduced)", "poly": "x^2*y^2", "allow_nonreduced": True},
        {"name": "x^3 y^2 (non-reduced)", "poly": "x^3*y^2", "allow_nonreduced": True},
        {"name": "squared cusp (non-reduced)", "poly": "(x^2 + y^3)^2", "allow_nonreduced": True},
        {"name": "x (x^2 + y^3)^2 (non-reduced)", "poly": "x*(x^2 + y^3)^2", "allow_nonreduced": True},
    ]
    for name in files:
        entries.append({"name": name.removesuffix(".json"), "file": "resolutions/" + name})
    write(DATA / "corpus.json", {"schema_version": 1, "entries": entries})


if __name__ == "__main__":
    main()
