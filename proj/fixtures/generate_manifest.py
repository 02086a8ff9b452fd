#!/usr/bin/env python3
"""Writes the fixture facet files and manifest.json.

Expected values are computed here from scratch (exact elimination with
fractions / modular arithmetic) so that the C++ suite is checked against an
implementation it shares nothing with.

    python3 fixtures/generate_manifest.py [--check]
"""

import argparse
import itertools
import json
import sys
from fractions import Fraction
from pathlib import Path

HERE = Path(__file__).resolve().parent

FIXTURES = [
    ("boundary-2-simplex", "boundary of a triangle (circle)", "standard", 3,
     [[1, 2], [1, 3], [2, 3]], None),
    ("boundary-3-simplex", "boundary of a tetrahedron (2-sphere)", "standard", 4,
     [[1, 2, 3], [1, 2, 4], [1, 3, 4], [2, 3, 4]], None),
    ("four-cycle", "cycle on four vertices", "standard", 4,
     [[1, 2], [2, 3], [3, 4], [1, 4]], None),
    ("simplex-2", "full 2-simplex (polynomial ring in 3 variables)", "standard", 3,
     [[1, 2, 3]], None),
    ("simplex-3", "full 3-simplex (polynomial ring in 4 variables)", "standard", 4,
     [[1, 2, 3, 4]], None),
    ("cone-four-cycle", "cone with apex 5 over the four-cycle", "standard", 5,
     [[1, 2, 5], [2, 3, 5], [3, 4, 5], [1, 4, 5]], None),
    ("two-triangles", "two disjoint filled triangles", "standard", 6,
     [[1, 2, 3], [4, 5, 6]], None),
    ("wedge-triangles", "two filled triangles sharing vertex 1", "standard", 5,
     [[1, 2, 3], [1, 4, 5]], None),
    ("two-points", "two isolated vertices", "standard", 2, [[1], [2]], None),
    ("rp2-6", "six-vertex real projective plane", "standard", 6,
     [[1, 2, 3], [1, 3, 4], [1, 4, 5], [1, 5, 6], [1, 2, 6],
      [2, 3, 5], [2, 4, 5], [2, 4, 6], [3, 4, 6], [3, 5, 6]], None),
    ("csaszar-torus", "seven-vertex torus", "standard", 7,
     [[1, 2, 4], [1, 2, 6], [1, 3, 4], [1, 3, 7], [1, 5, 6], [1, 5, 7], [2, 3, 5],
      [2, 3, 7], [2, 4, 5], [2, 6, 7], [3, 4, 6], [3, 5, 6], [4, 5, 7], [4, 6, 7]], None),
    ("paper-moebius", "five-vertex Moebius strip", "published-example", 5,
     [[1, 2, 3], [2, 3, 4], [3, 4, 5], [1, 4, 5], [1, 2, 5]], None),
    ("paper-cex1", "three triangles on the edge 12; A = {123, 124}", "published-example", 5,
     [[1, 2, 3], [1, 2, 4], [1, 2, 5]], [[1, 2, 3], [1, 2, 4]]),
    ("paper-cex2", "cone over the four-cycle plus the triangle 123; A = {125, 345}",
     "published-example", 5,
     [[1, 2, 5], [2, 3, 5], [3, 4, 5], [1, 4, 5], [1, 2, 3]], [[1, 2, 5], [3, 4, 5]]),
]

FIELDS = ["q", "2", "3"]


def faces_of(facets):
    out = set()
    for f in facets:
        for k in range(len(f) + 1):
            out.update(itertools.combinations(sorted(f), k))
    return out


def rank(rows, field):
    m = [[Fraction(x) if field == "q" else x % int(field) for x in row] for row in rows]
    p = None if field == "q" else int(field)
    r = 0
    ncols = len(m[0]) if m else 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = (1 / m[r][c]) if p is None else pow(m[r][c], p - 2, p)
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c] * inv
                m[i] = [(a - f * b) if p is None else (a - f * b) % p for a, b in zip(m[i], m[r])]
        r += 1
    return r


def reduced_betti(facets, field):
    fs = faces_of(facets)
    by = {}
    for f in fs:
        by.setdefault(len(f), []).append(f)
    for v in by.values():
        v.sort()
    top = max(by)
    ranks = {}
    for s in range(1, top + 1):
        lower = {f: i for i, f in enumerate(by[s - 1])}
        rows = [[0] * len(by[s]) for _ in by[s - 1]]
        for j, f in enumerate(by[s]):
            for k in range(len(f)):
                rows[lower[f[:k] + f[k + 1:]]][j] = (-1) ** k
        ranks[s] = rank(rows, field)
    return [len(by[s]) - (ranks[s] if s > 0 else 0) - (ranks.get(s + 1, 0)) for s in range(top + 1)]


def link(facets, sigma):
    s = set(sigma)
    return [sorted(set(f) - s) for f in facets if s <= set(f)]


def components(facets):
    parent = {}

    def find(x):
        while parent.setdefault(x, x) != x:
            x = parent[x]
        return x

    for f in facets:
        for v in f:
            find(v)
        for v in f[1:]:
            parent[find(v)] = find(f[0])
    return len({find(v) for v in parent})


def normal_pseudomanifold(facets):
    d = max(len(f) for f in facets) - 1
    if any(len(f) != d + 1 for f in facets):
        return False
    for sigma in faces_of(facets):
        if len(sigma) - 1 <= d - 2 and components(link(facets, sigma)) > 1:
            return False
    ridges = {}
    for f in facets:
        for r in itertools.combinations(sorted(f), d):
            ridges[r] = ridges.get(r, 0) + 1
    return all(c == 2 for c in ridges.values())


def manifest():
    entries = []
    for name, desc, source, n, facets, facets_a in FIXTURES:
        d = max(len(f) for f in facets) - 1
        npm = normal_pseudomanifold(facets)
        fields = {}
        for field in FIELDS:
            betti = reduced_betti(facets, field)
            fields[field] = {
                "reduced_betti": {"lowest_degree": -1, "dims": betti, "check": "oracle"},
                "quasi_gorenstein": {"value": npm and betti[-1] != 0, "check": "oracle"},
            }
        entry = {
            "name": name,
            "file": name + ".cplx",
            "description": desc,
            "source": source,
            "n": n,
            "facets": sorted(sorted(f) for f in facets),
            "dimension": d,
            "normal_pseudomanifold": {"value": npm, "check": "oracle"},
            "fields": fields,
        }
        if facets_a is not None:
            entry["facets_a"] = facets_a
            entry["file_a"] = name + "-A.cplx"
        entries.append(entry)
    return {"fields": FIELDS, "fixtures": entries}


def facet_file(name, desc, n, facets):
    lines = [f"# {name}: {desc}", f"n={n}"]
    lines += [" ".join(map(str, f)) for f in facets]
    return "\n".join(lines) + "\n"


def outputs():
    files = {}
    for name, desc, _, n, facets, facets_a in FIXTURES:
        files[name + ".cplx"] = facet_file(name, desc, n, facets)
        if facets_a is not None:
            files[name + "-A.cplx"] = facet_file(name + "-A", "the subcomplex Delta_A", n, facets_a)
    files["manifest.json"] = json.dumps(manifest(), indent=2) + "\n"
    return files


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--check", action="store_true", help="fail if files are out of date")
    args = parser.parse_args()
    stale = []
    for fname, content in outputs().items():
        path = HERE / fname
        if args.check:
            if not path.exists() or path.read_text() != content:
                stale.append(fname)
        else:
            path.write_text(content)
    if stale:
        print("out of date: " + ", ".join(stale))
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
