#!/usr/bin/env python3
"""Authoring helper for the group corpus under data/groups/.

Builds generators for the curated groups and, for the groups small enough,
finds conjugacy-class representatives of maximal subgroups by brute force
(subgroup classes via cyclic extension, then a maximality test).  The output
files are the inputs of `genhamilton analyze-group` and
`genhamilton make-chartable`.  The library itself never searches for maximal
subgroups; this script only exists so the fixtures can be regenerated.

Usage: derive_fixtures.py OUTDIR
"""

import json
import sys
from pathlib import Path

import numpy as np


def from_cycles(degree, cycles):
    img = list(range(1, degree + 1))
    for c in cycles:
        for a, b in zip(c, c[1:] + c[:1]):
            img[a - 1] = b
    return img


def projective_line(p, maps):
    """Permutations of {0..p-1, inf} (labelled 1..p+1) induced by x -> f(x)."""
    inf = p
    gens = []
    for f in maps:
        gens.append([f(x, p, inf) + 1 for x in range(p + 1)])
    return gens


def translate(x, p, inf):
    return inf if x == inf else (x + 1) % p


def negative_inverse(x, p, inf):
    if x == inf:
        return 0
    if x == 0:
        return inf
    return (-pow(x, -1, p)) % p


def scale(a):
    def f(x, p, inf):
        return inf if x == inf else (a * x) % p
    return f


def primitive_root(p):
    for r in range(2, p):
        if all(pow(r, (p - 1) // q, p) != 1 for q in range(2, p) if (p - 1) % q == 0 and all(q % d for d in range(2, q))):
            return r
    raise ValueError(p)


def psl2(p):
    r = primitive_root(p)
    return p + 1, projective_line(p, [translate, negative_inverse, scale(r * r % p)])


def pgl2(p):
    r = primitive_root(p)
    return p + 1, projective_line(p, [translate, negative_inverse, scale(r)])


def gf8_mul(a, b):
    # GF(8) = F2[x]/(x^3 + x + 1)
    r = 0
    for i in range(3):
        if (b >> i) & 1:
            r ^= a << i
    for i in (4, 3):
        if (r >> i) & 1:
            r ^= 0b1011 << (i - 3)
    return r


def psl2_8():
    inf = 8
    inv = {a: next(b for b in range(1, 8) if gf8_mul(a, b) == 1) for a in range(1, 8)}
    t = [(x ^ 1) if x != inf else inf for x in range(9)]
    m = [gf8_mul(2, x) if x != inf else inf for x in range(9)]
    s = [inf if x == 0 else (0 if x == inf else inv[x]) for x in range(9)]
    return 9, [[y + 1 for y in g] for g in (t, m, s)]


def psl3_2():
    # GL(3,2) on the seven nonzero vectors of F2^3 (vector v is point v).
    def apply(mat, v):
        out = 0
        for row in range(3):
            bit = 0
            for col in range(3):
                bit ^= mat[row][col] & ((v >> col) & 1)
            out |= bit << row
        return out
    singer = [[0, 0, 1], [1, 0, 1], [0, 1, 0]]
    transvection = [[1, 1, 0], [0, 1, 0], [0, 0, 1]]
    return 7, [[apply(m, v) for v in range(1, 8)] for m in (singer, transvection)]


def symmetric(n):
    return n, [from_cycles(n, [[1, 2]]), from_cycles(n, [list(range(1, n + 1))])]


def alternating(n):
    long = list(range(1, n + 1)) if n % 2 else list(range(2, n + 1))
    return n, [from_cycles(n, [[1, 2, 3]]), from_cycles(n, [long])]


CORPUS = {
    "S3": symmetric(3),
    "S4": symmetric(4),
    "A4": alternating(4),
    "D8": (4, [[2, 3, 4, 1], [2, 1, 4, 3]]),
    "Q8": (8, [[3, 4, 2, 1, 7, 8, 6, 5], [5, 6, 8, 7, 2, 1, 3, 4]]),
    "A5": alternating(5),
    "S5": symmetric(5),
    "A6": alternating(6),
    "S6": symmetric(6),
    "S7": symmetric(7),
    "PSL(3,2)": psl3_2(),
    "PGL(2,7)": pgl2(7),
    "PSL(2,8)": psl2_8(),
    "PSL(2,11)": psl2(11),
    "PGL(2,11)": pgl2(11),
    "PSL(2,13)": psl2(13),
    "PSL(2,17)": psl2(17),
    "M11": (11, [from_cycles(11, [list(range(1, 12))]),
                 from_cycles(11, [[3, 7, 11, 8], [4, 10, 5, 6]])]),
}

FILE_NAMES = {
    "S3": "s3", "S4": "s4", "A4": "a4", "D8": "d8", "Q8": "q8", "A5": "a5",
    "S5": "s5", "A6": "a6", "S6": "s6", "S7": "s7", "PSL(3,2)": "psl3_2",
    "PGL(2,7)": "pgl2_7", "PSL(2,8)": "psl2_8", "PSL(2,11)": "psl2_11",
    "PGL(2,11)": "pgl2_11", "PSL(2,13)": "psl2_13", "PSL(2,17)": "psl2_17",
    "M11": "m11",
}

MAXIMAL_SUBGROUP_LIMIT = 2448


class Group:
    def __init__(self, degree, gens):
        self.degree = degree
        gens = [tuple(x - 1 for x in g) for g in gens]
        ident = tuple(range(degree))
        seen = {ident}
        frontier = [ident]
        while frontier:
            nxt = []
            for e in frontier:
                for g in gens:
                    p = tuple(g[e[i]] for i in range(degree))
                    if p not in seen:
                        seen.add(p)
                        nxt.append(p)
            frontier = nxt
        self.elements = np.array(sorted(seen), dtype=np.uint8)
        self.order = len(self.elements)
        self.index = {e.tobytes(): i for i, e in enumerate(self.elements)}
        self.identity = 0

    def build_table(self):
        n = self.order
        # table[a, b] = index of "a then b"
        self.table = np.empty((n, n), dtype=np.int32)
        for a in range(n):
            prods = np.ascontiguousarray(self.elements[:, self.elements[a]])
            self.table[a] = [self.index[row.tobytes()] for row in prods]
        self.inverse = np.argmax(self.table == self.identity, axis=1)

    def closure(self, gens):
        member = np.zeros(self.order, dtype=bool)
        member[self.identity] = True
        current = np.array([self.identity])
        while True:
            new = np.unique(np.concatenate([self.table[current, g] for g in gens])) if gens else np.array([], dtype=np.int64)
            fresh = new[~member[new]]
            if fresh.size == 0:
                return member
            member[fresh] = True
            current = np.flatnonzero(member)

    def conjugates(self, members):
        h = np.flatnonzero(members)
        m = self.table[self.inverse[:, None], h[None, :]]
        return self.table[m, np.arange(self.order)[:, None]]

    def conjugate_member_sets(self, members):
        out = set()
        for row in self.conjugates(members):
            m = np.zeros(self.order, dtype=bool)
            m[row] = True
            out.add(m.tobytes())
        return out

    def small_generators(self, members):
        gens = []
        span = self.closure([])
        for e in np.flatnonzero(members):
            if not span[e]:
                gens.append(int(e))
                span = self.closure(gens)
        return gens

    def maximal_subgroup_reps(self):
        full = self.order
        cyclic_gens = {}
        for e in range(full):
            c = self.closure([e])
            cyclic_gens.setdefault(c.tobytes(), e)
        cyclic = sorted(cyclic_gens.values())
        trivial = self.closure([])
        reps = [([], trivial)]
        seen = {trivial.tobytes()}
        queue = [([], trivial)]
        while queue:
            gens, members = queue.pop()
            for c in cyclic:
                if members[c]:
                    continue
                k = self.closure(gens + [c])
                if k.sum() == full or k.tobytes() in seen:
                    continue
                seen |= self.conjugate_member_sets(k)
                kg = self.small_generators(k)
                reps.append((kg, k))
                queue.append((kg, k))
        maximal = []
        for gens, members in reps:
            if all(self.closure(gens + [c]).sum() == full for c in cyclic if not members[c]):
                maximal.append((gens, members))
        maximal.sort(key=lambda gm: (-int(gm[1].sum()), np.flatnonzero(gm[1]).tobytes()))
        return maximal

    def images(self, idx):
        return [int(x) + 1 for x in self.elements[idx]]


def main():
    out = Path(sys.argv[1])
    out.mkdir(parents=True, exist_ok=True)
    for name, (degree, gens) in CORPUS.items():
        g = Group(degree, gens)
        spec = {"name": name, "degree": degree, "generators": gens}
        if g.order <= MAXIMAL_SUBGROUP_LIMIT:
            g.build_table()
            maximal = g.maximal_subgroup_reps()
            spec["maximal_subgroups"] = [[g.images(i) for i in sgens] for sgens, _ in maximal]
            orders = [int(m.sum()) for _, m in maximal]
            print(f"{name}: order {g.order}, maximal subgroup orders {orders}")
        else:
            print(f"{name}: order {g.order}")
        path = out / f"{FILE_NAMES[name]}.json"
        path.write_text(format_spec(spec))


def format_spec(spec):
    lines = ["{"]
    lines.append(f'  "name": {json.dumps(spec["name"])},')
    lines.append(f'  "degree": {spec["degree"]},')
    gens = ",\n    ".join(json.dumps(g) for g in spec["generators"])
    tail = "," if "maximal_subgroups" in spec else ""
    lines.append(f'  "generators": [\n    {gens}\n  ]{tail}')
    if "maximal_subgroups" in spec:
        subs = []
        for sg in spec["maximal_subgroups"]:
            subs.append("[\n      " + ",\n      ".join(json.dumps(x) for x in sg) + "\n    ]")
        lines.append('  "maximal_subgroups": [\n    ' + ",\n    ".join(subs) + "\n  ]")
    lines.append("}")
    return "\n".join(lines) + "\n"


if __name__ == "__main__":
    main()
