#!/usr/bin/env python3
"""Regenerates the bundled dataset corpus under data/.

Each group is built concretely (permutations, matrices over finite fields,
direct products, quotients). Its character table is computed numerically with
Dixon's class-matrix eigenvector method. Then every linear character of every
subgroup-class representative is induced via Frobenius reciprocity. All
multiplicities are integers; the script aborts if rounding error exceeds 1e-6.

Character values are exported exactly as cyclotomic coordinate lists over
the group exponent: for g of order o, the eigenvalue multiplicities
m_k = (1/o) sum_t chi(g^t) zeta_o^{-kt} are integers, so chi(g) = sum m_k zeta_o^k.

Usage: generate_corpus.py OUTPUT_DIR
"""

import itertools
import json
import math
import sys
from pathlib import Path

import numpy as np

TOL = 1e-6


# --------------------------------------------------------------------------
# Concrete finite groups


class Group:
    """A finite group given by its full multiplication table."""

    def __init__(self, name, elements, mul):
        self.name = name
        index = {e: i for i, e in enumerate(elements)}
        n = len(elements)
        self.n = n
        self.table = np.empty((n, n), dtype=np.int64)
        for i, a in enumerate(elements):
            for j, b in enumerate(elements):
                self.table[i, j] = index[mul(a, b)]
        ident = [i for i in range(n) if all(self.table[i, j] == j for j in range(n))]
        assert len(ident) == 1
        self.identity = ident[0]
        self.inverse = np.empty(n, dtype=np.int64)
        for i in range(n):
            self.inverse[i] = int(np.nonzero(self.table[i] == self.identity)[0][0])
        self._classes()

    def _classes(self):
        n = self.n
        class_of = -np.ones(n, dtype=np.int64)
        classes = []
        order = [self.identity] + [i for i in range(n) if i != self.identity]
        for g in order:
            if class_of[g] >= 0:
                continue
            conj = sorted({int(self.table[self.table[x, g], self.inverse[x]]) for x in range(n)})
            for c in conj:
                class_of[c] = len(classes)
            classes.append(conj)
        self.class_of = class_of
        self.classes = classes
        self.elem_order = np.array([self.order_of(g) for g in range(n)])
        self.exponent = math.lcm(*[int(o) for o in self.elem_order])

    def order_of(self, g):
        k, x = 1, g
        while x != self.identity:
            x = int(self.table[x, g])
            k += 1
        return k

    def power(self, g, t):
        x = self.identity
        for _ in range(t):
            x = int(self.table[x, g])
        return x


def closure_from(elements, mul):
    """All products of the given generators (BFS)."""
    seen = list(elements)
    found = set(seen)
    frontier = list(seen)
    while frontier:
        nxt = []
        for a in frontier:
            for g in elements:
                c = mul(a, g)
                if c not in found:
                    found.add(c)
                    seen.append(c)
                    nxt.append(c)
        frontier = nxt
    return sorted(found)


def perm_mul(a, b):
    # apply a then b
    return tuple(b[a[i]] for i in range(len(a)))


def symmetric_group(name, k, even_only=False):
    elems = []
    for p in itertools.permutations(range(k)):
        if even_only:
            inv = sum(1 for i in range(k) for j in range(i + 1, k) if p[i] > p[j])
            if inv % 2:
                continue
        elems.append(p)
    return Group(name, sorted(elems), perm_mul)


def cyclic_group(name, k):
    return Group(name, list(range(k)), lambda a, b: (a + b) % k)


class GF:
    """GF(2^m) for small m with a fixed primitive polynomial, or GF(p)."""

    def __init__(self, p, m=1, poly=None):
        self.p, self.m, self.poly = p, m, poly
        self.q = p ** m

    def add(self, a, b):
        if self.m == 1:
            return (a + b) % self.p
        return a ^ b

    def mul(self, a, b):
        if self.m == 1:
            return (a * b) % self.p
        r = 0
        while b:
            if b & 1:
                r ^= a
            b >>= 1
            a <<= 1
            if a & (1 << self.m):
                a ^= self.poly
        return r


def matrix_group(name, field, det_ok):
    q = field.q

    def mmul(a, b):
        (a11, a12, a21, a22), (b11, b12, b21, b22) = a, b
        f = field
        return (f.add(f.mul(a11, b11), f.mul(a12, b21)),
                f.add(f.mul(a11, b12), f.mul(a12, b22)),
                f.add(f.mul(a21, b11), f.mul(a22, b21)),
                f.add(f.mul(a21, b12), f.mul(a22, b22)))

    def det(a):
        f = field
        a11, a12, a21, a22 = a
        neg = f.mul(a12, a21)
        if f.m == 1:
            neg = (-neg) % f.p
        return f.add(f.mul(a11, a22), neg)

    elems = [m for m in itertools.product(range(q), repeat=4) if det(m) != 0 and det_ok(det(m))]
    return Group(name, sorted(elems), mmul)


def direct_product(name, g1, g2):
    elems = [(a, b) for a in range(g1.n) for b in range(g2.n)]
    return Group(name, elems,
                 lambda x, y: (int(g1.table[x[0], y[0]]), int(g2.table[x[1], y[1]])))


def quotient(name, g, normal):
    normal = set(normal)
    coset_of = {}
    reps = []
    for x in range(g.n):
        if x in coset_of:
            continue
        coset = frozenset(int(g.table[x, m]) for m in normal)
        for y in coset:
            coset_of[y] = len(reps)
        reps.append(coset)
    q = Group(name, list(range(len(reps))),
              lambda a, b: coset_of[int(g.table[min(reps[a]), min(reps[b])])])
    projection = [coset_of[x] for x in range(g.n)]
    return q, projection


# --------------------------------------------------------------------------
# Character tables (Dixon)


def character_table(g, seed=1):
    r = len(g.classes)
    sizes = np.array([len(c) for c in g.classes], dtype=float)
    # b[i, j, k] = #{y in C_j : rep_i * y in C_k}
    b = np.zeros((r, r, r))
    for i, ci in enumerate(g.classes):
        rep = ci[0]
        for j, cj in enumerate(g.classes):
            prods = g.class_of[g.table[rep, cj]]
            b[i, j] = np.bincount(prods, minlength=r)
    # a[i, j, k] structure constants of the class algebra
    a = b * sizes[:, None, None] / sizes[None, None, :]
    rng = np.random.default_rng(seed)
    for _ in range(20):
        coeffs = rng.normal(size=r) + 1j * rng.normal(size=r)
        # omega(C_j) w_i = sum_k a[j, i, k] w_k  (class algebra is commutative)
        mat = np.tensordot(coeffs, a, axes=(0, 0))
        vals, vecs = np.linalg.eig(mat)
        if r > 1 and min(abs(x - y) for x, y in itertools.combinations(vals, 2)) < 1e-6:
            continue
        chars = []
        for col in range(r):
            w = vecs[:, col] / vecs[0, col]
            norm = np.sum(np.abs(w) ** 2 / sizes)
            deg = math.sqrt(g.n / norm.real)
            d = round(deg)
            assert abs(deg - d) < TOL, (g.name, deg)
            chars.append(d * w / sizes)
        tab = np.array(chars)
        gram = (tab * sizes) @ tab.conj().T / g.n
        if np.allclose(gram, np.eye(r), atol=1e-8):
            return tab
    raise RuntimeError(f"Dixon failed for {g.name}")


def exact_coordinates(g, tab):
    """Cyclotomic coordinates over the group exponent for each value."""
    n_cond = g.exponent
    out = []
    for chi in tab:
        row = []
        for cls in g.classes:
            x = cls[0]
            o = int(g.elem_order[x])
            vals = [chi[g.class_of[g.power(x, t)]] for t in range(o)]
            coords = [0] * n_cond
            for k in range(o):
                m = sum(vals[t] * np.exp(-2j * np.pi * k * t / o) for t in range(o)) / o
                mi = round(m.real)
                assert abs(m - mi) < TOL and mi >= 0
                coords[(k * n_cond // o) % n_cond] += mi
            row.append(coords)
        out.append(row)
    return n_cond, out


def order_key(g, tab):
    """Degree first, then a deterministic key on rounded values."""
    keys = []
    for idx, chi in enumerate(tab):
        vals = tuple((round(v.real, 6), round(v.imag, 6)) for v in chi)
        keys.append((round(chi[0].real), tuple(-x for pair in vals for x in pair), idx))
    return [k[-1] for k in sorted(keys)]


# --------------------------------------------------------------------------
# Subgroups and induced linear characters


def subgroup_closure(g, gens):
    found = {g.identity}
    frontier = [g.identity]
    while frontier:
        nxt = []
        for x in frontier:
            for s in gens:
                y = int(g.table[x, s])
                if y not in found:
                    found.add(y)
                    nxt.append(y)
        frontier = nxt
    return frozenset(found)


def conjugate(g, h, x):
    xi = int(g.inverse[x])
    return frozenset(int(g.table[g.table[xi, y], x]) for y in h)


def subgroup_class_reps(g):
    seen = set()
    reps = []

    def register(h, gens):
        if h in seen:
            return False
        reps.append((h, gens))
        for x in range(g.n):
            seen.add(conjugate(g, h, x))
        return True

    register(frozenset([g.identity]), [])
    frontier = list(reps)
    while frontier:
        nxt = []
        for h, gens in frontier:
            for x in range(g.n):
                if x in h:
                    continue
                k = subgroup_closure(g, gens + [x])
                if register(k, gens + [x]):
                    nxt.append(reps[-1])
        frontier = nxt
    return sorted((h for h, _ in reps), key=lambda h: (len(h), sorted(h)))


def as_group(g, h):
    elems = sorted(h)
    return Group("sub", elems, lambda a, b: int(g.table[a, b]))


def linear_characters(g, h):
    sub = as_group(g, h)
    elems = sorted(h)
    tab = character_table(sub)
    lin = []
    for chi in tab:
        if abs(chi[0] - 1) < TOL:
            lin.append({elems[i]: chi[sub.class_of[i]] for i in range(len(elems))})
    return lin


def induced_rows(g, tab):
    rows = {}
    for h in subgroup_class_reps(g):
        for lam in linear_characters(g, h):
            row = []
            for chi in tab:
                s = sum(lam[x] * np.conj(chi[g.class_of[x]]) for x in h) / len(h)
                si = round(s.real)
                assert abs(s - si) < TOL and si >= 0
                row.append(si)
            key = tuple(row)
            entry = rows.setdefault(key, {"subgroup_order": len(h), "count": 0, "row": row})
            entry["count"] += 1
    return [rows[k] for k in sorted(rows)]


# --------------------------------------------------------------------------
# Datasets


def naive_minimal_generators(rows):
    """Tiny membership-based minimization used only to fix tie orderings."""
    vecs = sorted({tuple(r) for r in rows if any(r)}, key=lambda v: (sum(v), v))

    def member(v, gens):
        memo = {}

        def rec(res):
            if not any(res):
                return True
            if res in memo:
                return memo[res]
            j = next(i for i, x in enumerate(res) if x)
            ok = False
            for gv in gens:
                if gv[j] and all(a <= b for a, b in zip(gv, res)):
                    if rec(tuple(b - a for a, b in zip(gv, res))):
                        ok = True
                        break
            memo[res] = ok
            return ok

        return rec(v)

    kept = []
    for i, v in enumerate(vecs):
        others = [w for j, w in enumerate(vecs) if j != i and sum(w) <= sum(v)]
        if not member(v, others):
            kept.append(v)
    return set(kept)


class Built:
    def __init__(self, g, tab, label_prefix="X"):
        self.g = g
        self.tab = tab
        self.perm = list(range(len(tab)))

    def reorder(self, perm):
        self.tab = self.tab[perm]

    def degrees(self):
        return [round(c[0].real) for c in self.tab]


def build(g):
    tab = character_table(g)
    tab = tab[order_key(g, tab)]
    return Built(g, tab)


def fix_ties_to(built, golden):
    """Permute irreducibles within equal-degree blocks so that the minimal
    generators equal the golden set."""
    degs = built.degrees()
    blocks = []
    i = 0
    while i < len(degs):
        j = i
        while j < len(degs) and degs[j] == degs[i]:
            j += 1
        blocks.append(list(range(i, j)))
        i = j
    rows = [e["row"] for e in induced_rows(built.g, built.tab)]
    choices = [list(itertools.permutations(b)) for b in blocks]
    for combo in itertools.product(*choices):
        perm = [x for block in combo for x in block]
        permuted = [[r[p] for p in perm] for r in rows]
        if naive_minimal_generators(permuted) == golden:
            built.reorder(perm)
            return
    raise RuntimeError(f"no tie ordering reproduces golden generators for {built.g.name}")


def monomials_to_set(r, monomials):
    out = set()
    for mono in monomials:
        v = [0] * r
        for idx, exp in mono:
            v[idx - 1] += exp
        out.add(tuple(v))
    return out


def parse_monomials(text):
    """'x2x3x4^2' style monomial list to [(index, exp)]."""
    result = []
    for term in text.split(","):
        term = term.strip()
        factors = []
        for part in term.split("x")[1:]:
            if "^" in part:
                i, e = part.split("^")
                factors.append((int(i), int(e)))
            else:
                factors.append((int(part), 1))
        result.append(factors)
    return result


def dataset(built, extra=None):
    g, tab = built.g, built.tab
    degs = built.degrees()
    conductor, values = exact_coordinates(g, tab)
    r = len(tab)
    data = {
        "schema_version": 1,
        "group": {"name": g.name, "order": g.n},
        "irr": [{"label": f"X.{i + 1}", "degree": d} for i, d in enumerate(degs)],
        "induced_rows": induced_rows(g, tab),
        "classes": [len(c) for c in g.classes],
        "char_values": {"conductor": conductor, "values": values},
        "supertheories": [
            {"name": "classical",
             "blocks": [[i + 1] for i in range(r)],
             "superclasses": [[k + 1] for k in range(len(g.classes))]},
            {"name": "maximal",
             "blocks": [[1], list(range(2, r + 1))] if r > 1 else [[1]],
             "superclasses": [[1], list(range(2, len(g.classes) + 1))] if r > 1 else [[1]]},
        ],
    }
    if extra:
        data.update(extra)
    return data


def lift_indices(big, small, projection):
    """For each irreducible of the quotient, the index of its lift in big."""
    out = []
    for chi in small.tab:
        lifted = np.array([chi[small.g.class_of[projection[c[0]]]] for c in big.g.classes])
        match = [i for i, psi in enumerate(big.tab) if np.allclose(psi, lifted, atol=1e-8)]
        assert len(match) == 1
        out.append(match[0] + 1)
    return out


def product_built(name, b1, b2):
    g = direct_product(name, b1.g, b2.g)
    # classes of the product are products of classes; reorder tables accordingly
    tab = []
    for chi in b1.tab:
        for psi in b2.tab:
            tab.append([chi[b1.g.class_of[x // b2.g.n]] * psi[b2.g.class_of[x % b2.g.n]]
                        for x in (c[0] for c in g.classes)])
    tab = np.array(tab)
    sizes = np.array([len(c) for c in g.classes])
    gram = (tab * sizes) @ tab.conj().T / g.n
    assert np.allclose(gram, np.eye(len(tab)), atol=1e-8)
    return Built(g, tab)


def write(out_dir, fname, data):
    path = Path(out_dir) / fname
    path.write_text(json.dumps(data, indent=1) + "\n")
    print(f"wrote {path} ({len(data['induced_rows'])} rows)")


SL23_GOLDEN = "x1, x2, x3, x7, x4x5, x4x6, x5x6, x4x5x6"
GL23_GOLDEN = "x1, x2, x3, x6, x7, x8, x4x8, x5x8, x4x5x8"
A6_GOLDEN = ("x1, x1x2, x1x2x6, x1x3, x1x3x6, x1x6, x2x3, x2x3x4x5^2x6^2x7^2, "
             "x2x3x4^2x5x6^2x7^2, x2x4x5x6, x2x7, x3x4x5x6, x3x7, x4x5x7^2, x4x5x6x7^2, x7")


def main(out_dir):
    trivial = build(cyclic_group("1", 1))
    c2 = build(cyclic_group("C2", 2))
    s3 = build(symmetric_group("S3", 3))
    s4 = build(symmetric_group("S4", 4))
    a5 = build(symmetric_group("A5", 5, even_only=True))
    a6 = build(symmetric_group("A6", 6, even_only=True))
    f3 = GF(3)
    sl23 = build(matrix_group("SL(2,3)", f3, lambda d: d == 1))
    gl23 = build(matrix_group("GL(2,3)", f3, lambda d: True))
    sl28 = build(matrix_group("SL(2,8)", GF(2, 3, 0b1011), lambda d: d == 1))

    fix_ties_to(sl23, monomials_to_set(7, parse_monomials(SL23_GOLDEN)))
    fix_ties_to(gl23, monomials_to_set(8, parse_monomials(GL23_GOLDEN)))
    fix_ties_to(a6, monomials_to_set(7, parse_monomials(A6_GOLDEN)))

    # A4 and C3 as the quotients SL(2,3)/Z and SL(2,3)/Q8
    g = sl23.g
    center = [x for x in range(g.n) if all(g.table[x, y] == g.table[y, x] for y in range(g.n))]
    q8 = [x for x in range(g.n) if g.elem_order[x] in (1, 2, 4)]
    a4_group, proj_a4 = quotient("A4", g, center)
    c3_group, proj_c3 = quotient("C3", g, q8)
    a4 = build(a4_group)
    c3 = build(c3_group)
    a4_idx = lift_indices(sl23, a4, proj_a4)
    c3_idx = lift_indices(sl23, c3, proj_c3)

    sl23_c2 = product_built("SL(2,3)xC2", sl23, c2)
    s3_s3 = product_built("S3xS3", s3, s3)

    write(out_dir, "trivial.json", dataset(trivial))
    write(out_dir, "c2.json", dataset(c2))
    write(out_dir, "c3.json", dataset(c3))
    write(out_dir, "s3.json", dataset(s3))
    write(out_dir, "a4.json", dataset(a4))
    write(out_dir, "s4.json", dataset(s4))
    write(out_dir, "sl23.json", dataset(sl23, {"quotients": [
        {"name": "A4", "kernel_indices": a4_idx, "dataset": "a4.json"},
        {"name": "C3", "kernel_indices": c3_idx, "dataset": "c3.json"}]}))
    write(out_dir, "gl23.json", dataset(gl23))
    write(out_dir, "a5.json", dataset(a5))
    write(out_dir, "a6.json", dataset(a6))
    write(out_dir, "sl28.json", dataset(sl28))
    write(out_dir, "sl23xc2.json", dataset(sl23_c2))
    write(out_dir, "s3xs3.json", dataset(s3_s3))


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "data")
