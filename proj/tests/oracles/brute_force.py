"""Independent brute-force oracle for frozen expected values in the C++ tests.

Uses plain permutation tuples and sympy; shares no code with the library.
Run: python3 tests/oracles/brute_force.py
"""
import itertools
import sympy as sp


def compose(p, q):
    # apply p then q
    return tuple(q[p[i]] for i in range(len(p)))


def parse_cycles(s, n):
    perm = list(range(n))
    for cyc in s.replace(")", ") ").split(")"):
        cyc = cyc.strip().lstrip("(")
        if not cyc:
            continue
        pts = [int(t) for t in cyc.split()]
        for a, b in zip(pts, pts[1:] + pts[:1]):
            perm[a] = b
    return tuple(perm)


def closure(gens, n):
    ident = tuple(range(n))
    elems = [ident]
    seen = {ident}
    i = 0
    while i < len(elems):
        for g in gens:
            h = compose(elems[i], g)
            if h not in seen:
                seen.add(h)
                elems.append(h)
        i += 1
    return elems


def inverse(p):
    inv = [0] * len(p)
    for i, v in enumerate(p):
        inv[v] = i
    return tuple(inv)


def classes(G):
    left = set(G)
    out = []
    for g in G:
        if g not in left:
            continue
        cl = {compose(compose(inverse(h), g), h) for h in G}
        out.append(frozenset(cl))
        left -= cl
    return out


def set_partitions(items):
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for p in set_partitions(rest):
        yield [[first]] + p
        for i in range(len(p)):
            yield p[:i] + [[first] + p[i]] + p[i + 1:]


def is_closed(G, parts):
    part_of = {}
    for idx, part in enumerate(parts):
        for g in part:
            part_of[g] = idx
    for K in parts:
        for L in parts:
            coef = {g: 0 for g in G}
            for x in K:
                for y in L:
                    coef[compose(x, y)] += 1
            for part in parts:
                vals = {coef[g] for g in part}
                if len(vals) > 1:
                    return False
    return True


def count_theories(G):
    cls = classes(G)
    ident = tuple(range(len(G[0])))
    nonid = [c for c in cls if ident not in c]
    count = 0
    shapes = []
    for p in set_partitions(list(range(len(nonid)))):
        parts = [[ident]] + [sorted(set().union(*[nonid[i] for i in blk])) for blk in p]
        if is_closed(G, parts):
            count += 1
            shapes.append(len(parts))
    return count, sorted(shapes)


def group_det(G, kappa, nvars):
    xs = sp.symbols(" ".join(f"x{i}" for i in range(nvars)))
    if nvars == 1:
        xs = (xs,)
    idx = {g: i for i, g in enumerate(G)}
    M = sp.Matrix(len(G), len(G), lambda i, j: xs[kappa[compose(G[i], inverse(G[j]))]])
    return sp.expand(M.det(method="berkowitz")), xs


FIXTURES = {
    "C2": (["(0 1)"], 2),
    "C3": (["(0 1 2)"], 3),
    "C4": (["(0 1 2 3)"], 4),
    "C2xC2": (["(0 1)", "(2 3)"], 4),
    "C5": (["(0 1 2 3 4)"], 5),
    "C6": (["(0 1 2 3 4 5)"], 6),
    "S3": (["(0 1)", "(0 1 2)"], 3),
    "C7": (["(0 1 2 3 4 5 6)"], 7),
    "C8": (["(0 1 2 3 4 5 6 7)"], 8),
    "C2xC4": (["(0 1)", "(2 3 4 5)"], 6),
    "C2xC2xC2": (["(0 1)", "(2 3)", "(4 5)"], 6),
    "D4": (["(0 1 2 3)", "(1 3)"], 4),
    "Q8": (["(0 1 2 3)(4 5 6 7)", "(0 4 2 6)(1 7 3 5)"], 8),
    "C9": (["(0 1 2 3 4 5 6 7 8)"], 9),
    "C3xC3": (["(0 1 2)", "(3 4 5)"], 6),
    "C10": (["(0 1 2 3 4 5 6 7 8 9)"], 10),
    "D5": (["(0 1 2 3 4)", "(1 4)(2 3)"], 5),
    "C11": (["(0 1 2 3 4 5 6 7 8 9 10)"], 11),
    "C12": (["(0 1 2 3 4 5 6 7 8 9 10 11)"], 12),
    "C2xC6": (["(0 1)", "(2 3 4 5 6 7)"], 8),
    "D6": (["(0 1 2 3 4 5)", "(1 5)(2 4)"], 6),
    "A4": (["(0 1 2)", "(1 2 3)"], 4),
    "Dic3": (["(0 1 2)", "(1 2)(3 4 5 6)"], 7),
}


def main():
    import sys
    groups = {}
    for name, (gens, deg) in FIXTURES.items():
        groups[name] = closure([parse_cycles(g, deg) for g in gens], deg)

    print("class sizes:")
    for name in ["S3", "Q8", "D4", "A4"]:
        print(" ", name, sorted(len(c) for c in classes(groups[name])))

    S3 = groups["S3"]
    cls = classes(S3)
    ident = S3[0]
    T = next(c for c in cls if len(c) == 3)
    R = next(c for c in cls if len(c) == 2)
    coef = {}
    for x in T:
        for y in T:
            z = compose(x, y)
            coef[z] = coef.get(z, 0) + 1
    print("S3 T^2: identity", coef.get(ident, 0), "3-cycle", coef.get(next(iter(R)), 0),
          "transposition", coef.get(next(iter(T)), 0))

    # C3 full group determinant
    C3 = groups["C3"]
    det, xs = group_det(C3, {g: i for i, g in enumerate(C3)}, 3)
    print("C3 det:", det)

    # S3 class-collapsed determinant, variables (identity, transpositions, 3-cycles)
    kappa = {}
    for g in S3:
        kappa[g] = 0 if g == ident else (1 if g in T else 2)
    det, (x1, x2, x3) = group_det(S3, kappa, 3)
    target = sp.expand((x1 + 3 * x2 + 2 * x3) * (x1 - 3 * x2 + 2 * x3) * (x1 - x3) ** 4)
    print("S3 fine det matches product:", sp.expand(det - target) == 0)
    print("S3 fine det factor:", sp.factor(det))

    # C4 spectral multiplicities on inversion partition {1},{a2},{a,a3}
    C4 = groups["C4"]
    a = parse_cycles("(0 1 2 3)", 4)
    e = C4[0]
    a2 = compose(a, a)
    a3 = compose(a2, a)
    kappa = {e: 0, a2: 1, a: 2, a3: 2}
    det, xs = group_det(C4, kappa, 3)
    print("C4 inversion det factor:", sp.factor(det))

    print("theory counts:")
    only = sys.argv[1:] or list(FIXTURES)
    for name in only:
        c, shapes = count_theories(groups[name])
        print(f"  {name}: {c} {shapes}")


if __name__ == "__main__":
    main()
