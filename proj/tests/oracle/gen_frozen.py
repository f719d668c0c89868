#!/usr/bin/env python3
"""Independent reference values for the unit tests.

Written straight from the definitions (lattice-path areas, caesura sign
alternation, the s/i/r telescoping contraction, interval-cut monomials with a
Koszul block sign). Shares no code with the C++ library.

    python3 tests/oracle/gen_frozen.py > tests/oracle/frozen.json
"""
import itertools
import json
import random
import sys
from math import comb, factorial


def add(d, k, c):
    v = d.get(k, 0) + c
    if v:
        d[k] = v
    else:
        d.pop(k, None)


def terms(d):
    return [[list(k) if not isinstance(k[0], tuple) else [list(f) for f in k], v]
            for k, v in sorted(d.items())]


# ------------------------------------------------------------------ simplices

def face_boundary(f):
    out = {}
    if len(f) < 2:
        return out
    for j in range(len(f)):
        add(out, f[:j] + f[j + 1:], (-1) ** j)
    return out


def multidiagonal(n, f):
    out = {}
    dim = len(f) - 1
    for cuts in itertools.combinations_with_replacement(range(dim + 1), n - 1):
        c = (0,) + cuts + (dim,)
        add(out, tuple(f[c[i]:c[i + 1] + 1] for i in range(n)), 1)
    return out


def ez(a, b):
    """shuffle map by lattice paths; sign = parity of the area between the path and
    the path along the bottom and up the right side"""
    p, q = len(a) - 1, len(b) - 1
    out = {}
    for rights in itertools.combinations(range(p + q), p):
        i = j = 0
        pts = [(a[0], b[0])]
        area = 0
        for s in range(p + q):
            if s in rights:
                i += 1
            else:
                j += 1
                area += p - i
            pts.append((a[i], b[j]))
        add(out, tuple(pts), (-1) ** area)
    return out


def aw_pair(pts):
    n = len(pts) - 1
    out = {}
    for j in range(n + 1):
        front = tuple(x for x, _ in pts[:j + 1])
        back = tuple(y for _, y in pts[j:])
        if len(set(front)) == len(front) and len(set(back)) == len(back):
            add(out, (front, back), 1)
    return out


# ------------------------------------------------------------------ surjections

def is_surj(x, n):
    return set(x) == set(range(1, n + 1)) and all(x[i] != x[i + 1] for i in range(len(x) - 1))


def bf_boundary(x):
    """caesuras alternate +,-,+,... in order of position; a final occurrence
    takes the opposite of the previous occurrence of its value"""
    n = max(x)
    last = {v: i for i, v in enumerate(x)}
    sign = [0] * len(x)
    s = 1
    prev = {}
    for i, v in enumerate(x):
        if last[v] != i:
            sign[i] = s
            s = -s
        elif v in prev:
            sign[i] = -sign[prev[v]]
        prev[v] = i
    out = {}
    for i, v in enumerate(x):
        if not sign[i]:
            continue
        y = x[:i] + x[i + 1:]
        if is_surj(y, n):
            add(out, y, sign[i])
    return out


def bf_contraction(x):
    """h = s + i s r + i^2 s r^2 + ...: s prepends 1, r drops a lone 1 and
    shifts down, i shifts up and prepends 1"""
    def s(y):
        return (1,) + y

    def r(y):
        if y.count(1) != 1:
            return None
        return tuple(v - 1 for v in y if v != 1)

    def i(y, times):
        for _ in range(times):
            y = (1,) + tuple(v + 1 for v in y)
        return y

    out = {}
    y, t = x, 0
    while y is not None and len(y) > 0:
        z = i(s(y), t)
        if is_surj(z, max(z)):
            add(out, z, 1)
        y, t = r(y), t + 1
    return out


def gens(n, k):
    for x in itertools.product(range(1, n + 1), repeat=n + k):
        if is_surj(x, n):
            yield x


# ------------------------------------------------------------------ the action on simplices

def bf_action(x, m):
    """sum over cuts 0 = m_0 <= ... <= m_N = m; block j = [m_{j-1}, m_j] goes to
    face x_j. Sign: Koszul sign of sorting the blocks by value, a block's length
    being its vertex count, less one for a final occurrence, times (-1)^{m_j}
    over caesuras."""
    N = len(x)
    n = max(x)
    last = {v: i for i, v in enumerate(x)}
    out = {}
    for inner in itertools.combinations_with_replacement(range(m + 1), N - 1):
        c = (0,) + inner + (m,)
        faces = [[] for _ in range(n)]
        ok = True
        for j in range(N):
            for v in range(c[j], c[j + 1] + 1):
                F = faces[x[j] - 1]
                if F and F[-1] >= v:
                    ok = False
                F.append(v)
        if not ok:
            continue
        length = [c[j + 1] - c[j] + (1 if last[x[j]] != j else 0) for j in range(N)]
        e = 0
        for a in range(N):
            for b in range(a + 1, N):
                if x[a] > x[b]:
                    e += length[a] * length[b]
        e += sum(c[j + 1] for j in range(N) if last[x[j]] != j)
        add(out, tuple(tuple(F) for F in faces), (-1) ** e)
    return out


# ------------------------------------------------------------------ symmetric group operad

def sigma_compose(u, vs):
    sizes = [len(v) for v in vs]
    off = [sum(sizes[:i]) for i in range(len(vs))]
    out = []
    for i in range(len(u)):
        b = u[i] - 1
        out += [a + off[b] for a in vs[b]]
    return out


# ------------------------------------------------------------------ minimal resolution

def m_boundary(n, k, i):
    out = {}
    if k == 0:
        return out
    if k % 2:
        add(out, (k - 1, (i + 1) % n), 1)
        add(out, (k - 1, i), -1)
    else:
        for j in range(n):
            add(out, (k - 1, (i + j) % n), 1)
    return out


def m_contraction(n, k, i):
    out = {}
    if k % 2 == 0:
        for j in range(i):
            add(out, (k + 1, j), 1)
    elif i == n - 1:
        add(out, (k + 1, 0), 1)
    return out


def steenrod_constant(m, p):
    q = (p - 1) // 2
    e = (m * (m - 1) // 2) * (p * (p - 1) // 2)
    return ((-1) ** e * factorial(q) ** m) % p


def main():
    rng = random.Random(20261019)
    out = {}

    out["face_boundary"] = [{"face": list(f), "terms": terms(face_boundary(f))}
                            for f in [(0, 1), (0, 2, 5), (1, 3, 4, 6), (0, 1, 2, 3, 4)]]
    out["multidiagonal"] = []
    for n, m in [(2, 1), (2, 3), (3, 2), (4, 2)]:
        d = multidiagonal(n, tuple(range(m + 1)))
        assert len(d) == comb(m + n - 1, n - 1)
        out["multidiagonal"].append({"n": n, "m": m, "terms": terms(d)})
    out["ez"] = []
    for p, q in [(1, 1), (2, 1), (1, 2), (2, 2), (3, 1)]:
        d = ez(tuple(range(p + 1)), tuple(range(q + 1)))
        out["ez"].append({"p": p, "q": q, "terms": [[[list(pt) for pt in k], v] for k, v in sorted(d.items())]})
    out["aw"] = []
    for pts in [((0, 0), (1, 0), (1, 1)), ((0, 0), (0, 1), (1, 1)), ((0, 0), (1, 1), (2, 1), (2, 2))]:
        d = aw_pair(pts)
        out["aw"].append({"points": [list(p) for p in pts], "terms": terms(d)})

    samples = [(2, 1, 2, 3, 4, 2, 3, 1, 5, 4, 1, 2)]
    for n, k in [(2, 2), (3, 2), (3, 3), (4, 3), (4, 4)]:
        pool = list(gens(n, k))
        samples += rng.sample(pool, min(6, len(pool)))
    out["bf_boundary"] = [{"x": list(x), "terms": terms(bf_boundary(x))} for x in samples]

    hs = [(1, 4, 3, 2, 4), (1, 2, 1, 3), (3, 1, 2, 1)]
    for n, k in [(2, 1), (3, 1), (3, 2), (4, 2)]:
        pool = list(gens(n, k))
        hs += rng.sample(pool, min(5, len(pool)))
    out["bf_contraction"] = [{"x": list(x), "terms": terms(bf_contraction(x))} for x in hs]

    acts = [((1, 2, 1, 3, 2, 1, 3), 5), ((1, 2, 1), 2), ((1, 2, 1, 2), 2), ((2, 1, 2), 3), ((1, 2, 3), 2),
            ((1, 3, 2, 1, 3), 2), ((2, 1, 3, 1, 2), 3)]
    out["bf_action"] = []
    for x, m in acts:
        d = bf_action(x, m)
        out["bf_action"].append({"x": list(x), "m": m, "terms": terms(d)})

    out["sigma_compose"] = [{"u": [2, 3, 1], "v": [[2, 1], [3, 1, 2, 4], [3, 2, 1]],
                             "result": sigma_compose([2, 3, 1], [[2, 1], [3, 1, 2, 4], [3, 2, 1]])}]
    for _ in range(10):
        r = rng.randint(1, 4)
        u = rng.sample(range(1, r + 1), r)
        vs = []
        for _ in range(r):
            s = rng.randint(1, 4)
            vs.append(rng.sample(range(1, s + 1), s))
        out["sigma_compose"].append({"u": u, "v": vs, "result": sigma_compose(u, vs)})

    out["minimal"] = []
    for n in (3, 5):
        for k in range(0, 5):
            for i in range(n):
                out["minimal"].append({"n": n, "deg": k, "pow": i,
                                       "d": [[list(g), c] for g, c in sorted(m_boundary(n, k, i).items())],
                                       "h": [[list(g), c] for g, c in sorted(m_contraction(n, k, i).items())]})

    out["steenrod_constant"] = [{"m": m, "p": p, "c": steenrod_constant(m, p)}
                                for p in (3, 5, 7, 11) for m in range(0, 5)]
    json.dump(out, sys.stdout, indent=1)
    sys.stdout.write("\n")


if __name__ == "__main__":
    main()
