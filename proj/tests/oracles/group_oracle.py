#!/usr/bin/env python3
"""Brute-force oracle for group-level invariants.

Independent of the C++ implementation: elements are tuples, conjugacy classes
come from full pairwise conjugation, normal subgroups from unions of classes
that are closed under multiplication. Used once to freeze expected values into
the C++ test suites; rerun with `python3 group_oracle.py` to regenerate.
"""
import itertools
import math
import sys


def mul(a, b):
    # apply a, then b
    return tuple(b[i] for i in a)


def inv(a):
    r = [0] * len(a)
    for i, x in enumerate(a):
        r[x] = i
    return tuple(r)


def closure(gens, degree):
    ident = tuple(range(degree))
    elems = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = mul(x, g)
                if y not in elems:
                    elems.add(y)
                    nxt.append(y)
        frontier = nxt
    return elems


def cycles(degree, spec):
    p = list(range(degree))
    for cyc in spec:
        for i, x in enumerate(cyc):
            p[x] = cyc[(i + 1) % len(cyc)]
    return tuple(p)


def order(a):
    ident = tuple(range(len(a)))
    k, x = 1, a
    while x != ident:
        x = mul(x, a)
        k += 1
    return k


def classes(G):
    G = list(G)
    seen = set()
    out = []
    for g in G:
        if g in seen:
            continue
        cls = frozenset(mul(mul(inv(x), g), x) for x in G)
        seen |= cls
        out.append(cls)
    return out


def real_classes(cl):
    index = {}
    for i, c in enumerate(cl):
        for g in c:
            index[g] = i
    groups = set()
    for i, c in enumerate(cl):
        g = next(iter(c))
        j = index[inv(g)]
        groups.add(frozenset((i, j)))
    return groups, index


def prime_factors(n):
    f, p = set(), 2
    while p * p <= n:
        while n % p == 0:
            f.add(p)
            n //= p
        p += 1
    if n > 1:
        f.add(n)
    return f


def prim(G):
    cl = classes(G)
    rc, _ = real_classes(cl)
    return sum(1 for r in rc if len(prime_factors(order(next(iter(cl[min(r)]))))) >= 2)


def normal_subgroups(G):
    cl = classes(G)
    n = len(G)
    ident = tuple(range(len(next(iter(G)))))
    id_idx = next(i for i, c in enumerate(cl) if ident in c)
    others = [i for i in range(len(cl)) if i != id_idx]
    found = []
    for r in range(len(others) + 1):
        for combo in itertools.combinations(others, r):
            size = 1 + sum(len(cl[i]) for i in combo)
            if n % size:
                continue
            S = set(cl[id_idx])
            for i in combo:
                S |= cl[i]
            if all(mul(a, b) in S for a in S for b in S):
                found.append(frozenset(S))
    return found


def mono_real(H, G):
    """(h)_G^± ∩ H == (h)_H^± for all h in H."""
    clG = classes(G)
    clH = classes(H)
    _, idxG = real_classes(clG)
    _, idxH = real_classes(clH)
    for h in H:
        gG = {idxG[h], idxG[inv(h)]}
        hH = {idxH[h], idxH[inv(h)]}
        lhs = {x for x in H if idxG[x] in gG}
        rhs = {x for x in H if idxH[x] in hH}
        if lhs != rhs:
            return False
    return True


def fingerprint(H):
    cl = classes(H)
    sizes = sorted((order(next(iter(c))), len(c)) for c in cl)
    return (len(H), len(cl), tuple(sizes))


def cyclic(n):
    return [cycles(n, [list(range(n))])]


def direct(*factors):
    offset = 0
    total = sum(d for d, _ in factors)
    gens = []
    for d, gs in factors:
        for g in gs:
            p = list(range(total))
            for i in range(d):
                p[offset + i] = offset + g[i]
            gens.append(tuple(p))
        offset += d
    return total, gens


S4 = (4, [cycles(4, [[0, 1, 2, 3]]), cycles(4, [[0, 1]])])
A4 = (4, [cycles(4, [[0, 1, 2]]), cycles(4, [[0, 1], [2, 3]])])
S3 = (3, [cycles(3, [[0, 1, 2]]), cycles(3, [[0, 1]])])
C3 = (3, cyclic(3))
C6 = (6, cyclic(6))


def dihedral(n):
    rot = cycles(n, [list(range(n))])
    refl = tuple((-i) % n for i in range(n))
    return (n, [rot, refl])


def report(name, degree, gens, normals=False, mono=False):
    G = closure(gens, degree)
    cl = classes(G)
    rc, _ = real_classes(cl)
    line = f"{name}: order={len(G)} classes={len(cl)} real={len(rc)} prim={prim(G)}"
    print(line)
    if normals:
        ns = sorted(normal_subgroups(G), key=len)
        print(f"  normal subgroup orders: {[len(N) for N in ns]}")
        if mono:
            passing = [N for N in ns if 1 < len(N) < len(G) and mono_real(set(N), G)]
            print(f"  mono_real proper nontrivial: {[len(N) for N in passing]}")
            for N in passing:
                print(f"    fingerprint: {fingerprint(N)}")
    sys.stdout.flush()


if __name__ == "__main__" and "--aut-a6" not in sys.argv:
    report("C6", *C6, normals=True)
    report("A4", *A4, normals=True)
    report("S4", *S4, normals=True)
    report("C3xS4", *direct(C3, S4), normals=True, mono=True)
    report("S3xA4", *direct(S3, A4), normals=True, mono=True)
    report("C6xC6", *direct(C6, C6))
    # A4 wr C2 on 8 points and its extension by a diagonal transposition
    swap = cycles(8, [[0, 4], [1, 5], [2, 6], [3, 7]])
    g3 = [cycles(8, [[0, 1, 2]]), cycles(8, [[0, 1], [2, 3]]), swap]
    report("A4wrC2", 8, g3, normals=True, mono=True)
    print(f"  G3 fingerprint: {fingerprint(closure(g3, 8))}")
    g4 = g3 + [cycles(8, [[0, 1], [4, 5]])]
    report("A4^2:C2^2", 8, g4, normals=True, mono=True)
    report("C6xA4xD30", *direct(C6, A4, dihedral(15)))


def gf9():
    # F_9 = F_3[i]/(i^2+1); element (a, b) = a + b*i, index a + 3b
    elems = [(a, b) for b in range(3) for a in range(3)]
    idx = {e: n for n, e in enumerate(elems)}

    def add(x, y):
        return ((x[0] + y[0]) % 3, (x[1] + y[1]) % 3)

    def mulf(x, y):
        return ((x[0] * y[0] - x[1] * y[1]) % 3, (x[0] * y[1] + x[1] * y[0]) % 3)

    return elems, idx, add, mulf


def aut_a6():
    """PGammaL(2,9) acting on the projective line (10 points, infinity = 9)."""
    elems, idx, add, mulf = gf9()
    inf = 9

    def mobius(a, b, c, d):
        # x -> (a x + b) / (c x + d)
        def f(x):
            if x == inf:
                return inf if c == (0, 0) else idx[mulf(a, finv(c))]
            X = elems[x]
            num = add(mulf(a, X), b)
            den = add(mulf(c, X), d)
            if den == (0, 0):
                return inf
            return idx[mulf(num, finv(den))]
        return tuple(f(x) for x in range(10))

    def finv(x):
        for y in elems:
            if mulf(x, y) == (1, 0):
                return y
        raise ZeroDivisionError

    one, zero = (1, 0), (0, 0)
    nu = (1, 1)  # 1 + i has order 8
    gens = [mobius(one, one, zero, one), mobius(nu, zero, zero, one),
            mobius(zero, (2, 0), one, zero)]
    frob = tuple(idx[(e[0], (-e[1]) % 3)] for e in elems) + (inf,)
    gens.append(frob)
    return 10, gens


def normal_closure_subgroups(G):
    """Normal subgroups as joins of normal closures of classes."""
    cl = classes(G)
    degree = len(next(iter(G)))

    def gen_closure(seed):
        S = {tuple(range(degree))} | set(seed)
        frontier = list(S)
        while frontier:
            nxt = []
            for a in frontier:
                for b in list(S):
                    for y in (mul(a, b), mul(b, a)):
                        if y not in S:
                            S.add(y)
                            nxt.append(y)
            frontier = nxt
        return frozenset(S)

    closures = {gen_closure(c) for c in cl}
    result = set(closures)
    changed = True
    while changed:
        changed = False
        for A in list(result):
            for B in list(result):
                if not B <= A and not A <= B:
                    J = frozenset(mul(a, b) for a in A for b in B)
                    if J not in result:
                        result.add(J)
                        changed = True
    return sorted(result, key=len)


if __name__ == "__main__" and "--aut-a6" in sys.argv:
    d, gens = aut_a6()
    G = closure(gens, d)
    cl = classes(G)
    rc, _ = real_classes(cl)
    print(f"Aut(A6): order={len(G)} classes={len(cl)} real={len(rc)} prim={prim(G)}")
    ns = normal_closure_subgroups(G)
    print("  normal orders:", [len(N) for N in ns])
    for N in ns:
        if 1 < len(N) < len(G):
            print(f"  |N|={len(N)} classes={len(classes(N))} prim={prim(N)} mono_real={mono_real(set(N), G)}")
