"""Brute-force oracles for the combinatorial test values.

Independent of the C++ code paths: polyindices are generated by a
recursive bounded search (not the partition bijection), the commutator
coefficients by literally applying the one-step rewrite rules.
"""
from math import comb, factorial, exp, pi, sqrt
from functools import lru_cache
from itertools import product
from collections import defaultdict


def pentagonal(n):
    p = [1] + [0] * n
    for m in range(1, n + 1):
        s, j = 0, 1
        while True:
            g1 = j * (3 * j - 1) // 2
            if g1 > m:
                break
            sign = 1 if j % 2 else -1
            s += sign * p[m - g1]
            g2 = j * (3 * j + 1) // 2
            if g2 <= m:
                s += sign * p[m - g2]
            j += 1
        p[m] = s
    return p


def polys_upto(order):
    """All 1-d polyindices (as sorted tuples of (i, count)) with order <= order."""
    out = []

    def rec(i, remaining, cur):
        if i + 1 > remaining:
            out.append(tuple(cur))
            return
        for c in range(0, remaining // (i + 1) + 1):
            rec(i + 1, remaining - c * (i + 1), cur + ([(i, c)] if c else []))

    rec(0, order, [])
    return out


def order1(p):
    return sum((i + 1) * c for i, c in p)


def index_set_bruteforce(d, k):
    ps = polys_upto(k)
    by_order = defaultdict(list)
    for p in ps:
        by_order[order1(p)].append(p)
    slots = 2 * d + 2
    res = []
    for comp in product(range(k + 1), repeat=slots):
        if sum(comp) != k:
            continue
        for combo in product(*[by_order[c] for c in comp]):
            res.append(combo)
    return res


def count_formula(d, k, p):
    slots = 2 * d + 2
    tot = 0
    for comp in product(range(k + 1), repeat=slots):
        if sum(comp) == k:
            prod_ = 1
            for c in comp:
                prod_ *= p[c]
            tot += prod_
    return tot


def ofact(p):
    r = 1
    for i, c in p:
        r *= factorial(c) * factorial(i + 1) ** c
    return r


def add(p, i, delta):
    m = dict(p)
    m[i] = m.get(i, 0) + delta
    assert m[i] >= 0
    if m[i] == 0:
        del m[i]
    return tuple(sorted(m.items()))


def step(terms, d):
    """terms: dict key -> coeff, key = (alpha, beta_tuple, a, b_tuple)."""
    out = defaultdict(int)
    for (al, be, a, b), c in terms.items():
        def put(k2, w):
            out[k2] += c * w
        for i, m in al:
            put((add(add(al, i, -1), i + 1, 1), be, a, b), m)
        for s in range(d):
            for i, m in be[s]:
                nb = list(be); nb[s] = add(add(be[s], i, -1), i + 1, 1)
                put((al, tuple(nb), a, b), m)
        put((add(al, 0, 1), be, a, b), 1)
        put((al, be, add(a, 0, 1), b), 1)
        for s in range(d):
            nb = list(be); nb[s] = add(be[s], 0, 1)
            put((al, tuple(nb), a, b), 1)
            nbb = list(b); nbb[s] = add(b[s], 0, 1)
            put((al, be, a, tuple(nbb)), 1)
        for i, m in a:
            put((al, be, add(add(a, i, -1), i + 1, 1), b), m)
        for s in range(d):
            for i, m in b[s]:
                nbb = list(b); nbb[s] = add(add(b[s], i, -1), i + 1, 1)
                put((al, be, a, tuple(nbb)), m)
    return dict(out)


if __name__ == "__main__":
    p = pentagonal(40)
    print("p(0..10)", p[:11])
    print("p(30)", p[30], "p(40)", p[40])
    for d, kmax in [(1, 8), (2, 6), (3, 4)]:
        print("d", d, "formula counts", [count_formula(d, k, p) for k in range(kmax + 1)])
    for d, kmax in [(1, 5), (2, 3)]:
        print("d", d, "bruteforce counts", [len(index_set_bruteforce(d, k)) for k in range(kmax + 1)])
    for d in (1, 2):
        zero = ((), tuple(() for _ in range(d)), (), tuple(() for _ in range(d)))
        e = {zero: 1}
        for k in range(1, 5):
            e = step(e, d)
            # closed form check
            for (al, be, a, b), c in e.items():
                den = ofact(al) * ofact(a)
                for s in range(d):
                    den *= ofact(be[s]) * ofact(b[s])
                assert factorial(k) % den == 0 and factorial(k) // den == c
            print("d", d, "k", k, "terms", len(e), "coeff sum", sum(e.values()))
    # d=1,k=2 specific coefficients
    z = ()
    print("C(delta0, beta delta0) =", e if False else "")
    print("binom checks", comb(4, 3), comb(8, 5))
    print("partition bound k=1", exp(pi * sqrt(2 / 3)))
