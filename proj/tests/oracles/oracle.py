"""Independent brute-force oracle used to freeze expected values in the C++ tests.

Finite fields here are flat F_p[x]/(m) with the first irreducible monic m in
increasing-integer order; point counts do not depend on the model chosen.
Run: python3 tests/oracles/oracle.py
"""
import itertools
from fractions import Fraction

from sympy import factorint, isprime


class GF:
    def __init__(self, p, k):
        self.p, self.k, self.q = p, k, p ** k
        self.mod = self._first_irreducible() if k > 1 else [0, 1]

    def _digits(self, a):
        out = []
        for _ in range(self.k):
            out.append(a % self.p)
            a //= self.p
        return out

    def _undigits(self, d):
        r = 0
        for c in reversed(d):
            r = r * self.p + c
        return r

    def _polymulmod(self, a, b, mod):
        p, k = self.p, len(mod) - 1
        prod = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            for j, y in enumerate(b):
                prod[i + j] = (prod[i + j] + x * y) % p
        for i in range(len(prod) - 1, k - 1, -1):
            c = prod[i]
            if c:
                for j in range(k + 1):
                    prod[i - k + j] = (prod[i - k + j] - c * mod[j]) % p
        return (prod + [0] * k)[:k]

    def _first_irreducible(self):
        p, k = self.p, self.k
        for code in range(p ** k):
            low = []
            c = code
            for _ in range(k):
                low.append(c % p)
                c //= p
            mod = low + [1]
            # brute force: no monic factor of degree 1..k//2
            if all(not self._divides(f, mod) for d in range(1, k // 2 + 1)
                   for f in self._monics(d)):
                return mod
        raise RuntimeError

    def _monics(self, d):
        for code in range(self.p ** d):
            low = []
            c = code
            for _ in range(d):
                low.append(c % self.p)
                c //= self.p
            yield low + [1]

    def _divides(self, f, g):
        g = list(g)
        p, df = self.p, len(f) - 1
        for i in range(len(g) - 1, df - 1, -1):
            c = g[i]
            if c:
                for j in range(df + 1):
                    g[i - df + j] = (g[i - df + j] - c * f[j]) % p
        return all(x == 0 for x in g[:df])

    def add(self, a, b):
        return self._undigits([(x + y) % self.p for x, y in zip(self._digits(a), self._digits(b))])

    def neg(self, a):
        return self._undigits([(-x) % self.p for x in self._digits(a)])

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if self.k == 1:
            return a * b % self.p
        return self._undigits(self._polymulmod(self._digits(a), self._digits(b), self.mod))

    def inv(self, a):
        for b in range(1, self.q):
            if self.mul(a, b) == 1:
                return b
        raise ZeroDivisionError


def count_naive(F, a):
    a1, a2, a3, a4, a6 = a
    n = 1
    for x in range(F.q):
        x2 = F.mul(x, x)
        rhs = F.add(F.add(F.add(F.mul(x2, x), F.mul(a2, x2)), F.mul(a4, x)), a6)
        for y in range(F.q):
            lhs = F.add(F.add(F.mul(y, y), F.mul(F.mul(a1, x), y)), F.mul(a3, y))
            if lhs == rhs:
                n += 1
    return n


def embed(Fsmall, Fbig, c):
    # only used for prime-field coefficients (codes coincide)
    assert c < Fsmall.p
    return c


def disc(F, a):
    a1, a2, a3, a4, a6 = a
    m, ad, sb = F.mul, F.add, F.sub
    def sc(n, x):
        r = 0
        for _ in range(n % F.p):
            r = ad(r, x)
        return r
    b2 = ad(m(a1, a1), sc(4, a2))
    b4 = ad(m(a1, a3), sc(2, a4))
    b6 = ad(m(a3, a3), sc(4, a6))
    b8 = sb(ad(ad(m(m(a1, a1), a6), sc(4, m(a2, a6))), sb(m(a2, m(a3, a3)), m(m(a1, a3), a4))), m(a4, a4))
    d = sb(sb(sb(m(m(F.neg(b2), b2), b8), sc(8, m(b4, m(b4, b4)))), sc(27, m(b6, b6))), F.neg(sc(9, m(m(b2, b4), b6))))
    return d


def first_ordinary(F):
    first = None
    for a in itertools.product(range(F.q), repeat=5):
        if disc(F, a) == 0:
            continue
        n = count_naive(F, a)
        t = F.q + 1 - n
        if t % F.p != 0:
            if first is None:
                first = (a, t)
            if t == 1:
                return a, t
    return first


def psi(n):
    return sum((Fraction(1, p) for p in factorint(n)), Fraction(0))


def trace_seq(q, t, L):
    ts = [2, t]
    for _ in range(2, L + 1):
        ts.append(t * ts[-1] - q * ts[-2])
    return ts


if __name__ == "__main__":
    print("F_25 modulus:", GF(5, 2).mod)
    for p, k in [(2, 1), (3, 1), (5, 1), (7, 1), (3, 2)]:
        F = GF(p, k)
        a, t = first_ordinary(F)
        print(f"first ordinary over F_{F.q}: a={a} t={t}")
    fixtures = [(5, (0, 0, 0, 1, 0))]
    for p, k in [(2, 1), (3, 1), (5, 1), (7, 1)]:
        F = GF(p, k)
        fixtures.append((p, first_ordinary(F)[0]))
    for p, a in fixtures:
        F = GF(p, 1)
        N1 = count_naive(F, a)
        t = p + 1 - N1
        counts = []
        for ell in (1, 2, 3):
            Fe = GF(p, ell)
            counts.append(count_naive(Fe, a))
        ts = trace_seq(p, t, 3)
        rec = [p ** l + 1 - ts[l] for l in (1, 2, 3)]
        print(f"q={p} a={a} N1={N1} t={t} naive={counts} recurrence={rec}")
        rows = []
        ts = trace_seq(p, t, 13)
        for ell in [2, 3, 5, 7, 11, 13]:
            N = p ** ell + 1 - ts[ell]
            assert N % N1 == 0
            e = N // N1
            rows.append((ell, e, factorint(e), psi(e)))
        for r in rows:
            print("   ", r)
        print("    min psi:", min(rows, key=lambda r: r[3]))


# ---------------------------------------------------------------------------
# group-law based fixtures (generation fraction, z-sums)

def points(F, a):
    a1, a2, a3, a4, a6 = a
    pts = [None]
    for x in range(F.q):
        x2 = F.mul(x, x)
        rhs = F.add(F.add(F.add(F.mul(x2, x), F.mul(a2, x2)), F.mul(a4, x)), a6)
        for y in range(F.q):
            lhs = F.add(F.add(F.mul(y, y), F.mul(F.mul(a1, x), y)), F.mul(a3, y))
            if lhs == rhs:
                pts.append((x, y))
    return pts


def ec_add(F, a, P, Q):
    a1, a2, a3, a4, a6 = a
    if P is None:
        return Q
    if Q is None:
        return P
    x1, y1 = P
    x2, y2 = Q
    negy2 = F.sub(F.sub(F.neg(y2), F.mul(a1, x2)), a3)
    if x1 == x2 and y1 == negy2:
        return None
    if x1 == x2:
        num = F.sub(F.add(F.add(F.mul(3 % F.p, F.mul(x1, x1)) if F.k == 1 else
                                F.add(F.add(F.mul(x1, x1), F.mul(x1, x1)), F.mul(x1, x1)),
                                F.mul(F.add(a2, a2), x1)), a4), F.mul(a1, y1))
        den = F.add(F.add(F.add(y1, y1), F.mul(a1, x1)), a3)
    else:
        num = F.sub(y2, y1)
        den = F.sub(x2, x1)
    lam = F.mul(num, F.inv(den))
    x3 = F.sub(F.sub(F.sub(F.add(F.mul(lam, lam), F.mul(a1, lam)), a2), x1), x2)
    y3 = F.sub(F.sub(F.sub(F.neg(F.mul(F.add(lam, a1), x3)), F.mul(F.sub(y1, F.mul(lam, x1)), 1)), a3), 0)
    # y3 = -(lam + a1) x3 - nu - a3 with nu = y1 - lam x1
    return (x3, y3)


def subgroup(F, a, gens):
    H = {None}
    for g in gens:
        if g in H:
            continue
        multiples = [None]
        cur = g
        while cur not in H:
            multiples.append(cur)
            cur = ec_add(F, a, cur, g)
        # H + <g>: coset sweep until closure
        newH = set(H)
        frontier = list(H)
        while frontier:
            nxt = []
            for h in frontier:
                s = ec_add(F, a, h, g)
                if s not in newH:
                    newH.add(s)
                    nxt.append(s)
            frontier = nxt
        H = newH
    return H


def frob(F, P, q):
    if P is None:
        return None
    x, y = P
    def pw(v):
        r = 1
        for _ in range(q):
            r = F.mul(r, v)
        return r
    return (pw(x), pw(y))


def generation_fraction(p, a, ell):
    Fb = GF(p, ell)
    E = points(Fb, a)
    base = [P for P in E if P is None or (frob(Fb, P, p) == P)]
    good = 0
    for P in E:
        gens = base + [P]
        cur = P
        for _ in range(ell - 1):
            cur = frob(Fb, cur, p)
            gens.append(cur)
        H = subgroup(Fb, a, gens)
        if len(H) == len(E):
            good += 1
    n = len(E) // len(base)
    return good, len(E), n


def z_sum_set(F, a, G):
    zs = [F.mul(y, F.inv(x)) for P in G if P is not None for (x, y) in [P] if x != 0]
    return {F.add(u, v) for u in zs for v in zs}


def first_covering(p, k):
    F = GF(p, k)
    for a in itertools.product(range(F.q), repeat=5):
        if disc(F, a) == 0:
            continue
        E = points(F, a)
        if len(z_sum_set(F, a, E)) == F.q:
            return a, len(E)


if __name__ == "__main__":
    g = generation_fraction(5, (0, 0, 0, 1, 0), 3)
    print("genprob y^2=x^3+x /F_5 ell=3:", g)
    g = generation_fraction(5, (0, 0, 0, 1, 0), 2)
    print("genprob y^2=x^3+x /F_5 ell=2:", g)
    g = generation_fraction(2, (1, 0, 1, 0, 1), 4)
    print("genprob first ordinary /F_2 ell=4:", g)
    F5 = GF(5, 1)
    E = points(F5, (0, 0, 0, 1, 0))
    print("F_5 y^2=x^3+x points:", E, "sums:", z_sum_set(F5, (0, 0, 0, 1, 0), E))
    print("first covering over F_17:", first_covering(17, 1))
    print("first covering over F_16:", first_covering(2, 4))
