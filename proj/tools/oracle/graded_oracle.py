#!/usr/bin/env python3
"""Independent oracle for the graded symplectic engine.

Implements N-graded polynomial algebras, the shifted-cotangent canonical
bracket, and the derived L-infinity brackets directly from the axioms:

  * Koszul sign (-1)^{|x||y|} per transposition, odd squares vanish;
  * coordinate table {q_i, p^i} = -1, {q,q} = {p,p} = 0, everything else
    generated by graded skew symmetry and the two Leibniz laws
        {f, gh} = {f,g} h + (-1)^{|g|(|f|-n)} g {f,h}
        {fg, h} = f {g,h} + (-1)^{|g|(|h|-n)} {f,h} g ;
  * l^k(f_1..f_k) = (-1)^{sum_i (k-i)(|f_i|-n)} 0^*{...{theta, f_1}...f_k}.

The C++ engine implements the same mathematics with a *different* recursion
strategy (left-slot peeling vs. the right-slot peeling below); agreement on
the frozen values below is the cross-check.  Run this script to regenerate
the expected values quoted in tests/frozen_values.hpp and scenarios/*.scn.
"""

from fractions import Fraction
from itertools import combinations
import random

# ---------------------------------------------------------------- charts ---

class Chart:
    """Ordered list of (name, degree); optionally a shifted cotangent chart."""

    def __init__(self, coords):
        self.names = [c[0] for c in coords]
        self.degrees = [c[1] for c in coords]
        self.index = {n: i for i, n in enumerate(self.names)}
        self.n = None            # cotangent shift
        self.momentum_of = {}    # base ordinal -> momentum ordinal
        self.base_of = {}        # momentum ordinal -> base ordinal

    def deg(self, i):
        return self.degrees[i]

    def is_odd(self, i):
        return self.degrees[i] % 2 == 1


def shift_cotangent(base_coords, n):
    for (_, d) in base_coords:
        assert n >= d, "shift must dominate base degrees"
    coords = list(base_coords) + [("p(%s)" % nm, n - d) for (nm, d) in base_coords]
    ch = Chart(coords)
    ch.n = n
    m = len(base_coords)
    for i in range(m):
        ch.momentum_of[i] = m + i
        ch.base_of[m + i] = i
    return ch

# ----------------------------------------------------------- polynomials ---
# monomial: tuple of (ordinal, exponent), sorted by ordinal, exponents >= 1
# poly: dict monomial -> Fraction (no zero values)

def mono_degree(ch, m):
    return sum(ch.deg(o) * e for o, e in m)


def mono_mul(ch, m1, m2):
    """Merge-sort factors, count odd-odd transpositions, kill odd squares."""
    sign = 1
    out = []
    i = j = 0
    # odd_tail[k] = number of odd factors in m1[k:], counted with multiplicity
    odd_tail = [0] * (len(m1) + 1)
    for k in range(len(m1) - 1, -1, -1):
        o, e = m1[k]
        odd_tail[k] = odd_tail[k + 1] + (e if ch.is_odd(o) else 0)
    while i < len(m1) and j < len(m2):
        o1, e1 = m1[i]
        o2, e2 = m2[j]
        if o1 < o2:
            out.append((o1, e1)); i += 1
        elif o1 > o2:
            # move m2's factor left past m1's remaining tail
            if ch.is_odd(o2):
                if e2 > 1:
                    return 0, ()
                sign *= (-1) ** odd_tail[i]
            out.append((o2, e2)); j += 1
        else:
            if ch.is_odd(o1):
                return 0, ()        # odd square
            # even factor commutes with everything
            out.append((o1, e1 + e2)); i += 1; j += 1
    while i < len(m1):
        out.append(m1[i]); i += 1
    while j < len(m2):
        out.append(m2[j]); j += 1
    return sign, tuple(out)


def padd(p, q, c=Fraction(1)):
    r = dict(p)
    for m, a in q.items():
        v = r.get(m, Fraction(0)) + a * c
        if v == 0:
            r.pop(m, None)
        else:
            r[m] = v
    return r


def pscale(p, c):
    if c == 0:
        return {}
    return {m: a * c for m, a in p.items()}


def pmul(ch, p, q):
    r = {}
    for m1, a1 in p.items():
        for m2, a2 in q.items():
            s, m = mono_mul(ch, m1, m2)
            if s == 0:
                continue
            v = r.get(m, Fraction(0)) + a1 * a2 * s
            if v == 0:
                r.pop(m, None)
            else:
                r[m] = v
    return r


def coord(ch, name):
    return {((ch.index[name], 1),): Fraction(1)}


def const(c):
    c = Fraction(c)
    return {(): c} if c != 0 else {}


def degrees_of(ch, p):
    return {mono_degree(ch, m) for m in p}


def homo_parts(ch, p):
    parts = {}
    for m, a in p.items():
        parts.setdefault(mono_degree(ch, m), {})[m] = a
    return parts

# --------------------------------------------------------------- partial ---

def partial(ch, p, cname):
    """Left partial derivative with respect to coordinate `cname`."""
    ci = ch.index[cname]
    out = {}
    for m, a in p.items():
        prefix_deg = 0
        for k, (o, e) in enumerate(m):
            if o == ci:
                sign = (-1) ** (ch.deg(ci) * prefix_deg)
                rest = m[:k] + ((o, e - 1),) if e > 1 else m[:k] + m[k + 1:]
                rest = tuple(f for f in rest if f[1] > 0)
                v = out.get(rest, Fraction(0)) + a * e * sign
                if v == 0:
                    out.pop(rest, None)
                else:
                    out[rest] = v
                break        # factors sorted: coordinate appears once
            prefix_deg += ch.deg(o) * e
    return out

# --------------------------------------------------------------- bracket ---

def table(ch, c1, c2):
    """Coordinate bracket {c1, c2}: {q, p_q} = -1 and graded-skew image."""
    n = ch.n
    if c1 in ch.momentum_of and ch.momentum_of[c1] == c2:
        return Fraction(-1)
    if c1 in ch.base_of and ch.base_of[c1] == c2:
        # {p, q} = -(-1)^{(|p|-n)(|q|-n)} {q, p}
        s = (-1) ** (((ch.deg(c1) - n) % 2) * ((ch.deg(c2) - n) % 2))
        return Fraction(s)           # = -s * (-1)
    return Fraction(0)


def _br_cm(ch, c, m):
    """{c, m} for a single coordinate c and monomial m (right-slot peel)."""
    if len(m) == 1 and m[0][1] == 1:
        v = table(ch, c, m[0][0])
        return {(): v} if v != 0 else {}
    (d, e) = m[0]
    rest = ((d, e - 1),) + m[1:] if e > 1 else m[1:]
    dd = {((d, 1),): Fraction(1)}
    # {c, d rest} = {c,d} rest + (-1)^{|d|(|c|-n)} d {c, rest}
    t1 = pscale({rest: Fraction(1)}, table(ch, c, d))
    s = (-1) ** ((ch.deg(d) % 2) * ((ch.deg(c) - ch.n) % 2))
    t2 = pmul(ch, dd, _br_cm(ch, c, rest))
    return padd(t1, t2, Fraction(s))


def _br_mm(ch, m1, m2):
    """{m1, m2}: peel m2 to a coordinate, then flip with graded skew."""
    if len(m1) == 0 or len(m2) == 0:
        return {}                 # constants are central
    if len(m2) == 1 and m2[0][1] == 1:
        c2 = m2[0][0]
        if len(m1) == 1 and m1[0][1] == 1:
            v = table(ch, m1[0][0], c2)
            return {(): v} if v != 0 else {}
        # {m1, c2} = -(-1)^{(|m1|-n)(|c2|-n)} {c2, m1}
        s = -((-1) ** (((mono_degree(ch, m1) - ch.n) % 2) * ((ch.deg(c2) - ch.n) % 2)))
        return pscale(_br_cm(ch, c2, m1), Fraction(s))
    (d, e) = m2[0]
    rest = ((d, e - 1),) + m2[1:] if e > 1 else m2[1:]
    dd = {((d, 1),): Fraction(1)}
    # {f, d rest} = {f, d} rest + (-1)^{|d|(|f|-n)} d {f, rest}
    t1 = pmul(ch, _br_mm(ch, m1, ((d, 1),)), {rest: Fraction(1)})
    s = (-1) ** ((ch.deg(d) % 2) * ((mono_degree(ch, m1) - ch.n) % 2))
    t2 = pmul(ch, dd, _br_mm(ch, m1, rest))
    return padd(t1, t2, Fraction(s))


def bracket(ch, p, q):
    out = {}
    for m1, a1 in p.items():
        for m2, a2 in q.items():
            out = padd(out, _br_mm(ch, m1, m2), a1 * a2)
    return out

# ---------------------------------------------------- derived structures ---

def zero_section(ch, p):
    mom = set(ch.base_of.keys())
    return {m: a for m, a in p.items() if not any(o in mom for o, _ in m)}


def is_base(ch, p):
    mom = set(ch.base_of.keys())
    return all(o not in mom for m in p for o, _ in m)


def mom_multideg(ch, m):
    return sum(e for o, e in m if o in ch.base_of)


def nested(ch, theta, args):
    """Q^k: 0^* {...{theta, f_1}..., f_k} (no decalage sign)."""
    cur = theta
    for f in args:
        cur = bracket(ch, cur, f)
    return zero_section(ch, cur)


def lk(ch, theta, args):
    """l^k with the decalage prefactor (-1)^{sum (k-i)(|f_i|-n)}."""
    k = len(args)
    e = 0
    for i, f in enumerate(args, start=1):
        if not f:
            return {}
        d = next(iter(degrees_of(ch, f)))
        e += (k - i) * (d - ch.n)
    return pscale(nested(ch, theta, args), Fraction((-1) ** (e % 2)))


def fact(k):
    r = 1
    for i in range(2, k + 1):
        r *= i
    return r


def mc_residual(ch, theta, f, cap=8):
    out = zero_section(ch, theta)            # l^0
    args = []
    for k in range(1, cap + 1):
        args.append(f)
        out = padd(out, lk(ch, theta, args), Fraction(1, fact(k)))
    return out


def exp_flow(ch, theta, f, g):
    """e^{-{f, .}} g = sum (-1)^k {f,.}^k g / k!  (f base ⇒ nilpotent)."""
    out = dict(g)
    cur = g
    k = 0
    while cur:
        k += 1
        cur = bracket(ch, f, cur)
        out = padd(out, cur, Fraction((-1) ** k, fact(k)))
        assert k < 64
    return out


def gauge_rhs(ch, theta, f, lam, cap=8):
    out = {}
    for k in range(0, cap + 1):
        out = padd(out, lk(ch, theta, [f] * k + [lam]), Fraction(1, fact(k)))
    return out


def identity_residual(ch, theta, elems):
    """Symmetric-convention generalized Jacobi: sum over (k, m-k) shuffles of
    eps(sigma) Q^{m-k+1}(Q^k(x_sig...), x_sig...)."""
    m = len(elems)
    sdeg = [next(iter(degrees_of(ch, f))) - ch.n if f else 0 for f in elems]
    out = {}
    for k in range(0, m + 1):
        for head in combinations(range(m), k):
            tail = [i for i in range(m) if i not in head]
            # Koszul sign of unshuffling [0..m-1] into head+tail
            perm = list(head) + tail
            eps = 1
            for a in range(m):
                for b in range(a + 1, m):
                    if perm[a] > perm[b]:
                        eps *= (-1) ** (sdeg[perm[a]] * sdeg[perm[b]] % 2)
            inner = nested(ch, theta, [elems[i] for i in head])
            out = padd(out, nested(ch, theta, [inner] + [elems[i] for i in tail]),
                       Fraction(eps))
    return out

# ------------------------------------------------------------- rendering ---

def render(ch, p):
    if not p:
        return "0"
    items = sorted(p.items())
    parts = []
    for m, a in items:
        fs = []
        for o, e in m:
            fs += [ch.names[o]] * e
        if not fs:
            parts.append(str(a))
        elif a == 1:
            parts.append("*".join(fs))
        elif a == -1:
            parts.append("-" + "*".join(fs))
        else:
            parts.append(str(a) + "*" + "*".join(fs))
    return " + ".join(parts)

# ------------------------------------------------------------ self-check ---

def random_poly(ch, rng, deg, max_terms=3, ords=None):
    """Random homogeneous polynomial of given degree (may be 0)."""
    basis = []
    allowed = list(range(len(ch.names))) if ords is None else list(ords)

    def rec(start, m, d):
        if d == 0:
            basis.append(tuple(m))
            if len(basis) > 4000:
                raise StopIteration
        for o in [o for o in allowed if o >= start]:
            cd = ch.deg(o)
            if cd == 0 or cd > d:
                continue
            if ch.is_odd(o):
                rec(o + 1, m + [(o, 1)], d - cd)
            else:
                e = 1
                while e * cd <= d:
                    rec(o + 1, m + [(o, e)], d - e * cd)
                    e += 1

    try:
        rec(0, [], deg)
    except StopIteration:
        pass
    if deg == 0:
        basis = [()]
    if not basis:
        return {}
    out = {}
    for _ in range(rng.randint(1, max_terms)):
        m = basis[rng.randrange(len(basis))]
        out = padd(out, {m: Fraction(rng.randint(-3, 3))})
    return out


def axiom_selfcheck():
    rng = random.Random(20260818)
    for n, base in [(1, [("x", 0), ("y", 0)]),
                    (2, [("x", 0), ("a", 1)]),
                    (3, [("x", 0), ("a", 1), ("w", 2)])]:
        ch = shift_cotangent(base, n)
        maxd = max(ch.degrees) * 2 + 1
        for _ in range(120):
            df, dg, dh = (rng.randint(0, maxd) for _ in range(3))
            f, g, h = (random_poly(ch, rng, d) for d in (df, dg, dh))
            # skew
            lhs = bracket(ch, f, g)
            rhs = pscale(bracket(ch, g, f), Fraction(-((-1) ** (((df - n) % 2) * ((dg - n) % 2)))))
            assert lhs == rhs, ("skew", n, df, dg)
            # right Leibniz
            lhs = bracket(ch, f, pmul(ch, g, h))
            rhs = padd(pmul(ch, bracket(ch, f, g), h),
                       pmul(ch, g, bracket(ch, f, h)),
                       Fraction((-1) ** ((dg % 2) * ((df - n) % 2))))
            assert lhs == rhs, ("leibniz", n, df, dg, dh)
            # Jacobi
            lhs = padd(bracket(ch, bracket(ch, f, g), h),
                       bracket(ch, g, bracket(ch, f, h)),
                       Fraction((-1) ** (((df - n) % 2) * ((dg - n) % 2))))
            rhs = bracket(ch, f, bracket(ch, g, h))
            assert lhs == rhs, ("jacobi", n, df, dg, dh)
    print("axiom self-check: skew/Leibniz/Jacobi pass on random triples (n=1,2,3)")


# ------------------------------------------------------------ derivations ---

def sec_plane():
    print("\n== poisson-plane (x,y deg 0, n=1, theta = p(x)p(y)) ==")
    ch = shift_cotangent([("x", 0), ("y", 0)], 1)
    th = pmul(ch, coord(ch, "p(x)"), coord(ch, "p(y)"))
    x, y = coord(ch, "x"), coord(ch, "y")
    print("  {theta,theta} =", render(ch, bracket(ch, th, th)))
    print("  {p(x), x} =", render(ch, bracket(ch, coord(ch, "p(x)"), x)))
    print("  l2(x,y) =", render(ch, lk(ch, th, [x, y])))
    print("  l2(y,x) =", render(ch, lk(ch, th, [y, x])))
    f = padd(pmul(ch, x, x), pmul(ch, x, y), Fraction(2))   # x^2 + 2xy
    g = pmul(ch, y, y)
    print("  l2(x^2+2xy, y^2) =", render(ch, lk(ch, th, [f, g])))
    # residuals m=1..3 on randoms
    rng = random.Random(7)
    for m in range(1, 4):
        for _ in range(20):
            es = [random_poly(ch, rng, 0) for _ in range(m)]
            assert identity_residual(ch, th, es) == {}
    print("  identity residuals m=1..3 vanish on randoms")


def sec_so3():
    print("\n== so3-courant (xi1..xi3 deg 1, n=2, CE lift) ==")
    ch = shift_cotangent([("xi1", 1), ("xi2", 1), ("xi3", 1)], 2)
    xi = [coord(ch, "xi%d" % i) for i in (1, 2, 3)]
    p = [coord(ch, "p(xi%d)" % i) for i in (1, 2, 3)]
    th = padd(padd(pmul(ch, pmul(ch, xi[1], xi[2]), p[0]),
                   pmul(ch, pmul(ch, xi[2], xi[0]), p[1])),
              pmul(ch, pmul(ch, xi[0], xi[1]), p[2]))
    print("  {theta,theta} =", render(ch, bracket(ch, th, th)))
    for i in range(3):
        print("  l1(xi%d) =" % (i + 1), render(ch, lk(ch, th, [xi[i]])))
    f = pmul(ch, xi[0], xi[1])
    print("  l1(xi1*xi2) =", render(ch, lk(ch, th, [f])))
    print("  l2(xi1*xi2, xi1*xi2) =", render(ch, lk(ch, th, [f, f])))
    print("  mc_residual(xi1*xi2) =", render(ch, mc_residual(ch, th, f)))
    lam = xi[0]
    print("  gauge_rhs(xi1*xi2, xi1) =", render(ch, gauge_rhs(ch, th, f, lam)))
    flow = exp_flow(ch, th, f, th)
    print("  0*{xi1, e^{-{f,.}}theta} =",
          render(ch, zero_section(ch, bracket(ch, lam, flow))))
    # perturbed structure constants: flip sign of second term
    bad = padd(th, pmul(ch, pmul(ch, xi[1], xi[2]), p[1]))   # add [xi2,xi3] ∋ xi2
    print("  perturbed master defect {theta',theta'}/2 =",
          render(ch, pscale(bracket(ch, bad, bad), Fraction(1, 2))))
    # extended: theta_t = theta, f = xi1 xi2: both components must vanish
    c1 = padd(bracket(ch, th, th), pscale(bracket(ch, th, th), Fraction(1, 2)))
    print("  extended first component (theta_t=theta):", render(ch, c1))
    rng = random.Random(11)
    for m in range(1, 5):
        for _ in range(15):
            es = [random_poly(ch, rng, rng.randint(0, 3), ords=range(3)) for _ in range(m)]
            assert identity_residual(ch, th, es) == {}
    print("  identity residuals m=1..4 vanish on randoms")


def sec_weil():
    print("\n== weil-casimir (e deg 1, E deg 2, n=3) ==")
    ch = shift_cotangent([("e1", 1), ("e2", 1), ("e3", 1),
                          ("E1", 2), ("E2", 2), ("E3", 2)], 3)
    e = [coord(ch, "e%d" % i) for i in (1, 2, 3)]
    E = [coord(ch, "E%d" % i) for i in (1, 2, 3)]
    P = [coord(ch, "p(e%d)" % i) for i in (1, 2, 3)]
    R = [coord(ch, "p(E%d)" % i) for i in (1, 2, 3)]
    th = {}
    for i in range(3):
        th = padd(th, pmul(ch, P[i], P[i]))
    th = padd(th, pmul(ch, E[0], pmul(ch, R[1], R[2])))
    th = padd(th, pmul(ch, E[1], pmul(ch, R[2], R[0])))
    th = padd(th, pmul(ch, E[2], pmul(ch, R[0], R[1])))
    print("  {theta,theta} =", render(ch, bracket(ch, th, th)))
    for i in range(3):
        for j in range(3):
            v = lk(ch, th, [e[i], e[j]])
            if v:
                print("  l2(e%d,e%d) =" % (i + 1, j + 1), render(ch, v))
    for i in range(3):
        for j in range(3):
            v = lk(ch, th, [E[i], E[j]])
            if v:
                print("  l2(E%d,E%d) =" % (i + 1, j + 1), render(ch, v))
    for i in range(3):
        for j in range(3):
            v = lk(ch, th, [e[i], E[j]])
            if v:
                print("  l2(e%d,E%d) = NONZERO" % (i + 1, j + 1), render(ch, v))
    # D0 = sum E_i e_i ;  phi1 = e1 e2 e3
    D0 = {}
    for i in range(3):
        D0 = padd(D0, pmul(ch, E[i], e[i]))
    phi1 = pmul(ch, e[0], pmul(ch, e[1], e[2]))
    A = lk(ch, th, [D0, D0])
    B = lk(ch, th, [D0, phi1])
    C = lk(ch, th, [phi1, phi1])
    print("  l2(D0,D0) =", render(ch, A))
    print("  l2(D0,phi1) =", render(ch, B))
    print("  l2(phi1,phi1) =", render(ch, C))
    # solve A + 2 t B + t^2 C = 2 sum E_i^2 for t
    target = {}
    for i in range(3):
        target = padd(target, pmul(ch, E[i], E[i]), Fraction(2))
    # try candidate rationals
    sol = None
    for num in range(-12, 13):
        for den in (1, 2, 3, 4, 6, 12):
            t = Fraction(num, den)
            got = padd(padd(A, B, 2 * t), C, t * t)
            if got == target:
                sol = t
    print("  lambda with kuranishi(D0 + lambda e1e2e3) = 2 Sum E_i^2 :", sol)
    assert sol is not None
    D = padd(D0, phi1, sol)
    print("  l1(D) =", render(ch, lk(ch, th, [D])))
    print("  kuranishi(D) = l2(D,D) =", render(ch, lk(ch, th, [D, D])))
    print("  mc_residual(D) =", render(ch, mc_residual(ch, th, D)))
    vol = phi1
    print("  mc_residual(e1e2e3) =", render(ch, mc_residual(ch, th, vol)))
    for k in range(1, 5):
        print("  l%d(vol,...) =" % k, render(ch, lk(ch, th, [vol] * k)))
    # perturbed element: D with phi coefficient off by 1
    Dbad = padd(D0, phi1, sol + 1)
    print("  kuranishi(D_perturbed) =", render(ch, lk(ch, th, [Dbad, Dbad])))
    lam = pmul(ch, e[0], e[1])
    print("  gauge_rhs(D, e1e2) =", render(ch, gauge_rhs(ch, th, D, lam)))
    print("  flow check:",
          render(ch, zero_section(ch, bracket(ch, lam, exp_flow(ch, th, D, th)))))
    rng = random.Random(13)
    for m in range(1, 5):
        for _ in range(10):
            es = [random_poly(ch, rng, rng.randint(1, 5), ords=range(6)) for _ in range(m)]
            assert identity_residual(ch, th, es) == {}
    print("  identity residuals m=1..4 vanish on randoms")


def sec_twisted():
    print("\n== twisted-courant (R^4 Courant + top twist, n=3) ==")
    base = ([("x%d" % i, 0) for i in (1, 2, 3, 4)]
            + [("w%d" % i, 1) for i in (1, 2, 3, 4)]
            + [("v%d" % i, 1) for i in (1, 2, 3, 4)]
            + [("y%d" % i, 2) for i in (1, 2, 3, 4)])
    ch = shift_cotangent(base, 3)
    th = {}
    for i in (1, 2, 3, 4):
        th = padd(th, pmul(ch, coord(ch, "p(x%d)" % i), coord(ch, "p(y%d)" % i)))
        th = padd(th, pmul(ch, coord(ch, "p(w%d)" % i), coord(ch, "p(v%d)" % i)))
    tw = coord(ch, "x1")
    for i in (1, 2, 3, 4):
        tw = pmul(ch, tw, coord(ch, "p(y%d)" % i))
    th = padd(th, tw)
    print("  {theta,theta} =", render(ch, bracket(ch, th, th)))
    alpha = pmul(ch, coord(ch, "w1"), coord(ch, "y1"))
    print("  mc_residual(w1*y1) =", render(ch, mc_residual(ch, th, alpha)))
    beta = {}
    for i in (1, 2, 3, 4):
        beta = padd(beta, pmul(ch, coord(ch, "w%d" % i), coord(ch, "y%d" % i)))
    print("  l4(beta^4) =", render(ch, lk(ch, th, [beta] * 4)))
    print("  mc_residual(beta) =", render(ch, mc_residual(ch, th, beta)))
    lam = coord(ch, "y1")
    print("  gauge_rhs(beta, y1) =", render(ch, gauge_rhs(ch, th, beta, lam)))
    print("  flow check  :",
          render(ch, zero_section(ch, bracket(ch, lam, exp_flow(ch, th, beta, th)))))
    rng = random.Random(17)
    for m in range(1, 5):
        for _ in range(6):
            es = [random_poly(ch, rng, rng.randint(1, 5), ords=range(16)) for _ in range(m)]
            r = identity_residual(ch, th, es)
            assert r == {}, render(ch, r)
    print("  identity residuals m=1..4 vanish on randoms")


def sec_misc():
    print("\n== misc frozen values ==")
    # partial of (a b) by b, both odd
    ch = Chart([("a", 1), ("b", 1)])
    ab = {((0, 1), (1, 1)): Fraction(1)}
    print("  d(a*b)/db =", render(ch, partial(ch, ab, "b")))
    print("  d(a*b)/da =", render(ch, partial(ch, ab, "a")))
    # momentum/coordinate signs across shifts
    for n in (1, 2, 3):
        base = [("x", 0), ("a", 1), ("w", 2)][: n]
        base = [(nm, d) for nm, d in base if d <= n]
        ch2 = shift_cotangent(base, n)
        for nm, d in base:
            print("  n=%d {p(%s), %s} =" % (n, nm, nm),
                  render(ch2, bracket(ch2, coord(ch2, "p(%s)" % nm), coord(ch2, nm))))
    # exp flow on the plane: e^{-{x,.}} p(x) = p(x) - {x, p(x)} = p(x) + 1
    ch3 = shift_cotangent([("x", 0), ("y", 0)], 1)
    print("  e^{-{x,.}} p(x) =",
          render(ch3, exp_flow(ch3, {}, coord(ch3, "x"), coord(ch3, "p(x)"))))


if __name__ == "__main__":
    axiom_selfcheck()
    sec_plane()
    sec_so3()
    sec_weil()
    sec_twisted()
    sec_misc()
    print("\nall oracle derivations complete")
