"""Independent oracle for orbifold index totals on weighted projective planes.

Zeros of each chart lift are found exactly with sympy; the residue at each
zero is the sum of h/det J over the cluster of simple zeros of a perturbed
system F + eps*L (eps = 1e-24, 80-digit arithmetic), located through a
resultant. The cluster sum is analytic in eps, so rounding the result to a
nearby small-denominator rational recovers the exact value.

Usage: python3 orbifold_oracle.py  (prints the fixture table)
"""
from fractions import Fraction
import itertools
import random

import mpmath
import sympy as sp

mpmath.mp.dps = 80
EPS = sp.Rational(1, 10**24)


def lift(weights, comps, chart):
    z = sp.symbols("z0:%d" % len(weights))
    u = [sp.Symbol("u%d" % j) for j in range(len(weights)) if j != chart]
    sub = {}
    k = 0
    for j in range(len(weights)):
        if j == chart:
            sub[z[j]] = 1
        else:
            sub[z[j]] = u[k]
            k += 1
    pi = sp.expand(comps[chart].subs(sub, simultaneous=True))
    out = []
    k = 0
    for j in range(len(weights)):
        if j == chart:
            continue
        pj = sp.expand(comps[j].subs(sub, simultaneous=True))
        out.append(sp.expand(pj - sp.Rational(weights[j], weights[chart]) * u[k] * pi))
        k += 1
    return u, out


def numeric_zeros(F, u):
    """All finite zeros of a 2x2 system with finitely many zeros."""
    x, y = u
    r = sp.Poly(sp.resultant(F[0], F[1], y), x)
    zs = []
    if r.is_zero:
        raise ValueError("resultant vanishes")
    coeffs = [mpmath.mpf(sp.Rational(c).p) / mpmath.mpf(sp.Rational(c).q) for c in r.all_coeffs()]
    if len(coeffs) <= 1:
        return zs
    xs = mpmath.polyroots(coeffs, maxsteps=500, extraprec=400)
    for a in xs:
        # evaluate coefficients of F0(a, y) numerically, solve, keep common roots
        c0 = [complex_eval(c, a) for c in sp.Poly(F[0], y).all_coeffs()]
        c1 = [complex_eval(c, a) for c in sp.Poly(F[1], y).all_coeffs()]
        cands = []
        for cs, other in ((c0, F[1]), (c1, F[0])):
            cs = trim(cs)
            if len(cs) > 1:
                cands = mpmath.polyroots(cs, maxsteps=500, extraprec=400)
                break
        for b in cands:
            if abs(complex_eval2(F[0], u, a, b)) < mpmath.mpf(10) ** -45 and abs(
                    complex_eval2(F[1], u, a, b)) < mpmath.mpf(10) ** -45:
                zs.append((a, b))
    # dedupe
    out = []
    for p in zs:
        if all(abs(p[0] - q[0]) + abs(p[1] - q[1]) > mpmath.mpf(10) ** -25 for q in out):
            out.append(p)
    return out


def trim(cs):
    i = 0
    while i < len(cs) and abs(cs[i]) < mpmath.mpf(10) ** -60:
        i += 1
    return cs[i:]


X = sp.Symbol("u0")


def complex_eval(expr, a):
    f = sp.lambdify(list(expr.free_symbols), expr, "mpmath")
    if not expr.free_symbols:
        return mpmath.mpc(sp.N(expr, 90))
    return mpmath.mpc(f(a))


def complex_eval2(expr, u, a, b):
    f = sp.lambdify(u, expr, "mpmath")
    return mpmath.mpc(f(a, b))


def cluster_residue(F, u, h, p, rng):
    L = [sum(sp.Rational(rng.randint(1, 97), rng.randint(1, 13)) * v for v in u) + sp.Rational(rng.randint(1, 50), 7)
         for _ in F]
    G = [sp.expand(F[i] + EPS * L[i]) for i in range(2)]
    det = sp.Matrix([[sp.diff(g, v) for v in u] for g in G]).det()
    zs = numeric_zeros(G, u)
    pn = [mpmath.mpc(sp.N(c, 90)) for c in p]
    total = mpmath.mpc(0)
    count = 0
    for a, b in zs:
        if abs(a - pn[0]) + abs(b - pn[1]) < mpmath.mpf(10) ** -3:
            total += complex_eval2(h, u, a, b) / complex_eval2(det, u, a, b)
            count += 1
    return total, count


def to_fraction(x, maxden=10**6):
    if abs(x.imag) > mpmath.mpf(10) ** -20:
        raise ValueError("non-real residue %s" % x)
    f = Fraction(str(mpmath.nstr(x.real, 60))).limit_denominator(maxden)
    if abs(mpmath.mpf(f.numerator) / f.denominator - x.real) > mpmath.mpf(10) ** -20:
        raise ValueError("not rational: %s" % x)
    return f


def analyse(weights, comps_text, invariants, seed=1):
    z = sp.symbols("z0:%d" % len(weights))
    comps = [sp.sympify(c, locals={str(s): s for s in z}) for c in comps_text]
    rng = random.Random(seed)
    points = []
    for chart in range(len(weights)):
        u, F = lift(weights, comps, chart)
        J = sp.Matrix([[sp.diff(f, v) for v in u] for f in F])
        numer = {"C2": J.det(), "C1^2": J.trace() ** 2, "(C1^2+2C2)/3": (J.trace() ** 2 + 2 * J.det()) / 3}
        sols = sp.solve(F, u, dict=True)
        for s in sols:
            p = [sp.simplify(s.get(v, v)) for v in u]
            if any(c.free_symbols for c in p):
                raise ValueError("non-isolated zero in chart %d" % chart)
            # first-nonzero-coordinate rule: u_j = 0 for all j < chart
            if any(p[k] != 0 for k in range(chart)):
                continue
            vertex = all(c == 0 for c in p)
            rec = {"chart": chart, "cover_point": p}
            for name in invariants:
                h = sp.expand(numer[name])
                if J.subs(dict(zip(u, p))).det() != 0:
                    val = sp.simplify(h.subs(dict(zip(u, p))) / J.subs(dict(zip(u, p))).det())
                    val = mpmath.mpc(sp.N(val, 90))
                    mu = 1
                else:
                    val, mu = cluster_residue(F, u, h, p, rng)
                rec[name] = val
                rec["mu"] = mu
            points.append(rec)
    # orbifold totals: each chart's new cover zeros weighted by 1/w_chart
    sums = {name: mpmath.mpc(0) for name in invariants}
    for rec in points:
        for name in invariants:
            sums[name] += rec[name] / weights[rec["chart"]]
    return points, {name: to_fraction(sums[name]) for name in invariants}


FIXTURES = [
    ("bb_general", (1, 1, 2), ["z1**2", "z0**2", "z0*z2"]),
    ("bb_rational", (1, 1, 2), ["z0*(z0 + 2*z1)", "z1*(3*z0 - z1)", "z2*(z0 + 5*z1)"]),
    ("radial_112_d3", (1, 1, 2), ["z0*z2 + z1**3", "z1*z2 + z0**3", "0"]),
    ("diag_123", (1, 2, 3), ["z0", "3*z1", "7*z2"]),
    ("diag_112", (1, 1, 2), ["2*z0", "3*z1", "5*z2"]),
    ("away_112_d1", (1, 1, 2), ["2*z0", "5*z1", "3*z2 + z0**2"]),
    ("p2_d0", (1, 1, 1), ["1", "2", "3"]),
    ("p2_d1", (1, 1, 1), ["z0", "2*z1", "3*z2"]),
    ("p2_d2", (1, 1, 1), ["0", "z1*(z0 + 2*z1 - z2)", "z2*(3*z0 - z1 + 2*z2)"]),
    ("p2_d3", (1, 1, 1), ["0", "z1*(z0 - z1)*(z0 + z1 - 2*z2)", "z2*(z0 + 2*z1 - z2)*(2*z0 - z1 + 3*z2)"]),
]

LOCAL = [
    # (variables, system, numerators, point)
    (("z1", "z2"), ["z1**2 - z2", "z2**2"], ["1", "z1", "z2", "z1*z2", "z1**3", "4*z1*z2", "z1**2*z2 + 7*z2"], [0, 0]),
    (("z1", "z2"), ["z1**2", "z2**2"], ["4*z1*z2", "z1*z2", "1"], [0, 0]),
    (("z1", "z2"), ["z1**2", "z2**3"], ["z1*z2**2"], [0, 0]),
    (("z1", "z2"), ["(z1 - 1)**3 + z2**2", "z2*(z1 - 1) + z2**3"], ["1", "z1*z2", "z2**2", "(z1-1)**2"], [1, 0]),
]


def local_table():
    rng = random.Random(9)
    for names, sys_text, hs, p in LOCAL:
        u = [sp.Symbol(n) for n in names]
        loc = {n: s for n, s in zip(names, u)}
        F = [sp.expand(sp.sympify(t, locals=loc)) for t in sys_text]
        det = sp.expand(sp.Matrix([[sp.diff(f, v) for v in u] for f in F]).det())
        for h in hs + ["det"]:
            hh = det if h == "det" else sp.expand(sp.sympify(h, locals=loc))
            val, count = cluster_residue(F, u, hh, [sp.Integer(c) for c in p], rng)
            print("   local", sys_text, "h =", h, "at", p, "->", to_fraction(val), "(cluster size %d)" % count)

def weights_of(name):
    # group order at a vertex of the chart is the chart weight; per-point
    # values printed below are orbifold indices (cover residue / #G)
    for n, w, _ in FIXTURES:
        if n == name:
            return _current_chart_weight[0]
    return 1


_current_chart_weight = [1]

if __name__ == "__main__":
    for name, w, comps in FIXTURES:
        pts, tot = analyse(w, comps, ["C2", "C1^2", "(C1^2+2C2)/3"])
        print(name, w, comps)
        for rec in pts:
            _current_chart_weight[0] = w[rec["chart"]]
            vals = {}
            for k in ("C2", "C1^2", "(C1^2+2C2)/3"):
                try:
                    vals[k] = str(to_fraction(rec[k] / (weights_of(name) if all(c == 0 for c in rec["cover_point"]) else 1)))
                except ValueError:
                    vals[k] = mpmath.nstr(rec[k], 12)
            print("   chart", rec["chart"], "p~", rec["cover_point"], "mu", rec["mu"], vals)
        print("   totals", {k: str(v) for k, v in tot.items()})
    local_table()
