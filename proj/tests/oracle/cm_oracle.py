"""Independent sympy evaluation of the Cayley-Menger quantities."""
import sympy as sp

t = sp.symbols("t")
EDGES = [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]
SYM = sp.symbols("d12 d13 d14 d23 d24 d34")

POINTS = {
    "C": (4, 4, 4, 4, 4, 4),
    "A1": (0, 6, 6, 6, 6, 0), "A2": (6, 0, 6, 6, 0, 6), "A3": (6, 6, 0, 0, 6, 6),
    "B1": (8, 8, 8, 0, 0, 0), "B2": (8, 0, 0, 8, 8, 0), "B3": (0, 8, 0, 8, 0, 8), "B4": (0, 0, 8, 0, 8, 8),
}


def point(name):
    if name in POINTS:
        return sp.Matrix(POINTS[name])
    a, b = POINTS[name[0] + name[1]], POINTS[name[0] + name[2]]
    return (sp.Matrix(a) + sp.Matrix(b)) / 2


def f_expr():
    d = {}
    for (i, j), s in zip(EDGES, SYM):
        d[(i, j)] = d[(j, i)] = s**2
    m = sp.zeros(5, 5)
    for i in range(5):
        for j in range(5):
            if i == j:
                continue
            m[i, j] = 1 if (i == 0 or j == 0) else d[(i, j)]
    return sp.expand(m.det())


F = f_expr()


def g_expr(beta):
    return sp.expand(sum(sp.diff(F, SYM[EDGES.index(e)]) for e in beta))


def at(expr, pt):
    return expr.subs(dict(zip(SYM, list(pt))))


def leading(poly_t):
    p = sp.Poly(sp.expand(poly_t), t)
    terms = sorted(p.terms(), key=lambda m: m[0][0])
    return (terms[0][1], terms[0][0][0]) if terms else (0, -1)


def curve(weights):
    return sum((w * point(n) for n, w in weights), sp.zeros(6, 1))


def combo(beta, a, b, gcurve, fcurve=None):
    fcurve = gcurve if fcurve is None else fcurve
    return leading(a * at(g_expr(beta), gcurve) + b * at(F, fcurve))
