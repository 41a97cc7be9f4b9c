"""
Dense brute-force cohomology oracle built on sympy.

Cochains are parameterized over all ordered index tuples; skew symmetry and
the twist constraints are imposed as linear equations and solved with
``sympy.Matrix.nullspace``. The coboundary is re-evaluated from its formula
on every ordered tuple and ranks come from ``sympy.Matrix.rank``. Nothing
here reuses the cochain machinery of the package.
"""

import itertools

import sympy


def _q(x):
    return sympy.Rational(x.numerator, x.denominator)


def _sym_matrix(m):
    return sympy.Matrix(m.rows, m.cols, lambda i, j: _q(m[i, j]))


def _sym_tensor(array):
    d0, d1, d2 = array.shape
    return [[[_q(array[i, j, k]) for k in range(d2)] for j in range(d1)] for i in range(d0)]


class DenseComplex:
    """One (bracket, action) pairing as plain sympy data."""

    def __init__(self, A, V, which=0, action=0):
        self.d = A.dim
        self.m = V.dim_v
        self.c = _sym_tensor(A.bracket(which).c)
        self.rho = _sym_tensor(V.action(action))
        self.alpha = _sym_matrix(A.alpha)
        self.beta = _sym_matrix(A.beta)
        self.alpha_v = _sym_matrix(V.alpha_v)
        self.beta_v = _sym_matrix(V.beta_v)

    def e(self, i):
        v = sympy.zeros(self.d, 1)
        v[i] = 1
        return v

    def e_v(self, a):
        v = sympy.zeros(self.m, 1)
        v[a] = 1
        return v

    def bracket(self, p, q):
        out = sympy.zeros(self.d, 1)
        for i, j, k in itertools.product(range(self.d), repeat=3):
            out[k] += p[i] * q[j] * self.c[i][j][k]
        return out

    def act(self, p, v):
        out = sympy.zeros(self.m, 1)
        for i, a, b in itertools.product(range(self.d), range(self.m), range(self.m)):
            out[b] += p[i] * v[a] * self.rho[i][a][b]
        return out

    def tuples(self, n):
        return list(itertools.product(range(self.d), repeat=n))

    def evaluate(self, f, vectors):
        out = sympy.zeros(self.m, 1)
        for t in self.tuples(len(vectors)):
            weight = sympy.Integer(1)
            for v, i in zip(vectors, t):
                weight *= v[i]
            if weight != 0:
                out += f[t] * weight
        return out

    def to_cochain(self, n, column):
        return {t: column[r * self.m:(r + 1) * self.m, 0] for r, t in enumerate(self.tuples(n))}

    def flatten(self, f, n):
        return sympy.Matrix.vstack(*[f[t] for t in self.tuples(n)])

    def constraint_rows(self, n):
        tuples = self.tuples(n)
        position = {t: r for r, t in enumerate(tuples)}
        width = len(tuples) * self.m
        rows = []
        for t in tuples:
            for a in range(n - 1):
                swapped = list(t)
                swapped[a], swapped[a + 1] = swapped[a + 1], swapped[a]
                for k in range(self.m):
                    row = [0] * width
                    row[position[t] * self.m + k] += 1
                    row[position[tuple(swapped)] * self.m + k] += 1
                    rows.append(row)
        for twist, twist_v in ((self.alpha, self.alpha_v), (self.beta, self.beta_v)):
            for t in tuples:
                for k in range(self.m):
                    row = [0] * width
                    for kk in range(self.m):
                        row[position[t] * self.m + kk] += twist_v[k, kk]
                    for u in tuples:
                        weight = sympy.Integer(1)
                        for r in range(n):
                            weight *= twist[u[r], t[r]]
                        row[position[u] * self.m + k] -= weight
                    rows.append(row)
        return rows, width

    def space(self, n):
        rows, width = self.constraint_rows(n)
        matrix = sympy.Matrix(rows) if rows else sympy.zeros(0, width)
        return [self.to_cochain(n, v) for v in matrix.nullspace()]

    def coboundary(self, f, n):
        if n == 0:
            shift = self.alpha * self.beta.inv()
            return {(i,): self.act(shift * self.e(i), f[()]) for i in range(self.d)}
        acting = self.alpha * self.beta ** (n - 1)
        shift = self.alpha.inv() * self.beta
        out = {}
        for t in self.tuples(n + 1):
            total = sympy.zeros(self.m, 1)
            for i in range(1, n + 2):
                rest = t[:i - 1] + t[i:]
                total += (-1) ** i * self.act(acting * self.e(t[i - 1]), f[rest])
            for i, j in itertools.combinations(range(1, n + 2), 2):
                head = self.bracket(shift * self.e(t[i - 1]), self.e(t[j - 1]))
                tail = [self.beta * self.e(t[r - 1]) for r in range(1, n + 2) if r not in (i, j)]
                total += (-1) ** (i + j + 1) * self.evaluate(f, [head] + tail)
            out[t] = total
        return out


def _rank(columns):
    if not columns:
        return 0
    return sympy.Matrix.hstack(*columns).rank()


def dense_cochain_dim(A, V, n):
    return len(DenseComplex(A, V).space(n))


def dense_cohomology_dim(A, V, n, which=0, action=0):
    """dim ker - dim im, from scratch."""
    cx = DenseComplex(A, V, which, action)
    current = cx.space(n)
    kernel = len(current) - _rank([cx.flatten(cx.coboundary(f, n), n + 1) for f in current])
    image = 0
    if n > 0:
        previous = cx.space(n - 1)
        image = _rank([cx.flatten(cx.coboundary(f, n - 1), n) for f in previous])
    return kernel - image


def _compatible_space(first, second, n):
    if n > 0:
        single = first.space(n)
        zero = {t: sympy.zeros(first.m, 1) for t in first.tuples(n)}
        return [tuple(f if slot == copy else zero for slot in range(n))
                for copy in range(n) for f in single]
    rows, width = first.constraint_rows(0)
    shift = first.alpha * first.beta.inv()
    for i in range(first.d):
        p = shift * first.e(i)
        for k in range(first.m):
            rows.append([first.act(p, first.e_v(a))[k] - second.act(p, first.e_v(a))[k]
                         for a in range(first.m)])
    return [({(): v},) for v in sympy.Matrix(rows).nullspace()]


def _compatible_coboundary(first, second, F, n):
    if n == 0:
        return [first.coboundary(F[0], 0)]
    d1 = [first.coboundary(f, n) for f in F]
    d2 = [second.coboundary(f, n) for f in F]
    out = []
    for j in range(n + 1):
        parts = ([d1[j]] if j < n else []) + ([d2[j - 1]] if j >= 1 else [])
        out.append({t: sum((p[t] for p in parts), sympy.zeros(first.m, 1))
                    for t in first.tuples(n + 1)})
    return out


def _flatten_all(cx, G, n):
    return sympy.Matrix.vstack(*[cx.flatten(g, n) for g in G])


def dense_compatible_cohomology_dim(P, V, n):
    """Compatible cohomology dimension from scratch: n copies, interleaved coboundaries."""
    first = DenseComplex(P.algebra, V, 0, 0)
    second = DenseComplex(P.algebra, V, 1, 1)
    current = _compatible_space(first, second, n)
    images = [_flatten_all(first, _compatible_coboundary(first, second, F, n), n + 1)
              for F in current]
    kernel = len(current) - _rank(images)
    image = 0
    if n > 0:
        previous = _compatible_space(first, second, n - 1)
        image = _rank([_flatten_all(first, _compatible_coboundary(first, second, F, n - 1), n)
                       for F in previous])
    return kernel - image


def dense_compatible_cochain_dim(P, V, n):
    first = DenseComplex(P.algebra, V, 0, 0)
    second = DenseComplex(P.algebra, V, 1, 1)
    return len(_compatible_space(first, second, n))
