"""Independent reference computations used by the tests.

Nothing here imports the package's numerical code paths.
"""
import itertools
from fractions import Fraction
import math

import numpy as np
from scipy.optimize import linprog


def brute_force_errors(weights, inputs, desired, eta, steps):
    """Squared residuals of the outer-product rule, plain Python complex arithmetic.

    ``weights`` is a list of 2x2 nested lists, ``inputs`` a list of (a0, a1)
    tuples and ``desired`` a pair.  Returns errors for t = 0..steps.
    """
    w = [[[complex(v) for v in row] for row in m] for m in weights]
    xs = [tuple(complex(v) for v in x) for x in inputs]
    d = tuple(complex(v) for v in desired)

    def output():
        y = [0j, 0j]
        for m, x in zip(w, xs):
            for a in range(2):
                y[a] += m[a][0] * x[0] + m[a][1] * x[1]
        return y

    errs = []
    for _ in range(steps + 1):
        y = output()
        r = [d[0] - y[0], d[1] - y[1]]
        errs.append(abs(r[0]) ** 2 + abs(r[1]) ** 2)
        for m, x in zip(w, xs):
            for a in range(2):
                for b in range(2):
                    m[a][b] += eta * r[a] * x[b].conjugate()
    return errs


def spectral_norm(w):
    """Largest singular value via the eigenvalues of w^H w."""
    w = np.asarray(w, dtype=complex)
    return math.sqrt(max(np.linalg.eigvalsh(w.conj().T @ w).max(), 0.0))


def linearly_separable(xs, ds):
    """Feasibility of w.x >= 1 on positives and w.x <= 0 on negatives (LP)."""
    xs = np.asarray(xs, dtype=float)
    rows, rhs = [], []
    for x, d in zip(xs, ds):
        if d == 1:
            rows.append(-x)
            rhs.append(-1.0)
        else:
            rows.append(x)
            rhs.append(0.0)
    res = linprog(
        np.zeros(xs.shape[1]),
        A_ub=np.array(rows),
        b_ub=np.array(rhs),
        bounds=[(None, None)] * xs.shape[1],
        method="highs",
    )
    return res.status == 0


BOOL_INPUTS = [(0, 0), (0, 1), (1, 0), (1, 1)]


def truth_table(fn):
    """Patterns with a constant bias channel prepended: ((1, a, b), fn(a, b))."""
    return [((1.0, float(a), float(b)), float(fn(a, b))) for a, b in BOOL_INPUTS]


def all_boolean_functions():
    for outs in itertools.product((0, 1), repeat=4):
        table = dict(zip(BOOL_INPUTS, outs))
        yield outs, (lambda a, b, t=table: t[(a, b)])


class _Q:
    """Exact complex rational."""

    __slots__ = ("re", "im")

    def __init__(self, re, im=0):
        self.re, self.im = Fraction(re), Fraction(im)

    @classmethod
    def of(cls, z):
        z = complex(z)
        return cls(Fraction(z.real), Fraction(z.imag))

    def __add__(self, o):
        return _Q(self.re + o.re, self.im + o.im)

    def __sub__(self, o):
        return _Q(self.re - o.re, self.im - o.im)

    def __mul__(self, o):
        return _Q(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    def conj(self):
        return _Q(self.re, -self.im)

    def abs2(self):
        return self.re * self.re + self.im * self.im


def exact_errors(weights, inputs, desired, eta, steps):
    """Squared residuals of the outer-product rule in exact rational arithmetic.

    Every float input is taken at its exact binary value, so the returned
    ratios must equal ``(1 - eta*S)**2`` with no rounding at all.
    """
    w = [[[_Q.of(v) for v in row] for row in m] for m in weights]
    xs = [[_Q.of(v) for v in x] for x in inputs]
    d = [_Q.of(v) for v in desired]
    eta = _Q(Fraction(eta))
    errs = []
    for _ in range(steps + 1):
        y = [_Q(0), _Q(0)]
        for m, x in zip(w, xs):
            for a in range(2):
                y[a] = y[a] + m[a][0] * x[0] + m[a][1] * x[1]
        r = [d[0] - y[0], d[1] - y[1]]
        errs.append(r[0].abs2() + r[1].abs2())
        for m, x in zip(w, xs):
            for a in range(2):
                for b in range(2):
                    m[a][b] = m[a][b] + eta * r[a] * x[b].conj()
    return errs


def exact_norm_sum(inputs):
    return sum((_Q.of(v).abs2() for x in inputs for v in x), Fraction(0))
