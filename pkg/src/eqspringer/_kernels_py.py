"""Pure-Python versions of the hot kernels.

Polynomials reach these functions as plain ``dict`` objects mapping dense
exponent tuples to nonzero ``int`` coefficients.  The compiled module
``_kernels`` exposes the same names with the same semantics.
"""

from math import gcd


def mul_terms(a, b):
    """Product of two term dicts."""
    if len(a) < len(b):
        a, b = b, a
    out = {}
    get = out.get
    for mb, cb in b.items():
        for ma, ca in a.items():
            m = tuple([x + y for x, y in zip(ma, mb)])
            c = get(m, 0) + ca * cb
            if c:
                out[m] = c
            else:
                del out[m]
    return out


def rename_terms(terms, target):
    """Apply a variable renaming to a term dict.

    ``target[j]`` is the index variable ``j`` is sent to, or ``-1`` to send
    it to zero.  Terms that touch a zeroed variable vanish.
    """
    nvars = len(target)
    out = {}
    get = out.get
    for m, c in terms.items():
        e = [0] * nvars
        for j in range(nvars):
            x = m[j]
            if x:
                k = target[j]
                if k < 0:
                    break
                e[k] += x
        else:
            key = tuple(e)
            v = get(key, 0) + c
            if v:
                out[key] = v
            else:
                del out[key]
    return out


class Echelon:
    """Incrementally built row echelon form over the rationals.

    Rows are kept as primitive integer vectors (fraction-free), so every
    operation is exact.  ``insert`` returns whether the vector was
    independent of the rows already present.
    """

    def __init__(self, ncols):
        self.ncols = ncols
        self.pivots = {}

    @property
    def rank(self):
        return len(self.pivots)

    def reduce(self, vec):
        """Return ``vec`` reduced against the stored rows (a scaled copy)."""
        v = list(vec)
        if len(v) != self.ncols:
            raise ValueError("vector length does not match column count")
        pivots = self.pivots
        for c in sorted(pivots):
            a = v[c]
            if not a:
                continue
            row = pivots[c]
            p = row[c]
            g = gcd(p, a)
            fp = p // g
            fa = a // g
            if fp == 1:
                for j in range(c, self.ncols):
                    if row[j]:
                        v[j] -= fa * row[j]
            else:
                for j in range(self.ncols):
                    v[j] = fp * v[j] - fa * row[j]
        return _primitive(v)

    def insert(self, vec):
        v = self.reduce(vec)
        for c, x in enumerate(v):
            if x:
                self.pivots[c] = v
                return True
        return False


def _primitive(v):
    g = 0
    for x in v:
        if x:
            g = gcd(g, x)
            if g == 1:
                return v
    if g > 1:
        return [x // g for x in v]
    return v


def rank(rows, ncols):
    """Exact rank of an integer matrix given as a list of rows."""
    ech = Echelon(ncols)
    for r in rows:
        ech.insert(r)
        if ech.rank == ncols:
            break
    return ech.rank
