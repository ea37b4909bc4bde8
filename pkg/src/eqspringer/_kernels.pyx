# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled versions of the hot kernels; see ``_kernels_py`` for semantics."""

from math import gcd


def mul_terms(dict a, dict b):
    cdef dict out = {}
    cdef tuple ma, mb
    cdef Py_ssize_t n, k
    cdef list e
    if len(a) < len(b):
        a, b = b, a
    for mb, cb in b.items():
        n = len(mb)
        for ma, ca in a.items():
            e = [None] * n
            for k in range(n):
                e[k] = <long>ma[k] + <long>mb[k]
            m = tuple(e)
            c = out.get(m, 0) + ca * cb
            if c:
                out[m] = c
            else:
                del out[m]
    return out


def rename_terms(dict terms, tuple target):
    cdef Py_ssize_t nvars = len(target)
    cdef Py_ssize_t j
    cdef long x, k
    cdef bint dead
    cdef dict out = {}
    cdef tuple m
    cdef long[64] buf
    cdef list e
    if nvars > 64:
        from . import _kernels_py
        return _kernels_py.rename_terms(terms, target)
    for m, c in terms.items():
        for j in range(nvars):
            buf[j] = 0
        dead = False
        for j in range(nvars):
            x = m[j]
            if x:
                k = target[j]
                if k < 0:
                    dead = True
                    break
                buf[k] += x
        if dead:
            continue
        e = [buf[j] for j in range(nvars)]
        key = tuple(e)
        v = out.get(key, 0) + c
        if v:
            out[key] = v
        else:
            del out[key]
    return out


cdef list _primitive(list v):
    g = 0
    for x in v:
        if x:
            g = gcd(g, x)
            if g == 1:
                return v
    if g > 1:
        return [x // g for x in v]
    return v


cdef class Echelon:
    cdef public Py_ssize_t ncols
    cdef public dict pivots

    def __init__(self, ncols):
        self.ncols = ncols
        self.pivots = {}

    @property
    def rank(self):
        return len(self.pivots)

    def reduce(self, vec):
        cdef list v = list(vec)
        cdef list row
        cdef Py_ssize_t c, j
        if len(v) != self.ncols:
            raise ValueError("vector length does not match column count")
        for c in sorted(self.pivots):
            a = v[c]
            if not a:
                continue
            row = self.pivots[c]
            p = row[c]
            g = gcd(p, a)
            fp = p // g
            fa = a // g
            if fp == 1:
                for j in range(c, self.ncols):
                    if row[j]:
                        v[j] = v[j] - fa * row[j]
            else:
                for j in range(self.ncols):
                    v[j] = fp * v[j] - fa * row[j]
        return _primitive(v)

    def insert(self, vec):
        cdef list v = self.reduce(vec)
        cdef Py_ssize_t c
        for c in range(self.ncols):
            if v[c]:
                self.pivots[c] = v
                return True
        return False


def rank(rows, ncols):
    cdef Echelon ech = Echelon(ncols)
    for r in rows:
        ech.insert(r)
        if len(ech.pivots) == ncols:
            break
    return len(ech.pivots)
