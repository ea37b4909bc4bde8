"""Elementary, complete and factorial symmetric polynomials.

Alphabets are ordered sequences of :class:`~eqspringer.polyring.Poly`
(usually single variables); repeated letters are allowed.
"""

from __future__ import annotations

from typing import Sequence

from .combinatorics import Partition, Tableau, enumerate_ssyt
from .polyring import Poly, VarSpace


def _space_of(xs: Sequence[Poly], space: VarSpace | None) -> VarSpace:
    if space is not None:
        return space
    if not xs:
        raise ValueError("an empty alphabet needs an explicit variable space")
    return xs[0].space


def elementary(r: int, xs: Sequence[Poly], space: VarSpace | None = None) -> Poly:
    """``e_r`` of the alphabet ``xs``."""
    if r < 0:
        raise ValueError("degree must be nonnegative")
    space = _space_of(xs, space)
    if r > len(xs):
        return space.zero()
    # e[k] after processing a prefix of the alphabet
    e = [space.const(1)] + [space.zero()] * r
    for x in xs:
        for k in range(r, 0, -1):
            e[k] = e[k] + e[k - 1] * x
    return e[r]


def complete(r: int, xs: Sequence[Poly], space: VarSpace | None = None) -> Poly:
    """``h_r`` of the alphabet ``xs``; ``h_0 = 1`` even for an empty alphabet."""
    if r < 0:
        raise ValueError("degree must be nonnegative")
    space = _space_of(xs, space)
    h = [space.const(1)] + [space.zero()] * r
    for x in xs:
        for k in range(1, r + 1):
            h[k] = h[k] + h[k - 1] * x
    return h[r]


def factorial_e(d: int, ys: Sequence[Poly], as_: Sequence[Poly], space: VarSpace | None = None) -> Poly:
    """Factorial elementary polynomial ``e_d(ys | as_)``.

    Expands ``sum_r (-1)^(d-r) e_r(ys) h_(d-r)(a_1, ..., a_(s+1-d))`` with
    ``s = len(ys)``.  Returns 0 for ``d > s`` and 1 for ``d = 0``.
    """
    if d < 0:
        raise ValueError("degree must be nonnegative")
    space = _space_of(list(ys) or list(as_), space)
    s = len(ys)
    if d > s:
        return space.zero()
    if d == 0:
        return space.const(1)
    need = s + 1 - d
    if len(as_) < need:
        raise ValueError(f"a-alphabet has {len(as_)} letters, {need} needed for e_{d} in {s} variables")
    alpha = list(as_[:need])
    out = space.zero()
    for r in range(d + 1):
        term = elementary(r, ys, space) * complete(d - r, alpha, space)
        out = out + (term if (d - r) % 2 == 0 else -term)
    return out


def factorial_schur_tableaux(mu: Partition | None, s: int, as_: Sequence[Poly],
                             xs: Sequence[Poly] | None = None,
                             space: VarSpace | None = None) -> Poly:
    """Factorial Schur polynomial as a sum over semistandard tableaux.

    Each tableau ``T`` of shape ``mu`` with entries in ``1..s`` contributes
    ``prod (x_T(c) - a_(T(c) + content(c)))`` over its cells.  ``xs``
    defaults to ``y1..ys``; ``mu=None`` is the empty shape.
    """
    space = _space_of(list(xs or ()) or list(as_), space)
    if xs is None:
        xs = [space.y(i) for i in range(1, s + 1)]
    if len(xs) != s:
        raise ValueError(f"expected {s} x-variables, got {len(xs)}")
    if mu is None:
        return space.const(1)
    if mu.ell > s:
        return space.zero()
    out = space.zero()
    for tab in enumerate_ssyt(mu, s):
        out = out + tableau_weight(tab, xs, as_)
    return out


def tableau_weight(tab: Tableau, xs: Sequence[Poly], as_: Sequence[Poly]) -> Poly:
    space = xs[0].space
    w = space.const(1)
    for cell in tab.cells():
        v = tab.entries[cell]
        k = v + Tableau.content(cell)
        if k > len(as_):
            raise ValueError(f"a-alphabet has {len(as_)} letters, a_{k} needed")
        w = w * (xs[v - 1] - as_[k - 1])
    return w
