"""Hilbert functions, monomial bases and localization rank certificates.

The classical Tanisaki ideal always contains ``e_1, ..., e_n`` of all the
``y`` variables, so its quotient is a quotient of the coinvariant algebra.
:func:`hilbert_function` therefore works inside the coinvariant algebra: a
polynomial is reduced to its normal form on the Artin monomials
``y^a`` (``a_k < k``) with the triangular basis ``h_k(y_k, ..., y_n)``
(lex order ``y1 > ... > yn``), and only the remaining ideal generators are
eliminated there.  :func:`hilbert_function_macaulay` does the plain
degree-by-degree elimination in the full polynomial ring and serves as a
cross-check for small ``n``.

All linear algebra is exact (fraction-free integer elimination).
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations_with_replacement

from . import kernels
from .combinatorics import Partition, enumerate_fixed_points, multinomial_rank, phi
from .polyring import Poly, monomial_key
from .presentation import (
    GeneratorTag,
    SizeLimitError,
    check_size,
    classical_generators,
    d_range,
    space_for,
    u_alphabet,
)
from .symfun import complete, elementary

HILBERT_MAX_N = 6
RANK_MAX_N = 5
SPECIALIZATION_RANGE = (1, 10**6)
MAX_RETRIES = 3


@dataclass
class HilbertReport:
    lam: Partition
    dims: tuple[int, ...]
    total: int
    method: str = "coinvariant"

    @property
    def target(self) -> int:
        return multinomial_rank(self.lam)

    @property
    def passed(self) -> bool:
        return self.total == self.target

    def to_json_dict(self) -> dict:
        return {
            "lambda": list(self.lam.parts),
            "dims": list(self.dims),
            "total": self.total,
            "target": self.target,
            "method": self.method,
            "verdict": "pass" if self.passed else "fail",
        }


@dataclass
class RankCertificate:
    lam: Partition
    specializations: list[list[int]]
    achieved_rank: int
    target: int
    attempts: list[int] = field(default_factory=list)

    @property
    def verdict(self) -> str:
        return "pass" if self.achieved_rank == self.target else "fail"

    def to_json_dict(self) -> dict:
        out = {
            "lambda": list(self.lam.parts),
            "specializations": self.specializations,
            "achieved_rank": self.achieved_rank,
            "target": self.target,
            "attempt_ranks": self.attempts,
            "verdict": self.verdict,
        }
        if self.verdict == "fail":
            out["probabilistic_miss"] = len(self.attempts) > MAX_RETRIES
        return out


def _monomials(n: int, d: int) -> list[tuple[int, ...]]:
    """Exponent vectors of degree ``d`` in ``n`` variables, increasing graded-lex."""
    out = []
    for combo in combinations_with_replacement(range(n), d):
        e = [0] * n
        for i in combo:
            e[i] += 1
        out.append(tuple(e))
    out.sort()
    return out


def _y_terms(p: Poly) -> dict[tuple[int, ...], int]:
    n = p.space.n
    out = {}
    for m, c in p.terms.items():
        if any(m[n:]):
            raise ValueError("expected a polynomial in the y variables only")
        out[m[:n]] = c
    return out


class Coinvariants:
    """Normal forms modulo ``(e_1, ..., e_n)`` on the Artin monomials."""

    def __init__(self, n: int):
        self.n = n
        self._basis: dict[int, list[tuple[int, ...]]] = {}
        self._index: dict[int, dict[tuple[int, ...], int]] = {}
        # tails of h_k(y_k..y_n) with the leading y_k^k removed
        self._tails = {}
        for k in range(1, n + 1):
            tails = []
            for m in _monomials(n - k + 1, k):
                if m[0] == k:
                    continue
                tails.append((0,) * (k - 1) + m)
            self._tails[k] = tails
        self.normal_form = lru_cache(maxsize=None)(self._normal_form)

    @property
    def top_degree(self) -> int:
        return self.n * (self.n - 1) // 2

    def basis(self, d: int) -> list[tuple[int, ...]]:
        if d not in self._basis:
            if 0 <= d <= self.top_degree:
                ms = [m for m in _monomials(self.n, d) if all(m[k] <= k for k in range(self.n))]
            else:
                ms = []
            self._basis[d] = ms
            self._index[d] = {m: i for i, m in enumerate(ms)}
        return self._basis[d]

    def index(self, d: int) -> dict[tuple[int, ...], int]:
        self.basis(d)
        return self._index[d]

    def _normal_form(self, m: tuple[int, ...]) -> tuple[tuple[tuple[int, ...], int], ...]:
        for k in range(1, self.n + 1):
            if m[k - 1] >= k:
                break
        else:
            return ((m, 1),)
        q = list(m)
        q[k - 1] -= k
        acc: dict[tuple[int, ...], int] = {}
        for t in self._tails[k]:
            for b, c in self.normal_form(tuple(x + y for x, y in zip(q, t))):
                v = acc.get(b, 0) - c
                if v:
                    acc[b] = v
                else:
                    del acc[b]
        return tuple(acc.items())

    def vector(self, terms: dict[tuple[int, ...], int], d: int) -> list[int]:
        """Coordinates of a degree-``d`` polynomial on the Artin basis."""
        idx = self.index(d)
        v = [0] * len(idx)
        for m, c in terms.items():
            for b, x in self.normal_form(m):
                v[idx[b]] += c * x
        return v


def _shifted(terms: dict[tuple[int, ...], int], m: tuple[int, ...]) -> dict[tuple[int, ...], int]:
    return {tuple(a + b for a, b in zip(t, m)): c for t, c in terms.items()}


def _reduced_generators(lam: Partition) -> list[tuple[int, dict[tuple[int, ...], int]]]:
    """Classical generators other than the full elementary ones, as ``(degree, y-terms)``."""
    out = []
    for tag, g in classical_generators(lam, max_n=max(lam.n, 1)).generators:
        if tag.s == lam.n:
            continue  # e_d(y_1..y_n) is zero in the coinvariant algebra
        out.append((tag.d, _y_terms(g)))
    return out


def _ideal_echelon(co: Coinvariants, gens, d: int):
    basis = co.basis(d)
    ech = kernels.Echelon(len(basis))
    if not basis:
        return ech
    for k, terms in gens:
        if k > d:
            continue
        for b in co.basis(d - k):
            if ech.rank == len(basis):
                return ech
            ech.insert(co.vector(_shifted(terms, b), d))
    return ech


def _degree_dims(lam: Partition, co: Coinvariants, gens) -> tuple[list[int], list]:
    n = lam.n
    dims = []
    echelons = []
    zeros = 0
    for d in range(0, n * (n - 1) // 2 + 2):
        ech = _ideal_echelon(co, gens, d)
        dim = len(co.basis(d)) - ech.rank
        dims.append(dim)
        echelons.append(ech)
        zeros = zeros + 1 if dim == 0 else 0
        if zeros == 2:
            break
    return dims, echelons


def _strip(dims: list[int]) -> tuple[int, ...]:
    while dims and dims[-1] == 0:
        dims = dims[:-1]
    return tuple(dims)


def hilbert_function(lam: Partition, max_n: int = HILBERT_MAX_N) -> HilbertReport:
    """Per-degree dimensions of ``Q[y]/I_lam``; trailing zeros are dropped."""
    check_size(lam.n, max_n, "hilbert_function")
    co = Coinvariants(lam.n)
    dims, _ = _degree_dims(lam, co, _reduced_generators(lam))
    dims = _strip(dims)
    return HilbertReport(lam, dims, sum(dims), "coinvariant")


def hilbert_function_macaulay(lam: Partition, max_n: int = 4) -> HilbertReport:
    """Same dimensions by direct elimination of ``{m * g}`` in each degree."""
    check_size(lam.n, max_n, "hilbert_function_macaulay")
    n = lam.n
    gens = [(tag.d, _y_terms(g)) for tag, g in classical_generators(lam).generators]
    dims = []
    zeros = 0
    for d in range(0, n * (n - 1) // 2 + 2):
        cols = _monomials(n, d)
        index = {m: i for i, m in enumerate(cols)}
        ech = kernels.Echelon(len(cols))
        for k, terms in gens:
            if k > d:
                continue
            for m in _monomials(n, d - k):
                if ech.rank == len(cols):
                    break
                v = [0] * len(cols)
                for t, c in _shifted(terms, m).items():
                    v[index[t]] += c
                ech.insert(v)
        dims.append(len(cols) - ech.rank)
        zeros = zeros + 1 if dims[-1] == 0 else 0
        if zeros == 2:
            break
    dims = _strip(dims)
    return HilbertReport(lam, dims, sum(dims), "macaulay")


def monomial_basis(lam: Partition, max_n: int = HILBERT_MAX_N) -> list[Poly]:
    """Monomials whose residues form a graded basis of ``Q[y]/I_lam``.

    In each degree the monomials are scanned from the smallest upwards in
    the graded-lex order and kept when independent of the ideal and of the
    monomials already kept.
    """
    check_size(lam.n, max_n, "monomial_basis")
    n = lam.n
    co = Coinvariants(n)
    dims, echelons = _degree_dims(lam, co, _reduced_generators(lam))
    space = space_for(lam)
    pad = (0,) * (space.nvars - n)
    chosen = []
    for d, (dim, ech) in enumerate(zip(dims, echelons)):
        picked = []
        if dim:
            for m in _monomials(n, d):
                if ech.insert(co.vector({m: 1}, d)):
                    picked.append(m)
                    if len(picked) == dim:
                        break
        picked.sort(key=monomial_key, reverse=True)
        chosen.extend(picked)
    return [Poly(space, {m + pad: 1}) for m in chosen]


def _check_tag(lam: Partition, tag: GeneratorTag):
    n = lam.n
    ok = (
        1 <= tag.s <= n
        and len(tag.indices) == tag.s
        and all(1 <= i <= n for i in tag.indices)
        and all(a < b for a, b in zip(tag.indices, tag.indices[1:]))
        and tag.d in d_range(lam, tag.s)
    )
    if not ok:
        raise ValueError(f"{tag} is not a generator tag for lambda = {lam}")


def classical_generator_image(lam: Partition, tag: GeneratorTag) -> Poly:
    """Right-hand side of ``e_d(y_I) = -sum_{r<d} (-1)^(d-r) e_r(y_I) h_(d-r)(u_phi_lam(1..s+1-d))``.

    Modulo the equivariant ideal, ``e_d(y_I)`` equals this polynomial, every
    term of which carries a ``u`` variable.
    """
    _check_tag(lam, tag)
    space = space_for(lam)
    ys = [space.y(i) for i in tag.indices]
    alpha = u_alphabet(lam, space)[: tag.s + 1 - tag.d]
    out = space.zero()
    for r in range(tag.d):
        term = elementary(r, ys, space) * complete(tag.d - r, alpha, space)
        out = out + (term if (tag.d - r) % 2 else -term)
    return out


def _evaluation_matrix(lam: Partition, basis: list[Poly], values: list[int]) -> list[list[int]]:
    n = lam.n
    rows = []
    for w in enumerate_fixed_points(lam):
        image = [values[phi(lam, w(i)) - 1] for i in range(1, n + 1)]
        row = []
        for b in basis:
            (m, c), = b.terms.items()
            x = c
            for i in range(n):
                if m[i]:
                    x *= image[i] ** m[i]
            row.append(x)
        rows.append(row)
    return rows


def rank_certificate(lam: Partition, seed: int = 0, max_n: int = RANK_MAX_N) -> RankCertificate:
    """Exact rank of the basis monomials restricted to the fixed points.

    The ``u`` variables are specialised to distinct integers drawn from a
    generator seeded with ``seed``; on a rank deficit the draw is repeated
    up to ``MAX_RETRIES`` more times and the best rank is reported.
    """
    check_size(lam.n, max_n, "rank_certificate")
    basis = monomial_basis(lam, max_n=max(max_n, lam.n))
    target = multinomial_rank(lam)
    rng = random.Random(seed)
    lo, hi = SPECIALIZATION_RANGE
    specs, ranks = [], []
    for _ in range(1 + MAX_RETRIES):
        values = rng.sample(range(lo, hi + 1), lam.ell)
        r = kernels.rank(_evaluation_matrix(lam, basis, values), len(basis))
        specs.append(values)
        ranks.append(r)
        if r == target:
            break
    return RankCertificate(lam, specs, max(ranks), target, ranks)


def to_json(obj) -> str:
    return json.dumps(obj.to_json_dict(), indent=2)


__all__ = [
    "Coinvariants",
    "HilbertReport",
    "RankCertificate",
    "SizeLimitError",
    "classical_generator_image",
    "hilbert_function",
    "hilbert_function_macaulay",
    "monomial_basis",
    "rank_certificate",
    "to_json",
]
