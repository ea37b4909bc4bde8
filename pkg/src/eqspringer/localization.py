"""Restriction of classes to torus fixed points and the symmetric group actions.

Fixed-point data is stored as ordered mappings from :class:`Permutation` to
polynomials.  Every restriction is a variable renaming, so it runs through
the ``rename_terms`` kernel.
"""

from __future__ import annotations

import json
import os
from collections.abc import Mapping
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator

from .combinatorics import (
    Partition,
    Permutation,
    all_permutations,
    coset_rep,
    enumerate_fixed_points,
    phi,
)
from .polyring import Poly, VarSpace, format_poly, rename
from .presentation import equivariant_generators, space_for

FLAG_MATERIALIZE_MAX_N = 6


def _ensure_families(p: Poly, allowed: set[str], what: str):
    extra = p.families() - allowed
    if extra:
        raise ValueError(f"{what} expects only {sorted(allowed)} variables, found {sorted(extra)}")


@dataclass
class FixedPointClass:
    """An element of the direct sum over Springer fixed points of ``Z[u]``."""

    lam: Partition
    values: dict[Permutation, Poly]

    def __getitem__(self, w: Permutation) -> Poly:
        return self.values[w]

    def __iter__(self):
        return iter(self.values)

    def items(self):
        return self.values.items()

    def is_zero(self) -> bool:
        return all(v.is_zero() for v in self.values.values())

    def __eq__(self, other):
        if not isinstance(other, FixedPointClass):
            return NotImplemented
        return self.lam == other.lam and self.values == other.values

    def to_json_dict(self) -> dict:
        return {
            "lambda": list(self.lam.parts),
            "values": {str(w): format_poly(p) for w, p in self.values.items()},
        }


class _LazyFlagValues(Mapping):
    def __init__(self, poly: Poly):
        self.poly = poly
        self.n = poly.space.n
        self._cache: dict[Permutation, Poly] = {}

    def __getitem__(self, w: Permutation) -> Poly:
        if w.n != self.n:
            raise KeyError(w)
        if w not in self._cache:
            self._cache[w] = rename(self.poly, flag_renaming(self.poly.space, w))
        return self._cache[w]

    def __iter__(self) -> Iterator[Permutation]:
        return all_permutations(self.n)

    def __len__(self):
        out = 1
        for k in range(2, self.n + 1):
            out *= k
        return out


@dataclass
class FlagClass:
    """An element of the direct sum over all of ``S_n`` of ``Z[t]``.

    For ``n`` above :data:`FLAG_MATERIALIZE_MAX_N` components are computed on
    first access instead of up front.
    """

    n: int
    values: Mapping[Permutation, Poly] = field(repr=False)

    def __getitem__(self, w: Permutation) -> Poly:
        return self.values[w]

    def items(self):
        return self.values.items()

    def is_zero(self) -> bool:
        return all(v.is_zero() for v in self.values.values())


def springer_renaming(space: VarSpace, lam: Partition, w: Permutation) -> tuple[int, ...]:
    """``y_i -> u_phi(w(i))``, everything else fixed."""
    target = list(range(space.nvars))
    ubase = space.n - 1
    for i in range(1, lam.n + 1):
        target[i - 1] = ubase + phi(lam, w(i))
    return tuple(target)


def flag_renaming(space: VarSpace, w: Permutation) -> tuple[int, ...]:
    """``y_i -> t_w(i)``."""
    target = list(range(space.nvars))
    tbase = space.n + space.ell - 1
    for i in range(1, space.n + 1):
        target[i - 1] = tbase + w(i)
    return tuple(target)


def projection_renaming(space: VarSpace, lam: Partition) -> tuple[int, ...]:
    """``t_i -> u_phi(i)``."""
    target = list(range(space.nvars))
    tbase = space.n + space.ell - 1
    ubase = space.n - 1
    for i in range(1, lam.n + 1):
        target[tbase + i] = ubase + phi(lam, i)
    return tuple(target)


def restrict_springer(p: Poly, lam: Partition,
                      fixed_points: list[Permutation] | None = None) -> FixedPointClass:
    _ensure_families(p, {"y", "u"}, "restrict_springer")
    if p.space.n != lam.n or p.space.ell < lam.ell:
        raise ValueError(f"{p.space} does not fit lambda = {lam}")
    points = fixed_points if fixed_points is not None else enumerate_fixed_points(lam)
    return FixedPointClass(lam, {w: rename(p, springer_renaming(p.space, lam, w)) for w in points})


def restrict_flag(p: Poly, n: int | None = None) -> FlagClass:
    _ensure_families(p, {"y", "t"}, "restrict_flag")
    n = p.space.n if n is None else n
    if n != p.space.n:
        raise ValueError(f"{p.space} does not have n = {n}")
    lazy = _LazyFlagValues(p)
    if n <= FLAG_MATERIALIZE_MAX_N:
        return FlagClass(n, {w: lazy[w] for w in all_permutations(n)})
    return FlagClass(n, lazy)


def project_subtorus(c: FlagClass, lam: Partition) -> dict[Permutation, Poly]:
    """Apply ``t_i -> u_phi(i)`` componentwise over every permutation."""
    out = {}
    target = None
    for w, v in c.items():
        if target is None:
            target = projection_renaming(v.space, lam)
        out[w] = rename(v, target)
    return out


def on_fixed_points(data: Mapping[Permutation, Poly], lam: Partition) -> FixedPointClass:
    """Restrict the key set of projected data to the Springer fixed points."""
    return FixedPointClass(lam, {w: data[w] for w in enumerate_fixed_points(lam)})


def sn_act_class(v: Permutation, c: FixedPointClass) -> FixedPointClass:
    """``(v . f)|_w = f|_w'`` where ``w'`` represents the coset of ``w v``."""
    lam = c.lam
    return FixedPointClass(lam, {w: c.values[coset_rep(w * v, lam)] for w in c.values})


def sn_act_poly(w: Permutation, p: Poly) -> Poly:
    """Relabel ``y_i -> y_w(i)``; ``u`` and ``t`` are fixed."""
    space = p.space
    if w.n != space.n:
        raise ValueError("permutation size does not match the variable space")
    target = list(range(space.nvars))
    for i in range(1, space.n + 1):
        target[i - 1] = w(i) - 1
    return rename(p, tuple(target))


@dataclass
class VanishingReport:
    lam: Partition
    generators_checked: int
    fixed_points: int
    failures: list[dict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json_dict(self) -> dict:
        return {
            "lambda": list(self.lam.parts),
            "generators_checked": self.generators_checked,
            "fixed_points": self.fixed_points,
            "failures": self.failures,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2)


def _vanishing_chunk(args):
    lam, gens, points = args
    space = space_for(lam)
    targets = [(w, springer_renaming(space, lam, w)) for w in points]
    failures = []
    for tag, g in gens:
        for w, target in targets:
            r = rename(g, target)
            if r.terms:
                failures.append({
                    "tag": tag.as_dict(),
                    "fixed_point": str(w),
                    "residue": format_poly(r),
                })
    return failures


def worker_count() -> int:
    """Worker cap from ``EQSPRINGER_WORKERS`` (default 1)."""
    try:
        return max(1, int(os.environ.get("EQSPRINGER_WORKERS", "1")))
    except ValueError:
        return 1


WORKERS = worker_count()


def verify_vanishing(lam: Partition, max_n: int = 8, workers: int | None = None) -> VanishingReport:
    """Check that every equivariant generator restricts to zero at every fixed point."""
    pres = equivariant_generators(lam, max_n=max_n)
    points = enumerate_fixed_points(lam)
    workers = WORKERS if workers is None else workers
    gens = pres.generators
    if workers > 1 and len(gens) > 1:
        step = -(-len(gens) // workers)
        chunks = [(lam, gens[i:i + step], points) for i in range(0, len(gens), step)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            failures = [f for part in pool.map(_vanishing_chunk, chunks) for f in part]
    else:
        failures = _vanishing_chunk((lam, gens, points))
    failures.sort(key=lambda f: (f["tag"]["s"], f["tag"]["indices"], f["tag"]["d"], f["fixed_point"]))
    return VanishingReport(lam, len(gens), len(points), failures)
