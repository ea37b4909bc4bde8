"""Generators of the equivariant and classical Tanisaki ideals and of the flag ideal."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterator

from .combinatorics import Partition, conjugate, p_value, phi_lambda_seq
from .polyring import Poly, VarSpace, format_poly, parse_poly, renaming, rename
from .symfun import elementary, factorial_e

KINDS = ("equivariant", "classical", "flag")
DEFAULT_MAX_N = 8

D_RANGE_NOTE = "max(1, s+1-p(s)) <= d <= s, p = p-value of the conjugate partition"


class SizeLimitError(ValueError):
    """A computation was asked for beyond its soft size limit."""


def check_size(n: int, max_n: int, what: str):
    if n > max_n:
        raise SizeLimitError(f"{what} is limited to n <= {max_n} (got n = {n}); raise max_n to override")


@dataclass(frozen=True, order=True)
class GeneratorTag:
    s: int
    indices: tuple[int, ...]
    d: int

    def as_dict(self) -> dict:
        return {"s": self.s, "indices": list(self.indices), "d": self.d}


@dataclass
class IdealPresentation:
    lam: Partition | None
    kind: str
    space: VarSpace
    generators: list[tuple[GeneratorTag, Poly]] = field(default_factory=list)

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown presentation kind {self.kind!r}")

    @property
    def n(self) -> int:
        return self.space.n

    @property
    def ell(self) -> int:
        return self.space.ell

    def polys(self) -> list[Poly]:
        return [g for _, g in self.generators]

    def tags(self) -> list[GeneratorTag]:
        return [t for t, _ in self.generators]

    def __len__(self):
        return len(self.generators)

    def __eq__(self, other):
        if not isinstance(other, IdealPresentation):
            return NotImplemented
        return (self.lam, self.kind, self.space, self.generators) == (
            other.lam, other.kind, other.space, other.generators)


def d_range(lam: Partition, s: int) -> range:
    """Admissible ``d`` for ``s``-tuples, clamped to ``1..s``."""
    n = lam.n
    lo = s + 1 - p_value(conjugate(lam), s, n)
    return range(max(1, lo), s + 1)


def generator_tags(lam: Partition) -> Iterator[GeneratorTag]:
    """Tags in order: ``s``, then index tuple lexicographically, then ``d``."""
    n = lam.n
    for s in range(1, n + 1):
        ds = d_range(lam, s)
        if not ds:
            continue
        for idx in combinations(range(1, n + 1), s):
            for d in ds:
                yield GeneratorTag(s, idx, d)


def u_alphabet(lam: Partition, space: VarSpace) -> list[Poly]:
    """``(u_phi_lam(1), ..., u_phi_lam(n))``."""
    return [space.u(k) for k in phi_lambda_seq(lam)]


def space_for(lam: Partition) -> VarSpace:
    return VarSpace(lam.n, lam.ell)


def equivariant_generator(lam: Partition, tag: GeneratorTag, space: VarSpace | None = None) -> Poly:
    space = space or space_for(lam)
    ys = [space.y(i) for i in tag.indices]
    return factorial_e(tag.d, ys, u_alphabet(lam, space), space)


def classical_generator(lam: Partition, tag: GeneratorTag, space: VarSpace | None = None) -> Poly:
    space = space or space_for(lam)
    return elementary(tag.d, [space.y(i) for i in tag.indices], space)


def equivariant_generators(lam: Partition, max_n: int = DEFAULT_MAX_N) -> IdealPresentation:
    check_size(lam.n, max_n, "generator enumeration")
    space = space_for(lam)
    alpha = u_alphabet(lam, space)
    gens = []
    for tag in generator_tags(lam):
        ys = [space.y(i) for i in tag.indices]
        gens.append((tag, factorial_e(tag.d, ys, alpha, space)))
    return IdealPresentation(lam, "equivariant", space, gens)


def classical_generators(lam: Partition, max_n: int = DEFAULT_MAX_N) -> IdealPresentation:
    check_size(lam.n, max_n, "generator enumeration")
    space = space_for(lam)
    gens = [(tag, classical_generator(lam, tag, space)) for tag in generator_tags(lam)]
    return IdealPresentation(lam, "classical", space, gens)


def flag_ideal_generators(n: int, ell: int = 1, lam: Partition | None = None) -> IdealPresentation:
    """``e_i(y_1..y_n) - e_i(t_1..t_n)`` for ``i = 1..n``; tagged ``(n, (1..n), i)``."""
    if n < 1:
        raise ValueError("n must be positive")
    if lam is not None:
        ell = lam.ell
    space = VarSpace(n, ell)
    ys = [space.y(i) for i in range(1, n + 1)]
    ts = [space.t(i) for i in range(1, n + 1)]
    idx = tuple(range(1, n + 1))
    gens = [(GeneratorTag(n, idx, i), elementary(i, ys) - elementary(i, ts)) for i in range(1, n + 1)]
    return IdealPresentation(lam, "flag", space, gens)


def specialize_u_zero(pres: IdealPresentation) -> IdealPresentation:
    if pres.kind != "equivariant":
        raise ValueError(f"u = 0 specialization applies to equivariant presentations, not {pres.kind!r}")
    space = pres.space
    target = renaming(space, {("u", k): None for k in range(1, space.ell + 1)})
    gens = [(tag, rename(g, target)) for tag, g in pres.generators]
    return IdealPresentation(pres.lam, "classical", space, gens)


def _families(kind: str) -> tuple[str, ...]:
    return {"equivariant": ("y", "u"), "classical": ("y",), "flag": ("y", "t")}[kind]


def to_json_dict(pres: IdealPresentation) -> dict:
    return {
        "lambda": list(pres.lam.parts) if pres.lam is not None else None,
        "n": pres.n,
        "ell": pres.ell,
        "kind": pres.kind,
        "generators": [dict(tag.as_dict(), poly=format_poly(g)) for tag, g in pres.generators],
        "metadata": {
            "d_range": D_RANGE_NOTE if pres.kind != "flag" else None,
            "variables": pres.space.variable_names(_families(pres.kind)),
        },
    }


def export(pres: IdealPresentation, fmt: str = "json") -> str:
    """Serialise as ``json`` or ``cas`` text (ring header line plus one generator per line)."""
    if fmt == "json":
        return json.dumps(to_json_dict(pres), indent=2)
    if fmt in ("cas", "cas-text"):
        names = pres.space.variable_names(_families(pres.kind))
        lines = [f"ring ZZ[{','.join(names)}] grlex"]
        lines += [format_poly(g) for _, g in pres.generators]
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown export format {fmt!r}")


def load_json(text: str) -> IdealPresentation:
    data = json.loads(text)
    lam = Partition(tuple(data["lambda"])) if data.get("lambda") else None
    space = VarSpace(int(data["n"]), int(data["ell"]))
    gens = [
        (GeneratorTag(g["s"], tuple(g["indices"]), g["d"]), parse_poly(g["poly"], space))
        for g in data["generators"]
    ]
    return IdealPresentation(lam, data["kind"], space, gens)
