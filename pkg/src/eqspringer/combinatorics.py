"""Partitions, permutations, tableaux and the Springer fixed points.

Permutations are 1-based and written in one-line notation.  Products follow
``(w * v)(i) == w(v(i))``.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from functools import cached_property
from math import factorial
from typing import Iterator, Mapping


@dataclass(frozen=True)
class Partition:
    """A weakly decreasing sequence of positive integers."""

    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if not parts:
            raise ValueError("a partition needs at least one part")
        if any(p < 1 for p in parts):
            raise ValueError(f"partition parts must be positive: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"partition parts must be weakly decreasing: {parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def parse(cls, text: str) -> Partition:
        """Parse ``"3,2,1"`` (spaces tolerated)."""
        items = [x for x in re.split(r"[,\s]+", text.strip()) if x]
        try:
            return cls(tuple(int(x) for x in items))
        except ValueError as exc:
            raise ValueError(f"cannot parse partition {text!r}: {exc}") from None

    @property
    def n(self) -> int:
        return sum(self.parts)

    @property
    def ell(self) -> int:
        return len(self.parts)

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def padded(self, length: int) -> tuple[int, ...]:
        """Parts followed by zeros up to ``length`` entries."""
        if length < self.ell:
            raise ValueError(f"cannot pad {self.parts} to length {length}")
        return self.parts + (0,) * (length - self.ell)

    def part(self, i: int) -> int:
        """The 1-based part ``lambda_i``, zero beyond the last part."""
        if i < 1:
            raise IndexError(i)
        return self.parts[i - 1] if i <= self.ell else 0

    @cached_property
    def block_starts(self) -> tuple[int, ...]:
        """First index of each Jordan block: 1, lambda_1+1, ..."""
        starts = [1]
        for p in self.parts[:-1]:
            starts.append(starts[-1] + p)
        return tuple(starts)

    def block_values(self, k: int) -> range:
        """The values ``lambda_1+...+lambda_{k-1}+1 .. lambda_1+...+lambda_k``."""
        h = self.block_starts[k - 1]
        return range(h, h + self.parts[k - 1])

    def __str__(self):
        return ",".join(map(str, self.parts))


def partitions(n: int) -> Iterator[Partition]:
    """All partitions of ``n`` in reverse lexicographic order."""

    def rec(rest, cap):
        if rest == 0:
            yield ()
            return
        for p in range(min(rest, cap), 0, -1):
            for tail in rec(rest - p, p):
                yield (p,) + tail

    for parts in rec(n, n):
        yield Partition(parts)


@dataclass(frozen=True)
class Permutation:
    """A permutation of ``{1..n}`` in one-line notation."""

    oneline: tuple[int, ...]

    def __post_init__(self):
        w = tuple(int(x) for x in self.oneline)
        if sorted(w) != list(range(1, len(w) + 1)):
            raise ValueError(f"not a permutation of 1..{len(w)}: {w}")
        object.__setattr__(self, "oneline", w)

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def transposition(cls, n: int, i: int, j: int) -> Permutation:
        w = list(range(1, n + 1))
        w[i - 1], w[j - 1] = w[j - 1], w[i - 1]
        return cls(tuple(w))

    @classmethod
    def parse(cls, text: str) -> Permutation:
        """Parse whitespace- or comma-separated one-line notation.

        A bare digit string such as ``"2143"`` is read one digit per entry.
        """
        text = text.strip()
        if re.fullmatch(r"\d+", text):
            items = list(text)
        else:
            items = [x for x in re.split(r"[,\s]+", text) if x]
        try:
            return cls(tuple(int(x) for x in items))
        except ValueError as exc:
            raise ValueError(f"cannot parse permutation {text!r}: {exc}") from None

    @property
    def n(self) -> int:
        return len(self.oneline)

    def __call__(self, i: int) -> int:
        return self.oneline[i - 1]

    def __mul__(self, other: Permutation) -> Permutation:
        if other.n != self.n:
            raise ValueError("permutations of different sizes")
        return Permutation(tuple(self.oneline[j - 1] for j in other.oneline))

    def inverse(self) -> Permutation:
        inv = [0] * self.n
        for i, x in enumerate(self.oneline, 1):
            inv[x - 1] = i
        return Permutation(tuple(inv))

    def __lt__(self, other):
        return self.oneline < other.oneline

    def __str__(self):
        if self.n < 10:
            return "".join(map(str, self.oneline))
        return " ".join(map(str, self.oneline))


def all_permutations(n: int) -> Iterator[Permutation]:
    """``S_n`` in lexicographic order."""
    for w in itertools.permutations(range(1, n + 1)):
        yield Permutation(w)


def adjacent_transpositions(n: int) -> list[Permutation]:
    return [Permutation.transposition(n, i, i + 1) for i in range(1, n)]


class BlockNilpotent:
    """Index bookkeeping for the nilpotent operator in Jordan form.

    The operator sends ``e_i`` to ``e_{i-1}`` inside a block and kills the
    first basis vector of every block.
    """

    def __init__(self, partition: Partition):
        self.partition = partition
        self._starts = frozenset(partition.block_starts)

    def pred(self, i: int) -> int:
        if not 1 <= i <= self.partition.n:
            raise ValueError(f"index {i} out of range")
        return 0 if i in self._starts else i - 1

    def image_dim(self, m: int) -> int:
        """Dimension of the image of the ``m``-th power."""
        return sum(max(p - m, 0) for p in self.partition.parts)

    def image_indices(self, m: int) -> frozenset[int]:
        """Basis indices spanning the image of the ``m``-th power."""
        out = set()
        for i in range(1, self.partition.n + 1):
            j = i
            for _ in range(m):
                j = self.pred(j)
                if j == 0:
                    break
            if j:
                out.add(j)
        return frozenset(out)


@dataclass(frozen=True)
class Tableau:
    """A filling of a Young diagram; cells are 1-based ``(row, col)``."""

    shape: Partition
    entries: Mapping[tuple[int, int], int]

    def __hash__(self):
        return hash((self.shape, tuple(sorted(self.entries.items()))))

    def __eq__(self, other):
        return (
            isinstance(other, Tableau)
            and self.shape == other.shape
            and dict(self.entries) == dict(other.entries)
        )

    def cells(self) -> Iterator[tuple[int, int]]:
        for i, p in enumerate(self.shape.parts, 1):
            for j in range(1, p + 1):
                yield (i, j)

    @staticmethod
    def content(cell: tuple[int, int]) -> int:
        i, j = cell
        return j - i

    def is_semistandard(self) -> bool:
        e = self.entries
        for i, j in self.cells():
            if (i, j + 1) in e and e[(i, j)] > e[(i, j + 1)]:
                return False
            if (i + 1, j) in e and e[(i, j)] >= e[(i + 1, j)]:
                return False
        return True

    def rows(self) -> list[list[int]]:
        return [
            [self.entries[(i, j)] for j in range(1, p + 1)]
            for i, p in enumerate(self.shape.parts, 1)
        ]


def conjugate(lam: Partition) -> Partition:
    """Transpose partition: ``eta_i = #{j : lambda_j >= i}``."""
    return Partition(tuple(sum(1 for p in lam.parts if p >= i) for i in range(1, lam.parts[0] + 1)))


def p_value(lam: Partition, s: int, n: int) -> int:
    """Sum of the last ``s`` entries of ``lam`` zero-padded to length ``n``."""
    if not 1 <= s <= n:
        raise ValueError(f"s must lie in 1..{n}, got {s}")
    return sum(lam.padded(n)[n - s:])


def multinomial_rank(lam: Partition) -> int:
    out = factorial(lam.n)
    for p in lam.parts:
        out //= factorial(p)
    return out


def _check_size(w: Permutation, lam: Partition):
    if w.n != lam.n:
        raise ValueError(f"permutation of {w.n} letters does not match |lambda| = {lam.n}")


def is_springer_fixed_point(w: Permutation, lam: Partition) -> bool:
    """Whether every block of values appears in ``w`` as an increasing subsequence."""
    _check_size(w, lam)
    last = {}
    for x in w.oneline:
        k = phi(lam, x)
        if last.get(k, 0) > x:
            return False
        last[k] = x
    return True


def enumerate_fixed_points(lam: Partition) -> list[Permutation]:
    """Springer fixed points for ``lam``, lexicographic in one-line notation.

    A fixed point is a word over the block labels with content ``lam``; the
    values of each block are then placed in increasing order.  Lex order on
    words matches lex order on one-line notation since blocks hold
    consecutive value ranges.
    """
    ell, n = lam.ell, lam.n
    remaining = list(lam.parts)
    nxt = list(lam.block_starts)
    current: list[int] = []
    out = []

    def rec():
        if len(current) == n:
            out.append(Permutation(tuple(current)))
            return
        for k in range(ell):
            if remaining[k]:
                remaining[k] -= 1
                current.append(nxt[k])
                nxt[k] += 1
                rec()
                nxt[k] -= 1
                current.pop()
                remaining[k] += 1

    rec()
    return out


def coset_rep(w: Permutation, lam: Partition) -> Permutation:
    """Fixed point in the right coset of ``w`` modulo the Young subgroup.

    Within each block of values, the positions those values occupy are
    reassigned the block's values in increasing order.
    """
    _check_size(w, lam)
    out = [0] * w.n
    nxt = list(lam.block_starts)
    for pos, x in enumerate(w.oneline):
        k = phi(lam, x) - 1
        out[pos] = nxt[k]
        nxt[k] += 1
    return Permutation(tuple(out))


def phi(lam: Partition, i: int) -> int:
    """Index of the Jordan block containing basis index ``i``."""
    if not 1 <= i <= lam.n:
        raise ValueError(f"index {i} out of range 1..{lam.n}")
    total = 0
    for k, p in enumerate(lam.parts, 1):
        total += p
        if i <= total:
            return k
    raise AssertionError("unreachable")


def phi_lambda_seq(lam: Partition) -> tuple[int, ...]:
    """Sector ``r`` contributes ``(1..r)`` repeated ``lambda_r - lambda_{r+1}`` times."""
    out: list[int] = []
    for r in range(1, lam.ell + 1):
        out.extend(list(range(1, r + 1)) * (lam.part(r) - lam.part(r + 1)))
    return tuple(out)


def build_w_refinement(lam: Partition) -> Permutation:
    """Permutation whose coordinate flag refines the kernel filtration of the nilpotent."""
    lam1 = lam.part(1)
    out: list[int] = []
    for r in range(1, lam.ell + 1):
        shift = lam1 - lam.part(r)
        for m in range(1, lam.part(r) - lam.part(r + 1) + 1):
            acc = shift
            out.append(acc + m)
            for k in range(2, r + 1):
                acc += lam.part(k)
                out.append(acc + m)
    return Permutation(tuple(out))


def refinement_holds(lam: Partition, w: Permutation) -> bool:
    """Check that ``w`` lists each image of the nilpotent's powers as a prefix."""
    nil = BlockNilpotent(lam)
    m = 0
    while True:
        d = nil.image_dim(m)
        if set(w.oneline[:d]) != nil.image_indices(m):
            return False
        if d == 0:
            return True
        m += 1


def enumerate_ssyt(shape: Partition, s: int) -> list[Tableau]:
    """Semistandard tableaux of ``shape`` with entries in ``1..s``."""
    if shape.ell > s:
        return []
    cells = [(i, j) for i, p in enumerate(shape.parts, 1) for j in range(1, p + 1)]
    filling: dict[tuple[int, int], int] = {}
    out = []

    def rec(idx):
        if idx == len(cells):
            out.append(Tableau(shape, dict(filling)))
            return
        i, j = cells[idx]
        lo = 1
        if j > 1:
            lo = filling[(i, j - 1)]
        if i > 1:
            lo = max(lo, filling[(i - 1, j)] + 1)
        # room for the strictly increasing cells still below in this column
        below = sum(1 for p in shape.parts[i:] if p >= j)
        for v in range(lo, s - below + 1):
            filling[(i, j)] = v
            rec(idx + 1)
        filling.pop((i, j), None)

    rec(0)
    return out


__all__ = [
    "BlockNilpotent",
    "Partition",
    "Permutation",
    "Tableau",
    "adjacent_transpositions",
    "all_permutations",
    "build_w_refinement",
    "conjugate",
    "coset_rep",
    "enumerate_fixed_points",
    "enumerate_ssyt",
    "is_springer_fixed_point",
    "multinomial_rank",
    "p_value",
    "partitions",
    "phi",
    "phi_lambda_seq",
    "refinement_holds",
]
