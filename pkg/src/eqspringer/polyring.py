"""Exact sparse polynomials in the variable families ``y``, ``u`` and ``t``.

A :class:`VarSpace` fixes ``n`` (number of ``y`` and ``t`` variables) and
``ell`` (number of ``u`` variables).  Internally a monomial is a dense
exponent tuple laid out as ``(y1..yn, u1..u_ell, t1..tn)``; every variable has
algebraic degree 1 (cohomological degree 2).

Terms are ordered graded-lexicographically with the variables ranked
``y1, ..., yn, u1, ..., u_ell, t1, ..., tn`` from most to least significant,
and printed in decreasing order.  Inside a monomial the factors are printed
by family name and then index (``t``, ``u``, ``y``).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from . import kernels

FAMILIES = ("y", "u", "t")


@dataclass(frozen=True)
class VarSpace:
    n: int
    ell: int

    def __post_init__(self):
        if self.n < 0 or self.ell < 0:
            raise ValueError("variable counts must be nonnegative")

    @property
    def nvars(self) -> int:
        return 2 * self.n + self.ell

    def bound(self, family: str) -> int:
        return self.ell if family == "u" else self.n

    def index(self, family: str, i: int) -> int:
        """Position of variable ``family_i`` in the exponent tuple."""
        if family not in FAMILIES:
            raise ValueError(f"unknown variable family {family!r}")
        if not 1 <= i <= self.bound(family):
            raise ValueError(f"variable {family}{i} is outside {self}")
        if family == "y":
            return i - 1
        if family == "u":
            return self.n + i - 1
        return self.n + self.ell + i - 1

    def var_of(self, pos: int) -> tuple[str, int]:
        if pos < self.n:
            return ("y", pos + 1)
        if pos < self.n + self.ell:
            return ("u", pos - self.n + 1)
        return ("t", pos - self.n - self.ell + 1)

    def name(self, pos: int) -> str:
        f, i = self.var_of(pos)
        return f"{f}{i}"

    def family_positions(self, family: str) -> range:
        start = {"y": 0, "u": self.n, "t": self.n + self.ell}[family]
        return range(start, start + self.bound(family))

    def var(self, family: str, i: int) -> Poly:
        e = [0] * self.nvars
        e[self.index(family, i)] = 1
        return Poly(self, {tuple(e): 1})

    def y(self, i: int) -> Poly:
        return self.var("y", i)

    def u(self, i: int) -> Poly:
        return self.var("u", i)

    def t(self, i: int) -> Poly:
        return self.var("t", i)

    def zero(self) -> Poly:
        return Poly(self, {})

    def const(self, c: int) -> Poly:
        c = int(c)
        return Poly(self, {(0,) * self.nvars: c} if c else {})

    def variable_names(self, families: Iterable[str] = FAMILIES) -> list[str]:
        fams = set(families)
        return [self.name(p) for p in range(self.nvars) if self.var_of(p)[0] in fams]

    def __str__(self):
        return f"VarSpace(n={self.n}, ell={self.ell})"


def monomial_key(m: tuple[int, ...]):
    """Sort key realising the graded-lex term order."""
    return (sum(m), m)


class Poly:
    """An immutable polynomial with integer coefficients.

    ``terms`` maps exponent tuples to nonzero ints and must not be mutated
    after construction.
    """

    __slots__ = ("space", "terms", "_hash")

    def __init__(self, space: VarSpace, terms: Mapping[tuple[int, ...], int] | None = None):
        self.space = space
        if terms is None:
            terms = {}
        elif any(c == 0 for c in terms.values()):
            terms = {m: c for m, c in terms.items() if c}
        self.terms = terms
        self._hash = None

    def _coerce(self, other) -> Poly:
        if isinstance(other, Poly):
            if other.space != self.space:
                raise ValueError(f"variable space mismatch: {self.space} vs {other.space}")
            return other
        if isinstance(other, int):
            return self.space.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if len(self.terms) < len(other.terms):
            a, b = other.terms, self.terms
        else:
            a, b = self.terms, other.terms
        out = dict(a)
        for m, c in b.items():
            v = out.get(m, 0) + c
            if v:
                out[m] = v
            else:
                del out[m]
        return Poly(self.space, out)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.space, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self.terms or not other.terms:
            return Poly(self.space, {})
        return Poly(self.space, kernels.mul_terms(self.terms, other.terms))

    __rmul__ = __mul__

    def scale(self, c: int) -> Poly:
        c = int(c)
        if not c:
            return Poly(self.space, {})
        return Poly(self.space, {m: c * v for m, v in self.terms.items()})

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = self.space.const(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.space.const(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.space == other.space and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.space, frozenset(self.terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        """Total degree; ``-1`` for the zero polynomial."""
        return max((sum(m) for m in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m in self.terms}) <= 1

    def families(self) -> set[str]:
        """Variable families that occur with positive exponent."""
        used = set()
        for m in self.terms:
            for p, e in enumerate(m):
                if e:
                    used.add(self.space.var_of(p)[0])
        return used

    def sorted_terms(self) -> list[tuple[tuple[int, ...], int]]:
        return sorted(self.terms.items(), key=lambda mc: monomial_key(mc[0]), reverse=True)

    def coefficient(self, monomial: Sequence[int]) -> int:
        return self.terms.get(tuple(monomial), 0)

    def __repr__(self):
        return f"Poly({format_poly(self)!r})"

    def __str__(self):
        return format_poly(self)


def homogeneous_component(p: Poly, d: int) -> Poly:
    if d < 0:
        raise ValueError("degree must be nonnegative")
    return Poly(p.space, {m: c for m, c in p.terms.items() if sum(m) == d})


def random_poly(space: VarSpace, rng, families: Sequence[str] = ("y", "u"),
                terms: int = 4, max_degree: int = 3, coeff: int = 5) -> Poly:
    """A random polynomial in the given families, drawn from ``rng`` (a ``random.Random``)."""
    positions = [pos for fam in families for pos in space.family_positions(fam)]
    out: dict[tuple[int, ...], int] = {}
    for _ in range(terms):
        e = [0] * space.nvars
        for _ in range(rng.randint(0, max_degree)):
            e[rng.choice(positions)] += 1
        m = tuple(e)
        out[m] = out.get(m, 0) + rng.randint(-coeff, coeff)
    return Poly(space, out)


class Substitution:
    """A ring homomorphism given by images of some variables.

    Unassigned variables are fixed.
    """

    def __init__(self, space: VarSpace, assignments: Mapping[tuple[str, int], Poly | int] | None = None):
        self.space = space
        self.images: dict[int, Poly] = {}
        for (fam, i), img in (assignments or {}).items():
            pos = space.index(fam, i)
            if isinstance(img, int):
                img = space.const(img)
            if img.space != space:
                raise ValueError("substitution image lives in a different variable space")
            self.images[pos] = img

    def image(self, pos: int) -> Poly:
        img = self.images.get(pos)
        if img is None:
            e = [0] * self.space.nvars
            e[pos] = 1
            return Poly(self.space, {tuple(e): 1})
        return img

    def as_renaming(self) -> tuple[int, ...] | None:
        """Target indices if every image is a single variable or zero."""
        target = list(range(self.space.nvars))
        for pos, img in self.images.items():
            if not img.terms:
                target[pos] = -1
                continue
            if len(img.terms) != 1:
                return None
            (m, c), = img.terms.items()
            if c != 1 or sum(m) != 1:
                return None
            target[pos] = m.index(1)
        return tuple(target)

    def then(self, other: Substitution) -> Substitution:
        """Composite ``other o self``: apply ``self`` first, then ``other``."""
        out = Substitution(self.space)
        identity = Substitution(self.space)
        for pos in range(self.space.nvars):
            img = substitute(self.image(pos), other)
            if img != identity.image(pos):
                out.images[pos] = img
        return out


def renaming(space: VarSpace, mapping: Mapping[tuple[str, int], tuple[str, int] | None]) -> tuple[int, ...]:
    """Target tuple for :func:`rename`; ``None`` images mean zero."""
    target = list(range(space.nvars))
    for (fam, i), img in mapping.items():
        target[space.index(fam, i)] = -1 if img is None else space.index(*img)
    return tuple(target)


def rename(p: Poly, target: tuple[int, ...]) -> Poly:
    """Fast path for substitutions sending variables to variables or zero."""
    if len(target) != p.space.nvars:
        raise ValueError("renaming has the wrong length")
    return Poly(p.space, kernels.rename_terms(p.terms, target))


def substitute(p: Poly, sigma: Substitution) -> Poly:
    if sigma.space != p.space:
        raise ValueError("variable space mismatch")
    target = sigma.as_renaming()
    if target is not None:
        return rename(p, target)
    space = p.space
    moved = sorted(sigma.images)
    moved_set = set(moved)
    powers: dict[tuple[int, int], Poly] = {}

    def power(pos, e):
        key = (pos, e)
        if key not in powers:
            powers[key] = sigma.images[pos] if e == 1 else power(pos, e - 1) * sigma.images[pos]
        return powers[key]

    # group terms by their moved part so each product of images is built once
    groups: dict[tuple[int, ...], dict[tuple[int, ...], int]] = {}
    for m, c in p.terms.items():
        moved_part = tuple(m[pos] for pos in moved)
        kept = tuple(0 if pos in moved_set else e for pos, e in enumerate(m))
        groups.setdefault(moved_part, {})[kept] = c
    out = space.zero()
    for moved_part, kept_terms in groups.items():
        factor = space.const(1)
        for pos, e in zip(moved, moved_part):
            if e:
                factor = factor * power(pos, e)
        out = out + factor * Poly(space, kept_terms)
    return out


class PolySyntaxError(ValueError):
    """Malformed polynomial text; ``pos`` is a 0-based character offset."""

    def __init__(self, message: str, text: str, pos: int):
        super().__init__(f"{message} at position {pos}: {text!r}")
        self.pos = pos


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_]\w*)|(\*\*|[-+*^()]))")


def _tokenize(text: str):
    pos = 0
    out = []
    while pos < len(text):
        if not text[pos:].strip():
            break
        mt = _TOKEN.match(text, pos)
        if not mt:
            start = len(text) - len(text[pos:].lstrip())
            raise PolySyntaxError(f"unexpected character {text[start]!r}", text, start)
        num, name, op = mt.groups()
        start = mt.start(mt.lastindex)
        if num is not None:
            out.append(("num", int(num), start))
        elif name is not None:
            out.append(("name", name, start))
        else:
            out.append(("op", "^" if op == "**" else op, start))
        pos = mt.end()
    out.append(("end", None, len(text)))
    return out


class _Parser:
    def __init__(self, text: str, space: VarSpace):
        self.text = text
        self.space = space
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def error(self, msg, tok=None):
        tok = tok or self.peek()
        raise PolySyntaxError(msg, self.text, tok[2])

    def parse(self) -> Poly:
        if self.peek()[0] == "end":
            self.error("empty expression")
        p = self.expr()
        if self.peek()[0] != "end":
            self.error(f"unexpected token {self.peek()[1]!r}")
        return p

    def expr(self) -> Poly:
        sign = 1
        if self.peek()[:2] in (("op", "-"), ("op", "+")):
            sign = -1 if self.take()[1] == "-" else 1
        p = self.term().scale(sign)
        while self.peek()[:2] in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            q = self.term()
            p = p + q if op == "+" else p - q
        return p

    def term(self) -> Poly:
        p = self.factor()
        while self.peek()[:2] == ("op", "*"):
            self.take()
            p = p * self.factor()
        return p

    def factor(self) -> Poly:
        base = self.atom()
        if self.peek()[:2] == ("op", "^"):
            self.take()
            tok = self.take()
            if tok[0] != "num":
                self.error("exponent must be a nonnegative integer literal", tok)
            base = base ** tok[1]
        return base

    def atom(self) -> Poly:
        tok = self.take()
        kind, val, _ = tok
        if kind == "num":
            return self.space.const(val)
        if kind == "name":
            mt = re.fullmatch(r"([yut])([1-9]\d*)", val)
            if not mt:
                self.error(f"unknown variable {val!r}", tok)
            try:
                return self.space.var(mt.group(1), int(mt.group(2)))
            except ValueError:
                self.error(f"unknown variable {val!r} for {self.space}", tok)
        if (kind, val) == ("op", "("):
            p = self.expr()
            if self.peek()[:2] != ("op", ")"):
                self.error("expected ')'")
            self.take()
            return p
        if (kind, val) == ("op", "-"):
            return -self.factor()
        self.error("unexpected end of input" if kind == "end" else f"unexpected token {val!r}", tok)


def parse_poly(text: str, space: VarSpace) -> Poly:
    """Parse integers, ``y<k>``/``u<k>``/``t<k>``, ``+ - * ^`` and parentheses."""
    return _Parser(text, space).parse()


def format_monomial(space: VarSpace, m: tuple[int, ...]) -> str:
    parts = []
    for p in sorted(range(space.nvars), key=space.var_of):
        e = m[p]
        if e == 1:
            parts.append(space.name(p))
        elif e > 1:
            parts.append(f"{space.name(p)}^{e}")
    return "*".join(parts)


def format_poly(p: Poly) -> str:
    if not p.terms:
        return "0"
    out = []
    for idx, (m, c) in enumerate(p.sorted_terms()):
        mono = format_monomial(p.space, m)
        a = abs(c)
        body = (f"{a}*{mono}" if a != 1 else mono) if mono else str(a)
        if idx == 0:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append(("- " if c < 0 else "+ ") + body)
    return " ".join(out)
