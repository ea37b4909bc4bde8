"""Verification suites shared by the test-suite and the ``verify`` command.

Each suite returns a :class:`SuiteResult` counting the identities checked and
listing any that failed.  All randomness comes from ``random.Random(seed)``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .combinatorics import (
    Partition,
    Permutation,
    adjacent_transpositions,
    all_permutations,
    enumerate_fixed_points,
    partitions,
)
from .localization import (
    FixedPointClass,
    on_fixed_points,
    project_subtorus,
    projection_renaming,
    restrict_flag,
    restrict_springer,
    sn_act_class,
    sn_act_poly,
    verify_vanishing,
)
from .polyring import VarSpace, format_poly, random_poly, rename
from .presentation import space_for, u_alphabet
from .symfun import complete, elementary, factorial_e, factorial_schur_tableaux

SUITES = ("vanishing", "action", "diagram", "schur")
DEFAULT_SAMPLES = 100
MAX_REPORTED = 20


@dataclass
class SuiteResult:
    name: str
    checks: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def record(self, ok: bool, what: str):
        self.checks += 1
        if not ok and len(self.failures) < MAX_REPORTED:
            self.failures.append(what)

    def to_json_dict(self) -> dict:
        return {
            "suite": self.name,
            "checks": self.checks,
            "verdict": "pass" if self.passed else "fail",
            "failures": self.failures,
        }


def _random_class(lam: Partition, space: VarSpace, rng: random.Random) -> FixedPointClass:
    return FixedPointClass(lam, {w: random_poly(space, rng, ("u",)) for w in enumerate_fixed_points(lam)})


def check_vanishing(lam: Partition, max_n: int = 8) -> SuiteResult:
    report = verify_vanishing(lam, max_n=max_n)
    out = SuiteResult("vanishing", report.generators_checked * report.fixed_points)
    for f in report.failures[:MAX_REPORTED]:
        out.failures.append(f"generator {f['tag']} at {f['fixed_point']}: residue {f['residue']}")
    return out


def check_action(lam: Partition, samples: int = DEFAULT_SAMPLES, seed: int = 0) -> SuiteResult:
    """Action axioms, the two generator equations, and equivariance of restriction."""
    rng = random.Random(seed)
    n = lam.n
    space = space_for(lam)
    out = SuiteResult("action")
    ident = Permutation.identity(n)
    adj = adjacent_transpositions(n)

    c = _random_class(lam, space, rng)
    out.record(sn_act_class(ident, c) == c, "identity acts trivially")
    for v1 in adj:
        for v2 in adj:
            lhs = sn_act_class(v2, sn_act_class(v1, c))
            out.record(lhs == sn_act_class(v2 * v1, c), f"composition for {v2} after {v1}")

    ys = [restrict_springer(space.y(i), lam) for i in range(1, n + 1)]
    for v in adj:
        for i in range(1, n + 1):
            out.record(sn_act_class(v, ys[i - 1]) == ys[v(i) - 1], f"{v} . y{i} = y{v(i)}")
        for k in range(1, lam.ell + 1):
            uk = restrict_springer(space.u(k), lam)
            out.record(sn_act_class(v, uk) == uk, f"{v} fixes u{k}")

    perms = list(all_permutations(n))
    for _ in range(samples):
        p = random_poly(space, rng, ("y", "u"))
        v = rng.choice(perms)
        lhs = restrict_springer(sn_act_poly(v, p), lam)
        rhs = sn_act_class(v, restrict_springer(p, lam))
        out.record(lhs == rhs, f"equivariance for v = {v}, p = {format_poly(p)}")
    return out


def diagram_commutes(p, lam: Partition) -> bool:
    """``pi o iota_1`` agrees with ``iota_2`` after ``t_i -> u_phi(i)``."""
    left = on_fixed_points(project_subtorus(restrict_flag(p), lam), lam)
    right = restrict_springer(rename(p, projection_renaming(p.space, lam)), lam)
    return left == right


def check_diagram(lam: Partition, samples: int = DEFAULT_SAMPLES, seed: int = 0) -> SuiteResult:
    rng = random.Random(seed)
    space = space_for(lam)
    out = SuiteResult("diagram")
    for _ in range(samples):
        p = random_poly(space, rng, ("y", "t"))
        out.record(diagram_commutes(p, lam), f"p = {format_poly(p)}")
    return out


def check_diagram_mixed(max_n: int = 5, samples: int = DEFAULT_SAMPLES, seed: int = 0) -> SuiteResult:
    """Diagram check on random pairs ``(p, lam)`` with ``lam`` of size at most ``max_n``."""
    rng = random.Random(seed)
    lams = [lam for n in range(1, max_n + 1) for lam in partitions(n)]
    out = SuiteResult("diagram")
    for _ in range(samples):
        lam = rng.choice(lams)
        p = random_poly(space_for(lam), rng, ("y", "t"))
        out.record(diagram_commutes(p, lam), f"lambda = {lam}, p = {format_poly(p)}")
    return out


def column(k: int) -> Partition | None:
    return Partition((1,) * k) if k else None


def column_identity(s: int, k: int, alphabet) -> bool:
    """Tableau sum over the column of length ``k`` equals the factorial ``e_k``."""
    space = alphabet[0].space
    ys = [space.y(i) for i in range(1, s + 1)]
    return factorial_schur_tableaux(column(k), s, alphabet, ys) == factorial_e(k, ys, alphabet, space)


def flag_identity(n: int, d: int) -> bool:
    """``sum_r (-1)^(d-r) e_r(t_1..t_n) h_(d-r)(t_1..t_(n+1-d)) = e_d(t_(n+2-d)..t_n) = 0``."""
    space = VarSpace(n, 1)
    ts = [space.t(i) for i in range(1, n + 1)]
    lhs = space.zero()
    for r in range(d + 1):
        term = elementary(r, ts) * complete(d - r, ts[: n + 1 - d], space)
        lhs = lhs + (term if (d - r) % 2 == 0 else -term)
    rhs = elementary(d, ts[n + 1 - d:], space)
    return lhs == rhs and rhs.is_zero()


def flag_class_vanishes(n: int, d: int) -> bool:
    """``e_d(y_1..y_n | t_1..t_n)`` restricts to zero at every permutation."""
    space = VarSpace(n, 1)
    ys = [space.y(i) for i in range(1, n + 1)]
    ts = [space.t(i) for i in range(1, n + 1)]
    return restrict_flag(factorial_e(d, ys, ts, space)).is_zero()


def check_schur(lam: Partition) -> SuiteResult:
    """Column identity for ``s <= n`` (symbolic and ``u_phi_lam`` alphabets) and the flag identity."""
    n = lam.n
    out = SuiteResult("schur")
    symbolic = VarSpace(n, n)
    sym_alpha = [symbolic.u(i) for i in range(1, n + 1)]
    lam_alpha = u_alphabet(lam, space_for(lam))
    for s in range(1, n + 1):
        for k in range(0, s + 1):
            out.record(column_identity(s, k, sym_alpha), f"column {k}, s = {s}, symbolic alphabet")
            out.record(column_identity(s, k, lam_alpha), f"column {k}, s = {s}, alphabet u_phi")
    for d in range(1, n + 1):
        out.record(flag_identity(n, d), f"flag identity n = {n}, d = {d}")
        out.record(flag_class_vanishes(n, d), f"flag class e_{d}(y|t), n = {n}")
    return out


def run_suites(lam: Partition, suites=SUITES, seed: int = 0, samples: int = DEFAULT_SAMPLES,
               max_n: int = 8) -> list[SuiteResult]:
    out = []
    for name in suites:
        if name == "vanishing":
            out.append(check_vanishing(lam, max_n=max_n))
        elif name == "action":
            out.append(check_action(lam, samples, seed))
        elif name == "diagram":
            out.append(check_diagram(lam, samples, seed))
        elif name == "schur":
            out.append(check_schur(lam))
        else:
            raise ValueError(f"unknown suite {name!r}")
    return out
