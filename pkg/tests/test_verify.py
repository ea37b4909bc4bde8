import json

import pytest

from eqspringer import kernels, verify
from eqspringer.combinatorics import Partition, partitions
from eqspringer.polyring import parse_poly
from eqspringer.presentation import (
    GeneratorTag,
    SizeLimitError,
    classical_generators,
    equivariant_generators,
    space_for,
    specialize_u_zero,
)
from eqspringer.verify import (
    Coinvariants,
    classical_generator_image,
    hilbert_function,
    hilbert_function_macaulay,
    monomial_basis,
    rank_certificate,
)
from oracles import multinomial, q_factorial_coefficients

P = Partition


def test_hilbert_examples():
    assert hilbert_function(P((3,))).dims == (1,)
    assert hilbert_function(P((1, 1, 1))).dims == (1, 2, 2, 1)
    report = hilbert_function(P((2, 1)))
    assert (report.dims, report.total) == ((1, 2), 3)


@pytest.mark.parametrize("n", range(1, 5))
def test_hilbert_matches_macaulay_elimination(n):
    for lam in partitions(n):
        assert hilbert_function(lam).dims == hilbert_function_macaulay(lam).dims


@pytest.mark.parametrize("n", range(1, 7))
def test_coinvariant_dims_are_q_factorial(n):
    assert list(hilbert_function(P((1,) * n)).dims) == q_factorial_coefficients(n)


@pytest.mark.parametrize("n", range(1, 6))
def test_hilbert_totals(n):
    for lam in partitions(n):
        report = hilbert_function(lam)
        assert report.dims[0] == 1 and report.dims[-1] != 0
        assert report.total == multinomial(lam) and report.passed


def test_hilbert_size_limit():
    with pytest.raises(SizeLimitError):
        hilbert_function(P((4, 3)))


def test_normal_form_differs_by_coinvariant_ideal_element():
    # m - NF(m) must lie in (e1, e2, e3); checked by elimination in each degree
    n = 3
    co = Coinvariants(n)
    gens = classical_generators(P((1, 1, 1))).generators
    for d in range(0, 5):
        cols = verify._monomials(n, d)
        index = {m: i for i, m in enumerate(cols)}
        ech = kernels.Echelon(len(cols))
        for tag, g in gens:
            if tag.d <= d:
                for m in verify._monomials(n, d - tag.d):
                    v = [0] * len(cols)
                    for t, c in verify._shifted(verify._y_terms(g), m).items():
                        v[index[t]] += c
                    ech.insert(v)
        for m in cols:
            v = [0] * len(cols)
            v[index[m]] += 1
            for b, c in co.normal_form(m):
                v[index[b]] -= c
            assert not ech.insert(v)
        assert all(b[0] == 0 for m in cols for b, _ in co.normal_form(m))


def test_monomial_basis_examples():
    assert [str(b) for b in monomial_basis(P((3,)))] == ["1"]
    assert [str(b) for b in monomial_basis(P((2, 1)))] == ["1", "y2", "y3"]
    assert [str(b) for b in monomial_basis(P((1, 1)))] == ["1", "y2"]


@pytest.mark.parametrize("n", range(1, 5))
def test_monomial_basis_complements_the_ideal(n):
    for lam in partitions(n):
        basis = monomial_basis(lam)
        assert len(basis) == multinomial(lam)
        dims = hilbert_function_macaulay(lam).dims
        gens = [(t.d, verify._y_terms(g)) for t, g in classical_generators(lam).generators]
        for d, dim in enumerate(dims):
            cols = verify._monomials(n, d)
            index = {m: i for i, m in enumerate(cols)}
            rows = []
            for k, terms in gens:
                for m in verify._monomials(n, d - k) if k <= d else []:
                    v = [0] * len(cols)
                    for t, c in verify._shifted(terms, m).items():
                        v[index[t]] += c
                    rows.append(v)
            ideal_rank = kernels.rank(rows, len(cols))
            picked = [b for b in basis if b.degree() == d]
            assert len(picked) == dim
            for b in picked:
                (m, _), = b.terms.items()
                v = [0] * len(cols)
                v[index[m[:n]]] = 1
                rows.append(v)
            assert kernels.rank(rows, len(cols)) == ideal_rank + dim


def test_classical_generator_image_examples():
    lam = P((2,))
    assert classical_generator_image(lam, GeneratorTag(1, (1,), 1)) == space_for(lam).u(1)
    lam = P((2, 1))
    img = classical_generator_image(lam, GeneratorTag(3, (1, 2, 3), 1))
    assert img == parse_poly("2*u1+u2", space_for(lam))
    for bad in [GeneratorTag(1, (1,), 1), GeneratorTag(2, (2, 1), 2), GeneratorTag(3, (1, 2, 3), 4)]:
        with pytest.raises(ValueError):
            classical_generator_image(lam, bad)


@pytest.mark.parametrize("n", range(1, 6))
def test_generator_split_identity(n):
    for lam in partitions(n):
        eq = equivariant_generators(lam)
        cl = classical_generators(lam)
        for (tag, g), (_, c) in zip(eq.generators, cl.generators):
            img = classical_generator_image(lam, tag)
            assert g == c - img
            assert all(any(m[n:]) for m in img.terms)
        assert specialize_u_zero(eq) == cl


def test_rank_certificate_examples():
    cert = rank_certificate(P((3,)))
    assert (cert.achieved_rank, cert.target, cert.verdict) == (1, 1, "pass")
    cert = rank_certificate(P((2, 1)))
    assert (cert.achieved_rank, cert.verdict) == (3, "pass")
    assert rank_certificate(P((2, 2))).achieved_rank == 6
    data = json.loads(verify.to_json(cert))
    assert set(data) >= {"lambda", "specializations", "achieved_rank", "target", "verdict"}
    values = data["specializations"][0]
    assert len(set(values)) == len(values) and all(1 <= x <= 10**6 for x in values)


def test_rank_certificate_is_deterministic():
    a = rank_certificate(P((2, 2, 1)), seed=7)
    b = rank_certificate(P((2, 2, 1)), seed=7)
    assert a.to_json_dict() == b.to_json_dict()


def test_rank_certificate_reports_exhausted_retries(monkeypatch):
    lam = P((2, 1))
    space = space_for(lam)
    monkeypatch.setattr(verify, "monomial_basis", lambda lam, max_n=5: [space.const(1)] * 3)
    cert = rank_certificate(lam)
    assert cert.achieved_rank == 1 and cert.verdict == "fail"
    data = cert.to_json_dict()
    assert data["probabilistic_miss"] is True
    assert len(data["specializations"]) == 1 + verify.MAX_RETRIES


def test_rank_certificate_size_limit():
    with pytest.raises(SizeLimitError):
        rank_certificate(P((3, 2, 1)))
