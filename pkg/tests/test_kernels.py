import os
import random
import subprocess
import sys

import pytest
from hypothesis import given, strategies as st

from eqspringer import kernels
from oracles import fraction_rank

BACKENDS = kernels.available_backends()
NVARS = 5

exps = st.tuples(*[st.integers(0, 4)] * NVARS)
big = st.integers(-(2**90), 2**90)
term_dicts = st.dictionaries(exps, big.filter(bool), max_size=8)
targets = st.lists(st.integers(-1, NVARS - 1), min_size=NVARS, max_size=NVARS).map(tuple)
matrices = st.integers(1, 6).flatmap(
    lambda c: st.tuples(st.just(c), st.lists(st.lists(st.integers(-50, 50), min_size=c, max_size=c), max_size=7)))


def test_compiled_backend_is_built():
    # the package ships a compiled kernel; the fallback exists for environments without a compiler
    assert "python" in BACKENDS
    if os.environ.get("EQSPRINGER_PURE_PYTHON", "") in ("", "0"):
        assert kernels.BACKEND == "cython", "build the extension with `python3 setup.py build_ext --inplace`"


@given(term_dicts, term_dicts)
def test_mul_terms_agree(a, b):
    results = [mod.mul_terms(a, b) for mod in BACKENDS.values()]
    expected = {}
    for ma, ca in a.items():
        for mb, cb in b.items():
            m = tuple(x + y for x, y in zip(ma, mb))
            expected[m] = expected.get(m, 0) + ca * cb
    expected = {m: c for m, c in expected.items() if c}
    assert all(r == expected for r in results)


@given(term_dicts, targets)
def test_rename_terms_agree(terms, target):
    expected = {}
    for m, c in terms.items():
        if any(e and target[i] < 0 for i, e in enumerate(m)):
            continue
        out = [0] * NVARS
        for i, e in enumerate(m):
            if e:
                out[target[i]] += e
        key = tuple(out)
        expected[key] = expected.get(key, 0) + c
    expected = {m: c for m, c in expected.items() if c}
    for mod in BACKENDS.values():
        assert mod.rename_terms(terms, target) == expected


@given(matrices)
def test_rank_agrees_with_fractions(data):
    ncols, rows = data
    expected = fraction_rank(rows) if rows else 0
    for mod in BACKENDS.values():
        assert mod.rank(rows, ncols) == expected


@pytest.mark.parametrize("name", sorted(BACKENDS))
def test_echelon_with_large_entries(name):
    mod = BACKENDS[name]
    rng = random.Random(3)
    rows = [[rng.randint(-(10**30), 10**30) for _ in range(8)] for _ in range(5)]
    rows.append([sum(r[j] * (i + 1) for i, r in enumerate(rows)) for j in range(8)])
    ech = mod.Echelon(8)
    flags = [ech.insert(list(r)) for r in rows]
    assert flags == [True] * 5 + [False]
    assert ech.rank == 5


@pytest.mark.parametrize("name", sorted(BACKENDS))
def test_rename_with_many_variables(name):
    # exercises the generic path past the fixed-size buffer of the compiled kernel
    n = 80
    m = tuple(1 if i % 7 == 0 else 0 for i in range(n))
    target = tuple((i + 1) % n for i in range(n))
    out = BACKENDS[name].rename_terms({m: 3}, target)
    (k, c), = out.items()
    assert c == 3 and sum(k) == sum(m) and k[1] == 1


@pytest.mark.parametrize("value,expected", [("1", "python"), ("0", None)])
def test_backend_switch(value, expected):
    env = dict(os.environ, EQSPRINGER_PURE_PYTHON=value)
    out = subprocess.run([sys.executable, "-c", "from eqspringer import kernels; print(kernels.BACKEND)"],
                         env=env, capture_output=True, text=True, check=True).stdout.strip()
    assert out == (expected or ("cython" if "cython" in BACKENDS else "python"))
