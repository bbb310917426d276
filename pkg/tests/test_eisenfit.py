import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from primrep.catalog import catalog_entries, evaluate_formula, parse_formula_spec, spec_to_json
from primrep.characters import TRIVIAL, kron
from primrep.eisenfit import (
    BasisTriple,
    FitError,
    basis_coefficient,
    enumerate_triples,
    fit,
    infer_level,
    weight_of,
)
from primrep.repnums import rep_series


def _keys(triples):
    return {(t.psi.syntax, t.phi.syntax, t.t) for t in triples}


def test_enumerate_examples():
    assert _keys(enumerate_triples(4, 2)) == {("1", "1", 2), ("1", "1", 4)}
    assert enumerate_triples(1, 2) == []
    assert _keys(enumerate_triples(4, 3)) == {("1", "kron:-4", 1), ("kron:-4", "1", 1)}
    assert _keys(enumerate_triples(16, 2)) >= {("kron:-4", "kron:-4", 1), ("1", "1", 16)}


def test_enumerate_invariants():
    for N in (4, 8, 12, 20, 24, 48):
        for k in (2, 3, 4):
            ts = enumerate_triples(N, k)
            for t in ts:
                assert t.psi.parity * t.phi.parity == (-1) ** k
                assert N % (t.t * t.psi.conductor * t.phi.conductor) == 0
                assert t.psi.is_primitive and t.phi.is_primitive
            keys = [(t.psi.conductor, t.phi.conductor, t.t) for t in ts]
            assert keys == sorted(keys)
            assert len(_keys(ts)) == len(ts)


def test_enumerate_general_characters():
    ts = enumerate_triples(5, 3, real_only=False)
    assert len(ts) == 4  # odd characters mod 5 paired with the trivial one, both orders
    assert not all(t.psi.is_real and t.phi.is_real for t in ts)


def test_basis_coefficient_examples():
    assert basis_coefficient(BasisTriple(TRIVIAL, TRIVIAL, 4, 2), 4) == 3
    assert basis_coefficient(BasisTriple(kron(-4), TRIVIAL, 1, 3), 2) == 4
    assert basis_coefficient(BasisTriple(kron(-4), TRIVIAL, 3, 3), 2) == 0
    assert basis_coefficient(BasisTriple(TRIVIAL, TRIVIAL, 4, 2), 6) == 12


def test_infer_level_and_weight():
    assert infer_level("1,1,1,1") == 4
    assert infer_level("1,1,1,2") == 8
    assert infer_level("1,1,2,6") == 24
    assert weight_of("1,1,1,1,1,1") == 3
    with pytest.raises(FitError, match="even rank required"):
        weight_of("1,1,1")


def test_fit_four_squares():
    r = fit(rep_series("1,1,1,1", 200), 4, train=(1, 10), validate=(11, 200))
    assert r.residual_ok and r.status == "ok"
    assert [(str(t), c) for t, c in r.nonzero()] == [("(1, 1, 4)", 8)]
    spec = r.to_formula_spec()
    assert [(t.coefficient, t.t) for t in spec.terms] == [(8, 1), (-32, 4)]


def test_fit_six_squares():
    r = fit(rep_series("1,1,1,1,1,1", 200), 4, train=(1, 10), validate=(11, 200))
    assert r.residual_ok
    got = {(t.psi.syntax, t.phi.syntax): c for t, c in r.nonzero()}
    assert got == {("kron:-4", "1"): 16, ("1", "kron:-4"): -4}


def test_fit_rejects_cusp_target():
    r = fit(rep_series("1,1,1,1,1,1,1,1,1,1", 200), 4, train=(1, 10), validate=(11, 200))
    assert not r.residual_ok and r.status == "inconsistent"


def test_fit_validation_catches_short_training():
    # two equations can be satisfied by a wrong combination; validation must notice
    target = rep_series("1,1,1,1,1,1,1,1,1,1", 200)
    r = fit(target, 4, train=(1, 2), validate=(3, 200))
    assert not r.residual_ok


def test_fit_errors():
    with pytest.raises(FitError, match="even rank"):
        fit(rep_series("1,1,1", 20))
    with pytest.raises(FitError, match="equations"):
        fit(rep_series("1,2,4,6", 100), 48, train=(1, 10))
    with pytest.raises(FitError):
        fit(lambda n: n, None, 2)


def test_fit_is_deterministic_and_serializes():
    a = fit(rep_series("1,1,2,3", 300), 24, train=(1, 60), validate=(61, 300))
    b = fit(rep_series("1,1,2,3", 300), 24, train=(1, 60), validate=(61, 300))
    assert a.coefficients == b.coefficients
    spec = parse_formula_spec(spec_to_json(a.to_formula_spec(), a.level))
    assert all(evaluate_formula(spec, n) == a(n) for n in range(1, 300))


def test_fit_records_ranges_and_callable_targets():
    tr = BasisTriple(TRIVIAL, TRIVIAL, 2, 2)
    r = fit(lambda n: 3 * basis_coefficient(tr, n), 4, 2, train=(1, 5), validate=(6, 50))
    assert r.residual_ok and r.train == (1, 5) and r.validated_range == (6, 50)
    assert dict((str(t), c) for t, c in r.coefficients) == {"(1, 1, 2)": 3, "(1, 1, 4)": 0}


@pytest.mark.parametrize("entry", catalog_entries(), ids=lambda e: e.label)
def test_fit_reproduces_catalog(entry):
    B = 600
    k = entry.spec.h + 1
    n_triples = len(enumerate_triples(entry.level, k))
    r = fit(rep_series(entry.form, B), entry.level, train=(1, max(10, 2 * n_triples)), validate=(1, B))
    assert r.residual_ok
    spec = r.to_formula_spec()
    assert all(evaluate_formula(spec, n) == evaluate_formula(entry.spec, n) for n in range(1, B + 1))


def synthetic_round_trip(rng: random.Random) -> bool:
    N = rng.choice([4, 8, 12, 16, 20, 24])
    k = rng.choice([2, 3, 4])
    triples = enumerate_triples(N, k)
    if not triples:
        return True
    coeffs = [Fraction(rng.randint(-20, 20), rng.randint(1, 9)) if rng.random() < 0.6 else Fraction(0)
              for _ in triples]
    target = lambda n: sum(c * basis_coefficient(t, n) for t, c in zip(triples, coeffs))  # noqa: E731
    B = 2 * len(triples) + 20
    r = fit(target, N, k, train=(1, B), validate=(1, B))
    return r.residual_ok and r.status == "ok" and r.values == coeffs


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10**6))
def test_synthetic_round_trip(seed):
    assert synthetic_round_trip(random.Random(seed))
