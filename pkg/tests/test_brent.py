import json
import random
from pathlib import Path

import pytest

from mm3sym import brent, group
from mm3sym.cyclotomic import Cyclotomic
from mm3sym.poly import BrentVar, ParamId, parse_polynomial
from mm3sym.tensors import Tensor, matrix_from_dict, tensor_from_factors
from mm3sym.catalog import matmul_tensor, get_family
from mm3sym.prover import enumerate_multisets

DATA = Path(__file__).parent / "data"


def test_generic_counts():
    rng = random.Random(101)
    for _ in range(10):
        r = rng.randint(1, 30)
        s = brent.generic_system(r)
        assert len(s.equations) == 729
        assert len(s.variables) == 27 * r
    assert len(brent.generic_system(23).variables) == 621
    with pytest.raises(brent.BrentError):
        brent.generic_system(0)


def test_generic_structure():
    s = brent.generic_system(1)
    eq = s.equations[0]
    assert eq.label == ((1, 1), (1, 1), (1, 1))
    assert eq.lhs == parse_polynomial("x1_11*y1_11*z1_11")
    assert eq.rhs == Cyclotomic.rational(1)
    ones = sum(1 for e in s.equations if e.rhs == Cyclotomic.rational(1))
    assert ones == 27  # one per entry of the target tensor


def test_trivial_solution():
    sol = brent.trivial_solution()
    assert len(sol) == 27 * 27
    s = brent.generic_system(27)
    ok, failing = brent.check_solution(s, sol)
    assert ok and not failing


def test_trivial_decomposition_orbit_structure():
    # the 27 rank-one terms of the trivial decomposition sum to the
    # target tensor and split into G-orbits of sizes 3, 18 and 6 --
    # exactly the classes carrying its g1, g3 and g9 coordinates
    terms = []
    total = Tensor()
    for i in (1, 2, 3):
        for j in (1, 2, 3):
            for k in (1, 2, 3):
                t = tensor_from_factors(
                    matrix_from_dict({(i, j): 1}),
                    matrix_from_dict({(j, k): 1}),
                    matrix_from_dict({(k, i): 1}),
                )
                terms.append(t)
                total = total + t
    assert total == matmul_tensor()
    orbits = []
    left = list(terms)
    while left:
        orb = set(group.orbit_of(left[0]))
        assert orb <= set(terms)
        left = [t for t in left if t not in orb]
        orbits.append(len(orb))
    assert sorted(orbits) == [3, 6, 18]


def test_all_zero_fails_exactly_target_support():
    s = brent.generic_system(23)
    ok, failing = brent.check_solution(s, {v: 0 for v in s.variables})
    assert not ok
    assert len(failing) == 27
    assert set(failing) == {eq.label for eq in s.equations
                            if eq.rhs == Cyclotomic.rational(1)}


def test_perturbed_trivial_solution():
    sol = brent.trivial_solution()
    sol[BrentVar(0, 1, 1, 1)] = 5  # flip one x-coordinate of term 1
    s = brent.generic_system(27)
    ok, failing = brent.check_solution(s, sol)
    assert not ok
    # term 1 is (i,j,k) = (1,1,1); its other factors vanish away from
    # the (1,1) entries, so exactly one equation breaks
    assert failing == [((1, 1), (1, 1), (1, 1))]


def test_missing_variable_error():
    s = brent.generic_system(1)
    with pytest.raises(brent.BrentError):
        brent.check_solution(s, {})


def test_invariant_counts():
    rng = random.Random(103)
    pool = enumerate_multisets(23)
    for multiset in rng.sample(pool, 10):
        s = brent.invariant_system(multiset)
        assert len(s.equations) == 12
        want = sum(get_family(fid).param_count for fid in multiset)
        assert len(s.variables) == want
    with pytest.raises(brent.BrentError):
        brent.invariant_system(())


def test_invariant_structure():
    s = brent.invariant_system((24, 9, 7))
    assert len(s.variables) == 5 + 2 + 1
    assert [str(v) for v in s.variables] == \
        ["a1", "b1", "c1", "d1", "f1", "a2", "b2", "a3"]
    rhs = [eq.rhs for eq in s.equations]
    one = Cyclotomic.rational(1)
    assert [r == one for r in rhs] == \
        [m in (1, 3, 9) for m in range(1, 13)]
    # the family-9 slot contributes 4*b^3 to the g9 equation
    g9 = s.equations[8].lhs
    assert g9.substitute({ParamId(1, l): 0 for l in "abcdf"}) == \
        parse_polynomial("4*b2^3")


def test_single_family_inconsistency_visible():
    # type {7} alone: the g1 and g2 equations force a = 1 and a = 0
    s = brent.invariant_system((7,))
    eq1, eq2 = s.equations[0], s.equations[1]
    assert eq1.lhs == eq2.lhs == parse_polynomial("a1")
    assert eq1.rhs == Cyclotomic.rational(1)
    assert eq2.rhs == Cyclotomic.rational(0)


def test_json_roundtrip():
    rng = random.Random(107)
    systems = [brent.generic_system(2),
               brent.invariant_system((9, 9, 5)),
               brent.invariant_system(rng.choice(enumerate_multisets(23)))]
    for s in systems:
        blob = brent.export(s, "json")
        assert brent.parse_system(blob) == s
        assert brent.export(brent.parse_system(blob), "json") == blob
    with pytest.raises(brent.BrentError):
        brent.parse_system("{}")
    with pytest.raises(brent.BrentError):
        brent.export(systems[0], "latex")


def test_text_export():
    s = brent.invariant_system((7,))
    lines = brent.export(s, "text").splitlines()
    assert len(lines) == 12
    assert lines[0] == "a1 = 1"
    assert lines[1] == "a1 = 0"


def test_m2_export_golden():
    s = brent.invariant_system((9, 5))
    golden = (DATA / "invariant_9_5.m2").read_text()
    assert brent.export(s, "m2") == golden


def test_exports_deterministic():
    for fmt in ("json", "text", "m2"):
        a = brent.export(brent.invariant_system((24, 9, 7)), fmt)
        b = brent.export(brent.invariant_system((24, 9, 7)), fmt)
        assert a == b
