from fractions import Fraction

import pytest

from corelat import linalg, rootsys
from corelat.rootsys import CartanType, CartanTypeError, build_named

# (h, dual Coxeter, exponents, marks, index of connection, r)
REFERENCE = {
    "A1": (2, 2, (1,), (1,), 2, 1),
    "A2": (3, 3, (1, 2), (1, 1), 3, 1),
    "A5": (6, 6, (1, 2, 3, 4, 5), (1,) * 5, 6, 1),
    "B2": (4, 3, (1, 3), (1, 2), 2, 2),
    "B3": (6, 4, (1, 3, 5), (1, 2, 2), 2, 2),
    "B8": (16, 9, tuple(range(1, 16, 2)), (1,) + (2,) * 7, 2, 2),
    "C2": (4, 3, (1, 3), (2, 1), 2, 2),
    "C3": (6, 5, (1, 3, 5), (2, 2, 1), 2, 2),
    "C8": (16, 15, tuple(range(1, 16, 2)), (2,) * 7 + (1,), 2, 2),
    "D4": (6, 6, (1, 3, 3, 5), (1, 2, 1, 1), 4, 1),
    "D8": (14, 14, (1, 3, 5, 7, 7, 9, 11, 13), (1, 2, 2, 2, 2, 2, 1, 1), 4, 1),
    "E6": (12, 12, (1, 4, 5, 7, 8, 11), (1, 2, 2, 3, 2, 1), 3, 1),
    "E7": (18, 18, (1, 5, 7, 9, 11, 13, 17), (2, 2, 3, 4, 3, 2, 1), 2, 1),
    "E8": (30, 30, (1, 7, 11, 13, 17, 19, 23, 29), (2, 3, 4, 6, 5, 4, 3, 2), 1, 1),
    "F4": (12, 9, (1, 5, 7, 11), (2, 3, 4, 2), 1, 2),
    "G2": (6, 4, (1, 5), (3, 2), 1, 3),
}

ALL_IMPLEMENTED = (
    [f"A{n}" for n in range(1, 9)] + [f"B{n}" for n in range(2, 9)]
    + [f"C{n}" for n in range(2, 9)] + [f"D{n}" for n in range(4, 9)]
    + ["E6", "E7", "E8", "F4", "G2"]
)


@pytest.mark.parametrize("name", sorted(REFERENCE))
def test_reference_table(name):
    h, g, exps, marks, f, r = REFERENCE[name]
    rs = build_named(name)
    assert rs.coxeter_number == h
    assert rs.dual_coxeter_number == g
    assert rs.exponents == tuple(sorted(exps))
    assert rs.highest_root_coeffs == marks
    assert rs.index_of_connection == f
    assert rs.ratio_r == r


def test_spec_build_examples():
    a2 = build_named("A2")
    assert (a2.coxeter_number, a2.dual_coxeter_number) == (3, 3)
    assert a2.exponents == (1, 2) and a2.highest_root_coeffs == (1, 1)
    assert (a2.index_of_connection, a2.ratio_r) == (3, 1)
    g2 = build_named("G2")
    assert (g2.coxeter_number, g2.dual_coxeter_number) == (6, 4)
    assert g2.exponents == (1, 5) and g2.highest_root_coeffs == (3, 2)
    assert (g2.index_of_connection, g2.ratio_r) == (1, 3)
    c3 = build_named("C3")
    assert (c3.coxeter_number, c3.dual_coxeter_number) == (6, 5)
    assert c3.exponents == (1, 3, 5) and c3.highest_root_coeffs == (2, 2, 1)
    assert (c3.index_of_connection, c3.ratio_r) == (2, 2)


@pytest.mark.parametrize("bad", ["A0", "B1", "C1", "D3", "E5", "E9", "F3", "G4", "H2"])
def test_rank_constraints(bad):
    with pytest.raises(CartanTypeError):
        CartanType.parse(bad)


def test_parse_and_str():
    assert str(CartanType.parse(" c3 ")) == "C3"
    with pytest.raises(CartanTypeError):
        CartanType.parse("Q2")


@pytest.mark.parametrize("name", ALL_IMPLEMENTED)
def test_structure_invariants(name):
    rs = build_named(name)
    n, h = rs.rank, rs.coxeter_number
    assert len(rs.positive_roots) == n * h // 2
    assert h == 1 + sum(rs.highest_root_coeffs)
    by_height = {}
    for root in rs.positive_roots:
        by_height.setdefault(root.height, []).append(root)
    assert len(by_height[1]) == n
    assert len(by_height[h - 1]) == 1
    # every root length is 2 or 2/r
    for root in rs.positive_roots:
        norm = rootsys.norm2(rs, _coroot_coords(rs, root))
        assert root.is_long == (rootsys.norm2(rs, _root_vec(rs, root)) == 2)


def _root_vec(rs, root):
    # root in simple-coroot coordinates: alpha_i = d_i alphacheck_i
    return tuple(c * d for c, d in zip(root.coeffs, rs.simple_d))


def _coroot_coords(rs, root):
    return root.coeffs


@pytest.mark.parametrize("name", ALL_IMPLEMENTED)
def test_strange_formula(name):
    rs = build_named(name)
    lhs = rootsys.norm2(rs, rs.rho_check_coords)
    rhs = Fraction(rs.ratio_r * rs.dual_coxeter_number * rs.rank * (rs.coxeter_number + 1), 12)
    assert lhs == rhs


def test_norm2_examples():
    a2 = build_named("A2")
    assert rootsys.norm2(a2, a2.rho_check_coords) == 2
    g2 = build_named("G2")
    assert rootsys.norm2(g2, g2.rho_check_coords) == 14
    assert rootsys.norm2(a2, (0, 0)) == 0


def test_roots_of_height():
    a2 = build_named("A2")
    assert [r.coeffs for r in rootsys.roots_of_height(a2, 1)] == [(0, 1), (1, 0)] or \
        sorted(r.coeffs for r in rootsys.roots_of_height(a2, 1)) == [(0, 1), (1, 0)]
    assert [r.coeffs for r in rootsys.roots_of_height(a2, 2)] == [(1, 1)]
    g2 = build_named("G2")
    assert [r.coeffs for r in rootsys.roots_of_height(g2, 5)] == [(3, 2)]
    assert rootsys.roots_of_height(a2, 99) == []
    # independent oracle for G2: the full positive system, hand-listed
    assert sorted(r.coeffs for r in build_named("G2").positive_roots) == \
        [(0, 1), (1, 0), (1, 1), (2, 1), (3, 1), (3, 2)]


def test_pairing_examples():
    a2 = build_named("A2")
    alpha1, alpha2 = rootsys.roots_of_height(a2, 1)[1], rootsys.roots_of_height(a2, 1)[0]
    assert alpha1.coeffs == (1, 0) and alpha2.coeffs == (0, 1)
    assert rootsys.pairing(a2, (1, 0), alpha1) == 2
    assert rootsys.pairing(a2, (1, 0), alpha2) == -1
    c2 = build_named("C2")
    highest = rootsys.roots_of_height(c2, c2.coxeter_number - 1)[0]
    # cross-check against the ambient model: highest root sqrt(2) e_1,
    # alphacheck_2 = sqrt(2) e_2, so the pairing vanishes
    assert rootsys.pairing(c2, (0, 1), highest) == 0
    with pytest.raises(ValueError):
        rootsys.pairing(a2, (1, 0, 0), alpha1)


def test_reflection_closure_idempotent():
    for name in ("A3", "B3", "C3", "G2", "F4"):
        rs = build_named(name)
        coeffs = {r.coeffs for r in rs.positive_roots}
        n = rs.rank
        a = rs.cartan_matrix
        # re-close: adding a simple root to any root stays inside the found set
        for root in rs.positive_roots:
            for j in range(n):
                pair = sum(root.coeffs[i] * a[i][j] for i in range(n))
                down, p = list(root.coeffs), 0
                while True:
                    down[j] -= 1
                    if tuple(down) in coeffs:
                        p += 1
                    else:
                        break
                if p - pair > 0:
                    up = list(root.coeffs)
                    up[j] += 1
                    assert tuple(up) in coeffs


@pytest.mark.parametrize("name", ALL_IMPLEMENTED)
def test_dual_system_check(name):
    """Building from the transposed Cartan matrix, the dual's comark sum + 1
    equals the stored dual Coxeter number."""
    rs = build_named(name)
    at = linalg.freeze(zip(*rs.cartan_matrix))
    d = rootsys._symmetrizer(at)
    coeffs = rootsys._positive_roots_by_closure(at, rs.rank)
    highest = coeffs[-1]
    assert 1 + sum(c * di for c, di in zip(highest, d)) == rs.dual_coxeter_number


def test_coweights_dual_to_simple_roots():
    for name in ("A2", "B3", "C3", "G2", "F4"):
        rs = build_named(name)
        simples = rootsys.roots_of_height(rs, 1)
        for i in range(1, rs.rank + 1):
            w = rs.coweight_coords[i - 1]
            for root in simples:
                expected = 1 if root.coeffs[i - 1] == 1 else 0
                assert sum(wk * pk for wk, pk in zip(w, root.pair_vec)) == expected


def test_json_roundtrip():
    import json

    doc = json.loads(rootsys.to_json(build_named("G2")))
    assert doc["coxeter_number"] == 6
    assert doc["highest_root"] == [3, 2]
    assert doc["rho_check"] == ["3", "5"]


def test_weyl_group_orders():
    from math import factorial

    closed = {
        "A": lambda n: factorial(n + 1),
        "B": lambda n: 2 ** n * factorial(n),
        "C": lambda n: 2 ** n * factorial(n),
        "D": lambda n: 2 ** (n - 1) * factorial(n),
    }
    exceptional = {"E6": 51840, "E7": 2903040, "E8": 696729600, "F4": 1152, "G2": 12}
    for name in ALL_IMPLEMENTED:
        rs = build_named(name)
        expected = exceptional.get(name) or closed[name[0]](rs.rank)
        assert rs.weyl_order == expected
