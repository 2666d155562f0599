import random
from fractions import Fraction

import pytest

from corelat import affine
from corelat.affine import (
    AffineRoot,
    AffineWord,
    NotReducedError,
    PointOnWallError,
    alcove_reduce,
    apply,
    compute_w_b,
    inversion_sequence,
    is_reduced,
    size_i_lattice,
    size_i_word,
    size_lattice_total,
)
from corelat.rootsys import build_named


def rho_over_h(rs):
    return tuple(c / Fraction(rs.coxeter_number) for c in rs.rho_check_coords)


def random_reduced_word(rng, rs, max_len):
    letters = []
    prefix = affine.identity_element(rs)
    while len(letters) < max_len:
        i = rng.randrange(rs.rank + 1)
        entry = prefix.act_root(affine.affine_simple_root(rs, i))
        if not entry.is_positive():
            break
        letters.append(i)
        prefix = prefix.compose(affine.letter_element(rs, i))
    return tuple(letters)


# ---------------------------------------------------------------------------
# apply
# ---------------------------------------------------------------------------

def test_apply_s0_of_origin_is_highest_coroot():
    a2 = build_named("A2")
    assert apply(a2, (0,), (0, 0)) == (1, 1)


def test_apply_reference_word_a2():
    # s1 s0 s1 s2 s1 s0 sends the origin to the point with ambient
    # coordinates (0, 2, -2), i.e. simple-coroot coordinates (0, 2)
    a2 = build_named("A2")
    q = apply(a2, AffineWord(a2, (1, 0, 1, 2, 1, 0)), (0, 0))
    assert q == (0, 2)


def test_apply_reference_element_c2():
    # t_{-alphacheck_1} s_2 sends the origin to -alphacheck_1
    c2 = build_named("C2")
    el = affine.translation_element(c2, (-1, 0)).compose(affine.letter_element(c2, 2))
    assert apply(c2, el, (0, 0)) == (-1, 0)
    # semidirect decomposition: el = finite_part o t_translation
    rebuilt_v = tuple(sum(el.finite_part[i][j] * el.translation[j] for j in range(2))
                      for i in range(2))
    assert rebuilt_v == el.v and el.finite_part == affine.letter_element(c2, 2).m


def test_apply_element_matches_word():
    rng = random.Random(3)
    for name in ("A2", "C2", "G2", "B3"):
        rs = build_named(name)
        for _ in range(20):
            word = random_reduced_word(rng, rs, 8)
            el = affine.word_to_element(rs, word)
            pt = tuple(rng.randrange(-3, 4) for _ in range(rs.rank))
            assert apply(rs, word, pt) == el(pt)


# ---------------------------------------------------------------------------
# affine root action
# ---------------------------------------------------------------------------

def test_act_affine_root_identity():
    a2 = build_named("A2")
    ar = AffineRoot((1, 0), 2)
    assert affine.identity_element(a2).act_root(ar) == ar


def test_act_affine_root_translation():
    a2 = build_named("A2")
    t = affine.translation_element(a2, (1, 0))  # t_{alphacheck_1}
    assert t.act_root(AffineRoot((1, 0), 0)) == AffineRoot((1, 0), -2)


def test_act_affine_root_matches_inversion_tail():
    a2 = build_named("A2")
    word = (0, 1, 2, 1, 0, 1)
    seq = inversion_sequence(a2, word)
    prefix = affine.word_to_element(a2, word[:-1])
    assert prefix.act_root(affine.affine_simple_root(a2, word[-1])) == seq[-1]


# ---------------------------------------------------------------------------
# inversion sequences
# ---------------------------------------------------------------------------

def test_inversion_sequence_reference_a2():
    a2 = build_named("A2")
    seq = inversion_sequence(a2, (0, 1, 2, 1, 0, 1))
    assert seq == [
        AffineRoot((-1, -1), 1),
        AffineRoot((0, -1), 1),
        AffineRoot((-1, -1), 2),
        AffineRoot((-1, 0), 1),
        AffineRoot((-1, -1), 3),
        AffineRoot((0, -1), 2),
    ]


def test_inversion_sequence_reference_c2():
    # The composition convention is pinned by the sequence above; with it,
    # the five-entry rank-2 reference list arises from the word 0 1 2 0 1
    # (the element t_{-alphacheck_1} s_2 is spelled by its reverse).
    c2 = build_named("C2")
    seq = inversion_sequence(c2, (0, 1, 2, 0, 1))
    assert seq == [
        AffineRoot((-2, -1), 1),
        AffineRoot((-1, -1), 1),
        AffineRoot((-2, -1), 2),
        AffineRoot((0, -1), 1),
        AffineRoot((-1, -1), 2),
    ]
    el = affine.word_to_element(c2, (1, 0, 2, 1, 0))
    wanted = affine.translation_element(c2, (-1, 0)).compose(affine.letter_element(c2, 2))
    assert affine.word_to_element(c2, (0, 1, 2, 0, 1)).key() == wanted.inverse().key()


def test_inversion_sequence_empty():
    assert inversion_sequence(build_named("A2"), ()) == []


def test_inversion_sequence_not_reduced():
    a2 = build_named("A2")
    with pytest.raises(NotReducedError) as err:
        inversion_sequence(a2, (1, 1))
    assert err.value.position == 1


def test_braid_moves_preserve_inversion_multiset():
    rng = random.Random(11)
    for name in ("A2", "C2", "G2"):
        rs = build_named(name)
        ext = _extended_orders(rs)
        found = 0
        while found < 8:
            word = random_reduced_word(rng, rs, 9)
            for p in range(len(word) - 1):
                i, j = word[p], word[p + 1]
                m = ext.get((i, j))
                if m is None or p + m > len(word):
                    continue
                segment = word[p:p + m]
                if segment != tuple(i if k % 2 == 0 else j for k in range(m)):
                    continue
                flipped = word[:p] + tuple(j if k % 2 == 0 else i for k in range(m)) + word[p + m:]
                if affine.word_to_element(rs, word).key() != affine.word_to_element(rs, flipped).key():
                    continue
                lhs = sorted(inversion_sequence(rs, word))
                rhs = sorted(inversion_sequence(rs, flipped))
                assert lhs == rhs
                found += 1
                break


def _extended_orders(rs):
    """m(i, j) for the extended diagram, from products of Cartan pairings."""
    n = rs.rank
    a = rs.cartan_matrix
    hr = rs.highest_root_coeffs
    hrc = rs.highest_root_coroot_coords

    def pair(i, j):
        if i == j:
            return 2
        if i == 0 and j == 0:
            return 2
        if i == 0:
            return -sum(hr[k] * a[k][j - 1] for k in range(n))
        if j == 0:
            return -sum(a[i - 1][k] * hrc[k] for k in range(n))
        return a[i - 1][j - 1]

    orders = {}
    table = {0: 2, 1: 3, 2: 4, 3: 6}
    for i in range(n + 1):
        for j in range(n + 1):
            if i != j:
                prod = pair(i, j) * pair(j, i)
                if prod in table:
                    orders[(i, j)] = table[prod]
    return orders


# ---------------------------------------------------------------------------
# size statistics
# ---------------------------------------------------------------------------

def test_size_word_reference_a2():
    a2 = build_named("A2")
    word = (0, 1, 2, 1, 0, 1)
    assert [size_i_word(a2, word, i) for i in range(3)] == [4, 4, 2]


def test_size_word_reference_c2():
    c2 = build_named("C2")
    assert size_i_word(c2, (0, 1, 2, 0, 1), 1) == 6


def test_size_word_empty():
    a2 = build_named("A2")
    assert all(size_i_word(a2, (), i) == 0 for i in range(3))


def test_size_lattice_reference_values():
    a2 = build_named("A2")
    assert [size_i_lattice(a2, (0, 2), i) for i in range(3)] == [4, 4, 2]
    c2 = build_named("C2")
    assert size_i_lattice(c2, (-1, 0), 1) == 6
    for rs in (a2, c2):
        zero = (0,) * rs.rank
        assert all(size_i_lattice(rs, zero, i) == 0 for i in range(rs.rank + 1))


def test_size_total_is_sum_of_parts():
    rng = random.Random(5)
    for name in ("A3", "B2", "C3", "G2", "F4"):
        rs = build_named(name)
        for _ in range(25):
            q = tuple(rng.randrange(-4, 5) for _ in range(rs.rank))
            total = sum(size_i_lattice(rs, q, i) for i in range(rs.rank + 1))
            assert total == size_lattice_total(rs, q)


def test_sizer_word_equals_lattice():
    # word/lattice agreement on random reduced words
    rng = random.Random(17)
    for name in ("A2", "A3", "B2", "B3", "C2", "C3", "G2", "D4"):
        rs = build_named(name)
        for _ in range(60):
            word = random_reduced_word(rng, rs, 10)
            q = apply(rs, word, (0,) * rs.rank)
            word_sizes = affine.size_vector_word(rs, word[::-1])
            lattice = tuple(size_i_lattice(rs, q, i) for i in range(rs.rank + 1))
            assert word_sizes == lattice


def test_coset_equivariance():
    # w~ g fixes the image of the origin for finite g
    rng = random.Random(23)
    for name in ("A2", "C2", "G2"):
        rs = build_named(name)
        for _ in range(40):
            word = random_reduced_word(rng, rs, 8)
            el = affine.word_to_element(rs, word)
            g = affine.identity_element(rs)
            for _ in range(rng.randrange(6)):
                g = g.compose(affine.letter_element(rs, rng.randrange(1, rs.rank + 1)))
            assert el.compose(g)((0,) * rs.rank) == el((0,) * rs.rank)


# ---------------------------------------------------------------------------
# reducedness
# ---------------------------------------------------------------------------

def test_is_reduced_examples():
    a2 = build_named("A2")
    assert not is_reduced(a2, (1, 1))
    assert is_reduced(a2, (0, 1, 2, 1, 0, 1))
    assert is_reduced(a2, ())


# ---------------------------------------------------------------------------
# alcove reduction and w_b
# ---------------------------------------------------------------------------

def test_alcove_reduce_interior_fixed():
    for name in ("A2", "C2", "G2", "F4"):
        rs = build_named(name)
        u, y = alcove_reduce(rs, rho_over_h(rs))
        assert u.is_identity()
        assert y == rho_over_h(rs)


def test_alcove_reduce_a2_derived():
    a2 = build_named("A2")
    x = tuple(2 * c / Fraction(3) for c in a2.rho_check_coords)
    u, y = alcove_reduce(a2, x)
    assert u(x) == y
    # y strictly satisfies all n+1 alcove inequalities
    vals = [sum(a2.cartan_matrix[j][l] * y[l] for l in range(2)) for j in range(2)]
    assert all(v > 0 for v in vals)
    assert sum(c * v for c, v in zip(a2.highest_root_coeffs, vals)) < 1
    assert u.inverse()(y) == x


def test_alcove_reduce_projection():
    rng = random.Random(31)
    for name in ("A2", "B3", "G2"):
        rs = build_named(name)
        for _ in range(10):
            shift = tuple(rng.randrange(-3, 4) for _ in range(rs.rank))
            x = tuple(q + r for q, r in zip(shift, rho_over_h(rs)))
            u, y = alcove_reduce(rs, x)
            u2, y2 = alcove_reduce(rs, y)
            assert u2.is_identity() and y2 == y


def test_alcove_reduce_wall_error():
    a2 = build_named("A2")
    with pytest.raises(PointOnWallError):
        alcove_reduce(a2, (Fraction(0), Fraction(0)))


def test_compute_w_b():
    a2 = build_named("A2")
    assert compute_w_b(a2, 1).is_identity()
    w2 = compute_w_b(a2, 2)
    assert w2(rho_over_h(a2)) == tuple(2 * c for c in rho_over_h(a2))
    with pytest.raises(ValueError):
        compute_w_b(a2, 3)
    g2 = build_named("G2")
    w5 = compute_w_b(g2, 5)
    assert w5(rho_over_h(g2)) == tuple(5 * c for c in rho_over_h(g2))


def test_inversion_set_matches_word_sequence():
    rng = random.Random(41)
    for name in ("A2", "C2", "G2"):
        rs = build_named(name)
        for _ in range(25):
            word = random_reduced_word(rng, rs, 9)
            el = affine.word_to_element(rs, word)
            assert affine.inversion_set(el) == frozenset(inversion_sequence(rs, word))


def test_dominant_representative():
    for name in ("A2", "C2"):
        rs = build_named(name)
        assert affine.dominant_representative(rs, (0,) * rs.rank).is_identity()
        q = (1, 1)
        el = affine.dominant_representative(rs, q)
        assert el.inverse()((0,) * rs.rank) == q
        # image of an interior alcove point is strictly dominant
        x = el(tuple(c - qi for c, qi in zip(rho_over_h(rs), q)))
        vals = [sum(rs.cartan_matrix[j][l] * x[l] for l in range(rs.rank)) for j in range(rs.rank)]
        assert all(v > 0 for v in vals)


def test_wb_maximality_small():
    a2 = build_named("A2")
    rep = affine.check_wb_maximality(a2, 4)
    assert rep.ok and rep.n_elements == 5
    c2 = build_named("C2")
    rep = affine.check_wb_maximality(c2, 5)
    assert rep.ok and rep.n_elements == 6
    rep = affine.check_wb_maximality(a2, 1)
    assert rep.ok and rep.n_elements == 1


# ---------------------------------------------------------------------------
# well-definedness of size over all reduced words (small scale here;
# the acceptance suite runs the full length-8 sweep)
# ---------------------------------------------------------------------------

def test_size_welldef_small():
    for name in ("A2", "C2", "G2"):
        rs = build_named(name)
        by_element = {}

        def dfs(el, letters):
            vec = affine.size_vector_word(rs, letters)
            key = el.key()
            if key in by_element:
                assert by_element[key][0] == vec, (name, letters)
            else:
                by_element[key] = (vec, el)
            if len(letters) == 6:
                return
            for i in range(rs.rank + 1):
                if el.act_root(affine.affine_simple_root(rs, i)).is_positive():
                    dfs(el.compose(affine.letter_element(rs, i)), letters + (i,))

        dfs(affine.identity_element(rs), ())
        for key, (vec, el) in by_element.items():
            for i in range(1, rs.rank + 1):
                other = by_element.get(affine.letter_element(rs, i).compose(el).key())
                if other is not None:
                    assert other[0] == vec


def test_element_serialization():
    a2 = build_named("A2")
    el = affine.word_to_element(a2, (0, 1))
    doc = el.to_json_dict()
    assert set(doc) == {"matrix", "translation"}
    w = AffineWord.parse(a2, "0 1 2 1 0 1")
    assert str(w) == "0 1 2 1 0 1"
