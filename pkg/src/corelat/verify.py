"""Verification suites: each function checks one family of identities by
independent computation and returns a list of counterexample records
(empty = pass).  The CLI ``verify`` subcommand and the acceptance tests are
thin wrappers around these."""

from __future__ import annotations

import itertools
import random
from fractions import Fraction
from math import comb, gcd

from . import affine, cores, ehrhart, models, rootsys, sommers
from .rootsys import CartanType, build, build_named
from .sommers import DEFAULT_CAP

#: (type, b values) used by the region-based suites
DEFAULT_MATRIX = (
    ("A2", (2, 4, 5)), ("A3", (3, 5, 7)), ("B2", (3, 5, 7)), ("B3", (5, 7, 11)),
    ("C2", (3, 5, 7)), ("C3", (5, 7, 11)), ("D4", (5, 7, 11)), ("G2", (5, 7, 11)),
    ("F4", (5, 7, 11)),
)

ARM_PAIRS = ((3, 4), (3, 5), (4, 5), (5, 6), (4, 7))

ALL_FAMILY_NAMES = (
    [f"A{n}" for n in range(1, 9)] + [f"B{n}" for n in range(2, 9)]
    + [f"C{n}" for n in range(2, 9)] + [f"D{n}" for n in range(4, 9)]
    + ["E6", "E7", "E8", "F4", "G2"]
)

WELLDEF_TYPES = ("A1", "A2", "B2", "C2", "G2", "A3", "B3", "C3")

MODEL_POINT_GRIDS = (
    ("B2", 16), ("B3", 5), ("C2", 16), ("C3", 5), ("D4", 3), ("G2", 16),
)


def check_arm(pairs=ARM_PAIRS, cap: int = DEFAULT_CAP) -> list:
    """Count and mean of simultaneous (a, b)-cores via the region machinery."""
    failures = []
    for a, b in pairs:
        rs = build(CartanType("A", a - 1))
        coreset = sommers.enumerate_cores(rs, b, cap=cap)
        expected_count = comb(a + b, b) // (a + b)
        expected_mean = Fraction((a - 1) * (b - 1) * (a + b + 1), 24)
        if len(coreset) != expected_count or coreset.mean_size != expected_mean:
            failures.append({"pair": [a, b], "count": len(coreset),
                             "mean": str(coreset.mean_size)})
    return failures


def check_main(matrix=DEFAULT_MATRIX, cap: int = DEFAULT_CAP) -> list:
    """Three-way agreement of the expected size for every (type, b)."""
    failures = []
    for t, bs in matrix:
        rs = build_named(t)
        for b in bs:
            try:
                ehrhart.expected_size(rs, b, cap=cap)
            except (AssertionError, sommers.FeasibilityError) as exc:
                failures.append({"type": t, "b": b, "error": str(exc)})
    return failures


def check_max(matrix=DEFAULT_MATRIX, cap: int = DEFAULT_CAP) -> list:
    failures = []
    for t, bs in matrix:
        rs = build_named(t)
        for b in bs:
            try:
                sommers.max_size(rs, b, coreset=sommers.enumerate_cores(rs, b, cap=cap))
            except (AssertionError, sommers.FeasibilityError) as exc:
                failures.append({"type": t, "b": b, "error": str(exc)})
    return failures


def check_transfer(matrix=DEFAULT_MATRIX, cap: int = DEFAULT_CAP) -> list:
    """Multiset equality of region sizes and dilated-alcove shifted sizes."""
    failures = []
    for t, bs in matrix:
        rs = build_named(t)
        for b in bs:
            coreset = sommers.enumerate_cores(rs, b, cap=cap)
            alcove = sommers.enumerate_alcove(rs, b, "coroot", cap=cap)
            lhs = sorted(coreset.sizes)
            rhs = sorted(sommers.size_b(rs, b, q) for q in alcove)
            if lhs != rhs:
                failures.append({"type": t, "b": b,
                                 "sizes": [str(x) for x in lhs],
                                 "shifted_sizes": [str(x) for x in rhs]})
    return failures


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


def check_sizer(count: int = 1000, types=None, max_len: int = 10, seed: int = 7) -> list:
    """Word-side size equals lattice-side size on random reduced words."""
    rng = random.Random(seed)
    failures = []
    types = types or [t for t, _ in DEFAULT_MATRIX]
    per_type = -(-count // len(types))  # ceil: at least ``count`` words total
    for t in types:
        rs = build_named(t)
        for _ in range(per_type):
            letters = random_reduced_word(rng, rs, max_len)
            q = affine.apply(rs, letters, (0,) * rs.rank)
            word_sizes = affine.size_vector_word(rs, letters[::-1])
            lattice = tuple(affine.size_i_lattice(rs, q, i) for i in range(rs.rank + 1))
            if word_sizes != lattice:
                failures.append({"type": t, "word": list(letters)})
    return failures


def check_welldef(types=WELLDEF_TYPES, max_len: int = 8) -> list:
    """All reduced words of one element give one size vector, invariant under
    appending a finite letter on the left of the word (right-multiplication of
    the represented coset element)."""
    failures = []
    for t in types:
        rs = build_named(t)
        prefactors = [1] + [int(1 / d) for d in rs.simple_d]
        by_element: dict = {}

        def dfs(el, letters, totals):
            vec = tuple(p * s for p, s in zip(prefactors, totals))
            key = el.key()
            prior = by_element.get(key)
            if prior is None:
                by_element[key] = (vec, el)
            elif prior[0] != vec:
                failures.append({"type": t, "word": list(letters),
                                 "sizes": [str(x) for x in vec],
                                 "other": [str(x) for x in prior[0]]})
            if len(letters) == max_len:
                return
            for i in range(rs.rank + 1):
                entry = el.act_root(affine.affine_simple_root(rs, i))
                if entry.is_positive():
                    new_totals = list(totals)
                    new_totals[i] += entry.k
                    dfs(el.compose(affine.letter_element(rs, i)), letters + (i,), new_totals)

        dfs(affine.identity_element(rs), (), [0] * (rs.rank + 1))
        for key, (vec, el) in by_element.items():
            for i in range(1, rs.rank + 1):
                other = by_element.get(affine.letter_element(rs, i).compose(el).key())
                if other is not None and other[0] != vec:
                    failures.append({"type": t, "element": str(key), "finite_letter": i})
    return failures


def check_ip_content(moduli=(3, 4, 5), max_boxes: int = 60) -> list:
    """Content-class counts equal the lattice statistics, and toggling is
    equivariant with the simple reflections, over all small cores."""
    failures = []
    for a in moduli:
        rs = build(CartanType("A", a - 1))
        for parts in cores.all_cores(a, max_boxes):
            ambient = cores.to_coroot(parts, a)
            k = models.type_a_coords_from_ambient(ambient)
            counts = cores.content_counts(parts, a)
            lattice = tuple(affine.size_i_lattice(rs, k, i) for i in range(a))
            if tuple(map(Fraction, counts)) != lattice:
                failures.append({"a": a, "partition": list(parts)})
                continue
            for i in range(a):
                toggled = cores.toggle_action(parts, a, i)
                q2 = affine.apply(rs, (i,), k)
                if cores.to_coroot(toggled, a) != models.type_a_ambient_from_coords(q2):
                    failures.append({"a": a, "partition": list(parts), "letter": i})
    return failures


def model_test_points(t: CartanType, radius: int, minimum: int = 1000, seed: int = 5):
    """At least ``minimum`` distinct lattice points: the full grid of the
    given radius when small enough, else a random sample of it."""
    pts = list(itertools.product(range(-radius, radius + 1), repeat=t.rank))
    if len(pts) > 2 * minimum:
        pts = random.Random(seed).sample(pts, minimum)
    assert len(pts) >= minimum
    return pts


def check_models(grids=MODEL_POINT_GRIDS, minimum: int = 1000) -> list:
    """Embedding equivariance and the size correspondence per model type."""
    failures = []
    for name, radius in grids:
        t = CartanType.parse(name)
        rs = build(t)
        for k in model_test_points(t, radius, minimum):
            emb = models.embed(t, k)
            sizes = models.model_size_vector(t, k)
            for i in range(t.rank + 1):
                moved = models.embed(t, affine.apply(rs, (i,), k)).image
                if moved != models.act_model_generator(t, i, emb.image):
                    failures.append({"type": name, "point": list(k), "generator": i})
                if sizes[i] != affine.size_i_lattice(rs, k, i):
                    failures.append({"type": name, "point": list(k), "size_index": i})
            if models.model_size_total(t, k) != affine.size_lattice_total(rs, k):
                failures.append({"type": name, "point": list(k), "total": True})
    return failures


def check_haiman(matrix=None, cap: int = DEFAULT_CAP) -> list:
    """Point counts of dilated alcoves against the product formula, in both
    the coroot and the coweight lattice."""
    failures = []
    matrix = list(matrix or DEFAULT_MATRIX) + [("E6", (5,)), ("E7", (5,)), ("E8", (7,))]
    for t, bs in matrix:
        rs = build_named(t)
        for b in bs:
            predicted = sommers.haiman_count(rs, b)
            coroot = len(sommers.enumerate_alcove(rs, b, "coroot", cap=cap))
            coweight = len(sommers.enumerate_alcove(rs, b, "coweight", cap=cap))
            if coroot != predicted or coweight != rs.index_of_connection * predicted:
                failures.append({"type": t, "b": b, "count": coroot,
                                 "coweight_count": coweight, "predicted": predicted})
    return failures


def check_strange(names=ALL_FAMILY_NAMES) -> list:
    failures = []
    for name in names:
        rs = build_named(name)
        lhs = rootsys.norm2(rs, rs.rho_check_coords)
        rhs = Fraction(rs.ratio_r * rs.dual_coxeter_number
                       * rs.rank * (rs.coxeter_number + 1), 12)
        if lhs != rhs:
            failures.append({"type": name, "lhs": str(lhs), "rhs": str(rhs)})
    return failures


def check_typea(moduli=(2, 3, 4), order: int = 20) -> list:
    failures = []
    for a in moduli:
        try:
            ehrhart.typea_series_check(a, order)
        except (AssertionError, ehrhart.SeriesMismatchError) as exc:
            failures.append({"a": a, "error": str(exc)})
    return failures


def check_fg_poly(cap: int = DEFAULT_CAP) -> list:
    """F4/G2 quasipolynomial fits must match the closed form implied by the
    count and expectation formulas, on every residue coprime to h."""
    failures = []
    for name in ("G2", "F4"):
        rs = build_named(name)
        predicted = ehrhart.predicted_enumerator_polynomial(rs)
        for residue in range(rs.period_c):
            if gcd(residue, rs.coxeter_number) != 1:
                continue
            coeffs = ehrhart.interpolate(rs, residue, cap=cap)
            if coeffs != predicted:
                failures.append({"type": name, "residue": residue,
                                 "fit": [str(c) for c in coeffs],
                                 "predicted": [str(c) for c in predicted]})
    return failures


def check_conjecture(matrix=(("A2", (2, 4)), ("C2", (3, 5)), ("G2", (5, 7))),
                     cap: int = DEFAULT_CAP) -> list:
    failures = []
    for t, bs in matrix:
        rs = build_named(t)
        for b in bs:
            report = affine.check_wb_maximality(rs, b, cap=cap)
            if not report.ok:
                failures.append({"type": t, "b": b,
                                 "counterexamples": [str(c) for c in report.counterexamples]})
    return failures
