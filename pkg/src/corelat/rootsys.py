"""Irreducible crystallographic root systems built from Cartan matrices.

Conventions used throughout the package:

* The Cartan matrix is ``A[i][j] = <alpha_i, alphacheck_j>`` (row indexed
  by a simple root, column by a simple coroot).
* The inner product on the ambient space is normalized so that the highest
  root has squared length 2; ``r`` denotes the squared-length ratio of a
  long root to a short root.
* Lattice points are stored as integer coordinate vectors in the
  simple-coroot basis.  All inner products are evaluated through the
  rational Gram matrix ``gram_coroot[i][j] = <alphacheck_i, alphacheck_j>``,
  so no irrational ambient coordinates ever appear.
* Positive roots are generated by reflection closure from the simple roots
  and sorted by (height, coefficient vector).
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial, lcm, prod
from typing import NamedTuple

from . import linalg

#: allowed ranks per family: (min, max); None means unbounded above
CARTAN_BOUNDS = {
    "A": (1, None),
    "B": (2, None),
    "C": (2, None),
    "D": (4, None),
    "E": (6, 8),
    "F": (4, 4),
    "G": (2, 2),
}


class CartanTypeError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class CartanType:
    family: str
    rank: int

    def __post_init__(self):
        bounds = CARTAN_BOUNDS.get(self.family)
        if bounds is None:
            raise CartanTypeError(f"unknown family {self.family!r}; expected one of A-G")
        lo, hi = bounds
        if self.rank < lo:
            raise CartanTypeError(f"{self.family}{self.rank}: family {self.family} requires rank >= {lo}")
        if hi is not None and self.rank > hi:
            raise CartanTypeError(f"{self.family}{self.rank}: family {self.family} requires rank <= {hi}")

    @classmethod
    def parse(cls, text: str) -> "CartanType":
        m = re.fullmatch(r"([A-Ga-g])\s*(\d+)", text.strip())
        if not m:
            raise CartanTypeError(f"cannot parse Cartan type from {text!r} (expected e.g. 'C3')")
        return cls(m.group(1).upper(), int(m.group(2)))

    def __str__(self):
        return f"{self.family}{self.rank}"


class Root(NamedTuple):
    """A positive root, as integer coefficients over the simple roots.

    ``pair_vec[i] = <alphacheck_i, root>``; pairing a coroot-lattice point
    ``q`` (integer simple-coroot coordinates) with this root is the integer
    dot product ``q . pair_vec``.
    """

    coeffs: tuple[int, ...]
    height: int
    is_long: bool
    pair_vec: tuple[int, ...]


def _dynkin_edges(t: CartanType) -> list[tuple[int, int]]:
    n = t.rank
    if t.family == "D":
        return [(i, i + 1) for i in range(n - 2)] + [(n - 3, n - 1)]
    if t.family == "E":
        return [(0, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7)][: n - 2] + [(1, 3)]
    return [(i, i + 1) for i in range(n - 1)]


def cartan_matrix(t: CartanType) -> tuple[tuple[int, ...], ...]:
    """Cartan matrix with A[i][j] = <alpha_i, alphacheck_j> (Bourbaki numbering)."""
    n = t.rank
    a = [[0] * n for _ in range(n)]
    for i in range(n):
        a[i][i] = 2
    for i, j in _dynkin_edges(t):
        a[i][j] = a[j][i] = -1
    if t.family == "B":
        a[n - 2][n - 1] = -2  # alpha_{n-1} long, alpha_n short
    elif t.family == "C":
        a[n - 1][n - 2] = -2  # alpha_n long, the rest short
    elif t.family == "F":
        a[1][2] = -2  # alpha_1, alpha_2 long; alpha_3, alpha_4 short
    elif t.family == "G":
        a[1][0] = -3  # alpha_1 short, alpha_2 long
    return linalg.freeze(a)


def _symmetrizer(a) -> tuple[Fraction, ...]:
    """d_i = |alpha_i|^2 / 2, normalized so long roots have d = 1.

    Solves A[i][j] d_j = A[j][i] d_i over the (connected) Dynkin graph.
    """
    n = len(a)
    d: list[Fraction | None] = [None] * n
    d[0] = Fraction(1)
    stack = [0]
    while stack:
        i = stack.pop()
        for j in range(n):
            if i != j and a[i][j] and d[j] is None:
                d[j] = d[i] * a[j][i] / a[i][j]
                stack.append(j)
    if any(x is None for x in d):
        raise CartanTypeError("Dynkin diagram is not connected")
    top = max(d)
    return tuple(x / top for x in d)


def _positive_roots_by_closure(a, n):
    """Close the simple roots under 'add a simple root when the result is a root'.

    alpha + alpha_j is a root iff p - <alpha, alphacheck_j> > 0, where p is
    the number of steps the root string through alpha extends in the
    -alpha_j direction.  Building layer by layer makes p computable from
    the roots already found.
    """
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    found = set(simple)
    layers = [list(simple)]
    while layers[-1]:
        nxt = []
        for alpha in layers[-1]:
            for j in range(n):
                pairing = sum(alpha[i] * a[i][j] for i in range(n))
                p = 0
                down = list(alpha)
                while True:
                    down[j] -= 1
                    if tuple(down) in found:
                        p += 1
                    else:
                        break
                if p - pairing > 0:
                    up = list(alpha)
                    up[j] += 1
                    cand = tuple(up)
                    if cand not in found:
                        found.add(cand)
                        nxt.append(cand)
        layers.append(nxt)
    return sorted(found, key=lambda c: (sum(c), c))


@dataclass(frozen=True)
class RootSystemData:
    """An irreducible root system with every invariant the package needs."""

    cartan_type: CartanType
    cartan_matrix: tuple[tuple[int, ...], ...]
    gram_coroot: tuple[tuple[Fraction, ...], ...]
    positive_roots: tuple[Root, ...]
    highest_root_coeffs: tuple[int, ...]
    coxeter_number: int
    dual_coxeter_number: int
    exponents: tuple[int, ...]
    index_of_connection: int
    ratio_r: int
    period_c: int
    rho_check_coords: tuple[Fraction, ...]
    coweight_coords: tuple[tuple[Fraction, ...], ...]
    # derived helpers
    simple_d: tuple[Fraction, ...]
    cartan_inverse: tuple[tuple[Fraction, ...], ...]
    highest_root_coroot_coords: tuple[int, ...]
    weyl_order: int

    @property
    def rank(self) -> int:
        return self.cartan_type.rank

    def __repr__(self):
        return f"RootSystemData({self.cartan_type})"


@lru_cache(maxsize=None)
def build(t: CartanType) -> RootSystemData:
    """Construct the root system of type ``t`` with all numerical invariants."""
    n = t.rank
    a = cartan_matrix(t)
    d = _symmetrizer(a)
    gram = linalg.freeze(
        tuple(Fraction(a[i][j]) / d[i] for j in range(n)) for i in range(n)
    )
    for i in range(n):
        for j in range(n):
            assert gram[i][j] == gram[j][i], "coroot Gram matrix must be symmetric"

    root_gram = [[Fraction(a[i][j]) * d[j] for j in range(n)] for i in range(n)]

    def root_norm2(coeffs):
        return sum(
            coeffs[i] * coeffs[j] * root_gram[i][j]
            for i in range(n) for j in range(n)
            if coeffs[i] and coeffs[j]
        )

    coeff_list = _positive_roots_by_closure(a, n)
    roots = []
    for coeffs in coeff_list:
        norm2_val = root_norm2(coeffs)
        pair_vec = tuple(sum(coeffs[j] * a[j][i] for j in range(n)) for i in range(n))
        roots.append(Root(coeffs, sum(coeffs), norm2_val == 2, pair_vec))

    h = 1 + roots[-1].height
    if len(roots) != n * h // 2:
        raise AssertionError(f"{t}: {len(roots)} positive roots, expected n*h/2 = {n * h // 2}")
    top = [r for r in roots if r.height == h - 1]
    if len(top) != 1:
        raise AssertionError(f"{t}: highest root is not unique")
    highest = top[0]
    if root_norm2(highest.coeffs) != 2:
        raise AssertionError(f"{t}: highest root is not normalized to length^2 = 2")

    r = int(1 / min(d))
    if r == 1:
        dual_cox = h
    else:
        dual_cox = 1 + max(root.height for root in roots if not root.is_long)

    # exponents from the height staircase: conjugate the partition
    # (|Phi_1| >= |Phi_2| >= ...).
    mults = [0] * h
    for root in roots:
        mults[root.height] += 1
    exponents = tuple(sorted(sum(1 for i in range(1, h) if mults[i] >= j)
                             for j in range(1, mults[1] + 1)))
    assert len(exponents) == n

    f = int(linalg.det(a))
    a_inv = linalg.inverse(a)
    coweights = tuple(tuple(a_inv[k][i] for k in range(n)) for i in range(n))
    rho = tuple(sum(a_inv[k][i] for i in range(n)) for k in range(n))
    hr_coroot = tuple(int(highest.coeffs[i] * d[i]) for i in range(n))
    marks = highest.coeffs

    return RootSystemData(
        cartan_type=t,
        cartan_matrix=a,
        gram_coroot=gram,
        positive_roots=tuple(roots),
        highest_root_coeffs=marks,
        coxeter_number=h,
        dual_coxeter_number=dual_cox,
        exponents=exponents,
        index_of_connection=f,
        ratio_r=r,
        period_c=lcm(*marks),
        rho_check_coords=rho,
        coweight_coords=coweights,
        simple_d=d,
        cartan_inverse=a_inv,
        highest_root_coroot_coords=hr_coroot,
        weyl_order=factorial(n) * prod(marks) * f,
    )


def build_named(name: str) -> RootSystemData:
    return build(CartanType.parse(name))


def roots_of_height(rs: RootSystemData, i: int) -> list[Root]:
    """Positive roots of height exactly ``i`` (empty list when out of range)."""
    return [r for r in rs.positive_roots if r.height == i]


def pairing(rs: RootSystemData, q, root) -> int:
    """<q, root> for q in the coroot lattice: always an exact integer."""
    vec = root.pair_vec if isinstance(root, Root) else _pair_vec(rs, root)
    if len(q) != len(vec):
        raise ValueError(f"point has dimension {len(q)}, expected {len(vec)}")
    return sum(k * p for k, p in zip(q, vec) if k)


def _pair_vec(rs: RootSystemData, coeffs) -> tuple[int, ...]:
    n = rs.rank
    if len(coeffs) != n:
        raise ValueError(f"root vector has dimension {len(coeffs)}, expected {n}")
    a = rs.cartan_matrix
    return tuple(sum(coeffs[j] * a[j][i] for j in range(n)) for i in range(n))


def inner(rs: RootSystemData, x, y) -> Fraction:
    """Inner product of two vectors given in simple-coroot coordinates."""
    g = rs.gram_coroot
    n = rs.rank
    return sum(
        x[i] * y[j] * g[i][j]
        for i in range(n) for j in range(n)
        if x[i] and y[j]
    ) or Fraction(0)

def norm2(rs: RootSystemData, v) -> Fraction:
    """Squared length v^T G v of a rational vector in simple-coroot coordinates."""
    return inner(rs, v, v)


def coweight_pairing(rs: RootSystemData, i: int, x) -> Fraction:
    """<omegacheck_i, x> for x in simple-coroot coordinates; omegacheck_0 = 0."""
    if i == 0:
        return Fraction(0)
    return x[i - 1] / rs.simple_d[i - 1]


def rho_pairing(rs: RootSystemData, x) -> Fraction:
    """<rhocheck, x> = sum_i x_i / d_i."""
    return sum((xi / di for xi, di in zip(x, rs.simple_d) if xi), Fraction(0))


def to_json_dict(rs: RootSystemData) -> dict:
    """JSON-ready description: exact values, rationals as 'p/q' strings."""
    return {
        "cartan_type": str(rs.cartan_type),
        "rank": rs.rank,
        "cartan_matrix": [list(row) for row in rs.cartan_matrix],
        "positive_roots": [
            {"coeffs": list(r.coeffs), "height": r.height, "long": r.is_long}
            for r in rs.positive_roots
        ],
        "highest_root": list(rs.highest_root_coeffs),
        "coxeter_number": rs.coxeter_number,
        "dual_coxeter_number": rs.dual_coxeter_number,
        "exponents": list(rs.exponents),
        "index_of_connection": rs.index_of_connection,
        "ratio_long_short": rs.ratio_r,
        "period": rs.period_c,
        "weyl_order": rs.weyl_order,
        "rho_check": [str(x) for x in rs.rho_check_coords],
        "coweights": [[str(x) for x in w] for w in rs.coweight_coords],
    }


def to_json(rs: RootSystemData, **kwargs) -> str:
    return json.dumps(to_json_dict(rs), **kwargs)
