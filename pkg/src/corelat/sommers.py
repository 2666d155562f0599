"""The b-dilation simplex region, its lattice points, and size statistics.

For b coprime to the Coxeter number h, write b = t_b*h + r_b with
0 < r_b < h.  The region is cut out by

    <x, alpha> >= -t_b      for all positive roots of height r_b, and
    <x, alpha> <= t_b + 1   for all positive roots of height h - r_b.

Its coroot-lattice points generalize simultaneous (a, b)-cores: in type
A_{a-1} they are exactly the (a, b)-cores under the abacus bijection.

``enumerate_cores`` computes the point set two independent ways — by
mapping the dilated-alcove points through the inverse dilation element,
and by scanning the integer bounding box of the region's vertices — and
requires the two to agree.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, prod
from typing import Iterator

import numpy as np

from . import affine, cores, linalg, models, rootsys
from .rootsys import CartanType, Root, RootSystemData

#: refuse enumerations whose predicted point count exceeds this
DEFAULT_CAP = 10**6
#: refuse direct bounding-box scans larger than this many candidate points
DEFAULT_BOX_CAP = 3 * 10**7


class FeasibilityError(ValueError):
    pass


@dataclass(frozen=True)
class SommersRegion:
    rs: RootSystemData
    b: int
    t_b: int
    r_b: int
    height_low_roots: tuple[Root, ...]
    height_high_roots: tuple[Root, ...]


def sommers_region(rs: RootSystemData, b: int) -> SommersRegion:
    h = rs.coxeter_number
    if b < 1 or gcd(b, h) != 1:
        raise ValueError(f"b = {b} must be a positive integer coprime to h = {h}")
    t_b, r_b = divmod(b, h)
    return SommersRegion(
        rs, b, t_b, r_b,
        tuple(rootsys.roots_of_height(rs, r_b)),
        tuple(rootsys.roots_of_height(rs, h - r_b)),
    )


def contains(sr: SommersRegion, q) -> bool:
    rs = sr.rs
    return all(rootsys.pairing(rs, q, r) >= -sr.t_b for r in sr.height_low_roots) and \
        all(rootsys.pairing(rs, q, r) <= sr.t_b + 1 for r in sr.height_high_roots)


def haiman_count(rs: RootSystemData, b: int) -> int:
    """|b-dilated alcove intersect coroot lattice| = prod(b + e_j) / |W|."""
    if gcd(b, rs.coxeter_number) != 1:
        raise ValueError(f"count formula requires gcd(b, h) = 1, got b = {b}")
    num = prod(b + e for e in rs.exponents)
    count, rem = divmod(num, rs.weyl_order)
    assert rem == 0, "count formula must be an integer"
    return count


def alcove_vertices(rs: RootSystemData) -> list[tuple[Fraction, ...]]:
    """Vertices of the fundamental alcove: 0 and omegacheck_i / c_i."""
    n = rs.rank
    verts = [tuple(Fraction(0) for _ in range(n))]
    for i in range(n):
        c = rs.highest_root_coeffs[i]
        verts.append(tuple(Fraction(x, 1) / c for x in rs.coweight_coords[i]))
    return verts


def iter_alcove_m(rs: RootSystemData, b: int) -> Iterator[tuple[int, ...]]:
    """Dominant tuples m with m_i = <q, alpha_i> >= 0 and sum c_i m_i <= b.

    These index the coweight-lattice points of the b-dilated alcove.
    """
    marks = rs.highest_root_coeffs
    n = rs.rank
    m = [0] * n

    def rec(i: int, budget: int):
        if i == n:
            yield tuple(m)
            return
        c = marks[i]
        for val in range(budget // c + 1):
            m[i] = val
            yield from rec(i + 1, budget - c * val)
        m[i] = 0

    yield from rec(0, b)


def enumerate_alcove(rs: RootSystemData, b: int, lattice: str = "coroot",
                     cap: int = DEFAULT_CAP) -> list[tuple]:
    """Lattice points of the b-dilated fundamental alcove, in simple-coroot
    coordinates, sorted lexicographically.

    ``lattice`` is "coroot" or "coweight".  Coweight points may have
    rational coordinates; coroot points are the subset with integer ones,
    recognized via the adjugate of the Cartan matrix.
    """
    if b < 0:
        raise ValueError("dilation factor must be nonnegative")
    if lattice not in ("coroot", "coweight"):
        raise ValueError(f"unknown lattice {lattice!r}")
    n = rs.rank
    a_inv = rs.cartan_inverse
    det = rs.index_of_connection
    adj = linalg.as_int_matrix(tuple(tuple(x * det for x in row) for row in a_inv))
    points = []
    count = 0
    for m in iter_alcove_m(rs, b):
        count += 1
        if count > cap * max(det, 1):
            raise FeasibilityError(f"alcove enumeration for {rs.cartan_type}, b={b} exceeds cap")
        scaled = linalg.matvec(adj, m)
        if lattice == "coroot":
            if all(x % det == 0 for x in scaled):
                points.append(tuple(x // det for x in scaled))
        else:
            points.append(tuple(Fraction(x, det) for x in scaled))
    points.sort()
    return points


@dataclass(frozen=True)
class CoreSet:
    rs: RootSystemData
    b: int
    points: tuple[tuple[int, ...], ...]
    sizes: tuple[Fraction, ...]
    direct_checked: bool

    def __len__(self):
        return len(self.points)

    @property
    def total_size(self) -> Fraction:
        return sum(self.sizes, Fraction(0))

    @property
    def mean_size(self) -> Fraction:
        return self.total_size / len(self.points)

    def to_json_dict(self) -> dict:
        value, argmax = max(zip(self.sizes, self.points))
        return {
            "type": str(self.rs.cartan_type),
            "b": self.b,
            "count": len(self.points),
            "sizes": [str(s) for s in sorted(self.sizes)],
            "mean": str(self.mean_size),
            "max": str(value),
            "argmax": list(argmax),
            "direct_checked": self.direct_checked,
        }


def region_vertices(rs: RootSystemData, b: int) -> list[tuple[Fraction, ...]]:
    """Vertices of the b-region: the inverse dilation element applied to b*(alcove vertices)."""
    wb_inv = affine.compute_w_b(rs, b).inverse()
    return [wb_inv(tuple(b * c for c in v)) for v in alcove_vertices(rs)]


def _direct_scan(sr: SommersRegion, box_cap: int) -> list[tuple[int, ...]] | None:
    """Scan the integer bounding box of the region's vertices, filter by the
    defining inequalities.  Returns None when the box exceeds ``box_cap``."""
    rs = sr.rs
    n = rs.rank
    verts = region_vertices(rs, sr.b)
    import math
    lo = [min(math.floor(v[i]) for v in verts) - 1 for i in range(n)]
    hi = [max(math.ceil(v[i]) for v in verts) + 1 for i in range(n)]
    volume = prod(h - l + 1 for l, h in zip(lo, hi))
    if volume > box_cap:
        return None
    # int64 is exact here: coordinates and pairing values are tiny integers
    assert all(abs(x) < 2**20 for x in lo + hi)
    low_mat = np.array([r.pair_vec for r in sr.height_low_roots], dtype=np.int64).T
    high_mat = np.array([r.pair_vec for r in sr.height_high_roots], dtype=np.int64).T
    axes = [np.arange(l, h + 1, dtype=np.int64) for l, h in zip(lo, hi)]
    if n == 1:
        grid = axes[0].reshape(-1, 1)
        return [tuple(map(int, row)) for row in grid
                if contains(sr, tuple(map(int, row)))]
    tail = np.stack(np.meshgrid(*axes[1:], indexing="ij"), axis=-1).reshape(-1, n - 1)
    found = []
    for x0 in axes[0]:
        pts = np.concatenate([np.full((tail.shape[0], 1), x0, dtype=np.int64), tail], axis=1)
        mask = ((pts @ low_mat) >= -sr.t_b).all(axis=1) & ((pts @ high_mat) <= sr.t_b + 1).all(axis=1)
        found.extend(tuple(map(int, row)) for row in pts[mask])
    found.sort()
    return found


def enumerate_cores(rs: RootSystemData, b: int, cap: int = DEFAULT_CAP,
                    direct: bool | None = None, box_cap: int = DEFAULT_BOX_CAP) -> CoreSet:
    """The coroot-lattice points of the b-region, with their sizes.

    Always computed by mapping the dilated-alcove points through the inverse
    dilation element; additionally cross-checked against a direct inequality
    scan (``direct=None`` skips the scan only when the bounding box exceeds
    ``box_cap``; ``direct=True`` forces it; ``direct=False`` disables it).
    """
    predicted = haiman_count(rs, b)
    if predicted > cap:
        raise FeasibilityError(
            f"predicted count {predicted} for {rs.cartan_type}, b={b} exceeds cap {cap}")
    sr = sommers_region(rs, b)
    wb_inv = affine.compute_w_b(rs, b).inverse()
    mapped = sorted(wb_inv(p) for p in enumerate_alcove(rs, b, "coroot", cap=cap))
    if len(mapped) != predicted:
        raise AssertionError(
            f"{rs.cartan_type}, b={b}: found {len(mapped)} alcove points, expected {predicted}")
    checked = False
    if direct or (direct is None):
        scanned = _direct_scan(sr, box_cap)
        if scanned is None and direct:
            raise FeasibilityError(
                f"bounding box for {rs.cartan_type}, b={b} exceeds the box cap {box_cap}")
        if scanned is not None:
            if scanned != mapped:
                raise AssertionError(
                    f"{rs.cartan_type}, b={b}: direct inequality scan disagrees with the "
                    f"mapped alcove points ({len(scanned)} vs {len(mapped)})")
            checked = True
    sizes = tuple(affine.size_lattice_total(rs, q) for q in mapped)
    return CoreSet(rs, b, tuple(mapped), sizes, checked)


def size_b(rs: RootSystemData, b: int, x) -> Fraction:
    """(h/2) (|x - b rho/h|^2 - |rho/h|^2), the dilated-alcove avatar of size."""
    h = rs.coxeter_number
    shifted = tuple(Fraction(xi) - Fraction(b * ri, h) for xi, ri in
                    zip(x, rs.rho_check_coords))
    rho_norm = rootsys.norm2(rs, rs.rho_check_coords)
    return Fraction(h, 2) * rootsys.norm2(rs, shifted) - rho_norm / (2 * h)


def size_b_split(rs: RootSystemData, b: int, x) -> Fraction:
    """Same value via (h/2)|x|^2 - b <x, rho> + (b^2 - 1)|rho|^2 / (2h)."""
    h = rs.coxeter_number
    rho_norm = rootsys.norm2(rs, rs.rho_check_coords)
    return (Fraction(h, 2) * rootsys.norm2(rs, x)
            - b * rootsys.rho_pairing(rs, x)
            + Fraction(b * b - 1, 2 * h) * rho_norm)


def max_size(rs: RootSystemData, b: int, coreset: CoreSet | None = None):
    """(max size, argmax) over the b-region lattice points.

    The closed form (r g / h) * n (b^2 - 1)(h + 1) / 24 and the predicted
    argmax w_b^{-1}(0) are verified against an exhaustive scan, including
    uniqueness of the maximizer.
    """
    if coreset is None:
        coreset = enumerate_cores(rs, b)
    value = (Fraction(rs.ratio_r * rs.dual_coxeter_number, rs.coxeter_number)
             * Fraction(rs.rank * (b * b - 1) * (rs.coxeter_number + 1), 24))
    argmax = affine.compute_w_b(rs, b).inverse()(tuple(0 for _ in range(rs.rank)))
    scan_max = max(coreset.sizes)
    winners = [q for q, s in zip(coreset.points, coreset.sizes) if s == scan_max]
    if scan_max != value or winners != [tuple(argmax)]:
        raise AssertionError(
            f"{rs.cartan_type}, b={b}: maximum-size scan disagrees with the closed form "
            f"(scan {scan_max} at {winners}, formula {value} at {tuple(argmax)})")
    return value, tuple(argmax)


@dataclass
class SelfConjugateReport:
    n: int
    b: int
    pairs: list  # (coroot point, CorePartition)

    @property
    def count(self) -> int:
        return len(self.pairs)


def simultaneous_selfconjugate(n: int, b: int, cap: int = DEFAULT_CAP) -> SelfConjugateReport:
    """Map the C_n b-region points to partitions and certify each one is a
    self-conjugate (2n, b)-core by a hook scan; the count must match."""
    if gcd(b, 2 * n) != 1:
        raise ValueError(f"b = {b} must be coprime to 2n = {2 * n}")
    t = CartanType("C", n)
    rs = rootsys.build(t)
    coreset = enumerate_cores(rs, b, cap=cap)
    pairs = []
    for q in coreset.points:
        emb = models.embed(t, q)
        core = emb.core()
        parts = core.partition
        if parts != cores.conjugate(parts):
            raise AssertionError(f"image of {q} is not self-conjugate: {parts}")
        for modulus in (2 * n, b):
            cell = cores.first_hook_of_length(parts, modulus)
            if cell is not None:
                raise AssertionError(
                    f"image {parts} of {q} has a hook of length {modulus} at {cell}")
        pairs.append((q, core))
    return SelfConjugateReport(n, b, pairs)
