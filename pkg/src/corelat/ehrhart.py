"""Weighted lattice-point enumeration over the coweight lattice and the
quasipolynomial/expectation machinery built on it.

Everything is exact: sums are accumulated as integers against a scaled
Gram matrix of the fundamental coweights, polynomials are fitted by
Lagrange interpolation over Fractions, and every identity asserted here
is an equality of rationals.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import lcm

from . import linalg, sommers
from .rootsys import RootSystemData
from .sommers import DEFAULT_CAP, FeasibilityError


class HeldOutMismatchError(ValueError):
    """An interpolated component failed validation on held-out samples,
    signalling a wrong period or degree."""


class SeriesMismatchError(ValueError):
    def __init__(self, degree: int, lhs: int, rhs: int):
        self.degree = degree
        super().__init__(f"power series disagree first at degree {degree}: {lhs} != {rhs}")


@lru_cache(maxsize=None)
def _coweight_gram_scaled(rs: RootSystemData):
    """(N, N*G) with G the Gram matrix of the fundamental coweights and N a
    common denominator, so that quadratic forms stay in integer arithmetic."""
    a_inv = rs.cartan_inverse
    g = linalg.matmul(linalg.transpose(a_inv), linalg.matmul(rs.gram_coroot, a_inv))
    denom = lcm(*[x.denominator for row in g for x in row])
    scaled = linalg.as_int_matrix(tuple(tuple(x * denom for x in row) for row in g))
    return denom, scaled


_ENUMERATOR_CACHE: dict = {}


def clear_enumerator_cache() -> None:
    _ENUMERATOR_CACHE.clear()


def weighted_enumerator(rs: RootSystemData, b: int, cap: int = DEFAULT_CAP) -> Fraction:
    """Sum of size^(b) over the coweight-lattice points of the b-dilated alcove.

    Computed two ways that must agree: term by term from the defining
    expression (h/2)(|x - b rho/h|^2 - |rho/h|^2), and via the three-term
    split (h/2)|x|^2 - b<x, rho> + (b^2 - 1)|rho|^2/(2h).

    Values are cached per (system, b); the cap only guards fresh work.
    """
    cached = _ENUMERATOR_CACHE.get((rs.cartan_type, b))
    if cached is not None:
        return cached
    if b < 1:
        raise ValueError("dilation factor must be >= 1")
    n = rs.rank
    h = rs.coxeter_number
    denom, g = _coweight_gram_scaled(rs)
    # In the coweight basis rho has coordinates (1, ..., 1).
    g_rows = [sum(row) for row in g]           # N * <omega_i, rho>
    rho_norm_scaled = sum(g_rows)              # N * <rho, rho>
    count = 0
    quad = 0        # N * sum |x|^2
    lin = 0         # N * sum <x, rho>
    direct = 0      # N * 2 * h * sum (|x - b rho / h|^2 - |rho/h|^2)
    for m in sommers.iter_alcove_m(rs, b):
        count += 1
        if count > cap * max(rs.index_of_connection, 1):
            raise FeasibilityError(f"weighted enumeration for {rs.cartan_type}, b={b} exceeds cap")
        q = sum(g[i][j] * m[i] * m[j] for i in range(n) for j in range(n) if m[i] and m[j])
        l = sum(g_rows[i] * m[i] for i in range(n) if m[i])
        quad += q
        lin += l
        # h^2 |x - b rho/h|^2 = |h x - b rho|^2 (coweight coords h*m - b*1)
        direct += (h * h * q - 2 * h * b * l + b * b * rho_norm_scaled) - rho_norm_scaled
    split = (Fraction(h * quad, 2) - b * Fraction(lin)
             + count * Fraction((b * b - 1) * rho_norm_scaled, 2 * h)) / denom
    direct_total = Fraction(direct, 2 * h * denom)
    assert split == direct_total, "three-term split disagrees with the direct definition"
    _ENUMERATOR_CACHE[(rs.cartan_type, b)] = split
    return split


# ---------------------------------------------------------------------------
# Exact polynomial helpers
# ---------------------------------------------------------------------------

def poly_eval(coeffs, x) -> Fraction:
    total = Fraction(0)
    for c in reversed(coeffs):
        total = total * x + c
    return total


def poly_mul(p, q):
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, c in enumerate(q):
                out[i + j] += a * c
    return out


def poly_from_roots(leading, roots):
    coeffs = [Fraction(leading)]
    for r in roots:
        coeffs = poly_mul(coeffs, [Fraction(-r), Fraction(1)])
    return tuple(coeffs)


def lagrange_fit(xs, ys) -> tuple[Fraction, ...]:
    """Exact interpolating polynomial through the given rational points."""
    m = len(xs)
    coeffs = [Fraction(0)] * m
    for i in range(m):
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j in range(m):
            if j != i:
                basis = poly_mul(basis, [Fraction(-xs[j]), Fraction(1)])
                denom *= xs[i] - xs[j]
        scale = Fraction(ys[i]) / denom
        for k, c in enumerate(basis):
            coeffs[k] += scale * c
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


@dataclass(frozen=True)
class Quasipolynomial:
    """A period-c family of polynomials in the dilation factor b."""

    period: int
    components: dict  # residue -> tuple of Fraction coefficients

    def evaluate(self, b: int) -> Fraction:
        return poly_eval(self.components[b % self.period], b)

    def to_json_dict(self) -> dict:
        return {
            "period": self.period,
            "components": {str(r): [str(c) for c in coeffs]
                           for r, coeffs in sorted(self.components.items())},
        }


def interpolate(rs: RootSystemData, residue: int, period: int | None = None,
                cap: int = DEFAULT_CAP, samples: int | None = None,
                held_out: int = 2) -> tuple[Fraction, ...]:
    """Fit the degree-(n+2) polynomial matching the weighted enumerator on
    b = residue mod period, then validate it on held-out samples.

    Raises HeldOutMismatchError when validation fails (wrong period or
    degree), and FeasibilityError when the sample values get too large.
    """
    period = period or rs.period_c
    residue %= period
    if samples is None:
        samples = rs.rank + 3
    bs = []
    b = residue if residue >= 1 else period
    while len(bs) < samples + held_out:
        bs.append(b)
        b += period
    values = [weighted_enumerator(rs, x, cap=cap) for x in bs]
    coeffs = lagrange_fit(bs[:samples], values[:samples])
    for x, y in zip(bs[samples:], values[samples:]):
        if poly_eval(coeffs, x) != y:
            raise HeldOutMismatchError(
                f"{rs.cartan_type}: residue {residue} mod {period} fails held-out "
                f"validation at b={x}; the period or degree is wrong")
    return coeffs


def fit_quasipolynomial(rs: RootSystemData, residues=None, cap: int = DEFAULT_CAP,
                        **kwargs) -> Quasipolynomial:
    period = rs.period_c
    if residues is None:
        residues = range(period)
    components = {r % period: interpolate(rs, r, period, cap=cap, **kwargs)
                  for r in residues}
    return Quasipolynomial(period, components)


def predicted_enumerator_polynomial(rs: RootSystemData) -> tuple[Fraction, ...]:
    """Closed form implied by the count formula and the expected-size theorem:
    f * prod(b + e_j)/|W| * (r g / h) * n (b - 1)(h + b + 1) / 24.

    Valid on residues coprime to h.
    """
    count_poly = poly_from_roots(Fraction(1, rs.weyl_order), [-e for e in rs.exponents])
    mean_poly = poly_from_roots(
        Fraction(rs.ratio_r * rs.dual_coxeter_number * rs.rank, rs.coxeter_number * 24),
        [1, -(rs.coxeter_number + 1)],
    )
    return tuple(Fraction(rs.index_of_connection) * c
                 for c in poly_mul(count_poly, mean_poly))


@dataclass(frozen=True)
class ExpectationReport:
    cartan_type: str
    b: int
    count: int
    total_size: Fraction
    mean: Fraction
    predicted: Fraction
    match: bool

    def to_json_dict(self) -> dict:
        return {
            "type": self.cartan_type,
            "b": self.b,
            "count": self.count,
            "total_size": str(self.total_size),
            "mean": str(self.mean),
            "predicted": str(self.predicted),
            "match": self.match,
        }


def expected_size(rs: RootSystemData, b: int, cap: int = DEFAULT_CAP,
                  coreset: sommers.CoreSet | None = None) -> ExpectationReport:
    """Mean size over the b-region points, computed three independent ways.

    (i) direct average over the enumerated points; (ii) the coweight-lattice
    sum divided by f and the count; (iii) the closed form
    (r g / h) n (b - 1)(h + b + 1) / 24.  Any disagreement raises.
    """
    if coreset is None:
        coreset = sommers.enumerate_cores(rs, b, cap=cap)
    count = len(coreset)
    direct_mean = coreset.mean_size
    coweight_mean = weighted_enumerator(rs, b, cap=cap) / (rs.index_of_connection * count)
    closed = (Fraction(rs.ratio_r * rs.dual_coxeter_number, rs.coxeter_number)
              * Fraction(rs.rank * (b - 1) * (rs.coxeter_number + b + 1), 24))
    if direct_mean != coweight_mean:
        raise AssertionError(
            f"{rs.cartan_type}, b={b}: direct mean {direct_mean} != coweight-sum mean {coweight_mean}")
    if direct_mean != closed:
        raise AssertionError(
            f"{rs.cartan_type}, b={b}: direct mean {direct_mean} != closed form {closed}")
    return ExpectationReport(str(rs.cartan_type), b, count, coreset.total_size,
                             direct_mean, closed, direct_mean == closed)


@dataclass
class RootReport:
    residue: int
    checked: list  # (root location, value) pairs, value must be 0

    @property
    def ok(self) -> bool:
        return all(v == 0 for _, v in self.checked)


def reciprocity_roots(rs: RootSystemData, residue: int,
                      coeffs: tuple[Fraction, ...] | None = None,
                      cap: int = DEFAULT_CAP) -> RootReport:
    """Verify the vanishing of the fitted component at b = -e_j for the
    exponents in its residue class, and at b = 1 and b = -h-1 when those
    fall in the class.  A nonzero value raises."""
    period = rs.period_c
    residue %= period
    if coeffs is None:
        coeffs = interpolate(rs, residue, cap=cap)
    targets = [-e for e in rs.exponents if (-e) % period == residue]
    if 1 % period == residue:
        targets.append(1)
    if (-rs.coxeter_number - 1) % period == residue:
        targets.append(-rs.coxeter_number - 1)
    report = RootReport(residue, [(t, poly_eval(coeffs, t)) for t in sorted(set(targets))])
    if not report.ok:
        bad = [(t, str(v)) for t, v in report.checked if v != 0]
        raise AssertionError(f"{rs.cartan_type}: component {residue} mod {period} "
                             f"fails to vanish at {bad}")
    return report


# ---------------------------------------------------------------------------
# Truncated power-series identity in type A
# ---------------------------------------------------------------------------

def partition_counts_euler(n_max: int) -> list[int]:
    """p(0..n_max) by the pentagonal-number recurrence (independent oracle)."""
    p = [0] * (n_max + 1)
    p[0] = 1
    for n in range(1, n_max + 1):
        total = 0
        k = 1
        while True:
            pent1 = k * (3 * k - 1) // 2
            pent2 = k * (3 * k + 1) // 2
            if pent1 > n and pent2 > n:
                break
            sign = -1 if k % 2 == 0 else 1
            if pent1 <= n:
                total += sign * p[n - pent1]
            if pent2 <= n:
                total += sign * p[n - pent2]
            k += 1
        p[n] = total
    return p


def _partition_series_dp(n_max: int, part_sizes) -> list[int]:
    """Coefficients of prod 1/(1 - x^s) over the given part sizes, to x^n_max."""
    coeffs = [0] * (n_max + 1)
    coeffs[0] = 1
    for s in part_sizes:
        for n in range(s, n_max + 1):
            coeffs[n] += coeffs[n - s]
    return coeffs


def typea_series_check(a: int, order: int) -> bool:
    """Check the factorization of the partition generating function through
    a-cores: prod 1/(1-x^i) = (prod 1/(1-x^{ai}))^a * sum_{a-cores} x^size,
    as an identity of truncated integer series.

    Exact coefficient comparison; the left side is recomputed with the
    pentagonal-number recurrence as an independent oracle.
    """
    from . import cores

    if a < 2:
        raise ValueError("modulus must be at least 2")
    if order < 0:
        raise ValueError("order must be nonnegative")
    lhs = _partition_series_dp(order, range(1, order + 1))
    oracle = partition_counts_euler(order)
    if lhs != oracle:
        raise AssertionError("partition-number DP disagrees with the Euler recurrence")
    sizes = (s for i in range(1, order // a + 1) for s in [a * i] * a)
    rhs = _partition_series_dp(order, sizes)
    core_poly = [0] * (order + 1)
    for parts in cores.all_cores(a, order):
        core_poly[sum(parts)] += 1
    full = [0] * (order + 1)
    for i, c in enumerate(rhs):
        if c:
            for j, d in enumerate(core_poly[: order + 1 - i]):
                full[i + j] += c * d
    for degree, (x, y) in enumerate(zip(lhs, full)):
        if x != y:
            raise SeriesMismatchError(degree, x, y)
    return True
