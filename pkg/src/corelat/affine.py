"""Affine Weyl groups: words, elements, inversion sequences, size statistics.

Action conventions:

* All actions are left actions.  A word ``s_{i_1} s_{i_2} ... s_{i_l}``
  is the composition that applies ``s_{i_l}`` first (letters act in
  decreasing position order, i.e. the word is read right to left when
  acting on a point).
* Letter 0 is the affine reflection ``s_0 : x -> x - (<hr, x> - 1) hr_check``
  where ``hr`` is the highest root; letters 1..n are the finite simple
  reflections.
* The inversion sequence of a word ``a_1 ... a_l`` has j-th entry
  ``(a_1 ... a_{j-1})(alpha_{a_j})`` with ``alpha_0 = -hr + delta``; a word
  is reduced iff every entry is a positive affine root.
* ``size_i`` of a coset is computed from a reduced word of the *inverse*
  element: ``(2 / |alpha_i|^2) * sum of delta-coefficients at letter i``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Iterable, NamedTuple

from . import linalg, rootsys
from .rootsys import RootSystemData


class AffineRoot(NamedTuple):
    """``root + k*delta`` with ``root`` as coefficients over the simple roots."""

    root: tuple[int, ...]
    k: int

    def is_positive(self) -> bool:
        if self.k != 0:
            return self.k > 0
        return any(c > 0 for c in self.root)

    def __neg__(self) -> "AffineRoot":
        return AffineRoot(tuple(-c for c in self.root), -self.k)


class NotReducedError(ValueError):
    def __init__(self, position: int, hyperplane: AffineRoot):
        self.position = position
        self.hyperplane = hyperplane
        super().__init__(
            f"word is not reduced: letter at position {position} recrosses "
            f"the hyperplane of {hyperplane.root} + {hyperplane.k}*delta"
        )


class PointOnWallError(ValueError):
    def __init__(self, hyperplane: AffineRoot):
        self.hyperplane = hyperplane
        super().__init__(
            f"point lies on affine hyperplane {hyperplane.root} + {hyperplane.k}*delta"
        )


@dataclass(frozen=True)
class AffineWord:
    rs: RootSystemData
    letters: tuple[int, ...]

    def __post_init__(self):
        n = self.rs.rank
        for i in self.letters:
            if not 0 <= i <= n:
                raise ValueError(f"letter {i} out of range 0..{n}")

    @classmethod
    def parse(cls, rs: RootSystemData, text: str) -> "AffineWord":
        return cls(rs, tuple(int(tok) for tok in text.split()))

    def __str__(self):
        return " ".join(str(i) for i in self.letters)

    def reversed(self) -> "AffineWord":
        return AffineWord(self.rs, self.letters[::-1])


@dataclass(frozen=True)
class AffineElement:
    """An affine Weyl group element as the affine map x -> m @ x + v.

    ``m`` acts on simple-coroot coordinates, ``root_m`` is the same finite
    orthogonal map acting on simple-root coordinates; inverses are carried
    along so that composition and inversion stay in integer arithmetic.
    The semidirect decomposition w * t_q has ``w = m`` and ``q = m^-1 v``.
    """

    rs: RootSystemData
    m: tuple[tuple[int, ...], ...]
    m_inv: tuple[tuple[int, ...], ...]
    root_m: tuple[tuple[int, ...], ...]
    root_m_inv: tuple[tuple[int, ...], ...]
    v: tuple[int, ...]

    def key(self):
        """Hashable identity that omits the root system (for dict grouping)."""
        return (self.m, self.v)

    def __call__(self, x):
        return linalg.vec_add(linalg.matvec(self.m, x), self.v)

    def compose(self, other: "AffineElement") -> "AffineElement":
        """self âˆ˜ other (apply ``other`` first)."""
        return AffineElement(
            self.rs,
            linalg.matmul(self.m, other.m),
            linalg.matmul(other.m_inv, self.m_inv),
            linalg.matmul(self.root_m, other.root_m),
            linalg.matmul(other.root_m_inv, self.root_m_inv),
            linalg.vec_add(linalg.matvec(self.m, other.v), self.v),
        )

    def inverse(self) -> "AffineElement":
        neg_v = tuple(-x for x in linalg.matvec(self.m_inv, self.v))
        return AffineElement(self.rs, self.m_inv, self.m,
                             self.root_m_inv, self.root_m, neg_v)

    @property
    def finite_part(self):
        return self.m

    @property
    def translation(self) -> tuple[int, ...]:
        """q in the semidirect decomposition self = w * t_q."""
        return linalg.matvec(self.m_inv, self.v)

    def act_root(self, ar: AffineRoot) -> AffineRoot:
        """w~ . (alpha + k delta) = w(alpha) + (k - <alpha, q>) delta."""
        new_root = linalg.matvec(self.root_m, ar.root)
        shift = rootsys.pairing(self.rs, self.translation, ar.root)
        return AffineRoot(new_root, ar.k - shift)

    def is_identity(self) -> bool:
        return self.m == linalg.identity(self.rs.rank) and not any(self.v)

    def to_json_dict(self) -> dict:
        return {"matrix": [list(r) for r in self.m], "translation": list(self.v)}


def identity_element(rs: RootSystemData) -> AffineElement:
    eye = linalg.identity(rs.rank)
    return AffineElement(rs, eye, eye, eye, eye, (0,) * rs.rank)


def translation_element(rs: RootSystemData, q) -> AffineElement:
    eye = linalg.identity(rs.rank)
    return AffineElement(rs, eye, eye, eye, eye, tuple(q))


@lru_cache(maxsize=None)
def _letter_elements(rs: RootSystemData) -> tuple[AffineElement, ...]:
    """The generators s_0, s_1, ..., s_n as affine elements."""
    n = rs.rank
    a = rs.cartan_matrix
    out = []

    def reflection_pair(pair_row, coroot_dir, root_pair_row, root_dir):
        # coroot side: x -> x - (pair_row . x) * coroot_dir
        m = tuple(
            tuple((1 if l == j else 0) - coroot_dir[l] * pair_row[j] for j in range(n))
            for l in range(n)
        )
        rm = tuple(
            tuple((1 if l == j else 0) - root_dir[l] * root_pair_row[j] for j in range(n))
            for l in range(n)
        )
        return m, rm

    # s_0: finite part is the reflection through the highest root.
    hr = rs.highest_root_coeffs
    hrc = rs.highest_root_coroot_coords
    # <x, hr> for x in coroot coords: row vector hr^T A
    hr_pair = tuple(sum(hr[j] * a[j][i] for j in range(n)) for i in range(n))
    # <alpha, hr_check> for alpha in root coords: row vector (A hrc)
    hr_root_pair = tuple(sum(a[j][i] * hrc[i] for i in range(n)) for j in range(n))
    m0, rm0 = reflection_pair(hr_pair, hrc, hr_root_pair, hr)
    out.append(AffineElement(rs, m0, m0, rm0, rm0, hrc))

    for i in range(n):
        pair_row = tuple(a[i][j] for j in range(n))          # <x, alpha_i>
        root_pair_row = tuple(a[j][i] for j in range(n))     # <alpha, alphacheck_i>
        e_i = tuple(int(l == i) for l in range(n))
        m, rm = reflection_pair(pair_row, e_i, root_pair_row, e_i)
        out.append(AffineElement(rs, m, m, rm, rm, (0,) * n))
    return tuple(out)


def letter_element(rs: RootSystemData, i: int) -> AffineElement:
    return _letter_elements(rs)[i]


def word_to_element(rs: RootSystemData, letters: Iterable[int]) -> AffineElement:
    el = identity_element(rs)
    for i in letters:
        el = el.compose(letter_element(rs, i))
    return el


def _apply_letter(rs: RootSystemData, i: int, x):
    """One simple reflection applied to a point (works for int or Fraction coords)."""
    n = rs.rank
    a = rs.cartan_matrix
    if i == 0:
        hr = rs.highest_root_coeffs
        val = sum(hr[j] * sum(a[j][l] * x[l] for l in range(n)) for j in range(n))
        t = val - 1
        if t == 0:
            return x  # fixed by s_0 only if on the wall; callers check separately
        hrc = rs.highest_root_coroot_coords
        return tuple(x[l] - t * hrc[l] for l in range(n))
    j = i - 1
    val = sum(a[j][l] * x[l] for l in range(n))
    if val == 0:
        return x
    return tuple(x[l] - val * (1 if l == j else 0) for l in range(n))


def apply(rs: RootSystemData, w, q):
    """Left action on a point in simple-coroot coordinates.

    ``w`` may be an AffineElement, an AffineWord, or a letter sequence;
    letters of a word act in decreasing position order (rightmost first).
    """
    if isinstance(w, AffineElement):
        return w(q)
    letters = w.letters if isinstance(w, AffineWord) else tuple(w)
    x = tuple(q)
    for i in reversed(letters):
        x = _apply_letter(rs, i, x)
    return x


def act_affine_root(el: AffineElement, ar: AffineRoot) -> AffineRoot:
    return el.act_root(ar)


def affine_simple_root(rs: RootSystemData, i: int) -> AffineRoot:
    """alpha_i for i >= 1; alpha_0 = -highest_root + delta."""
    if i == 0:
        return AffineRoot(tuple(-c for c in rs.highest_root_coeffs), 1)
    return AffineRoot(tuple(int(l == i - 1) for l in range(rs.rank)), 0)


def inversion_sequence(rs: RootSystemData, word) -> list[AffineRoot]:
    """Inversion sequence of a reduced word; raises NotReducedError otherwise."""
    letters = word.letters if isinstance(word, AffineWord) else tuple(word)
    prefix = identity_element(rs)
    entries: list[AffineRoot] = []
    for pos, i in enumerate(letters):
        entry = prefix.act_root(affine_simple_root(rs, i))
        if not entry.is_positive():
            raise NotReducedError(pos, -entry)
        entries.append(entry)
        prefix = prefix.compose(letter_element(rs, i))
    return entries


def is_reduced(rs: RootSystemData, word) -> bool:
    try:
        inversion_sequence(rs, word)
    except NotReducedError:
        return False
    return True


def _size_prefactor(rs: RootSystemData, i: int) -> int:
    """2 / |alpha_i|^2: 1 for long simple roots (and alpha_0), r for short."""
    if i == 0:
        return 1
    return int(1 / rs.simple_d[i - 1])


def size_i_word(rs: RootSystemData, word, i: int) -> Fraction:
    """Letter-i contribution to the size of the element whose inverse the word spells."""
    letters = word.letters if isinstance(word, AffineWord) else tuple(word)
    entries = inversion_sequence(rs, letters)
    total = sum(e.k for letter, e in zip(letters, entries) if letter == i)
    return Fraction(_size_prefactor(rs, i) * total)


def size_vector_word(rs: RootSystemData, word) -> tuple[Fraction, ...]:
    letters = word.letters if isinstance(word, AffineWord) else tuple(word)
    entries = inversion_sequence(rs, letters)
    totals = [0] * (rs.rank + 1)
    for letter, e in zip(letters, entries):
        totals[letter] += e.k
    return tuple(Fraction(_size_prefactor(rs, i) * totals[i]) for i in range(rs.rank + 1))


def size_i_lattice(rs: RootSystemData, q, i: int) -> Fraction:
    """size_i(q) = <(c_i / 2) q - omegacheck_i, q> with c_0 = 1, omegacheck_0 = 0."""
    marks = (1,) + rs.highest_root_coeffs
    return Fraction(marks[i], 2) * rootsys.norm2(rs, q) - rootsys.coweight_pairing(rs, i, q)


def size_lattice_total(rs: RootSystemData, q) -> Fraction:
    """size(q) = <(h/2) q - rhocheck, q>."""
    return Fraction(rs.coxeter_number, 2) * rootsys.norm2(rs, q) - rootsys.rho_pairing(rs, q)


# ---------------------------------------------------------------------------
# Alcove reduction and the dilation element w_b
# ---------------------------------------------------------------------------

def _wall_violation(rs: RootSystemData, x):
    """First violated wall of the fundamental alcove, in index order 0..n.

    Returns (letter, on_wall_root) where letter is None if x is inside;
    raises PointOnWallError when x lies exactly on a bounding wall.
    """
    n = rs.rank
    a = rs.cartan_matrix
    hr = rs.highest_root_coeffs
    vals = [sum(a[j][l] * x[l] for l in range(n)) for j in range(n)]
    hr_val = sum(hr[j] * vals[j] for j in range(n))
    if hr_val == 1:
        raise PointOnWallError(AffineRoot(tuple(-c for c in hr), 1))
    if hr_val > 1:
        return 0
    for j in range(n):
        if vals[j] == 0:
            raise PointOnWallError(affine_simple_root(rs, j + 1))
        if vals[j] < 0:
            return j + 1
    return None


def alcove_reduce(rs: RootSystemData, x):
    """Map x into the open fundamental alcove.

    Returns (u, y) with y = u(x) strictly inside the alcove; u is the
    product of the applied simple affine reflections.  At each step the
    lowest-index violated wall is reflected (0 = the affine wall).
    """
    y = tuple(Fraction(c) for c in x)
    u = identity_element(rs)
    for _ in range(10_000_000):
        letter = _wall_violation(rs, y)
        if letter is None:
            return u, y
        y = _apply_letter(rs, letter, y)
        u = letter_element(rs, letter).compose(u)
    raise RuntimeError("alcove reduction did not terminate")


@lru_cache(maxsize=None)
def compute_w_b(rs: RootSystemData, b: int) -> AffineElement:
    """The unique element with w_b(rhocheck / h) = b rhocheck / h.

    It maps the b-th simplex region onto the b-fold dilated alcove; computed
    as the inverse of the alcove reduction applied to b rhocheck / h.
    """
    h = rs.coxeter_number
    if b < 1 or gcd(b, h) != 1:
        raise ValueError(f"b = {b} must be a positive integer coprime to h = {h}")
    target = tuple(Fraction(b) * c / h for c in rs.rho_check_coords)
    u, y = alcove_reduce(rs, target)
    expected = tuple(c / h for c in rs.rho_check_coords)
    if y != expected:
        raise AssertionError(f"alcove reduction of b*rho/h missed rho/h for {rs.cartan_type}, b={b}")
    return u.inverse()


# ---------------------------------------------------------------------------
# Inversion sets without words, dominant representatives, weak-order check
# ---------------------------------------------------------------------------

def inversion_set(el: AffineElement) -> frozenset[AffineRoot]:
    """inv(w~) = {beta in positive affine roots : w~^-1(beta) < 0}.

    Computed in closed form from the semidirect decomposition of w~^-1:
    for a finite root alpha and c = <alpha, q'>, the inversions above alpha
    are the k in [k_min, c), plus k = c when w'(alpha) < 0.
    """
    rs = el.rs
    inv = el.inverse()
    q1 = inv.translation
    out = []
    for root in rs.positive_roots:
        for sign in (1, -1):
            coeffs = root.coeffs if sign == 1 else tuple(-x for x in root.coeffs)
            cutoff = sign * rootsys.pairing(rs, q1, root)
            k_min = 0 if sign == 1 else 1
            for k in range(k_min, cutoff):
                out.append(AffineRoot(coeffs, k))
            if cutoff >= k_min:
                image = linalg.matvec(inv.root_m, coeffs)
                if not AffineRoot(image, 0).is_positive():
                    out.append(AffineRoot(coeffs, cutoff))
    return frozenset(out)


def dominant_representative(rs: RootSystemData, q) -> AffineElement:
    """The dominant element w~ with w~^-1(0) = q.

    Dominant means w~ maps the fundamental alcove into the dominant cone;
    it is found by W-reducing a generic interior point of t_{-q}(alcove).
    """
    h = rs.coxeter_number
    x = tuple(Fraction(c) / h - qi for c, qi in zip(rs.rho_check_coords, q))
    el = translation_element(rs, tuple(-qi for qi in q))
    n = rs.rank
    a = rs.cartan_matrix
    while True:
        for j in range(n):
            val = sum(a[j][l] * x[l] for l in range(n))
            if val < 0:
                x = _apply_letter(rs, j + 1, x)
                el = letter_element(rs, j + 1).compose(el)
                break
        else:
            return el


@dataclass
class MaximalityReport:
    rs: RootSystemData
    b: int
    n_elements: int
    counterexamples: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.counterexamples


def check_wb_maximality(rs: RootSystemData, b: int, cap: int = 10_000) -> MaximalityReport:
    """Check that inv(w~_q) is contained in inv(w_b) for every q in the b-region.

    Evidence-level check of the weak-order maximality conjecture; reports
    counterexamples (expected none).
    """
    from . import sommers  # local import to avoid a cycle

    core = sommers.enumerate_cores(rs, b, cap=cap, direct=False)
    wb = compute_w_b(rs, b)
    wb_inv_set = inversion_set(wb)
    q_star = wb.inverse()((0,) * rs.rank)
    report = MaximalityReport(rs, b, len(core.points))
    for q in core.points:
        el = dominant_representative(rs, q)
        if q == q_star and el.key() != wb.key():
            report.counterexamples.append((q, "w_b is not the dominant representative"))
            continue
        extra = inversion_set(el) - wb_inv_set
        if extra:
            report.counterexamples.append((q, sorted(extra)[:3]))
    return report
