"""Combinatorial models: embeddings of B/C/D/G2 coroot lattices into type A.

Each supported type embeds its coroot lattice into the coroot lattice of an
affine symmetric group (2n strands for B_n, C_n, D_n; 3 strands for G_2), so
cores model its lattice points:

* C_n  <-> self-conjugate 2n-cores (the embedding is an isometry);
* B_n, D_n <-> self-conjugate 2n-cores with an even number of diagonal
  boxes (the embedding doubles the form);
* G_2  <-> 3-cores (the lattices literally coincide).

Ambient coordinates: for B/C/D the source point with simple-coroot
coordinates k becomes the integer vector x (the classical e_i coordinates,
with the type-C sqrt(2) factor absorbed), and the image is the antisymmetric
2n-tuple (x_1, ..., x_n, -x_n, ..., -x_1).

Generator dictionary (verified exhaustively by the equivariance tests; note
that the G_2 numbering follows this package's Cartan matrix, where alpha_1
is the short simple root):

* C_n: s_0 -> s_0^A, s_i -> s_i^A s_{2n-i}^A (1 <= i < n), s_n -> s_n^A
* B_n: as C_n except s_0 -> s_0^A s_1^A s_{2n-1}^A s_0^A
* D_n: as B_n for i <= n-1, and s_n -> s_n^A s_{n-1}^A s_{n+1}^A s_n^A
* G_2: s_0 -> s_0^A, s_1 -> partition conjugation, s_2 -> s_1^A
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import cores
from .rootsys import CartanType

#: marker for the G_2 generator that acts by partition conjugation
CONJUGATE = "conjugate"

MODEL_FAMILIES = ("B", "C", "D", "G")


class UnsupportedModelError(ValueError):
    pass


def _require_model(t: CartanType) -> None:
    if t.family not in MODEL_FAMILIES:
        raise UnsupportedModelError(f"no type-A combinatorial model for {t}")


def ambient_dimension(t: CartanType) -> int:
    """Dimension of the classical coordinate vector (before antisymmetrizing)."""
    return 3 if t.family == "G" else t.rank


def to_ambient(t: CartanType, k) -> tuple[int, ...]:
    """Simple-coroot coordinates -> integer ambient coordinates."""
    _require_model(t)
    n = t.rank
    k = tuple(k)
    if len(k) != n:
        raise ValueError(f"expected {n} coordinates, got {len(k)}")
    if t.family == "G":
        k1, k2 = k
        return (k2 - k1, 2 * k1 - k2, -k1)
    prev = (0,) + k
    x = [k[i] - prev[i] for i in range(n)]
    if t.family == "B":
        x[n - 1] = 2 * k[n - 1] - prev[n - 1]
    elif t.family == "D":
        if n >= 2:
            x[n - 2] = k[n - 2] - prev[n - 2] + k[n - 1]
            x[n - 1] = k[n - 1] - k[n - 2]
    return tuple(x)


def from_ambient(t: CartanType, x) -> tuple[int, ...]:
    """Ambient coordinates -> simple-coroot coordinates.

    Raises ValueError when x is not in the coroot lattice (sum-zero failure
    for G_2, parity violation for B_n / D_n).
    """
    _require_model(t)
    n = t.rank
    x = tuple(x)
    if len(x) != ambient_dimension(t):
        raise ValueError(f"expected {ambient_dimension(t)} ambient coordinates, got {len(x)}")
    if t.family == "G":
        if sum(x) != 0:
            raise ValueError(f"{x} does not lie in the sum-zero lattice")
        return (-x[2], x[0] - x[2])
    total = sum(x)
    if t.family in ("B", "D") and total % 2 != 0:
        raise ValueError(f"{x} violates the even-coordinate-sum condition of {t}")
    partial = []
    acc = 0
    for xi in x:
        acc += xi
        partial.append(acc)
    if t.family == "C":
        return tuple(partial)
    k_n = total // 2
    if t.family == "B":
        return tuple(partial[: n - 1]) + (k_n,)
    # D: x_n = k_n - k_{n-1}
    return tuple(partial[: n - 2]) + (k_n - x[n - 1], k_n)


@dataclass(frozen=True)
class EmbeddedPoint:
    source_type: CartanType
    source_coords: tuple[int, ...]
    image: tuple[int, ...]

    @property
    def modulus(self) -> int:
        return 3 if self.source_type.family == "G" else 2 * self.source_type.rank

    def core(self) -> cores.CorePartition:
        return cores.CorePartition.from_coroot(self.modulus, self.image)


def embed(t: CartanType, k) -> EmbeddedPoint:
    """Embed a coroot-lattice point into the ambient type-A coroot lattice."""
    _require_model(t)
    x = to_ambient(t, k)
    if t.family == "G":
        image = x
    else:
        image = x + tuple(-xi for xi in reversed(x))
    assert sum(image) == 0
    return EmbeddedPoint(t, tuple(k), image)


def embed_ambient(t: CartanType, x) -> EmbeddedPoint:
    """Like ``embed`` but takes ambient coordinates, validating lattice membership."""
    return embed(t, from_ambient(t, x))


def generator_dictionary(t: CartanType) -> dict[int, tuple[int, ...] | str]:
    """Map each source generator to a type-A word (or CONJUGATE for G_2 s_1).

    Words are applied the same way as all other words: rightmost letter first.
    """
    _require_model(t)
    n = t.rank
    if t.family == "G":
        return {0: (0,), 1: CONJUGATE, 2: (1,)}
    two_n = 2 * n
    dictionary: dict[int, tuple[int, ...] | str] = {
        i: (i, two_n - i) for i in range(1, n)
    }
    dictionary[n] = (n,)
    if t.family == "C":
        dictionary[0] = (0,)
    else:
        dictionary[0] = (0, 1, two_n - 1, 0)
    if t.family == "D":
        dictionary[n] = (n, n - 1, n + 1, n)
    return dictionary


def act_type_a(letters, q) -> tuple[int, ...]:
    """Affine symmetric group action on sum-zero tuples, rightmost letter first.

    s_i swaps entries i, i+1 (1-indexed); s_0 maps (q_1, ..., q_a) to
    (q_a + 1, q_2, ..., q_{a-1}, q_1 - 1).
    """
    x = list(q)
    for i in reversed(tuple(letters)):
        if i == 0:
            x[0], x[-1] = x[-1] + 1, x[0] - 1
        else:
            x[i - 1], x[i] = x[i], x[i - 1]
    return tuple(x)


def act_model_generator(t: CartanType, i: int, image) -> tuple[int, ...]:
    """Apply the dictionary image of source generator i to an ambient point."""
    word = generator_dictionary(t)[i]
    if word == CONJUGATE:
        return cores.conjugate_coroot(image)
    return act_type_a(word, image)


def model_size_vector(t: CartanType, k) -> tuple[Fraction, ...]:
    """(size_0, ..., size_n) of a lattice point read off the content classes
    of its core.

    Case formulas per type (lambda_j = boxes of content j in the image core);
    each equals ``affine.size_i_lattice`` for the source system, which the
    test suite checks exhaustively.
    """
    _require_model(t)
    n = t.rank
    lam = embed(t, k).core().content_counts

    def entry(i):
        if t.family == "G":
            if i == 0:
                return Fraction(lam[0])
            if i == 1:
                return Fraction(3 * lam[2])
            return Fraction(lam[1] + lam[2])
        two_n = 2 * n
        if t.family == "C":
            if i in (0, n):
                return Fraction(lam[i])
            return Fraction(lam[i] + lam[two_n - i])
        # B and D share the generic cases
        if i == 0:
            return Fraction(lam[0], 2)
        if i == 1:
            return Fraction(lam[1] + lam[two_n - 1] - lam[0], 2)
        if t.family == "D":
            if i == n - 1:
                return Fraction(lam[n - 1] - lam[n] + lam[n + 1], 2)
            if i == n:
                return Fraction(lam[n], 2)
        return Fraction(lam[i] + lam[two_n - i], 2)

    return tuple(entry(i) for i in range(n + 1))


def model_size_i(t: CartanType, k, i: int) -> Fraction:
    """size_i via the combinatorial model; see ``model_size_vector``."""
    return model_size_vector(t, k)[i]


def model_size_total(t: CartanType, k) -> Fraction:
    """Total size via the model: the per-type closed forms on the core."""
    _require_model(t)
    core = embed(t, k).core()
    lam = core.content_counts
    boxes = core.size
    if t.family == "G":
        return Fraction(boxes + 3 * lam[2])
    if t.family == "C":
        return Fraction(boxes)
    if t.family == "B":
        # summing the case formulas: the lam[n] class is counted with weight 1
        return Fraction(boxes - lam[0] + lam[t.rank], 2)
    return Fraction(boxes - lam[0] - lam[t.rank], 2)


def durfee_side(parts) -> int:
    return sum(1 for i, p in enumerate(parts, start=1) if p >= i)


def self_conjugate_cores(n: int, bound: int) -> list[tuple[tuple[int, ...], cores.CorePartition]]:
    """All self-conjugate 2n-cores with at most ``bound`` boxes, paired with
    their preimages in the C_n coroot lattice (simple-coroot coordinates)."""
    t = CartanType("C", n)
    out = []
    for parts in cores.all_cores(2 * n, bound):
        if parts != cores.conjugate(parts):
            continue
        image = cores.to_coroot(parts, 2 * n)
        assert image == tuple(-y for y in reversed(image)), "self-conjugate core image must be antisymmetric"
        k = from_ambient(t, image[:n])
        assert embed(t, k).image == image
        out.append((k, cores.CorePartition.from_partition(parts, 2 * n)))
    return out


def to_csv(t: CartanType, points) -> str:
    """CSV export: type, coroot coords, image tuple, core partition,
    per-index sizes, total size."""
    import csv
    import io
    import json

    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["type", "coords", "image", "partition", "sizes", "total_size"])
    for k in points:
        emb = embed(t, k)
        sizes = model_size_vector(t, k)
        writer.writerow([
            str(t),
            json.dumps(list(k)),
            json.dumps(list(emb.image)),
            json.dumps(list(emb.core().partition)),
            json.dumps([str(s) for s in sizes]),
            str(model_size_total(t, k)),
        ])
    return buf.getvalue()


def type_a_coords_from_ambient(q) -> tuple[int, ...]:
    """Type A_{a-1}: ambient sum-zero a-tuple -> simple-coroot coordinates."""
    if sum(q) != 0:
        raise ValueError(f"{q} must sum to zero")
    partial = []
    total = 0
    for x in q[:-1]:
        total += x
        partial.append(total)
    return tuple(partial)


def type_a_ambient_from_coords(k) -> tuple[int, ...]:
    prev = 0
    out = []
    for x in k:
        out.append(x - prev)
        prev = x
    out.append(-prev)
    return tuple(out)
