"""Integer partitions, skew shapes, and border-strip combinatorics.

Partitions are weakly decreasing tuples of positive integers.  Row indices
are 1-based throughout, with ``part(i) == 0`` past the last row, so skew
shapes, strip tops and strip bottoms read the way Young diagrams are drawn.

Strip lookup works on bead positions: a partition seen through n beads is
the strictly decreasing sequence ``part(j) + n - j``, and removing a strip
of size r is the same as shifting one bead r slots to the left.  That makes
the chain peeling and the superset enumeration cheap and collision-free.
"""

from dataclasses import dataclass


class Partition:
    """A weakly decreasing sequence of positive integers.

    Trailing zeros are stripped on construction, so inputs differing only by
    attached zeros compare equal.  Increasing adjacent entries or negative
    entries raise ValueError.
    """

    __slots__ = ("parts",)

    def __init__(self, parts=()):
        cleaned = [int(p) for p in parts]
        while cleaned and cleaned[-1] == 0:
            cleaned.pop()
        if any(p < 0 for p in cleaned):
            raise ValueError(f"partition entries must be nonnegative: {cleaned}")
        for a, b in zip(cleaned, cleaned[1:]):
            if a < b:
                raise ValueError(
                    f"partition entries must be weakly decreasing: {a} before {b}"
                )
        self.parts = tuple(cleaned)

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __len__(self):
        return len(self.parts)

    def part(self, i: int) -> int:
        """Row length at 1-based row i; zero beyond the last row."""
        if i < 1:
            raise ValueError(f"row index must be >= 1, got {i}")
        return self.parts[i - 1] if i <= len(self.parts) else 0

    def contains(self, other) -> bool:
        """Containment of Young diagrams, row by row."""
        return all(other.part(i) <= self.part(i) for i in range(1, len(other) + 1))

    def __iter__(self):
        return iter(self.parts)

    def __eq__(self, other):
        return isinstance(other, Partition) and self.parts == other.parts

    def __hash__(self):
        return hash(self.parts)

    def __lt__(self, other):
        return self.parts < other.parts

    def __le__(self, other):
        return self.parts <= other.parts

    def __repr__(self):
        return f"Partition({self.parts!r})"

    def __str__(self):
        return "(" + ",".join(str(p) for p in self.parts) + ")"


def partitions_of(n: int, max_length: int | None = None):
    """Yield all partitions of n (optionally with at most max_length rows).

    Output is in decreasing lexicographic order, starting at (n).
    """
    if n < 0:
        raise ValueError("cannot partition a negative integer")
    limit = n if max_length is None else min(max_length, n)

    def rec(remaining, cap, rows_left, prefix):
        if remaining == 0:
            yield Partition(prefix)
            return
        if rows_left == 0:
            return
        for p in range(min(cap, remaining), 0, -1):
            yield from rec(remaining - p, p, rows_left - 1, prefix + [p])

    yield from rec(n, n, limit, [])


class SkewPartition:
    """A nested pair of partitions inner <= outer, read as outer/inner."""

    __slots__ = ("outer", "inner")

    def __init__(self, outer: Partition, inner: Partition):
        if not outer.contains(inner):
            raise ValueError(f"{inner} is not contained in {outer}")
        self.outer = outer
        self.inner = inner

    @property
    def size(self) -> int:
        return self.outer.size - self.inner.size

    @property
    def top(self) -> int:
        """Least 1-based row where outer and inner differ; 0 if they are equal."""
        for i in range(1, len(self.outer) + 1):
            if self.outer.part(i) != self.inner.part(i):
                return i
        return 0

    @property
    def bottom(self) -> int:
        """Greatest 1-based row where outer and inner differ; 0 if equal."""
        for i in range(len(self.outer), 0, -1):
            if self.outer.part(i) != self.inner.part(i):
                return i
        return 0

    def cells(self) -> list[tuple[int, int]]:
        """All (row, column) cells of the skew diagram, 1-based."""
        return [
            (i, j)
            for i in range(1, len(self.outer) + 1)
            for j in range(self.inner.part(i) + 1, self.outer.part(i) + 1)
        ]

    def __eq__(self, other):
        return (
            isinstance(other, SkewPartition)
            and self.outer == other.outer
            and self.inner == other.inner
        )

    def __hash__(self):
        return hash((self.outer, self.inner))

    def __repr__(self):
        return f"SkewPartition({self.outer!r}, {self.inner!r})"

    def __str__(self):
        return f"{self.outer}/{self.inner}"


def strip_sign(skew: SkewPartition) -> int:
    """(-1) ** (bottom - top), the sign a border strip contributes."""
    return -1 if (skew.bottom - skew.top) % 2 else 1


def is_border_strip(skew: SkewPartition, r: int) -> bool:
    """True when the skew diagram is r edge-connected cells with no 2x2 descent.

    A border strip never contains both (i, j) and (i+1, j+1); together with
    edge-connectivity that pins the familiar ribbon shape.
    """
    if r < 1:
        raise ValueError(f"strip size must be positive, got {r}")
    cells = skew.cells()
    if len(cells) != r:
        return False
    cellset = set(cells)
    for (i, j) in cells:
        if (i + 1, j + 1) in cellset:
            return False
    seen = {cells[0]}
    frontier = [cells[0]]
    while frontier:
        i, j = frontier.pop()
        for nbr in ((i + 1, j), (i - 1, j), (i, j + 1), (i, j - 1)):
            if nbr in cellset and nbr not in seen:
                seen.add(nbr)
                frontier.append(nbr)
    return len(seen) == len(cells)


def bead_positions(lam: Partition, n_beads: int) -> tuple[int, ...]:
    """Strictly decreasing runner positions part(j) + n - j encoding lam.

    Requires n_beads >= len(lam); rows past the last are zero parts.
    """
    if n_beads < len(lam):
        raise ValueError(f"{lam} needs at least {len(lam)} beads, got {n_beads}")
    return tuple(lam.part(j) + n_beads - j for j in range(1, n_beads + 1))


def partition_from_positions(positions) -> Partition:
    """Recover the partition encoded by a set of distinct runner positions."""
    desc = sorted(positions, reverse=True)
    n = len(desc)
    return Partition(desc[j - 1] - (n - j) for j in range(1, n + 1))


def border_strip_with_top(lam: Partition, r: int, t: int) -> Partition | None:
    """Inner shape of the r-border strip of lam whose top row is t, or None.

    There is at most one such strip: on the runner it is the t-th rightmost
    bead moved r slots left, which fails only when the landing slot is
    occupied or negative.
    """
    if r < 1:
        raise ValueError(f"strip size must be positive, got {r}")
    if t < 1:
        raise ValueError(f"top row must be >= 1, got {t}")
    if t > len(lam):
        return None
    pos = bead_positions(lam, len(lam))
    target = pos[t - 1] - r
    if target < 0 or target in pos:
        return None
    return partition_from_positions(pos[: t - 1] + (target,) + pos[t:])


@dataclass(frozen=True)
class BorderStripChain:
    """A nested chain of shapes whose consecutive differences are r-border
    strips with weakly decreasing tops.

    shapes runs from the inner shape up to the outer one, so it has one more
    entry than tops, bottoms and strip_signs.
    """

    r: int
    shapes: tuple[Partition, ...]
    tops: tuple[int, ...]
    bottoms: tuple[int, ...]
    strip_signs: tuple[int, ...]

    @property
    def d(self) -> int:
        """Number of strips in the chain."""
        return len(self.shapes) - 1

    @property
    def sign(self) -> int:
        out = 1
        for s in self.strip_signs:
            out *= s
        return out


def r_decompose(skew: SkewPartition, r: int) -> BorderStripChain | None:
    """The unique border-strip chain from inner to outer, or None.

    Peels from the outer shape downward: the last strip of a valid chain is
    forced to have top equal to the top of the whole skew shape, so peeling
    that strip and recursing either finds the chain or proves there is none.
    Tops along the peel are automatically weakly increasing because each
    removal leaves the rows above its top untouched.
    """
    if r < 1:
        raise ValueError(f"strip size must be positive, got {r}")
    total = skew.size
    if total % r:
        return None
    shapes = [skew.outer]
    tops: list[int] = []
    bottoms: list[int] = []
    signs: list[int] = []
    current = skew.outer
    for _ in range(total // r):
        if not current.contains(skew.inner):
            return None
        t = SkewPartition(current, skew.inner).top
        nu = border_strip_with_top(current, r, t)
        if nu is None:
            return None
        strip = SkewPartition(current, nu)
        tops.append(strip.top)
        bottoms.append(strip.bottom)
        signs.append(strip_sign(strip))
        current = nu
        shapes.append(current)
    if current != skew.inner:
        return None
    shapes.reverse()
    tops.reverse()
    bottoms.reverse()
    signs.reverse()
    return BorderStripChain(
        r=r,
        shapes=tuple(shapes),
        tops=tuple(tops),
        bottoms=tuple(bottoms),
        strip_signs=tuple(signs),
    )


def sgn_r(skew: SkewPartition, r: int) -> int:
    """Product of strip signs along the unique chain, or 0 when there is none."""
    chain = r_decompose(skew, r)
    return 0 if chain is None else chain.sign


def enumerate_supersets(mu: Partition, r: int, m: int) -> list[tuple[Partition, int]]:
    """All lam obtained from mu by adding m strips of size r along a chain
    with weakly decreasing tops, paired with the chain sign.

    Output is sorted in decreasing lexicographic order of lam.  Chain
    uniqueness means a depth-first search over strip additions (each new top
    at most the previous one) reaches every valid lam exactly once.
    """
    if r < 1:
        raise ValueError(f"strip size must be positive, got {r}")
    if m < 0:
        raise ValueError(f"strip count must be nonnegative, got {m}")
    if m == 0:
        return [(mu, 1)]
    n = len(mu) + r * m
    found: list[tuple[Partition, int]] = []

    def extend(pos: tuple[int, ...], left: int, max_top: int, sign: int):
        if left == 0:
            found.append((partition_from_positions(pos), sign))
            return
        posset = set(pos)
        for idx, y in enumerate(pos):
            target = y + r
            if target in posset:
                continue
            jumped = sum(1 for q in pos if y < q < target)
            t = idx + 1 - jumped
            if t > max_top:
                continue
            newpos = tuple(sorted((posset - {y}) | {target}, reverse=True))
            extend(newpos, left - 1, t, -sign if jumped % 2 else sign)

    extend(bead_positions(mu, n), m, n, 1)
    assert len({lam.parts for lam, _ in found}) == len(found)
    found.sort(key=lambda entry: entry[0].parts, reverse=True)
    return found
