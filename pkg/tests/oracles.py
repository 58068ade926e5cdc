"""Brute-force reference implementations, used only to cross-check.

Everything here works cell by cell on Young diagrams and by exhaustive
search over partitions, deliberately avoiding the bead-position shortcuts
the package uses, so the two routes fail independently.
"""

from plethax import Partition, SkewPartition, is_border_strip, partitions_of, strip_sign


def subpartitions(lam: Partition):
    """Every partition contained in lam."""

    def rec(row, cap, prefix):
        if row > len(lam):
            yield Partition(prefix)
            return
        for p in range(min(cap, lam.part(row)), -1, -1):
            yield from rec(row + 1, p, prefix + [p])

    yield from rec(1, lam.part(1), [])


def strips_below(shape: Partition, r: int) -> list[Partition]:
    """Inner shapes nu such that shape/nu is an r-border strip, by scanning
    every partition of |shape| - r."""
    if shape.size < r:
        return []
    out = []
    for nu in partitions_of(shape.size - r):
        if shape.contains(nu) and is_border_strip(SkewPartition(shape, nu), r):
            out.append(nu)
    return out


def count_monotone_chains(outer: Partition, inner: Partition, r: int) -> int:
    """Number of strip chains from inner to outer whose tops weakly decrease
    bottom-up, by exhaustive peel."""
    if (outer.size - inner.size) % r:
        return 0

    def rec(shape, min_top):
        if shape == inner:
            return 1
        total = 0
        for nu in strips_below(shape, r):
            if not nu.contains(inner):
                continue
            strip = SkewPartition(shape, nu)
            if strip.top >= min_top:
                total += rec(nu, strip.top)
        return total

    return rec(outer, 1)


def chain_sign_by_search(outer: Partition, inner: Partition, r: int) -> int:
    """Sign of the unique monotone chain found by exhaustive peel, or 0."""
    if (outer.size - inner.size) % r:
        return 0

    def rec(shape, min_top):
        if shape == inner:
            return [1]
        signs = []
        for nu in strips_below(shape, r):
            if not nu.contains(inner):
                continue
            strip = SkewPartition(shape, nu)
            if strip.top >= min_top:
                signs.extend(
                    strip_sign(strip) * s for s in rec(nu, strip.top)
                )
        return signs

    signs = rec(outer, 1)
    assert len(signs) <= 1
    return signs[0] if signs else 0


def is_horizontal_strip(lam: Partition, mu: Partition) -> bool:
    """lam/mu has at most one cell per column: mu interleaves lam."""
    if not lam.contains(mu):
        return False
    return all(mu.part(i) >= lam.part(i + 1) for i in range(1, len(lam) + 1))


def young_rule(mu: Partition, m: int) -> dict[Partition, int]:
    """Adding m cells, no two in a column: every horizontal strip, weight 1."""
    return {
        lam: 1
        for lam in partitions_of(mu.size + m)
        if is_horizontal_strip(lam, mu)
    }


def single_strip_rule(mu: Partition, r: int) -> dict[Partition, int]:
    """Adding one r-border strip: cell-based scan with the ribbon sign."""
    out = {}
    for lam in partitions_of(mu.size + r):
        if not lam.contains(mu):
            continue
        skew = SkewPartition(lam, mu)
        if is_border_strip(skew, r):
            out[lam] = strip_sign(skew)
    return out
