"""The bead-scanning process on (abacus, move budget) pairs.

run_process walks the runner slot by slot.  Whenever the scan reaches a
bead whose budget entry is still positive, the bead is shifted r slots to
the right, its budget entry drops by one, and the scan continues from the
next slot; landing on an occupied slot aborts the run.  The budget
exhausting itself completes the run.

Aborted pairs cancel in couples: `epsilon` swaps the two colliding beads
and shifts budget mass between them, reversing the sign of the abacus while
keeping its combined weight.  Completed pairs correspond one-to-one with
labelled abaci of the grown shapes via `psi`.  Together these two maps are
the engine behind the expansion module.
"""

import os
from dataclasses import dataclass
from math import comb, factorial

from .abacus import Collision, LabelledAbacus, Monomial, all_abaci
from .partitions import Partition, SkewPartition, r_decompose
from .polynomials import compositions

DEFAULT_PAIR_BUDGET = 10_000_000


def pair_budget() -> int:
    """Enumeration cap; override with the PLETHAX_BUDGET environment variable."""
    raw = os.environ.get("PLETHAX_BUDGET")
    return DEFAULT_PAIR_BUDGET if raw is None else int(raw)


@dataclass(frozen=True, slots=True)
class Composition:
    """Fixed-length tuple of nonnegative move counts, indexed by bead label."""

    entries: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(
            self, "entries", tuple(int(e) for e in self.entries)
        )
        if any(e < 0 for e in self.entries):
            raise ValueError(f"move counts must be nonnegative: {self.entries}")

    @property
    def total(self) -> int:
        return sum(self.entries)

    def entry(self, bead: int) -> int:
        """Move count of the bead with the given 1-based label."""
        if not 1 <= bead <= len(self.entries):
            raise ValueError(f"no entry for bead {bead}")
        return self.entries[bead - 1]

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __str__(self):
        return "(" + ",".join(str(e) for e in self.entries) + ")"


@dataclass(frozen=True, slots=True)
class ProcessStep:
    """One scan event: what happened at slot `position`.

    action is one of 'skip-empty', 'skip-exhausted', 'moved', 'collided'.
    abacus and alpha are the state after the event; strip_top is the rank of
    the landing slot for 'moved' steps and None otherwise.
    """

    position: int
    bead: int
    action: str
    abacus: LabelledAbacus
    alpha: tuple[int, ...]
    strip_top: int | None = None


@dataclass(frozen=True, slots=True)
class Successful:
    abacus: LabelledAbacus


@dataclass(frozen=True, slots=True)
class Unsuccessful:
    bead: int
    blocker: int
    position: int


@dataclass(frozen=True, slots=True)
class ProcessTrace:
    initial: LabelledAbacus
    beta: Composition
    r: int
    steps: tuple[ProcessStep, ...]
    outcome: Successful | Unsuccessful

    @property
    def successful(self) -> bool:
        return isinstance(self.outcome, Successful)

    @property
    def moves(self) -> tuple[ProcessStep, ...]:
        return tuple(s for s in self.steps if s.action == "moved")

    def shapes(self) -> list[Partition]:
        """Shape trajectory: initial shape, then after each move."""
        return [self.initial.shape()] + [s.abacus.shape() for s in self.moves]


def run_process(w: LabelledAbacus, beta, r: int, record_steps: bool = True):
    """Scan the runner and spend the budget; returns the full ProcessTrace.

    With record_steps=False the steps tuple is left empty (the outcome and
    the move bookkeeping are unchanged), which the bulk sweeps rely on.
    """
    beta = beta if isinstance(beta, Composition) else Composition(tuple(beta))
    if len(beta) != w.n_beads:
        raise ValueError(
            f"budget has {len(beta)} entries for {w.n_beads} beads"
        )
    if r < 1:
        raise ValueError(f"shift distance must be positive, got {r}")

    alpha = list(beta.entries)
    remaining = sum(alpha)
    steps: list[ProcessStep] = []
    v = w
    if remaining == 0:
        return ProcessTrace(w, beta, r, (), Successful(v))

    last_source = -1
    last_top = w.n_beads + 1
    limit = max(w.support(), default=0) + r * remaining
    i = 0
    while i <= limit:
        bead = v.slot(i)
        if bead == 0:
            if record_steps:
                steps.append(ProcessStep(i, 0, "skip-empty", v, tuple(alpha)))
        elif alpha[bead - 1] == 0:
            if record_steps:
                steps.append(
                    ProcessStep(i, bead, "skip-exhausted", v, tuple(alpha))
                )
        else:
            moved = v.r_move(bead, r)
            if isinstance(moved, Collision):
                if record_steps:
                    steps.append(
                        ProcessStep(i, bead, "collided", v, tuple(alpha))
                    )
                return ProcessTrace(
                    w, beta, r, tuple(steps), Unsuccessful(bead, moved.blocker, i)
                )
            alpha[bead - 1] -= 1
            remaining -= 1
            v = moved
            top = v.support().index(i + r) + 1
            # Completed runs realise the strictly-increasing-source /
            # weakly-decreasing-top pattern that indexes move sequences.
            assert i > last_source and top <= last_top
            last_source, last_top = i, top
            if record_steps:
                steps.append(
                    ProcessStep(i, bead, "moved", v, tuple(alpha), strip_top=top)
                )
            if remaining == 0:
                return ProcessTrace(w, beta, r, tuple(steps), Successful(v))
        i += 1
    raise AssertionError("scan passed every bead with budget left")


def epsilon(w: LabelledAbacus, beta, r: int):
    """Partner of an aborted pair: swap the colliding beads and move the
    collision's slack between their budget entries.

    Returns (abacus, composition).  The partner aborts at the same scan
    position with the same two beads, has opposite sign and the same
    combined weight, and epsilon applied twice gives back the input.
    Raises ValueError on pairs whose run completes.
    """
    beta = beta if isinstance(beta, Composition) else Composition(tuple(beta))
    trace = run_process(w, beta, r, record_steps=False)
    if trace.successful:
        raise ValueError("epsilon is defined only for aborted pairs")
    bead = trace.outcome.bead
    blocker = trace.outcome.blocker
    gap = w.position(blocker) - w.position(bead)
    assert gap > 0 and gap % r == 0
    delta = gap // r
    entries = list(beta.entries)
    entries[bead - 1] -= delta
    entries[blocker - 1] += delta
    assert entries[bead - 1] >= 0
    return w.swap(bead, blocker), Composition(tuple(entries))


def psi(w: LabelledAbacus, beta, r: int) -> LabelledAbacus:
    """Final abacus of a completed run; raises ValueError on aborted pairs."""
    trace = run_process(w, beta, r, record_steps=False)
    if not trace.successful:
        raise ValueError("psi is defined only for completed pairs")
    return trace.outcome.abacus


def enumerate_pairs(mu: Partition, n_beads: int, r: int, m: int):
    """Yield (abacus, composition, trace) over every labelling of mu times
    every budget of total m.

    The number of pairs is n! * C(m+n-1, n-1); enumeration refuses to start
    past pair_budget().
    """
    total = factorial(n_beads) * comb(m + n_beads - 1, n_beads - 1)
    budget = pair_budget()
    if total > budget:
        raise ValueError(
            f"{total} pairs exceeds the enumeration budget {budget}; "
            f"set PLETHAX_BUDGET higher to proceed"
        )
    for w in all_abaci(mu, n_beads, max_beads=n_beads):
        for entries in compositions(m, n_beads):
            beta = Composition(entries)
            yield w, beta, run_process(w, beta, r, record_steps=False)


def k_set(mu: Partition, lam: Partition, n_beads: int, r: int, m: int):
    """All move sequences (w0, ..., wm) from shape mu to shape lam where step
    j shifts one bead of w(j-1) exactly r slots right, from source slots that
    strictly increase with j.

    Either empty or of size n_beads factorial: the shape chain of any valid
    sequence is forced, so each final labelling extends backwards uniquely
    by undoing one strip per step, rightmost rank first.
    """
    if lam.size - mu.size != r * m or not lam.contains(mu):
        return []
    chain = r_decompose(SkewPartition(lam, mu), r)
    if chain is None:
        return []
    count = factorial(n_beads)
    budget = pair_budget()
    if count > budget:
        raise ValueError(
            f"{count} sequences exceeds the enumeration budget {budget}; "
            f"set PLETHAX_BUDGET higher to proceed"
        )
    sequences = []
    for final in all_abaci(lam, n_beads, max_beads=n_beads):
        seq = [final]
        sources = []
        v = final
        for t in reversed(chain.tops):
            bead = v.tth_rightmost(t)
            v = v.left_r_move(bead, r)
            sources.append(v.position(bead))
            seq.append(v)
        seq.reverse()
        sources.reverse()
        assert seq[0].shape() == mu
        assert all(a < b for a, b in zip(sources, sources[1:]))
        sequences.append(tuple(seq))
    return sequences


def weight_with_budget(
    w: LabelledAbacus, beta, r: int
) -> Monomial:
    """The invariant the process conserves: weight(w) times x^(r * beta)."""
    beta = beta if isinstance(beta, Composition) else Composition(tuple(beta))
    return w.weight() * Monomial.from_vector(tuple(r * e for e in beta.entries))
