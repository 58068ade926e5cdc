"""Schur expansions of s_mu * (p_r o h_m) products, and their verification.

pmn_expand turns the strip chain enumeration into a signed Schur expansion;
pmn_expand_iterated folds one strip factor at a time, so products over two
partitions of factors reduce to repeated single-factor expansions.

The two verify_* entry points check the expansion against routes that do
not share its code path: verify_against_oracle multiplies alternants (the
determinant identity, exactly or at seeded modular points), while
verify_process_identity replays the bead-scanning process pair by pair.
"""

from dataclasses import dataclass

from .abacus import Monomial, all_abaci
from .partitions import Partition, SkewPartition, enumerate_supersets, sgn_r
from .polynomials import (
    SparsePolynomial,
    a_beta,
    a_beta_eval,
    h_eval,
    h_poly,
    plethysm_pr,
    seeded_points,
    shifted_beta,
)
from .process import enumerate_pairs, epsilon, weight_with_budget


class SchurExpansion:
    """An integer combination of Schur functions, keyed by partition.

    All partitions present must share one size (the terms of a homogeneous
    symmetric function do); zero coefficients are dropped.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        cleaned: dict[Partition, int] = {}
        if coeffs:
            items = coeffs.items() if isinstance(coeffs, dict) else coeffs
            for lam, c in items:
                c = int(c)
                if not c:
                    continue
                cleaned[lam] = cleaned.get(lam, 0) + c
        cleaned = {lam: c for lam, c in cleaned.items() if c}
        sizes = {lam.size for lam in cleaned}
        if len(sizes) > 1:
            raise ValueError(f"mixed homogeneous degrees: {sorted(sizes)}")
        self.coeffs = cleaned

    def coefficient(self, lam: Partition) -> int:
        return self.coeffs.get(lam, 0)

    def items(self) -> list[tuple[Partition, int]]:
        """(partition, coefficient) pairs, partitions lexicographically decreasing."""
        return sorted(self.coeffs.items(), key=lambda kv: kv[0].parts, reverse=True)

    def support(self) -> list[Partition]:
        return [lam for lam, _ in self.items()]

    def __len__(self):
        return len(self.coeffs)

    def __eq__(self, other):
        return isinstance(other, SchurExpansion) and self.coeffs == other.coeffs

    def __repr__(self):
        body = ", ".join(f"{lam}: {c}" for lam, c in self.items())
        return f"SchurExpansion({{{body}}})"

    def to_records(self) -> list[dict]:
        """JSON-ready term list in display order."""
        return [
            {"partition": list(lam.parts), "coeff": c} for lam, c in self.items()
        ]

    @classmethod
    def from_records(cls, records):
        return cls(
            (Partition(rec["partition"]), rec["coeff"]) for rec in records
        )


def pmn_expand(mu: Partition, r: int, m: int) -> SchurExpansion:
    """Schur expansion of s_mu * (p_r o h_m): signed sum over the shapes
    reachable from mu by m strips of size r along a top-monotone chain."""
    return SchurExpansion(enumerate_supersets(mu, r, m))


def pmn_expand_iterated(mu: Partition, rho: Partition, nu: Partition) -> SchurExpansion:
    """Schur expansion of s_mu * prod_{i,j} (p_{rho_i} o h_{nu_j}).

    Factors are applied one at a time in (i, j) lexicographic order; any
    order gives the same expansion since the factors commute.
    """
    if len(rho) == 0 or len(nu) == 0:
        raise ValueError("both factor partitions must be non-empty")
    current: dict[Partition, int] = {mu: 1}
    for r in rho.parts:
        for m in nu.parts:
            grown: dict[Partition, int] = {}
            for lam, c in current.items():
                for tau, s in enumerate_supersets(lam, r, m):
                    grown[tau] = grown.get(tau, 0) + c * s
            current = {lam: c for lam, c in grown.items() if c}
    return SchurExpansion(current)


@dataclass(frozen=True, slots=True)
class VerificationReport:
    ok: bool
    mode: str
    mu: Partition
    r: int
    m: int
    n_vars: int
    seed: int | None = None
    points: int = 0
    terms: int = 0
    detail: str = ""


def verify_against_oracle(
    mu: Partition,
    r: int,
    m: int,
    n_vars: int,
    mode: str = "symbolic",
    seed: int = 0,
    points: int = 20,
    max_vars: int = 8,
) -> VerificationReport:
    """Check a_{mu+delta} * (p_r o h_m) == sum of signed a_{lam+delta} over
    the expansion of pmn_expand(mu, r, m).

    mode 'symbolic' compares exact polynomials (guarded at max_vars);
    mode 'modular' compares values at `points` seeded points.  Both sides
    need n_vars at least |mu| + r*m so no shape in the sum is truncated.
    """
    if r < 1 or m < 1:
        raise ValueError("r and m must be positive")
    bound = mu.size + r * m
    if n_vars < bound:
        raise ValueError(
            f"need at least |mu| + r*m = {bound} variables, got {n_vars}"
        )
    expansion = pmn_expand(mu, r, m)
    mu_beta = shifted_beta(mu.parts, n_vars)

    if mode == "symbolic":
        lhs = a_beta(mu_beta, max_vars=max_vars) * plethysm_pr(
            h_poly(m, n_vars), r
        )
        rhs = SparsePolynomial.zero(n_vars)
        for lam, c in expansion.items():
            rhs = rhs + a_beta(shifted_beta(lam.parts, n_vars), max_vars=max_vars).scale(c)
        diff = lhs - rhs
        if diff.is_zero:
            return VerificationReport(
                ok=True,
                mode=mode,
                mu=mu,
                r=r,
                m=m,
                n_vars=n_vars,
                terms=len(expansion),
                detail=f"exact match on {len(lhs.terms)} monomials",
            )
        exps, coeff = diff.sorted_terms()[0]
        return VerificationReport(
            ok=False,
            mode=mode,
            mu=mu,
            r=r,
            m=m,
            n_vars=n_vars,
            terms=len(expansion),
            detail=f"first discrepancy: coefficient {coeff} on exponents {exps}",
        )

    if mode == "modular":
        for index, point in enumerate(seeded_points(n_vars, points, seed)):
            p = point.prime
            lhs_val = (
                a_beta_eval(mu_beta, point)
                * h_eval([pow(v, r, p) for v in point.values], m, p)
                % p
            )
            rhs_val = 0
            for lam, c in expansion.items():
                rhs_val = (
                    rhs_val
                    + c * a_beta_eval(shifted_beta(lam.parts, n_vars), point)
                ) % p
            if lhs_val != rhs_val:
                return VerificationReport(
                    ok=False,
                    mode=mode,
                    mu=mu,
                    r=r,
                    m=m,
                    n_vars=n_vars,
                    seed=seed,
                    points=points,
                    terms=len(expansion),
                    detail=(
                        f"mismatch at point {index}: "
                        f"lhs {lhs_val} != rhs {rhs_val} (mod {p})"
                    ),
                )
        return VerificationReport(
            ok=True,
            mode=mode,
            mu=mu,
            r=r,
            m=m,
            n_vars=n_vars,
            seed=seed,
            points=points,
            terms=len(expansion),
            detail=f"all {points} seeded points agree",
        )

    raise ValueError(f"unknown mode {mode!r}")


@dataclass(frozen=True, slots=True)
class ProcessIdentityReport:
    ok: bool
    mu: Partition
    r: int
    m: int
    n_beads: int
    n_pairs: int
    n_aborted: int
    n_completed: int
    detail: str = ""


def verify_process_identity(
    mu: Partition, r: int, m: int, n_beads: int
) -> ProcessIdentityReport:
    """Replay the scanning process over every pair and check both halves of
    the cancellation argument.

    Aborted pairs must cancel term by term under epsilon (partner aborted,
    sign reversed, combined weight kept, involution).  Completed pairs must
    biject onto the labelled abaci of the expansion support, matching the
    chain sign on every image, and their signed weights must regroup into
    the signed abacus sums of those shapes.

    Support shapes with more rows than beads cannot occur as images (a shape
    on n_beads beads has at most n_beads rows) and contribute nothing in
    n_beads variables, so they are left out of the bijection targets.
    """
    expansion = pmn_expand(mu, r, m)
    sign_of = {
        lam: c for lam, c in expansion.items() if len(lam) <= n_beads
    }

    def fail(n_pairs, n_aborted, n_completed, detail):
        return ProcessIdentityReport(
            False, mu, r, m, n_beads, n_pairs, n_aborted, n_completed, detail
        )

    aborted_sum = SparsePolynomial.zero(n_beads)
    completed_sum = SparsePolynomial.zero(n_beads)
    images: dict[Partition, set] = {}
    n_pairs = n_aborted = n_completed = 0

    for w, beta, trace in enumerate_pairs(mu, n_beads, r, m):
        n_pairs += 1
        wmono = weight_with_budget(w, beta, r).vector(n_beads)
        signed = SparsePolynomial.monomial(n_beads, wmono, w.sign())
        if trace.successful:
            n_completed += 1
            completed_sum = completed_sum + signed
            image = trace.outcome.abacus
            lam = image.shape()
            if lam not in sign_of:
                return fail(
                    n_pairs,
                    n_aborted,
                    n_completed,
                    f"completed pair landed on {lam}, outside the expansion support",
                )
            if image.sign() != sign_of[lam] * w.sign():
                return fail(
                    n_pairs,
                    n_aborted,
                    n_completed,
                    f"sign law broken on a completed pair with shape {lam}",
                )
            if image.weight().vector(n_beads) != wmono:
                return fail(
                    n_pairs,
                    n_aborted,
                    n_completed,
                    f"weight not conserved on a completed pair with shape {lam}",
                )
            bucket = images.setdefault(lam, set())
            if image in bucket:
                return fail(
                    n_pairs,
                    n_aborted,
                    n_completed,
                    f"two completed pairs share the image {image!r}",
                )
            bucket.add(image)
        else:
            n_aborted += 1
            aborted_sum = aborted_sum + signed
            w2, beta2 = epsilon(w, beta, r)
            if w2.sign() != -w.sign():
                return fail(
                    n_pairs, n_aborted, n_completed, "partner does not reverse sign"
                )
            if weight_with_budget(w2, beta2, r).vector(n_beads) != wmono:
                return fail(
                    n_pairs, n_aborted, n_completed, "partner changes the weight"
                )
            w3, beta3 = epsilon(w2, beta2, r)
            if w3 != w or beta3 != beta:
                return fail(
                    n_pairs, n_aborted, n_completed, "pairing is not an involution"
                )

    if not aborted_sum.is_zero:
        return fail(
            n_pairs, n_aborted, n_completed, "aborted pairs do not cancel"
        )

    regrouped = SparsePolynomial.zero(n_beads)
    for lam, c in sign_of.items():
        hits = images.get(lam, set())
        expected = set(all_abaci(lam, n_beads, max_beads=n_beads))
        if hits != expected:
            return fail(
                n_pairs,
                n_aborted,
                n_completed,
                f"completed pairs miss {len(expected - hits)} labellings of {lam}",
            )
        for u in expected:
            regrouped = regrouped + SparsePolynomial.monomial(
                n_beads, u.weight().vector(n_beads), c * u.sign()
            )
    if regrouped != completed_sum:
        return fail(
            n_pairs,
            n_aborted,
            n_completed,
            "completed pairs do not regroup into the signed shape sums",
        )

    return ProcessIdentityReport(
        True,
        mu,
        r,
        m,
        n_beads,
        n_pairs,
        n_aborted,
        n_completed,
        f"{n_aborted} aborted pairs cancel, {n_completed} completed pairs regroup",
    )
