"""Exact sparse polynomials over the integers, plus alternant determinants
and modular evaluation.

This module is the reference side of every identity check in the package:
it expands complete homogeneous sums, power-sum substitutions and the
determinants det(x_i^{b_j}) directly, without touching the strip or abacus
machinery, so agreement between the two routes is meaningful.

Everything is exact.  Coefficients are Python ints; the modular path exists
only to evaluate determinants too large to expand, at seeded points modulo
one fixed prime.
"""

import random
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations

DEFAULT_PRIME = 2_147_483_647  # 2**31 - 1


def compositions(total: int, length: int):
    """Yield every tuple of `length` nonnegative ints summing to `total`."""
    if total < 0 or length < 0:
        raise ValueError("compositions need nonnegative total and length")
    if length == 0:
        if total == 0:
            yield ()
        return
    for bars in combinations(range(total + length - 1), length - 1):
        prev = -1
        parts = []
        for b in bars:
            parts.append(b - prev - 1)
            prev = b
        parts.append(total + length - 1 - prev - 1)
        yield tuple(parts)


def _grevlex_key(exponents):
    return (-sum(exponents), tuple(reversed(exponents)))


class SparsePolynomial:
    """Multivariate polynomial as a map from exponent tuples to nonzero ints."""

    __slots__ = ("n_vars", "terms")

    def __init__(self, n_vars: int, terms=None):
        if n_vars < 0:
            raise ValueError(f"n_vars must be nonnegative, got {n_vars}")
        self.n_vars = n_vars
        cleaned: dict[tuple[int, ...], int] = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for exps, coeff in items:
                exps = tuple(int(e) for e in exps)
                if len(exps) != n_vars:
                    raise ValueError(
                        f"exponent tuple {exps} does not have {n_vars} entries"
                    )
                if any(e < 0 for e in exps):
                    raise ValueError(f"negative exponent in {exps}")
                coeff = cleaned.get(exps, 0) + int(coeff)
                if coeff:
                    cleaned[exps] = coeff
                else:
                    cleaned.pop(exps, None)
        self.terms = cleaned

    @classmethod
    def zero(cls, n_vars: int):
        return cls(n_vars)

    @classmethod
    def monomial(cls, n_vars: int, exponents, coeff: int = 1):
        return cls(n_vars, {tuple(exponents): coeff})

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def sorted_terms(self) -> list[tuple[tuple[int, ...], int]]:
        """Terms in graded reverse-lexicographic order, largest first."""
        return sorted(self.terms.items(), key=lambda kv: _grevlex_key(kv[0]))

    def scale(self, c: int):
        if c == 0:
            return SparsePolynomial(self.n_vars)
        return SparsePolynomial(
            self.n_vars, {e: c * v for e, v in self.terms.items()}
        )

    def _check_compatible(self, other):
        if not isinstance(other, SparsePolynomial):
            raise TypeError(f"expected SparsePolynomial, got {type(other).__name__}")
        if self.n_vars != other.n_vars:
            raise ValueError(
                f"mixed variable counts: {self.n_vars} vs {other.n_vars}"
            )

    def __add__(self, other):
        self._check_compatible(other)
        acc = dict(self.terms)
        for e, v in other.terms.items():
            s = acc.get(e, 0) + v
            if s:
                acc[e] = s
            else:
                acc.pop(e, None)
        out = SparsePolynomial(self.n_vars)
        out.terms = acc
        return out

    def __sub__(self, other):
        return self + other.scale(-1)

    def __neg__(self):
        return self.scale(-1)

    def __mul__(self, other):
        self._check_compatible(other)
        acc: dict[tuple[int, ...], int] = {}
        get = acc.get
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                key = tuple(a + b for a, b in zip(e1, e2))
                acc[key] = get(key, 0) + c1 * c2
        out = SparsePolynomial(self.n_vars)
        out.terms = {e: v for e, v in acc.items() if v}
        return out

    def __eq__(self, other):
        return (
            isinstance(other, SparsePolynomial)
            and self.n_vars == other.n_vars
            and self.terms == other.terms
        )

    def evaluate(self, point: "EvalPoint") -> int:
        """Value at the point, reduced modulo the point's prime."""
        if len(point.values) != self.n_vars:
            raise ValueError(
                f"point has {len(point.values)} coordinates, need {self.n_vars}"
            )
        p = point.prime
        total = 0
        for exps, coeff in self.terms.items():
            term = coeff % p
            for v, e in zip(point.values, exps):
                if e:
                    term = term * pow(v, e, p) % p
            total = (total + term) % p
        return total

    def render(self) -> str:
        """One term per line, 'coeff * x1^e1 x3^e3' style, grevlex order.

        Zero exponents are omitted; the zero polynomial renders as '0'.
        """
        if self.is_zero:
            return "0"
        lines = []
        for exps, coeff in self.sorted_terms():
            vars_part = " ".join(
                f"x{i}" if e == 1 else f"x{i}^{e}"
                for i, e in enumerate(exps, start=1)
                if e
            )
            lines.append(f"{coeff} * {vars_part}" if vars_part else str(coeff))
        return "\n".join(lines)

    def to_records(self) -> list[dict]:
        """JSON-ready term list in grevlex order."""
        return [
            {"coeff": coeff, "exponents": list(exps)}
            for exps, coeff in self.sorted_terms()
        ]

    @classmethod
    def from_records(cls, n_vars: int, records):
        return cls(
            n_vars, ((tuple(rec["exponents"]), rec["coeff"]) for rec in records)
        )

    def __repr__(self):
        return f"SparsePolynomial({self.n_vars}, {self.terms!r})"


def h_poly(m: int, n_vars: int) -> SparsePolynomial:
    """Complete homogeneous sum of degree m: one term per exponent vector."""
    if m < 1:
        raise ValueError(f"degree must be positive, got {m}")
    return SparsePolynomial(
        n_vars, ((c, 1) for c in compositions(m, n_vars))
    )


def p_poly(r: int, n_vars: int) -> SparsePolynomial:
    """Power sum x1^r + ... + xN^r."""
    if r < 1:
        raise ValueError(f"degree must be positive, got {r}")
    terms = []
    for i in range(n_vars):
        exps = [0] * n_vars
        exps[i] = r
        terms.append((tuple(exps), 1))
    return SparsePolynomial(n_vars, terms)


def plethysm_pr(g: SparsePolynomial, r: int) -> SparsePolynomial:
    """Substitute x_i -> x_i^r into g, i.e. multiply every exponent by r."""
    if r < 1:
        raise ValueError(f"substitution degree must be positive, got {r}")
    out = SparsePolynomial(g.n_vars)
    out.terms = {
        tuple(e * r for e in exps): coeff for exps, coeff in g.terms.items()
    }
    return out


def _permutation_sign(perm) -> int:
    seen = [False] * len(perm)
    sign = 1
    for start in range(len(perm)):
        if seen[start]:
            continue
        length = 0
        j = start
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


@lru_cache(maxsize=None)
def _permutation_signs(n: int) -> tuple[int, ...]:
    """Signs aligned with the iteration order of itertools.permutations."""
    return tuple(_permutation_sign(p) for p in permutations(range(n)))


def a_beta(beta, max_vars: int = 8) -> SparsePolynomial:
    """The alternant det(x_i^{beta_j}) expanded as a signed sum over
    permutations of beta.

    Zero when beta has a repeated entry.  Guarded at max_vars variables
    (the expansion has n! terms); pass a bigger max_vars deliberately.
    """
    beta = tuple(int(b) for b in beta)
    n = len(beta)
    if any(b < 0 for b in beta):
        raise ValueError(f"exponents must be nonnegative: {beta}")
    if n > max_vars:
        raise ValueError(
            f"{n}-variable alternant is past the guard ({max_vars}); "
            f"pass max_vars={n} to force the symbolic expansion"
        )
    if len(set(beta)) < n:
        return SparsePolynomial.zero(n)
    out = SparsePolynomial(n)
    out.terms = dict(zip(permutations(beta), _permutation_signs(n)))
    return out


@dataclass(frozen=True, slots=True)
class EvalPoint:
    """Coordinates for modular evaluation, all reduced modulo `prime`."""

    values: tuple[int, ...]
    prime: int = DEFAULT_PRIME

    def __post_init__(self):
        if self.prime <= 2**30:
            raise ValueError(f"prime must exceed 2**30, got {self.prime}")
        object.__setattr__(self, "values", tuple(int(v) for v in self.values))
        if any(not 0 <= v < self.prime for v in self.values):
            raise ValueError("coordinates must lie in [0, prime)")


def seeded_points(
    n_vars: int, count: int, seed: int, prime: int = DEFAULT_PRIME
) -> list[EvalPoint]:
    """Deterministic evaluation points: uniform coordinates from `seed`."""
    rng = random.Random(seed)
    return [
        EvalPoint(tuple(rng.randrange(prime) for _ in range(n_vars)), prime)
        for _ in range(count)
    ]


def a_beta_eval(beta, point: EvalPoint) -> int:
    """det(values_i ^ beta_j) modulo the point's prime, by elimination."""
    beta = tuple(int(b) for b in beta)
    n = len(beta)
    if len(point.values) != n:
        raise ValueError(
            f"point has {len(point.values)} coordinates, need {n}"
        )
    p = point.prime
    rows = [[pow(v, b, p) for b in beta] for v in point.values]
    det = 1
    for col in range(n):
        pivot = next((k for k in range(col, n) if rows[k][col]), None)
        if pivot is None:
            return 0
        if pivot != col:
            rows[col], rows[pivot] = rows[pivot], rows[col]
            det = -det
        lead = rows[col][col]
        det = det * lead % p
        inv = pow(lead, -1, p)
        for k in range(col + 1, n):
            factor = rows[k][col] * inv % p
            if factor:
                rk = rows[k]
                rc = rows[col]
                for j in range(col, n):
                    rk[j] = (rk[j] - factor * rc[j]) % p
    return det % p


def h_eval(values, m: int, prime: int = DEFAULT_PRIME) -> int:
    """Complete homogeneous sum of degree m at the given coordinates mod prime.

    Power sums feed the recurrence k*h_k = sum_j p_j * h_{k-j}, so no
    exponential term expansion is needed.
    """
    if m < 0:
        raise ValueError(f"degree must be nonnegative, got {m}")
    values = [int(v) % prime for v in values]
    psums = [
        sum(pow(v, k, prime) for v in values) % prime for k in range(1, m + 1)
    ]
    h = [1] + [0] * m
    for k in range(1, m + 1):
        acc = sum(psums[j - 1] * h[k - j] for j in range(1, k + 1)) % prime
        h[k] = acc * pow(k, -1, prime) % prime
    return h[m]


def staircase(n_vars: int) -> tuple[int, ...]:
    """(n-1, n-2, ..., 1, 0)."""
    return tuple(range(n_vars - 1, -1, -1))


def shifted_beta(parts, n_vars: int) -> tuple[int, ...]:
    """Exponent vector part_i + n - i for i = 1..n, with missing parts zero."""
    parts = tuple(parts)
    if len(parts) > n_vars:
        raise ValueError(
            f"{len(parts)} parts do not fit in {n_vars} variables"
        )
    return tuple(
        (parts[i - 1] if i <= len(parts) else 0) + n_vars - i
        for i in range(1, n_vars + 1)
    )
