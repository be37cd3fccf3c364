"""Symmetric polynomials in the monomial basis, Schur polynomials and the
Schur expansion, characters of the tensor constructions under study, and the
Cauchy-type coefficient checks.

A SymPoly stores integer coefficients keyed by partitions (dominant weights):
f = sum over keys lam of coeffs[lam] * m_lam, where m_lam is the sum of the
distinct monomials x^mu over rearrangements mu of lam.  All arithmetic is
exact integer arithmetic.
"""

from collections import Counter
from dataclasses import dataclass
from functools import cache
from itertools import combinations, combinations_with_replacement, permutations
from math import factorial

from .correspondences import enumerate_matrices
from .partitions import check_partition, conjugate, partitions_of
from .tableaux import kostka


class VarCountMismatch(ValueError):
    pass


class NonTermination(RuntimeError):
    pass


def _strip(v) -> tuple[int, ...]:
    v = tuple(v)
    while v and v[-1] == 0:
        v = v[:-1]
    return v


class SymPoly:
    """A symmetric polynomial in a fixed number of variables, monomial basis."""

    __slots__ = ("nvars", "coeffs")

    def __init__(self, nvars: int, coeffs=None):
        self.nvars = nvars
        cleaned = {}
        for key, c in (coeffs or {}).items():
            key = check_partition(key)
            if len(key) > nvars:
                raise ValueError(f"key {key} has more than {nvars} parts")
            if c:
                cleaned[key] = c
        self.coeffs = cleaned

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SymPoly)
            and self.nvars == other.nvars
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.nvars, frozenset(self.coeffs.items())))

    def __repr__(self) -> str:
        if not self.coeffs:
            return f"SymPoly({self.nvars}, 0)"
        terms = " + ".join(f"{c}*m{list(k)}" for k, c in sorted(self.coeffs.items(), reverse=True))
        return f"SymPoly({self.nvars}, {terms})"

    def __add__(self, other: "SymPoly") -> "SymPoly":
        if self.nvars != other.nvars:
            raise VarCountMismatch(f"{self.nvars} != {other.nvars} variables")
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            out[k] = out.get(k, 0) + c
        return SymPoly(self.nvars, out)

    def __sub__(self, other: "SymPoly") -> "SymPoly":
        return self + (-1) * other

    def __rmul__(self, scalar: int) -> "SymPoly":
        return SymPoly(self.nvars, {k: scalar * c for k, c in self.coeffs.items()})

    def __mul__(self, other: "SymPoly") -> "SymPoly":
        """Exact product: expand both factors to full exponent maps, convolve,
        and collect the dominant (weakly decreasing) exponents back as keys."""
        if self.nvars != other.nvars:
            raise VarCountMismatch(f"{self.nvars} != {other.nvars} variables")
        full = {}
        fa = expand_full(self)
        fb = expand_full(other)
        for wa, ca in fa.items():
            for wb, cb in fb.items():
                w = tuple(x + y for x, y in zip(wa, wb))
                full[w] = full.get(w, 0) + ca * cb
        out = {}
        for w, c in full.items():
            if c and all(w[i] >= w[i + 1] for i in range(len(w) - 1)):
                out[_strip(w)] = c
        return SymPoly(self.nvars, out)


def expand_full(f: SymPoly) -> dict[tuple[int, ...], int]:
    """Map from full n-tuple exponents to coefficients."""
    out = {}
    for key, c in f.coeffs.items():
        padded = key + (0,) * (f.nvars - len(key))
        for w in set(permutations(padded)):
            out[w] = c
    return out


def coefficient_of_weight(f: SymPoly, mu) -> int:
    """Coefficient of the monomial x^mu (collated through the symmetric orbit)."""
    mu = tuple(mu)
    if len(mu) != f.nvars:
        raise VarCountMismatch(f"weight has {len(mu)} coordinates, polynomial has {f.nvars}")
    return f.coeffs.get(_strip(sorted(mu, reverse=True)), 0)


def evaluate_at_ones(f: SymPoly) -> int:
    """f(1, ..., 1): each key contributes coeff times its orbit size."""
    total = 0
    for key, c in f.coeffs.items():
        padded = key + (0,) * (f.nvars - len(key))
        orbit = factorial(f.nvars)
        for mult in Counter(padded).values():
            orbit //= factorial(mult)
        total += c * orbit
    return total


@cache
def schur_poly(lam: tuple[int, ...], n: int) -> SymPoly:
    """Schur polynomial: generating function of the tableaux of shape lam by weight.

    Zero iff lam has more than n nonzero parts.
    """
    lam = check_partition(lam)
    if len(lam) > n:
        return SymPoly(n, {})
    coeffs = {}
    for mu in partitions_of(sum(lam), n):
        k = kostka(lam, mu)
        if k:
            coeffs[mu] = k
    return SymPoly(n, coeffs)


def power_sum(rho: tuple[int, ...], n: int) -> SymPoly:
    """Product over the parts r of rho of (x_1^r + ... + x_n^r)."""
    rho = check_partition(rho)
    out = SymPoly(n, {(): 1})
    for r in rho:
        out = out * SymPoly(n, {(r,): 1})
    return out


def schur_expand(f: SymPoly) -> dict[tuple[int, ...], int]:
    """The unique integers c_lam with f = sum c_lam * s_lam.

    Repeatedly picks the lexicographically greatest remaining key and
    subtracts its Schur polynomial; terminates by unitriangularity of the
    Kostka matrix.
    """
    rem = dict(f.coeffs)
    out: dict[tuple[int, ...], int] = {}
    degrees = {sum(k) for k in rem}
    bound = sum(len(partitions_of(d, f.nvars)) for d in degrees) + 1
    steps = 0
    while rem:
        steps += 1
        if steps > bound:
            raise NonTermination("schur expansion did not terminate; input is not symmetric")
        mu = max(rem)
        c = rem[mu]
        out[mu] = c
        for k, v in schur_poly(mu, f.nvars).coeffs.items():
            nv = rem.get(k, 0) - c * v
            if nv:
                rem[k] = nv
            else:
                rem.pop(k, None)
    return out


# ---------------------------------------------------------------------------
# Characters of the constructions under study, by direct enumeration of their
# weight bases: multisets for symmetric powers, sets for exterior powers,
# over single indices or over pairs.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SymPower:
    degree: int


@dataclass(frozen=True)
class ExtPower:
    degree: int


@dataclass(frozen=True)
class SymOfExt2:
    degree: int


@dataclass(frozen=True)
class SymOfSym2:
    degree: int


@dataclass(frozen=True)
class ExtOfExt2:
    degree: int


@dataclass(frozen=True)
class ExtOfSym2:
    degree: int


@dataclass(frozen=True)
class TensorProduct:
    factors: tuple


def tensor(*specs) -> TensorProduct:
    return TensorProduct(tuple(specs))


def _atom_weights(spec, n: int):
    d = spec.degree
    if d < 0:
        raise ValueError("degree must be non-negative")
    pairs_lt = list(combinations(range(n), 2))
    pairs_le = list(combinations_with_replacement(range(n), 2))
    if isinstance(spec, SymPower):
        items = combinations_with_replacement(range(n), d)
    elif isinstance(spec, ExtPower):
        items = combinations(range(n), d)
    elif isinstance(spec, SymOfExt2):
        items = combinations_with_replacement(pairs_lt, d)
    elif isinstance(spec, SymOfSym2):
        items = combinations_with_replacement(pairs_le, d)
    elif isinstance(spec, ExtOfExt2):
        items = combinations(pairs_lt, d)
    elif isinstance(spec, ExtOfSym2):
        items = combinations(pairs_le, d)
    else:
        raise ValueError(f"unknown construction {spec!r}")
    single = isinstance(spec, (SymPower, ExtPower))
    for chosen in items:
        w = [0] * n
        for item in chosen:
            if single:
                w[item] += 1
            else:
                w[item[0]] += 1
                w[item[1]] += 1
        yield tuple(w)


def character(spec, n: int) -> SymPoly:
    """Character of a construction, as a SymPoly.

    Computed by enumerating the weight basis of each atom; tensor products
    multiply.  The full weight multiset is validated to be permutation
    invariant before collation into the monomial basis.
    """
    if isinstance(spec, TensorProduct):
        out = SymPoly(n, {(): 1})
        for f in spec.factors:
            out = out * character(f, n)
        return out
    full = Counter(_atom_weights(spec, n))
    coeffs = {}
    seen = set()
    for w, c in full.items():
        canonical = tuple(sorted(w, reverse=True))
        if canonical in seen:
            continue
        seen.add(canonical)
        for o in set(permutations(canonical)):
            if full.get(o, 0) != c:
                raise RuntimeError(f"character is not symmetric at weight {o} (bug)")
        coeffs[_strip(canonical)] = c
    return SymPoly(n, coeffs)


# ---------------------------------------------------------------------------
# Cauchy-type coefficient checks.
# ---------------------------------------------------------------------------


def weight_vectors(total: int, length: int) -> list[tuple[int, ...]]:
    """All non-negative integer vectors of the given length and sum, descending lex."""
    if length == 0:
        return [()] if total == 0 else []
    out = []

    def rec(rem, pos, prefix):
        if pos == length - 1:
            out.append(tuple(prefix) + (rem,))
            return
        for v in range(rem, -1, -1):
            prefix.append(v)
            rec(rem - v, pos + 1, prefix)
            prefix.pop()

    rec(total, 0, [])
    return out


@dataclass
class IdentityReport:
    kind: str
    m: int
    n: int
    d: int
    pairs_checked: int
    failures: list

    @property
    def ok(self) -> bool:
        return not self.failures


def cauchy_check(m: int, n: int, d: int) -> IdentityReport:
    """For every margin pair with common sum d, the number of non-negative
    integer matrices equals the paired-tableau count sum(K[lam,nu]*K[lam,mu])."""
    failures = []
    checked = 0
    lams = partitions_of(d)
    for mu in weight_vectors(d, m):
        for nu in weight_vectors(d, n):
            checked += 1
            count = len(enumerate_matrices("M", mu, nu))
            expected = sum(kostka(lam, nu) * kostka(lam, mu) for lam in lams)
            if count != expected:
                failures.append({"mu": list(mu), "nu": list(nu), "matrices": count, "expected": expected})
    return IdentityReport("cauchy", m, n, d, checked, failures)


def dual_cauchy_check(m: int, n: int, d: int) -> IdentityReport:
    """0/1-matrix analogue, with conjugate shape on one side."""
    failures = []
    checked = 0
    lams = partitions_of(d)
    for mu in weight_vectors(d, m):
        for nu in weight_vectors(d, n):
            checked += 1
            count = len(enumerate_matrices("N", mu, nu))
            expected = sum(kostka(conjugate(lam), nu) * kostka(lam, mu) for lam in lams)
            if count != expected:
                failures.append({"mu": list(mu), "nu": list(nu), "matrices": count, "expected": expected})
    return IdentityReport("dual-cauchy", m, n, d, checked, failures)


# ---------------------------------------------------------------------------
# JSON form: {"vars": n, "terms": [{"key": [...], "coeff": c}, ...]},
# terms sorted by key in descending lex order.
# ---------------------------------------------------------------------------


def sympoly_to_json(f: SymPoly) -> dict:
    terms = [{"key": list(k), "coeff": c} for k, c in sorted(f.coeffs.items(), reverse=True)]
    return {"vars": f.nvars, "terms": terms}


def sympoly_from_json(obj) -> SymPoly:
    if not isinstance(obj, dict):
        raise ValueError("$: expected an object with 'vars' and 'terms'")
    n = obj.get("vars")
    if not isinstance(n, int) or n < 0:
        raise ValueError("$.vars: expected a non-negative integer")
    terms = obj.get("terms")
    if not isinstance(terms, list):
        raise ValueError("$.terms: expected a list")
    coeffs = {}
    for i, t in enumerate(terms):
        if not isinstance(t, dict) or "key" not in t or "coeff" not in t:
            raise ValueError(f"$.terms[{i}]: expected an object with 'key' and 'coeff'")
        try:
            key = check_partition(t["key"])
        except (ValueError, TypeError) as exc:
            raise ValueError(f"$.terms[{i}].key: {exc}") from exc
        if not isinstance(t["coeff"], int):
            raise ValueError(f"$.terms[{i}].coeff: expected an integer")
        coeffs[key] = coeffs.get(key, 0) + t["coeff"]
    return SymPoly(n, coeffs)
