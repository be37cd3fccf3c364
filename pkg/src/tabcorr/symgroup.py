"""Symmetric-group side: involutions, the signed statistics behind the two
conjugation models, Murnaghan-Nakayama characters as the independent oracle,
inner products and decomposition, and induction from involution centralizers.

Permutations are tuples of 0-based images; cycle types are partitions.
"""

from fractions import Fraction
from functools import cache
from itertools import permutations as all_permutations
from math import factorial

from .partitions import partitions_of


class DegreeMismatch(ValueError):
    pass


class NotInvolution(ValueError):
    pass


class HasFixedPoints(ValueError):
    pass


class Rho2Constraint(ValueError):
    pass


class NonIntegralMultiplicity(ValueError):
    pass


class SizeMismatch(ValueError):
    pass


def identity(n: int) -> tuple[int, ...]:
    return tuple(range(n))


def compose(a, b) -> tuple[int, ...]:
    """(a;b)(i) = a(b(i))."""
    return tuple(a[b[i]] for i in range(len(a)))


def inverse(p) -> tuple[int, ...]:
    inv = [0] * len(p)
    for i, v in enumerate(p):
        inv[v] = i
    return tuple(inv)


def cycle_type(p) -> tuple[int, ...]:
    seen = [False] * len(p)
    lengths = []
    for i in range(len(p)):
        if seen[i]:
            continue
        length = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = p[j]
            length += 1
        lengths.append(length)
    return tuple(sorted(lengths, reverse=True))


def perm_sign(p) -> int:
    return -1 if (len(p) - len(cycle_type(p))) % 2 else 1


def representative(rho) -> tuple[int, ...]:
    """Canonical permutation of cycle type rho: consecutive blocks, each cycled."""
    images = []
    start = 0
    for r in rho:
        images.extend(list(range(start + 1, start + r)) + [start])
        start += r
    return tuple(images)


@cache
def involutions(n: int, k: int) -> tuple[tuple[int, ...], ...]:
    """All w in S_n with w = w^-1 and exactly k fixed points."""
    if k < 0 or k > n or (n - k) % 2:
        return ()
    out = []
    for p in all_permutations(range(n)):
        if compose(p, p) == identity(n) and sum(1 for i in range(n) if p[i] == i) == k:
            out.append(p)
    return tuple(out)


def _check_involution(w):
    if compose(w, w) != identity(len(w)):
        raise NotInvolution(f"{w} is not an involution")


def i1(g, w) -> int:
    """Number of 2-cycles (i, j) of w, i < j, inverted by g: g(i) > g(j)."""
    _check_involution(w)
    return sum(1 for i in range(len(w)) if i < w[i] and g[i] > g[w[i]])


def i2(g, w) -> int:
    """i1 plus the number of lex-ordered 2-cycle pairs whose sorted image pairs
    are out of lex order under g.  Requires w fixed-point free."""
    _check_involution(w)
    if any(w[i] == i for i in range(len(w))):
        raise HasFixedPoints(f"{w} has fixed points")
    cycles = sorted((i, w[i]) for i in range(len(w)) if i < w[i])
    extra = 0
    for a in range(len(cycles)):
        ga = tuple(sorted((g[cycles[a][0]], g[cycles[a][1]])))
        for b in range(a + 1, len(cycles)):
            gb = tuple(sorted((g[cycles[b][0]], g[cycles[b][1]])))
            if ga > gb:
                extra += 1
    return i1(g, w) + extra


class ClassFunction:
    """Integer-valued function on the cycle types (partitions) of n."""

    __slots__ = ("n", "values")

    def __init__(self, n: int, values: dict):
        self.n = n
        expected = set(partitions_of(n))
        if set(values) != expected:
            missing = expected - set(values)
            raise ValueError(f"values must cover all cycle types; missing {sorted(missing)}")
        self.values = {rho: values[rho] for rho in partitions_of(n)}

    def __getitem__(self, rho):
        return self.values[tuple(rho)]

    def __eq__(self, other) -> bool:
        return isinstance(other, ClassFunction) and self.n == other.n and self.values == other.values

    def __hash__(self):
        return hash((self.n, tuple(sorted(self.values.items()))))

    def __mul__(self, other: "ClassFunction") -> "ClassFunction":
        if self.n != other.n:
            raise DegreeMismatch(f"degrees {self.n} and {other.n} differ")
        return ClassFunction(self.n, {rho: v * other.values[rho] for rho, v in self.values.items()})

    def __repr__(self) -> str:
        return f"ClassFunction({self.n}, {self.values})"


def sign_character(n: int) -> ClassFunction:
    return ClassFunction(n, {rho: (-1) ** (n - len(rho)) for rho in partitions_of(n)})


def trivial_character(n: int) -> ClassFunction:
    return ClassFunction(n, {rho: 1 for rho in partitions_of(n)})


def model_character(n: int, k: int, variant: str) -> ClassFunction:
    """Character of the signed conjugation action on involutions with k fixed
    points: value at a cycle type is the signed count of commuting involutions,
    evaluated at the canonical representative.

    Well-definedness across representatives is a tested property (see the
    test suite), not an assumption.
    """
    if variant not in ("rho1", "rho2"):
        raise ValueError(f"unknown variant {variant!r}")
    if variant == "rho2" and (k != 0 or n % 2):
        raise Rho2Constraint("rho2 requires k = 0 and even n")
    stat = i1 if variant == "rho1" else i2
    ws = involutions(n, k)
    values = {}
    for rho in partitions_of(n):
        g = representative(rho)
        total = 0
        for w in ws:
            if compose(g, w) == compose(w, g):
                total += -1 if stat(g, w) % 2 else 1
        values[rho] = total
    return ClassFunction(n, values)


def _border_strip_removals(lam, r):
    """Partitions obtained by removing a length-r border strip, with sign.

    Works on the strictly decreasing first-column hook lengths: removing a
    strip of size r moves one of them down by r, and the sign is (-1) to the
    number of hook lengths jumped over.
    """
    ell = len(lam)
    beta = [lam[i] + ell - 1 - i for i in range(ell)]
    bset = set(beta)
    for b in beta:
        nb = b - r
        if nb < 0 or nb in bset:
            continue
        newbeta = sorted((bset - {b}) | {nb}, reverse=True)
        height = sum(1 for x in beta if nb < x < b)
        newlam = tuple(v - (ell - 1 - i) for i, v in enumerate(newbeta))
        yield tuple(p for p in newlam if p > 0), (-1) ** height


@cache
def _mn_value(lam: tuple[int, ...], cycles: tuple[int, ...]) -> int:
    if not cycles:
        return 1 if not lam else 0
    r, rest = cycles[0], cycles[1:]
    return sum(sign * _mn_value(newlam, rest) for newlam, sign in _border_strip_removals(lam, r))


@cache
def mn_character(lam: tuple[int, ...]) -> ClassFunction:
    """Irreducible character indexed by lam, via Murnaghan-Nakayama recursion."""
    n = sum(lam)
    return ClassFunction(n, {rho: _mn_value(lam, rho) for rho in partitions_of(n)})


def class_size(rho) -> int:
    """Size of the conjugacy class with cycle type rho: n!/z_rho."""
    rho = tuple(rho)
    n = sum(rho)
    z = 1
    for r in set(rho):
        m = rho.count(r)
        z *= r**m * factorial(m)
    return factorial(n) // z


def inner_product(f: ClassFunction, g: ClassFunction) -> Fraction:
    if f.n != g.n:
        raise DegreeMismatch(f"degrees {f.n} and {g.n} differ")
    total = sum(class_size(rho) * f.values[rho] * g.values[rho] for rho in f.values)
    return Fraction(total, factorial(f.n))


def decompose(f: ClassFunction) -> dict[tuple[int, ...], int]:
    """Multiplicities of the irreducible characters in f (zeros omitted)."""
    out = {}
    for lam in partitions_of(f.n):
        m = inner_product(f, mn_character(lam))
        if m.denominator != 1:
            raise NonIntegralMultiplicity(f"multiplicity of {lam} is {m}")
        if m:
            out[lam] = int(m)
    return out


# ---------------------------------------------------------------------------
# Induction from the centralizer of a fixed-point-free involution (times a
# symmetric group on the remaining letters), by direct summation over the
# whole group.  Desk scale only: n <= 8.
# ---------------------------------------------------------------------------

_INDUCTION_LIMIT = 8


def _base_involution(l: int) -> tuple[int, ...]:
    """(0 1)(2 3)...(2l-2 2l-1) on the first 2l letters."""
    out = []
    for i in range(l):
        out.extend([2 * i + 1, 2 * i])
    return tuple(out)


def _in_centralizer_block(h, l2: int) -> bool:
    """h stabilizes {0..l2-1} and commutes with the base involution there."""
    if any(h[i] >= l2 for i in range(l2)):
        return False
    w0 = _base_involution(l2 // 2)
    return all(h[w0[i]] == w0[h[i]] for i in range(l2))


def _eta(h, m: int) -> int:
    """Sign of the permutation of the m 2-blocks, times -1 per internally
    swapped block."""
    sigma = tuple(h[2 * i] // 2 for i in range(m))
    swaps = sum(h[2 * i] % 2 for i in range(m))
    return perm_sign(sigma) * (-1) ** swaps


def induced_model_character(n: int, k: int, which: str) -> ClassFunction:
    """Character induced from the centralizer subgroup (times S_k).

    which = 'e-tensor-one': sign of S_{2l} restricted to the centralizer,
    trivial on the S_k factor; 'trivial-B': the trivial character (k = 0);
    'eta': sign on the block permutation times the product of the nontrivial
    characters of the within-block swaps (k = 0).
    """
    if which not in ("e-tensor-one", "eta", "trivial-B"):
        raise ValueError(f"unknown induced character {which!r}")
    if k < 0 or (n - k) % 2:
        raise SizeMismatch(f"need n - k even and k >= 0, got n={n}, k={k}")
    if which in ("eta", "trivial-B") and k != 0:
        raise SizeMismatch(f"{which} requires k = 0")
    if n > _INDUCTION_LIMIT:
        raise SizeMismatch(f"brute-force induction is limited to n <= {_INDUCTION_LIMIT}")
    l = (n - k) // 2
    l2 = 2 * l

    def chi(h) -> int:
        if which == "trivial-B":
            return 1
        if which == "eta":
            return _eta(h, l)
        return perm_sign(h[:l2])

    order_h = 2**l * factorial(l) * factorial(k)
    group = list(all_permutations(range(n)))
    values = {}
    for rho in partitions_of(n):
        g = representative(rho)
        total = 0
        for x in group:
            t = compose(inverse(x), compose(g, x))
            if _in_centralizer_block(t, l2):
                total += chi(t)
        val = Fraction(total, order_h)
        if val.denominator != 1:
            raise NonIntegralMultiplicity(f"induced value at {rho} is {val}")
        values[rho] = int(val)
    return ClassFunction(n, values)


def classfunction_to_json(f: ClassFunction) -> dict:
    values = [{"type": list(rho), "value": v} for rho, v in sorted(f.values.items(), reverse=True)]
    return {"n": f.n, "values": values}
