"""Exact arithmetic mod p and the three-letter symmetry orbits on X_p.

For a prime p >= 5 put X_p = {1, ..., p-2} inside the field of p
elements.  The symmetric group on three letters acts on X_p through

    U(a) = -(1 + a)^(-1)        V(a) = a^(-1)

with U^3 = V^2 = (UV)^2 = 1.  The orbit of a is

    O(a) = {a, a^(-1), -(1+a), -(1+a)^(-1), -a^(-1)(1+a), -a(1+a)^(-1)}.

There is always exactly one orbit of size three, O(1) = {1, p-2, (p-1)/2}.
When p = 1 mod 3 the two roots of g^2 + g + 1 = 0 form the unique orbit
of size two; every other orbit has size six.  These orbits index the
isomorphism classes of the degree-p cyclic covers handled in
:mod:`fermatjac.curves`, and their sizes become the multiplicities of the
Jacobian factors assembled in :mod:`fermatjac.decompose`.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional

from .errors import NotPrimeError, OutOfRangeError, TooLargeError, TooSmallError

# Keeps the gamma scan and the O(p^2) subgroup sweeps at desk scale.
MAX_P = 1_000_003


def is_prime(n: int) -> bool:
    """Deterministic trial division; ample for p <= MAX_P."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


class OrbitKind(Enum):
    SPECIAL_ONE = "special_one"
    GAMMA = "gamma"
    GENERIC = "generic"


@dataclass(frozen=True)
class PrimeContext:
    """A prime p >= 5 plus the root pair of g^2 + g + 1 = 0 mod p, if any.

    ``gamma_pair`` holds both roots, smaller first; it is present exactly
    when p = 1 mod 3.  The two roots are inverses of each other and sum
    to -1, so the second is always p - 1 - gamma.  Which root "names" the
    size-two orbit is a convention, not mathematics: both give the same
    orbit and isomorphic curves.
    """

    p: int
    residue_class_mod_3: int
    gamma_pair: Optional[tuple[int, int]]

    @property
    def has_gamma(self) -> bool:
        return self.gamma_pair is not None

    @property
    def gamma(self) -> int:
        """The conventional (smaller) root."""
        if self.gamma_pair is None:
            from .errors import NoGammaError

            raise NoGammaError(f"p = {self.p} = 2 mod 3 has no root of g^2+g+1")
        return self.gamma_pair[0]

    def inv(self, a: int) -> int:
        return pow(a, -1, self.p)

    def in_X(self, a: int) -> bool:
        return 1 <= a <= self.p - 2

    def require_X(self, a: int) -> None:
        if not isinstance(a, int) or not self.in_X(a):
            raise OutOfRangeError(
                f"{a!r} is not in X_p = {{1,...,{self.p - 2}}} for p = {self.p}"
            )


def make_context(p: int) -> PrimeContext:
    """Validate p and build the context, scanning X_p for the gamma roots.

    The scan is exhaustive rather than a modular square-root algorithm:
    at desk scale it is instant and dependency-free.
    """
    if not isinstance(p, int):
        raise NotPrimeError(f"p must be an integer, got {p!r}")
    if p < 5:
        raise TooSmallError(f"p = {p} is below the minimum 5")
    if p > MAX_P:
        raise TooLargeError(f"p = {p} exceeds the supported bound {MAX_P}")
    if not is_prime(p):
        raise NotPrimeError(f"p = {p} is not prime")

    residue = p % 3
    gamma_pair = None
    if residue == 1:
        roots = [g for g in range(1, p - 1) if (g * g + g + 1) % p == 0]
        assert len(roots) == 2, f"expected two roots mod {p}, found {roots}"
        lo, hi = sorted(roots)
        assert hi == p - 1 - lo and lo * hi % p == 1
        gamma_pair = (lo, hi)
    return PrimeContext(p=p, residue_class_mod_3=residue, gamma_pair=gamma_pair)


def s3_apply(generator: str, alpha: int, ctx: PrimeContext) -> int:
    """Apply the generator U or V to alpha in X_p."""
    ctx.require_X(alpha)
    p = ctx.p
    if generator == "U":
        return (-ctx.inv(1 + alpha)) % p
    if generator == "V":
        return ctx.inv(alpha)
    raise OutOfRangeError(f"unknown generator {generator!r}, expected 'U' or 'V'")


@dataclass(frozen=True)
class OrbitClass:
    """One orbit on X_p: sorted elements, smallest member as representative."""

    representative: int
    elements: tuple[int, ...]
    kind: OrbitKind

    @property
    def size(self) -> int:
        return len(self.elements)


def orbit(alpha: int, ctx: PrimeContext) -> OrbitClass:
    """Closure of {alpha} under U and V, classified by its size."""
    ctx.require_X(alpha)
    seen = {alpha}
    frontier = [alpha]
    while frontier:
        a = frontier.pop()
        for gen in ("U", "V"):
            b = s3_apply(gen, a, ctx)
            if b not in seen:
                seen.add(b)
                frontier.append(b)
    elements = tuple(sorted(seen))
    size = len(elements)
    if size == 3:
        expected = tuple(sorted((1, ctx.p - 2, (ctx.p - 1) // 2)))
        assert elements == expected, f"size-3 orbit {elements} is not O(1)"
        kind = OrbitKind.SPECIAL_ONE
    elif size == 2:
        assert ctx.has_gamma and elements == ctx.gamma_pair
        kind = OrbitKind.GAMMA
    else:
        assert size == 6, f"impossible orbit size {size} for {alpha} mod {ctx.p}"
        kind = OrbitKind.GENERIC
    return OrbitClass(representative=elements[0], elements=elements, kind=kind)


@dataclass(frozen=True)
class OrbitPartition:
    """The full orbit decomposition of X_p, orbits sorted by representative."""

    context: PrimeContext
    orbits: tuple[OrbitClass, ...]

    @property
    def generic_count(self) -> int:
        return sum(1 for o in self.orbits if o.kind is OrbitKind.GENERIC)

    def orbit_of(self, alpha: int) -> OrbitClass:
        self.context.require_X(alpha)
        for o in self.orbits:
            if alpha in o.elements:
                return o
        raise AssertionError(f"partition does not cover {alpha}")


def orbit_partition(ctx: PrimeContext) -> OrbitPartition:
    orbits = []
    covered: set[int] = set()
    for a in range(1, ctx.p - 1):
        if a in covered:
            continue
        o = orbit(a, ctx)
        orbits.append(o)
        covered.update(o.elements)
    assert len(covered) == ctx.p - 2
    orbits.sort(key=lambda o: o.representative)
    return OrbitPartition(context=ctx, orbits=tuple(orbits))
