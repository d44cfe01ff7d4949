"""The cyclic p-gonal curve family y^p = x^a (x-1)^b and its classification.

Each exponent a in X_p labels a canonical curve C_a : y^p = x^a (x-1) of
genus (p-1)/2.  The general two-exponent form C_{a,b} only enters as an
input to :func:`normalize`, which rewrites it as C_{a b^(-1)}.  Two
canonical curves are isomorphic exactly when their exponents share an
orbit under the action of :mod:`fermatjac.orbits`; each of the six
Moebius transformations permuting {0, 1, oo} transports an exponent to a
specific member of its orbit, implemented in :func:`moebius_transport`.

Moebius maps are identified here by label only.  Their action on curve
exponents is what matters for classification; the lifted action on
function fields lives in :mod:`fermatjac.monomial`.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional

from .errors import DegenerateCurveError, NoGammaError, OutOfRangeError
from .orbits import OrbitClass, PrimeContext, orbit


class CurveFamily(Enum):
    FERMAT = "fermat"
    P_GONAL = "p_gonal"
    E_QUOTIENT = "e_quotient"


class MoebiusLabel(Enum):
    """The six Moebius transformations preserving {0, 1, oo}.

    Each value records the permutation induced on the points, indexed
    (0, 1, oo); composing labels is composing these permutations, which
    determines the Moebius map uniquely (three points pin it down).
    """

    ID = ("x", (0, 1, 2))
    INV = ("1/x", (2, 1, 0))
    ONE_MINUS = ("1-x", (1, 0, 2))
    OVER = ("x/(x-1)", (0, 2, 1))
    CYC = ("1/(1-x)", (1, 2, 0))
    CYC2 = ("(x-1)/x", (2, 0, 1))

    def __init__(self, formula: str, perm: tuple[int, int, int]):
        self.formula = formula
        self.perm = perm

    def compose(self, other: "MoebiusLabel") -> "MoebiusLabel":
        """self after other (other applied first)."""
        p = tuple(self.perm[i] for i in other.perm)
        return _BY_PERM[p]

    def inverse(self) -> "MoebiusLabel":
        p = [0, 0, 0]
        for i, j in enumerate(self.perm):
            p[j] = i
        return _BY_PERM[tuple(p)]


_BY_PERM = {label.perm: label for label in MoebiusLabel}


@dataclass(frozen=True)
class CurveSpec:
    """A curve descriptor: the Fermat curve, a canonical C_alpha, or the
    genus-(p-1)/6 quotient E_gamma of the gamma curve.

    beta is retained for the general p-gonal form but every stored spec
    is canonical, so beta is always 1.
    """

    context: PrimeContext
    family: CurveFamily
    alpha: Optional[int] = None
    beta: int = 1

    def __post_init__(self):
        p = self.context.p
        if self.family is CurveFamily.FERMAT:
            if self.alpha is not None:
                raise OutOfRangeError("Fermat curve takes no exponent")
        elif self.family is CurveFamily.P_GONAL:
            if self.beta != 1:
                raise OutOfRangeError("stored p-gonal specs are canonical (beta = 1)")
            self.context.require_X(self.alpha)
        elif self.family is CurveFamily.E_QUOTIENT:
            if not self.context.has_gamma:
                raise NoGammaError(f"p = {p} = 2 mod 3 admits no quotient curve E")
            if self.alpha not in self.context.gamma_pair:
                raise OutOfRangeError(
                    f"E exponent {self.alpha} is not a root of g^2+g+1 mod {p}"
                )

    def describe(self) -> str:
        p = self.context.p
        if self.family is CurveFamily.FERMAT:
            return f"F({p})"
        if self.family is CurveFamily.P_GONAL:
            return f"C_alpha(p={p}, alpha={self.alpha})"
        return f"E_gamma(p={p}, gamma={self.alpha})"

    def equation(self) -> str:
        p = self.context.p
        if self.family is CurveFamily.FERMAT:
            return f"x^{p} + y^{p} + z^{p} = 0"
        if self.family is CurveFamily.P_GONAL:
            return f"y^{p} = x^{self.alpha}*(x-1)"
        return f"C_gamma(p={p})/<R>"


def normalize(alpha: int, beta: int, ctx: PrimeContext) -> CurveSpec:
    """Canonical form of the two-exponent curve y^p = x^alpha (x-1)^beta.

    Rescaling the exponent pair by any unit gives an isomorphic curve, so
    (alpha, beta) reduces to (alpha beta^(-1), 1).  The pair is rejected
    when alpha + beta = 0 mod p: the cover degenerates (it would not be
    branched with order p over all three of 0, 1, oo).
    """
    p = ctx.p
    for name, val in (("alpha", alpha), ("beta", beta)):
        if not isinstance(val, int) or not 1 <= val <= p - 1:
            raise OutOfRangeError(f"{name} = {val!r} not in {{1,...,{p - 1}}}")
    if (alpha + beta) % p == 0:
        raise DegenerateCurveError(
            f"alpha + beta = 0 mod {p}: the cyclic cover degenerates"
        )
    exponent = alpha * ctx.inv(beta) % p
    assert ctx.in_X(exponent)
    return CurveSpec(context=ctx, family=CurveFamily.P_GONAL, alpha=exponent)


def moebius_transport(alpha: int, label: MoebiusLabel, ctx: PrimeContext) -> int:
    """Exponent of the image curve of C_alpha under an isomorphism
    covering the given Moebius map.  The image always lies in O(alpha).

    Note the contravariance: transport by a composition applies the
    outer map's rule first, i.e. transport(a, f.compose(g)) equals
    transport(transport(a, f), g).
    """
    ctx.require_X(alpha)
    p = ctx.p
    if label is MoebiusLabel.ID:
        return alpha
    if label is MoebiusLabel.INV:
        return (-(1 + alpha)) % p
    if label is MoebiusLabel.ONE_MINUS:
        return ctx.inv(alpha)
    if label is MoebiusLabel.OVER:
        return (-alpha * ctx.inv(1 + alpha)) % p
    if label is MoebiusLabel.CYC:
        return (-ctx.inv(1 + alpha)) % p
    if label is MoebiusLabel.CYC2:
        return (-ctx.inv(alpha) * (1 + alpha)) % p
    raise OutOfRangeError(f"unknown Moebius label {label!r}")


def are_isomorphic(alpha1: int, alpha2: int, ctx: PrimeContext) -> bool:
    """C_alpha1 and C_alpha2 are isomorphic iff the exponents share an orbit."""
    ctx.require_X(alpha1)
    ctx.require_X(alpha2)
    return alpha2 in orbit(alpha1, ctx).elements


def genus_of(spec: CurveSpec) -> int:
    p = spec.context.p
    if spec.family is CurveFamily.FERMAT:
        return (p - 1) * (p - 2) // 2
    if spec.family is CurveFamily.P_GONAL:
        assert (p - 1) % 2 == 0
        return (p - 1) // 2
    assert (p - 1) % 6 == 0, f"p = {p} = 2 mod 3 has no E quotient"
    return (p - 1) // 6


def quotient_to_curve(j: int, ctx: PrimeContext) -> CurveSpec:
    """The canonical curve isomorphic to the deck quotient indexed by j.

    The quotient surface carries the cyclic cover with exponent
    -(1+j) mod p, whose canonical representative is p - 1 - j.
    """
    ctx.require_X(j)
    alpha = ctx.p - 1 - j
    assert alpha == (-(1 + j)) % ctx.p
    return CurveSpec(context=ctx, family=CurveFamily.P_GONAL, alpha=alpha)


def curve_orbit(spec: CurveSpec) -> OrbitClass:
    assert spec.family is CurveFamily.P_GONAL
    return orbit(spec.alpha, spec.context)
