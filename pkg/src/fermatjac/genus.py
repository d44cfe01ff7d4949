"""Fixed-point tables and two independent quotient-genus oracles.

Oracle one is the Riemann-Hurwitz formula in group form: for a subgroup K
acting on a surface of genus g with fix(k) fixed points for each k != 1,

    2 g - 2 = |K| (2 g_K - 2) + sum over k != 1 of fix(k).

Oracle two needs no fixed-point data at all.  The Fermat curve is the
quotient of the hyperbolic plane by a surface group normal in a triangle
group of signature (2, 3, 2p); concretely, the full automorphism group is
generated by a pair of elements of orders 2 and 3 whose product has order
2p (a generating triple, found by deterministic search).  A subgroup K
then corresponds to the action of the triple on the cosets G/K, and the
ramification bookkeeping collapses to a cycle count:

    g_K = (2 + [G:K] - total number of cycles of the three entries) / 2.

The triple also extends the known fixed-point data from the translation
subgroup to the whole group: every point with nontrivial stabilizer sits
in one of three special fibers, each a coset space of a cyclic subgroup
generated by a triple entry, so |Fix(g)| is the number of cosets g fixes.
Both oracles must agree on every subgroup; the test suite enforces this.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Optional

from .errors import (
    IdentityInputError,
    InconsistentOrbifoldError,
    InconsistentRHError,
    NotSubgroupOfHError,
    OutOfRangeError,
    SearchExhaustedError,
    TooLargeError,
)
from .groups import (
    FLAVOR_FERMAT,
    FLAVOR_P_GONAL,
    Element,
    FermatAut,
    PGonalAut,
    Subgroup,
    conjugacy_classes,
    fermat_a1,
    fermat_elements,
    fermat_group_order,
    fermat_identity,
    left_cosets,
    mulclose,
    order,
    subgroup_closure,
    trivial_subgroup,
)
from .orbits import PrimeContext

DEFAULT_TRIPLE_SEARCH_BOUND = 31


class FixTable:
    """Fixed-point counts for non-identity elements of a group action.

    ``count`` raises on the identity (excluded by definition) and on
    elements outside the table's domain.
    """

    def __init__(self, flavor: str, p: int, count_fn: Callable[[Element], int], description: str):
        self.flavor = flavor
        self.p = p
        self._count_fn = count_fn
        self.description = description

    def count(self, g: Element) -> int:
        if g.is_identity:
            raise IdentityInputError("fix tables exclude the identity")
        return self._count_fn(g)

    def __repr__(self):
        return f"FixTable({self.description!r}, p={self.p})"


def fermat_axis_fix_table(ctx: PrimeContext) -> FixTable:
    """Fixed points of translation elements on the Fermat curve.

    Only powers of the three scaling generators a1, a2, a3 fix anything;
    each fixes the full fiber of p points over one branch value.  In
    (m, n) coordinates those are the elements with n = 0, m = 0, or
    m = n.  Domain: the translation subgroup H.
    """
    return _axis_table_for(ctx.p)


def pgonal_fix_table(ctx: PrimeContext, gamma: Optional[int] = None) -> FixTable:
    """Fixed points on the gamma curve: T^k fixes the three points over
    the branch values; every order-3 element fixes exactly two points
    (all are conjugate to R or R^2, and conjugate maps fix equally many)."""
    p = ctx.p
    g0 = ctx.gamma if gamma is None else gamma

    def count(g: PGonalAut) -> int:
        if not isinstance(g, PGonalAut) or g.p != p or g.gamma != g0:
            raise OutOfRangeError(f"{g!r} is not in the p-gonal group (p={p}, gamma={g0})")
        return 3 if g.e == 0 else 2

    return FixTable(FLAVOR_P_GONAL, p, count, "deck powers fix 3, order-3 maps fix 2")


def rh_genus(g_top: int, k: Subgroup, fix: FixTable) -> int:
    """Quotient genus from the Riemann-Hurwitz formula.

    A non-integral or negative result means the fix table is inconsistent
    with the claimed action and is a hard error, never rounded away.
    """
    total = 0
    for g in k.element_list:
        if g.is_identity:
            continue
        total += fix.count(g)
    n = 2 * g_top - 2 - total + 2 * k.order
    if n < 0 or n % (2 * k.order) != 0:
        raise InconsistentRHError(
            f"2g-2 = {2 * g_top - 2}, |K| = {k.order}, sum fix = {total}: no integer genus"
        )
    return n // (2 * k.order)


def fermat_genus(p: int) -> int:
    return (p - 1) * (p - 2) // 2


def fermat_quotient_genus(k: Subgroup) -> int:
    """Genus of the Fermat-curve quotient by a translation subgroup."""
    if not k.is_translation_subgroup:
        raise NotSubgroupOfHError(f"{k!r} is not contained in the translation subgroup")
    return rh_genus(fermat_genus(k.p), k, _axis_table_for(k.p))


@lru_cache(maxsize=None)
def _axis_table_for(p: int) -> FixTable:
    def count(g: FermatAut) -> int:
        if not isinstance(g, FermatAut) or g.p != p:
            raise OutOfRangeError(f"{g!r} is not in the Fermat group for p = {p}")
        if not g.is_translation:
            raise NotSubgroupOfHError(f"{g!r} lies outside the translation subgroup")
        return p if (g.m == 0 or g.n == 0 or g.m == g.n) else 0

    return FixTable(FLAVOR_FERMAT, p, count, "axis translations fix p points each")


@dataclass(frozen=True)
class GeneratingTriple:
    """Elements of orders (2, 3, 2p) with product 1 generating the group."""

    c2: FermatAut
    c3: FermatAut
    c2p: FermatAut

    @property
    def p(self) -> int:
        return self.c2.p

    @property
    def entries(self) -> tuple[tuple[FermatAut, int], ...]:
        p = self.p
        return ((self.c2, 2), (self.c3, 3), (self.c2p, 2 * p))

    def as_dict(self) -> dict:
        return {
            "c2": [self.c2.m, self.c2.n, self.c2.sigma],
            "c3": [self.c3.m, self.c3.n, self.c3.sigma],
            "c2p": [self.c2p.m, self.c2p.n, self.c2p.sigma],
        }


@lru_cache(maxsize=8)
def _sorted_group(p: int) -> tuple[FermatAut, ...]:
    return tuple(fermat_elements(p))


def find_generating_triple(ctx: PrimeContext, limit: int = DEFAULT_TRIPLE_SEARCH_BOUND) -> GeneratingTriple:
    """First (2, 3, 2p) generating triple in the canonical element order.

    Deterministic, so reports citing the triple reproduce run to run.
    The exhaustive search is bounded to keep full-group work desk-scale.
    """
    p = ctx.p
    if p > limit:
        raise TooLargeError(
            f"triple search for p = {p} exceeds the bound {limit}; raise the limit explicitly"
        )
    universe = _sorted_group(p)
    order2 = [g for g in universe if order(g) == 2]
    order3 = [g for g in universe if order(g) == 3]
    target = fermat_group_order(p)
    for c2 in order2:
        for c3 in order3:
            prod = c2 * c3
            if order(prod) != 2 * p:
                continue
            if len(mulclose([c2, c3])) != target:
                continue
            triple = GeneratingTriple(c2, c3, prod.inverse())
            assert (c2 * c3 * triple.c2p).is_identity
            return triple
    raise SearchExhaustedError(f"no (2, 3, 2p) generating triple found for p = {p}")


@lru_cache(maxsize=8)
def _fiber_cosets(triple: GeneratingTriple):
    """Coset structure of the three cyclic subgroups generated by the
    triple entries; the fibers over the three cone points."""
    p = triple.p
    universe = _sorted_group(p)
    fibers = []
    for c, m in triple.entries:
        sub = subgroup_closure([c])
        assert sub.order == m
        reps, index_of = left_cosets(sub, universe)
        fibers.append((tuple(reps), index_of))
    return tuple(fibers)


def full_fix_count(g: FermatAut, triple: GeneratingTriple) -> int:
    """Fixed points of any non-identity automorphism via the fiber model."""
    if g.is_identity:
        raise IdentityInputError("the identity fixes everything; excluded by definition")
    total = 0
    for reps, index_of in _fiber_cosets(triple):
        for i, r in enumerate(reps):
            if index_of[g * r] == i:
                total += 1
    return total


def fermat_full_fix_table(ctx: PrimeContext, triple: GeneratingTriple, classes=None) -> FixTable:
    """Fix counts on all of the Fermat group, computed once per conjugacy
    class (fixed-point counts are class functions)."""
    p = ctx.p
    if classes is None:
        classes = conjugacy_classes(FLAVOR_FERMAT, ctx)
    counts: dict[FermatAut, int] = {}
    for cls in classes:
        rep = cls[0]
        if rep.is_identity:
            continue
        c = full_fix_count(rep, triple)
        for g in cls:
            counts[g] = c

    def count(g: FermatAut) -> int:
        try:
            return counts[g]
        except KeyError:
            raise OutOfRangeError(f"{g!r} is not in the Fermat group for p = {p}") from None

    return FixTable(FLAVOR_FERMAT, p, count, "full table via the triple fiber model")


def coset_genus(k: Subgroup, triple: GeneratingTriple) -> int:
    """Genus of the quotient by K from the triple's coset action.

    For each triple entry acting on the cosets G/K, a cycle of length L
    covers its cone point with local degree L; collecting the cone-order
    bookkeeping reduces the orbifold Euler characteristic computation to

        g = (2 + [G:K] - total number of cycles) / 2.
    """
    p = triple.p
    if k.flavor != FLAVOR_FERMAT or k.p != p:
        raise OutOfRangeError(f"{k!r} does not live in the Fermat group for p = {p}")
    universe = _sorted_group(p)
    reps, index_of = left_cosets(k, universe)
    n = len(reps)
    cycles = 0
    for c, _m in triple.entries:
        images = [index_of[c * r] for r in reps]
        seen = [False] * n
        for i in range(n):
            if seen[i]:
                continue
            cycles += 1
            j = i
            while not seen[j]:
                seen[j] = True
                j = images[j]
    num = 2 + n - cycles
    if num < 0 or num % 2 != 0:
        raise InconsistentOrbifoldError(
            f"[G:K] = {n}, cycles = {cycles}: orbifold count gives no integer genus"
        )
    return num // 2


def validate_triple(triple: GeneratingTriple, ctx: PrimeContext) -> dict:
    """Recheck every defining property of a generating triple.

    Returns the validation evidence; raises on any failure.  Includes the
    Euler-characteristic audit 2 - 2g = 2|G| - sum [G:<c_i>] (m_i - 1)
    and the known fixed-point count of the scaling generator.
    """
    p = ctx.p
    orders = tuple(order(c) for c, _ in triple.entries)
    if orders != (2, 3, 2 * p):
        raise InconsistentOrbifoldError(f"triple orders {orders} != (2, 3, {2 * p})")
    if not (triple.c2 * triple.c3 * triple.c2p).is_identity:
        raise InconsistentOrbifoldError("triple product is not the identity")
    if len(mulclose([triple.c2, triple.c3])) != fermat_group_order(p):
        raise InconsistentOrbifoldError("triple does not generate the group")
    g_top = fermat_genus(p)
    order_g = fermat_group_order(p)
    euler = 2 * order_g - sum((order_g // m) * (m - 1) for _, m in triple.entries)
    if euler != 2 - 2 * g_top:
        raise InconsistentOrbifoldError(f"Euler audit failed: {euler} != {2 - 2 * g_top}")
    fix_a1 = full_fix_count(fermat_a1(p), triple)
    if fix_a1 != p:
        raise InconsistentOrbifoldError(f"fiber model gives fix(a1) = {fix_a1}, expected {p}")
    trivial_genus = coset_genus(trivial_subgroup(fermat_identity(p)), triple)
    if trivial_genus != g_top:
        raise InconsistentOrbifoldError(
            f"coset genus of the trivial subgroup is {trivial_genus}, expected {g_top}"
        )
    return {
        "orders": list(orders),
        "euler_count": euler,
        "fix_a1": fix_a1,
        "trivial_subgroup_genus": trivial_genus,
    }
