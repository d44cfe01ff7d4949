import pytest

from fermatjac.errors import (
    IdentityInputError,
    InconsistentRHError,
    NotSubgroupOfHError,
    TooLargeError,
)
from fermatjac.genus import (
    FixTable,
    coset_genus,
    fermat_axis_fix_table,
    fermat_full_fix_table,
    fermat_genus,
    fermat_quotient_genus,
    find_generating_triple,
    full_fix_count,
    pgonal_fix_table,
    rh_genus,
    validate_triple,
)
from fermatjac.groups import (
    FLAVOR_FERMAT,
    all_cyclic_subgroups,
    conjugacy_classes,
    conjugate,
    fermat_H,
    fermat_Hj,
    fermat_a1,
    fermat_elements,
    fermat_group_order,
    fermat_identity,
    fermat_u,
    fermat_v,
    joined_subgroup,
    pgonal_K,
    pgonal_group,
    subgroup_closure,
    trivial_subgroup,
)
from fermatjac.orbits import make_context


def test_rh_genus_free_deck_subgroup():
    for p in (5, 7, 13):
        ctx = make_context(p)
        fix = fermat_axis_fix_table(ctx)
        for j in (1, p - 2):
            assert rh_genus(fermat_genus(p), fermat_Hj(p, j), fix) == (p - 1) // 2
    assert rh_genus(fermat_genus(7), fermat_Hj(7, 1), fermat_axis_fix_table(make_context(7))) == 3


def test_rh_genus_trivial_subgroup():
    ctx = make_context(7)
    triv = trivial_subgroup(fermat_identity(7))
    assert rh_genus(fermat_genus(7), triv, fermat_axis_fix_table(ctx)) == fermat_genus(7)


def test_rh_genus_pgonal_full_group_p7():
    # g_top = 3, |K| = 21, sum fix = 6*3 + 14*2 = 46, so 2g-2 = (4-46)/21 = -2
    ctx = make_context(7)
    full = pgonal_group(ctx)
    assert full.order == 21
    fix = pgonal_fix_table(ctx)
    total = sum(fix.count(g) for g in full if not g.is_identity)
    assert total == 46
    assert rh_genus(3, full, fix) == 0


@pytest.mark.parametrize("p", (7, 13, 19))
def test_rh_genus_pgonal_K1(p):
    ctx = make_context(p)
    fix = pgonal_fix_table(ctx)
    assert rh_genus((p - 1) // 2, pgonal_K(1, ctx), fix) == (p - 1) // 6
    assert rh_genus((p - 1) // 2, pgonal_group(ctx), fix) == 0


def test_rh_genus_inconsistent_table_raises():
    ctx = make_context(7)
    bogus = FixTable(FLAVOR_FERMAT, 7, lambda g: 1, "bogus")
    with pytest.raises(InconsistentRHError):
        rh_genus(fermat_genus(7), fermat_Hj(7, 1), bogus)


def test_fermat_quotient_genus():
    for p in (5, 7, 13):
        h = fermat_H(p)
        assert fermat_quotient_genus(h) == 0
        total = sum(fermat_quotient_genus(fermat_Hj(p, j)) for j in range(1, p - 1))
        assert total == fermat_genus(p)


def test_fermat_quotient_genus_rejects_nontranslations():
    sub = subgroup_closure([fermat_u(7)])
    with pytest.raises(NotSubgroupOfHError):
        fermat_quotient_genus(sub)


def test_find_generating_triple_properties():
    for p in (5, 7):
        ctx = make_context(p)
        triple = find_generating_triple(ctx)
        evidence = validate_triple(triple, ctx)
        assert evidence["orders"] == [2, 3, 2 * p]
        assert evidence["fix_a1"] == p
        assert evidence["trivial_subgroup_genus"] == fermat_genus(p)
        # deterministic: the search re-finds the same triple
        assert find_generating_triple(ctx) == triple


def test_find_generating_triple_bound():
    with pytest.raises(TooLargeError):
        find_generating_triple(make_context(37))


def test_full_fix_count_examples():
    ctx = make_context(7)
    triple = find_generating_triple(ctx)
    assert full_fix_count(fermat_a1(7), triple) == 7
    # a free translation fixes nothing
    free = fermat_Hj(7, 1).element_list[1]
    assert full_fix_count(free, triple) == 0
    with pytest.raises(IdentityInputError):
        full_fix_count(fermat_identity(7), triple)


def test_full_table_matches_axis_table_on_H():
    for p in (5, 7):
        ctx = make_context(p)
        triple = find_generating_triple(ctx)
        full = fermat_full_fix_table(ctx, triple)
        axis = fermat_axis_fix_table(ctx)
        for h in fermat_H(p):
            if not h.is_identity:
                assert full.count(h) == axis.count(h)


def test_fix_counts_conjugation_invariant_exhaustive_p5():
    ctx = make_context(5)
    triple = find_generating_triple(ctx)
    fix = fermat_full_fix_table(ctx, triple)
    els = list(fermat_elements(5))
    for g in els:
        if g.is_identity:
            continue
        c = fix.count(g)
        for h in els:
            assert fix.count(conjugate(h, g)) == c


def test_lefschetz_bound():
    for p in (5, 7):
        ctx = make_context(p)
        triple = find_generating_triple(ctx)
        fix = fermat_full_fix_table(ctx, triple)
        bound = 2 + 2 * fermat_genus(p)
        for cls in conjugacy_classes(FLAVOR_FERMAT, ctx):
            if not cls[0].is_identity:
                assert 0 <= fix.count(cls[0]) <= bound


def test_total_fix_count_identity():
    # summing |Fix(g)| over g != 1 equals the Riemann-Hurwitz total for
    # the full group acting with quotient genus zero: 13 p^2 - 3 p
    for p in (5, 7):
        ctx = make_context(p)
        triple = find_generating_triple(ctx)
        fix = fermat_full_fix_table(ctx, triple)
        total = sum(
            fix.count(g) for g in fermat_elements(p) if not g.is_identity
        )
        assert total == 13 * p * p - 3 * p


def test_coset_genus_full_group_and_trivial():
    for p in (5, 7):
        ctx = make_context(p)
        triple = find_generating_triple(ctx)
        gens = [fermat_a1(p), fermat_u(p), fermat_v(p)]
        full = subgroup_closure(gens)
        assert full.order == fermat_group_order(p)
        assert coset_genus(full, triple) == 0
        assert coset_genus(trivial_subgroup(fermat_identity(p)), triple) == fermat_genus(p)


@pytest.mark.parametrize("p", (5, 7))
def test_dual_oracle_agreement(p):
    """Riemann-Hurwitz with fiber-model fix counts against the orbifold
    coset count, over every cyclic subgroup plus H, H_j, and the joins."""
    ctx = make_context(p)
    triple = find_generating_triple(ctx)
    fix = fermat_full_fix_table(ctx, triple)
    g_top = fermat_genus(p)
    subgroups = all_cyclic_subgroups(FLAVOR_FERMAT, ctx)
    subgroups.append(fermat_H(p))
    hj = [fermat_Hj(p, j) for j in range(1, p - 1)]
    subgroups.extend(hj)
    for i in range(len(hj)):
        for j in range(i + 1, len(hj)):
            subgroups.append(joined_subgroup(hj[i], hj[j]))
    for k in subgroups:
        assert rh_genus(g_top, k, fix) == coset_genus(k, triple)


def test_euler_characteristic_audit():
    for p in (5, 7, 13):
        ctx = make_context(p)
        order_g = fermat_group_order(p)
        # 2 - 2g = 2|G| - sum over cone points of [G:<c_i>] (m_i - 1)
        deficit = sum((order_g // m) * (m - 1) for m in (2, 3, 2 * p))
        assert 2 * order_g - deficit == 2 - 2 * fermat_genus(p)


def test_pgonal_fix_table_domain():
    ctx = make_context(7)
    fix = pgonal_fix_table(ctx)
    from fermatjac.groups import pgonal_T, pgonal_R, pgonal_identity

    assert fix.count(pgonal_T(ctx)) == 3
    assert fix.count(pgonal_R(ctx)) == 2
    with pytest.raises(IdentityInputError):
        fix.count(pgonal_identity(ctx))
