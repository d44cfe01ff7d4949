import pytest

from fermatjac.certificates import (
    ClassData,
    chi_rat,
    chi_trivial,
    induced_perm_character,
    inner_product,
    inner_product_by_classes,
)
from fermatjac.errors import FlavorMismatchError
from fermatjac.genus import (
    coset_genus,
    fermat_genus,
    find_generating_triple,
)
from fermatjac.groups import (
    FLAVOR_FERMAT,
    all_cyclic_subgroups,
    fermat_H,
    fermat_Hj,
    fermat_a1,
    fermat_group_order,
    fermat_identity,
    subgroup_closure,
    trivial_subgroup,
)
from fermatjac.orbits import make_context


@pytest.fixture(scope="module", params=(5, 7))
def setup(request):
    p = request.param
    ctx = make_context(p)
    triple = find_generating_triple(ctx)
    data = ClassData(FLAVOR_FERMAT, ctx)
    return p, ctx, triple, data


def test_chi_rat_values(setup):
    p, ctx, triple, data = setup
    rat = chi_rat(ctx, triple, data)
    assert rat.at_identity == (p - 1) * (p - 2) == 2 * fermat_genus(p)
    assert rat(fermat_a1(p)) == 2 - p
    # a freely acting translation contributes trace 2
    free = fermat_Hj(p, 1).element_list[1]
    assert rat(free) == 2


def test_trivial_pairings(setup):
    p, ctx, triple, data = setup
    rat = chi_rat(ctx, triple, data)
    triv = chi_trivial(data)
    assert inner_product(triv, rat) == 0
    assert inner_product(triv, triv) == 1
    norm = inner_product(rat, rat)
    assert norm.denominator == 1 and norm > 0


def test_induced_character_identities(setup):
    p, ctx, triple, data = setup
    from fermatjac.groups import fermat_u, fermat_v

    # K = G gives the trivial character, K = 1 the regular character
    full = subgroup_closure([fermat_a1(p), fermat_u(p), fermat_v(p)])
    assert full.order == fermat_group_order(p)
    chi_full = induced_perm_character(full, data)
    assert chi_full.values == chi_trivial(data).values
    chi_reg = induced_perm_character(trivial_subgroup(fermat_identity(p)), data)
    assert chi_reg.at_identity == fermat_group_order(p)
    assert all(
        v == 0 for i, v in enumerate(chi_reg.values) if i != data.identity_index
    )


def test_induced_vs_homology_pairing_Hj(setup):
    p, ctx, triple, data = setup
    rat = chi_rat(ctx, triple, data)
    for j in range(1, p - 1):
        chi = induced_perm_character(fermat_Hj(p, j), data)
        assert chi.at_identity == 6 * p
        value = inner_product(chi, rat)
        assert value == p - 1
        assert value.denominator == 1
        assert inner_product_by_classes(chi, rat) == value


def test_pairing_equals_twice_quotient_genus(setup):
    """Frobenius reciprocity loop: <Ind_K 1, hom> = 2 genus(quotient by K)
    across subgroup families, tying three modules together."""
    p, ctx, triple, data = setup
    rat = chi_rat(ctx, triple, data)
    subgroups = all_cyclic_subgroups(FLAVOR_FERMAT, ctx)
    subgroups.append(fermat_H(p))
    for k in subgroups:
        chi = induced_perm_character(k, data)
        assert inner_product(chi, rat) == 2 * coset_genus(k, triple)


def test_perm_character_at_Hj_p5():
    ctx = make_context(5)
    data = ClassData(FLAVOR_FERMAT, ctx)
    chi = induced_perm_character(fermat_Hj(5, 1), data)
    assert chi.at_identity == 30


def test_flavor_mismatch():
    ctx5, ctx7 = make_context(5), make_context(7)
    d5, d7 = ClassData(FLAVOR_FERMAT, ctx5), ClassData(FLAVOR_FERMAT, ctx7)
    with pytest.raises(FlavorMismatchError):
        inner_product(chi_trivial(d5), chi_trivial(d7))
    with pytest.raises(FlavorMismatchError):
        induced_perm_character(fermat_Hj(7, 1), d5)


def test_pgonal_class_data_and_pairing():
    from fermatjac.groups import FLAVOR_P_GONAL, pgonal_T

    ctx = make_context(7)
    data = ClassData(FLAVOR_P_GONAL, ctx)
    assert data.order == 21
    # homology character from the fixed-point data: p-1 at 1, -1 on T
    # powers, 0 on order-3 maps; pairing with the trivial character is 0
    from fermatjac.certificates import ClassFunction
    from fermatjac.genus import pgonal_fix_table

    fix = pgonal_fix_table(ctx)
    values = []
    for cls in data.classes:
        rep = cls[0]
        values.append(7 - 1 if rep.is_identity else 2 - fix.count(rep))
    hom = ClassFunction(data, values, "pgonal homology")
    assert inner_product(chi_trivial(data), hom) == 0
    assert inner_product_by_classes(chi_trivial(data), hom) == 0
    assert hom(pgonal_T(ctx)) == -1
