from fractions import Fraction

import pytest

from projstruct.action import (
    ActionGroup,
    AffineAutAction,
    MonomialAction,
    apply_action,
    fixed_locus,
    is_projective_for,
    relatively_hurwitz_set,
)
from projstruct.errors import DimensionMismatch
from projstruct.hyperelliptic import HyperellipticModel, export_action, pullback_of_involution, pullback_of_rotation
from projstruct.linalg import matvec
from projstruct.scalars import I


def diag(*entries):
    n = len(entries)
    return [[entries[i] if i == j else 0 for j in range(n)] for i in range(n)]


def test_identity_action():
    A = AffineAutAction(diag(1, 1, 1))
    q = (Fraction(1, 2), I, 3)
    assert apply_action(A, q) == q


def test_fuchsian_action_is_pure_pullback():
    P = [[0, 1, 0], [1, 0, 0], [0, 0, -1]]
    q = (1, 2, 3)
    assert apply_action(AffineAutAction(P), q) == tuple(matvec(P, q))


def test_affine_example():
    A = AffineAutAction(diag(1, -1, 1), (0, 1, 0))
    assert apply_action(A, (1, 1, 1)) == (1, 0, 1)


def test_projectivity_checks():
    assert is_projective_for(AffineAutAction(diag(1, -1, I)), (0, 0, 0))
    assert not is_projective_for(AffineAutAction(diag(1, 1, 1), (0, 1, 0)), (0, 0, 0))
    assert not is_projective_for(AffineAutAction(diag(1, 1, -1)), (0, 0, 5))
    assert is_projective_for(AffineAutAction(diag(1, 1, -1)), (4, 5, 0))


def test_shape_errors():
    with pytest.raises(DimensionMismatch):
        AffineAutAction([[1, 0], [0, 1, 0]])
    with pytest.raises(ValueError):
        AffineAutAction(diag(1, 0))
    with pytest.raises(DimensionMismatch):
        ActionGroup((AffineAutAction(diag(1, 1)),), genus=2)
    with pytest.raises(ValueError):
        ActionGroup((AffineAutAction(diag(1, 1, 1), (1, 0, 0)),), genus=2)


def test_empty_group_fixes_everything():
    for g in (2, 3, 5):
        locus = fixed_locus(ActionGroup((), g))
        assert locus.dimension == 3 * g - 3
        assert all(x == 0 for x in locus.basepoint)


def test_hyperelliptic_involution_genus_3():
    model = HyperellipticModel(3)
    G = export_action(model, [pullback_of_involution(model)])
    locus = fixed_locus(G)
    assert (locus.dimension, locus.metadata["pathway"]) == (5, "elimination")
    assert all(x == 0 for x in locus.basepoint)
    # brute-force kernel of P - I for a diagonal P: count the +1 entries
    P = G.generators[0].P
    assert locus.dimension == sum(P[i][i] == 1 for i in range(len(P)))


def test_very_large_group_has_single_fixed_point():
    model = HyperellipticModel.rotation_family(4)
    G = export_action(model, [pullback_of_involution(model), pullback_of_rotation(model)])
    locus = relatively_hurwitz_set(G)
    assert locus.dimension == 0 and all(x == 0 for x in locus.basepoint)
    assert locus.metadata["pathway"] == "monomial"
    assert locus.metadata["assumes_full_group"]


def test_translation_part_shifts_basepoint():
    # q -> -q + (2, 0): fixed point (1, 0) plus the +1 directions
    A = AffineAutAction(diag(-1, 1, 1), (2, 0, 0))
    locus = fixed_locus(ActionGroup((A,), 2, base="other"))
    assert locus.dimension == 2
    assert locus.basepoint[0] == 1
    assert is_projective_for(A, locus.basepoint)
    for d in locus.directions:
        assert is_projective_for(A, tuple(b + 3 * x for b, x in zip(locus.basepoint, d)))


def test_inconsistent_translations_give_empty_locus():
    A = AffineAutAction(diag(1, 1, 1), (1, 0, 0))
    locus = fixed_locus(ActionGroup((A,), 2, base="other"))
    assert locus.is_empty and locus.basepoint is None


def test_two_generators_with_incompatible_fixed_points():
    A = AffineAutAction(diag(-1, 1, 1), (2, 0, 0))
    B = AffineAutAction(diag(-1, 1, 1), (4, 0, 0))
    assert fixed_locus(ActionGroup((A, B), 2, base="other")).is_empty


def test_monomial_pathway_agrees_with_elimination_when_both_apply():
    R = MonomialAction(12, (0, 3, 4, 6, 0, 11))
    J = MonomialAction(1, (0,) * 6, (1, -1, 1, 1, 1, -1))
    G = ActionGroup((R.as_affine(), J.as_affine()), 3)
    by_matrix = fixed_locus(G)
    free = [all(g.trivial_entries()[i] for g in (R, J)) for i in range(6)]
    assert by_matrix.dimension == sum(free) == 2


def test_monomial_composition():
    R = MonomialAction(5, (1, 2, 3))
    assert R.then(R).exponents == (2, 4, 1)
    assert all(R.then(R).then(R).then(R).then(R).trivial_entries())
    assert not R.embeddable() and MonomialAction(6, (1, 2, 3)).embeddable()
