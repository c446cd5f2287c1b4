import pytest
from hypothesis import given
from hypothesis import strategies as st

from homlie.algebra import AlgebraSpec
from homlie.linalg import Matrix, Subspace, contains
from homlie.spaces import (
    GradedMap,
    SpaceKind,
    alpha_shift,
    check_bracket_laws,
    check_inclusion_chain,
    check_qc_structure,
    compose,
    decompose_generalized,
    is_homogeneous,
    jordan_product,
    project_component,
    solve_space,
    space_contains,
    supercommutator,
    tuple_vector,
)
from oracle import defining_residuals, oracle_solve

ALL_KINDS = tuple(SpaceKind)


def diag(*entries):
    n = len(entries)
    return Matrix.from_rows([[entries[r] if r == c else 0 for c in range(n)]
                             for r in range(n)])


def test_known_dimensions(ex2_5):
    assert solve_space(ex2_5, SpaceKind.DER, 0, 0).dim == 1
    assert solve_space(ex2_5, SpaceKind.DER, 1, 0).dim == 0
    assert solve_space(ex2_5, SpaceKind.C, 1, 0).dim == 0
    assert solve_space(ex2_5, SpaceKind.QC, 1, 0).dim == 1


def test_known_bases(ex2_5):
    der0 = solve_space(ex2_5, SpaceKind.DER, 0, 0)
    assert der0.tuples[0][0].matrix == diag(1, 0, -1)
    qc1 = solve_space(ex2_5, SpaceKind.QC, 1, 0)
    assert qc1.tuples[0][0].matrix == diag(1, 2, 2)


def test_qder_projection_is_diagonal(ex2_5):
    span = project_component(solve_space(ex2_5, SpaceKind.QDER, 1, 0), 0)
    expected = Subspace.from_vectors(
        9, [diag(1, 0, 0).entries, diag(0, 1, 0).entries, diag(0, 0, 1).entries])
    assert span == expected


def test_zder_vacuous_on_abelian():
    spec = AlgebraSpec.from_pairs("ab2", (0, 0), Matrix.identity(2), {})
    assert solve_space(spec, SpaceKind.ZDER, 0, 0).dim == 4


def test_gder_third_component_is_twist_commutant(abelian2):
    # no bracket constraints, so D'' is cut out by commutation alone
    span = project_component(solve_space(abelian2, SpaceKind.GDER, 0, 0), 2)
    expected = Subspace.from_vectors(
        4, [diag(1, 0).entries, diag(0, 1).entries])
    assert span == expected


def test_odd_degree_space_on_even_algebra_is_zero(ex2_5):
    for kind in ALL_KINDS:
        assert solve_space(ex2_5, kind, 0, 1).dim == 0


def test_negative_k_rejected(ex2_5):
    with pytest.raises(ValueError):
        solve_space(ex2_5, SpaceKind.DER, -1, 0)


def test_projection_index_range(ex2_5):
    space = solve_space(ex2_5, SpaceKind.QDER, 0, 0)
    with pytest.raises(IndexError):
        project_component(space, 2)


def test_supercommutator_rules():
    d = GradedMap(diag(1, 2, 2), 0)
    assert supercommutator(d, d).is_zero()
    e = GradedMap(diag(1, 0, -1), 0)
    assert supercommutator(d, e).is_zero()
    a = GradedMap(Matrix.from_rows([[0, 1], [0, 0]]), 1)
    b = GradedMap(Matrix.from_rows([[0, 0], [1, 0]]), 1)
    res = supercommutator(a, b)
    assert res.degree == 0
    assert res.matrix == Matrix.identity(2)  # ab + ba for odd maps


def test_jordan_product_rules():
    d = GradedMap(diag(1, 2, 2), 0)
    assert jordan_product(d, d).matrix == diag(2, 8, 8)
    one = GradedMap(Matrix.identity(3), 0)
    assert jordan_product(one, d).matrix == diag(2, 4, 4)


def test_alpha_shift(ex2_5):
    d = GradedMap(diag(1, 0, -1), 0)
    assert alpha_shift(ex2_5, d).matrix == diag(1, 0, -2)
    zero = GradedMap(Matrix.zeros(3, 3), 0)
    assert alpha_shift(ex2_5, zero).is_zero()
    ident_spec = AlgebraSpec.from_pairs("ab3", (0, 0, 0),
                                        Matrix.identity(3), {})
    assert alpha_shift(ident_spec, d).matrix == d.matrix


@given(st.lists(st.integers(-2, 2), min_size=2, max_size=2),
       st.lists(st.integers(-2, 2), min_size=2, max_size=2),
       st.sampled_from([(0, 0), (0, 1), (1, 1)]))
def test_degree_bookkeeping(odd_heisenberg, xs, ys, degs):
    # build homogeneous maps on the 1|1 space for each degree pattern
    def hom_map(vals, degree):
        if degree == 0:
            return GradedMap(diag(*vals), degree)
        return GradedMap(Matrix.from_rows([[0, vals[0]], [vals[1], 0]]), degree)

    da, db = degs
    a, b = hom_map(xs, da), hom_map(ys, db)
    for prod in (supercommutator(a, b), jordan_product(a, b), compose(a, b)):
        assert prod.degree == (da + db) % 2
        assert is_homogeneous(odd_heisenberg, prod)


def test_defining_residuals_vanish_on_solutions(bundled):
    for spec in bundled.values():
        for kind in ALL_KINDS:
            for k in (0, 1, 2):
                for th in (0, 1):
                    space = solve_space(spec, kind, k, th)
                    for t in space.tuples:
                        mats = [[list(g.matrix.row(r))
                                 for r in range(spec.n)] for g in t]
                        for res in defining_residuals(spec, kind, k, th, mats):
                            assert all(x == 0 for x in res)


def test_shift_stability_on_multiplicative_algebras(bundled):
    for name in ("abelian2", "heisenberg3", "odd_heisenberg"):
        spec = bundled[name]
        for kind in ALL_KINDS:
            for k in (0, 1):
                for th in (0, 1):
                    src = solve_space(spec, kind, k, th)
                    tgt = solve_space(spec, kind, k + 1, th).as_subspace()
                    for t in src.tuples:
                        shifted = tuple(alpha_shift(spec, g) for g in t)
                        assert contains(tgt, tuple_vector(shifted)), (name, kind, k)


def test_shift_needs_multiplicativity(ex2_5):
    # the level-raising shift genuinely fails without a bracket-preserving
    # twist: here Der at k=1 is zero but the shifted k=0 derivation is not
    d = solve_space(ex2_5, SpaceKind.DER, 0, 0).tuples[0][0]
    shifted = alpha_shift(ex2_5, d)
    tgt = solve_space(ex2_5, SpaceKind.DER, 1, 0)
    assert tgt.dim == 0 and not shifted.is_zero()


def test_split_equality_per_level(bundled):
    from homlie.linalg import subspace_sum
    for spec in bundled.values():
        for k in (0, 1, 2):
            for th in (0, 1):
                gder0 = project_component(
                    solve_space(spec, SpaceKind.GDER, k, th), 0)
                qder0 = project_component(
                    solve_space(spec, SpaceKind.QDER, k, th), 0)
                qc = project_component(
                    solve_space(spec, SpaceKind.QC, k, th), 0)
                assert gder0 == subspace_sum(qder0, qc), (spec.name, k, th)


def test_decompose_symmetric_case(ex2_5):
    # quasiderivation pairs embed as (D, D, D'), splitting to (D, 0)
    qd = solve_space(ex2_5, SpaceKind.QDER, 1, 0)
    d, dp = qd.tuples[0]
    (dq, partner), dc = decompose_generalized(ex2_5, 1, 0, (d, d, dp))
    assert dq.matrix == d.matrix
    assert partner.matrix == dp.matrix
    assert dc.is_zero()


def test_decompose_antisymmetric_case(ex2_5):
    d = solve_space(ex2_5, SpaceKind.QC, 1, 0).tuples[0][0]
    neg = GradedMap(d.matrix.scale(-1), 0)
    zero = GradedMap(Matrix.zeros(3, 3), 0)
    (dq, _), dc = decompose_generalized(ex2_5, 1, 0, (d, neg, zero))
    assert dq.is_zero()
    assert dc.matrix == d.matrix


def test_decompose_is_linear(ex2_5):
    qd = solve_space(ex2_5, SpaceKind.QDER, 1, 0)
    d, dp = qd.tuples[0]
    qc = solve_space(ex2_5, SpaceKind.QC, 1, 0).tuples[0][0]
    triple = (GradedMap(d.matrix + qc.matrix, 0),
              GradedMap(d.matrix - qc.matrix, 0),
              dp)
    (dq, partner), dc = decompose_generalized(ex2_5, 1, 0, triple)
    assert dq.matrix == d.matrix
    assert dc.matrix == qc.matrix
    assert triple[0].matrix == dq.matrix + dc.matrix
    qspace = solve_space(ex2_5, SpaceKind.QDER, 1, 0)
    assert space_contains(qspace, (dq, partner))
    qcspan = project_component(solve_space(ex2_5, SpaceKind.QC, 1, 0), 0)
    assert contains(qcspan, dc.flatten())


def test_decompose_rejects_non_member(ex2_5):
    bad = GradedMap(Matrix.from_rows([[0, 1, 0], [0, 0, 0], [0, 0, 0]]), 0)
    zero = GradedMap(Matrix.zeros(3, 3), 0)
    with pytest.raises(ValueError):
        decompose_generalized(ex2_5, 1, 0, (bad, zero, zero))


def test_inclusion_chain_bundled(bundled):
    for spec in bundled.values():
        rep = check_inclusion_chain(spec, 2)
        assert rep.ok, [c.name for c in rep.checks if c.status == "fail"]


def test_bracket_laws_bundled(bundled):
    for spec in bundled.values():
        rep = check_bracket_laws(spec, 2)
        assert rep.ok, (spec.name,
                        [c.name for c in rep.checks if c.status == "fail"])


def test_bracket_laws_shift_gating(bundled):
    ex_statuses = {c.name: c.status
                   for c in check_bracket_laws(bundled["ex2_5"], 1).checks}
    heis_statuses = {c.name: c.status
                     for c in check_bracket_laws(bundled["heisenberg3"], 1).checks}
    shift_names = [n for n in ex_statuses if n.startswith("shift ")]
    assert shift_names
    assert all(ex_statuses[n] == "skipped" for n in shift_names)
    assert all(heis_statuses[n] == "pass" for n in shift_names)


def test_heisenberg_c_qc_bracket_lands_in_center(heisenberg3):
    from homlie.algebra import center
    z = center(heisenberg3)
    c_maps = [t[0] for t in solve_space(heisenberg3, SpaceKind.C, 0, 0).tuples]
    qc_maps = [t[0] for t in solve_space(heisenberg3, SpaceKind.QC, 0, 0).tuples]
    for a in c_maps:
        for b in qc_maps:
            g = supercommutator(a, b)
            for i in range(3):
                assert contains(z, g.matrix.col(i))


def test_qc_structure_bundled(bundled):
    for spec in bundled.values():
        rep = check_qc_structure(spec, 2)
        assert rep.ok, (spec.name,
                        [c.name for c in rep.checks if c.status == "fail"])


def test_qc_circle_product_supercommutative(odd_heisenberg):
    from homlie.algebra import parity_sign
    maps = []
    for th in (0, 1):
        maps.extend(t[0] for t in
                    solve_space(odd_heisenberg, SpaceKind.QC, 0, th).tuples)
    assert any(g.degree == 1 for g in maps)
    for a in maps:
        for b in maps:
            lhs = jordan_product(a, b).matrix
            rhs = jordan_product(b, a).matrix.scale(
                parity_sign(a.degree, b.degree))
            assert lhs == rhs


def test_solver_matches_oracle_spot(bundled):
    # the full sweep lives in the acceptance suite; spot-check here
    for name in ("ex2_5", "odd_heisenberg"):
        spec = bundled[name]
        for kind in ALL_KINDS:
            got = solve_space(spec, kind, 1, 0).stacked()
            want = oracle_solve(spec, kind, 1, 0, True)
            assert got == want, (name, kind)


def test_space_kind_parse():
    assert SpaceKind.parse("QDer") is SpaceKind.QDER
    assert SpaceKind.parse("zder") is SpaceKind.ZDER
    with pytest.raises(ValueError):
        SpaceKind.parse("Frobenius")
