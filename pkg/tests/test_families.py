"""Closed forms, base labelings, the splice induction, and family witnesses."""

import pytest

from cordial import (
    DeficiencyValue,
    LabeledFamilyInstance,
    NotApplicable,
    NoUnitCrossEdge,
    SizeTooSmall,
    StrictlyNoncordial,
    VertexLabeling,
    balance,
    base_mobius_labeling,
    ced_complete,
    check_certificate,
    complete_cordial_labeling,
    complete_ced_witness,
    complete_cvd_witness,
    complete_graph,
    complete_split,
    construct_mobius_labeling,
    cvd_complete,
    cvd_complete_literal,
    cycle_cordial_labeling,
    graft,
    graft_with_seams,
    instance_certificate,
    is_cordial_complete,
    is_cordial_cycle,
    is_cordial_mobius,
    is_cordial_wheel,
    mobius_ced_witness,
    mobius_cvd_witness,
    wheel_cordial_labeling,
    wheel_ced_witness,
    wheel_cvd_witness,
    wheel_graph,
)

# ----------------------------------------------------------- complete forms


def test_complete_split_balances_edges_when_it_exists():
    for n in range(1, 20):
        split = complete_split(n)
        if n in (5, 8, 10, 12, 13, 15, 17, 19):
            assert split is None
            continue
        assert split is not None
        labels = (0,) * split.ell + (1,) * (n - split.ell)
        rep = balance(complete_graph(n), VertexLabeling(labels))
        assert rep.edge_diff <= 1
        assert rep.vertex_diff == split.j


def test_ced_complete_closed_form():
    assert [ced_complete(n).value for n in range(2, 11)] == [
        0, 0, 1, 1, 2, 2, 3, 3, 4,
    ]
    with pytest.raises(SizeTooSmall):
        ced_complete(1)


def test_cvd_literal_diverges_from_operational_only_at_two():
    for n in range(1, 60):
        literal, operational = cvd_complete_literal(n), cvd_complete(n)
        if n == 2:
            assert literal == DeficiencyValue.finite(1)
            assert operational == DeficiencyValue.finite(0)
        else:
            assert literal == operational


def test_cordiality_predicates():
    assert [n for n in range(1, 9) if is_cordial_complete(n)] == [1, 2, 3]
    assert [n for n in range(3, 11) if not is_cordial_cycle(n)] == [6, 10]
    assert [k for k in range(3, 15) if not is_cordial_mobius(k)] == [6, 10, 14]
    assert [n for n in range(3, 12) if not is_cordial_wheel(n)] == [3, 7, 11]


def test_complete_witnesses():
    w = complete_ced_witness(7)
    assert w.claimed_value == 2 and w.added_edges == ((0, 1), (0, 1))
    assert check_certificate(w).accepted
    w = complete_cvd_witness(7)
    assert w.claimed_value == 2 and w.added_vertex_labels in ((0, 0), (1, 1))
    assert check_certificate(w).accepted
    with pytest.raises(StrictlyNoncordial):
        complete_cvd_witness(5)
    inst = complete_cordial_labeling(3)
    assert inst.is_cordial
    with pytest.raises(NotApplicable):
        complete_cordial_labeling(4)


# ------------------------------------------------------------------ mobius


def test_base_labelings_are_friendly_with_pinned_counts():
    counts = {3: (4, 5), 4: (6, 6), 5: (8, 7)}
    for k, (e0, e1) in counts.items():
        inst = base_mobius_labeling(k)
        assert (inst.balance.e0, inst.balance.e1) == (e0, e1)
        assert inst.balance.vertex_diff <= 1
        assert inst.is_cordial
        # the splice anchor: a cross edge with both ends labeled 1
        assert inst.labeling[0] == 1 and inst.labeling[k] == 1


def test_base_labeling_gating():
    with pytest.raises(SizeTooSmall):
        base_mobius_labeling(2)
    with pytest.raises(NotApplicable):
        base_mobius_labeling(6)


def test_graft_adds_four_to_the_width():
    merged = graft(base_mobius_labeling(5), base_mobius_labeling(4))
    assert merged.spec.size == 9
    assert merged.is_cordial


def test_graft_seams_conserve_edge_labels():
    big = construct_mobius_labeling(9)
    merged, seams = graft_with_seams(big, base_mobius_labeling(4))
    assert seams.removed_labels == seams.added_labels
    assert len(seams.removed_labels) == 4
    # balance counts are therefore additive across the splice
    assert merged.balance.e0 == big.balance.e0 + 6
    assert merged.balance.e1 == big.balance.e1 + 6
    assert merged.balance.v1 == big.balance.v1 + 4


def test_graft_requires_a_unit_cross_edge():
    # labels chosen so every cross edge (i, i+3) joins a 0 and a 1
    awkward = LabeledFamilyInstance.build("mobius", 3, (0, 0, 0, 1, 1, 1))
    with pytest.raises(NoUnitCrossEdge):
        graft(awkward, base_mobius_labeling(4))


def test_construct_mobius_all_admissible_widths():
    for k in range(3, 31):
        if k % 4 == 2:
            with pytest.raises(NotApplicable):
                construct_mobius_labeling(k)
            continue
        inst = construct_mobius_labeling(k)
        assert inst.spec.size == k and inst.is_cordial
        assert check_certificate(instance_certificate(inst)).accepted


def test_mobius_witnesses_have_pinned_balance():
    w = mobius_ced_witness(6)
    rep = balance(w.resolve_graph(), VertexLabeling(w.labels))
    assert (rep.e0, rep.e1) == (10, 8)
    assert rep.vertex_diff == 0
    assert check_certificate(w).accepted

    w = mobius_cvd_witness(6)
    rep = balance(w.resolve_graph(), VertexLabeling(w.labels))
    assert rep.e0 == rep.e1 == 9
    assert (rep.v0, rep.v1) == (5, 7)
    assert w.added_vertex_labels == (0,)
    assert check_certificate(w).accepted


def test_mobius_witnesses_extend_by_grafting():
    for k in (10, 14, 18):
        for w in (mobius_ced_witness(k), mobius_cvd_witness(k)):
            assert w.param == k and w.claimed_value == 1
            assert check_certificate(w).accepted


def test_mobius_witness_gating():
    with pytest.raises(NotApplicable):
        mobius_ced_witness(8)
    with pytest.raises(NotApplicable):
        mobius_cvd_witness(7)
    with pytest.raises(SizeTooSmall):
        mobius_ced_witness(2)


# ------------------------------------------------------------ cycle, wheel


def test_cycle_labeling_pattern():
    inst = cycle_cordial_labeling(7)
    assert inst.labeling.to_string() == "1100110"
    assert inst.is_cordial
    with pytest.raises(NotApplicable):
        cycle_cordial_labeling(6)


def test_wheel_labeling_all_admissible_sizes():
    for n in range(3, 31):
        if n % 4 == 3:
            with pytest.raises(NotApplicable):
                wheel_cordial_labeling(n)
            continue
        inst = wheel_cordial_labeling(n)
        assert inst.is_cordial
        assert inst.labeling[n] == 0  # hub


def test_wheel_ced_witness_balance():
    w = wheel_ced_witness(7)
    assert w.labels[7] == 0
    rep = balance(wheel_graph(7), VertexLabeling(w.labels))
    assert (rep.e0, rep.e1) == (6, 8)
    assert check_certificate(w).accepted


def test_wheel_cvd_witness_balances_edges_exactly():
    for n in (7, 11, 15):
        w = wheel_cvd_witness(n)
        assert w.labels[n] == 1
        rep = balance(wheel_graph(n), VertexLabeling(w.labels))
        assert rep.e0 == rep.e1 == n
        assert w.added_vertex_labels == (0,)
        assert check_certificate(w).accepted


def test_wheel_witness_gating():
    with pytest.raises(NotApplicable):
        wheel_ced_witness(3)  # below the witness range
    with pytest.raises(NotApplicable):
        wheel_ced_witness(8)
    with pytest.raises(NotApplicable):
        wheel_cvd_witness(9)
