from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from famkit import cyclo, groups as gr

fc = gr.from_cycles


def s2():
    return gr.symmetric_group(2)


def s2s2():
    return gr.PermGroup(4, [fc(4, (1, 2)), fc(4, (3, 4))])


def s2s3():
    return gr.PermGroup(5, [fc(5, (1, 2)), fc(5, (3, 4, 5)), fc(5, (3, 4))])


def d8():
    return gr.PermGroup(4, [fc(4, (1, 2)), fc(4, (3, 4)), fc(4, (1, 3), (2, 4))])


def matmul(a, b):
    n = len(a)
    return [
        [sum((a[i][k] * b[k][j] for k in range(n)), cyclo.ZERO) for j in range(n)]
        for i in range(n)
    ]


def is_identity(m):
    n = len(m)
    return all(m[i][j] == (1 if i == j else 0) for i in range(n) for j in range(n))


def test_perm_helpers():
    g = fc(5, (1, 2, 3), (4, 5))
    assert gr.compose(g, gr.invert(g)) == gr.identity_perm(5)
    assert gr.perm_order(g) == 6
    assert gr.perm_power(g, 6) == gr.identity_perm(5)
    h = fc(5, (1, 4))
    assert gr.conj(h, fc(5, (1, 2))) == fc(5, (4, 2))


def test_from_cycles_rejects_overlap():
    with pytest.raises(AssertionError):
        fc(4, (1, 2), (2, 3))


@pytest.mark.parametrize(
    "group,order,nclasses",
    [
        (gr.PermGroup(1, []), 1, 1),
        (s2(), 2, 2),
        (gr.symmetric_group(3), 6, 3),
        (gr.symmetric_group(4), 24, 5),
        (gr.symmetric_group(5), 120, 7),
        (d8(), 8, 5),
        (s2s2(), 4, 4),
        (s2s3(), 12, 6),
    ],
)
def test_closure_and_classes(group, order, nclasses):
    assert group.order == order
    assert len(group.classes) == nclasses
    assert sum(len(c) for c in group.classes) == order


def test_order_bound():
    with pytest.raises(ValueError):
        gr.symmetric_group(6)


def test_s5_class_data():
    s5 = gr.symmetric_group(5)
    assert sorted(len(c) for c in s5.classes) == [1, 10, 15, 20, 20, 24, 30]
    g5 = fc(5, (1, 2, 3, 4, 5))
    assert s5.centralizer_group(g5).order == 5
    for i, cls in enumerate(s5.classes):
        assert len(cls) * s5.centralizer_group(s5.reps[i]).order == 120


def test_transport_is_conjugation_witness():
    s4 = gr.symmetric_group(4)
    for x in s4.elements:
        rep = s4.reps[s4.class_index[x]]
        g = s4.transport(x, rep)
        assert gr.conj(g, x) == rep


@given(st.data())
def test_conjugation_preserves_class(data):
    s4 = gr.symmetric_group(4)
    g = data.draw(st.sampled_from(s4.elements))
    x = data.draw(st.sampled_from(s4.elements))
    assert s4.class_index[gr.conj(g, x)] == s4.class_index[x]


@pytest.mark.parametrize(
    "group,degrees",
    [
        (gr.PermGroup(1, []), (1,)),
        (s2(), (1, 1)),
        (gr.symmetric_group(3), (1, 1, 2)),
        (gr.symmetric_group(4), (1, 1, 2, 3, 3)),
        (gr.symmetric_group(5), (1, 1, 4, 4, 5, 5, 6)),
        (d8(), (1, 1, 1, 1, 2)),
    ],
)
def test_char_degrees(group, degrees):
    assert group.char_table().degrees == degrees


def test_cyclic_centralizer_of_five_cycle():
    s5 = gr.symmetric_group(5)
    c5 = s5.centralizer_group(fc(5, (1, 2, 3, 4, 5)))
    tab = c5.char_table()
    assert tab.degrees == (1, 1, 1, 1, 1)
    rows = set()
    for a in range(5):
        for v in tab.values[a]:
            acc = cyclo.ONE
            for _ in range(5):
                acc = acc * v
            assert acc == 1
        rows.add(tuple(v.canonical() for v in tab.values[a]))
    assert len(rows) == 5


def test_orthogonality_for_catalog():
    for group in [
        gr.PermGroup(1, []),
        s2(),
        gr.symmetric_group(3),
        gr.symmetric_group(4),
        gr.symmetric_group(5),
        d8(),
        s2s2(),
        s2s3(),
    ]:
        assert group.char_table().verify_orthogonality()


def test_trivial_index():
    tab = gr.symmetric_group(3).char_table()
    assert all(v == 1 for v in tab.values[tab.trivial_index()])


@pytest.mark.parametrize(
    "group,count",
    [
        (gr.PermGroup(1, []), 1),
        (s2(), 4),
        (gr.symmetric_group(3), 8),
        (gr.symmetric_group(4), 21),
        (gr.symmetric_group(5), 39),
        (d8(), 22),
        (s2s2(), 16),
        (s2s3(), 32),
    ],
)
def test_point_counts(group, count):
    assert len(gr.PairingModule(group).points) == count


def test_unit_point_and_regular_vector():
    m2 = gr.PairingModule(s2())
    assert m2.points == ((0, 0), (0, 1), (1, 0), (1, 1))
    unit = m2.unit_point()
    assert unit == (0, 1)
    assert m2.regular_vector() == {(0, 0): 1, (0, 1): 1}
    m3 = gr.PairingModule(gr.symmetric_group(3))
    reg = m3.regular_vector()
    tab = m3.cents[0][1]
    assert reg == {(0, a): Fraction(tab.degrees[a]) for a in range(3)}


def test_induce_identity_map():
    m3 = gr.PairingModule(gr.symmetric_group(3))
    for pt in m3.points:
        assert m3.induce(m3, pt) == {pt: 1}


def test_project_identity_map():
    s3 = gr.symmetric_group(3)
    m3 = gr.PairingModule(s3)
    proj = {g: g for g in s3.elements}
    for pt in m3.points:
        assert m3.project(m3, proj, pt) == {pt: 1}


def test_project_onto_point():
    # collapsing S2 entirely spreads the unit over both classes
    m2 = gr.PairingModule(s2())
    mt = gr.PairingModule(gr.PermGroup(1, []))
    proj = {g: (0,) for g in m2.group.elements}
    got = m2.project(mt, proj, mt.unit_point())
    triv = m2.cents[0][1].trivial_index()
    assert got == {(0, triv): 1, (1, m2.cents[1][1].trivial_index()): 1}


def test_transfer_composes_both_maps():
    m2 = gr.PairingModule(s2())
    mt = gr.PairingModule(gr.PermGroup(1, []))
    proj = {g: (0,) for g in m2.group.elements}
    got = m2.transfer(m2, mt, proj, {mt.unit_point(): Fraction(1)})
    assert got == m2.project(mt, proj, mt.unit_point())


def test_project_weights_nonnegative():
    big = gr.PairingModule(s2s2())
    quot, proj = gr.restriction_hom(big.group, [3, 4])
    mq = gr.PairingModule(quot)
    for pt in mq.points:
        for weight in big.project(mq, proj, pt).values():
            assert weight >= 0


def test_young_rule_induction():
    s5 = gr.symmetric_group(5)
    h22 = gr.PermGroup(5, [fc(5, (1, 2)), fc(5, (3, 4))])
    ind = gr.induced_values(s5, h22, [cyclo.ONE] * len(h22.reps))
    tab = s5.char_table()
    transp = next(
        j
        for j, rep in enumerate(s5.reps)
        if gr.perm_order(rep) == 2 and sum(1 for i, x in enumerate(rep) if i != x) == 2
    )
    got = {}
    for a in range(tab.nchars):
        key = (tab.degrees[a], tab.values[a][transp].as_fraction())
        got[key] = gr.inner_multiplicity(s5, ind, tab.values[a])
    assert got == {
        (1, Fraction(1)): 1,
        (1, Fraction(-1)): 0,
        (4, Fraction(2)): 2,
        (4, Fraction(-2)): 0,
        (5, Fraction(1)): 2,
        (5, Fraction(-1)): 1,
        (6, Fraction(0)): 1,
    }


def test_restriction_recovers_inductee():
    s3 = gr.symmetric_group(3)
    sub = gr.PermGroup(3, [fc(3, (1, 2))])
    tab = s3.char_table()
    vals = gr.restricted_values(s3, sub, tab.values[2])
    assert [v.as_fraction() for v in vals] == [2, 0]


def test_restriction_hom_quotients():
    quot, proj = gr.restriction_hom(s2s3(), [3, 4, 5])
    assert quot.order == 6 and len(quot.classes) == 3
    kernel = [g for g in s2s3().elements if proj[g] == gr.identity_perm(3)]
    assert len(kernel) == 2


def test_block_hom_quotient():
    quot, proj = gr.block_hom(d8(), [{1, 2}, {3, 4}])
    assert quot.order == 2
    kernel = sorted(g for g in d8().elements if proj[g] == (0, 1))
    assert kernel == sorted(s2s2().elements)


def test_generic_quotient_matches():
    big = s2s3()
    h2 = gr.PermGroup(5, [fc(5, (1, 2))])
    quot, proj = gr.quotient_group(big, h2)
    assert quot.order == 6 and len(quot.classes) == 3
    for g in big.elements:
        for h in big.elements:
            assert proj[gr.compose(g, h)] == gr.compose(proj[g], proj[h])


def test_quotient_requires_normal():
    s3 = gr.symmetric_group(3)
    with pytest.raises(ValueError):
        gr.quotient_group(s3, gr.PermGroup(3, [fc(3, (1, 2))]))


def test_fourier_s2_exact():
    m2 = gr.PairingModule(s2())
    a = m2.fourier()
    half = Fraction(1, 2)
    expected = [
        [half, half, -half, -half],
        [half, half, half, half],
        [-half, half, half, -half],
        [-half, half, -half, half],
    ]
    assert all(a[i][j] == expected[i][j] for i in range(4) for j in range(4))


@pytest.mark.parametrize(
    "group",
    [gr.PermGroup(1, []), s2(), gr.symmetric_group(3), d8(), s2s2()],
)
def test_fourier_involution_small(group):
    mod = gr.PairingModule(group)
    a = mod.fourier()
    n = len(a)
    assert all(a[i][j] == a[j][i] for i in range(n) for j in range(n))
    assert all(a[i][j].is_real() for i in range(n) for j in range(n))
    assert is_identity(matmul(a, a))


def test_xor_perm_group():
    masks = [0, 1, 2, 3]
    group, to_perm = gr.xor_perm_group(masks)
    assert group.order == 4 and len(group.classes) == 4
    assert to_perm[1] != to_perm[2]
    for m in masks:
        assert gr.perm_order(to_perm[m]) in (1, 2)


def test_xor_perm_group_needs_zero():
    with pytest.raises(AssertionError):
        gr.xor_perm_group([1, 2])
