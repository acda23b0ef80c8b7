import itertools

from hypothesis import given, strategies as st

from famkit import f2


def rand_vec(D):
    return st.integers(min_value=0, max_value=(1 << D) - 1).map(
        lambda b: f2.F2Vector(D, b)
    )


def test_form_on_basis():
    D = 8
    for i in range(1, D + 1):
        for j in range(1, D + 1):
            got = f2.symp_pair(f2.e_single(D, i), f2.e_single(D, j))
            assert got == (1 if abs(i - j) == 1 else 0)


@given(rand_vec(9), rand_vec(9))
def test_form_symmetric(x, y):
    assert f2.symp_pair(x, y) == f2.symp_pair(y, x)


@given(rand_vec(10), rand_vec(10), rand_vec(10))
def test_form_bilinear(x, y, z):
    assert f2.symp_pair(x + y, z) == (f2.symp_pair(x, z) + f2.symp_pair(y, z)) % 2


def test_radical():
    # even D: nondegenerate; odd D: radical spanned by the alternating vector
    for D in range(1, 9):
        rad = [
            b
            for b in range(1 << D)
            if all(
                f2.symp_pair(f2.F2Vector(D, b), f2.e_single(D, i)) == 0
                for i in range(1, D + 1)
            )
        ]
        if D % 2 == 0:
            assert rad == [0]
        else:
            assert sorted(rad) == sorted([0, f2.alt_vector(D).bits])


def test_interval_vector():
    assert f2.e_interval(6, 2, 4).support() == (2, 3, 4)
    assert f2.e_interval(6, 5, 2).bits == 0
    assert f2.e_all(3).support() == (1, 2, 3)


def test_subspace_basics():
    D = 6
    Z = f2.F2Subspace.from_vectors(
        D, [f2.e_interval(D, 1, 3), f2.e_single(D, 4), f2.e_interval(D, 1, 4)]
    )
    assert Z.dim() == 2
    assert Z.contains(f2.e_interval(D, 1, 4))
    assert not Z.contains(f2.e_single(D, 1))
    assert len(Z.elements()) == 4


def test_perp_dimension_and_double():
    for D in (4, 6):
        for rows in itertools.combinations([1, 3, 6, 9, 12], 2):
            Z = f2.F2Subspace(D, rows)
            P = f2.perp(Z)
            assert P.dim() == D - Z.dim()
            assert f2.perp(P) == Z
            for x in Z.basis():
                for y in P.basis():
                    assert f2.symp_pair(x, y) == 0


def test_intersect_is_meet():
    D = 5
    A = f2.F2Subspace(D, [0b00111, 0b11000])
    B = f2.F2Subspace(D, [0b00111, 0b00101])
    M = A.intersect(B)
    for m in M.element_bits():
        assert A.contains_bits(m) and B.contains_bits(m)
    assert M.dim() == A.dim() + B.dim() - A.plus(B).dim()


def test_shriek_lands_in_parity_piece():
    D = 6
    Z = f2.F2Subspace.from_vectors(D, [f2.e_single(D, 2)])
    S = f2.perp_in_parity(Z, 1)
    pm = f2.parity_mask(D, 1)
    for r in S.rows:
        assert r & ~pm == 0
    # x in Z^! pairs to zero with Z
    for x in S.basis():
        assert f2.symp_pair(x, f2.e_single(D, 2)) == 0


def test_insert_pair_on_basis():
    # image of e_(i-1) picks up the new neighbours
    x = f2.vector(4, [1, 2, 4])
    y = f2.insert_pair(3, x)
    assert y.support() == (1, 2, 3, 4, 6)


@given(st.integers(min_value=1, max_value=8), rand_vec(6), rand_vec(6))
def test_t_preserves_form(i, x, y):
    assert f2.symp_pair(x, y) == f2.symp_pair(f2.insert_pair(i, x), f2.insert_pair(i, y))


def test_t_injective():
    seen = set()
    for b in range(1 << 4):
        seen.add(f2.insert_pair(2, f2.F2Vector(4, b)).bits)
    assert len(seen) == 1 << 4


def test_vprime_quotient():
    vp = f2.Quotient(5)
    x = f2.vector(5, [2, 5])
    assert vp.pi(x) == f2.vector(5, [1, 2, 3])
    assert vp.pi(vp.pi(x)) == vp.pi(x)
    assert vp.lift(vp.section(x)) == vp.pi(x)
    assert vp.pair(x, x) == 0


def test_render_parse_round_trip():
    v = f2.vector(10, [1, 2, 10])
    assert f2.render_vector(v) == "12A"
    assert f2.parse_vector(10, "12A") == v
    Z = f2.F2Subspace.from_vectors(6, [f2.e_single(6, 5), f2.e_interval(6, 1, 3)])
    assert f2.parse_subspace(6, f2.render_subspace(Z)) == Z
