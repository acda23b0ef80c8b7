from famkit import bijections as bj, f2, intervals as iv


def test_chain_slots_empty_seed():
    ch = bj.ChainData(iv.IntervalSet(7, []))
    assert ch.slots == [(j, j) for j in range(1, 8)]
    assert ch.delta == 7


def test_chain_slots_around_member():
    ch = bj.ChainData(iv.IntervalSet(7, [(3, 3)]))
    assert ch.slots == [(1, 1), (2, 4), (5, 5), (6, 6), (7, 7)]


def test_chain_construction_invariants():
    # the constructor checks slot count, ascending order and touching; this
    # exercises those asserts across every seed at small sizes
    for D in range(0, 10):
        for B in iv.enumerate_odd_families(D):
            ch = bj.ChainData(B)
            full = D % 2 == 1 and len(B) == (D + 1) // 2
            assert ch.delta == (0 if full else D - 2 * len(B))


def test_extension_example():
    B = iv.IntervalSet(8, [])
    got = bj.extend_family(B, 2)
    assert got == iv.IntervalSet(8, [(1, 8), (2, 7)])


def test_extension_reaches_every_family_once():
    for D in range(0, 12):
        seen = {}
        for B, k in bj.seed_pairs(D):
            Bk = bj.extend_family(B, k)
            assert Bk not in seen, (D, B, k, seen[Bk])
            seen[Bk] = (B, k)
        assert set(seen) == iv.enumerate_families(D)


def test_split_inverts_extension():
    for D in range(0, 11):
        for B, k in bj.seed_pairs(D):
            assert bj.split_family(bj.extend_family(B, k)) == (B, k)


def test_coord_oracle_rows():
    # rows checked by hand, one from each block of the reference listings
    rows = [
        (1, "()", "0"),
        (1, "(1)", "1"),
        (3, "()", "0"),
        (3, "(3a)", "12"),
        (3, "(1a)", "23"),
        (3, "(1)", "1"),
        (3, "(3)", "3"),
        (3, "(1,3)", "13"),
        (3, "(2)", "2"),
        (3, "(2,123)", "123"),
        (5, "(5,145a)", "23"),
        (5, "(5,345a)", "125"),
        (7, "(7a,167a,12567a)", "1256"),
        (7, "(1,7,12367a)", "145"),
        (7, "(1,7,12567a)", "347"),
    ]
    for D, text, want in rows:
        v = bj.coord_star(D, iv.parse_star_set(D, text))
        assert f2.render_vector(v) == want, (D, text, want)


def test_coord_bijective():
    for D in range(0, 11):
        seen = {}
        for B in iv.enumerate_families(D):
            v = bj.coord_family(B)
            assert v not in seen, (D, B, seen[v])
            seen[v] = B
        assert len(seen) == 1 << D


def test_coord_plain_formula_agrees():
    for D in range(0, 11, 2):
        for B in iv.enumerate_families(D):
            assert bj.coord_plain(B) == bj.coord_family(B), B


def test_quotient_family_size():
    for D in range(1, 10, 2):
        assert len(bj.enumerate_quotient_sets(D)) == 1 << (D - 1)


def test_quotient_membership_examples():
    q5 = bj.enumerate_quotient_sets(5)
    assert iv.IntervalSet(5, [(2, 3), (5, 5)]) in q5
    assert iv.IntervalSet(5, [(1, 2), (5, 5)]) not in q5
    q7 = bj.enumerate_quotient_sets(7)
    assert iv.IntervalSet(7, [(2, 5), (7, 7)]) in q7
    assert iv.IntervalSet(7, [(1, 1), (4, 5), (7, 7)]) in q7
    assert iv.IntervalSet(7, [(1, 6), (2, 5), (3, 4)]) in q7


def test_descend_is_bijective():
    for D in range(1, 10, 2):
        dm = bj.descend_map(D)
        assert set(dm) == set(bj.enumerate_quotient_sets(D))
        imgs = set(dm.values())
        assert len(imgs) == len(dm)
        assert imgs == iv.enumerate_families(D - 1)


def test_descend_commutes_with_coord():
    # the coordinate of a quotient family already avoids the top position
    # and equals the coordinate of its image downstairs
    for D in range(1, 10, 2):
        for Bk, img in bj.descend_map(D).items():
            v = bj.coord_family(Bk)
            assert not v.has(D), Bk
            assert v.bits == bj.coord_family(img).bits, (Bk, img)


def test_coord_quotient_injective():
    for D in range(1, 10, 2):
        vp = f2.Quotient(D)
        seen = set()
        for Bk in bj.enumerate_quotient_sets(D):
            v = bj.coord_quotient(vp, Bk)
            assert not v.has(D)
            seen.add(v)
        assert len(seen) == 1 << (D - 1)


def test_signed_run_count_examples():
    assert bj.signed_run_count(f2.vector(4, [])) == 0
    assert bj.signed_run_count(f2.vector(4, [1, 2])) == -1
    assert bj.signed_run_count(f2.vector(4, [2, 3])) == 1
    assert bj.signed_run_count(f2.vector(4, [1, 2, 3])) == 0
    assert bj.signed_run_count(f2.vector(6, [1, 2, 4, 5])) == 0
    assert bj.signed_run_count(f2.vector(6, [2, 3, 5, 6])) == 0
    assert bj.signed_run_count(f2.vector(8, [2, 3, 6, 7])) == 2


def test_folded_level_examples():
    assert bj.folded_level(f2.vector(4, [2, 3])) == 2
    assert bj.folded_level(f2.vector(4, [1, 2])) == 1
    assert bj.folded_level(f2.vector(5, [2, 3])) == 1
    assert bj.folded_level(f2.vector(5, [1, 2])) == 1
    assert bj.folded_level(f2.vector(5, [])) == 0


def test_level_counts_marked_members():
    for D in range(0, 11):
        for B in iv.enumerate_families(D):
            lv = bj.folded_level(bj.coord_family(B))
            assert lv == bj.marked_count(iv.star_of(B)), B


def test_quotient_level_counts_marked_members():
    for D in range(1, 10, 2):
        vp = f2.Quotient(D)
        for Bk in bj.enumerate_quotient_sets(D):
            lv = bj.folded_level_quotient(vp, bj.coord_quotient(vp, Bk))
            assert lv == bj.marked_count(iv.star_of(Bk)), Bk


def test_coord_subspace_membership():
    for D in range(0, 10):
        for B in iv.enumerate_families(D):
            E = iv.family_span(B)
            v = bj.coord_subspace(E)
            assert v == bj.coord_family(B)
            assert E.contains(v), B


def test_coord_subspace_none_for_outsiders():
    Z = f2.F2Subspace.from_vectors(4, [f2.vector(4, [1, 3])])
    assert bj.coord_subspace(Z) is None


def test_membership_forces_the_assignment():
    # picking one vector inside each spanned subspace, distinct across
    # subspaces, has a single solution: the coordinate map
    for D in range(0, 8):
        remaining = {
            B: set(iv.family_span(B).element_bits())
            for B in iv.enumerate_families(D)
        }
        got = {}
        while remaining:
            forced = None
            for B, vs in remaining.items():
                if len(vs) == 1:
                    forced = (B, next(iter(vs)))
                    break
            if forced is None:
                holders = {}
                for B, vs in remaining.items():
                    for v in vs:
                        holders.setdefault(v, []).append(B)
                for v, bs in holders.items():
                    if len(bs) == 1:
                        forced = (bs[0], v)
                        break
            assert forced is not None, f"assignment not forced at D={D}"
            B, v = forced
            got[B] = v
            del remaining[B]
            for vs in remaining.values():
                vs.discard(v)
        for B, v in got.items():
            assert v == bj.coord_family(B).bits, (D, B)


def _mask(D, digits):
    out = 0
    for ch in digits:
        if ch != "0":
            out |= 1 << (int(ch) - 1)
    return out


def test_tower_span_basis_is_the_added_intervals():
    for D in range(0, 11):
        for B, k in bj.seed_pairs(D):
            T = bj.tower_span(B, k)
            assert T.dim() == abs(k)
            for a, b in bj.added_intervals(bj.ChainData(B), k):
                assert T.contains(f2.e_interval(D, a, b))


def test_level_vector_empty_seed_low_indices():
    B = iv.IntervalSet(6, [])
    got = [bj.level_vector(B, k).bits for k in range(4)]
    assert got == [0, _mask(6, "123456"), _mask(6, "2345"), _mask(6, "1256")]


def test_level_vector_lies_in_tower():
    for D in range(0, 11):
        for B, k in bj.seed_pairs(D):
            assert bj.tower_span(B, k).contains(bj.level_vector(B, k))


def test_level_vector_vs_extended_coordinate():
    # the extended family's coordinate vector falls in the same affine piece
    # but need not equal the distinguished vector itself
    for D in range(0, 11):
        for B, k in bj.seed_pairs(D):
            w = bj.coord_family(bj.extend_family(B, k))
            v = bj.level_vector(B, k)
            assert iv.family_span(B).contains_bits(w.bits ^ v.bits), (B, k)
    B = iv.IntervalSet(4, [(3, 3)])
    assert bj.coord_family(bj.extend_family(B, 1)).bits != bj.level_vector(B, 1).bits


def test_level_law_small():
    # distinguished shift attains the level, every other tower shift stays under
    for D in (0, 2, 4, 6, 8):
        for B, k in bj.seed_pairs(D):
            E = iv.family_span(B)
            v0 = bj.level_vector(B, k).bits
            for e in E.element_bits():
                for z in bj.tower_span(B, k).element_bits():
                    lvl = bj.folded_level(f2.F2Vector(D, e ^ z))
                    assert lvl == k if z == v0 else lvl < k, (D, B, k, e, z)


def test_comb_seed_agrees_with_primitive_nest():
    # the symmetric singleton seed of dimension D/2-k admits k as its top
    # index; its distinguished vector equals the coordinate vector of the
    # nested primitive span
    for D in (2, 4, 6, 8, 10):
        for k in range(0, D // 2 + 1):
            prim = bj.tower_span(iv.IntervalSet(D, []), k)
            if k < D // 2:
                B = iv.IntervalSet(D, [(i, i) for i in range(k + 1, D - k, 2)])
            else:
                B = iv.IntervalSet(D, [])
            assert k == max(bj.admissible_ks(B))
            assert bj.coord_subspace(prim) == bj.level_vector(B, k)


def test_pieces_sit_inside_levels_and_cover():
    # each pair's piece lies in a single level set; the pieces at a level
    # jointly cover it (with overlaps); at even sizes the maximal pairs
    # already cover, at odd sizes that stops at D = 5
    for D in range(0, 11, 2):
        levels = {}
        for B, k in bj.seed_pairs(D):
            cell = bj.piece_bits(B, k)
            for x in cell:
                assert bj.folded_level(f2.F2Vector(D, x)) == k, (D, B, k, x)
            levels.setdefault(k, set()).update(cell)
        full = {}
        for B, k in bj.full_pairs(D):
            full.setdefault(k, set()).update(bj.piece_bits(B, k))
        assert full == levels
        for x in range(1 << D):
            assert x in levels[bj.folded_level(f2.F2Vector(D, x))], (D, x)
        assert sum(len(s) for s in levels.values()) == 1 << D
    for D in range(1, 11, 2):
        vp = f2.Quotient(D)
        levels = {}
        for B, k in bj.quotient_pairs(D):
            m = bj.pair_level(B, k)
            cell = bj.quotient_piece_bits(vp, B, k)
            for x in cell:
                assert bj.folded_level_quotient(vp, f2.F2Vector(D, x)) == m
            levels.setdefault(m, set()).update(cell)
        for x in range(1 << (D - 1)):
            xp = f2.F2Vector(D, x)
            assert xp.bits in levels[bj.folded_level_quotient(vp, xp)], (D, x)
        assert sum(len(s) for s in levels.values()) == 1 << (D - 1)


def test_piece_lists_dim_four():
    want = {
        0: {("0", "1", "3", "13"), ("0", "2", "13", "123"), ("0", "1", "4", "14"),
            ("0", "3", "24", "234"), ("0", "2", "4", "24")},
        1: {("12", "124"), ("124", "1234"), ("1234", "134"), ("134", "34")},
        2: {("23",)},
    }
    got = {}
    for B, k in bj.full_pairs(4):
        cell = frozenset(_mask(4, d) for ds in () for d in ds) | bj.piece_bits(B, k)
        got.setdefault(bj.pair_level(B, k), set()).add(frozenset(cell))
    norm = {m: {frozenset(_mask(4, d) for d in cell) for cell in cells} for m, cells in want.items()}
    assert {m: set(v) for m, v in got.items()} == norm


def test_piece_lists_dim_five_quotient():
    vp = f2.Quotient(5)
    want = {
        0: {("0", "1", "3", "13"), ("0", "2", "13", "123"), ("0", "1", "4", "14"),
            ("0", "3", "24", "234"), ("0", "2", "4", "24")},
        1: {("12", "124"), ("124", "1234"), ("1234", "134"), ("134", "34"), ("23", "12")},
    }
    got = {}
    for B, k in bj.full_pairs(5):
        got.setdefault(bj.pair_level(B, k), set()).add(bj.quotient_piece_bits(vp, B, k))
    norm = {m: {frozenset(_mask(5, d) for d in cell) for cell in cells} for m, cells in want.items()}
    assert {m: set(v) for m, v in got.items()} == norm
