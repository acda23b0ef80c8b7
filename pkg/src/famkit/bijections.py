"""Chain data, the k-extension maps on interval families, and the coordinate
map from starred families to vectors.

Every family with odd-length members leaves a complementary chain of slots:
consecutive touching intervals filling the positions its span misses.  Adding
nested unions of chain slots extends the family; the pair (seed, k) of a seed
family and an extension index enumerates the full two-parameter family once
each.  The coordinate map sends a starred family to a vector by counting,
for each position, how many members cover it.
"""

from __future__ import annotations

from . import f2
from .intervals import (
    MARK,
    IntervalSet,
    enumerate_odd_families,
    enumerate_families,
    member_subset,
    family_span,
    star_of,
    unstar,
)


class ChainData:
    """Runs of a seed family and the chain of complementary slots."""

    __slots__ = ("B", "runs", "slots", "delta")

    def __init__(self, B):
        D = B.D
        runs = _maximal_runs(B)
        for r in runs:
            assert r in B, (B, r)
            assert (r[1] - r[0]) % 2 == 0, (B, r)
        s = len(runs)
        a = [None] + [r[0] for r in runs] + [D + 2]
        b = [-1] + [r[1] for r in runs] + [None]
        wide = [i for i in range(1, s + 2) if a[i] - b[i - 1] >= 3]
        wider = [i for i in range(1, s + 2) if a[i] - b[i - 1] >= 4]
        slots = []
        for u in range(len(wide) - 1):
            i, j = wide[u], wide[u + 1]
            slots.append((a[i] - 1, b[j - 1] + 1))
        for i in wider:
            for j in range(b[i - 1] + 2, a[i] - 2 + 1):
                slots.append((j, j))
        slots.sort()
        if D % 2 == 1 and len(B) == (D + 1) // 2:
            assert not slots, (B, slots)
        else:
            assert len(slots) == D - 2 * len(B), (B, slots)
        for (a1, b1), (a2, b2) in zip(slots, slots[1:]):
            assert a2 == b1 + 1, (B, slots)
        self.B = B
        self.runs = runs
        self.slots = slots
        self.delta = len(slots)

    def slot_union(self, c, d):
        """Union of slots c..d (1-based), a single interval."""
        return (self.slots[c - 1][0], self.slots[d - 1][1])


def _maximal_runs(B):
    pos = sorted(B.sigma())
    runs = []
    for p in pos:
        if runs and p == runs[-1][1] + 1:
            runs[-1][1] = p
        else:
            runs.append([p, p])
    return [tuple(r) for r in runs]


def admissible_ks(B):
    """Extension indices valid for a seed; negative ones use the chain with
    its first slot dropped (odd slot count only)."""
    D = B.D
    delta = D - 2 * len(B)
    if D % 2 == 0:
        assert delta >= 0
        return list(range(0, delta // 2 + 1))
    if len(B) == (D + 1) // 2:
        return [0]
    ks = [0]
    for k in range(1, (delta - 1) // 2 + 1, 2):
        ks.extend([k, -k])
    return ks


def added_intervals(chain, k):
    """The nested slot unions an extension index adds."""
    if k == 0:
        return []
    delta = chain.delta
    if delta % 2 == 0:
        assert 1 <= k <= delta // 2, (chain.B, k)
        return [chain.slot_union(u, delta + 1 - u) for u in range(1, k + 1)]
    if k > 0:
        assert k % 2 == 1 and k <= (delta - 1) // 2, (chain.B, k)
        return [chain.slot_union(u, delta - u) for u in range(1, k + 1)]
    m = -k
    assert m % 2 == 1 and m <= (delta - 1) // 2, (chain.B, k)
    return [chain.slot_union(u + 1, delta + 1 - u) for u in range(1, m + 1)]


def extend_family(B, k):
    """The extended family; its new members all have even length."""
    if k == 0:
        return B
    added = added_intervals(ChainData(B), k)
    for a, b in added:
        assert (b - a) % 2 == 1, (B, k, added)
    return IntervalSet(B.D, list(B.members) + added)


def extend_span(B, k):
    return family_span(extend_family(B, k))


def seed_pairs(D):
    """All (seed, k) pairs; the extension map sends them onto the full family list."""
    out = []
    for B in sorted(enumerate_odd_families(D), key=lambda b: b.members):
        for k in admissible_ks(B):
            out.append((B, k))
    return out


def split_family(Bt):
    """Split an arbitrary family into (seed, k): the seed is the odd-length
    part, k is recovered by matching the even-length part against the chain."""
    D = Bt.D
    seed = IntervalSet(D, [iv for iv in Bt.members if (iv[1] - iv[0]) % 2 == 0])
    rest = set(Bt.members) - set(seed.members)
    for k in admissible_ks(seed):
        if k == 0:
            if not rest:
                return seed, 0
            continue
        if set(added_intervals(ChainData(seed), k)) == rest:
            return seed, k
    raise AssertionError(f"no extension index fits {Bt!r}")


def quotient_pairs(D):
    """For odd D the section of the (D-1)-parameter family inside the
    D-parameter one: seeds without the top position take k in {0,1,3,...},
    seeds whose member contains D take negative k only."""
    assert D % 2 == 1, D
    out = []
    for B in sorted(enumerate_odd_families(D), key=lambda b: b.members):
        top = D - 2 * len(B) - 1
        if not any(b == D for _, b in B.members):
            ks = [0] + list(range(1, top // 2 + 1, 2))
        elif len(B) < (D - 1) // 2:
            ks = [-k for k in range(1, top // 2 + 1, 2)]
        else:
            continue
        for k in ks:
            out.append((B, k))
    return out


def enumerate_quotient_sets(D):
    """The primed family as a dict element -> (seed, k)."""
    out = {}
    for B, k in quotient_pairs(D):
        Bk = extend_family(B, k)
        assert Bk not in out, (Bk, out[Bk] if Bk in out else None)
        out[Bk] = (B, k)
    return out


def descend_pair(D, B, k):
    """Drop from a primed pair to the (D-1)-parameter index: keep the seed
    and k when the seed avoids D; otherwise remove the member containing D
    and bump |k| by one."""
    assert D % 2 == 1, D
    if k >= 0:
        return IntervalSet(D - 1, B.members), k
    keep = [iv for iv in B.members if iv[1] != D]
    assert len(keep) == len(B.members) - 1, B
    return IntervalSet(D - 1, keep), -k + 1


def descend_map(D):
    """element of the primed family -> element of the (D-1)-family."""
    out = {}
    for Bk, (B, k) in enumerate_quotient_sets(D).items():
        B1, k1 = descend_pair(D, B, k)
        out[Bk] = extend_family(B1, k1)
    return out


def coord_star(D, starred):
    """Coordinate vector of a starred family.  Per position the coefficient
    is a triangular number of the cover count; for odd D positions inside the
    largest marked member shift by one when their block-end parity matches."""
    subsets = [member_subset(D, m) for m in starred]
    n = {j: 0 for j in range(1, D + 1)}
    n[MARK] = 0
    for S in subsets:
        for j in S:
            n[j] += 1
    marked = [S for S in subsets if MARK in S]
    bits = 0
    if D % 2 == 0:
        for j in range(1, D + 1):
            if (n[j] * (n[j] + 1) // 2) % 2:
                bits ^= 1 << (j - 1)
        if (n[MARK] * (n[MARK] + 1) // 2) % 2:
            bits ^= (1 << D) - 1
        return f2.F2Vector(D, bits)
    hull = set()
    for S in marked:
        hull |= S
    if marked:
        assert frozenset(hull) in {frozenset(S) for S in subsets}, starred
    low = 0
    while (low + 1) in hull:
        low += 1
    high = D + 1
    while (high - 1) in hull and (high - 1) >= 1:
        high -= 1
    for j in range(1, D + 1):
        nj = n[j]
        if j in hull:
            u = high if j >= high else low
            if (u - j) % 2 == 1:
                coeff = (nj * (nj + 1) // 2) % 2
            else:
                coeff = ((nj + 1) * (nj + 2) // 2) % 2
        else:
            coeff = (nj * (nj + 1) // 2) % 2
        if coeff:
            bits ^= 1 << (j - 1)
    if (n[MARK] * (n[MARK] + 1) // 2) % 2:
        bits ^= (1 << D) - 1
    return f2.F2Vector(D, bits)


def coord_family(B):
    return coord_star(B.D, star_of(B))


def coord_quotient(vprime, B):
    """Coordinate vector pushed to the quotient by the alternating vector."""
    return vprime.pi(coord_family(B))


def coord_plain(B):
    """Even-length-aware coordinate formula on plain families (even D)."""
    D = B.D
    assert D % 2 == 0, D
    odd = [iv for iv in B.members if (iv[1] - iv[0]) % 2 == 0]
    even = [iv for iv in B.members if (iv[1] - iv[0]) % 2 == 1]
    base = len(even) % 2
    bits = 0
    for i in range(1, D + 1):
        p = (
            sum(1 for a, b in odd if a <= i <= b)
            - sum(1 for a, b in even if a <= i <= b)
            - base
        )
        if (p * (p + 1) // 2) % 2:
            bits ^= 1 << (i - 1)
    return f2.F2Vector(D, bits)


def coord_subspace(E):
    """Coordinate vector of a spanned family subspace: recover the family,
    star it, take its coordinate vector.  None if E is not spanned by a family."""
    from .intervals import family_of_span

    B = family_of_span(E)
    if B is None:
        return None
    return coord_family(B)


def signed_run_count(x):
    """Signed count of even-length runs in the support, by run start."""
    runs = []
    for p in sorted(x.support()):
        if runs and p == runs[-1][1]:
            runs[-1][1] = p + 1
        else:
            runs.append([p, p + 1])
    u = 0
    for a, b1 in runs:
        if (b1 - a) % 2 == 0:
            u += 1 if a % 2 == 0 else -1
    return u


def folded_level(x):
    """Fold the signed statistic to a level in N (parity of D decides how)."""
    u = signed_run_count(x)
    if x.dim % 2 == 0:
        return 2 * u if u >= 0 else -2 * u - 1
    return 2 * abs(u) - 1 if u else 0


def folded_level_quotient(vprime, xp):
    """Level on the quotient: lift to the top-position-free representative."""
    return folded_level(vprime.pi(xp))


def marked_count(starred):
    return sum(1 for m in starred if m[0] == "c")


def tower_span(B, k):
    """Span of the slot unions an extension index adds to a seed."""
    ivs = added_intervals(ChainData(B), k)
    return f2.F2Subspace(B.D, [f2.e_interval(B.D, a, b).bits for a, b in ivs])


def level_vector(B, k):
    """Distinguished vector of an extension: the coordinate vector of the
    added tower, computed inside the slot model and carried back slotwise.

    Differs in general from coord_family(extend_family(B, k)) by a seed-span
    element; only this representative satisfies the level law."""
    if k == 0:
        return f2.F2Vector(B.D, 0)
    ch = ChainData(B)
    inner = coord_family(extend_family(IntervalSet(ch.delta, []), k))
    bits = 0
    for c in inner.support():
        a, b = ch.slots[c - 1]
        bits ^= f2.e_interval(B.D, a, b).bits
    return f2.F2Vector(B.D, bits)


def full_pairs(D):
    """Pairs whose extension index is maximal for the seed.  At even D their
    pieces cover each level set; at odd D that holds only up to D = 5, and
    covering a level needs the pieces of every pair at that level."""
    if D % 2 == 0:
        return [(B, k) for B, k in seed_pairs(D) if len(B) + k == D // 2]
    out = []
    for B, k in quotient_pairs(D):
        kk = 0 if k == 0 else (abs(k) + 1) // 2
        if len(B) + kk == (D - 1) // 2:
            out.append((B, k))
    return out


def pair_level(B, k):
    """Level of the vectors a maximal extension reaches."""
    return abs(k)


def piece_bits(B, k):
    """Affine piece of a pair: the seed span shifted by the distinguished
    vector, as a frozen set of masks."""
    v = level_vector(B, k).bits
    return frozenset(e ^ v for e in family_span(B).element_bits())


def quotient_piece_bits(vprime, B, k):
    """Image of an affine piece in the quotient, as canonical-lift masks."""
    D = B.D
    v = level_vector(B, k).bits
    return frozenset(
        vprime.pi(f2.F2Vector(D, e ^ v)).bits
        for e in family_span(B).element_bits()
    )
