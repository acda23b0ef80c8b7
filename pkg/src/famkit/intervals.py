"""Two-parameter interval families over [1, D] and their starred forms.

A plain member is an interval [a, b] inside [1, D]; a set of such members is
laminar with gaps (no touching, no partial overlap).  The full family list is
generated from primitive nested chains by singleton insertion; the families
with odd-length members only form a sublist.  Starred forms live in [1, D] plus an extra mark 'a':
an even member is replaced by its complement.  Renders list positions in
ascending order with the mark last, e.g. complement of [2,3] in D=4 is "14a";
the parser accepts the symbols in any order and checks the set is an arc.
"""

from __future__ import annotations

from functools import lru_cache

from . import f2

MARK = 0  # sentinel position for the extra mark in starred members
_DIGITS = "123456789ABCDE"


class IntervalSet:
    """Immutable set of plain intervals inside [1, D]."""

    __slots__ = ("D", "members")

    def __init__(self, D, members):
        members = tuple(sorted(tuple(m) for m in members))
        for a, b in members:
            assert 1 <= a <= b <= D, (a, b, D)
        assert len(set(members)) == len(members), members
        object.__setattr__(self, "D", D)
        object.__setattr__(self, "members", members)

    def __setattr__(self, *a):
        raise AttributeError("immutable")

    def __eq__(self, other):
        return (
            isinstance(other, IntervalSet)
            and self.D == other.D
            and self.members == other.members
        )

    def __hash__(self):
        return hash((self.D, self.members))

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, iv):
        return tuple(iv) in self.members

    def sigma(self):
        """Union of all members as a set of positions."""
        out = set()
        for a, b in self.members:
            out.update(range(a, b + 1))
        return out

    def all_odd(self):
        return all((b - a) % 2 == 0 for a, b in self.members)

    def widen(self, D):
        """Same members inside a larger ambient [1, D]."""
        assert D >= self.D
        return IntervalSet(D, self.members)

    def __repr__(self):
        return f"IntervalSet({self.D}, {render_family(self)!r})"


def non_touching(i1, i2):
    (a, b), (a2, b2) = i1, i2
    return a2 - b >= 2 or a - b2 >= 2


def nested_inside(i1, i2):
    """i1 strictly nested in i2 with room on both sides."""
    (a, b), (a2, b2) = i1, i2
    return a2 < a and b < b2


def insert_gap(i, iv):
    """Insertion of a gap of width two at position i."""
    a, b = iv
    if i <= a:
        return (a + 2, b + 2)
    if i >= b + 2:
        return (a, b)
    return (a, b + 2)


def insert_singleton(i, Bp):
    """Insert a fresh singleton at i, families over [1, D-2] to [1, D]."""
    D = Bp.D + 2
    assert 1 <= i <= D, (i, D)
    members = [insert_gap(i, iv) for iv in Bp.members]
    assert (i, i) not in members
    members.append((i, i))
    return IntervalSet(D, members)


@lru_cache(maxsize=None)
def primitives(D):
    """The primitive nested chains, empty set included."""
    out = [IntervalSet(D, [])]
    if D % 2 == 0:
        for k in range(1, D // 2 + 1):
            out.append(IntervalSet(D, [(j, D + 1 - j) for j in range(1, k + 1)]))
    else:
        for k in range(1, (D - 1) // 2 + 1, 2):
            out.append(IntervalSet(D, [(j, D - j) for j in range(1, k + 1)]))
            out.append(IntervalSet(D, [(j + 1, D + 1 - j) for j in range(1, k + 1)]))
    return tuple(out)


@lru_cache(maxsize=None)
def enumerate_families(D):
    """Every family reachable by insertion, as a frozenset; 2^D of them."""
    if D == 0:
        out = frozenset([IntervalSet(0, [])])
    elif D == 1:
        out = frozenset([IntervalSet(1, []), IntervalSet(1, [(1, 1)])])
    else:
        got = set(primitives(D))
        for Bp in enumerate_families(D - 2):
            for i in range(1, D + 1):
                got.add(insert_singleton(i, Bp))
        out = frozenset(got)
    assert len(out) == 1 << D, (D, len(out))
    return out


@lru_cache(maxsize=None)
def enumerate_odd_families(D):
    """The odd-length-members-only families, by their own induction."""
    if D == 0:
        return frozenset([IntervalSet(0, [])])
    if D == 1:
        return frozenset([IntervalSet(1, []), IntervalSet(1, [(1, 1)])])
    got = {IntervalSet(D, [])}
    for Bp in enumerate_odd_families(D - 2):
        for i in range(1, D + 1):
            got.add(insert_singleton(i, Bp))
    return frozenset(got)


def is_odd_family_direct(B):
    """Direct test for the odd-length list, no induction: odd lengths, laminarity with
    gaps, and every wrong-parity inner position covered by a nested member."""
    if not B.all_odd():
        return False
    ms = B.members
    for x in ms:
        for y in ms:
            if x == y or non_touching(x, y):
                continue
            if nested_inside(x, y) or nested_inside(y, x):
                continue
            return False
    for a, b in ms:
        for c in range(a + 1, b):
            if (c - a) % 2 == 0:
                continue
            if not any(a < a1 <= c <= b1 < b for a1, b1 in ms):
                return False
    return True


# starred members: ("p", a, b) is the interval [a, b]; ("c", a, b) is the
# complement of [a, b] inside [1, D] with the extra mark adjoined


def star_member(iv):
    a, b = iv
    return ("p", a, b) if (b - a) % 2 == 0 else ("c", a, b)


def unstar_member(m):
    return (m[1], m[2])


def star_of(B):
    return tuple(sorted(star_member(iv) for iv in B.members))


def unstar(D, starred):
    return IntervalSet(D, [unstar_member(m) for m in starred])


def member_subset(D, m):
    """Extended member as a frozenset of positions; MARK = 0 is the mark."""
    kind, a, b = m
    if kind == "p":
        return frozenset(range(a, b + 1))
    out = set(range(1, a)) | set(range(b + 1, D + 1))
    out.add(MARK)
    return frozenset(out)


def subset_member(D, S):
    """Inverse of member_subset; None if S is not an extended interval."""
    if not S or len(S) > D:
        return None
    if MARK not in S:
        a, b = min(S), max(S)
        if len(S) == b - a + 1:
            return ("p", a, b)
        return None
    comp = set(range(1, D + 1)) - S
    if not comp:
        return None
    a, b = min(comp), max(comp)
    if len(comp) == b - a + 1:
        return ("c", a, b)
    return None


def rotate_symbols(D, starred):
    """Rotate every member by j -> j+1, D -> mark, mark -> 1 (even D)."""
    assert D % 2 == 0, D
    out = []
    for m in starred:
        S = member_subset(D, m)
        S2 = frozenset(1 if j == MARK else (MARK if j == D else j + 1) for j in S)
        m2 = subset_member(D, S2)
        assert m2 is not None, (m, S2)
        out.append(m2)
    return tuple(sorted(out))


def star_sizes_ok(D, starred):
    """Size parities forced on starred members: a plain member has odd
    length, a marked one complements an even length (so its own size is odd
    for even D and even for odd D)."""
    for kind, a, b in starred:
        core = b - a + 1
        if kind == "p":
            if core % 2 == 0:
                return False
        else:
            if core % 2 == 1:
                return False
    return True


def is_family_by_rotation(D, starred):
    """Membership in SS*_D by rotation: some power of the rotation lands in
    the odd-length list (even D only)."""
    assert D % 2 == 0, D
    cur = tuple(sorted(starred))
    for _ in range(D + 2):
        if all(kind == "p" for kind, _, _ in cur):
            if is_odd_family_direct(unstar(D, cur)):
                return True
        cur = rotate_symbols(D, cur)
    return False


def family_span(B):
    """The subspace spanned by the interval vectors of B."""
    vs = [f2.e_interval(B.D, a, b) for a, b in B.members]
    E = f2.F2Subspace.from_vectors(B.D, vs)
    assert E.dim() == len(B.members), B
    return E


def family_of_span(E, check_family=True):
    """The unique B with family_span(B) = E, or None if E is not of that form."""
    D = E.dim_ambient
    found = []
    for a in range(1, D + 1):
        for b in range(a, D + 1):
            if E.contains(f2.e_interval(D, a, b)):
                found.append((a, b))
    if len(found) != E.dim():
        return None
    B = IntervalSet(D, found)
    if family_span(B) != E:
        return None
    if check_family and B not in enumerate_families(D):
        return None
    return B


def render_member(D, m):
    S = member_subset(D, m)
    out = "".join(_DIGITS[j - 1] for j in sorted(S - {MARK}))
    return out + "a" if MARK in S else out


def render_star_set(D, starred):
    ms = sorted(starred, key=unstar_member)
    return "(" + ",".join(render_member(D, m) for m in ms) + ")"


def parse_member(D, text):
    """Symbols in any order; the set must be an arc on [1..D] plus the mark."""
    assert text, "empty member"
    S = set()
    for ch in text:
        S.add(MARK if ch == "a" else _DIGITS.index(ch) + 1)
    assert len(S) == len(text), text
    m = subset_member(D, frozenset(S))
    assert m is not None, text
    return m


def parse_star_set(D, text):
    """Parse "(m1,m2,...)"; rejects size parities no star form produces."""
    assert text.startswith("(") and text.endswith(")"), text
    body = text[1:-1]
    ms = tuple(sorted(parse_member(D, t) for t in body.split(","))) if body else ()
    if not star_sizes_ok(D, ms):
        raise ValueError(f"malformed starred set {text!r} for D={D}")
    return ms


def render_family(B):
    return render_star_set(B.D, star_of(B))
