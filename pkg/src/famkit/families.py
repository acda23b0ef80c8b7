"""Assembly of one constructible family: the group model behind it, the
subgroup catalog, the admissible pairs, the parameter set, the parametrizing
bijection onto the pairing module, and the second and third bases.

Three model kinds share one vocabulary.  For even ambient dimension the
points are all vectors of the space; for odd ambient dimension they are the
classes modulo the radical line; the seven exceptional cardinalities use a
permutation group of degree at most five.
"""

import heapq
import os
from fractions import Fraction
from functools import lru_cache

from . import bijections, cyclo, f2, groups, intervals


class FamilyError(ValueError):
    """Raised when supplied family data fails a structural check."""


# ---------------------------------------------------------------------------
# shared helpers


def unique_sdr(supports):
    """The unique system of distinct representatives of a support table.

    supports maps keys to point sets.  Forcing works from both sides: a key
    whose remaining support is a single point takes it; a point left in a
    single key's support is taken by that key.  For a bipartite graph with a
    perfect matching this terminates exactly when the matching is unique, so
    a stall is reported as ambiguity, not as absence."""
    remaining = {k: set(s) for k, s in supports.items()}
    holders = {}
    for k, s in remaining.items():
        if not s:
            raise FamilyError(f"empty support for {k!r}")
        for p in s:
            holders.setdefault(p, set()).add(k)
    if len(holders) != len(remaining):
        raise FamilyError(
            f"{len(remaining)} keys over {len(holders)} points cannot match"
        )
    assigned = {}
    taken = set()
    queue = [k for k, s in remaining.items() if len(s) == 1]
    queue += [p for p, h in holders.items() if len(h) == 1]
    while len(assigned) < len(remaining):
        if not queue:
            raise FamilyError("ambiguous: no forced key or point remains")
        item = queue.pop()
        if item in remaining:
            k = item
            if k in assigned:
                continue
            live = remaining[k] - taken
            if not live:
                raise FamilyError(f"infeasible at {k!r}")
            if len(live) > 1:
                continue
            (p,) = live
        else:
            p = item
            if p in taken:
                continue
            live = holders[p] - assigned.keys()
            if not live:
                raise FamilyError(f"point {p!r} left unmatched")
            if len(live) > 1:
                continue
            (k,) = live
        assigned[k] = p
        taken.add(p)
        for k2 in holders[p]:
            if k2 not in assigned:
                rest = remaining[k2] - taken
                if len(rest) == 1:
                    queue.append(k2)
        for p2 in remaining[k]:
            if p2 not in taken:
                rest = holders[p2] - assigned.keys()
                if len(rest) == 1:
                    queue.append(p2)
    return assigned


def digraph_acyclic(nodes, edges):
    """Kahn peeling; edges is an iterable of (a, b) pairs over nodes."""
    out = {n: set() for n in nodes}
    indeg = {n: 0 for n in nodes}
    for a, b in edges:
        if b not in out[a]:
            out[a].add(b)
            indeg[b] += 1
    stack = [n for n, d in indeg.items() if d == 0]
    seen = 0
    while stack:
        n = stack.pop()
        seen += 1
        for m in out[n]:
            indeg[m] -= 1
            if indeg[m] == 0:
                stack.append(m)
    return seen == len(indeg)


def _toposort(nodes, edges):
    """One linear order compatible with the edges (a before b)."""
    out = {n: [] for n in nodes}
    indeg = {n: 0 for n in nodes}
    for a, b in edges:
        out[a].append(b)
        indeg[b] += 1
    stack = sorted((n for n, d in indeg.items() if d == 0), reverse=True)
    order = []
    while stack:
        n = stack.pop()
        order.append(n)
        for m in out[n]:
            indeg[m] -= 1
            if indeg[m] == 0:
                stack.append(m)
    if len(order) != len(indeg):
        raise FamilyError("cycle in support relation")
    return order


# ---------------------------------------------------------------------------
# the symplectic-form pairing on masks, and its transform in closed form


def neighbor_mask(D, bits):
    """Mask m with (x, y) = popcount(m & y) mod 2 for x = bits."""
    full = (1 << D) - 1
    return ((bits << 1) | (bits >> 1)) & full


def sign_row(D, bits):
    """Bit pattern over all y of the pairing (x, y), packed by mask value."""
    m = neighbor_mask(D, bits)
    row = 0
    for j in range(D):
        width = 1 << j
        if m >> j & 1:
            block = ((1 << width) - 1) ^ (row & ((1 << width) - 1))
            row |= block << width
        else:
            row |= (row & ((1 << width) - 1)) << width
    return row


def transform_subspace_indicator(D, S):
    """Closed form of the pairing transform on a subspace indicator: the
    perpendicular subspace's indicator, scaled by 2^(dim - D/2)."""
    assert D % 2 == 0, D
    scale = Fraction(2) ** (S.dim() - D // 2)
    return scale, f2.perp(S)


def transform_point(D, vec, x_bits):
    """One coefficient of the pairing transform of a sparse mask vector."""
    m = neighbor_mask(D, x_bits)
    tot = Fraction(0)
    for y, c in vec.items():
        if bin(m & y).count("1") % 2:
            tot -= c
        else:
            tot += c
    return tot / Fraction(2) ** (D // 2)


# ---------------------------------------------------------------------------
# the graded subspace catalog, built by the two-step insertion recursion


@lru_cache(maxsize=None)
def parity_class(D, delta):
    """All admissible subspaces of the parity-delta piece of the D-space.

    Built inductively: insert a free position of the same parity and extend
    by its basis vector, or insert one of the opposite parity and only
    transport.  The base cases are the zero space, plus the line at D = 1
    when delta picks the occupied parity."""
    assert D >= 0 and delta in (0, 1), (D, delta)
    if D == 0:
        return frozenset({f2.F2Subspace.zero(0)})
    if D == 1:
        out = {f2.F2Subspace.zero(1)}
        if delta == 1:
            out.add(f2.F2Subspace.from_vectors(1, [f2.e_single(1, 1)]))
        return frozenset(out)
    prev = parity_class(D - 2, delta)
    out = set()
    for i in range(1, D + 1):
        if i % 2 == delta % 2:
            for L in prev:
                moved = f2.insert_pair_subspace(i, L, delta=delta)
                out.add(moved.add_vector(f2.e_single(D, i)))
        else:
            for L in prev:
                out.add(f2.insert_pair_subspace(i, L, delta=delta))
    return frozenset(out)


def _graded_piece(E, delta):
    return E.intersect(f2.parity_subspace(E.dim_ambient, delta))


# ---------------------------------------------------------------------------
# classical model, even ambient dimension


class VectorFamily:
    """Family whose points are all masks of an even-dimensional space.

    Admissible subgroups are the parity-delta catalog; a pair is derived
    from each seed by grading and shriek, the parameter set is the seed list
    with extension indices, and the second basis vectors are indicators of
    the extended spans."""

    kind = "classical-even"

    def __init__(self, D, delta=1):
        assert D % 2 == 0 and D >= 0, D
        assert delta in (0, 1), delta
        self.D = D
        self.delta = delta
        self.points = tuple(range(1 << D))
        self.xi = tuple(bijections.seed_pairs(D))
        self.hc = parity_class(D, delta)
        self.pair_spaces = {}
        self.pair_order = []
        for B in sorted(
            intervals.enumerate_odd_families(D), key=lambda b: b.members
        ):
            E = intervals.family_span(B)
            Y = _graded_piece(E, delta)
            X = f2.perp_in_parity(_graded_piece(E, 1 - delta), delta)
            back = Y.plus(f2.perp_in_parity(X, 1 - delta))
            if back != E:
                raise FamilyError(f"pair of {B!r} does not reconstruct its span")
            self.pair_spaces[B] = (Y, X)
            self.pair_order.append(B)
        self.theta = {
            (B, k): bijections.coord_family(bijections.extend_family(B, k)).bits
            for B, k in self.xi
        }
        self._supports = None
        self._gamma = None

    def fiber(self, B):
        return bijections.admissible_ks(B)

    def support(self, key):
        if self._supports is None:
            self._supports = {
                (B, k): frozenset(bijections.extend_span(B, k).element_bits())
                for B, k in self.xi
            }
        return self._supports[key]

    def basis_vector(self, key):
        return {p: Fraction(1) for p in self.support(key)}

    def gamma_of(self):
        if self._gamma is None:
            self._gamma = {
                p: bijections.folded_level(f2.F2Vector(self.D, p))
                for p in self.points
            }
        return self._gamma

    def level_of_key(self, key):
        return key[1]

    def third_support(self, key):
        return bijections.piece_bits(*key)

    def hbar_gamma(self, level):
        """Pairs admitting the level, by the codimension rule."""
        return [
            B
            for B in self.pair_order
            if level <= self.D // 2 - len(B.members)
        ]

    def fourier_column(self, key):
        scale, Sp = transform_subspace_indicator(
            self.D, bijections.extend_span(*key)
        )
        return {p: scale for p in Sp.element_bits()}

    def _c_rhs(self, key):
        span = bijections.extend_span(*key)
        return {p: 1 << span.dim() for p in f2.perp(span).element_bits()}

    def _c_support_weights(self, key):
        return [(q, 1) for q in self.support(key)]

    # --- checks ---

    def check_counts(self):
        return len(self.xi) == len(self.points)

    def check_membership(self):
        for B in self.pair_order:
            Y, X = self.pair_spaces[B]
            if Y not in self.hc or X not in self.hc or not Y <= X:
                return False
        seen = set()
        for B in self.pair_order:
            key = self.pair_spaces[B]
            if key in seen:
                return False
            seen.add(key)
        return True

    def check_theta(self):
        vals = set(self.theta.values())
        if len(vals) != len(self.xi) or vals != set(self.points):
            return False
        return all(self.theta[key] in self.support(key) for key in self.xi)

    def check_levels(self):
        g = self.gamma_of()
        return all(g[self.theta[key]] == self.level_of_key(key) for key in self.xi)

    def check_transversality(self):
        g = self.gamma_of()
        for B in self.pair_order:
            lv = [g[self.theta[(B, k)]] for k in self.fiber(B)]
            if len(lv) != len(set(lv)):
                return False
        return True

    def check_hbar_gamma(self):
        g = self.gamma_of()
        met = {}
        for key in self.xi:
            met.setdefault(g[self.theta[key]], set()).add(key[0])
        for level, pairs in met.items():
            if set(self.hbar_gamma(level)) != pairs:
                return False
            if len(pairs) != sum(1 for p in self.points if g[p] == level):
                return False
        return True

    def check_fourier_nonneg(self):
        return all(
            all(c >= 0 for c in self.fourier_column(key).values())
            for key in self.xi
        )

    def check_support_digraph(self):
        return digraph_acyclic(self.points, self._support_edges())

    def _support_edges(self):
        for key in self.xi:
            t = self.theta[key]
            for p in self.support(key):
                if p != t:
                    yield (p, t)

    def check_sdr_unique(self):
        got = unique_sdr({key: self.support(key) for key in self.xi})
        return got == self.theta

    def check_c_digraph(self):
        return _c_digraph_acyclic(self)

    def check_third_rank(self):
        rows = []
        for key in self.xi:
            bits = 0
            for p in self.third_support(key):
                bits |= 1 << p
            rows.append(bits)
        return _gf2_rank(rows) == len(self.points)

    def constructibles(self):
        """Indicator attached to each admissible subgroup, with the span."""
        out = {}
        for H in sorted(self.hc, key=lambda S: (S.dim(), S.rows)):
            span = H.plus(f2.perp_in_parity(H, 1 - self.delta))
            assert span.dim() == self.D // 2, (H, span)
            out[H] = frozenset(span.element_bits())
        return out

    def check_constructibles(self):
        out = self.constructibles()
        zero = f2.F2Subspace.zero(self.D)
        if zero not in out:
            return False
        if out[zero] != frozenset(
            f2.parity_subspace(self.D, 1 - self.delta).element_bits()
        ):
            return False
        return len(set(out.values())) == len(out)

    def verify(self):
        report = {
            "counts": self.check_counts(),
            "membership": self.check_membership(),
            "theta": self.check_theta(),
            "levels": self.check_levels(),
            "transversality": self.check_transversality(),
            "level-bijection": self.check_hbar_gamma(),
            "transform-nonneg": self.check_fourier_nonneg(),
            "support-digraph": self.check_support_digraph(),
            "constructibles": self.check_constructibles(),
            "third-rank": self.check_third_rank(),
        }
        if self.D <= 8:
            report["sdr-unique"] = self.check_sdr_unique()
        if self.D <= 10:
            report["matrix-digraph"] = self.check_c_digraph()
        return report


# ---------------------------------------------------------------------------
# classical model, odd ambient dimension (points modulo the radical)


class QuotientFamily:
    """Family whose points are radical classes of an odd-dimensional space.

    Everything descends along pi: subgroups live in the odd parity piece of
    the quotient, seeds carry the restricted extension indices, and second
    basis vectors are indicators of projected extended spans."""

    kind = "classical-odd"

    def __init__(self, D):
        assert D % 2 == 1, D
        self.D = D
        self.vprime = f2.Quotient(D)
        self.points = tuple(range(1 << (D - 1)))
        self.xi = tuple(bijections.quotient_pairs(D))
        self.hc = frozenset(
            self.vprime.pi_subspace(L) for L in parity_class(D, 1)
        )
        self.pair_spaces = {}
        self.pair_order = []
        self._fibers = {}
        for B, k in self.xi:
            if B not in self._fibers:
                self._fibers[B] = []
                self.pair_order.append(B)
                self.pair_spaces[B] = self._derive_pair(B)
            self._fibers[B].append(k)
        self.theta = {
            (B, k): bijections.coord_quotient(
                self.vprime, bijections.extend_family(B, k)
            ).bits
            for B, k in self.xi
        }
        self._supports = None
        self._gamma = None

    def _derive_pair(self, B):
        E = intervals.family_span(B)
        split = f2.graded_split(E)
        if split is None:
            raise FamilyError(f"span of {B!r} is not graded")
        Y = self.vprime.pi_subspace(split.odd_part)
        X = self.vprime.pi_subspace(f2.perp_in_parity(split.even_part, 1))
        if not Y <= X:
            raise FamilyError(f"pair of {B!r} is not nested")
        return (Y, X)

    def fiber(self, B):
        return list(self._fibers[B])

    def support(self, key):
        if self._supports is None:
            self._supports = {}
            for B, k in self.xi:
                span = bijections.extend_span(B, k)
                self._supports[(B, k)] = frozenset(
                    self.vprime.pi(f2.F2Vector(self.D, m)).bits
                    for m in span.element_bits()
                )
        return self._supports[key]

    def basis_vector(self, key):
        return {p: Fraction(1) for p in self.support(key)}

    def gamma_of(self):
        if self._gamma is None:
            self._gamma = {
                p: bijections.folded_level(f2.F2Vector(self.D, p))
                for p in self.points
            }
        return self._gamma

    def level_of_key(self, key):
        return abs(key[1])

    def third_support(self, key):
        return bijections.quotient_piece_bits(self.vprime, *key)

    def hbar_gamma(self, level):
        if level > 0:
            return [
                B
                for B in self.pair_order
                if level <= self._pair_codim(B)
            ]
        got = set()
        for B in intervals.enumerate_odd_families(self.D):
            E = intervals.family_span(B)
            split = f2.graded_split(E)
            if any(
                m >> (self.D - 1) & 1
                for m in split.odd_part.element_bits()
            ):
                continue
            Y1 = self.vprime.pi_subspace(split.odd_part)
            X1 = self.vprime.pi_subspace(f2.perp_in_parity(split.even_part, 1))
            got.add((Y1, X1))
        pairs = {self.pair_spaces[B]: B for B in self.pair_order}
        out = [pairs[p] for p in got if p in pairs]
        out += [("unmatched", p) for p in got - set(pairs)]
        return out

    def _pair_codim(self, B):
        Y, X = self.pair_spaces[B]
        return X.dim() - Y.dim()

    def fourier_column(self, key):
        d = self.D - 1
        S = f2.F2Subspace(d, sorted(self.support(key)))
        scale = Fraction(2) ** (S.dim() - d // 2)
        return {p: scale for p in f2.perp(S).element_bits()}

    def _c_rhs(self, key):
        d = self.D - 1
        S = f2.F2Subspace(d, sorted(self.support(key)))
        return {p: 1 << S.dim() for p in f2.perp(S).element_bits()}

    def _c_support_weights(self, key):
        return [(q, 1) for q in self.support(key)]

    # --- checks ---

    def check_counts(self):
        return len(self.xi) == len(self.points)

    def check_membership(self):
        for B in self.pair_order:
            Y, X = self.pair_spaces[B]
            if Y not in self.hc or X not in self.hc:
                return False
        keys = [self.pair_spaces[B] for B in self.pair_order]
        return len(set(keys)) == len(keys)

    def check_theta(self):
        vals = set(self.theta.values())
        if len(vals) != len(self.xi) or vals != set(self.points):
            return False
        return all(self.theta[key] in self.support(key) for key in self.xi)

    def check_levels(self):
        g = self.gamma_of()
        return all(g[self.theta[key]] == self.level_of_key(key) for key in self.xi)

    def check_transversality(self):
        g = self.gamma_of()
        for B in self.pair_order:
            lv = [g[self.theta[(B, k)]] for k in self.fiber(B)]
            if len(lv) != len(set(lv)):
                return False
        return True

    def check_hbar_gamma(self):
        g = self.gamma_of()
        met = {}
        for key in self.xi:
            met.setdefault(g[self.theta[key]], set()).add(key[0])
        for level, pairs in met.items():
            if set(self.hbar_gamma(level)) != pairs:
                return False
            if len(pairs) != sum(1 for p in self.points if g[p] == level):
                return False
        return True

    def check_fourier_nonneg(self):
        return all(
            all(c >= 0 for c in self.fourier_column(key).values())
            for key in self.xi
        )

    def check_support_digraph(self):
        return digraph_acyclic(self.points, self._support_edges())

    def _support_edges(self):
        for key in self.xi:
            t = self.theta[key]
            for p in self.support(key):
                if p != t:
                    yield (p, t)

    def check_sdr_unique(self):
        got = unique_sdr({key: self.support(key) for key in self.xi})
        return got == self.theta

    def check_c_digraph(self):
        return _c_digraph_acyclic(self)

    def check_third_rank(self):
        rows = []
        for key in self.xi:
            bits = 0
            for p in self.third_support(key):
                bits |= 1 << p
            rows.append(bits)
        return _gf2_rank(rows) == len(self.points)

    def constructibles(self):
        out = {}
        d = self.D - 1
        for H in sorted(self.hc, key=lambda S: (S.dim(), S.rows)):
            Hd = f2.F2Subspace(d, H.rows)
            span = Hd.plus(f2.perp_in_parity(Hd, 0))
            assert span.dim() == d // 2, (H, span)
            out[H] = frozenset(span.element_bits())
        return out

    def check_constructibles(self):
        out = self.constructibles()
        return len(set(out.values())) == len(out)

    def verify(self):
        report = {
            "counts": self.check_counts(),
            "membership": self.check_membership(),
            "theta": self.check_theta(),
            "levels": self.check_levels(),
            "transversality": self.check_transversality(),
            "level-bijection": self.check_hbar_gamma(),
            "transform-nonneg": self.check_fourier_nonneg(),
            "support-digraph": self.check_support_digraph(),
            "constructibles": self.check_constructibles(),
            "third-rank": self.check_third_rank(),
        }
        if self.D <= 9:
            report["sdr-unique"] = self.check_sdr_unique()
        if self.D <= 11:
            report["matrix-digraph"] = self.check_c_digraph()
        return report


# ---------------------------------------------------------------------------
# triangular-transform digraph, shared by all three kinds


def _gf2_rank(rows):
    rank = 0
    basis = []
    for r in rows:
        for b in basis:
            r = min(r, r ^ b)
        if r:
            basis.append(r)
            basis.sort(reverse=True)
            rank += 1
    return rank


def _c_digraph_acyclic(fam):
    """Acyclicity of the off-diagonal entries of the transform's matrix in
    the second basis: solve (basis matrix) * C = (transformed basis) by
    back-substitution along a support-compatible order.  The basis matrix
    is unitriangular in that order, so eliminating the largest remaining
    position at each step is exact."""
    order = _toposort(fam.points, fam._support_edges())
    pos = {p: i for i, p in enumerate(order)}
    by_theta = {fam.theta[key]: key for key in fam.xi}
    edges = []
    for key in fam.xi:
        rhs = fam._c_rhs(key)
        a = fam.theta[key]
        heap = [(-pos[p], p) for p in rhs]
        heapq.heapify(heap)
        while heap:
            _, p = heapq.heappop(heap)
            if p not in rhs:
                continue
            c = rhs.pop(p)
            if not c:
                continue
            if p != a:
                edges.append((a, p))
            zc = c - c
            for q, w in fam._c_support_weights(by_theta[p]):
                if q == p:
                    continue
                if q in rhs:
                    rhs[q] = rhs[q] - c * w
                else:
                    rhs[q] = zc - c * w
                    heapq.heappush(heap, (-pos[q], q))
    return digraph_acyclic(fam.points, edges)


# ---------------------------------------------------------------------------
# exceptional models


_DEGREE = {1: 1, 2: 2, 3: 2, 4: 3, 5: 3, 11: 4, 17: 5}

_CATALOG = {
    1: {"1!": []},
    2: {"1!": [], "2!": [[(1, 2)]]},
    3: {"1!": [], "2!": [[(1, 2)]]},
    4: {"1!": [], "2!": [[(1, 2)]], "3!": [[(1, 2)], [(1, 2, 3)]]},
    5: {"1!": [], "2!": [[(1, 2)]], "3!": [[(1, 2)], [(1, 2, 3)]]},
    11: {
        "1!": [],
        "2!": [[(1, 2)]],
        "2!2!": [[(1, 2)], [(3, 4)]],
        "3!": [[(1, 2)], [(1, 2, 3)]],
        "8": [[(1, 2)], [(3, 4)], [(1, 3), (2, 4)]],
        "4!": [[(1, 2)], [(1, 2, 3, 4)]],
    },
    17: {
        "1!": [],
        "2!": [[(1, 2)]],
        "2!2!": [[(1, 2)], [(3, 4)]],
        "3!": [[(3, 4)], [(3, 4, 5)]],
        "8": [[(1, 2)], [(3, 4)], [(1, 3), (2, 4)]],
        "2!3!": [[(1, 2)], [(3, 4)], [(3, 4, 5)]],
        "4!": [[(1, 2)], [(1, 2, 3, 4)]],
        "5!": [[(1, 2)], [(1, 2, 3, 4, 5)]],
    },
}

_TOP = {1: "1!", 2: "2!", 3: "2!", 4: "3!", 5: "3!", 11: "4!", 17: "5!"}

# letters acted on by each named subgroup, for the standardizing surjections
_LETTERS = {
    "2!": (1, 2),
    "3!": (1, 2, 3),
    "4!": (1, 2, 3, 4),
    "5!": (1, 2, 3, 4, 5),
    "2!2!": (1, 2, 3, 4),
    "2!3!": (1, 2, 3, 4, 5),
}

_PRODUCT_FACTORS = {"2!2!": ((1, 2), (3, 4)), "2!3!": ((1, 2), (3, 4, 5))}

_ROOT_LABELS = {2: ("Lz1",), 3: ("Lz1", "Lz2"), 4: ("Lz1", "Lz3"),
                5: ("Lz1", "Lz2", "Lz3", "Lz4")}


def _standard_letters(card, name):
    if name == "3!" and card == 17:
        return (3, 4, 5)
    return _LETTERS[name]


def _restrict_element(g, letters):
    """The permutation induced on a sorted stable letter set, 0-based."""
    pos = {p: i for i, p in enumerate(letters)}
    return tuple(pos[g[p - 1] + 1] for p in letters)


def prim_labels(qkind):
    """Ordered labels of the distinguished vectors for one quotient kind."""
    if qkind == "1":
        return ("1",)
    if qkind.startswith("s") and "x" not in qkind:
        n = int(qkind[1:])
        return ("1",) + _ROOT_LABELS[n]
    if qkind == "s2xs2":
        return ("Lz1xLz1", "Lz1x1", "1")
    if qkind == "s2xs3":
        return ("Lz1x1", "Lz1xLz1", "Lz1xLz2", "1xLz1", "1xLz2", "1")
    raise FamilyError(f"unknown quotient kind {qkind!r}")


class GroupFamily:
    """Family modeled on a permutation group of degree at most five.

    The subgroup catalog, the normal pairs, and the quotient identifications
    are fixed data; the distinguished vectors on the standard quotients come
    from configuration validated here: natural coefficients, a forced unique
    representative system, and nonnegativity under the pairing transform."""

    kind = "exceptional"

    def __init__(self, card, prim_data=None, validate=True):
        if card not in _CATALOG:
            raise FamilyError(f"no family of cardinality {card}")
        self.card = card
        degree = _DEGREE[card]
        self.subgroups = {}
        for name, gens in _CATALOG[card].items():
            perms = [groups.from_cycles(degree, *g) for g in gens]
            self.subgroups[name] = groups.PermGroup(degree, perms)
        self.top = _TOP[card]
        self.group = self.subgroups[self.top]
        self.module = groups.PairingModule(self.group)
        self.points = tuple(self.module.points)
        self._modules = {name: groups.PairingModule(g)
                         for name, g in self.subgroups.items()}
        self.prim_data = prim_data
        self.pair_order = self._normal_pairs()
        self._pair_info = {p: self._quotient_data(*p) for p in self.pair_order}
        self.xi = []
        self._vectors = {}
        for pair in self.pair_order:
            qmodule, proj, qkind = self._pair_info[pair]
            for label, vec in self._prim_vectors(qkind, qmodule):
                key = (pair, label)
                self.xi.append(key)
                hj_mod = self._modules[pair[1]]
                out = self.module.transfer(hj_mod, qmodule, proj, vec)
                self._vectors[key] = out
        self.xi = tuple(self.xi)
        if validate:
            self._validate()
        self.theta = unique_sdr(
            {key: frozenset(self._vectors[key]) for key in self.xi}
        )

    # --- construction ---

    def _normal_pairs(self):
        names = sorted(
            self.subgroups,
            key=lambda n: (self.subgroups[n].order, n),
        )
        out = []
        for j, hj in enumerate(names):
            for hi in names[: j + 1]:
                if (hi, hj) == ("1!", "8"):
                    continue
                gi, gj = self.subgroups[hi], self.subgroups[hj]
                if gj.contains_group(gi) and gj.is_normal(gi):
                    out.append((hi, hj))
        return out

    def _quotient_data(self, hi, hj):
        """Standard quotient model and the surjection onto it."""
        gi, gj = self.subgroups[hi], self.subgroups[hj]
        if hi == hj:
            q = groups.PermGroup(1, [])
            proj = {g: groups.identity_perm(1) for g in gj.elements}
            return groups.PairingModule(q), proj, "1"
        if hi == "1!":
            if hj in _PRODUCT_FACTORS:
                letters = _standard_letters(self.card, hj)
                q, proj = groups.restriction_hom(gj, letters)
                a, b = _PRODUCT_FACTORS[hj]
                return groups.PairingModule(q), proj, f"s{len(a)}xs{len(b)}"
            letters = _standard_letters(self.card, hj)
            q, proj = groups.restriction_hom(gj, letters)
            return groups.PairingModule(q), proj, f"s{len(letters)}"
        if hj in _PRODUCT_FACTORS:
            a, b = _PRODUCT_FACTORS[hj]
            moved = set()
            for g in gi.elements:
                moved |= {p for p in range(1, gi.degree + 1) if g[p - 1] != p - 1}
            other = b if moved <= set(a) else a
            q, proj = groups.restriction_hom(gj, other)
            return groups.PairingModule(q), proj, f"s{len(other)}"
        if (hi, hj) == ("2!2!", "8"):
            q, proj = groups.quotient_group(gj, gi)
            return groups.PairingModule(q), proj, "s2"
        raise FamilyError(f"no quotient identification for {(hi, hj)!r}")

    def _prim_vectors(self, qkind, qmodule):
        out = []
        for label in prim_labels(qkind):
            out.append((label, self._prim_vector(qkind, qmodule, label)))
        return out

    def _prim_vector(self, qkind, qmodule, label):
        if label == "1":
            return {qmodule.unit_point(): Fraction(1)}
        if "x" in qkind:
            na, nb = (2, 2) if qkind == "s2xs2" else (2, 3)
            la, lb = label.split("x")
            letters_a, letters_b = ((1, 2), (3, 4)) if qkind == "s2xs2" else (
                (1, 2), (3, 4, 5))
            va = self._standard_prim(na, la)
            vb = self._standard_prim(nb, lb)
            tmap = _tensor_points(qmodule, letters_a, letters_b)
            out = {}
            for pa, ca in va.items():
                for pb, cb in vb.items():
                    out[tmap[(pa, pb)]] = ca * cb
            return out
        return self._standard_prim(int(qkind[1:]), label)

    def _standard_prim(self, n, label):
        if label == "1":
            mod = _standard_module(n)
            return {mod.unit_point(): Fraction(1)}
        data = self.prim_data
        if data is None:
            data = load_prim_data()
        vecs = data.get(f"s{n}", {})
        if label not in vecs:
            raise FamilyError(f"missing distinguished vector s{n}:{label}")
        return {k: Fraction(v) for k, v in vecs[label].items()}

    # --- data validation (the loader-facing contract) ---

    def _validate(self):
        for key, vec in self._vectors.items():
            if not vec:
                raise FamilyError(f"empty image for {key!r}")
            for c in vec.values():
                if c != int(c) or c < 0:
                    raise FamilyError(
                        f"non-natural coefficient {c} in image of {key!r}"
                    )
        if len(self.xi) != len(self.points):
            raise FamilyError(
                f"{len(self.xi)} parameters against {len(self.points)} points"
            )

    # --- common interface ---

    def fiber(self, pair):
        qkind = self._pair_info[pair][2]
        return list(prim_labels(qkind))

    def support(self, key):
        return frozenset(self._vectors[key])

    def basis_vector(self, key):
        return dict(self._vectors[key])

    def fourier_column(self, key):
        A = self.module.fourier()
        vec = self._vectors[key]
        out = {}
        for i, p in enumerate(self.points):
            tot = cyclo.CycNumber.zero()
            for q, c in vec.items():
                tot = tot + A[i][self.module.index[q]] * c
            if tot:
                out[p] = tot
        return out

    def _c_rhs(self, key):
        return dict(self.fourier_column(key))

    def _c_support_weights(self, key):
        return list(self._vectors[key].items())

    def check_counts(self):
        return len(self.xi) == len(self.points)

    def check_theta(self):
        vals = set(self.theta.values())
        if len(vals) != len(self.xi) or vals != set(self.points):
            return False
        return all(
            self._vectors[key].get(self.theta[key]) == 1 for key in self.xi
        )

    def check_fourier_nonneg(self):
        for key in self.xi:
            for val in self.fourier_column(key).values():
                if not val.is_rational():
                    if not val.is_real() or val.approx().real < 0:
                        return False
                elif val.as_fraction() < 0:
                    return False
        return True

    def check_support_digraph(self):
        return digraph_acyclic(self.points, self._support_edges())

    def _support_edges(self):
        for key in self.xi:
            t = self.theta[key]
            for p in self.support(key):
                if p != t:
                    yield (p, t)

    def check_sdr_unique(self):
        try:
            got = unique_sdr({key: self.support(key) for key in self.xi})
        except FamilyError:
            return False
        return got == self.theta

    def check_c_digraph(self):
        return _c_digraph_acyclic(self)

    def check_transform_involution(self):
        A = self.module.fourier()
        n = len(self.points)
        one = cyclo.CycNumber.one()
        zero = cyclo.CycNumber.zero()
        for i in range(n):
            for j in range(n):
                tot = zero
                for k in range(n):
                    tot = tot + A[i][k] * A[k][j]
                if tot != (one if i == j else zero):
                    return False
        return True

    def constructibles(self):
        out = {}
        for name in sorted(self.subgroups, key=lambda n: (self.subgroups[n].order, n)):
            qmodule, proj, _ = self._quotient_data(name, name)
            vec = self.module.transfer(
                self._modules[name], qmodule, proj,
                {qmodule.unit_point(): Fraction(1)},
            )
            out[name] = vec
        return out

    def check_constructibles(self):
        out = self.constructibles()
        reg = self.module.regular_vector()
        if out["1!"] != {k: Fraction(v) for k, v in reg.items()}:
            return False
        seen = [frozenset(v.items()) for v in out.values()]
        return len(set(seen)) == len(seen)

    def third_basis(self, labeling):
        """Block truncations of the second basis along a level labeling."""
        out = {}
        for key in self.xi:
            p = self.theta[key]
            lab = labeling[p]
            out[p] = {
                q: c for q, c in self._vectors[key].items() if labeling[q] == lab
            }
        return out

    def check_third_rank(self, labeling):
        basis = self.third_basis(labeling)
        rows = []
        for p in self.points:
            rows.append([basis[p].get(q, Fraction(0)) for q in self.points])
        return _fraction_rank(rows) == len(self.points)

    def check_transversality(self, labeling):
        for pair in self.pair_order:
            lv = [
                labeling[self.theta[(pair, lab)]] for lab in self.fiber(pair)
            ]
            if len(lv) != len(set(lv)):
                return False
        return True

    def pairs_meeting(self, labeling, level):
        """Pairs whose fiber meets one block of a labeling."""
        out = []
        for pair in self.pair_order:
            if any(
                labeling[self.theta[(pair, lab)]] == level
                for lab in self.fiber(pair)
            ):
                out.append(pair)
        return out

    def check_level_bijection(self, labeling):
        for level in set(labeling.values()):
            pairs = self.pairs_meeting(labeling, level)
            size = sum(1 for p in self.points if labeling[p] == level)
            if len(pairs) != size:
                return False
        return True

    def verify(self, labelings=()):
        report = {
            "counts": self.check_counts(),
            "theta": self.check_theta(),
            "transform-nonneg": self.check_fourier_nonneg(),
            "support-digraph": self.check_support_digraph(),
            "sdr-unique": self.check_sdr_unique(),
            "matrix-digraph": self.check_c_digraph(),
            "constructibles": self.check_constructibles(),
        }
        for name, labeling in labelings:
            report[f"transversality[{name}]"] = self.check_transversality(labeling)
            report[f"level-bijection[{name}]"] = self.check_level_bijection(labeling)
            report[f"third-rank[{name}]"] = self.check_third_rank(labeling)
        return report


@lru_cache(maxsize=None)
def _standard_module(n):
    return groups.PairingModule(groups.symmetric_group(n))


def _tensor_points(qmodule, letters_a, letters_b):
    """Identification of factor point pairs with product module points."""
    mod_a = _standard_module(len(letters_a))
    mod_b = _standard_module(len(letters_b))
    q = qmodule.group
    emb = {}
    for xa in mod_a.group.elements:
        for xb in mod_b.group.elements:
            img = list(range(q.degree))
            for i, p in enumerate(letters_a):
                img[p - 1] = letters_a[xa[i]] - 1
            for i, p in enumerate(letters_b):
                img[p - 1] = letters_b[xb[i]] - 1
            emb[(xa, xb)] = tuple(img)
    out = {}
    for pa in mod_a.points:
        for pb in mod_b.points:
            xa = mod_a.group.reps[pa[0]]
            xb = mod_b.group.reps[pb[0]]
            x = emb[(xa, xb)]
            ci = q.class_index[x]
            x0 = q.reps[ci]
            g = q.transport(x, x0)
            gi = groups.invert(g)
            cent, tab = qmodule.cents[ci]
            ta = mod_a.cents[pa[0]][1]
            tb = mod_b.cents[pb[0]][1]
            vals = []
            for u in cent.reps:
                w = groups.conj(gi, u)
                wa = _restrict_element(w, letters_a)
                wb = _restrict_element(w, letters_b)
                va = ta.values[pa[1]][mod_a.cents[pa[0]][0].class_index[wa]]
                vb = tb.values[pb[1]][mod_b.cents[pb[0]][0].class_index[wb]]
                vals.append(va * vb)
            vals = tuple(vals)
            match = None
            for b in range(tab.nchars):
                if tuple(tab.values[b]) == vals:
                    match = b
                    break
            assert match is not None, (pa, pb)
            out[(pa, pb)] = (ci, match)
    return out


def _fraction_rank(rows):
    mat = [list(r) for r in rows]
    rank = 0
    ncols = len(mat[0]) if mat else 0
    for col in range(ncols):
        piv = None
        for r in range(rank, len(mat)):
            if mat[r][col]:
                piv = r
                break
        if piv is None:
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        inv = Fraction(1) / mat[rank][col]
        mat[rank] = [x * inv for x in mat[rank]]
        for r in range(len(mat)):
            if r != rank and mat[r][col]:
                f = mat[r][col]
                mat[r] = [a - f * b for a, b in zip(mat[r], mat[rank])]
        rank += 1
    return rank


# ---------------------------------------------------------------------------
# distinguished-vector configuration


def fixtures_dir():
    override = os.environ.get("FAMKIT_FIXTURES")
    if override:
        return override
    return os.path.join(os.path.dirname(__file__), "fixtures")


def fixture_text(name):
    path = os.path.join(fixtures_dir(), name)
    with open(path, encoding="utf-8") as fh:
        return fh.read()


@lru_cache(maxsize=None)
def load_prim_data():
    """Parse the frozen distinguished vectors for the standard groups.

    Line grammar: "<group> <label> : ci,ai num[/den] ; ..." with machine
    point indices; blank lines and # comments ignored.  Validation happens
    when a family is assembled from the data, not here."""
    data = {}
    for line in fixture_text("prim_lambda.txt").splitlines():
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        head, body = line.split(":", 1)
        gname, label = head.split()
        vec = {}
        for term in body.split(";"):
            term = term.strip()
            if not term:
                continue
            pt, coeff = term.split()
            ci, ai = pt.split(",")
            vec[(int(ci), int(ai))] = Fraction(coeff)
        data.setdefault(gname, {})[label] = vec
    return data


# ---------------------------------------------------------------------------
# entry point used by the command surface


def family_for_spec(spec):
    """Family object for a textual descriptor like BC:4, D:7, or EXC:17."""
    try:
        kind, num = spec.split(":")
        num = int(num)
    except ValueError as exc:
        raise FamilyError(f"malformed family spec {spec!r}") from exc
    if kind == "BC":
        if num % 2 or num < 0:
            raise FamilyError(f"even dimension required in {spec!r}")
        return VectorFamily(num)
    if kind == "D":
        if num % 2 == 0 or num < 1:
            raise FamilyError(f"odd dimension required in {spec!r}")
        return QuotientFamily(num)
    if kind == "EXC":
        return GroupFamily(num)
    raise FamilyError(f"unknown family kind in {spec!r}")
