"""Exact character theory for small permutation groups.

Permutations are tuples of 0-based images.  A group is a closed element set
with conjugacy data; its character table is computed by diagonalising the
class-sum matrices over a small prime field, lifting eigenvalue data to exact
cyclotomic numbers, and checking both orthogonality relations.  On top of the
tables sit the pair module (conjugacy class, centralizer character), the
induction / projection maps between such modules, and the Fourier pairing.
"""

from fractions import Fraction

from . import cyclo

ORDER_BOUND = 120

_P = 241  # prime with 240 = 4 * 60, so F_P holds all needed roots of unity


def _find_root():
    for g in range(2, _P):
        if all(pow(g, (_P - 1) // q, _P) != 1 for q in (2, 3, 5)):
            return g
    raise AssertionError("no primitive root")


_ROOT = _find_root()
_W60 = pow(_ROOT, (_P - 1) // 60, _P)  # fixed 60th root of unity mod P


def identity_perm(n):
    return tuple(range(n))


def compose(a, b):
    """a after b."""
    assert len(a) == len(b)
    return tuple(a[j] for j in b)


def invert(a):
    out = [0] * len(a)
    for i, j in enumerate(a):
        out[j] = i
    return tuple(out)


def conj(g, x):
    """g x g^-1."""
    return compose(compose(g, x), invert(g))


def perm_order(a):
    n = 1
    p = a
    ident = identity_perm(len(a))
    while p != ident:
        p = compose(p, a)
        n += 1
    return n


def perm_power(a, k):
    p = identity_perm(len(a))
    for _ in range(k):
        p = compose(p, a)
    return p


def from_cycles(n, *cycles):
    """Permutation of degree n from disjoint cycles in 1-based points."""
    img = list(range(n))
    seen = set()
    for cyc in cycles:
        for s in cyc:
            assert 1 <= s <= n and s not in seen, cycles
            seen.add(s)
        for s, t in zip(cyc, cyc[1:] + cyc[:1]):
            img[s - 1] = t - 1
    return tuple(img)


def symmetric_group(n):
    if n == 1:
        return PermGroup(1, [])
    gens = [from_cycles(n, (1, 2)), from_cycles(n, tuple(range(1, n + 1)))]
    return PermGroup(n, gens)


class PermGroup:
    """Closed permutation group of order at most 120 with conjugacy data."""

    __slots__ = (
        "degree",
        "generators",
        "elements",
        "element_set",
        "order",
        "classes",
        "class_index",
        "reps",
        "_table",
        "_cent",
    )

    def __init__(self, degree, generators):
        ident = tuple(range(degree))
        gens = [tuple(g) for g in generators]
        for g in gens:
            assert sorted(g) == list(range(degree)), g
        seen = {ident}
        queue = [ident]
        while queue:
            e = queue.pop()
            for g in gens:
                f = compose(e, g)
                if f not in seen:
                    if len(seen) >= ORDER_BOUND:
                        raise ValueError("group order bound 120 exceeded")
                    seen.add(f)
                    queue.append(f)
        self.degree = degree
        self.generators = tuple(gens)
        self.elements = tuple(sorted(seen))
        self.element_set = frozenset(seen)
        self.order = len(self.elements)
        invs = {g: invert(g) for g in self.elements}
        classes = []
        index = {}
        for x in self.elements:
            if x in index:
                continue
            orbit = sorted({compose(compose(g, x), invs[g]) for g in self.elements})
            for y in orbit:
                index[y] = len(classes)
            classes.append(tuple(orbit))
        self.classes = tuple(classes)
        self.class_index = index
        self.reps = tuple(cls[0] for cls in classes)
        self._table = None
        self._cent = {}

    def __repr__(self):
        return f"PermGroup(degree={self.degree}, order={self.order})"

    def contains_group(self, other):
        return other.degree == self.degree and other.element_set <= self.element_set

    def is_normal(self, other):
        if not self.contains_group(other):
            return False
        return all(
            conj(g, h) in other.element_set
            for g in self.generators or self.elements
            for h in other.elements
        )

    def transport(self, x, x0):
        """First group element conjugating x onto x0."""
        for g in self.elements:
            if conj(g, x) == x0:
                return g
        raise AssertionError((x, x0))

    def centralizer_group(self, x):
        got = self._cent.get(x)
        if got is None:
            els = [g for g in self.elements if compose(g, x) == compose(x, g)]
            got = PermGroup(self.degree, els)
            self._cent[x] = got
        return got

    def char_table(self):
        if self._table is None:
            self._table = CharTable(self)
        return self._table


def _rref(rows, ncols):
    rows = [list(r) for r in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        inv = pow(rows[r][c], _P - 2, _P)
        rows[r] = [(x * inv) % _P for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [(x - f * y) % _P for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def _kernel(mat):
    n = len(mat)
    red, pivots = _rref(mat, n)
    free = [c for c in range(n) if c not in pivots]
    out = []
    for c in free:
        v = [0] * n
        v[c] = 1
        for i, pc in enumerate(pivots):
            v[pc] = (-red[i][c]) % _P
        out.append(tuple(v))
    return out


def _solve(cols, target):
    """Coefficients expressing target in the given independent columns."""
    n = len(target)
    rows = [[cols[j][i] for j in range(len(cols))] + [target[i]] for i in range(n)]
    red, pivots = _rref(rows, len(cols) + 1)
    assert len(cols) not in pivots, "target outside span"
    sol = [0] * len(cols)
    for i, pc in enumerate(pivots):
        sol[pc] = red[i][len(cols)]
    return sol


def _char_poly(mat):
    """Monic characteristic polynomial coefficients mod P, leading first."""
    n = len(mat)
    coeffs = [1]
    work = [row[:] for row in mat]
    c = (-sum(work[i][i] for i in range(n))) % _P
    coeffs.append(c)
    for k in range(2, n + 1):
        for i in range(n):
            work[i][i] = (work[i][i] + coeffs[-1]) % _P
        nxt = [
            [sum(mat[i][t] * work[t][j] for t in range(n)) % _P for j in range(n)]
            for i in range(n)
        ]
        work = nxt
        tr = sum(work[i][i] for i in range(n)) % _P
        coeffs.append((-tr * pow(k, _P - 2, _P)) % _P)
    return coeffs


def _poly_roots(coeffs):
    out = []
    for lam in range(_P):
        acc = 0
        for c in coeffs:
            acc = (acc * lam + c) % _P
        if acc == 0:
            out.append(lam)
    return out


def _common_eigenvectors(mats, r):
    spaces = [[tuple(1 if j == i else 0 for j in range(r)) for i in range(r)]]
    for mat in mats:
        if all(len(w) == 1 for w in spaces):
            break
        nxt = []
        for basis in spaces:
            if len(basis) == 1:
                nxt.append(basis)
                continue
            images = [
                tuple(sum(mat[i][j] * w[j] for j in range(r)) % _P for i in range(r))
                for w in basis
            ]
            rest = [_solve(basis, im) for im in images]
            # rest is column-per-basis-vector; transpose to act on coordinates
            small = [[rest[j][i] for j in range(len(basis))] for i in range(len(basis))]
            found = 0
            for lam in _poly_roots(_char_poly(small)):
                shifted = [row[:] for row in small]
                for i in range(len(basis)):
                    shifted[i][i] = (shifted[i][i] - lam) % _P
                lifted = [
                    tuple(
                        sum(coeff[t] * basis[t][i] for t in range(len(basis))) % _P
                        for i in range(r)
                    )
                    for coeff in _kernel(shifted)
                ]
                if lifted:
                    nxt.append(lifted)
                    found += len(lifted)
                if found == len(basis):
                    break
            assert found == len(basis), "class algebra failed to split"
        spaces = nxt
    assert all(len(w) == 1 for w in spaces) and len(spaces) == r
    return [w[0] for w in spaces]


class CharTable:
    """Irreducible characters as exact cyclotomic class functions."""

    __slots__ = ("group", "nchars", "degrees", "values", "_trivial")

    def __init__(self, group):
        self.group = group
        for rep in group.reps:
            m = perm_order(rep)
            if 60 % m:
                raise ValueError(f"element order {m} does not divide 60")
        r = len(group.classes)
        sizes = [len(c) for c in group.classes]
        i0 = group.class_index[identity_perm(group.degree)]
        counts = [[[0] * r for _ in range(r)] for _ in range(r)]
        for u in group.elements:
            i = group.class_index[u]
            for v in group.elements:
                j = group.class_index[v]
                k = group.class_index[compose(u, v)]
                counts[i][j][k] += 1
        mats = []
        for i in range(r):
            mat = []
            for j in range(r):
                row = []
                for k in range(r):
                    q, rem = divmod(counts[i][j][k], sizes[k])
                    assert rem == 0
                    row.append(q % _P)
                mat.append(row)
            mats.append(mat)
        inv_class = [group.class_index[invert(rep)] for rep in group.reps]
        omegas = []
        for vec in _common_eigenvectors(mats, r):
            assert vec[i0] != 0
            scale = pow(vec[i0], _P - 2, _P)
            omegas.append(tuple(v * scale % _P for v in vec))
        rows = []
        degrees = []
        for om in omegas:
            s = 0
            for j in range(r):
                s += om[j] * om[inv_class[j]] * pow(sizes[j], _P - 2, _P)
            d2 = group.order * pow(s % _P, _P - 2, _P) % _P
            d = next(t for t in range(1, 12) if t * t == d2)
            chi_p = [d * om[j] * pow(sizes[j], _P - 2, _P) % _P for j in range(r)]
            values = []
            for j, rep in enumerate(group.reps):
                m = perm_order(rep)
                zeta = pow(_W60, 60 // m, _P)
                powers = []
                x = identity_perm(group.degree)
                for _ in range(m):
                    powers.append(chi_p[group.class_index[x]])
                    x = compose(x, rep)
                minv = pow(m, _P - 2, _P)
                val = cyclo.ZERO
                total = 0
                for t in range(m):
                    n_t = (
                        minv
                        * sum(
                            powers[s] * pow(zeta, (-t * s) % (_P - 1), _P)
                            for s in range(m)
                        )
                        % _P
                    )
                    total += n_t
                    if n_t:
                        val = val + cyclo.CycNumber.root_of_unity(m, t) * n_t
                assert total == d, (total, d)
                values.append(val)
            rows.append(tuple(values))
            degrees.append(d)
        order = sorted(
            range(r),
            key=lambda t: (degrees[t], tuple(v.canonical() for v in rows[t])),
        )
        self.nchars = r
        self.degrees = tuple(degrees[t] for t in order)
        self.values = tuple(rows[t] for t in order)
        self._trivial = next(
            a for a in range(r) if all(v == 1 for v in self.values[a])
        )
        self.verify_orthogonality()

    def value(self, a, g):
        return self.values[a][self.group.class_index[g]]

    def trivial_index(self):
        return self._trivial

    def verify_orthogonality(self):
        """Both orthogonality relations, exactly; raises on any failure."""
        g = self.group
        n = self.nchars
        sizes = [len(c) for c in g.classes]
        for a in range(n):
            for b in range(n):
                tot = cyclo.ZERO
                for j in range(n):
                    tot = tot + self.values[a][j] * self.values[b][j].conj() * sizes[j]
                want = g.order if a == b else 0
                if tot != want:
                    raise ValueError("row orthogonality fails")
        for i in range(n):
            for j in range(n):
                tot = cyclo.ZERO
                for a in range(n):
                    tot = tot + self.values[a][i] * self.values[a][j].conj()
                want = Fraction(g.order, sizes[i]) if i == j else Fraction(0)
                if tot != want:
                    raise ValueError("column orthogonality fails")
        return True


def inner_product(group, u, v):
    """Class-function inner product (second argument conjugated)."""
    tot = cyclo.ZERO
    for j, cls in enumerate(group.classes):
        tot = tot + u[j] * v[j].conj() * len(cls)
    return tot * Fraction(1, group.order)


def inner_multiplicity(group, u, v):
    ip = inner_product(group, u, v)
    assert ip.is_rational(), ip
    q = ip.as_fraction()
    assert q.denominator == 1 and q >= 0, q
    return int(q)


def induced_values(big, sub, sub_values):
    """Class-function induction from a subgroup, as values on big's classes."""
    assert big.contains_group(sub)
    out = []
    for z in big.reps:
        tot = cyclo.ZERO
        for t in big.elements:
            w = conj(invert(t), z)
            if w in sub.element_set:
                tot = tot + sub_values[sub.class_index[w]]
        out.append(tot * Fraction(1, sub.order))
    return out


def restricted_values(big, sub, big_values):
    assert big.contains_group(sub)
    return [big_values[big.class_index[rep]] for rep in sub.reps]


def restriction_hom(group, points):
    """Surjection onto the action on a stable set of 1-based points."""
    pts = sorted(points)
    if not pts:
        quot = PermGroup(1, [])
        ident = quot.elements[0]
        return quot, {g: ident for g in group.elements}
    pos = {p: idx for idx, p in enumerate(pts)}
    proj = {}
    for g in group.elements:
        assert sorted(g[p - 1] + 1 for p in pts) == pts, "point set not stable"
        proj[g] = tuple(pos[g[p - 1] + 1] for p in pts)
    quot = PermGroup(len(pts), sorted(set(proj.values())))
    return quot, proj


def block_hom(group, blocks):
    """Surjection onto the action on a stable partition into blocks."""
    bl = [frozenset(b) for b in blocks]
    proj = {}
    for g in group.elements:
        img = []
        for b in bl:
            ib = frozenset(g[p - 1] + 1 for p in b)
            img.append(bl.index(ib))
        proj[g] = tuple(img)
    quot = PermGroup(len(bl), sorted(set(proj.values())))
    return quot, proj


def quotient_group(group, normal):
    """Cosets of a normal subgroup acting on themselves by left translation."""
    if not group.is_normal(normal):
        raise ValueError("subgroup is not normal")
    cosets = sorted(
        {tuple(sorted(compose(g, n) for n in normal.elements)) for g in group.elements}
    )
    member = {}
    for idx, c in enumerate(cosets):
        for g in c:
            member[g] = idx
    proj = {
        g: tuple(member[compose(g, c[0])] for c in cosets) for g in group.elements
    }
    quot = PermGroup(len(cosets), sorted(set(proj.values())))
    return quot, proj


def xor_perm_group(masks):
    """Additive group of a xor-closed set of bit masks, acting on itself."""
    els = sorted(set(masks))
    assert 0 in els, "missing zero mask"
    index = {m: i for i, m in enumerate(els)}
    to_perm = {}
    for g in els:
        to_perm[g] = tuple(index[m ^ g] for m in els)
    group = PermGroup(len(els), list(to_perm.values()))
    return group, to_perm


class PairingModule:
    """Pairs (conjugacy class, centralizer character) and their transforms.

    Points are (class index, character index); vectors are sparse dicts with
    Fraction coefficients.  The canonical form fixes the class representative
    as the least element of its class and orders characters as in CharTable.
    """

    __slots__ = ("group", "table", "cents", "points", "index", "_fourier")

    def __init__(self, group):
        self.group = group
        self.table = group.char_table()
        self.cents = []
        for rep in group.reps:
            cent = group.centralizer_group(rep)
            self.cents.append((cent, cent.char_table()))
        self.points = tuple(
            (i, a)
            for i in range(len(group.reps))
            for a in range(self.cents[i][1].nchars)
        )
        self.index = {pt: n for n, pt in enumerate(self.points)}
        self._fourier = None

    def unit_point(self):
        i0 = self.group.class_index[identity_perm(self.group.degree)]
        return (i0, self.cents[i0][1].trivial_index())

    def induce(self, sub, point):
        """One point of a subgroup's module, pushed up into this module."""
        assert self.group.contains_group(sub.group)
        i_h, a_h = point
        x = sub.group.reps[i_h]
        cent_h, tab_h = sub.cents[i_h]
        i = self.group.class_index[x]
        g = self.group.transport(x, self.group.reps[i])
        gi = invert(g)
        cent, tab = self.cents[i]
        inside = {conj(g, z) for z in cent_h.elements}
        sigma = {k: tab_h.values[a_h][cent_h.class_index[conj(gi, k)]] for k in inside}
        ind = []
        for u in cent.reps:
            tot = cyclo.ZERO
            for t in cent.elements:
                w = conj(invert(t), u)
                if w in inside:
                    tot = tot + sigma[w]
            ind.append(tot * Fraction(1, len(inside)))
        out = {}
        check = 0
        for b in range(tab.nchars):
            c = inner_multiplicity(cent, ind, tab.values[b])
            if c:
                out[(i, b)] = Fraction(c)
                check += c * tab.degrees[b]
        dim = tab_h.values[a_h][cent_h.class_index[identity_perm(cent_h.degree)]]
        assert check == dim.as_fraction() * (cent.order // len(inside))
        return out

    def induce_vector(self, sub, vec):
        out = {}
        for pt, c in vec.items():
            for pt2, w in self.induce(sub, pt).items():
                out[pt2] = out.get(pt2, Fraction(0)) + c * w
        return {k: v for k, v in out.items() if v}

    def project(self, qmodule, proj, point):
        """Pull one point of a quotient's module back into this module.

        proj maps every element of this group onto the quotient group; the
        weights are the rational ones of the defining sum over the fibre.
        """
        ix, a_x = point
        xbar = qmodule.group.reps[ix]
        cent_q, tab_q = qmodule.cents[ix]
        fibre = [y for y in self.group.elements if proj[y] == xbar]
        ksize = self.group.order // qmodule.group.order
        assert len(fibre) == ksize
        out = {}
        for y in fibre:
            i = self.group.class_index[y]
            g = self.group.transport(y, self.group.reps[i])
            gi = invert(g)
            cent, tab = self.cents[i]
            psi = []
            for u in cent.reps:
                pv = proj[conj(gi, u)]
                psi.append(tab_q.values[a_x][cent_q.class_index[pv]])
            weight = Fraction(cent.order, cent_q.order * ksize)
            for b in range(tab.nchars):
                c = inner_multiplicity(cent, tab.values[b], psi)
                if c:
                    out[(i, b)] = out.get((i, b), Fraction(0)) + weight * c
        return {k: v for k, v in out.items() if v}

    def project_vector(self, qmodule, proj, vec):
        out = {}
        for pt, c in vec.items():
            for pt2, w in self.project(qmodule, proj, pt).items():
                out[pt2] = out.get(pt2, Fraction(0)) + c * w
        return {k: v for k, v in out.items() if v}

    def transfer(self, sub, qmodule, proj, vec):
        """Project a vector from the quotient module into the subgroup's
        module, then induce the result up into this one."""
        mid = sub.project_vector(qmodule, proj, vec)
        return self.induce_vector(sub, mid)

    def regular_vector(self):
        """Induction of the unit point from the trivial subgroup: one copy
        of each identity-class point, weighted by its character degree."""
        trivial = PairingModule(PermGroup(self.group.degree, []))
        return self.induce(trivial, trivial.unit_point())

    def fourier(self):
        """The pairing matrix over all points, rows and columns in order."""
        if self._fourier is not None:
            return self._fourier
        nclasses = len(self.group.reps)
        counts = {}
        for i in range(nclasses):
            x0 = self.group.reps[i]
            cent_i = self.cents[i][0]
            for j in range(nclasses):
                y0 = self.group.reps[j]
                cent_j = self.cents[j][0]
                tally = {}
                for g in self.group.elements:
                    ygy = conj(g, y0)
                    if compose(x0, ygy) != compose(ygy, x0):
                        continue
                    xg = conj(invert(g), x0)
                    key = (cent_i.class_index[ygy], cent_j.class_index[xg])
                    tally[key] = tally.get(key, 0) + 1
                counts[(i, j)] = tally
        size = len(self.points)
        matrix = [[cyclo.ZERO] * size for _ in range(size)]
        for p, (i, a) in enumerate(self.points):
            cent_i, tab_i = self.cents[i]
            for q, (j, b) in enumerate(self.points):
                cent_j, tab_j = self.cents[j]
                tot = cyclo.ZERO
                for (ci, cj), m in counts[(i, j)].items():
                    tot = tot + tab_i.values[a][ci] * tab_j.values[b][cj].conj() * m
                matrix[p][q] = tot * Fraction(1, cent_i.order * cent_j.order)
        self._fourier = matrix
        return matrix
