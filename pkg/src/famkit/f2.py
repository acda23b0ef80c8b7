"""GF(2) linear algebra on bitmask vectors.

V_D is the F_2-space with basis e_1..e_D; a vector is an int mask with bit
(i-1) standing for e_i.  The bilinear form pairs e_i with e_j exactly when
|i-j| = 1; it is symplectic (nondegenerate) for even D and has radical
spanned by the alternating vector e_1 + e_3 + ... + e_D for odd D.  Everything here is
immutable and pure.
"""

from __future__ import annotations

_DIGITS = "123456789ABCDE"


class F2Vector:
    """Vector in V_D as (dim, bits)."""

    __slots__ = ("dim", "bits")

    def __init__(self, dim, bits):
        assert 0 <= dim <= len(_DIGITS), dim
        assert 0 <= bits < (1 << dim), (dim, bits)
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "bits", bits)

    def __setattr__(self, *a):
        raise AttributeError("immutable")

    def __eq__(self, other):
        return (
            isinstance(other, F2Vector)
            and self.dim == other.dim
            and self.bits == other.bits
        )

    def __hash__(self):
        return hash((self.dim, self.bits))

    def __xor__(self, other):
        assert self.dim == other.dim
        return F2Vector(self.dim, self.bits ^ other.bits)

    __add__ = __xor__

    def __bool__(self):
        return self.bits != 0

    def support(self):
        """Tuple of 1-based positions."""
        return tuple(i + 1 for i in range(self.dim) if self.bits >> i & 1)

    def has(self, i):
        return self.bits >> (i - 1) & 1 == 1

    def __repr__(self):
        return f"F2Vector({self.dim}, {render_vector(self)!r})"


def vector(D, positions=()):
    bits = 0
    for i in positions:
        assert 1 <= i <= D, (i, D)
        bits |= 1 << (i - 1)
    return F2Vector(D, bits)


def e_single(D, i):
    return vector(D, (i,))


def e_interval(D, a, b):
    """e_I for the interval I = [a, b]; empty interval gives 0."""
    if a > b:
        return F2Vector(D, 0)
    assert 1 <= a and b <= D, (a, b, D)
    return F2Vector(D, ((1 << b) - 1) ^ ((1 << (a - 1)) - 1))


def e_all(D):
    """e of the full interval [1, D]."""
    return F2Vector(D, (1 << D) - 1)


def alt_vector(D):
    """e_1 + e_3 + ... (odd positions up to D)."""
    bits = 0
    for i in range(1, D + 1, 2):
        bits |= 1 << (i - 1)
    return F2Vector(D, bits)


def parity_mask(D, delta):
    """Mask of V_D^delta, the span of e_i with i = delta mod 2."""
    bits = 0
    for i in range(1, D + 1):
        if i % 2 == delta % 2:
            bits |= 1 << (i - 1)
    return bits


def symp_pair(x, y):
    """The form (x, y) in {0, 1}."""
    assert x.dim == y.dim
    a = x.bits & (y.bits >> 1)
    b = (x.bits >> 1) & y.bits
    return (bin(a).count("1") + bin(b).count("1")) & 1


def _symp_partner(bits, D):
    # mask m with symp(x, v) = dot(x, m) for v = bits
    full = (1 << D) - 1
    return ((bits >> 1) ^ (bits << 1)) & full


def dot_pair(x, y):
    assert x.dim == y.dim
    return bin(x.bits & y.bits).count("1") & 1


def _echelonize(rows):
    # reduced echelon over F2, pivots = least set bits, strictly increasing
    basis = []
    for r in rows:
        for b in basis:
            low = b & -b
            if r & low:
                r ^= b
        if r:
            basis.append(r)
            basis.sort(key=lambda v: v & -v)
            # re-reduce everything above the new pivots
            changed = True
            while changed:
                changed = False
                for i, b in enumerate(basis):
                    for j, c in enumerate(basis):
                        if i != j and b & (c & -c):
                            basis[i] = b = b ^ c
                            changed = True
    return tuple(sorted(basis, key=lambda v: v & -v))


class F2Subspace:
    """Subspace of V_D held as a reduced echelon basis."""

    __slots__ = ("dim_ambient", "rows")

    def __init__(self, dim_ambient, rows):
        rows = list(rows)
        assert all(0 <= r < (1 << dim_ambient) for r in rows), (dim_ambient, rows)
        object.__setattr__(self, "dim_ambient", dim_ambient)
        object.__setattr__(self, "rows", _echelonize(rows))

    def __setattr__(self, *a):
        raise AttributeError("immutable")

    @staticmethod
    def from_vectors(D, vectors_):
        return F2Subspace(D, [v.bits for v in vectors_])

    @staticmethod
    def zero(D):
        return F2Subspace(D, [])

    @staticmethod
    def full(D):
        return F2Subspace(D, [1 << i for i in range(D)])

    def dim(self):
        return len(self.rows)

    def contains_bits(self, bits):
        for b in self.rows:
            if bits & (b & -b):
                bits ^= b
        return bits == 0

    def contains(self, v):
        assert v.dim == self.dim_ambient
        return self.contains_bits(v.bits)

    def __le__(self, other):
        return all(other.contains_bits(r) for r in self.rows)

    def __eq__(self, other):
        return (
            isinstance(other, F2Subspace)
            and self.dim_ambient == other.dim_ambient
            and self.rows == other.rows
        )

    def __hash__(self):
        return hash((self.dim_ambient, self.rows))

    def basis(self):
        return tuple(F2Vector(self.dim_ambient, r) for r in self.rows)

    def element_bits(self):
        """All 2^dim member masks, in generation order."""
        out = [0]
        for r in self.rows:
            out += [m ^ r for m in out]
        return out

    def elements(self):
        return [F2Vector(self.dim_ambient, m) for m in self.element_bits()]

    def plus(self, other):
        assert self.dim_ambient == other.dim_ambient
        return F2Subspace(self.dim_ambient, self.rows + other.rows)

    def add_vector(self, v):
        return F2Subspace(self.dim_ambient, self.rows + (v.bits,))

    def intersect(self, other):
        # Zassenhaus with the eliminated-first block in the low bits:
        # rows r|(r<<D) from self and bare rows from other; echelon rows whose
        # low half died carry an intersection vector in the high half.
        assert self.dim_ambient == other.dim_ambient
        D = self.dim_ambient
        mask = (1 << D) - 1
        stacked = [r | (r << D) for r in self.rows] + list(other.rows)
        basis = []
        for r in stacked:
            for b in basis:
                if r & (b & -b):
                    r ^= b
            if r:
                basis.append(r)
                basis.sort(key=lambda v: v & -v)
        return F2Subspace(D, [b >> D for b in basis if not b & mask])

    def transversal_rows(self, sub):
        """Echelon rows spanning a complement of sub inside self."""
        assert sub <= self
        acc = list(sub.rows)
        out = []
        for r in self.rows:
            rr = r
            changed = True
            while changed:
                changed = False
                for b in acc:
                    if rr & (b & -b):
                        rr ^= b
                        changed = True
            if rr:
                out.append(rr)
                acc.append(rr)
        return tuple(out)

    def coset_rep_bits(self, sub):
        """Canonical representatives of self/sub (the span of a transversal)."""
        reps = [0]
        for r in self.transversal_rows(sub):
            reps += [m ^ r for m in reps]
        return reps

    def __repr__(self):
        return f"F2Subspace({self.dim_ambient}, {render_subspace(self)!r})"


def nullspace(D, row_masks):
    """Basis masks of {x : dot(x, r) = 0 for all r}."""
    rows = _echelonize(list(row_masks))
    pivots = set()
    for r in rows:
        pivots.add((r & -r).bit_length() - 1)
    out = []
    for j in range(D):
        if j in pivots:
            continue
        v = 1 << j
        for r in rows:
            if r >> j & 1:
                v |= 1 << ((r & -r).bit_length() - 1)
        out.append(v)
    return out


def perp(Z):
    """Orthogonal complement under the |i-j|=1 form."""
    D = Z.dim_ambient
    return F2Subspace(D, nullspace(D, [_symp_partner(r, D) for r in Z.rows]))


def parity_subspace(D, delta):
    return F2Subspace(D, [1 << (i - 1) for i in range(1, D + 1) if i % 2 == delta % 2])


def perp_in_parity(Z, delta):
    """Z^! = Z-perp intersected with V^delta."""
    return perp(Z).intersect(parity_subspace(Z.dim_ambient, delta))


class GradedSplit:
    """The two graded pieces of a subspace that splits as (Z cap V^0) + (Z cap V^1)."""

    __slots__ = ("even_part", "odd_part")

    def __init__(self, even_part, odd_part):
        object.__setattr__(self, "even_part", even_part)
        object.__setattr__(self, "odd_part", odd_part)

    def __setattr__(self, *a):
        raise AttributeError("immutable")


def graded_split(Z):
    """Split Z into graded parts; None when Z is not graded."""
    D = Z.dim_ambient
    p0 = Z.intersect(parity_subspace(D, 0))
    p1 = Z.intersect(parity_subspace(D, 1))
    if p0.dim() + p1.dim() != Z.dim():
        return None
    return GradedSplit(p0, p1)


def insert_pair(i, x, graded_delta=None):
    """Insertion at slot i, dimension D-2 to D.  Fixes e_k for k <= i-2, shifts e_k to e_(k+2)
    for k >= i, and sends the middle e_(i-1) to e_(i-1)+e_i+e_(i+1); the
    graded variant drops the middle e_i term (parity would break)."""
    d = x.dim
    D = d + 2
    assert 1 <= i <= D, (i, D)
    low = x.bits & ((1 << max(i - 2, 0)) - 1)
    high = (x.bits >> (i - 1)) << (i + 1) if i - 1 <= d else 0
    out = low | high
    if 2 <= i <= D - 1 and x.bits >> (i - 2) & 1:
        if graded_delta is None:
            out |= 0b111 << (i - 2)
        else:
            assert (i - 1) % 2 == graded_delta % 2, (i, graded_delta)
            out |= 0b101 << (i - 2)
    return F2Vector(D, out)


def insert_pair_graded(i, delta, x):
    """Insertion restricted to one parity piece."""
    assert x.bits & ~parity_mask(x.dim, delta) == 0, (x, delta)
    return insert_pair(i, x, graded_delta=delta)


def insert_pair_subspace(i, Z, delta=None):
    D = Z.dim_ambient + 2
    if delta is None:
        vs = [insert_pair(i, F2Vector(Z.dim_ambient, r)) for r in Z.rows]
    else:
        vs = [insert_pair_graded(i, delta, F2Vector(Z.dim_ambient, r)) for r in Z.rows]
    return F2Subspace.from_vectors(D, vs)


class Quotient:
    """Quotient of the D-space by the radical line, for odd D.  Elements are kept as
    canonical representatives with support inside [1, D-1]."""

    __slots__ = ("D",)

    def __init__(self, D):
        assert D % 2 == 1, D
        object.__setattr__(self, "D", D)

    def __setattr__(self, *a):
        raise AttributeError("immutable")

    def pi(self, x):
        assert x.dim == self.D
        if x.bits >> (self.D - 1) & 1:
            return x ^ alt_vector(self.D)
        return x

    def section(self, x):
        """Representative as a vector of V_(D-1)."""
        rep = self.pi(x)
        return F2Vector(self.D - 1, rep.bits)

    def lift(self, v):
        """Inverse of section."""
        assert v.dim == self.D - 1
        return F2Vector(self.D, v.bits)

    def pi_subspace(self, Z):
        assert Z.dim_ambient == self.D
        return F2Subspace(self.D, [self.pi(F2Vector(self.D, r)).bits for r in Z.rows])

    def pair(self, x, y):
        """Descended form; well defined since alt_vector spans the radical."""
        return symp_pair(self.pi(x), self.pi(y))

    def element_masks(self):
        return range(1 << (self.D - 1))


def render_vector(v):
    if v.bits == 0:
        return "0"
    return "".join(_DIGITS[i - 1] for i in v.support())


def parse_vector(D, text):
    if text == "0":
        return F2Vector(D, 0)
    return vector(D, [_DIGITS.index(ch) + 1 for ch in text])


def render_subspace(Z):
    if not Z.rows:
        return "0"
    inner = ",".join(render_vector(F2Vector(Z.dim_ambient, r)) for r in Z.rows)
    return f"({inner})"


def parse_subspace(D, text):
    if text == "0":
        return F2Subspace.zero(D)
    assert text.startswith("(") and text.endswith(")"), text
    body = text[1:-1]
    if not body:
        return F2Subspace.zero(D)
    return F2Subspace.from_vectors(D, [parse_vector(D, t) for t in body.split(",")])
