"""GF(2^m) arithmetic and the univariate polynomial ring over it.

Field elements are plain m-bit ints in polynomial basis: bit i is the
coefficient of alpha^i.  Multiplication is shift-and-reduce; no log/antilog
tables are used here (tests build them as oracles).  Polynomials are
immutable coefficient tuples, lowest degree first, with the zero polynomial
carrying degree minus-infinity so that EEA stop conditions need no special
cases.
"""

import functools

NEG_INF = float("-inf")


def _gf2_deg(p):
    return p.bit_length() - 1


def _gf2_mod(a, b):
    #  remainder of carry-less division in GF(2)[x]
    db = _gf2_deg(b)
    while _gf2_deg(a) >= db:
        a ^= b << (_gf2_deg(a) - db)
    return a


def _gf2_irreducible(p):
    """Trial division by every poly of degree 1..deg(p)//2."""
    d = _gf2_deg(p)
    if d < 1:
        return False
    for q in range(2, 1 << (d // 2 + 1)):
        if _gf2_deg(q) < 1:
            continue
        if _gf2_mod(p, q) == 0:
            return False
    return True


@functools.lru_cache(maxsize=None)
def make_field(m):
    """Field with the lexicographically smallest irreducible modulus of degree m."""
    if not 2 <= m <= 16:
        raise ValueError("extension degree m must be in 2..16")
    for low in range(1, 1 << m, 2):  # constant term must be 1
        p = (1 << m) | low
        if _gf2_irreducible(p):
            return Field(m, p)
    raise AssertionError("no irreducible polynomial found")  # unreachable


class Field:
    """GF(2^m) with a fixed degree-m irreducible modulus over GF(2)."""

    __slots__ = ("m", "modulus", "order")

    def __init__(self, m, modulus):
        if _gf2_deg(modulus) != m or not _gf2_irreducible(modulus):
            raise ValueError("modulus must be irreducible of degree m")
        self.m = m
        self.modulus = modulus
        self.order = 1 << m

    def __eq__(self, other):
        return isinstance(other, Field) and self.modulus == other.modulus

    def __hash__(self):
        return hash(("Field", self.modulus))

    def __repr__(self):
        return "Field(m=%d, modulus=0x%x)" % (self.m, self.modulus)

    def add(self, a, b):
        return a ^ b

    def mul(self, a, b):
        r = 0
        top = 1 << self.m
        mod = self.modulus
        while b:
            if b & 1:
                r ^= a
            b >>= 1
            a <<= 1
            if a & top:
                a ^= mod
        return r

    def inv(self, a):
        """Inverse by the extended Euclidean algorithm on GF(2)[x]."""
        if not 0 < a < self.order:
            raise ZeroDivisionError("inverse of zero (or out-of-range element)")
        u, v = a, self.modulus
        g1, g2 = 1, 0
        while u != 1:
            j = _gf2_deg(u) - _gf2_deg(v)
            if j < 0:
                u, v = v, u
                g1, g2 = g2, g1
                j = -j
            u ^= v << j
            g1 ^= g2 << j
        return _gf2_mod(g1, self.modulus)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, e):
        if e < 0:
            return self.pow(self.inv(a), -e)
        r = 1
        while e:
            if e & 1:
                r = self.mul(r, a)
            a = self.mul(a, a)
            e >>= 1
        return r

    def sqrt(self, a):
        #  squaring is the Frobenius automorphism, so its inverse is
        #  squaring m-1 times: sqrt(a) = a^(2^(m-1))
        for _ in range(self.m - 1):
            a = self.mul(a, a)
        return a


class Poly:
    """Immutable polynomial over a Field, coefficients lowest degree first."""

    __slots__ = ("field", "c")

    def __init__(self, field, coeffs=()):
        c = list(coeffs)
        while c and c[-1] == 0:
            c.pop()
        self.field = field
        self.c = tuple(c)

    @classmethod
    def zero(cls, field):
        return cls(field)

    @classmethod
    def one(cls, field):
        return cls(field, (1,))

    @classmethod
    def x(cls, field):
        return cls(field, (0, 1))

    @classmethod
    def from_roots(cls, field, roots):
        g = cls.one(field)
        for z in roots:
            g = g * cls(field, (z, 1))
        return g

    @property
    def degree(self):
        return len(self.c) - 1 if self.c else NEG_INF

    def is_zero(self):
        return not self.c

    def lc(self):
        """Leading coefficient (of the zero polynomial: 0)."""
        return self.c[-1] if self.c else 0

    def __getitem__(self, i):
        return self.c[i] if 0 <= i < len(self.c) else 0

    def __eq__(self, other):
        return (isinstance(other, Poly) and self.field == other.field
                and self.c == other.c)

    def __hash__(self):
        return hash((self.field.modulus, self.c))

    def __repr__(self):
        return "Poly(%r)" % (list(self.c),)

    def __add__(self, other):
        a, b = self.c, other.c
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, v in enumerate(b):
            out[i] ^= v
        return Poly(self.field, out)

    __sub__ = __add__  # characteristic 2

    def __mul__(self, other):
        if not self.c or not other.c:
            return Poly(self.field)
        fmul = self.field.mul
        out = [0] * (len(self.c) + len(other.c) - 1)
        for i, a in enumerate(self.c):
            if a == 0:
                continue
            for j, b in enumerate(other.c):
                if b:
                    out[i + j] ^= fmul(a, b)
        return Poly(self.field, out)

    def __divmod__(self, other):
        if not other.c:
            raise ZeroDivisionError("polynomial division by zero")
        field = self.field
        db = len(other.c) - 1
        inv_lead = field.inv(other.c[-1])
        rem = list(self.c)
        quo = [0] * max(len(rem) - db, 0)
        for i in range(len(rem) - 1, db - 1, -1):
            if rem[i] == 0:
                continue
            q = field.mul(rem[i], inv_lead)
            quo[i - db] = q
            for j, b in enumerate(other.c):
                if b:
                    rem[i - db + j] ^= field.mul(q, b)
        return Poly(field, quo), Poly(field, rem)

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def scale(self, k):
        fmul = self.field.mul
        return Poly(self.field, [fmul(k, a) for a in self.c])

    def monic(self):
        if not self.c:
            return self
        return self.scale(self.field.inv(self.c[-1]))

    def eval(self, x0):
        r = 0
        fmul = self.field.mul
        for a in reversed(self.c):
            r = fmul(r, x0) ^ a
        return r

    def deriv(self):
        #  formal derivative in characteristic 2: even-degree terms vanish
        return Poly(self.field, [self.c[j + 1] if j % 2 == 0 else 0
                                 for j in range(len(self.c) - 1)])

    def square(self):
        #  Frobenius: (sum a_i x^i)^2 = sum a_i^2 x^(2i)
        fmul = self.field.mul
        out = [0] * (2 * len(self.c) - 1 if self.c else 0)
        for i, a in enumerate(self.c):
            if a:
                out[2 * i] = fmul(a, a)
        return Poly(self.field, out)


def poly_gcd(f, g):
    """Monic greatest common divisor."""
    while not g.is_zero():
        f, g = g, f % g
    return f.monic() if not f.is_zero() else f


def is_squarefree(f):
    """True iff gcd(f, f') is a nonzero constant (f itself must be nonzero)."""
    if f.is_zero():
        return False
    if f.degree == 0:
        return True
    return poly_gcd(f, f.deriv()).degree == 0


def poly_invmod(f, g):
    """Inverse of f modulo g, or None when gcd(f, g) is not constant."""
    field = f.field
    r0, r1 = g, f % g
    s0, s1 = Poly.zero(field), Poly.one(field)
    while not r1.is_zero():
        q, r2 = divmod(r0, r1)
        r0, r1 = r1, r2
        s0, s1 = s1, s0 + q * s1
    if r0.degree != 0:
        return None
    return (s0 % g).scale(field.inv(r0.c[0]))


def eea_stop(G, T, dstop):
    """Run the extended Euclidean algorithm on (G, T), stop early.

    Returns the first remainder pair (a, b) with a = b*T (mod G) and
    deg a <= dstop; then deg b <= deg G - 1 - dstop.  Used for the
    Patterson split step and the degree-2r key equation.
    """
    field = G.field
    r0, r1 = G, T
    b0, b1 = Poly.zero(field), Poly.one(field)
    while r1.degree > dstop:
        q, r2 = divmod(r0, r1)
        r0, r1 = r1, r2
        b0, b1 = b1, b0 + q * b1
    return r1, b1


def _square_mod(f, G):
    return f.square() % G


@functools.lru_cache(maxsize=64)
def _sqrt_x_mod(G):
    """Square root of x in GF(2^m)[x]/(G), by GF(2)-linear algebra.

    Squaring is a GF(2)-linear bijection of the quotient ring when G is
    square-free (G | f^2 forces G | f), so the system always has a unique
    solution.  Basis vectors are alpha^beta * x^i with index i*m + beta.
    """
    field = G.field
    m, r = field.m, G.degree
    dim = m * r
    rows = [0] * dim  # rows[out_bit] has bit c set iff Sq(basis_c) hits out_bit
    for i in range(r):
        for beta in range(m):
            c = i * m + beta
            img = _square_mod(Poly(field, [0] * i + [1 << beta]), G)
            for ii, a in enumerate(img.c):
                for bb in range(m):
                    if (a >> bb) & 1:
                        rows[ii * m + bb] |= 1 << c
    #  solve M v = e_x by Gaussian elimination on [M | e_x]
    target = 1 * m  # coordinate of the polynomial x (i=1, beta=0)
    aug = [(rows[j] << 1) | (1 if j == target else 0) for j in range(dim)]
    piv_of_col = {}
    rank = 0
    for col in range(dim):
        bit = 1 << (col + 1)
        sel = None
        for j in range(rank, dim):
            if aug[j] & bit:
                sel = j
                break
        if sel is None:
            continue
        aug[rank], aug[sel] = aug[sel], aug[rank]
        for j in range(dim):
            if j != rank and aug[j] & bit:
                aug[j] ^= aug[rank]
        piv_of_col[col] = rank
        rank += 1
    coeffs = [0] * r
    for col, j in piv_of_col.items():
        if aug[j] & 1:
            coeffs[col // m] |= 1 << (col % m)
    R = Poly(field, coeffs)
    if _square_mod(R, G) != Poly.x(field) % G:
        raise ArithmeticError("square root of x failed; is G square-free?")
    return R


def poly_sqrt_mod(t, G):
    """R with R^2 = t (mod G), for square-free G and deg t < deg G.

    Split t = E(x^2) + x*O(x^2); then sqrt(t) = sqrt(E) + sqrt_x * sqrt(O)
    with coefficient-wise field square roots, reduced mod G.
    """
    field = t.field
    t = t % G
    even = Poly(field, [field.sqrt(a) for a in t.c[0::2]])
    odd = Poly(field, [field.sqrt(a) for a in t.c[1::2]])
    out = (even + _sqrt_x_mod(G) * odd) % G
    if _square_mod(out, G) != t:
        raise ArithmeticError("modular square root inconsistency")
    return out


def poly_powmod(f, e, G):
    r = Poly.one(f.field)
    f = f % G
    while e:
        if e & 1:
            r = (r * f) % G
        f = (f * f) % G
        e >>= 1
    return r


def _prime_factors(n):
    out = set()
    d = 2
    while d * d <= n:
        while n % d == 0:
            out.add(d)
            n //= d
        d += 1
    if n > 1:
        out.add(n)
    return out


def is_irreducible(G):
    """Rabin test for G over GF(2^m), q = 2^m."""
    field = G.field
    r = G.degree
    if r is NEG_INF or r < 1:
        return False
    if r == 1:
        return True
    G = G.monic()
    x = Poly.x(field)
    need = {r // p for p in _prime_factors(r)}
    t = x
    for i in range(1, r + 1):
        #  t <- t^(2^m) mod G, one Frobenius step, via m squarings
        for _ in range(field.m):
            t = _square_mod(t, G)
        if i in need:
            if poly_gcd(t + x, G).degree != 0:
                return False
        if i == r:
            return t == x % G
    return False  # unreachable


def random_monic_irreducible(field, r, stream):
    """Draw monic irreducible polynomials of degree r from a seeded stream."""
    if r < 1:
        raise ValueError("degree must be at least 1")
    while True:
        coeffs = [stream.randbelow(field.order) for _ in range(r)] + [1]
        g = Poly(field, coeffs)
        if is_irreducible(g):
            return g
