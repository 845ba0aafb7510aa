"""Exact arithmetic in the degree-4 cyclotomic field Q(zeta_12).

Elements are stored as coordinates in the power basis {1, w, w^2, w^3},
where w is a primitive 12th root of unity, reduced by the minimal
polynomial w^4 = w^2 - 1.  The field contains both the primitive cube
root z = w^2 - 1 and i = w^3, so every scalar that appears anywhere in
the toolkit lives in a single canonical representation.
"""

from fractions import Fraction

__all__ = ["Cyclotomic", "ZERO", "ONE", "ZETA", "ZETA_BAR", "IMAG", "ROOT12"]

_F0 = Fraction(0)
_F1 = Fraction(1)


class Cyclotomic:
    __slots__ = ("coords",)

    def __init__(self, coords=(0, 0, 0, 0)):
        c = tuple(Fraction(x) for x in coords)
        if len(c) != 4:
            raise ValueError("need 4 coordinates")
        self.coords = c

    # -- constructors ------------------------------------------------

    @classmethod
    def rational(cls, p, q=None):
        return cls((Fraction(p) if q is None else Fraction(p, q), 0, 0, 0))

    @classmethod
    def zeta(cls):
        # z = w^4 = w^2 - 1
        return cls((-1, 0, 1, 0))

    @classmethod
    def zeta_bar(cls):
        # conjugate of z; equals z^2 = -w^2
        return cls((0, 0, -1, 0))

    @classmethod
    def imag(cls):
        return cls((0, 0, 0, 1))

    @classmethod
    def root12(cls):
        return cls((0, 1, 0, 0))

    @staticmethod
    def coerce(x):
        if isinstance(x, Cyclotomic):
            return x
        if isinstance(x, (int, Fraction)):
            return Cyclotomic((Fraction(x), 0, 0, 0))
        raise TypeError(f"cannot coerce {x!r} to Cyclotomic")

    # -- ring structure ----------------------------------------------

    def __add__(self, other):
        other = Cyclotomic.coerce(other)
        a, b = self.coords, other.coords
        return Cyclotomic((a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]))

    __radd__ = __add__

    def __neg__(self):
        a = self.coords
        return Cyclotomic((-a[0], -a[1], -a[2], -a[3]))

    def __sub__(self, other):
        return self + (-Cyclotomic.coerce(other))

    def __rsub__(self, other):
        return Cyclotomic.coerce(other) + (-self)

    def __mul__(self, other):
        other = Cyclotomic.coerce(other)
        a, b = self.coords, other.coords
        prod = [_F0] * 7
        for i in range(4):
            if a[i] == 0:
                continue
            for j in range(4):
                prod[i + j] += a[i] * b[j]
        # reduce: w^4 = w^2 - 1, w^5 = w^3 - w, w^6 = -1
        c0 = prod[0] - prod[4] - prod[6]
        c1 = prod[1] - prod[5]
        c2 = prod[2] + prod[4]
        c3 = prod[3] + prod[5]
        return Cyclotomic((c0, c1, c2, c3))

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        out = ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def galois(self, k):
        """Image under the automorphism w -> w^k, k in {1, 5, 7, 11}."""
        c0, c1, c2, c3 = self.coords
        if k == 1:
            return self
        if k == 5:
            # w -> w^3 - w, w^2 -> 1 - w^2, w^3 -> w^3
            return Cyclotomic((c0 + c2, -c1, -c2, c1 + c3))
        if k == 7:
            # w -> -w
            return Cyclotomic((c0, -c1, c2, -c3))
        if k == 11:
            # w -> w^-1 = w - w^3
            return Cyclotomic((c0 + c2, c1, -c2, -c1 - c3))
        raise ValueError("k must be coprime to 12")

    def conj(self):
        """Complex conjugation, w -> w^-1."""
        return self.galois(11)

    def inv(self):
        if not self:
            raise ZeroDivisionError("inverse of zero in Q(zeta_12)")
        # product of the other Galois conjugates; times self it is rational
        cof = self.galois(5) * self.galois(7) * self.galois(11)
        norm = (self * cof).coords
        assert norm[1] == norm[2] == norm[3] == 0
        n = norm[0]
        return Cyclotomic(tuple(c / n for c in cof.coords))

    def __truediv__(self, other):
        return self * Cyclotomic.coerce(other).inv()

    def __rtruediv__(self, other):
        return Cyclotomic.coerce(other) * self.inv()

    # -- predicates and canonical form -------------------------------

    def __bool__(self):
        return any(self.coords)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Cyclotomic.coerce(other)
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        return self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def is_rational(self):
        return self.coords[1] == 0 and self.coords[2] == 0 and self.coords[3] == 0

    def as_fraction(self):
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coords[0]

    # -- printing ----------------------------------------------------

    def qbasis(self):
        """Coordinates (q0, q1, q2, q3) in the basis {1, z, i, i*z}."""
        c0, c1, c2, c3 = self.coords
        return (c0 + c2, c2, c3, -c1)

    def __str__(self):
        parts = []
        for q, sym in zip(self.qbasis(), (None, "z", "i", "i*z")):
            if q == 0:
                continue
            if sym is None:
                body = str(abs(q))
            elif abs(q) == 1:
                body = sym
            else:
                body = f"{abs(q)}*{sym}"
            if not parts:
                parts.append(body if q > 0 else "-" + body)
            else:
                parts.append(("+ " if q > 0 else "- ") + body)
        return " ".join(parts) if parts else "0"

    def __repr__(self):
        return f"Cyclotomic({self.coords})"


ZERO = Cyclotomic()
ONE = Cyclotomic.rational(1)
ZETA = Cyclotomic.zeta()
ZETA_BAR = Cyclotomic.zeta_bar()
IMAG = Cyclotomic.imag()
ROOT12 = Cyclotomic.root12()
