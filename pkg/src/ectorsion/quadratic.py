"""Monic quadratics g = x^2 + px + q and the quadratic extension K_g = K[x]/(g).

Only characteristic != 2 lives here; the binary-field curve model never needs
a quadratic extension.  Elements of K_g are written c0 + c1*X where X is the
image of x, so X^2 = -p*X - q.  The conjugation iota swaps the two roots of g:
iota(c0 + c1*X) = (c0 - c1*p) - c1*X, giving

    trace(z) = z + iota(z) = 2*c0 - c1*p      (in K)
    norm(z)  = z * iota(z) = c0^2 - c0*c1*p + c1^2*q   (in K)

``ext_sqrt`` decides squareness constructively.  If rho^2 = z and
t := trace(rho) is nonzero, then t^2 = trace(z) + 2*norm(rho) and
rho = (z + norm(rho)) / t, so scanning the two candidate norms
+-sqrt(norm(z)) finds rho.  The only squares this scan misses have
trace(rho) = 0, i.e. rho = b*(X + p/2); those satisfy z = b^2*(p^2-4q)/4,
which forces z into K, and are recovered from gamma = sqrt(z/(p^2-4q)) as
rho = gamma*(2X + p).
"""

from __future__ import annotations

from typing import Optional, Tuple

from .errors import InvalidParams
from .field import Field, FieldElement

__all__ = [
    "QuadraticPoly",
    "QuadExt",
    "QuadExtElement",
    "ext_trace",
    "ext_norm",
    "ext_sqrt",
]


class QuadraticPoly:
    """g(x) = x^2 + p*x + q over a field of characteristic != 2, square-free."""

    __slots__ = ("field", "p", "q")

    def __init__(self, field: Field, p, q):
        if field.characteristic == 2:
            raise InvalidParams("quadratic-extension machinery requires characteristic != 2")
        self.field = field
        self.p = field.element(p)
        self.q = field.element(q)
        if not self.disc():
            raise InvalidParams("x^2 + p*x + q must be square-free (p^2 - 4q != 0)")

    def disc(self) -> FieldElement:
        return self.p * self.p - 4 * self.q

    def __call__(self, x):
        """Evaluate g at x; works for base-field and extension elements alike."""
        if isinstance(x, int):
            x = self.field.element(x)
        return x * x + self.p * x + self.q

    def irreducible(self) -> bool:
        return not self.disc().is_square()

    def roots(self) -> Optional[Tuple[FieldElement, FieldElement]]:
        """The two (distinct) roots in K, or None when g is irreducible."""
        s = self.disc().sqrt()
        if s is None:
            return None
        two = self.field.element(2)
        return ((-self.p + s) / two, (-self.p - s) / two)

    def __eq__(self, other):
        return (
            isinstance(other, QuadraticPoly)
            and other.field == self.field
            and other.p == self.p
            and other.q == self.q
        )

    def __hash__(self):
        return hash((self.field, self.p.value, self.q.value))

    def __repr__(self):
        fmt = self.field.format_element
        return f"x^2 + ({fmt(self.p)})*x + ({fmt(self.q)}) over {self.field.descriptor}"


class QuadExtElement:
    """c0 + c1*X in K[x]/(g), with g irreducible kept alongside the pair."""

    __slots__ = ("g", "c0", "c1")

    def __init__(self, g: QuadraticPoly, c0, c1=0):
        self.g = g
        self.c0 = g.field.element(c0)
        self.c1 = g.field.element(c1)

    def _coerce(self, other) -> Optional["QuadExtElement"]:
        if isinstance(other, QuadExtElement):
            if other.g != self.g:
                raise InvalidParams("mixing elements of different quadratic extensions")
            return other
        if isinstance(other, FieldElement):
            if other.field != self.g.field:
                raise InvalidParams("scalar from a different base field")
            return QuadExtElement(self.g, other, 0)
        if isinstance(other, int):
            return QuadExtElement(self.g, self.g.field.element(other), 0)
        return None

    def __add__(self, other):
        w = self._coerce(other)
        if w is None:
            return NotImplemented
        return QuadExtElement(self.g, self.c0 + w.c0, self.c1 + w.c1)

    __radd__ = __add__

    def __sub__(self, other):
        w = self._coerce(other)
        if w is None:
            return NotImplemented
        return QuadExtElement(self.g, self.c0 - w.c0, self.c1 - w.c1)

    def __rsub__(self, other):
        w = self._coerce(other)
        if w is None:
            return NotImplemented
        return w - self

    def __mul__(self, other):
        w = self._coerce(other)
        if w is None:
            return NotImplemented
        # (c0 + c1 X)(d0 + d1 X) with X^2 = -pX - q.
        cross = self.c1 * w.c1
        return QuadExtElement(
            self.g,
            self.c0 * w.c0 - cross * self.g.q,
            self.c0 * w.c1 + self.c1 * w.c0 - cross * self.g.p,
        )

    __rmul__ = __mul__

    def conj(self) -> "QuadExtElement":
        """The involution iota exchanging the two roots of g."""
        return QuadExtElement(self.g, self.c0 - self.c1 * self.g.p, -self.c1)

    def trace(self) -> FieldElement:
        return 2 * self.c0 - self.c1 * self.g.p

    def norm(self) -> FieldElement:
        return self.c0 * self.c0 - self.c0 * self.c1 * self.g.p + self.c1 * self.c1 * self.g.q

    def __truediv__(self, other):
        w = self._coerce(other)
        if w is None:
            return NotImplemented
        n = w.norm()
        if not n:
            raise ZeroDivisionError("division by zero in the quadratic extension")
        return self * w.conj() * QuadExtElement(self.g, n.inverse(), 0)

    def __rtruediv__(self, other):
        w = self._coerce(other)
        if w is None:
            return NotImplemented
        return w / self

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        base = self
        if n < 0:
            base = QuadExtElement(self.g, 1, 0) / base
            n = -n
        r = QuadExtElement(self.g, 1, 0)
        while n:
            if n & 1:
                r = r * base
            base = base * base
            n >>= 1
        return r

    def __neg__(self):
        return QuadExtElement(self.g, -self.c0, -self.c1)

    def __eq__(self, other):
        if isinstance(other, (QuadExtElement, FieldElement, int)):
            w = self._coerce(other)
            return self.c0 == w.c0 and self.c1 == w.c1 and self.g == w.g
        return NotImplemented

    def __hash__(self):
        return hash((self.g, self.c0.value, self.c1.value))

    def __bool__(self):
        return bool(self.c0) or bool(self.c1)

    def in_base_field(self) -> bool:
        return not self.c1

    def __repr__(self):
        fmt = self.g.field.format_element
        return f"({fmt(self.c0)}) + ({fmt(self.c1)})*X"


class QuadExt:
    """Convenience handle on K_g for an irreducible g: factory plus X itself."""

    __slots__ = ("g", "field")

    def __init__(self, g: QuadraticPoly):
        if not g.irreducible():
            raise InvalidParams("K[x]/(g) is only a field for irreducible g")
        self.g = g
        self.field = g.field

    def element(self, c0, c1=0) -> QuadExtElement:
        return QuadExtElement(self.g, c0, c1)

    def embed(self, a) -> QuadExtElement:
        return QuadExtElement(self.g, a, 0)

    @property
    def x(self) -> QuadExtElement:
        return QuadExtElement(self.g, 0, 1)

    @property
    def zero(self) -> QuadExtElement:
        return QuadExtElement(self.g, 0, 0)

    @property
    def one(self) -> QuadExtElement:
        return QuadExtElement(self.g, 1, 0)

    def __eq__(self, other):
        return isinstance(other, QuadExt) and other.g == self.g

    def __hash__(self):
        return hash(("ext", self.g))

    def __repr__(self):
        return f"K[x]/({self.g!r})"


def ext_trace(z: QuadExtElement) -> FieldElement:
    """trace(c0 + c1*X) = 2*c0 - c1*p, an element of the base field."""
    return z.trace()


def ext_norm(z: QuadExtElement) -> FieldElement:
    """norm(c0 + c1*X) = c0^2 - c0*c1*p + c1^2*q, an element of the base field."""
    return z.norm()


def ext_sqrt(z: QuadExtElement) -> Optional[QuadExtElement]:
    """A root of w^2 = z in K_g, or None when z is not a square there.

    Requires g irreducible (so K_g is a field).  Deterministic: candidate
    norms are scanned in the order +sqrt(norm(z)), -sqrt(norm(z)).
    """
    if not z.g.irreducible():
        raise InvalidParams("ext_sqrt needs an irreducible modulus")
    if not z:
        return QuadExtElement(z.g, 0, 0)
    n0 = z.norm().sqrt()
    if n0 is None:
        # norm is multiplicative, so a square z would have square norm.
        return None
    tr = z.trace()
    for n in (n0, -n0) if n0 else (n0,):
        s = (tr + 2 * n).sqrt()
        if s is not None and s:
            rho = (z + n) / s
            assert rho * rho == z
            return rho
    # Trace-zero roots rho = b*(X + p/2) square to base-field values
    # b^2*(p^2-4q)/4; recover b/2 as gamma below.  Only z in K qualifies.
    if z.in_base_field():
        gamma = (z.c0 / z.g.disc()).sqrt()
        if gamma is not None:
            rho = QuadExtElement(z.g, gamma * z.g.p, 2 * gamma)
            assert rho * rho == z
            return rho
    return None
