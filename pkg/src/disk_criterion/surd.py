"""Exact lengths: finite sums of rational multiples of square roots.

Square roots of distinct square-free integers are linearly independent over
the rationals, so a canonical ``{squarefree: coefficient}`` map decides
equality exactly. Strict order between unequal values is decided from a
high-precision decimal evaluation of their (nonzero) difference.
"""

from decimal import Decimal, localcontext
from fractions import Fraction
from functools import cache, total_ordering

_PRECISION = 80


@cache
def _split_square(n: int) -> tuple[int, int]:
    """Write n = k^2 * m with m square-free; return (k, m)."""
    k, m = 1, n
    f = 2
    while f * f <= m:
        while m % (f * f) == 0:
            m //= f * f
            k *= f
        f += 1
    return k, m


@total_ordering
class Surd:
    """Value of the form sum(c_m * sqrt(m)) with rational c_m."""

    __slots__ = ("_terms",)

    def __init__(self, terms: dict[int, Fraction] | None = None):
        self._terms: dict[int, Fraction] = {
            m: c for m, c in (terms or {}).items() if c != 0
        }

    @classmethod
    def sqrt(cls, n: int, scale: Fraction | int = 1) -> "Surd":
        """Return scale * sqrt(n) for a nonnegative integer n."""
        if n < 0:
            raise ValueError(f"negative radicand: {n}")
        if n == 0:
            return cls()
        k, m = _split_square(n)
        return cls({m: Fraction(scale) * k})

    @classmethod
    def rational(cls, value: Fraction | int) -> "Surd":
        return cls({1: Fraction(value)})

    @property
    def terms(self) -> dict[int, Fraction]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def _decimal(self) -> Decimal:
        with localcontext() as ctx:
            ctx.prec = _PRECISION
            total = Decimal(0)
            for m, c in self._terms.items():
                root = Decimal(m).sqrt() if m != 1 else Decimal(1)
                total += Decimal(c.numerator) / Decimal(c.denominator) * root
            return total

    def sign(self) -> int:
        if not self._terms:
            return 0
        if len(self._terms) == 1:
            (c,) = self._terms.values()
            return 1 if c > 0 else -1
        value = self._decimal()
        if value == 0:
            raise ArithmeticError("precision exhausted deciding a nonzero sign")
        return 1 if value > 0 else -1

    def __add__(self, other: "Surd | int | Fraction") -> "Surd":
        other = _coerce(other)
        terms = dict(self._terms)
        for m, c in other._terms.items():
            terms[m] = terms.get(m, Fraction(0)) + c
        return Surd(terms)

    __radd__ = __add__

    def __neg__(self) -> "Surd":
        return Surd({m: -c for m, c in self._terms.items()})

    def __sub__(self, other: "Surd | int | Fraction") -> "Surd":
        return self + (-_coerce(other))

    def __rsub__(self, other: "Surd | int | Fraction") -> "Surd":
        return _coerce(other) - self

    def __mul__(self, k: int | Fraction) -> "Surd":
        return Surd({m: c * k for m, c in self._terms.items()})

    __rmul__ = __mul__

    def __abs__(self) -> "Surd":
        return -self if self.sign() < 0 else self

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int | Fraction):
            other = Surd.rational(other)
        if not isinstance(other, Surd):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __lt__(self, other: "Surd | int | Fraction") -> bool:
        return (self - _coerce(other)).sign() < 0

    def __float__(self) -> float:
        return float(self._decimal())

    def __repr__(self) -> str:
        if not self._terms:
            return "Surd(0)"
        parts = [
            f"{c}" if m == 1 else f"{c}*sqrt({m})" for m, c in sorted(self._terms.items())
        ]
        return f"Surd({' + '.join(parts)})"


def _coerce(value: "Surd | int | Fraction") -> Surd:
    if isinstance(value, Surd):
        return value
    return Surd.rational(value)
