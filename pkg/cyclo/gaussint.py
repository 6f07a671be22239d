"""
Exact arithmetic over the Gaussian integers and spectral certification

Matrices carry Gaussian integers, characteristic polynomials are integer
polynomials and every decision about the location of eigenvalues is made by
exact sign computations, either over the rationals or in Q(sqrt 2). numpy is
only used by numeric_spectrum, a floating-point cross-check.
"""

import logging
import re
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Any, Iterable, List, Optional, Sequence, Tuple, Union

import numpy as np

from cyclo.exceptions import ContractViolation, ExactnessError, FormatError

logger = logging.getLogger(__name__)

Rational = Union[int, Fraction]


@dataclass(frozen=True)
class GaussInt:
    """Gaussian integer re + im*i"""
    re: int
    im: int = 0

    @classmethod
    def coerce(cls, value: Any) -> 'GaussInt':
        """
        Convert ints, integral complex numbers, strings and pairs to a GaussInt

        Args:
            value: GaussInt, int, complex, "a+bi"-style string or (re, im) pair

        Returns:
            The corresponding GaussInt

        Raises:
            FormatError: If the value has no exact Gaussian integer reading
        """
        if isinstance(value, GaussInt):
            return value
        if isinstance(value, bool):
            raise FormatError(f"Not a Gaussian integer: {value!r}")
        if isinstance(value, int):
            return cls(value, 0)
        if isinstance(value, complex):
            if value.real != int(value.real) or value.imag != int(value.imag):
                raise FormatError(f"Complex value {value!r} is not a Gaussian integer")
            return cls(int(value.real), int(value.imag))
        if isinstance(value, str):
            return cls.parse(value)
        if isinstance(value, (tuple, list)) and len(value) == 2:
            return cls(int(value[0]), int(value[1]))
        raise FormatError(f"Not a Gaussian integer: {value!r}")

    @classmethod
    def parse(cls, text: str) -> 'GaussInt':
        """Parse strings such as "0", "-1", "i", "-i", "3i", "2-5i" """
        s = text.replace(' ', '').replace('−', '-').replace('j', 'i')
        m = re.fullmatch(r'([+-]?\d+)', s)
        if m:
            return cls(int(m.group(1)), 0)
        m = re.fullmatch(r'([+-]?)(\d*)i', s)
        if m:
            magnitude = int(m.group(2)) if m.group(2) else 1
            return cls(0, -magnitude if m.group(1) == '-' else magnitude)
        m = re.fullmatch(r'([+-]?\d+)([+-])(\d*)i', s)
        if m:
            magnitude = int(m.group(3)) if m.group(3) else 1
            return cls(int(m.group(1)), -magnitude if m.group(2) == '-' else magnitude)
        raise FormatError(f"Cannot parse Gaussian integer from {text!r}")

    @classmethod
    def unit(cls, exponent: int) -> 'GaussInt':
        """Return i**exponent"""
        return UNITS[exponent % 4]

    def __add__(self, other: Any) -> 'GaussInt':
        if isinstance(other, int) and not isinstance(other, bool):
            other = GaussInt(other)
        if not isinstance(other, GaussInt):
            return NotImplemented
        return GaussInt(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other: Any) -> 'GaussInt':
        if isinstance(other, int) and not isinstance(other, bool):
            other = GaussInt(other)
        if not isinstance(other, GaussInt):
            return NotImplemented
        return GaussInt(self.re - other.re, self.im - other.im)

    def __rsub__(self, other: Any) -> 'GaussInt':
        return (-self) + other

    def __mul__(self, other: Any) -> 'GaussInt':
        if isinstance(other, int) and not isinstance(other, bool):
            return GaussInt(self.re * other, self.im * other)
        if not isinstance(other, GaussInt):
            return NotImplemented
        return GaussInt(self.re * other.re - self.im * other.im,
                        self.re * other.im + self.im * other.re)

    __rmul__ = __mul__

    def __neg__(self) -> 'GaussInt':
        return GaussInt(-self.re, -self.im)

    def __bool__(self) -> bool:
        return self.re != 0 or self.im != 0

    def conj(self) -> 'GaussInt':
        return GaussInt(self.re, -self.im)

    def norm(self) -> int:
        """Squared absolute value re^2 + im^2"""
        return self.re * self.re + self.im * self.im

    def is_unit(self) -> bool:
        return self.norm() == 1

    def unit_exponent(self) -> Optional[int]:
        """Return k with i**k == self, or None when self is not a unit"""
        return _UNIT_EXPONENTS.get((self.re, self.im))

    def __complex__(self) -> complex:
        return complex(self.re, self.im)

    def __str__(self) -> str:
        if self.im == 0:
            return str(self.re)
        if self.im == 1:
            imag = 'i'
        elif self.im == -1:
            imag = '-i'
        else:
            imag = f"{self.im}i"
        if self.re == 0:
            return imag
        sign = '' if imag.startswith('-') else '+'
        return f"{self.re}{sign}{imag}"


ZERO = GaussInt(0, 0)
ONE = GaussInt(1, 0)
I = GaussInt(0, 1)
NEG_ONE = GaussInt(-1, 0)
NEG_I = GaussInt(0, -1)
UNITS: Tuple[GaussInt, ...] = (ONE, I, NEG_ONE, NEG_I)
_UNIT_EXPONENTS = {(1, 0): 0, (0, 1): 1, (-1, 0): 2, (0, -1): 3}

# Off-diagonal alphabet of adjacency-class matrices
ADJACENCY_ALPHABET = frozenset({ZERO, ONE, NEG_ONE, I, NEG_I})


@dataclass(frozen=True)
class GaussRational:
    """Element re + im*i of the Gaussian rationals Q(i)"""
    re: Fraction
    im: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, 're', Fraction(self.re))
        object.__setattr__(self, 'im', Fraction(self.im))

    @classmethod
    def coerce(cls, value: Any) -> 'GaussRational':
        if isinstance(value, GaussRational):
            return value
        if isinstance(value, GaussInt):
            return cls(Fraction(value.re), Fraction(value.im))
        if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
            return cls(Fraction(value))
        raise FormatError(f"Not a Gaussian rational: {value!r}")

    def __add__(self, other: Any) -> 'GaussRational':
        try:
            other = GaussRational.coerce(other)
        except FormatError:
            return NotImplemented
        return GaussRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other: Any) -> 'GaussRational':
        try:
            other = GaussRational.coerce(other)
        except FormatError:
            return NotImplemented
        return GaussRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other: Any) -> 'GaussRational':
        return (-self) + other

    def __mul__(self, other: Any) -> 'GaussRational':
        try:
            other = GaussRational.coerce(other)
        except FormatError:
            return NotImplemented
        return GaussRational(self.re * other.re - self.im * other.im,
                             self.re * other.im + self.im * other.re)

    __rmul__ = __mul__

    def __truediv__(self, other: Any) -> 'GaussRational':
        other = GaussRational.coerce(other)
        denominator = other.norm()
        if denominator == 0:
            raise ZeroDivisionError("division by zero in Q(i)")
        numerator = self * other.conj()
        return GaussRational(numerator.re / denominator, numerator.im / denominator)

    def __neg__(self) -> 'GaussRational':
        return GaussRational(-self.re, -self.im)

    def __bool__(self) -> bool:
        return self.re != 0 or self.im != 0

    def __eq__(self, other: Any) -> bool:
        if isinstance(other, (GaussInt, int, Fraction)) and not isinstance(other, bool):
            other = GaussRational.coerce(other)
        if not isinstance(other, GaussRational):
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self) -> int:
        return hash((self.re, self.im))

    def conj(self) -> 'GaussRational':
        return GaussRational(self.re, -self.im)

    def norm(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def is_integral(self) -> bool:
        return self.re.denominator == 1 and self.im.denominator == 1

    def to_gauss_int(self) -> GaussInt:
        if not self.is_integral():
            raise ExactnessError(f"{self} is not a Gaussian integer")
        return GaussInt(int(self.re), int(self.im))

    def __str__(self) -> str:
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            return f"{self.im}i"
        sign = '-' if self.im < 0 else '+'
        return f"{self.re}{sign}{abs(self.im)}i"


@dataclass(frozen=True)
class QuadRational:
    """Element a + b*sqrt(2) of Q(sqrt 2) with exact sign and ordering"""
    a: Fraction
    b: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, 'a', Fraction(self.a))
        object.__setattr__(self, 'b', Fraction(self.b))

    @classmethod
    def coerce(cls, value: Any) -> 'QuadRational':
        if isinstance(value, QuadRational):
            return value
        if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
            return cls(Fraction(value))
        raise FormatError(f"Not an element of Q(sqrt 2): {value!r}")

    def __add__(self, other: Any) -> 'QuadRational':
        other = QuadRational.coerce(other)
        return QuadRational(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __sub__(self, other: Any) -> 'QuadRational':
        other = QuadRational.coerce(other)
        return QuadRational(self.a - other.a, self.b - other.b)

    def __rsub__(self, other: Any) -> 'QuadRational':
        return (-self) + other

    def __mul__(self, other: Any) -> 'QuadRational':
        other = QuadRational.coerce(other)
        return QuadRational(self.a * other.a + 2 * self.b * other.b,
                            self.a * other.b + self.b * other.a)

    __rmul__ = __mul__

    def __neg__(self) -> 'QuadRational':
        return QuadRational(-self.a, -self.b)

    def sign(self) -> int:
        """Exact sign: compare a^2 with 2b^2 when a and b disagree in sign"""
        sa = (self.a > 0) - (self.a < 0)
        sb = (self.b > 0) - (self.b < 0)
        if sb == 0:
            return sa
        if sa == 0 or sa == sb:
            return sb
        return sa if self.a * self.a > 2 * self.b * self.b else sb

    def __lt__(self, other: Any) -> bool:
        return (self - other).sign() < 0

    def __le__(self, other: Any) -> bool:
        return (self - other).sign() <= 0

    def __gt__(self, other: Any) -> bool:
        return (self - other).sign() > 0

    def __ge__(self, other: Any) -> bool:
        return (self - other).sign() >= 0

    def __float__(self) -> float:
        return float(self.a) + float(self.b) * 2 ** 0.5

    def __str__(self) -> str:
        if self.b == 0:
            return str(self.a)
        root = 'sqrt2' if abs(self.b) == 1 else f"{abs(self.b)}*sqrt2"
        if self.a == 0:
            return f"-{root}" if self.b < 0 else root
        return f"{self.a}{'-' if self.b < 0 else '+'}{root}"


SQRT2 = QuadRational(Fraction(0), Fraction(1))
NEG_SQRT2 = -SQRT2


class RadiusClass(Enum):
    """Position of the spectral radius relative to 2"""
    LESS_THAN_2 = "LessThan2"
    EXACTLY_2 = "Exactly2"
    GREATER_THAN_2 = "GreaterThan2"


@dataclass(frozen=True)
class HermMatrix:
    """Hermitian matrix over the Gaussian integers"""
    n: int
    entries: Tuple[Tuple[GaussInt, ...], ...]

    def __post_init__(self):
        if len(self.entries) != self.n or any(len(row) != self.n for row in self.entries):
            raise ContractViolation(f"Matrix is not {self.n}x{self.n}")
        for x in range(self.n):
            for y in range(x, self.n):
                if self.entries[y][x] != self.entries[x][y].conj():
                    raise ContractViolation(
                        f"Matrix is not Hermitian: entry ({x},{y}) = {self.entries[x][y]} "
                        f"but entry ({y},{x}) = {self.entries[y][x]}"
                    )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Any]]) -> 'HermMatrix':
        """Build a matrix from rows of ints, complex numbers, strings or GaussInts"""
        entries = tuple(tuple(GaussInt.coerce(value) for value in row) for row in rows)
        return cls(len(entries), entries)

    @classmethod
    def zero(cls, n: int) -> 'HermMatrix':
        return cls(n, tuple(tuple(ZERO for _ in range(n)) for _ in range(n)))

    def __getitem__(self, key: Tuple[int, int]) -> GaussInt:
        x, y = key
        return self.entries[x][y]

    def rows(self) -> List[List[GaussInt]]:
        return [list(row) for row in self.entries]

    def conj(self) -> 'HermMatrix':
        """Entrywise conjugate (the matrix of the converse)"""
        return HermMatrix(self.n, tuple(tuple(e.conj() for e in row) for row in self.entries))

    def __neg__(self) -> 'HermMatrix':
        return HermMatrix(self.n, tuple(tuple(-e for e in row) for row in self.entries))

    def principal(self, indices: Sequence[int]) -> 'HermMatrix':
        """Principal submatrix on the given rows/columns, in the given order"""
        idx = list(indices)
        for x in idx:
            if not 0 <= x < self.n:
                raise ContractViolation(f"Index {x} out of range for a {self.n}x{self.n} matrix")
        return HermMatrix(len(idx), tuple(tuple(self.entries[x][y] for y in idx) for x in idx))

    def offending_entry(self) -> Optional[Tuple[int, int, GaussInt]]:
        """First entry that breaks the adjacency-class shape, if any"""
        for x in range(self.n):
            if self.entries[x][x]:
                return x, x, self.entries[x][x]
            for y in range(x + 1, self.n):
                if self.entries[x][y] not in ADJACENCY_ALPHABET:
                    return x, y, self.entries[x][y]
        return None

    def is_adjacency_class(self) -> bool:
        """Zero diagonal and off-diagonal entries in {0, 1, -1, i, -i}"""
        return self.offending_entry() is None

    def underlying_edges(self) -> List[Tuple[int, int]]:
        return [(x, y) for x in range(self.n) for y in range(x + 1, self.n) if self.entries[x][y]]

    def to_numpy(self) -> np.ndarray:
        return np.array([[complex(e) for e in row] for row in self.entries], dtype=complex).reshape(self.n, self.n)

    @cached_property
    def _parts(self) -> Tuple[Tuple[Tuple[int, ...], ...], Tuple[Tuple[int, ...], ...]]:
        return (tuple(tuple(e.re for e in row) for row in self.entries),
                tuple(tuple(e.im for e in row) for row in self.entries))

    def __str__(self) -> str:
        width = max([len(str(e)) for row in self.entries for e in row] + [1])
        return '\n'.join(' '.join(str(e).rjust(width) for e in row) for row in self.entries)


@dataclass(frozen=True)
class IntPoly:
    """Monic integer polynomial; coefficients are stored constant term first"""
    coefficients: Tuple[int, ...]

    def __post_init__(self):
        if not self.coefficients or self.coefficients[-1] != 1:
            raise ContractViolation(f"IntPoly must be monic, got coefficients {self.coefficients}")

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __call__(self, x: Any) -> Any:
        if isinstance(x, QuadRational):
            return _eval_quad(self.coefficients, x)
        acc = 0
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc

    def __mul__(self, other: 'IntPoly') -> 'IntPoly':
        return IntPoly(tuple(int(c) for c in _poly_mul(self.coefficients, other.coefficients)))

    def derivative(self) -> Tuple[int, ...]:
        return tuple(k * c for k, c in enumerate(self.coefficients))[1:]

    def reflect(self) -> 'IntPoly':
        """(-1)^n p(-x): the characteristic polynomial of -H when self is that of H"""
        n = self.degree
        return IntPoly(tuple(c * (-1) ** ((n - k) % 2) for k, c in enumerate(self.coefficients)))

    def to_json(self) -> List[str]:
        return [str(c) for c in self.coefficients]

    @classmethod
    def from_json(cls, items: Sequence[Union[str, int]]) -> 'IntPoly':
        try:
            return cls(tuple(int(item) for item in items))
        except (TypeError, ValueError) as e:
            raise FormatError(f"Invalid polynomial coefficients {items!r}: {e}")

    def __str__(self) -> str:
        terms = []
        for k in range(self.degree, -1, -1):
            c = self.coefficients[k]
            if c == 0:
                continue
            sign = '-' if c < 0 else '+'
            magnitude = abs(c)
            if k == 0:
                body = str(magnitude)
            else:
                power = 'x' if k == 1 else f"x^{k}"
                body = power if magnitude == 1 else f"{magnitude}{power}"
            terms.append((sign, body))
        if not terms:
            return '0'
        first_sign, first_body = terms[0]
        text = ('-' if first_sign == '-' else '') + first_body
        for sign, body in terms[1:]:
            text += f" {sign} {body}"
        return text


# -- polynomial helpers on coefficient lists (constant term first) -----------

def _trim(p: List[Fraction]) -> List[Fraction]:
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_mul(p: Sequence[Rational], q: Sequence[Rational]) -> List[Rational]:
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return out


def _poly_divmod(p: Sequence[Rational], q: Sequence[Rational]) -> Tuple[List[Fraction], List[Fraction]]:
    remainder = _trim([Fraction(c) for c in p])
    divisor = _trim([Fraction(c) for c in q])
    if not divisor:
        raise ZeroDivisionError("polynomial division by zero")
    quotient = [Fraction(0)] * max(len(remainder) - len(divisor) + 1, 1)
    lead = divisor[-1]
    while len(remainder) >= len(divisor) and remainder:
        shift = len(remainder) - len(divisor)
        factor = remainder[-1] / lead
        quotient[shift] = factor
        for k, c in enumerate(divisor):
            remainder[shift + k] -= factor * c
        remainder.pop()
        _trim(remainder)
    return _trim(quotient), remainder


def _poly_gcd(p: Sequence[Rational], q: Sequence[Rational]) -> List[Fraction]:
    a = _trim([Fraction(c) for c in p])
    b = _trim([Fraction(c) for c in q])
    while b:
        a, b = b, _poly_divmod(a, b)[1]
    if not a:
        return a
    lead = a[-1]
    return [c / lead for c in a]


def _derivative(p: Sequence[Rational]) -> List[Fraction]:
    return [Fraction(k * c) for k, c in enumerate(p)][1:]


def _sign(value: Rational) -> int:
    return (value > 0) - (value < 0)


def _eval_quad(coefficients: Sequence[Rational], x: QuadRational) -> QuadRational:
    a, b = Fraction(0), Fraction(0)
    xa, xb = x.a, x.b
    for c in reversed(coefficients):
        a, b = a * xa + 2 * b * xb + c, a * xb + b * xa
    return QuadRational(a, b)


def _sign_at(coefficients: Sequence[Rational], x: QuadRational) -> int:
    if x.b == 0:
        acc = Fraction(0)
        for c in reversed(coefficients):
            acc = acc * x.a + c
        return _sign(acc)
    return _eval_quad(coefficients, x).sign()


def _squarefree_part(coefficients: Tuple[int, ...]) -> List[Fraction]:
    p = [Fraction(c) for c in coefficients]
    g = _poly_gcd(p, _derivative(p))
    if len(g) <= 1:
        return p
    return _poly_divmod(p, g)[0]


@lru_cache(maxsize=16384)
def _sturm_chain(coefficients: Tuple[int, ...]) -> Tuple[Tuple[Fraction, ...], ...]:
    """Sturm chain of the square-free part of the polynomial"""
    q = _squarefree_part(coefficients)
    chain = [q, _derivative(q)]
    while chain[-1] and len(chain[-1]) > 1:
        remainder = _poly_divmod(chain[-2], chain[-1])[1]
        if not remainder:
            break
        chain.append([-c for c in remainder])
    return tuple(tuple(p) for p in chain if p)


def _variations(signs: Iterable[int]) -> int:
    count, last = 0, 0
    for s in signs:
        if s == 0:
            continue
        if last and s != last:
            count += 1
        last = s
    return count


def _variations_at(chain: Tuple[Tuple[Fraction, ...], ...], x: Optional[QuadRational], at_plus_infinity: bool) -> int:
    if x is None:
        if at_plus_infinity:
            return _variations(_sign(p[-1]) for p in chain)
        return _variations(_sign(p[-1]) * (-1) ** ((len(p) - 1) % 2) for p in chain)
    return _variations(_sign_at(p, x) for p in chain)


Bound = Union[None, int, Fraction, QuadRational]


def _as_bound(value: Bound) -> Optional[QuadRational]:
    if value is None:
        return None
    return QuadRational.coerce(value)


def count_roots_in(p: IntPoly, lo: Bound = None, hi: Bound = None,
                   closed: Tuple[bool, bool] = (True, True)) -> int:
    """
    Count the distinct real roots of p in an interval

    Endpoints are elements of Q(sqrt 2); None stands for -infinity (lo) or
    +infinity (hi). The count is exact: Sturm chain signs are evaluated in
    Q(sqrt 2) with exact sign determination.

    Args:
        p: Monic integer polynomial
        lo: Lower endpoint, or None for -infinity
        hi: Upper endpoint, or None for +infinity
        closed: Whether (lo, hi) are included in the interval

    Returns:
        Number of distinct real roots in the interval

    Raises:
        ContractViolation: If lo > hi
    """
    return _count_roots_cached(p.coefficients, _as_bound(lo), _as_bound(hi), tuple(closed))


@lru_cache(maxsize=65536)
def _count_roots_cached(coefficients: Tuple[int, ...], lo: Optional[QuadRational],
                        hi: Optional[QuadRational], closed: Tuple[bool, bool]) -> int:
    if len(coefficients) == 1:
        return 0
    chain = _sturm_chain(coefficients)
    squarefree = chain[0]
    if lo is not None and hi is not None:
        if hi < lo:
            raise ContractViolation(f"Empty interval: lo={lo} > hi={hi}")
        if (hi - lo).sign() == 0:
            return int(closed[0] and closed[1] and _sign_at(squarefree, lo) == 0)
    # V(lo) - V(hi) counts the roots in the half-open interval (lo, hi]
    count = _variations_at(chain, lo, False) - _variations_at(chain, hi, True)
    if lo is not None and closed[0] and _sign_at(squarefree, lo) == 0:
        count += 1
    if hi is not None and not closed[1] and _sign_at(squarefree, hi) == 0:
        count -= 1
    return count


def squarefree_decomposition(p: IntPoly) -> List[Tuple[IntPoly, int]]:
    """
    Split p into square-free factors with multiplicities (Yun's algorithm)

    Returns:
        List of (factor, multiplicity); the product of factor**multiplicity is p
    """
    f = [Fraction(c) for c in p.coefficients]
    if len(f) == 1:
        return []
    a = _poly_gcd(f, _derivative(f))
    b = _poly_divmod(f, a)[0]
    c = _poly_divmod(_derivative(f), a)[0]
    d = _trim([x - y for x, y in _zip_longest(c, _derivative(b))])
    factors: List[Tuple[IntPoly, int]] = []
    multiplicity = 1
    while len(b) > 1:
        a = _poly_gcd(b, d) if d else list(b)
        if len(a) > 1:
            factors.append((_to_int_poly(a), multiplicity))
        b = _poly_divmod(b, a)[0]
        c = _poly_divmod(d, a)[0] if d else []
        d = _trim([x - y for x, y in _zip_longest(c, _derivative(b))])
        multiplicity += 1
    return factors


def _zip_longest(p: Sequence[Fraction], q: Sequence[Fraction]) -> List[Tuple[Fraction, Fraction]]:
    size = max(len(p), len(q))
    return [(p[k] if k < len(p) else Fraction(0), q[k] if k < len(q) else Fraction(0)) for k in range(size)]


def _to_int_poly(coefficients: Sequence[Fraction]) -> IntPoly:
    lead = coefficients[-1]
    monic = [c / lead for c in coefficients]
    if any(c.denominator != 1 for c in monic):
        raise ExactnessError(f"Factor {monic} of an integer characteristic polynomial is not integral")
    return IntPoly(tuple(int(c) for c in monic))


def char_poly(H: HermMatrix) -> IntPoly:
    """
    Characteristic polynomial det(xI - H), computed exactly

    Uses the Faddeev-LeVerrier recurrence over Z[i]: every division is by the
    step index k and must be exact, and every trace must be real.

    Raises:
        ExactnessError: If a trace is non-real or a division is not exact
    """
    n = H.n
    if n == 0:
        return IntPoly((1,))
    ar, ai = H._parts
    nonzero = [[(j, ar[r][j], ai[r][j]) for j in range(n) if ar[r][j] or ai[r][j]] for r in range(n)]
    coefficients = [0] * (n + 1)
    coefficients[n] = 1
    mr = [[int(r == c) for c in range(n)] for r in range(n)]
    mi = [[0] * n for _ in range(n)]
    for k in range(1, n + 1):
        pr = [[0] * n for _ in range(n)]
        pi = [[0] * n for _ in range(n)]
        for r in range(n):
            row_r, row_i = pr[r], pi[r]
            for j, hr, hi in nonzero[r]:
                mrj, mij = mr[j], mi[j]
                for c in range(n):
                    xr, xi = mrj[c], mij[c]
                    if xr or xi:
                        row_r[c] += hr * xr - hi * xi
                        row_i[c] += hr * xi + hi * xr
        trace_re = sum(pr[j][j] for j in range(n))
        trace_im = sum(pi[j][j] for j in range(n))
        if trace_im != 0:
            raise ExactnessError(f"Non-real trace {trace_re}+{trace_im}i at step {k}")
        if trace_re % k:
            raise ExactnessError(f"Trace {trace_re} not divisible by {k}")
        coefficient = -(trace_re // k)
        coefficients[n - k] = coefficient
        if k < n:
            for j in range(n):
                pr[j][j] += coefficient
            mr, mi = pr, pi
    return IntPoly(tuple(coefficients))


def _taylor_shift(coefficients: Sequence[int], c: int) -> List[int]:
    """Coefficients of p(x + c)"""
    a = list(coefficients)
    n = len(a) - 1
    for i in range(n):
        for j in range(n - 1, i - 1, -1):
            a[j] += c * a[j + 1]
    return a


def _positive_root_count(coefficients: Sequence[int]) -> int:
    # Descartes' rule is exact for real-rooted polynomials
    trailing = 0
    while trailing < len(coefficients) and coefficients[trailing] == 0:
        trailing += 1
    return _variations(_sign(c) for c in coefficients[trailing:])


@lru_cache(maxsize=65536)
def _radius_class_of(coefficients: Tuple[int, ...]) -> RadiusClass:
    above = _positive_root_count(_taylor_shift(coefficients, 2))
    reflected = [c * (-1) ** (k % 2) for k, c in enumerate(coefficients)]
    below = _positive_root_count(_taylor_shift(reflected, 2))
    if above or below:
        return RadiusClass.GREATER_THAN_2
    p = IntPoly(coefficients)
    if p(2) == 0 or p(-2) == 0:
        return RadiusClass.EXACTLY_2
    return RadiusClass.LESS_THAN_2


def radius_class(H: HermMatrix) -> RadiusClass:
    """
    Classify the spectral radius of H against 2, exactly

    Characteristic polynomials of Hermitian matrices are real-rooted, so
    Descartes' sign count on p(x + 2) and p(-x - 2) gives the exact number
    of eigenvalues beyond 2 and below -2.
    """
    return _radius_class_of(char_poly(H).coefficients)


def polynomial_radius_class(p: IntPoly) -> RadiusClass:
    """radius_class for an already computed real-rooted characteristic polynomial"""
    return _radius_class_of(p.coefficients)


def min_eigen_exceeds(H: HermMatrix, bound: Bound = NEG_SQRT2) -> bool:
    """True iff every eigenvalue of H is strictly greater than bound"""
    return count_roots_in(char_poly(H), None, bound, closed=(True, True)) == 0


def rank_over_gaussian_rationals(rows: Sequence[Sequence[Any]]) -> int:
    """Rank of a matrix with Gaussian rational entries, by exact elimination"""
    matrix = [[GaussRational.coerce(e) for e in row] for row in rows]
    if not matrix:
        return 0
    n_rows, n_cols = len(matrix), len(matrix[0])
    rank = 0
    for col in range(n_cols):
        pivot = next((r for r in range(rank, n_rows) if matrix[r][col]), None)
        if pivot is None:
            continue
        matrix[rank], matrix[pivot] = matrix[pivot], matrix[rank]
        lead = matrix[rank][col]
        for r in range(n_rows):
            if r != rank and matrix[r][col]:
                factor = matrix[r][col] / lead
                matrix[r] = [a - factor * b for a, b in zip(matrix[r], matrix[rank])]
        rank += 1
        if rank == n_rows:
            break
    return rank


def displaced_rank(H: HermMatrix) -> int:
    """
    Rank of 2I - H over the Gaussian rationals

    This is the rank of the Gaussian lattice generated by root vectors whose
    displaced Gram matrix is -H. When the spectral radius exceeds 2 the rank
    is still returned, with a warning, since 2I - H is then not positive
    semidefinite.
    """
    if radius_class(H) is RadiusClass.GREATER_THAN_2:
        logger.warning("displaced_rank called on a matrix with spectral radius > 2")
    two = GaussInt(2)
    rows = [[(two if x == y else ZERO) - H[x, y] for y in range(H.n)] for x in range(H.n)]
    return rank_over_gaussian_rationals(rows)


def numeric_spectrum(H: HermMatrix) -> np.ndarray:
    """Floating-point eigenvalues (ascending); a cross-check, never a certificate"""
    if H.n == 0:
        return np.zeros(0)
    return np.linalg.eigvalsh(H.to_numpy())
