"""Modular data of the c = 1/2 Virasoro net, in exact arithmetic."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache, total_ordering
from typing import Union

from .errors import FramedNetError, InputError

Scalar = Union[int, "DyadicRootTwo"]


@total_ordering
@dataclass(frozen=True, init=False)
class DyadicRootTwo:
    """The number ``(a + b√2) / 2^e`` with ``a, b`` integers.

    Stored normalized: either ``e == 0`` or ``a`` and ``b`` are not both even.
    """

    a: int
    b: int
    e: int

    def __init__(self, a: int = 0, b: int = 0, e: int = 0) -> None:
        if e < 0:
            a, b, e = a << -e, b << -e, 0
        while e and not (a & 1 or b & 1):
            a >>= 1
            b >>= 1
            e -= 1
        if a == 0 and b == 0:
            e = 0
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "e", e)

    @classmethod
    def coerce(cls, x: Scalar) -> DyadicRootTwo:
        if isinstance(x, DyadicRootTwo):
            return x
        if isinstance(x, int):
            return cls(x)
        raise TypeError(f"cannot coerce {type(x).__name__} to DyadicRootTwo")

    @classmethod
    def sqrt2_power(cls, k: int) -> DyadicRootTwo:
        """``√2^k`` for any integer ``k``."""
        q, r = divmod(k, 2)
        return cls(1 - r, r, -q)

    def __add__(self, other: Scalar) -> DyadicRootTwo:
        o = DyadicRootTwo.coerce(other)
        e = max(self.e, o.e)
        return DyadicRootTwo(
            (self.a << (e - self.e)) + (o.a << (e - o.e)),
            (self.b << (e - self.e)) + (o.b << (e - o.e)),
            e,
        )

    __radd__ = __add__

    def __neg__(self) -> DyadicRootTwo:
        return DyadicRootTwo(-self.a, -self.b, self.e)

    def __sub__(self, other: Scalar) -> DyadicRootTwo:
        return self + (-DyadicRootTwo.coerce(other))

    def __rsub__(self, other: Scalar) -> DyadicRootTwo:
        return DyadicRootTwo.coerce(other) - self

    def __mul__(self, other: Scalar) -> DyadicRootTwo:
        o = DyadicRootTwo.coerce(other)
        return DyadicRootTwo(
            self.a * o.a + 2 * self.b * o.b,
            self.a * o.b + self.b * o.a,
            self.e + o.e,
        )

    __rmul__ = __mul__

    def __pow__(self, k: int) -> DyadicRootTwo:
        if k < 0:
            return self.inverse() ** -k
        out = DyadicRootTwo(1)
        for _ in range(k):
            out = out * self
        return out

    def inverse(self) -> DyadicRootTwo:
        """Inverse of ``±2^k`` or ``±√2·2^k``; anything else is refused."""
        a, b = self.a, self.b
        if b == 0 and a != 0 and abs(a) & (abs(a) - 1) == 0:
            k = abs(a).bit_length() - 1
            return DyadicRootTwo(1 if a > 0 else -1, 0, k - self.e)
        if a == 0 and b != 0 and abs(b) & (abs(b) - 1) == 0:
            # 1 / (b√2 / 2^e) = √2 · 2^e / (2b)
            k = abs(b).bit_length() - 1
            return DyadicRootTwo(0, 1 if b > 0 else -1, k + 1 - self.e)
        raise ZeroDivisionError(f"{self} is not an invertible divisor in this ring")

    def __truediv__(self, other: Scalar) -> DyadicRootTwo:
        return self * DyadicRootTwo.coerce(other).inverse()

    def conjugate(self) -> DyadicRootTwo:
        """Galois conjugate ``√2 ↦ -√2``."""
        return DyadicRootTwo(self.a, -self.b, self.e)

    def sign(self) -> int:
        a, b = self.a, self.b
        if a >= 0 and b >= 0:
            return int(a > 0 or b > 0)
        if a <= 0 and b <= 0:
            return -1
        # opposite signs: compare a^2 with 2 b^2
        s = 1 if a > 0 else -1
        return s if a * a > 2 * b * b else -s

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = DyadicRootTwo(other)
        if not isinstance(other, DyadicRootTwo):
            return NotImplemented
        return (self.a, self.b, self.e) == (other.a, other.b, other.e)

    def __hash__(self) -> int:
        return hash((self.a, self.b, self.e))

    def __lt__(self, other: Scalar) -> bool:
        return (self - other).sign() < 0

    def is_integer(self) -> bool:
        return self.b == 0 and self.e == 0

    def __int__(self) -> int:
        if not self.is_integer():
            raise ValueError(f"{self} is not an integer")
        return self.a

    def __float__(self) -> float:
        return (self.a + self.b * 2**0.5) / 2**self.e

    def triple(self) -> tuple[int, int, int]:
        return (self.a, self.b, self.e)

    def __str__(self) -> str:
        if self.b == 0:
            num = str(self.a)
        elif self.a == 0:
            num = {1: "√2", -1: "-√2"}.get(self.b, f"{self.b}√2")
        else:
            num = f"{self.a}{'+' if self.b > 0 else '-'}{abs(self.b) if abs(self.b) != 1 else ''}√2"
            num = f"({num})" if self.e else num
        return num if self.e == 0 else f"{num}/{1 << self.e}"


ZERO = DyadicRootTwo(0)
ONE = DyadicRootTwo(1)
SQRT2 = DyadicRootTwo(0, 1)
HALF = DyadicRootTwo(1, 0, 1)
HALF_SQRT2 = DyadicRootTwo(0, 1, 1)


@dataclass(frozen=True, order=True)
class SixteenthWeight:
    """A conformal weight ``numerator / 16``.

    The spin ``e^{2πih}`` depends only on ``numerator % 16``.
    """

    numerator: int

    @property
    def spin_exponent(self) -> int:
        return self.numerator % 16

    @property
    def spin_is_real(self) -> bool:
        return self.spin_exponent in (0, 8)

    @property
    def spin_sign(self) -> int | None:
        """+1 or -1 for real spins, ``None`` otherwise."""
        return {0: 1, 8: -1}.get(self.spin_exponent)

    def __add__(self, other: SixteenthWeight) -> SixteenthWeight:
        return SixteenthWeight(self.numerator + other.numerator)

    def __str__(self) -> str:
        return f"{self.numerator}/16"

    def reduced(self) -> str:
        from fractions import Fraction

        return str(Fraction(self.numerator, 16))


class IsingLabel(enum.IntEnum):
    """The three sectors, ordered h0 < h1/16 < h1/2."""

    H0 = 0
    H1_16 = 1
    H1_2 = 2

    @property
    def char(self) -> str:
        return "0se"[self]

    @classmethod
    def from_char(cls, ch: str) -> IsingLabel:
        try:
            return cls("0se".index(ch))
        except ValueError:
            raise InputError(f"unknown sector character {ch!r}") from None

    @property
    def weight(self) -> SixteenthWeight:
        return SixteenthWeight((0, 1, 8)[self])

    @property
    def dim(self) -> DyadicRootTwo:
        return (ONE, SQRT2, ONE)[self]


LABELS = tuple(IsingLabel)


def conformal_weight(x: IsingLabel) -> SixteenthWeight:
    return x.weight


def dim(x: IsingLabel) -> DyadicRootTwo:
    return x.dim


_S = (
    (HALF, HALF_SQRT2, HALF),
    (HALF_SQRT2, ZERO, -HALF_SQRT2),
    (HALF, -HALF_SQRT2, HALF),
)


def s_matrix() -> tuple[tuple[DyadicRootTwo, ...], ...]:
    """The 3×3 S-matrix in the order h0, h1/16, h1/2."""
    return _S


def s_entry(x: IsingLabel, y: IsingLabel) -> DyadicRootTwo:
    return _S[x][y]


_FUSION = {
    (IsingLabel.H1_2, IsingLabel.H1_2): (IsingLabel.H0,),
    (IsingLabel.H1_2, IsingLabel.H1_16): (IsingLabel.H1_16,),
    (IsingLabel.H1_16, IsingLabel.H1_16): (IsingLabel.H0, IsingLabel.H1_2),
}


def fuse(x: IsingLabel, y: IsingLabel) -> tuple[IsingLabel, ...]:
    """Fusion product as a sorted tuple of labels (every multiplicity is 0 or 1)."""
    x, y = IsingLabel(x), IsingLabel(y)
    if x == IsingLabel.H0:
        return (y,)
    if y == IsingLabel.H0:
        return (x,)
    return _FUSION.get((x, y)) or _FUSION[(y, x)]


def matmul(A, B):
    n = len(A)
    return tuple(
        tuple(sum((A[i][k] * B[k][j] for k in range(n)), ZERO) for j in range(len(B[0])))
        for i in range(n)
    )


def _raw_mul(x: tuple[int, int, int], y: tuple[int, int, int]) -> tuple[int, int, int]:
    # unnormalized product of (a + b√2)/2^e triples
    return (x[0] * y[0] + 2 * x[1] * y[1], x[0] * y[1] + x[1] * y[0], x[2] + y[2])


@lru_cache(maxsize=None)
def verlinde_fusion_from_s() -> tuple[tuple[tuple[int, ...], ...], ...]:
    """``N[l][m][v] = Σ_k S[l][k] S[m][k] S[v][k]* / S[0][k]``."""
    S = _S
    # S is real, so conjugation is the identity
    ratio = [[(S[l][k] / S[0][k]).triple() for k in LABELS] for l in LABELS]
    pair = [[[_raw_mul(S[m][k].triple(), S[v][k].triple()) for k in LABELS] for v in LABELS] for m in LABELS]
    N = []
    for l in LABELS:
        rows = []
        for m in LABELS:
            row = []
            for v in LABELS:
                terms = [_raw_mul(ratio[l][k], pair[m][v][k]) for k in LABELS]
                e = max(t[2] for t in terms)
                total = DyadicRootTwo(
                    sum(t[0] << (e - t[2]) for t in terms), sum(t[1] << (e - t[2]) for t in terms), e
                )
                if not total.is_integer() or int(total) < 0:
                    raise FramedNetError(f"Verlinde entry N[{l.name}][{m.name}][{v.name}] = {total}")
                row.append(int(total))
            rows.append(tuple(row))
        N.append(tuple(rows))
    return tuple(N)
