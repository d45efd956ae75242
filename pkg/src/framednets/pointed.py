"""Pointed modular data: a finite abelian group with 16th-root-of-unity spins.

Everything is done on spin exponents mod 16.  ``q(g)`` is the exponent of
``ω_g``; ``Y_{gh} = ω_g ω_h / ω_{g+h}`` has exponent ``q(g) + q(h) - q(g+h)``.
Nondegeneracy of ``Y`` (trivial radical) stands in for invertibility of
``S = w^{-1/2} Y``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import permutations, product
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import DegeneracyError, InvalidModularData

Element = tuple[int, ...]


def elements(orders: Sequence[int]) -> list[Element]:
    return list(product(*(range(n) for n in orders)))


def _add(orders: Sequence[int], g: Element, h: Element) -> Element:
    return tuple((a + b) % n for a, b, n in zip(g, h, orders))


def _neg(orders: Sequence[int], g: Element) -> Element:
    return tuple(-a % n for a, n in zip(g, orders))


@dataclass(frozen=True)
class PointedModularData:
    orders: tuple[int, ...]
    spins: tuple[tuple[Element, int], ...]

    def __post_init__(self) -> None:
        elems = elements(self.orders)
        q = dict(self.spins)
        if set(q) != set(elems):
            raise InvalidModularData("spins must be given for every group element")
        if q[self.identity] % 16:
            raise InvalidModularData("the identity must have spin 1")
        for g in elems:
            if (q[g] - q[_neg(self.orders, g)]) % 16:
                raise InvalidModularData(f"ω is not even: ω{g} ≠ ω{_neg(self.orders, g)}")
        for g, g2, h in product(elems, repeat=3):
            lhs = self._b(q, _add(self.orders, g, g2), h)
            if (lhs - self._b(q, g, h) - self._b(q, g2, h)) % 16:
                raise InvalidModularData(f"spins do not define a quadratic form (at {g}, {g2}, {h})")

    def _b(self, q: Mapping[Element, int], g: Element, h: Element) -> int:
        return (q[_add(self.orders, g, h)] - q[g] - q[h]) % 16

    @classmethod
    def from_list(cls, orders: Sequence[int], spin_list: Sequence[int]) -> PointedModularData:
        """Spins listed in the order of :func:`elements`."""
        elems = elements(orders)
        if len(spin_list) != len(elems):
            raise InvalidModularData(f"expected {len(elems)} spins, got {len(spin_list)}")
        return cls(tuple(orders), tuple((g, s % 16) for g, s in zip(elems, spin_list)))

    @property
    def identity(self) -> Element:
        return tuple(0 for _ in self.orders)

    @property
    def elements(self) -> list[Element]:
        return elements(self.orders)

    @property
    def order(self) -> int:
        """Group order; equals the global dimension ``w`` since every object has dimension 1."""
        n = 1
        for k in self.orders:
            n *= k
        return n

    def spin(self, g: Element) -> int:
        return dict(self.spins)[g]

    def add(self, g: Element, h: Element) -> Element:
        return _add(self.orders, g, h)


def y_entry(M: PointedModularData, g: Element, h: Element) -> int:
    """Exponent of ``Y_{gh} = ω_g ω_h / ω_{g+h}`` as a 16th root of unity."""
    q = dict(M.spins)
    return (q[g] + q[h] - q[M.add(g, h)]) % 16


def radical(M: PointedModularData) -> list[Element]:
    return [g for g in M.elements if all(y_entry(M, g, h) == 0 for h in M.elements)]


def bicharacter_nondegenerate(M: PointedModularData) -> bool:
    return radical(M) == [M.identity]


def verlinde_self_fusion_to_identity(M: PointedModularData, g: Element) -> int:
    """``N^0_{gg} = Σ_h S_{gh} S_{gh} S*_{0h} / S_{0h} = w^{-1} Σ_h Y_{gh}^2``.

    ``h ↦ Y_{gh}^2`` is a character of the group, so the sum is ``w`` when the
    character is trivial and 0 otherwise.
    """
    return int(all((2 * y_entry(M, g, h)) % 16 == 0 for h in M.elements))


class LemmaOutcome(enum.Enum):
    HOLDS = "holds"
    VIOLATED = "violated"
    HYPOTHESIS_NOT_MET = "hypothesis not met"


def order_two_theorem(M: PointedModularData) -> LemmaOutcome:
    """With all spins ±1, every nontrivial element has order 2."""
    if not bicharacter_nondegenerate(M):
        raise DegeneracyError("spin bicharacter is degenerate")
    if any(s not in (0, 8) for _, s in M.spins):
        return LemmaOutcome.HYPOTHESIS_NOT_MET
    for g in M.elements:
        squares_to_zero = M.add(g, g) == M.identity
        # Verlinde: N^0_{gg} = 1 forces g·g = 0
        if squares_to_zero != bool(verlinde_self_fusion_to_identity(M, g)):
            return LemmaOutcome.VIOLATED
        if not squares_to_zero:
            return LemmaOutcome.VIOLATED
    return LemmaOutcome.HOLDS


def try_modular(orders: Sequence[int], spin_list: Sequence[int]) -> PointedModularData | None:
    """The datum if it is valid and nondegenerate, else ``None``."""
    try:
        M = PointedModularData.from_list(orders, spin_list)
    except InvalidModularData:
        return None
    return M if bicharacter_nondegenerate(M) else None


def spin_assignments(orders: Sequence[int], spins: Iterable[int]) -> Iterator[list[int]]:
    """Distinct ways to place a spin multiset on the group, identity first.

    The multiset must contain a 0 for the identity.
    """
    spins = sorted(s % 16 for s in spins)
    n = len(elements(orders))
    if len(spins) != n or 0 not in spins:
        return
    rest = list(spins)
    rest.remove(0)
    for perm in sorted(set(permutations(rest))):
        yield [0, *perm]


@dataclass(frozen=True)
class Discrimination:
    orders: tuple[int, ...]
    admissible: bool
    witness: PointedModularData | None
    tried: int


def discriminate(spins: Sequence[int], candidates: Iterable[Sequence[int]]) -> list[Discrimination]:
    """Which candidate groups carry the given spins as nondegenerate pointed data."""
    out = []
    for orders in candidates:
        orders = tuple(orders)
        tried = 0
        witness = None
        for assignment in spin_assignments(orders, spins):
            tried += 1
            witness = try_modular(orders, assignment)
            if witness is not None:
                break
        out.append(Discrimination(orders, witness is not None, witness, tried))
    return out
