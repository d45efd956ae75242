"""Sectors of the n-fold tensor power of the Ising net.

A sector is a label in ``{0, 1/16, 1/2}^n``.  It is stored as two disjoint
bitmasks over the coordinates (same bit convention as :mod:`codes`): ``tau``
marks the ``h1/16`` entries and ``half`` the ``h1/2`` entries.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import product
from typing import Iterable, Iterator

from .codes import BitWord
from .errors import InputError
from .ising import DyadicRootTwo, IsingLabel, SixteenthWeight, fuse, s_entry


@dataclass(frozen=True)
class Sector:
    length: int
    tau: int
    half: int

    def __post_init__(self) -> None:
        if self.tau & self.half:
            raise InputError("a coordinate cannot be both h1/16 and h1/2")
        if (self.tau | self.half) >> self.length:
            raise InputError(f"masks do not fit in length {self.length}")

    @classmethod
    def from_labels(cls, labels: Iterable[IsingLabel | int]) -> Sector:
        labels = [IsingLabel(x) for x in labels]
        tau = half = 0
        for x in labels:
            tau = (tau << 1) | (x == IsingLabel.H1_16)
            half = (half << 1) | (x == IsingLabel.H1_2)
        return cls(len(labels), tau, half)

    @classmethod
    def parse(cls, literal: str) -> Sector:
        """Parse a string over ``0``, ``s`` (1/16), ``e`` (1/2)."""
        return cls.from_labels(IsingLabel.from_char(ch) for ch in literal.strip())

    @classmethod
    def identity(cls, length: int) -> Sector:
        return cls(length, 0, 0)

    @property
    def labels(self) -> tuple[IsingLabel, ...]:
        out = []
        for p in reversed(range(self.length)):
            if self.tau >> p & 1:
                out.append(IsingLabel.H1_16)
            elif self.half >> p & 1:
                out.append(IsingLabel.H1_2)
            else:
                out.append(IsingLabel.H0)
        return tuple(out)

    def __str__(self) -> str:
        return "".join(x.char for x in self.labels)

    def __repr__(self) -> str:
        return f"Sector({str(self)!r})"

    def sort_key(self) -> tuple[IsingLabel, ...]:
        """Lexicographic order, h0 < h1/16 < h1/2, leftmost coordinate slowest."""
        return self.labels

    def __lt__(self, other: Sector) -> bool:
        return self.sort_key() < other.sort_key()

    @property
    def k(self) -> int:
        """Number of h1/16 entries."""
        return self.tau.bit_count()

    @property
    def dim(self) -> DyadicRootTwo:
        return DyadicRootTwo.sqrt2_power(self.k)

    @property
    def weight(self) -> SixteenthWeight:
        return SixteenthWeight(self.k + 8 * self.half.bit_count())

    @property
    def is_automorphism(self) -> bool:
        return self.tau == 0


def tau_word(lam: Sector) -> BitWord:
    return BitWord(lam.length, lam.tau)


def weight_and_spin(lam: Sector) -> SixteenthWeight:
    return lam.weight


def code_sector(c: BitWord) -> Sector:
    """``λ(c)``: h1/2 where ``c`` has a one, h0 elsewhere."""
    return Sector(c.length, 0, c.bits)


def act(lam: Sector, c: BitWord) -> Sector:
    """Fuse with the automorphism ``λ(c)``: swap h0/h1/2 on ``supp(c)``, fix h1/16."""
    if c.length != lam.length:
        raise InputError("length mismatch")
    return Sector(lam.length, lam.tau, lam.half ^ (c.bits & ~lam.tau))


@dataclass(frozen=True)
class SectorSum:
    """A formal sum with positive multiplicities, sorted by sector order."""

    terms: tuple[tuple[Sector, int], ...]

    @classmethod
    def from_counter(cls, counts: Counter) -> SectorSum:
        items = sorted(((s, m) for s, m in counts.items() if m), key=lambda t: t[0].sort_key())
        if any(m < 0 for _, m in items):
            raise InputError("negative multiplicity")
        return cls(tuple(items))

    def __iter__(self) -> Iterator[tuple[Sector, int]]:
        return iter(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def multiplicity(self, s: Sector) -> int:
        return dict(self.terms).get(s, 0)

    @property
    def dim(self) -> DyadicRootTwo:
        total = DyadicRootTwo(0)
        for s, m in self.terms:
            total = total + m * s.dim
        return total

    def __str__(self) -> str:
        return " ⊕ ".join(f"{m}·{s}" if m > 1 else str(s) for s, m in self.terms)


def fuse_sectors(lam: Sector, mu: Sector) -> SectorSum:
    """Componentwise fusion; every summand has multiplicity one."""
    if lam.length != mu.length:
        raise InputError("length mismatch")
    n = lam.length
    both = lam.tau & mu.tau
    # off the common h1/16 coordinates the product is determined
    tau = lam.tau ^ mu.tau
    half = (lam.half ^ mu.half) & ~tau & ~both
    free = [p for p in range(n) if both >> p & 1]
    counts: Counter = Counter()
    for choice in range(1 << len(free)):
        h = half
        for i, p in enumerate(free):
            if choice >> i & 1:
                h |= 1 << p
        counts[Sector(n, tau, h)] += 1
    return SectorSum.from_counter(counts)


def fuse_sectors_reference(lam: Sector, mu: Sector) -> SectorSum:
    """Slow path through the one-coordinate fusion table (test oracle)."""
    if lam.length != mu.length:
        raise InputError("length mismatch")
    factors = [fuse(x, y) for x, y in zip(lam.labels, mu.labels)]
    return SectorSum.from_counter(Counter(Sector.from_labels(t) for t in product(*factors)))


def tensor_s_entry(lam: Sector, mu: Sector) -> DyadicRootTwo:
    """Entry of the n-th tensor power of the Ising S-matrix."""
    if lam.length != mu.length:
        raise InputError("length mismatch")
    if lam.tau & mu.tau:
        return DyadicRootTwo(0)
    k = (lam.tau | mu.tau).bit_count()
    negative = ((lam.tau & mu.half).bit_count() + (lam.half & mu.tau).bit_count()) & 1
    value = DyadicRootTwo(1, 0, lam.length) * DyadicRootTwo.sqrt2_power(k)
    return -value if negative else value


def tensor_s_entry_reference(lam: Sector, mu: Sector) -> DyadicRootTwo:
    out = DyadicRootTwo(1)
    for x, y in zip(lam.labels, mu.labels):
        out = out * s_entry(x, y)
    return out


def all_sectors(n: int) -> Iterator[Sector]:
    """All ``3^n`` sectors in lexicographic order."""
    for labels in product(IsingLabel, repeat=n):
        yield Sector.from_labels(labels)
