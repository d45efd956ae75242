"""Binary linear codes over GF(2).

Words are stored as Python integers: coordinate 1 (the leftmost character of
the string form) is the most significant bit, so integer order coincides with
lexicographic order of bitstrings.  Codes keep a fully reduced row-echelon
basis with pivots at the leftmost set bit of each row; that basis is canonical,
so dataclass equality and hashing are code equality.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Iterable, Iterator, Sequence

from .errors import CapacityError, InputError

MAX_LENGTH = 1024
ENUMERATION_CAP = 26  # maximum rank whose codewords may be listed


@dataclass(frozen=True, order=True)
class BitWord:
    """A word of ``Z_2^length``."""

    length: int
    bits: int

    def __post_init__(self) -> None:
        if not 0 <= self.length <= MAX_LENGTH:
            raise InputError(f"length {self.length} outside 0..{MAX_LENGTH}")
        if self.bits < 0 or self.bits >> self.length:
            raise InputError(f"bits do not fit in length {self.length}")

    @classmethod
    def from_string(cls, s: str) -> BitWord:
        s = s.strip()
        if s and set(s) - {"0", "1"}:
            raise InputError(f"not a bitstring: {s!r}")
        return cls(len(s), int(s, 2) if s else 0)

    @classmethod
    def zeros(cls, length: int) -> BitWord:
        return cls(length, 0)

    @classmethod
    def ones(cls, length: int) -> BitWord:
        return cls(length, (1 << length) - 1)

    @classmethod
    def from_support(cls, length: int, support: Iterable[int]) -> BitWord:
        """Build a word from 1-based coordinates."""
        bits = 0
        for i in support:
            if not 1 <= i <= length:
                raise InputError(f"coordinate {i} outside 1..{length}")
            bits |= 1 << (length - i)
        return cls(length, bits)

    def __str__(self) -> str:
        return format(self.bits, f"0{self.length}b") if self.length else ""

    def __repr__(self) -> str:
        return f"BitWord({str(self)!r})"

    @property
    def weight(self) -> int:
        return self.bits.bit_count()

    @property
    def support(self) -> frozenset[int]:
        """1-based coordinates carrying a one."""
        return frozenset(i for i in range(1, self.length + 1) if self[i])

    def __getitem__(self, i: int) -> int:
        if not 1 <= i <= self.length:
            raise IndexError(i)
        return (self.bits >> (self.length - i)) & 1

    def _check(self, other: BitWord) -> None:
        if self.length != other.length:
            raise InputError(f"length mismatch: {self.length} vs {other.length}")

    def __add__(self, other: BitWord) -> BitWord:
        self._check(other)
        return BitWord(self.length, self.bits ^ other.bits)

    __xor__ = __add__

    def __and__(self, other: BitWord) -> BitWord:
        self._check(other)
        return BitWord(self.length, self.bits & other.bits)

    def dot(self, other: BitWord) -> int:
        self._check(other)
        return (self.bits & other.bits).bit_count() & 1

    def concat(self, other: BitWord) -> BitWord:
        """The direct sum ``self ⊕ other`` of two words."""
        return BitWord(self.length + other.length, (self.bits << other.length) | other.bits)


def weight(w: BitWord) -> int:
    return w.weight


def support(w: BitWord) -> frozenset[int]:
    return w.support


# -- integer-level elimination -------------------------------------------------


def _insert(basis: list[int], row: int) -> int:
    """Reduce ``row`` against a fully reduced basis; append it if independent.

    Returns the reduced row (0 when dependent).  Keeps ``basis`` fully reduced.
    """
    for b in basis:
        if row >> (b.bit_length() - 1) & 1:
            row ^= b
    if row:
        p = row.bit_length() - 1
        for i, b in enumerate(basis):
            if b >> p & 1:
                basis[i] = b ^ row
        basis.append(row)
    return row


def rref(rows: Iterable[int]) -> tuple[int, ...]:
    basis: list[int] = []
    for r in rows:
        _insert(basis, r)
    return tuple(sorted(basis, reverse=True))


def _reduce(basis: Sequence[int], v: int) -> int:
    for b in basis:
        if v >> (b.bit_length() - 1) & 1:
            v ^= b
    return v


def _compress(v: int, keep: Sequence[int]) -> int:
    """Pack the bits of ``v`` at positions ``keep`` (most significant first)."""
    out = 0
    for p in keep:
        out = (out << 1) | (v >> p & 1)
    return out


def _split_by_mask(rows: Sequence[int], mask: int) -> tuple[list[int], list[int]]:
    """Row-reduce ``rows`` on the bits under ``mask``.

    Returns ``(image, kernel)``: a reduced basis of ``{r & mask}`` and a basis
    of the combinations whose masked part vanishes.
    """
    keys: list[int] = []
    fulls: list[int] = []
    kernel: list[int] = []
    for r in rows:
        k, f = r & mask, r
        for kb, fb in zip(keys, fulls):
            if k >> (kb.bit_length() - 1) & 1:
                k ^= kb
                f ^= fb
        if k:
            p = k.bit_length() - 1
            for i, kb in enumerate(keys):
                if kb >> p & 1:
                    keys[i] = kb ^ k
                    fulls[i] ^= f
            keys.append(k)
            fulls.append(f)
        else:
            _insert(kernel, f)
    return keys, kernel


# -- codes ---------------------------------------------------------------------


@dataclass(frozen=True)
class BinaryCode:
    """A linear subspace of ``Z_2^length`` held in canonical RREF."""

    length: int
    basis: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 0 <= self.length <= MAX_LENGTH:
            raise InputError(f"length {self.length} outside 0..{MAX_LENGTH}")
        if rref(self.basis) != self.basis:
            raise InputError("basis is not in canonical reduced row-echelon form")

    @property
    def rank(self) -> int:
        return len(self.basis)

    @property
    def cardinality(self) -> int:
        return 1 << self.rank

    def __len__(self) -> int:
        return self.cardinality

    @property
    def pivots(self) -> tuple[int, ...]:
        """1-based pivot coordinates, increasing."""
        return tuple(self.length - b.bit_length() + 1 for b in self.basis)

    @property
    def basis_words(self) -> tuple[BitWord, ...]:
        return tuple(BitWord(self.length, b) for b in self.basis)

    def __contains__(self, w: object) -> bool:
        if isinstance(w, BitWord):
            if w.length != self.length:
                return False
            w = w.bits
        return _reduce(self.basis, w) == 0

    def reduce(self, w: BitWord) -> BitWord:
        """Lexicographically least element of the coset ``w + C``."""
        return BitWord(self.length, _reduce(self.basis, w.bits))

    def issubcode(self, other: BinaryCode) -> bool:
        return self.length == other.length and all(b in other for b in self.basis)

    def _require_enumerable(self) -> None:
        if self.rank > ENUMERATION_CAP:
            raise CapacityError(f"rank {self.rank} exceeds enumeration cap {ENUMERATION_CAP}")

    def iter_ints(self) -> Iterator[int]:
        """All codewords as integers, in Gray-code order."""
        self._require_enumerable()
        w = 0
        yield w
        for i in range(1, self.cardinality):
            w ^= self.basis[(i & -i).bit_length() - 1]
            yield w

    def __iter__(self) -> Iterator[BitWord]:
        return (BitWord(self.length, w) for w in self.iter_ints())

    def codewords(self) -> list[BitWord]:
        """All codewords sorted lexicographically."""
        return [BitWord(self.length, w) for w in sorted(self.iter_ints())]

    def generator_strings(self) -> list[str]:
        return [str(w) for w in self.basis_words]

    def __str__(self) -> str:
        rows = ", ".join(self.generator_strings()) or "∅"
        return f"[{self.length}, {self.rank}] <{rows}>"


def make_code(length: int, generators: Iterable[BitWord | str]) -> BinaryCode:
    """The code spanned by ``generators``, in canonical form."""
    rows = []
    for g in generators:
        if isinstance(g, str):
            g = BitWord.from_string(g)
        if g.length != length:
            raise InputError(f"generator {g} has length {g.length}, expected {length}")
        rows.append(g.bits)
    return BinaryCode(length, rref(rows))


def zero_code(length: int) -> BinaryCode:
    return BinaryCode(length, ())


def full_space(length: int) -> BinaryCode:
    return BinaryCode(length, tuple(1 << p for p in reversed(range(length))))


def dual(C: BinaryCode) -> BinaryCode:
    """``C⊥`` with respect to the standard inner product."""
    n = C.length
    pivot_bits = {b.bit_length() - 1 for b in C.basis}
    rows = []
    for f in range(n):
        if f in pivot_bits:
            continue
        v = 1 << f
        for b in C.basis:
            if b >> f & 1:
                v |= 1 << (b.bit_length() - 1)
        rows.append(v)
    return BinaryCode(n, rref(rows))


def weight_enumerator(C: BinaryCode) -> list[int]:
    """``A[w]`` = number of codewords of weight ``w``, for ``w = 0..n``."""
    A = [0] * (C.length + 1)
    for w in C.iter_ints():
        A[w.bit_count()] += 1
    return A


def krawtchouk(n: int, k: int, x: int) -> int:
    return sum((-1) ** j * comb(x, j) * comb(n - x, k - j) for j in range(k + 1))


def macwilliams_dual_enumerator(C: BinaryCode) -> list[int]:
    """Weight enumerator of ``C⊥`` from that of ``C``, without listing ``C⊥``."""
    n = C.length
    A = weight_enumerator(C)
    out = []
    for k in range(n + 1):
        total = sum(a * krawtchouk(n, k, i) for i, a in enumerate(A) if a)
        q, r = divmod(total, C.cardinality)
        if r:
            raise ArithmeticError("MacWilliams transform produced a non-integer")
        out.append(q)
    return out


DIVISIBILITY = ("none", "even", "doubly-even", "triply-even")


def divisibility_class(C: BinaryCode) -> str:
    """Largest of 2, 4, 8 dividing every codeword weight."""
    g = 0
    for w in C.iter_ints():
        g |= w.bit_count() & 7
        if g & 1:
            return "none"
    if g & 2:
        return "even"
    if g & 4:
        return "doubly-even"
    return "triply-even"


def is_even(C: BinaryCode) -> bool:
    # a linear code is even iff its generators are
    return all(b.bit_count() % 2 == 0 for b in C.basis)


def is_triply_even(C: BinaryCode) -> bool:
    return divisibility_class(C) == "triply-even"


def subcode_supported_on(C: BinaryCode, beta: BitWord) -> BinaryCode:
    """``C_β``: codewords whose support lies inside ``supp(β)``."""
    if beta.length != C.length:
        raise InputError("β and C have different lengths")
    _, kernel = _split_by_mask(C.basis, ~beta.bits & ((1 << C.length) - 1))
    return BinaryCode(C.length, rref(kernel))


def puncture_off_support(C: BinaryCode, beta: BitWord) -> BinaryCode:
    """Image of ``C`` after deleting the coordinates in ``supp(β)``."""
    if beta.length != C.length:
        raise InputError("β and C have different lengths")
    n = C.length
    mask = ~beta.bits & ((1 << n) - 1)
    image, _ = _split_by_mask(C.basis, mask)
    keep = [p for p in reversed(range(n)) if mask >> p & 1]
    return BinaryCode(len(keep), rref(_compress(r, keep) for r in image))


def direct_sum(C: BinaryCode, D: BinaryCode) -> BinaryCode:
    rows = [c << D.length for c in C.basis] + list(D.basis)
    return BinaryCode(C.length + D.length, rref(rows))


def reed_muller(r: int, m: int) -> BinaryCode:
    """RM(r, m): evaluations of monomials of degree ≤ r on GF(2)^m.

    Coordinate ``j`` (1-based) evaluates at the point whose binary expansion
    is ``j - 1``.
    """
    if not 0 <= r <= m or (1 << m) > MAX_LENGTH:
        raise InputError(f"invalid Reed-Muller parameters r={r}, m={m}")
    n = 1 << m
    rows = []
    for deg in range(r + 1):
        for S in combinations(range(m), deg):
            mask = sum(1 << i for i in S)
            bits = 0
            for j in range(n):
                if j & mask == mask:
                    bits |= 1 << (n - 1 - j)
            rows.append(bits)
    code = BinaryCode(n, rref(rows))
    assert code.rank == sum(comb(m, i) for i in range(r + 1))
    return code


def build_chain(D: BinaryCode, beta: BitWord) -> list[tuple[BinaryCode, BinaryCode]]:
    """Decreasing triply even codes from ``D`` down to ``⟨(1)_n⟩``.

    Returns pairs ``(D_r, D_r⊥)`` for ``r = 1..p`` with ``D_1 = D``,
    ``D_{p-1} = ⟨β, (1)_n⟩`` and ``D_p = ⟨(1)_n⟩``; consecutive indices are 2.
    A basis of ``⟨β, (1)_n⟩`` is extended greedily by the least codeword of
    ``D`` outside the current span, and the added generators are removed in
    reverse order.
    """
    n = D.length
    one = BitWord.ones(n)
    if beta.length != n or beta not in D:
        raise InputError("β is not a codeword of D")
    if beta.bits in (0, one.bits):
        raise InputError("β must differ from (0)_n and (1)_n")
    if one not in D:
        raise InputError("D does not contain the all-one word")
    if not is_triply_even(D):
        raise InputError("D is not triply even")

    span: list[int] = []
    _insert(span, one.bits)
    _insert(span, beta.bits)
    extra: list[int] = []
    if len(span) < D.rank:
        for w in sorted(D.iter_ints()):
            if _insert(span, w):
                extra.append(w)
                if len(span) == D.rank:
                    break
    gens = [one.bits, beta.bits] + extra
    chain = []
    for k in range(len(gens), 0, -1):
        Dr = BinaryCode(n, rref(gens[:k]))
        chain.append((Dr, dual(Dr)))
    return chain
