"""Built-in codes used in examples and tests."""

from __future__ import annotations

from typing import Callable

from .codes import BinaryCode, BitWord, direct_sum, dual, make_code, reed_muller


def repetition(n: int) -> BinaryCode:
    return make_code(n, [BitWord.ones(n)])


def _case2(i: int, j: int) -> BinaryCode:
    return direct_sum(repetition(i), repetition(j))


CATALOG: dict[str, tuple[str, Callable[[], BinaryCode]]] = {
    "rep2": ("{(0,0),(1,1)}, the length-2 code of the Z4 example", lambda: repetition(2)),
    "rep8": ("<(1)_8>", lambda: repetition(8)),
    "rep16": ("<(1)_16>, the dim D = 1 case", lambda: repetition(16)),
    "rep16-dual": ("<(1)_16>⊥, all even words of length 16", lambda: dual(repetition(16))),
    "rep32": ("<(1)_32>", lambda: repetition(32)),
    "case2-8-8": ("<(1)_8> ⊕ <(1)_8>", lambda: _case2(8, 8)),
    "case2-8-8-dual": ("(<(1)_8> ⊕ <(1)_8>)⊥", lambda: dual(_case2(8, 8))),
    "case2-8-24": ("<(1)_8> ⊕ <(1)_24>", lambda: _case2(8, 24)),
    "case2-16-16": ("<(1)_16> ⊕ <(1)_16>", lambda: _case2(16, 16)),
    **{
        f"rm{r}-4": (f"Reed-Muller RM({r},4)", (lambda r=r: reed_muller(r, 4)))
        for r in range(5)
    },
    "rm1-5": ("Reed-Muller RM(1,5)", lambda: reed_muller(1, 5)),
}


def get(name: str) -> BinaryCode:
    try:
        return CATALOG[name][1]()
    except KeyError:
        raise KeyError(f"unknown catalog code {name!r}; known: {', '.join(CATALOG)}") from None
