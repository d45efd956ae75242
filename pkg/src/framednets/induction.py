"""Alpha-induction accounting for the crossed product by an even code C.

For each tau-word ``β ∈ C⊥`` the sectors ``λ`` with ``τ(λ) = β`` lift; two of
them induce the same sector iff they differ by some ``λ(c)``, ``c ∈ C``.  The
classes are therefore cosets of the punctured code, and the self-pairing of
each induced sector is ``|C_β|``.  Under the dimension-one model every
induced sector splits as ``m`` copies of ``t`` distinct automorphisms with
``m = |C_β| / 2^{wt/2}`` and ``t = 2^{wt} / |C_β|``.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator

from .codes import (
    BinaryCode,
    BitWord,
    _reduce,
    _split_by_mask,
    dual,
    is_even,
    puncture_off_support,
    subcode_supported_on,
)
from .errors import CapacityError, InputError, LiftingError, ModelInconsistency
from .ising import SixteenthWeight
from .sectors import Sector, code_sector, fuse_sectors, tensor_s_entry

CLASS_CAP = 1 << 20  # per tau-word; class lists beyond this are not materialized


@dataclass(frozen=True)
class AlphaClass:
    """One induced sector ``α_λ``, named by its least representative."""

    beta: BitWord
    rep: Sector
    spin: SixteenthWeight

    @property
    def is_spin_one(self) -> bool:
        return self.spin.spin_exponent == 0


@dataclass(frozen=True)
class BetaReport:
    beta: BitWord
    weight: int
    num_lambda: int
    c_beta_size: int
    num_classes: int
    multiplicity_m: int
    split_t: int
    irreducible_dim_d: int
    mu_contribution: int
    class_list: tuple[AlphaClass, ...] = field(repr=False)

    @property
    def num_sectors(self) -> int:
        return self.num_classes * self.split_t


@dataclass(frozen=True)
class ExtensionReport:
    code: BinaryCode
    dual: BinaryCode
    beta_reports: tuple[BetaReport, ...]
    total_sectors: int
    total_mu: int
    target_mu: int
    consistent: bool

    def sectors(self) -> Iterator[tuple[AlphaClass, int]]:
        """Every irreducible sector as ``(class, copy index)``."""
        for r in self.beta_reports:
            for cls in r.class_list:
                for i in range(r.split_t):
                    yield cls, i

    def report_for(self, beta: BitWord) -> BetaReport:
        for r in self.beta_reports:
            if r.beta == beta:
                return r
        raise KeyError(str(beta))


def _check_length(lam: Sector, C: BinaryCode) -> None:
    if lam.length != C.length:
        raise InputError(f"sector length {lam.length} differs from code length {C.length}")


def lifts(lam: Sector, C: BinaryCode) -> bool:
    """``α⁺_λ = α⁻_λ`` iff ``τ(λ)`` is orthogonal to every word of ``C``."""
    _check_length(lam, C)
    return all((lam.tau & c).bit_count() % 2 == 0 for c in C.basis)


def lifts_by_s_matrix(lam: Sector, C: BinaryCode, exhaustive: bool = False) -> bool:
    """Same criterion read off the tensor S-matrix.

    ``S[λ, λ(c)] / S[λ, 0]`` is the monodromy of ``λ`` with the simple current
    ``λ(c)``; since ``S[λ, 0] > 0`` it suffices to check signs.
    """
    _check_length(lam, C)
    words = C if exhaustive else C.basis_words
    return all(tensor_s_entry(lam, code_sector(c)).sign() > 0 for c in words)


def hom_alpha(lam: Sector, mu: Sector, C: BinaryCode) -> int:
    """``⟨α_λ, α_μ⟩ = ⟨λμ, θ⟩`` with ``θ = ⊕_{c∈C} λ(c)``."""
    _check_length(lam, C)
    _check_length(mu, C)
    if not (lifts(lam, C) and lifts(mu, C)):
        raise LiftingError("hom_alpha needs sectors whose tau-words lie in C⊥")
    if lam.tau != mu.tau:
        return 0
    mask = ~lam.tau & ((1 << C.length) - 1)
    image, kernel = _split_by_mask(C.basis, mask)
    diff = (lam.half ^ mu.half) & mask
    return 1 << len(kernel) if _reduce(image, diff) == 0 else 0


def hom_alpha_reference(lam: Sector, mu: Sector, C: BinaryCode) -> int:
    """Brute force over all of C (test oracle)."""
    prod = fuse_sectors(lam, mu)
    return sum(prod.multiplicity(code_sector(c)) for c in C)


def _require_even_containing_one(C: BinaryCode) -> None:
    if not is_even(C):
        raise InputError("C is not even")
    if BitWord.ones(C.length) not in C:
        raise InputError("C does not contain the all-one word")


def alpha_classes(C: BinaryCode, beta: BitWord) -> tuple[AlphaClass, ...]:
    """The distinct ``α_λ`` over all ``λ`` with ``τ(λ) = β``.

    Representatives are the least elements of the cosets of the code punctured
    on ``supp(β)``, i.e. the assignments supported on its non-pivot columns.
    """
    if beta.length != C.length:
        raise InputError("β and C have different lengths")
    if not is_even(C):
        raise InputError("C is not even")
    if any((beta.bits & c).bit_count() % 2 for c in C.basis):
        raise LiftingError(f"β = {beta} is not in C⊥; no sector with this tau-word lifts")
    n = C.length
    punctured = puncture_off_support(C, beta)
    # class spin is well defined only if the flips preserve weight parity
    if any(b.bit_count() % 2 for b in punctured.basis):
        raise ModelInconsistency("punctured code is not even; class spin is ill defined")
    keep = [p for p in reversed(range(n)) if not beta.bits >> p & 1]
    pivots = {punctured.length - b.bit_length() for b in punctured.basis}  # 0-based from left
    free = [keep[i] for i in range(len(keep)) if i not in pivots]
    count = 1 << len(free)
    if count > CLASS_CAP:
        raise CapacityError(f"{count} classes for β = {beta} exceeds the class cap {CLASS_CAP}")
    halves = []
    for choice in range(count):
        h = 0
        for i, p in enumerate(reversed(free)):
            if choice >> i & 1:
                h |= 1 << p
        halves.append(h)
    halves.sort()
    out = []
    for h in halves:
        rep = Sector(n, beta.bits, h)
        out.append(AlphaClass(beta, rep, rep.weight))
    return tuple(out)


def class_members(cls: AlphaClass, C: BinaryCode) -> list[Sector]:
    """All sectors inducing ``cls`` (enumerates C)."""
    return sorted({Sector(C.length, cls.rep.tau, cls.rep.half ^ (c & ~cls.rep.tau)) for c in C.iter_ints()},
                  key=Sector.sort_key)


def beta_report(C: BinaryCode, beta: BitWord, with_classes: bool = True) -> BetaReport:
    """Per-tau-word accounting under the dimension-one model."""
    _require_even_containing_one(C)
    n = C.length
    wt = beta.weight
    classes = alpha_classes(C, beta) if with_classes else ()
    if wt % 2:
        raise ModelInconsistency(f"β = {beta} has odd weight", weight=wt)
    c_beta = subcode_supported_on(C, beta).cardinality
    half_wt = 1 << (wt // 2)
    if c_beta < half_wt:
        raise ModelInconsistency(
            f"|C_β| = {c_beta} is below 2^(wt/2) = {half_wt} for β = {beta}",
            c_beta_size=c_beta, weight=wt,
        )
    m, rm = divmod(c_beta, half_wt)
    t, rt = divmod(1 << wt, c_beta)
    num_lambda = 1 << (n - wt)
    num_classes, rc = divmod(num_lambda * c_beta, C.cardinality)
    if rm or rt or rc or m < 1 or t < 1:
        raise ModelInconsistency(
            f"non-integral accounting for β = {beta}",
            c_beta_size=c_beta, multiplicity_m=m, split_t=t, weight=wt,
        )
    d = 1
    if m * m * t != c_beta or m * t * d != half_wt or d * c_beta != m * half_wt:
        raise ModelInconsistency(f"dimension-one identities fail for β = {beta}",
                                 c_beta_size=c_beta, multiplicity_m=m, split_t=t)
    if with_classes and len(classes) != num_classes:
        raise ModelInconsistency(f"class enumeration gives {len(classes)}, expected {num_classes}")
    return BetaReport(
        beta=beta,
        weight=wt,
        num_lambda=num_lambda,
        c_beta_size=c_beta,
        num_classes=num_classes,
        multiplicity_m=m,
        split_t=t,
        irreducible_dim_d=d,
        mu_contribution=num_classes * t * d * d,
        class_list=classes,
    )


def full_report(C: BinaryCode, threads: int = 1) -> ExtensionReport:
    """Run :func:`beta_report` over every ``β ∈ C⊥`` and check μ-index saturation."""
    _require_even_containing_one(C)
    D = dual(C)
    betas = D.codewords()
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            reports = tuple(pool.map(lambda b: beta_report(C, b), betas))
    else:
        reports = tuple(beta_report(C, b) for b in betas)
    total_sectors = sum(r.num_sectors for r in reports)
    total_mu = sum(r.mu_contribution for r in reports)
    target_mu = (1 << (2 * C.length)) // (C.cardinality**2)
    return ExtensionReport(
        code=C,
        dual=D,
        beta_reports=reports,
        total_sectors=total_sectors,
        total_mu=total_mu,
        target_mu=target_mu,
        consistent=total_mu == target_mu == D.cardinality**2,
    )
