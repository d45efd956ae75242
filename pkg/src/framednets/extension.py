"""Structure-code checks and the holomorphic-extension certificate."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from .codes import (
    BinaryCode,
    BitWord,
    _reduce,
    _split_by_mask,
    build_chain,
    dual,
    is_even,
    is_triply_even,
    make_code,
)
from .errors import ConstructionFailure, FramedNetError, InputError
from .induction import AlphaClass, BetaReport, ExtensionReport, alpha_classes, full_report
from .sectors import Sector


@dataclass(frozen=True)
class StructureCodes:
    c_code: BinaryCode
    d_code: BinaryCode

    def __post_init__(self) -> None:
        if self.c_code.length != self.d_code.length:
            raise InputError("C and D have different lengths")

    @classmethod
    def from_d(cls, D: BinaryCode) -> StructureCodes:
        return cls(dual(D), D)

    @property
    def length(self) -> int:
        return self.d_code.length

    @property
    def n16(self) -> int | None:
        q, r = divmod(self.length, 16)
        return q if r == 0 else None


@dataclass(frozen=True)
class LYDiagnostics:
    length_ok: bool
    triply_even: bool
    contains_all_one: bool
    n: int | None

    @property
    def ok(self) -> bool:
        return self.length_ok and self.triply_even and self.contains_all_one


@dataclass(frozen=True)
class StructureDiagnostics:
    c_even: bool
    d_triply_even: bool
    c_in_d_dual: bool
    c_equals_d_dual: bool

    @property
    def ok(self) -> bool:
        return self.c_even and self.d_triply_even and self.c_in_d_dual


def check_ly_conditions(D: BinaryCode) -> LYDiagnostics:
    n, r = divmod(D.length, 16)
    length_ok = D.length > 0 and r == 0
    return LYDiagnostics(
        length_ok=length_ok,
        triply_even=is_triply_even(D),
        contains_all_one=BitWord.ones(D.length) in D,
        n=n if length_ok else None,
    )


def check_structure_codes(S: StructureCodes) -> StructureDiagnostics:
    Dp = dual(S.d_code)
    return StructureDiagnostics(
        c_even=is_even(S.c_code),
        d_triply_even=is_triply_even(S.d_code),
        c_in_d_dual=S.c_code.issubcode(Dp),
        c_equals_d_dual=S.c_code == Dp,
    )


def holomorphic_mu(S: StructureCodes) -> Fraction:
    """``4^n / (|C| |D|)^2`` for codes of length ``n``."""
    return Fraction(4**S.length, (S.c_code.cardinality * S.d_code.cardinality) ** 2)


# -- the Δ-table -----------------------------------------------------------------


@dataclass(frozen=True)
class GeneratedEntry:
    """Candidate for ``β`` obtained by fusing the generator representatives.

    On coordinates where two generator representatives both carry h1/16 the
    h0 component is taken.
    """

    beta: BitWord
    generators: tuple[int, ...]
    alpha_class: AlphaClass
    spin_one: bool
    matches_chosen: bool


@dataclass(frozen=True)
class DeltaTable:
    entries: tuple[tuple[BitWord, AlphaClass], ...]
    generator_choices: tuple[tuple[BitWord, Sector], ...]
    generated: tuple[GeneratedEntry, ...] = field(repr=False)

    def __len__(self) -> int:
        return len(self.entries)

    def entry(self, beta: BitWord) -> AlphaClass:
        return dict(self.entries)[beta]

    @property
    def mismatches(self) -> list[BitWord]:
        return [g.beta for g in self.generated if not (g.spin_one and g.matches_chosen)]


def _fuse_reps(length: int, reps: list[Sector]) -> Sector:
    tau = half = 0
    for r in reps:
        both = tau & r.tau
        new_tau = tau ^ r.tau
        half = (half ^ r.half) & ~new_tau & ~both
        tau = new_tau
    return Sector(length, tau, half)


def build_delta(S: StructureCodes, report: ExtensionReport | None = None) -> DeltaTable:
    """Choose one spin-1, dimension-1 class for every ``β ∈ D``.

    The least spin-1 class (by representative) is taken for each word; the
    zero word gets the identity.  Generator representatives are recorded for
    the canonical basis of ``D``, and the classes their fusion lands in are
    compared against the independent choices.
    """
    C, D = S.c_code, S.d_code
    if C != dual(D):
        raise InputError("build_delta needs C = D⊥")
    if report is None:
        report = full_report(C)
    if not report.consistent:
        raise ConstructionFailure("sector accounting of C is inconsistent")
    entries = []
    for r in report.beta_reports:
        if r.irreducible_dim_d != 1:
            raise ConstructionFailure(f"β = {r.beta} has d = {r.irreducible_dim_d}")
        choice = next((c for c in r.class_list if c.is_spin_one), None)
        if choice is None:
            raise ConstructionFailure(f"no spin-1 class with tau-word {r.beta}")
        if r.beta.bits == 0 and choice.rep != Sector.identity(C.length):
            raise ConstructionFailure("identity class not selected for the zero word")
        entries.append((r.beta, choice))
    chosen = dict(entries)

    gens = D.basis_words
    gen_reps = [chosen[g].rep for g in gens]
    generated = []
    for mask in range(1 << len(gens)):
        idx = tuple(i for i in range(len(gens)) if mask >> i & 1)
        beta = BitWord(D.length, 0)
        for i in idx:
            beta = beta + gens[i]
        lam = _fuse_reps(D.length, [gen_reps[i] for i in idx])
        cls = _class_of(C, lam)
        generated.append(GeneratedEntry(beta, idx, cls, cls.is_spin_one, cls == chosen[beta]))
    generated.sort(key=lambda g: g.beta)
    return DeltaTable(
        entries=tuple(entries),
        generator_choices=tuple(zip(gens, gen_reps)),
        generated=tuple(generated),
    )


def _class_of(C: BinaryCode, lam: Sector) -> AlphaClass:
    beta = BitWord(C.length, lam.tau)
    for cls in alpha_classes(C, beta):
        # same class iff the h1/2 patterns differ by a codeword off supp(β)
        diff = (cls.rep.half ^ lam.half) & ~lam.tau
        if _in_projection(C, lam.tau, diff):
            return cls
    raise ConstructionFailure(f"sector {lam} lies in no class")


def _in_projection(C: BinaryCode, tau: int, v: int) -> bool:
    image, _ = _split_by_mask(C.basis, ~tau & ((1 << C.length) - 1))
    return _reduce(image, v) == 0


# -- chain witnesses --------------------------------------------------------------


@dataclass(frozen=True)
class ChainWitness:
    beta: BitWord
    ranks: tuple[int, ...]
    valid: bool
    problems: tuple[str, ...] = ()


def check_chain(D: BinaryCode, beta: BitWord) -> ChainWitness:
    chain = build_chain(D, beta)
    one = BitWord.ones(D.length)
    problems = []
    for r, (Dr, Cr) in enumerate(chain, start=1):
        if not is_triply_even(Dr):
            problems.append(f"D_{r} not triply even")
        if one not in Dr:
            problems.append(f"D_{r} lacks (1)_n")
        if Cr != dual(Dr):
            problems.append(f"C_{r} ≠ D_{r}⊥")
        if r < len(chain):
            Dn, Cn = chain[r]
            if not Dn.issubcode(Dr) or Dr.rank - Dn.rank != 1:
                problems.append(f"[D_{r}:D_{r + 1}] ≠ 2")
            if not Cr.issubcode(Cn):
                problems.append(f"C_{r} ⊄ C_{r + 1}")
    if chain[0][0] != D:
        problems.append("D_1 ≠ D")
    if chain[-2][0] != make_code(D.length, [beta, one]):
        problems.append("D_{p-1} ≠ ⟨β, (1)_n⟩")
    if chain[-1][0] != make_code(D.length, [one]):
        problems.append("D_p ≠ ⟨(1)_n⟩")
    return ChainWitness(beta, tuple(Dr.rank for Dr, _ in chain), not problems, tuple(problems))


# -- certificate -------------------------------------------------------------------

STAGES = (
    "length check",
    "triply-even check",
    "all-one check",
    "even check",
    "containment check",
    "duality check",
    "sector accounting",
    "holomorphic μ",
    "Δ-table",
    "chain witnesses",
)


@dataclass
class Certificate:
    passed: bool
    failed_stage: str | None
    stages: list[tuple[str, bool]]
    ly: LYDiagnostics | None = None
    structure: StructureDiagnostics | None = None
    report: ExtensionReport | None = None
    mu: Fraction | None = None
    delta: DeltaTable | None = None
    chains: list[ChainWitness] = field(default_factory=list)
    detail: dict[str, Any] = field(default_factory=dict)

    @property
    def summary(self) -> str:
        if self.passed:
            return "holomorphic, structure codes (C,D)"
        return f"failed at {self.failed_stage}"


def certify_main_theorem(S: StructureCodes, threads: int = 1) -> Certificate:
    """Run every check in order; stop at the first failing stage."""
    cert = Certificate(passed=False, failed_stage=None, stages=[])

    def record(stage: str, ok: bool, **detail: Any) -> bool:
        cert.stages.append((stage, ok))
        if detail:
            cert.detail[stage] = detail
        if not ok and cert.failed_stage is None:
            cert.failed_stage = stage
        return ok

    C, D = S.c_code, S.d_code
    ly = cert.ly = check_ly_conditions(D)
    if not (record("length check", ly.length_ok, length=D.length)
            and record("triply-even check", ly.triply_even)
            and record("all-one check", ly.contains_all_one)):
        return cert
    st = cert.structure = check_structure_codes(S)
    if not (record("even check", st.c_even)
            and record("containment check", st.c_in_d_dual)
            and record("duality check", st.c_equals_d_dual, rank_c=C.rank, rank_d_dual=D.length - D.rank)):
        return cert
    try:
        report = cert.report = full_report(C, threads=threads)
    except FramedNetError as exc:
        record("sector accounting", False, error=str(exc), **getattr(exc, "quantities", {}))
        return cert
    if not record("sector accounting", report.consistent,
                  total_mu=report.total_mu, target_mu=report.target_mu):
        return cert
    mu = cert.mu = holomorphic_mu(S)
    if not record("holomorphic μ", mu == 1, mu=str(mu)):
        return cert
    try:
        delta = cert.delta = build_delta(S, report)
    except FramedNetError as exc:
        record("Δ-table", False, error=str(exc))
        return cert
    ok = len(delta) == D.cardinality and all(c.is_spin_one for _, c in delta.entries)
    if not record("Δ-table", ok, size=len(delta), generated_mismatches=len(delta.mismatches)):
        return cert
    one = BitWord.ones(D.length)
    cert.chains = [check_chain(D, b) for b in D.codewords() if b.bits not in (0, one.bits)]
    if not record("chain witnesses", all(w.valid for w in cert.chains), count=len(cert.chains)):
        return cert
    cert.passed = True
    return cert


__all__ = [
    "BetaReport",
    "Certificate",
    "ChainWitness",
    "DeltaTable",
    "LYDiagnostics",
    "STAGES",
    "StructureCodes",
    "StructureDiagnostics",
    "build_delta",
    "certify_main_theorem",
    "check_chain",
    "check_ly_conditions",
    "check_structure_codes",
    "holomorphic_mu",
]
