"""The seven acceptance criteria, each with its runtime budget.

Every criterion prints one ``criterion N: PASS|FAIL`` line (collected in the
terminal summary under pytest, printed directly when run as a script).
"""

from __future__ import annotations

import json
import random
import sys
import time
from collections import Counter
from fractions import Fraction
from itertools import product


from framednets.catalog import repetition
from framednets.cli import run
from framednets.codes import (
    BinaryCode,
    BitWord,
    direct_sum,
    dual,
    macwilliams_dual_enumerator,
    make_code,
    puncture_off_support,
    reed_muller,
    subcode_supported_on,
)
from framednets.extension import StructureCodes, certify_main_theorem
from framednets.induction import beta_report, full_report, lifts, lifts_by_s_matrix
from framednets.ising import LABELS, ONE, ZERO, matmul, s_matrix, verlinde_fusion_from_s
from framednets.pointed import discriminate, elements, try_modular, y_entry, PointedModularData
from framednets.sectors import Sector, tensor_s_entry

from conftest import ACCEPTANCE, dual_set, random_code, span_set, weight_enumerator_set
from test_ising import FUSION_TABLE, PRINTED_S
from test_sectors import PRINTED_9x9, PRINTED_ORDER, SYMBOL

RM1 = reed_muller(1, 4)
RM2 = reed_muller(2, 4)
CASES = 200


def record(n: int, budget: float, body) -> None:
    start = time.perf_counter()
    ok, why = True, ""
    try:
        body()
    except AssertionError as exc:
        ok, why = False, f" ({exc})" if str(exc) else ""
    elapsed = time.perf_counter() - start
    if ok and elapsed >= budget:
        ok, why = False, f" (over budget: {elapsed:.3f}s >= {budget}s)"
    line = f"criterion {n}: {'PASS' if ok else 'FAIL'} [{elapsed * 1000:.2f} ms, budget {budget * 1000:g} ms]{why}"
    ACCEPTANCE[n] = line
    print(line)
    assert ok, line


# -- 1 -----------------------------------------------------------------------------


def criterion_1() -> None:
    verlinde_fusion_from_s.cache_clear()
    S = s_matrix()
    assert [[x.triple() for x in row] for row in S] == PRINTED_S, "S differs from the printed matrix"
    I = tuple(tuple(ONE if i == j else ZERO for j in range(3)) for i in range(3))
    assert matmul(S, S) == I, "S^2 != 1"
    N = verlinde_fusion_from_s()
    for x, y, z in product(LABELS, repeat=3):
        if x <= y:
            table = FUSION_TABLE.get((x, y)) or FUSION_TABLE[(y, x)]
            assert N[x][y][z] == (z in table), f"N[{x.name}][{y.name}][{z.name}]"


def test_criterion_1_ising_modular_data():
    record(1, 0.001, criterion_1)


# -- 2 -----------------------------------------------------------------------------


def criterion_2() -> None:
    C = make_code(2, ["11"])
    rep = full_report(C)
    sectors = list(rep.sectors())
    assert len(sectors) == 4
    assert all(r.irreducible_dim_d == 1 for r in rep.beta_reports)
    weights = Counter(Fraction(c.spin.numerator, 16) for c, _ in sectors)
    assert weights == Counter([Fraction(0), Fraction(1, 8), Fraction(1, 2), Fraction(1, 8)])
    assert rep.total_mu == 4
    secs = [Sector.parse(s) for s in PRINTED_ORDER]
    for i, row in enumerate(PRINTED_9x9):
        for j, sym in enumerate(row):
            assert tensor_s_entry(secs[i], secs[j]) == SYMBOL[sym], (PRINTED_ORDER[i], PRINTED_ORDER[j])
    res = {d.orders: d.admissible for d in discriminate([0, 2, 8, 2], [(4,), (2, 2)])}
    assert res == {(4,): True, (2, 2): False}


def test_criterion_2_length_two_code():
    record(2, 1.0, criterion_2)


# -- 3 -----------------------------------------------------------------------------


def criterion_3() -> None:
    D = repetition(16)
    C = dual(D)
    assert C.rank == 15
    r = beta_report(C, BitWord.ones(16))
    assert (r.num_classes, r.split_t, r.multiplicity_m, r.irreducible_dim_d) == (1, 2, 128, 1)
    rep = full_report(C)
    assert (rep.total_sectors, rep.total_mu) == (4, 4)


def test_criterion_3_case_one():
    record(3, 2.0, criterion_3)


# -- 4 -----------------------------------------------------------------------------


def criterion_4() -> None:
    D = direct_sum(repetition(8), repetition(8))
    C = dual(D)
    assert C.rank == 14
    rep = full_report(C)
    assert rep.total_sectors == 16 == D.cardinality**2
    spins = {}
    for r in rep.beta_reports:
        signs = [c.spin.spin_sign for c in r.class_list for _ in range(r.split_t)]
        assert len(signs) == 4, str(r.beta)
        spins[str(r.beta)] = Counter(signs)
    assert spins["0" * 16] == Counter({1: 2, -1: 2})
    assert spins["1" * 8 + "0" * 8] == Counter({1: 2, -1: 2})
    assert spins["0" * 8 + "1" * 8] == Counter({1: 2, -1: 2})
    assert spins["1" * 16] == Counter({1: 4})


def test_criterion_4_case_two():
    record(4, 5.0, criterion_4)


# -- 5 -----------------------------------------------------------------------------


def criterion_5() -> None:
    # oracle first: every one of the 2^11 codewords, tested against every β
    all_words = span_set(list(RM2.basis))
    assert len(all_words) == 2**11
    oracle = {b.bits: sum(1 for c in all_words if c & ~b.bits == 0) for b in RM1}

    cert = certify_main_theorem(StructureCodes(RM2, RM1))
    assert cert.passed, f"failed at {cert.failed_stage}"
    assert cert.ly.ok and cert.structure.c_equals_d_dual
    rep = cert.report
    assert len(rep.beta_reports) == 32
    for r in rep.beta_reports:
        assert r.c_beta_size == oracle[r.beta.bits], str(r.beta)
        assert r.irreducible_dim_d == 1
    assert rep.total_sectors == 1024 == RM1.cardinality**2
    assert cert.mu == 1
    assert len(cert.delta) == 32 and all(c.is_spin_one for _, c in cert.delta.entries)
    assert len(cert.chains) == 30 and all(w.valid for w in cert.chains)


def test_criterion_5_reed_muller_certificate():
    record(5, 30.0, criterion_5)


# -- 6 -----------------------------------------------------------------------------


def _dual_involution(r: random.Random) -> None:
    for _ in range(CASES):
        n = r.randint(1, 24)
        C = random_code(r, n, r.randint(0, n))
        D = dual(C)
        assert C.rank + D.rank == n and dual(D) == C
        if n <= 12:
            assert set(D.iter_ints()) == dual_set(n, set(C.iter_ints()))


def _macwilliams(r: random.Random) -> None:
    for _ in range(CASES):
        n = r.randint(1, 20)
        C = random_code(r, n, r.randint(0, min(n, 10)))
        D = dual(C)
        assert macwilliams_dual_enumerator(C) == weight_enumerator_set(n, set(D.iter_ints()))


def _c_beta_times_puncture(r: random.Random) -> None:
    for _ in range(CASES):
        n = r.randint(1, 20)
        C = random_code(r, n, r.randint(0, min(n, 12)))
        beta = BitWord(n, r.getrandbits(n))
        cb = subcode_supported_on(C, beta)
        assert cb.cardinality * puncture_off_support(C, beta).cardinality == C.cardinality
        if C.rank <= 10:
            assert cb.cardinality == sum(1 for c in C.iter_ints() if c & ~beta.bits == 0)


def _beta_report_identities(r: random.Random) -> None:
    rm15 = reed_muller(1, 5).codewords()
    for i in range(CASES):
        if i % 2:
            D = make_code(32, [BitWord.ones(32), *r.sample(rm15, r.randint(0, 5))])
        else:
            D = make_code(16, [BitWord.ones(16), *r.sample(RM1.codewords(), r.randint(0, 4))])
        C = dual(D)
        beta = r.choice(D.codewords())
        rep = beta_report(C, beta)
        half = 2 ** (rep.weight // 2)
        assert rep.multiplicity_m**2 * rep.split_t == rep.c_beta_size
        assert rep.multiplicity_m * rep.split_t * rep.irreducible_dim_d == half


def _lifting_criteria(r: random.Random) -> None:
    for _ in range(CASES):
        n = r.randint(1, 16)
        C = random_code(r, n, r.randint(0, min(n, 6)))
        lam = Sector.from_labels(r.choice((0, 1, 2)) for _ in range(n))
        assert lifts(lam, C) == lifts_by_s_matrix(lam, C, exhaustive=True)


def _bilinearity() -> None:
    for orders in ((2,), (4,), (8,), (2, 2), (2, 4), (4, 4), (2, 2, 2), (2, 8), (4, 8), (2, 2, 2, 2)):
        elems = elements(orders)
        spins = [sum(g * g * (16 // (2 * n)) for g, n in zip(x, orders)) % 16 for x in elems]
        M = PointedModularData.from_list(orders, spins)
        for g, g2, h in product(elems, repeat=3):
            assert y_entry(M, M.add(g, g2), h) == (y_entry(M, g, h) + y_entry(M, g2, h)) % 16


def _order_two_lemma() -> None:
    for orders in ((4,), (8,), (2, 4)):
        size = len(elements(orders))
        for spins in product((0, 8), repeat=size):
            assert try_modular(orders, list(spins)) is None, (orders, spins)


def criterion_6() -> None:
    r = random.Random(20240601)
    _dual_involution(r)
    _macwilliams(r)
    _c_beta_times_puncture(r)
    _beta_report_identities(r)
    _lifting_criteria(r)
    _bilinearity()
    _order_two_lemma()


def test_criterion_6_property_suites():
    record(6, 60.0, criterion_6)


# -- 7 -----------------------------------------------------------------------------


def _weight8_subcode() -> BinaryCode:
    words = [w for w in RM1.codewords() if w.weight == 8]
    a = words[0]
    b = next(w for w in words[1:] if (a + w).weight == 8)
    return make_code(16, [a, b])


def _negative_cases() -> list[tuple[str, BinaryCode, BinaryCode, str]]:
    D_no_one = _weight8_subcode()
    return [
        ("a", RM2, RM2, "triply-even check"),
        ("b", dual(D_no_one), D_no_one, "all-one check"),
        ("c", BinaryCode(16, RM2.basis[1:]), RM1, "duality check"),
    ]


def criterion_7(tmp_dir) -> None:
    for label, C, D, stage in _negative_cases():
        cert = certify_main_theorem(StructureCodes(C, D))
        assert not cert.passed and cert.failed_stage == stage, f"({label}) got {cert.failed_stage}"
        paths = []
        for name, code in (("c", C), ("d", D)):
            p = tmp_dir / f"{label}-{name}.json"
            p.write_text(json.dumps({"length": code.length, "generators": code.generator_strings()}))
            paths.append(str(p))
        status, out = run(["verify", "--c-code", paths[0], "--d-code", paths[1], "--format", "json"])
        assert status == 1, f"({label}) exit {status}"
        assert json.loads(out)["failed_stage"] == stage


def test_criterion_7_negative_paths(tmp_path):
    record(7, 5.0, lambda: criterion_7(tmp_path))


if __name__ == "__main__":
    import tempfile
    from pathlib import Path

    failed = 0
    with tempfile.TemporaryDirectory() as tmp:
        for n, body, budget in [
            (1, criterion_1, 0.001), (2, criterion_2, 1.0), (3, criterion_3, 2.0), (4, criterion_4, 5.0),
            (5, criterion_5, 30.0), (6, criterion_6, 60.0), (7, lambda: criterion_7(Path(tmp)), 5.0),
        ]:
            try:
                record(n, budget, body)
            except AssertionError:
                failed += 1
    sys.exit(1 if failed else 0)
