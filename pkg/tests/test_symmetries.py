"""Rule appliers, exhaustive verification sweeps, and weight reduction."""

import pytest

from rectsym.powersum import WeightMismatch
from rectsym.symmetries import (
    FAMILY_OF,
    RULE_NAMES,
    Outcome,
    PreconditionViolated,
    SweepBounds,
    SweepContext,
    apply_rule,
    bench_reduction,
    check_reduction,
    coefficient_of,
    pleth_value,
    reduce_indices,
    reduce_kronecker,
    reduce_plethysm,
    reduced_value,
    tableau_ratio,
    verify_all,
    verify_rule,
)

SMALL = SweepBounds(max_weight=3, max_box=2, max_k=1, max_image_weight=12)


def test_rule_registry():
    assert len(RULE_NAMES) == 10
    assert set(FAMILY_OF) == set(RULE_NAMES)
    assert sorted(set(FAMILY_OF.values())) == ["kf", "kron", "lr", "pleth"]


def test_apply_worked_examples():
    o = apply_rule("kron-box", ((2, 2, 2), (2, 2, 2), (2, 2, 2)), l=2, m=2, n=2)
    assert isinstance(o, Outcome)
    assert o.transformed == ((2,), (2,), (2,))
    assert not o.vanishes

    o = apply_rule("lr-box", ((1,), (1,), (1, 1)), l=1, m=1, n=3)
    assert o.transformed == ((1, 1), (1, 1), (2, 1, 1))

    o = apply_rule("pleth-box-inner", ((2,), (1,), (2,)), m=1, n=3)
    assert o.transformed == ((2,), (1, 1), (2, 2))

    o = apply_rule("kf-box", ((2,), (1, 1)), k=3, n=2)
    assert o.transformed == ((3, 1), (2, 2))


def test_apply_records_params():
    o = apply_rule("lr-translate", ((1,), (1,), (1, 1)), n=2, k=1)
    assert o.rule == "lr-translate"
    assert dict(o.params) == {"n": 2, "k": 1}


def test_apply_vanishing_branch():
    # (2^5) cannot fit inside the 2 x 4 rectangle
    o = apply_rule("kron-box", ((2,) * 5, (2,) * 5, (2,) * 5), l=2, m=2, n=2)
    assert o.vanishes
    assert o.transformed is None


def test_apply_precondition_errors():
    with pytest.raises(PreconditionViolated) as info:
        apply_rule("lr-box", ((3,), (1,), (3, 1)), l=2, m=1, n=2)
    assert info.value.rule == "lr-box"

    with pytest.raises(PreconditionViolated):
        apply_rule("kf-translate", ((1,), (1,)), n=2, k=-1)

    with pytest.raises(PreconditionViolated):
        apply_rule("lr-box", ((1,), (1,), (1, 1)), l=1, m=1)  # missing n

    with pytest.raises(ValueError):
        apply_rule("no-such-rule", ((), (), ()))


def test_apply_arity_check():
    with pytest.raises(ValueError):
        apply_rule("kf-box", ((1,), (1,), (1, 1)), k=1, n=2)
    with pytest.raises(ValueError):
        apply_rule("lr-box", ((1,), (1,)), l=1, m=1, n=2)


def test_box_rules_are_involutions():
    for rule, idx, params in (
        ("lr-box", ((2, 1), (1,), (2, 1, 1)), dict(l=2, m=1, n=3)),
        ("kron-box", ((2, 1), (2, 1), (3,)), dict(l=2, m=2, n=3)),
        ("kf-box", ((2, 1), (1, 1, 1)), dict(k=2, n=3)),
    ):
        first = apply_rule(rule, idx, **params)
        assert not first.vanishes
        back = apply_rule(rule, first.transformed, **params)
        assert back.transformed == idx


def test_translations_compose_and_invert():
    start = ((1,), (1,), (1, 1))
    a = apply_rule("lr-translate", start, n=2, k=1).transformed
    b = apply_rule("lr-translate", a, n=2, k=1).transformed
    c = apply_rule("lr-translate", start, n=2, k=2).transformed
    assert b == c == ((3, 2), (1,), (3, 3))
    assert apply_rule("lr-translate", c, n=2, k=-2).transformed == start


def test_tableau_ratio():
    assert tableau_ratio((1,), 2) == 1
    assert tableau_ratio((2, 1), 3) == 8
    assert tableau_ratio((), 3) == 0
    with pytest.raises(ValueError):
        tableau_ratio((1,), 0)


def test_pleth_value_pins():
    ctx = SweepContext()
    assert pleth_value((2,), (2,), (4,), ctx) == 1
    assert pleth_value((2,), (2,), (2, 2), ctx) == 1
    assert pleth_value((2,), (2,), (3, 1), ctx) == 0
    assert pleth_value((1, 1), (1, 1), (2, 1, 1), ctx) == 1
    assert pleth_value((1, 1), (1, 1), (2, 2), ctx) == 0
    # empty-target conventions: s_lam[s_mu] has constant term only when the
    # evaluation collapses to a scalar
    assert pleth_value((), (), ()) == 1
    assert pleth_value((), (3, 1), ()) == 1
    assert pleth_value((2,), (), ()) == 1
    assert pleth_value((1, 1), (), ()) == 0


def test_coefficient_of_dispatch():
    ctx = SweepContext()
    assert coefficient_of("lr", ((1,), (1,), (2,)), ctx) == 1
    assert coefficient_of("kron", ((2,), (2,), (2,)), ctx) == 1
    assert coefficient_of("pleth", ((2,), (2,), (4,)), ctx) == 1
    kf = coefficient_of("kf", ((2, 1), (1, 1, 1)), ctx)
    assert kf.subs(1) == 2
    with pytest.raises(ValueError):
        coefficient_of("nope", ((), (), ()), ctx)


def test_verify_each_rule_small():
    ctx = SweepContext()
    for rule in RULE_NAMES:
        rep = verify_rule(rule, SMALL, ctx)
        assert rep.ok, (rule, rep.counterexamples[:3])
        assert rep.checked > 0
        assert rep.checked == rep.transformed + rep.vanished


def test_verify_vanishing_branches_covered():
    rep = verify_rule("kron-box", SMALL)
    assert rep.vanished > 0


def test_verify_parallel_matches_serial():
    serial = verify_rule("kron-box", SMALL)
    parallel = verify_rule("kron-box", SMALL, jobs=2)
    for field in ("checked", "transformed", "vanished", "skipped"):
        assert getattr(serial, field) == getattr(parallel, field)
    assert serial.counterexamples == parallel.counterexamples


def test_verify_all_shape():
    reports = verify_all(SMALL, rules=("lr-box", "kf-translate"))
    assert [rep.rule for rep in reports] == ["lr-box", "kf-translate"]
    for rep in reports:
        assert rep.ok
        d = rep.as_dict()
        assert set(d) == {
            "rule",
            "checked",
            "transformed",
            "vanished",
            "skipped",
            "counterexamples",
            "elapsed_s",
        }
        assert "elapsed_s" not in rep.as_dict(with_timing=False)


def test_reduce_kronecker_rectangles():
    r = reduce_kronecker((3,) * 8, (3,) * 8, (3,) * 8)
    assert r.reduced == ((3,), (3,), (3,))
    assert r.weight_before == 24 and r.weight_after == 3
    assert [s["op"] for s in r.chain] == ["complement"]
    assert check_reduction(r)


def test_reduce_kronecker_to_empty():
    r = reduce_kronecker((1,), (1,), (1,))
    assert r.reduced == ((), (), ())
    assert r.weight_after == 0
    assert check_reduction(r)


def test_reduce_kronecker_identity():
    r = reduce_kronecker((4, 4), (4, 4), (4, 4))
    assert r.reduced == ((4, 4), (4, 4), (4, 4))
    assert not r.chain
    assert r.weight_after == 8
    assert len(r.candidates) == 4


def test_reduce_kronecker_conjugation_pattern():
    # id boxes give 2*2*6-6 = 18; conjugating (mu, nu) gives 2*3*1-6 = 0
    r = reduce_kronecker((2, 2, 2), (2, 2, 2), (6,))
    assert r.weight_after == 0
    assert r.chain[0]["op"] == "conjugate"
    assert check_reduction(r)


def test_reduce_kronecker_mixed():
    r = reduce_kronecker((3, 1), (3, 1), (4,))
    assert r.weight_after == 2
    assert [s["op"] for s in r.chain] == ["conjugate", "complement"]
    assert r.reduced == ((2,), (1, 1), (1, 1))
    assert check_reduction(r)
    assert reduced_value(r) == 1


def test_reduce_kronecker_weight_guard():
    with pytest.raises(WeightMismatch):
        reduce_kronecker((2,), (1,), (2,))


def test_reduce_plethysm_conjugate():
    r = reduce_plethysm((2,), (2,), (3, 1))
    assert r.weight_after == 2
    assert r.chain[0] == {"op": "conjugate", "arguments": ["mu", "nu"]}
    assert r.reduced == ((2,), (1,), (1, 1))
    assert check_reduction(r)
    assert reduced_value(r) == 0


def test_reduce_plethysm_odd_inner_flips_lam():
    r = reduce_plethysm((1, 1), (1,), (1, 1))
    assert r.chain and r.chain[0]["arguments"] == ["lambda", "mu", "nu"]
    assert r.weight_after == 0
    assert check_reduction(r)


def test_reduce_plethysm_length_precheck():
    r = reduce_plethysm((1,), (1, 1), (2,))
    assert r.vanishes
    assert r.reduced is None
    assert r.chain[0]["op"] == "vanishes"
    assert pleth_value((1,), (1, 1), (2,)) == 0


def test_reduce_plethysm_identity():
    # id candidate weighs 3*3*2-6 = 12, conjugate 2*4*2-6 = 10, both >= 6
    r = reduce_plethysm((2,), (2, 1), (4, 1, 1))
    assert not r.chain
    assert r.weight_after == 6
    assert check_reduction(r)


def test_reduce_plethysm_weight_guard():
    with pytest.raises(WeightMismatch):
        reduce_plethysm((2,), (2,), (3,))


def test_reduce_indices_dispatch():
    r = reduce_indices("kronecker", ((1,), (1,), (1,)))
    assert r.family == "kronecker"
    r = reduce_indices("plethysm", ((1,), (1, 1), (2,)))
    assert r.vanishes
    with pytest.raises(ValueError):
        reduce_indices("lr", ((1,), (1,), (2,)))


def test_reduction_report_schema():
    d = reduce_kronecker((1,), (1,), (1,)).as_dict()
    assert set(d) == {
        "family",
        "original",
        "chain",
        "reduced",
        "weight_before",
        "weight_after",
        "candidates",
        "vanishes",
    }
    assert d["original"] == [[1], [1], [1]]
    assert d["reduced"] == [[], [], []]


def test_check_reduction_exhaustive_small():
    ctx = SweepContext()
    from rectsym.partitions import partitions_of

    for w in range(5):
        for lam in partitions_of(w):
            for mu in partitions_of(w):
                for nu in partitions_of(w):
                    assert check_reduction(reduce_kronecker(lam, mu, nu), ctx), (
                        lam,
                        mu,
                        nu,
                    )


def test_rectangle_family_values():
    ctx = SweepContext()
    vals = {}
    for k in range(7):
        lam = (2,) * k
        vals[k] = coefficient_of("kron", (lam, lam, lam), ctx)
    assert [vals[k] for k in range(7)] == [1, 1, 1, 1, 1, 0, 0]


def test_bench_reduction():
    b = bench_reduction("kronecker", ((3,) * 8, (3,) * 8, (3,) * 8), repeats=1)
    assert b["value"] == 1
    assert b["reduced_s"] < b["naive_s"]
    assert b["weight_before"] == 24 and b["weight_after"] == 3
