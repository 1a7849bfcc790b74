"""Smoke tests for the python bindings: a quick pass over every exposed layer."""

import math

import pytest

import qvote


def strict_abc():
    return qvote.enumerate_basis(qvote.CandidateSet(["a", "b", "c"]), qvote.BasisMode.STRICT)


def test_basis_dimensions():
    cands = qvote.CandidateSet(["a", "b", "c"])
    assert qvote.enumerate_basis(cands, qvote.BasisMode.STRICT).dim == 6
    assert qvote.enumerate_basis(cands, qvote.BasisMode.WEAK).dim == 13
    four = qvote.CandidateSet(["a", "b", "c", "d"])
    assert qvote.enumerate_basis(four, qvote.BasisMode.WEAK).dim == 75


def test_order_round_trip_and_reversal():
    cands = qvote.CandidateSet(["a", "b", "c", "d"])
    order = qvote.parse_order("c>b=a>d", cands)
    assert qvote.format_order(order, cands) == "c>a=b>d"
    assert qvote.format_order(qvote.reverse_order(order), cands) == "d>a=b>c"


def test_qmr_basis_term_one_third_mixture():
    cands = qvote.CandidateSet(["a", "b", "c", "d"])
    basis = qvote.enumerate_basis(cands, qvote.BasisMode.STRICT)
    rho = qvote.qmr_basis_term(
        [basis.index_of_text("b>a>c>d"), basis.index_of_text("a>c>b>d")], basis
    )
    diag = rho.diagonal()
    for text in ("a>b>c>d", "b>a>c>d", "a>c>b>d"):
        assert diag[basis.index_of_text(text)] == pytest.approx(1 / 3, abs=1e-12)


def test_qmr_cyclic_profile_is_uniform():
    basis = strict_abc()
    voters = [
        qvote.StateVector.basis_state(basis.index_of_text(t), basis.dim)
        for t in ("a>b>c", "c>a>b", "b>c>a")
    ]
    outcome = qvote.qmr(qvote.Profile.product(basis, voters))
    for p in outcome.distribution:
        assert p == pytest.approx(1 / 6, abs=1e-12)


def test_qmr2_interference():
    basis = strict_abc()
    r = 1 / math.sqrt(2)
    profile = qvote.build_product_profile(
        [
            [("a>b>c", 1.0)],
            [("b>a>c", r), ("a>c>b", r)],
            [("b>a>c", -r), ("c>b>a", r)],
        ],
        basis,
    )
    outcome = qvote.qmr2(profile)
    dist = outcome.distribution_by_order(basis)
    assert "b>a>c" not in dist
    assert dist["a>b>c"] == pytest.approx(0.5, abs=1e-12)
    assert dist["a>c>b"] == pytest.approx(0.5, abs=1e-12)


def test_qmr2_revote_raises():
    basis = strict_abc()
    r = 1 / math.sqrt(2)
    profile = qvote.build_product_profile(
        [
            [("a>b>c", r), ("a>c>b", r)],
            [("c>b>a", r), ("b>c>a", -r)],
        ],
        basis,
    )
    with pytest.raises(qvote.RevoteRequired):
        qvote.qmr2(profile)


def test_qmr3_entangled_vs_product():
    basis = strict_abc()
    w = qvote.build_w_analog("a>b>c", "c>b>a", 3, basis)
    dist = qvote.qmr3_distribution(qvote.Profile.entangled(basis, w))
    assert dist[basis.index_of_text("c>b>a")] == 0.0
    ca, cb = math.sqrt(2 / 3), math.sqrt(1 / 3)
    voter = [("a>b>c", ca), ("c>b>a", cb)]
    product = qvote.build_product_profile([voter, voter, voter], basis)
    pdist = qvote.qmr3_distribution(product)
    assert pdist[basis.index_of_text("c>b>a")] == pytest.approx(7 / 27, abs=1e-12)


def test_opposition_sampling_is_anticorrelated():
    basis = strict_abc()
    r = 1 / math.sqrt(2)
    pair = qvote.build_opposition_pair([("a>b>c", r), ("c>b>a", r)], basis)
    rng = qvote.RngStream(13)
    for _ in range(100):
        idx = qvote.sample(pair, rng)
        first, second = qvote.decode_joint_index(idx, basis.dim, 2)
        assert basis.order(second) == qvote.reverse_order(basis.order(first))


def test_arrow_disproof():
    record = qvote.arrow_disproof(qvote.BasisMode.STRICT)
    assert record.dim == 6
    assert record.max_uniform_deviation <= 1e-12
    assert record.unanimity.passed
    assert record.transitivity.passed
    assert record.dictatorship.passed
    # per-pair QIIA genuinely fails for qmr on the exhaustive basis family
    assert not record.qiia.passed


def test_classical_mr_cycle():
    cands = qvote.CandidateSet(["a", "b", "c"])
    votes = [qvote.parse_order(t, cands) for t in ("a>b>c", "c>a>b", "b>c>a")]
    with pytest.raises(qvote.CycleError):
        qvote.classical_mr(votes, 3, qvote.CyclePolicy.ERROR)
    tied = qvote.classical_mr(votes, 3, qvote.CyclePolicy.ALL_EQUAL)
    assert qvote.format_order(tied, cands) == "a=b=c"


def test_scenario_runner():
    text = """
candidates: a b c
constitution: qmr
voter: pure 1 a>b>c
voter: pure 1 c>a>b
voter: pure 1 b>c>a
"""
    report = qvote.run_scenario_text(text, True)
    assert "record=prob order=a>b>c p=0.166666666666667" in report


def test_demos_pass():
    ok, text = qvote.run_demo("eq6", 0, qvote.BasisMode.STRICT, 42)
    assert ok, text
    ok, text = qvote.run_demo("compare-tactics", 0, qvote.BasisMode.STRICT, 42)
    assert ok, text
