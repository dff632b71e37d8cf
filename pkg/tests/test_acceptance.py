"""Acceptance criteria, one test each.

Each test records a ``PASS``/``FAIL`` line (shown in the terminal summary
and printed to stdout) with the measured quantity and its pinned
tolerance.  Every item must also finish within the per-item time budget.
"""

import io
import json
import math
import random
import time
from contextlib import contextmanager
from fractions import Fraction
from pathlib import Path

from conftest import ACCEPTANCE_LINES, random_matrix
from oracles import sympy_compose_equals
from regen_corpus import FANS, digest
from toristab import (IDENTITY_BASIS, ClassKind, Holomorphic, Impossible,
                      MonomialMap, Ray, Stabilized, Verdict, check_as,
                      classify, degree_p2, degree_sequence, is_holomorphic,
                      is_regular, indeterminacy_points, make_fan,
                      orbit_closure_invariant_fan, primitive,
                      ray_action_order, regularize, reindex_sublattice,
                      stabilize, standard_p1xp1, standard_p2)
from toristab.cli import run
from toristab.exact import NIVEN_COSINES
from toristab.fan import fan_from_json, fan_to_json
from toristab.lattice import det2
from toristab.serialization import dumps, outcome_from_dict, outcome_to_dict

TIME_BUDGET_S = 5.0


@contextmanager
def criterion(n, title):
    """Record PASS/FAIL for criterion ``n``; the body returns details via
    the yielded dict and raises AssertionError on failure."""
    info = {"detail": ""}
    t0 = time.perf_counter()
    try:
        yield info
        elapsed = time.perf_counter() - t0
        assert elapsed < TIME_BUDGET_S, f"took {elapsed:.2f} s > {TIME_BUDGET_S} s"
    except AssertionError as exc:
        line = f"FAIL {n}: {title}: {exc}"
        ACCEPTANCE_LINES.append(line)
        print(line)
        raise
    line = f"PASS {n}: {title}: {info['detail']} ({time.perf_counter() - t0:.2f} s)"
    ACCEPTANCE_LINES.append(line)
    print(line)


def test_1_classification_table():
    with criterion(1, "classification table") as info:
        expected = [
            ([[3, 0], [0, 3]], ClassKind.ScalarDiagonal, None, None),
            ([[2, 1], [1, 1]], ClassKind.RealDominant, None, None),
            ([[1, 1], [0, 1]], ClassKind.RepeatedNonDiagonalizable, None, None),
            ([[0, 1], [1, 0]], ClassKind.RealOpposite, None, None),
            ([[0, -8], [1, 4]], ClassKind.ComplexRational, 8, Fraction(0)),
            ([[1, 4], [-1, 0]], ClassKind.ComplexIrrational, None, Fraction(-7, 8)),
        ]
        for m, kind, order, cos in expected:
            c = classify(m)
            assert (c.kind, c.order, c.cos_two_pi_theta) == (kind, order, cos), (m, c)
        info["detail"] = "6/6 exact"


def test_2_as_failure_witness():
    with criterion(2, "AS failure witness") as info:
        A = MonomialMap(2, 1, 1, 1)
        rep = check_as(A, standard_p2())
        assert rep.verdict is Verdict.NotAS
        assert (rep.witness.ray, rep.witness.k) == (Ray(-1, -1), 1), rep.witness
        d1, d2 = degree_p2(A), degree_p2(A @ A)
        assert (d1, d2) == (3, 8) and d2 != d1 ** 2
        info["detail"] = f"witness ray (-1,-1), k=1; deg 3, deg^2 {d2} != 9"


def test_3_stabilization_soundness():
    with criterion(3, "stabilization soundness") as info:
        rng = random.Random(31337)
        done = 0
        while done < 200:
            A = random_matrix(rng, -5, 5)
            if classify(A).kind not in (ClassKind.RealDominant,
                                        ClassKind.RepeatedNonDiagonalizable):
                continue
            out = stabilize(A, standard_p2())
            assert isinstance(out, Stabilized), A
            rep = check_as(A, out.fan)
            assert rep.verdict is Verdict.AS, (A, rep.witness)
            assert all(t.terminal.status == "CycleSafe" for t in rep.traces), A
            done += 1
        info["detail"] = "200/200 Stabilized and independently AS"


def test_4_example_two_obstruction():
    with criterion(4, "order-8 regular-refinement obstruction") as info:
        A = MonomialMap(0, -8, 1, 4)
        fan = orbit_closure_invariant_fan(A, standard_p1xp1())
        assert len(fan) == 8 and fan.has_ray((0, 1))
        p = primitive(A((0, 1)))
        dets = {abs(det2(p, primitive(A((-1, k))))) for k in range(1, 101)}
        assert dets == {2}, dets
        info["detail"] = "|det| = 2 for k = 1..100"


def test_5_invariant_fan_holomorphy():
    with criterion(5, "invariant-fan holomorphy") as info:
        A = MonomialMap(0, -8, 1, 4)
        fan = orbit_closure_invariant_fan(A, standard_p1xp1())
        assert len(fan) == 8
        assert is_holomorphic(A, fan)
        assert indeterminacy_points(A, fan) == []
        assert check_as(A, fan).verdict is Verdict.AS
        assert ray_action_order(A) == 8
        info["detail"] = "8 rays, holomorphic, no indeterminacy, AS, order 8"


def test_6_impossibility_certificates():
    with criterion(6, "impossibility certificates") as info:
        for m, flat in (([[1, 4], [-1, 0]], "1,4,-1,0"), ([[1, -1], [4, 0]], "1,-1,4,0")):
            out = stabilize(m, standard_p2())
            assert isinstance(out, Impossible), m
            cos = out.certificate.cos_two_pi_theta
            assert cos == Fraction(-7, 8) and cos not in NIVEN_COSINES
            code = run(["stabilize", "--matrix", flat, "--fan", "p2"],
                       stdout=io.StringIO(), stderr=io.StringIO())
            assert code == 1, code
        info["detail"] = "2/2 Impossible, cos = -7/8, CLI exit 1"


def test_7_degree_growth():
    with criterion(7, "degree growth") as info:
        rep = degree_sequence([[2, 1], [1, 1]], 20)
        deg = {n + 1: d for n, d in enumerate(rep.degrees)}
        for m in range(1, 20):
            for n in range(1, 21 - m):
                assert deg[m + n] <= deg[m] * deg[n], (m, n)
        lam = (3 + math.sqrt(5)) / 2
        err = abs(deg[20] ** (1 / 20) - lam)
        assert err <= 0.05 * lam, err
        assert rep.topological_degree == 1
        info["detail"] = f"submultiplicative; |deg20^(1/20) - lambda1| = {err:.4f} <= {0.05 * lam:.4f}"


def test_8_algebraic_laws():
    with criterion(8, "algebraic laws") as info:
        rng = random.Random(8)
        for _ in range(50):
            A, B = random_matrix(rng, -3, 3), random_matrix(rng, -3, 3)
            assert sympy_compose_equals(A, B), (A, B)
            assert abs((A @ B).det) == abs(A.det) * abs(B.det)
        for _ in range(100):
            A = random_matrix(rng, -9, 9)
            A2, t, d = A @ A, A.trace, A.det
            residual = (A2.a - t * A.a + d, A2.b - t * A.b, A2.c - t * A.c, A2.d - t * A.d + d)
            assert residual == (0, 0, 0, 0), A
        info["detail"] = "50 compositions, 50 det products, 100 Cayley-Hamilton residuals zero"


def _verified(fan, found, max_index):
    B, new = found
    assert B.index <= max_index
    assert all(d == 1 for _, d in is_regular(new))
    assert make_fan([B.coordinates(r) for r in fan.rays]) == new


def test_9_regularization():
    with criterion(9, "regularization") as info:
        f = make_fan([(1, 0), (1, 2), (-1, 0), (-1, -2)])
        found = regularize(f)
        assert found is not None
        _verified(f, found, 2)
        out = stabilize([[0, 2], [1, 0]], standard_p2())
        assert isinstance(out, Holomorphic)
        case3 = out.fan
        found3 = regularize(case3)
        assert found3 is not None
        _verified(case3, found3, 64)
        g, deg = reindex_sublattice(case3, IDENTITY_BASIS)
        assert (g, deg) == (case3, 1)
        info["detail"] = (f"index {found[0].index} for +-(1,0),+-(1,2); index {found3[0].index} "
                          f"for the {len(case3)}-ray fan; identity reindex, degree 1")


def test_10_serialization_corpus():
    with criterion(10, "serialization round-trip") as info:
        corpus = json.loads((Path(__file__).parent / "corpus" / "regression.json").read_text())
        for case in corpus:
            fan = FANS[case["fan"]]
            ft = fan_to_json(fan)
            assert digest(ft) == case["input_fan_sha256"]
            assert fan_to_json(fan_from_json(ft, strict=True)) == ft
            m = case["matrix"]
            out = stabilize([m[:2], m[2:]], fan)
            text = dumps(outcome_to_dict(out))
            assert digest(text) == case["outcome_sha256"], case
            again = dumps(outcome_to_dict(outcome_from_dict(json.loads(text))))
            assert again == text, case
            if not isinstance(out, Impossible):
                ot = fan_to_json(out.fan)
                assert fan_to_json(fan_from_json(ot, strict=True)) == ot
        info["detail"] = f"{len(corpus)} cases byte-identical"
