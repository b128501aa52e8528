import os
import subprocess
import sys

import pytest

from hurwitz_tau.errors import SizeLimitError
from hurwitz_tau.groupalg import (
    Segment,
    WalkQuery,
    class_representative,
    conjugacy_classes,
    count_walks,
    count_walks_all_targets,
    count_walks_to_elements,
    mixed,
    multi_monotone,
    plain,
    plain_count_via_class_dp,
    strictly_monotone,
    weak_then_strict,
    weakly_monotone,
)
from hurwitz_tau.partitions import partitions_of


def test_three_step_examples_in_s3():
    assert count_walks(WalkQuery(3, (1, 1, 1), (3,), plain(2))) == 3
    assert count_walks(WalkQuery(3, (1, 1, 1), (3,), weakly_monotone(2))) == 2
    assert count_walks(WalkQuery(3, (1, 1, 1), (3,), strictly_monotone(2))) == 1


def test_zero_step_walks_are_kronecker_delta():
    for n in range(1, 6):
        for lam in partitions_of(n):
            for mu in partitions_of(n):
                expected = 1 if lam == mu else 0
                assert count_walks(WalkQuery(n, lam, mu, plain(0))) == expected


def test_strict_longer_than_n_minus_1_vanishes():
    for n in range(2, 6):
        for lam in partitions_of(n):
            counts = count_walks_all_targets(n, lam, strictly_monotone(n))
            assert counts == {}


def test_degenerations():
    for lam in partitions_of(4):
        for mu in partitions_of(4):
            q = lambda segs: count_walks(WalkQuery(4, lam, mu, segs))
            assert q(multi_monotone([2])) == q(strictly_monotone(2))
            assert q(mixed(3, 3)) == q(weakly_monotone(3))
            assert q(mixed(0, 2)) == q(plain(2))


def test_segment_validation():
    with pytest.raises(ValueError):
        Segment("weird", 1)
    with pytest.raises(ValueError):
        mixed(3, 2)
    with pytest.raises(ValueError):
        WalkQuery(3, (2, 1), (2, 2), plain(1))


def test_multi_monotone_segment_order_is_immaterial():
    for lam in partitions_of(4):
        for mu in partitions_of(4):
            a = count_walks(WalkQuery(4, lam, mu, multi_monotone([1, 2])))
            b = count_walks(WalkQuery(4, lam, mu, multi_monotone([2, 1])))
            assert a == b


def test_weak_then_strict_matches_strict_then_weak():
    for lam in partitions_of(4):
        for mu in partitions_of(4):
            a = count_walks(WalkQuery(4, lam, mu, weak_then_strict(2, 2)))
            b = count_walks(
                WalkQuery(4, lam, mu, (Segment("strict", 2), Segment("weak", 2)))
            )
            assert a == b


def test_plain_class_dp_oracle():
    for n in range(1, 6):
        for lam in partitions_of(n):
            counts = {k: count_walks_all_targets(n, lam, plain(k)) for k in range(5)}
            for mu in partitions_of(n):
                for k in range(5):
                    assert plain_count_via_class_dp(n, lam, mu, k) == counts[k].get(
                        mu, 0
                    )


def test_representative_independence():
    for n in range(2, 6):
        for lam in partitions_of(n):
            per_element = count_walks_to_elements(n, lam, weakly_monotone(3))
            for mu in partitions_of(n):
                members = conjugacy_classes(n)[mu]
                values = {per_element.get(h, 0) for h in members}
                assert len(values) == 1
                assert values.pop() == count_walks(
                    WalkQuery(n, lam, mu, weakly_monotone(3))
                )


def test_transitive_examples():
    # a 0-step walk is transitive exactly when the start is a full cycle
    for n in range(2, 6):
        for lam in partitions_of(n):
            counts = count_walks_all_targets(n, lam, plain(0), transitive=True)
            if len(lam) == 1:
                assert counts == {lam: 1}
            else:
                assert counts == {}
    # in S_2 the single transposition step connects the two points
    assert count_walks(WalkQuery(2, (1, 1), (2,), plain(1), transitive=True)) == 1
    assert count_walks(WalkQuery(2, (1, 1), (1, 1), plain(2), transitive=True)) == 1
    # all three 2-step factorizations of a 3-cycle from the identity are
    # transitive (each uses two distinct transpositions)
    assert count_walks(WalkQuery(3, (1, 1, 1), (3,), plain(2), transitive=True)) == 3
    # ... but 2-step walks identity -> identity use a repeated transposition
    # and never connect all three points
    assert count_walks(WalkQuery(3, (1, 1, 1), (1, 1, 1), plain(2), transitive=True)) == 0


def test_transitive_at_most_plain():
    for n in range(2, 5):
        for lam in partitions_of(n):
            for mu in partitions_of(n):
                for k in range(4):
                    free = count_walks(WalkQuery(n, lam, mu, plain(k)))
                    connected = count_walks(
                        WalkQuery(n, lam, mu, plain(k), transitive=True)
                    )
                    assert 0 <= connected <= free


def test_walk_cap_and_env_override():
    with pytest.raises(SizeLimitError):
        count_walks(WalkQuery(8, (8,), (8,), plain(0)))
    repo = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
    env = dict(os.environ, HURWITZ_MAX_N="8")
    env["PYTHONPATH"] = os.pathsep.join(
        filter(None, [os.path.join(repo, "src"), env.get("PYTHONPATH")])
    )
    script = (
        "from hurwitz_tau.groupalg import WalkQuery, count_walks, plain;"
        "print(count_walks(WalkQuery(8, (8,), (8,), plain(0))))"
    )
    out = subprocess.run(
        [sys.executable, "-c", script],
        env=env,
        capture_output=True,
        text=True,
        cwd=repo,
    )
    assert out.returncode == 0, out.stderr
    assert out.stdout.strip() == "1"


def test_representative_definition_matches_query():
    # D(lam, mu) counts walks ending at this specific representative
    n = 4
    rep = class_representative((2, 2), n)
    assert rep == (2, 1, 4, 3)


def test_classical_factorization_counts():
    # minimal factorizations of a fixed n-cycle into n-1 transpositions:
    # n^(n-2) in total (Denes), Catalan(n-1) weakly monotone ones, and a
    # single strictly monotone one
    catalan = {2: 2, 3: 5, 4: 14, 5: 42}
    for n in range(3, 7):
        one_n, full = (1,) * n, (n,)
        assert count_walks(WalkQuery(n, one_n, full, plain(n - 1))) == n ** (n - 2)
        assert (
            count_walks(WalkQuery(n, one_n, full, weakly_monotone(n - 1)))
            == catalan[n - 1]
        )
        assert count_walks(WalkQuery(n, one_n, full, strictly_monotone(n - 1))) == 1
