from edgewise.duality import (
    duality_selftest,
    interval_dual,
    ordered_hom_delta,
    ordered_hom_interval,
    ordinal_dual,
)
from edgewise.ordinals import (
    IntervalMap,
    OrdinalMap,
    compose,
    compose_interval,
    face,
    identity,
    interval_identity,
    interval_maps,
    ordinal_maps,
)


class TestOrderedHomSets:
    def test_two_point_target_on_the_interval(self):
        assert [h.values for h in ordered_hom_delta(1)] == [(0, 0), (0, 1), (1, 1)]

    def test_point_source(self):
        assert [h.values for h in ordered_hom_delta(0)] == [(0,), (1,)]

    def test_three_source(self):
        assert [h.values for h in ordered_hom_delta(3)] == [
            (0, 0, 0, 0),
            (0, 0, 0, 1),
            (0, 0, 1, 1),
            (0, 1, 1, 1),
            (1, 1, 1, 1),
        ]

    def test_counts_and_endpoints(self):
        for n in range(7):
            homs = ordered_hom_delta(n)
            assert len(homs) == n + 2
            assert homs[0].values == (0,) * (n + 1)
            assert homs[-1].values == (1,) * (n + 1)

    def test_order_coincides_with_pointwise_order(self):
        for n in range(7):
            homs = ordered_hom_delta(n)
            for earlier, later in zip(homs, homs[1:]):
                assert all(x <= y for x, y in zip(earlier.values, later.values))
                assert earlier.values != later.values
            # The "some value is smaller" order and the list order agree.
            for i, f1 in enumerate(homs):
                for j, f2 in enumerate(homs):
                    somewhere_below = any(
                        x < y for x, y in zip(f1.values, f2.values)
                    )
                    assert somewhere_below == (i < j)

    def test_interval_side(self):
        for m in range(1, 6):
            homs = ordered_hom_interval(m)
            assert len(homs) == m
            for earlier, later in zip(homs, homs[1:]):
                assert all(x <= y for x, y in zip(earlier.values, later.values))


class TestIntervalDual:
    def test_identity(self):
        assert interval_dual(interval_identity(1)) == identity(0)

    def test_late_switch(self):
        g = IntervalMap(2, 1, (0, 0, 1))
        assert interval_dual(g).values == (1,)

    def test_early_switch(self):
        g = IntervalMap(2, 1, (0, 1, 1))
        assert interval_dual(g).values == (0,)

    def test_galois_characterization(self):
        # i <= dual(g)(j) exactly when g(i) <= j.
        for a in range(1, 5):
            for b in range(1, 5):
                for g in interval_maps(a, b):
                    dual = interval_dual(g)
                    for i in range(a + 1):
                        for j in range(b):
                            assert (i <= dual.values[j]) == (g.values[i] <= j)

    def test_contravariant_functorial(self):
        for a in range(1, 5):
            for b in range(1, 5):
                for g1 in interval_maps(a, b):
                    for c in range(1, 5):
                        for g2 in interval_maps(b, c):
                            assert interval_dual(compose_interval(g1, g2)) == compose(
                                interval_dual(g2), interval_dual(g1)
                            )


class TestOrdinalDual:
    def test_identity(self):
        assert ordinal_dual(identity(0)) == interval_identity(1)
        assert ordinal_dual(identity(2)) == interval_identity(3)

    def test_single_face(self):
        # The inclusion [0] -> [1] hitting 1 never reaches threshold 1
        # before its only position, so the dual switches late.
        assert ordinal_dual(face(1, 0)).values == (0, 0, 1)
        assert ordinal_dual(face(1, 1)).values == (0, 1, 1)

    def test_galois_characterization(self):
        # dual(f)(j) <= k exactly when j <= f(k).
        for a in range(4):
            for b in range(4):
                for f in ordinal_maps(a, b):
                    dual = ordinal_dual(f)
                    for j in range(b + 2):
                        for k in range(a + 1):
                            assert (dual.values[j] <= k) == (j <= f.values[k])

    def test_contravariant_functorial(self):
        for a in range(3):
            for b in range(3):
                for f1 in ordinal_maps(a, b):
                    for c in range(3):
                        for f2 in ordinal_maps(b, c):
                            assert ordinal_dual(compose(f1, f2)) == compose_interval(
                                ordinal_dual(f2), ordinal_dual(f1)
                            )


class TestRoundTrips:
    def test_interval_maps_come_back(self):
        for a in range(1, 6):
            for b in range(1, 6):
                for g in interval_maps(a, b):
                    assert ordinal_dual(interval_dual(g)) == g

    def test_ordinal_maps_come_back(self):
        for a in range(5):
            for b in range(5):
                for f in ordinal_maps(a, b):
                    assert interval_dual(ordinal_dual(f)) == f

    def test_round_trip_for_specific_map(self):
        f = OrdinalMap(2, 2, (0, 0, 2))
        assert interval_dual(ordinal_dual(f)) == f


class TestSelftest:
    def test_small(self):
        report = duality_selftest(1)
        assert report.passed
        assert report.counterexample is None

    def test_default_scope(self):
        report = duality_selftest(4)
        assert report.passed
        assert report.checked > 0

    def test_failure_names_the_map(self, monkeypatch):
        import edgewise.duality as duality_module

        def broken(f):
            good = ordinal_dual(f)
            if f.src == 0 and f.dst == 1 and f.values == (1,):
                return IntervalMap(good.src, good.dst, (0, 1, 1))
            return good

        monkeypatch.setattr(duality_module, "ordinal_dual", broken)
        report = duality_module.duality_selftest(2)
        assert not report.passed
        assert report.counterexample is not None
        assert "map" in report.counterexample
