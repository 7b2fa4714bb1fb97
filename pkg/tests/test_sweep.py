from mixedbraid.sweep import SweepPlan, compositions, describe


def test_compositions():
    assert list(compositions(3)) == [(1, 1, 1), (1, 2), (2, 1), (3,)]
    assert sum(1 for _ in compositions(7)) == 2**6


def test_exhaustive_small_plan():
    plan = SweepPlan(2, 3, 3, budget=10**6)
    assert plan.exhaustive()
    got = list(plan.instances())
    assert len(got) == plan.size()
    assert len({(r.cover, r.exps) for r in got}) == len(got)


def test_sampled_plan_respects_budget():
    plan = SweepPlan(2, 6, 7, budget=500, seed=4)
    assert not plan.exhaustive()
    got = list(plan.instances())
    assert len(got) == 500
    assert len({(r.cover, r.exps) for r in got}) == 500
    assert {r.cover.spec.n for r in got} == set(range(2, 7))


def test_sampled_plan_is_deterministic():
    plan = SweepPlan(2, 5, 6, budget=200, seed=1)
    assert [(r.cover, r.exps) for r in plan.instances()] == [(r.cover, r.exps) for r in plan.instances()]


def test_describe_mentions_mode():
    assert "exhaustive" in describe(SweepPlan(2, 2, 3, budget=100))
    assert "sampled" in describe(SweepPlan(2, 7, 7, budget=100))
