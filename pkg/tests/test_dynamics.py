"""Transfer maps, toggles, rowmotion, closed forms, polytopes, iteration."""

import random
from fractions import Fraction

import pytest

from rowmotion import (
    FpMatrixRealm,
    Labeling,
    SingularValue,
    TropicalRealm,
    TransferKind,
    antichain_rowmotion,
    build_poset,
    chain_expansion_check,
    closed_form_first_pass,
    iterate,
    order_rowmotion,
    polytope_membership,
    product_of_chains,
    sample_generic_labeling,
    toggle,
    transfer,
)
from rowmotion.dynamics import toggle_chain_form
from rowmotion.realms import FUZZ_PRIME
from rowmotion.sampling import derive_seed, symbolic_labeling

PRIME = 10007


def matrix_labeling(poset, d, seed, p=PRIME):
    return sample_generic_labeling(poset, {"realm": "matp", "p": p, "d": d}, seed)


def tropical_labeling(poset, seed):
    return sample_generic_labeling(poset, {"realm": "tropical"}, seed)


def all_sample_labelings(poset, seed):
    """One labeling per realm family, for realm-generic properties."""
    return [
        symbolic_labeling(poset),
        tropical_labeling(poset, seed),
        matrix_labeling(poset, 1, seed),
        matrix_labeling(poset, 2, seed),
        matrix_labeling(poset, 3, seed),
    ]


# -- transfer maps ------------------------------------------------------


def test_up_inverse_symbolic_2x3():
    p = product_of_chains(2, 3)
    g = symbolic_labeling(p)
    r = g.realm
    u, v, w, x, y, z = (r.variable(n) for n in "uvwxyz")
    d = transfer(TransferKind.UP_INV, p, g)
    assert r.eq(d[p.id(1, 1)], u * (v * x + w * x + w * y) * z)
    assert r.eq(d[p.id(2, 1)], v * x * z)


def test_complement_symbolic_top():
    p = product_of_chains(2, 3)
    g = symbolic_labeling(p)
    r = g.realm
    after = transfer(TransferKind.COMPLEMENT, p, transfer(TransferKind.UP_INV, p, g))
    cc, z = r.variable("C"), r.variable("z")
    assert r.eq(after[p.id(2, 3)], cc / z)


def test_tropical_complement():
    p = product_of_chains(1, 1)
    realm = TropicalRealm(Fraction(1))
    g = Labeling(realm, [Fraction(3, 10)])
    assert transfer(TransferKind.COMPLEMENT, p, g)[0] == Fraction(7, 10)


@pytest.mark.parametrize("a,b", [(2, 2), (2, 3), (1, 3)])
def test_transfer_inverse_pairs(a, b):
    p = product_of_chains(a, b)
    for g in all_sample_labelings(p, seed=11):
        r = g.realm
        up = transfer(TransferKind.UP, p, transfer(TransferKind.UP_INV, p, g))
        assert up.eq(g)
        back = transfer(TransferKind.UP_INV, p, transfer(TransferKind.UP, p, g))
        assert back.eq(g)
        down = transfer(TransferKind.DOWN, p, transfer(TransferKind.DOWN_INV, p, g))
        assert down.eq(g)
        back = transfer(TransferKind.DOWN_INV, p, transfer(TransferKind.DOWN, p, g))
        assert back.eq(g)
        twice = transfer(TransferKind.COMPLEMENT, p,
                         transfer(TransferKind.COMPLEMENT, p, g))
        assert twice.eq(g)


def test_chain_expansion_examples():
    chain = build_poset([(0, 1), (1, 2)], elements=[0, 1, 2])
    g = matrix_labeling(chain, 2, seed=3)
    assert chain_expansion_check(TransferKind.DOWN_INV, chain, g)
    assert chain_expansion_check(TransferKind.UP_INV, chain, g)

    p = product_of_chains(2, 2)
    for s in range(10):
        g = matrix_labeling(p, 2, seed=100 + s)
        assert chain_expansion_check(TransferKind.DOWN_INV, p, g)
        assert chain_expansion_check(TransferKind.UP_INV, p, g)

    p23 = product_of_chains(2, 3)
    g = symbolic_labeling(p23)
    assert chain_expansion_check(TransferKind.DOWN_INV, p23, g)
    assert chain_expansion_check(TransferKind.UP_INV, p23, g)

    with pytest.raises(ValueError):
        chain_expansion_check(TransferKind.UP, p, g)


def test_singular_reports_element():
    p = product_of_chains(2, 2)
    realm = FpMatrixRealm(PRIME, 1, c=1)
    g = Labeling(realm, [((0,),), ((1,),), ((1,),), ((1,),)])
    with pytest.raises(SingularValue) as err:
        transfer(TransferKind.COMPLEMENT, p, g)
    assert err.value.element == 0


# -- toggles -------------------------------------------------------------


def test_toggle_single_element():
    p = product_of_chains(1, 1)
    g = symbolic_labeling(p)
    r = g.realm
    out = toggle(p, g, 0)
    assert r.eq(out[0], r.variable("C") / r.variable("z"))


def test_toggle_changes_only_v():
    p = product_of_chains(2, 3)
    g = matrix_labeling(p, 2, seed=5)
    for v in range(p.n):
        out = toggle(p, g, v)
        changed = [x for x in range(p.n) if out[x] != g[x]]
        assert changed in ([], [v])


def test_toggle_unique_minimum_cancellation():
    """At the unique minimum the inverse-down factor is the label itself,
    so the new label collapses to C * inv(inverse-up at the minimum)."""
    p = product_of_chains(2, 3)
    for s in range(10):
        g = matrix_labeling(p, 2, seed=40 + s)
        r = g.realm
        out = toggle(p, g, 0)
        d = transfer(TransferKind.UP_INV, p, g)
        assert r.eq(out[0], r.mul(r.constant(), r.inv(d[0])))


def test_toggle_twice_commutative_involution():
    p = product_of_chains(2, 2)
    for g in (symbolic_labeling(p), tropical_labeling(p, 6), matrix_labeling(p, 1, 6)):
        for v in range(p.n):
            again = toggle(p, toggle(p, g, v), v)
            assert again.eq(g)


def test_toggle_chain_form_agrees():
    for poset in (
        product_of_chains(2, 2),
        product_of_chains(2, 3),
        build_poset([(0, 2), (1, 2), (2, 3)], elements=[0, 1, 2, 3]),
    ):
        for seed in range(5):
            for g in (matrix_labeling(poset, 2, seed=60 + seed),
                      matrix_labeling(poset, 3, seed=60 + seed)):
                for v in range(poset.n):
                    assert toggle(poset, g, v).eq(toggle_chain_form(poset, g, v))


# -- rowmotion -----------------------------------------------------------


def test_rowmotion_symbolic_2x3_labels():
    p = product_of_chains(2, 3)
    g = symbolic_labeling(p)
    r = g.realm
    cc, u, v, w, x, y, z = (r.variable(n) for n in ("C", "u", "v", "w", "x", "y", "z"))
    img = antichain_rowmotion(p, g)
    q = v * x + w * x + w * y
    assert r.eq(img[p.id(1, 1)], cc / (u * q * z))
    assert r.eq(img[p.id(2, 3)], x * y / (x + y))


def test_rowmotion_nc_top_label():
    """Top label of one noncommutative step is inv(inv(x) + inv(y)),
    verified by matrix evaluation."""
    p = product_of_chains(2, 2)
    for s in range(100):
        g = matrix_labeling(p, 1 + s % 3, seed=200 + s)
        r = g.realm
        img = antichain_rowmotion(p, g, mode="toggles")
        x, y = g[p.id(2, 1)], g[p.id(1, 2)]
        assert r.eq(img[p.id(2, 2)], r.inv(r.add(r.inv(x), r.inv(y))))


def test_rowmotion_tropical_first_step():
    p = product_of_chains(2, 2)
    realm = TropicalRealm(Fraction(1))
    g = Labeling(realm, [Fraction(v) for v in ("1/5", "1/10", "2/5", "3/10")])
    img = antichain_rowmotion(p, g)
    assert img.values == tuple(Fraction(v) for v in ("1/10", "1/2", "1/5", "1/10"))


@pytest.mark.parametrize(
    "a,b", [(a, b) for a in range(1, 5) for b in range(1, 5) if a + b <= 5])
def test_mode_equivalence_symbolic(a, b):
    p = product_of_chains(a, b)
    g = symbolic_labeling(p)
    assert antichain_rowmotion(p, g, "transfer").eq(antichain_rowmotion(p, g, "toggles"))


@pytest.mark.parametrize("a,b", [(2, 2), (3, 2), (4, 3), (4, 4)])
def test_mode_equivalence_sampled(a, b):
    p = product_of_chains(a, b)
    for seed in range(4):
        for g in (tropical_labeling(p, seed), matrix_labeling(p, 1 + seed % 3, seed)):
            assert antichain_rowmotion(p, g, "transfer").eq(
                antichain_rowmotion(p, g, "toggles"))


def test_linear_extension_independence():
    p = product_of_chains(3, 3)
    rng = random.Random(13)
    base_order = list(p.topo_order())
    for s in range(6):
        g = matrix_labeling(p, 2, seed=300 + s)
        reference = antichain_rowmotion(p, g, mode="toggles")
        for _ in range(5):
            order = _random_linear_extension(p, rng)
            assert order != base_order or True
            assert antichain_rowmotion(p, g, "toggles", extension=order).eq(reference)


def _random_linear_extension(poset, rng):
    remaining = set(range(poset.n))
    placed = []
    while remaining:
        ready = [x for x in remaining
                 if all(y not in remaining for y in poset.down_covers(x))]
        pick = rng.choice(ready)
        placed.append(pick)
        remaining.remove(pick)
    return placed


def test_order_rowmotion_single_element():
    p = product_of_chains(1, 1)
    g = symbolic_labeling(p)
    r = g.realm
    assert r.eq(order_rowmotion(p, g)[0], r.variable("C") / r.variable("z"))


def test_order_rowmotion_period_2x2_scalars():
    p = product_of_chains(2, 2)
    for s in range(20):
        g = matrix_labeling(p, 1, seed=400 + s)
        cur = g
        for _ in range(4):
            cur = order_rowmotion(p, cur)
        assert cur.eq(g)


def test_order_antichain_equivariance():
    """down-transfer after order rowmotion equals antichain rowmotion after
    down-transfer, computing both sides independently."""
    for a, b in [(2, 2), (2, 3)]:
        p = product_of_chains(a, b)
        for s in range(5):
            for g in (matrix_labeling(p, 2, seed=500 + s),
                      tropical_labeling(p, 500 + s)):
                lhs = transfer(TransferKind.DOWN, p, order_rowmotion(p, g))
                rhs = antichain_rowmotion(p, transfer(TransferKind.DOWN, p, g))
                assert lhs.eq(rhs)


# -- closed form ---------------------------------------------------------


def test_closed_form_2x2_top():
    p = product_of_chains(2, 2)
    g = symbolic_labeling(p)
    r = g.realm
    x, y = r.variable("x"), r.variable("y")
    out = closed_form_first_pass(p, g)
    assert r.eq(out[p.id(2, 2)], x * y / (x + y))
    assert out.eq(antichain_rowmotion(p, g))


def test_closed_form_1x1():
    p = product_of_chains(1, 1)
    g = symbolic_labeling(p)
    r = g.realm
    assert r.eq(closed_form_first_pass(p, g)[0], r.variable("C") / r.variable("z"))


def test_closed_form_matches_toggles_3x3():
    p = product_of_chains(3, 3)
    for s in range(30):
        g = matrix_labeling(p, 1 + s % 3, seed=600 + s)
        assert closed_form_first_pass(p, g).eq(antichain_rowmotion(p, g, "toggles"))


def test_closed_form_rejects_general_posets():
    v = build_poset([(0, 2), (1, 2)], elements=[0, 1, 2])
    g = matrix_labeling(v, 1, seed=1)
    with pytest.raises(ValueError):
        closed_form_first_pass(v, g)


# -- polytopes ------------------------------------------------------------


def test_polytope_membership_examples():
    p = product_of_chains(2, 2)
    from rowmotion import enumerate_antichains

    for s in enumerate_antichains(p):
        indicator = [1 if x in s else 0 for x in range(p.n)]
        assert polytope_membership("chain", p, indicator)
    zero = [0] * p.n
    for kind in ("order", "order-reversing", "chain"):
        assert polytope_membership(kind, p, zero)
    for vals in [("1/5", "1/10", "2/5", "3/10"), ("1/10", "1/2", "1/5", "1/10"),
                 ("3/10", "1/10", "2/5", "1/5"), ("1/10", "3/5", "3/10", "1/10")]:
        assert polytope_membership("chain", p, [Fraction(v) for v in vals])
    assert polytope_membership("order", p, [Fraction(v) for v in ("0", "1/2", "1/2", "1")])
    assert not polytope_membership("order", p, [Fraction(v) for v in ("1", "1/2", "1/2", "0")])
    assert polytope_membership("order-reversing", p,
                               [Fraction(v) for v in ("1", "1/2", "1/2", "0")])
    assert not polytope_membership("chain", p, [Fraction(1, 2)] * 4)
    assert not polytope_membership("chain", p, [Fraction(3, 2), 0, 0, 0])
    with pytest.raises(ValueError):
        polytope_membership("simplex", p, zero)


def test_pl_rowmotion_preserves_chain_polytope():
    from rowmotion.sampling import sample_chain_polytope_point

    realm = TropicalRealm(Fraction(1))
    for a in range(1, 4):
        for b in range(1, 4):
            p = product_of_chains(a, b)
            for s in range(1000):
                rng = random.Random(derive_seed(700, a, b, s))
                g = Labeling(realm, sample_chain_polytope_point(p, rng))
                img = antichain_rowmotion(p, g)
                assert polytope_membership("chain", p, img)


def test_tropical_matches_independent_max_plus_oracle():
    """The generic code path in the tropical realm agrees with a direct
    max-plus implementation of the three-step composition."""

    def oracle_step(poset, values):
        n = poset.n
        up = [None] * n
        for x in reversed(poset.topo_order()):
            above = [up[y] for y in poset.up_covers(x)]
            up[x] = values[x] + (max(above) if above else 0)
        comp = [1 - v for v in up]
        out = [None] * n
        for x in range(n):
            below = [comp[y] for y in poset.down_covers(x)]
            out[x] = comp[x] - (max(below) if below else 0)
        return out

    realm = TropicalRealm(Fraction(1))
    for a, b in [(2, 2), (2, 3), (3, 3)]:
        p = product_of_chains(a, b)
        for s in range(20):
            g = tropical_labeling(p, seed=800 + s)
            assert antichain_rowmotion(p, g).values == tuple(oracle_step(p, list(g.values)))


# -- iteration -------------------------------------------------------------


def test_iterate_symbolic_periods():
    p = product_of_chains(2, 2)
    orb = iterate(p, symbolic_labeling(p))
    assert orb.period == 4
    assert len(orb.labelings) == 5
    p23 = product_of_chains(2, 3)
    assert iterate(p23, symbolic_labeling(p23)).period == 5


def test_iterate_matrix_period_2x2():
    p = product_of_chains(2, 2)
    for s in range(100):
        g = matrix_labeling(p, 1 + s % 3, seed=900 + s, p=FUZZ_PRIME)
        orb = iterate(p, g, mode="toggles")
        assert orb.period is not None and 4 % orb.period == 0


def test_iterate_respects_step_bound():
    p = product_of_chains(2, 2)
    g = symbolic_labeling(p)
    orb = iterate(p, g, steps=2)
    assert orb.period is None
    assert len(orb.labelings) == 3


def test_iterate_records_words_and_json():
    p = product_of_chains(2, 2)
    realm = TropicalRealm(Fraction(1))
    g = Labeling(realm, [Fraction(v) for v in ("1/5", "1/10", "2/5", "3/10")])
    orb = iterate(p, g)
    obj = orb.to_json()
    assert obj["period"] == 4
    assert len(obj["steps"]) == 5
    assert obj["steps"][0]["st_word"] == ["3/5", "2/5", "7/10", "3/10"]
    assert obj["steps"][0]["labels"]["0"] == "1/5"


def test_iterate_non_rectangle_has_no_words():
    v = build_poset([(0, 2), (1, 2)], elements=[0, 1, 2])
    g = matrix_labeling(v, 1, seed=2)
    orb = iterate(v, g, steps=6)
    assert orb.st_words[0] is None
