"""Deterministic samplers for labelings and chain-polytope points.

Every sampler takes a master seed; sub-streams are derived by hashing the
seed with a context tuple, so reports are reproducible byte for byte no
matter how trials are scheduled.
"""

from __future__ import annotations

import hashlib
import random
from fractions import Fraction

from .errors import SamplingExhausted, SingularValue
from .labeling import Labeling
from .realms import (
    FpMatrixRealm,
    FractionMatrixRealm,
    RationalFunctionRealm,
    TropicalRealm,
    symbolic_variable_names,
)

RESAMPLE_LIMIT = 32


def derive_seed(master, *parts):
    """Stable 64-bit sub-seed from a master seed and a context tuple."""
    text = repr((master,) + parts).encode()
    return int.from_bytes(hashlib.sha256(text).digest()[:8], "big")


def symbolic_labeling(poset):
    """One fresh variable per element, assigned in linear-extension order.

    A four-element rectangle gets w, x, y, z; six elements get u..z."""
    names = symbolic_variable_names(poset.n)
    realm = RationalFunctionRealm(names)
    order = poset.topo_order()
    values = [None] * poset.n
    for name, x in zip(names, order):
        values[x] = realm.variable(name)
    return Labeling(realm, values)


def sample_generic_labeling(poset, realm_config, seed):
    """Sample a labeling per the realm config block.

    Symbolic realms are deterministic (fresh variables).  Matrix realms draw
    uniform entries and a nonzero central scalar, resampling up to the retry
    bound until one full antichain-rowmotion pass hits no singular value.
    Tropical realms draw rationals in [0, 1] with bounded denominators.
    """
    kind = realm_config["realm"]
    if kind == "ratfun":
        return symbolic_labeling(poset)
    if kind == "tropical":
        rng = random.Random(derive_seed(seed, "tropical"))
        realm = TropicalRealm(Fraction(realm_config.get("c", 1)))
        values = [_bounded_rational(rng) for _ in range(poset.n)]
        return Labeling(realm, values)
    if kind in ("matp", "matq"):
        return _sample_matrix_labeling(poset, realm_config, seed)
    raise ValueError(f"unknown realm {kind!r}")


def sample_chain_polytope_point(poset, rng, denominator=60, rejection_rounds=64):
    """Random rational point of the chain polytope.

    Draws entries k/denominator from the unit box and accepts when every
    maximal chain sums to at most 1.  When rejection keeps missing (the
    polytope volume shrinks fast with poset size), the last draw is scaled
    down by its largest chain sum instead, which lands exactly on the
    polytope; everything stays an exact rational.
    """
    chains = poset.maximal_chains()
    values = None
    for _ in range(rejection_rounds):
        values = [Fraction(rng.randrange(denominator + 1), denominator)
                  for _ in range(poset.n)]
        if all(sum(values[x] for x in chain) <= 1 for chain in chains):
            return values
    worst = max(sum(values[x] for x in chain) for chain in chains)
    return [v / worst for v in values]


def _bounded_rational(rng):
    den = rng.randrange(1, 33)
    return Fraction(rng.randrange(den + 1), den)


def _sample_matrix_labeling(poset, realm_config, seed):
    from .dynamics import antichain_rowmotion

    kind = realm_config["realm"]
    d = int(realm_config["d"])
    for attempt in range(RESAMPLE_LIMIT):
        rng = random.Random(derive_seed(seed, "matrix", attempt))
        if kind == "matp":
            p = int(realm_config["p"])
            realm = FpMatrixRealm(p, d, c=rng.randrange(1, p))
            entry = lambda: rng.randrange(p)
        else:
            realm = FractionMatrixRealm(d, c=Fraction(rng.randrange(1, 64), rng.randrange(1, 64)))
            entry = lambda: Fraction(rng.randrange(-32, 33), rng.randrange(1, 17))
        values = [
            tuple(tuple(entry() for _ in range(d)) for _ in range(d))
            for _ in range(poset.n)
        ]
        g = Labeling(realm, values)
        try:
            antichain_rowmotion(poset, g, mode="transfer")
        except SingularValue:
            continue
        return g
    raise SamplingExhausted(
        f"no nonsingular labeling after {RESAMPLE_LIMIT} attempts", seed=seed
    )
