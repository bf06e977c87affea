import math
from random import Random

import pytest

from spinaldim import (
    Permutation,
    StabilizerChain,
    TreeSequence,
    alt_generators,
    embedded_alt_generators,
    spinal_group_portraits,
)
from tests.test_perms import bfs_closure


def test_empty_generator_list():
    chain = StabilizerChain.from_generators([], degree=5)
    assert chain.order() == 1
    assert chain.contains(Permutation.identity(5))
    assert not chain.contains(Permutation.from_cycles(5, [(1, 2, 3)]))


def test_empty_generators_need_degree():
    with pytest.raises(ValueError):
        StabilizerChain.from_generators([])


def test_alt5_order_against_closure():
    tau, sigma = alt_generators(5)
    chain = StabilizerChain.from_generators([tau, sigma])
    assert chain.order() == len(bfs_closure([tau, sigma])) == 60


def test_membership():
    tau, sigma = alt_generators(5)
    chain = StabilizerChain.from_generators([tau, sigma])
    assert not chain.contains(Permutation.from_cycles(5, [(1, 2)]))
    assert chain.contains(tau)
    assert chain.contains(sigma)
    assert chain.contains(sigma * tau * sigma ** 3)


def test_degree_mismatch():
    tau, _ = alt_generators(5)
    chain = StabilizerChain.from_generators([tau])
    with pytest.raises(ValueError):
        chain.contains(Permutation.identity(6))
    with pytest.raises(ValueError):
        StabilizerChain.from_generators([tau, Permutation.identity(6)])


def test_embedded_order_by_brute_force():
    kappa, rho = embedded_alt_generators(7)
    chain = StabilizerChain.from_generators([kappa, rho])
    assert chain.order() == len(bfs_closure([kappa, rho])) == 60


def test_level2_image_order_matches_closed_form():
    seq = TreeSequence((5, 5))
    images = [p.level_permutation(2) for p in spinal_group_portraits(seq, 2, "G")]
    chain = StabilizerChain.from_generators(images)
    assert chain.order() == 60 ** 6 == 46656000000


def test_seed_independence():
    seq = TreeSequence((5, 5))
    images = [p.level_permutation(2) for p in spinal_group_portraits(seq, 2, "G")]
    orders = {StabilizerChain.from_generators(images, seed=s).order() for s in (0, 1, 7, 1234)}
    assert orders == {60 ** 6}


def test_subgroup_order_divides_group_order():
    rng = Random(99)
    tau, sigma = alt_generators(9)
    full = StabilizerChain.from_generators([tau, sigma])
    elements = [full.random_element(rng) for _ in range(6)]
    for trial in range(8):
        subset = rng.sample(elements, rng.randint(1, 3))
        sub = StabilizerChain.from_generators(subset)
        assert full.order() % sub.order() == 0


def test_random_words_are_members():
    rng = Random(5)
    kappa, rho = embedded_alt_generators(11)
    chain = StabilizerChain.from_generators([kappa, rho])
    word = Permutation.identity(11)
    for _ in range(40):
        word = word * (kappa if rng.random() < 0.5 else rho) ** rng.randint(1, 4)
        assert chain.contains(word)


def test_strong_generators_sift_to_identity():
    tau, sigma = alt_generators(8)
    chain = StabilizerChain.from_generators([tau, sigma])
    for g in chain.strong_generators():
        assert chain.contains(g)
    assert chain.order() == math.factorial(8) // 2


def test_base_points_are_one_based_and_moved():
    tau, sigma = alt_generators(6)
    chain = StabilizerChain.from_generators([tau, sigma])
    assert all(1 <= b <= 6 for b in chain.base())
    assert len(set(chain.base())) == len(chain.base())


def test_symmetric_group_order():
    # a transposition and a full cycle generate the whole symmetric group
    s = Permutation.from_cycles(7, [(1, 2)])
    c = Permutation.from_cycles(7, [tuple(range(1, 8))])
    assert StabilizerChain.from_generators([s, c]).order() == math.factorial(7)
