from random import Random

import pytest

from spinaldim import (
    Permutation,
    Portrait,
    TreeSequence,
    alt_generators,
    embed_at,
    embedded_alt_generators,
)

SEQ55 = TreeSequence((5, 5))


def tau(k):
    return alt_generators(k)[0]


def sigma(k):
    return alt_generators(k)[1]


def random_portrait(seq, depth, rng):
    labels = {}
    for _ in range(rng.randint(0, 6)):
        level = rng.randrange(depth)
        v = tuple(rng.randint(1, seq[i]) for i in range(level))
        imgs = list(range(1, seq[level] + 1))
        rng.shuffle(imgs)
        labels[v] = Permutation(tuple(imgs))
    return Portrait(seq, depth, labels)


def test_identity_portrait_fixes_everything():
    p = Portrait.identity(SEQ55, 2)
    for v in SEQ55.vertices(2):
        assert p.apply(v) == v
    assert p.level_permutation(2).is_identity()


def test_label_degree_validation():
    with pytest.raises(ValueError):
        Portrait(SEQ55, 2, {(): Permutation.identity(4)})
    with pytest.raises(ValueError):
        Portrait(SEQ55, 1, {(1,): Permutation.identity(5)})


def test_spinal_generators_stabilize_level_one():
    for kind in ("zeta", "psi", "xi", "theta"):
        p = Portrait.spinal(kind, SEQ55, 2)
        assert p.level_permutation(1).is_identity()


def test_zeta_level_two_permutation():
    p = Portrait.spinal("zeta", SEQ55, 2)
    # tau_5 = (3 4 5) acts on the children of vertex (2); those are the
    # level-2 vertices (2,3), (2,4), (2,5), with indices 8, 9, 10
    expected_points = tuple(SEQ55.vertex_index((2, x)) for x in (3, 4, 5))
    assert expected_points == (8, 9, 10)
    assert p.level_permutation(2) == Permutation.from_cycles(25, [expected_points])


def test_psi_vertex_examples():
    p = Portrait.spinal("psi", SEQ55, 2)
    assert p.apply((2, 1)) == (2, 2)
    assert p.apply((1, 2)) == (1, 2)


def test_spinal_sections():
    seq = TreeSequence((7, 7, 7))
    for kind, perm in (
        ("zeta", tau(7)),
        ("psi", sigma(7)),
        ("xi", embedded_alt_generators(7)[0]),
        ("theta", embedded_alt_generators(7)[1]),
    ):
        p = Portrait.spinal(kind, seq, 3)
        section = p.section((2,))
        assert section == Portrait.rooted(perm, seq.subtree_sequence(1), 2)
        # section at the first child is the same generator one level down
        deeper = p.section((1,))
        assert deeper == Portrait.spinal(kind, seq.subtree_sequence(1), 2)


def test_rooted_apply():
    p = Portrait.rooted(sigma(5), SEQ55, 2)
    assert p.apply((1, 3)) == (2, 3)
    # block map: (x1, x2) -> (sigma(x1), x2)
    lp = p.level_permutation(2)
    for v in SEQ55.vertices(2):
        expected = (sigma(5)(v[0]), v[1])
        assert SEQ55.index_vertex(2, lp(SEQ55.vertex_index(v))) == expected


def test_rooted_identity_is_identity_portrait():
    p = Portrait.rooted(Permutation.identity(5), SEQ55, 2)
    assert p.is_identity()


def test_embed_at_matches_spinal_label():
    inner = Portrait.rooted(tau(5), SEQ55.subtree_sequence(1), 1)
    p = embed_at(inner, (2,), SEQ55)
    assert p.level_permutation(2) == Permutation.from_cycles(25, [(8, 9, 10)])


def test_embed_at_disjoint_supports_commute():
    sub = SEQ55.subtree_sequence(1)
    a = embed_at(Portrait.rooted(tau(5), sub, 1), (2,), SEQ55)
    b = embed_at(Portrait.rooted(sigma(5), sub, 1), (4,), SEQ55)
    assert a * b == b * a


def test_embed_at_validates_sequence():
    wrong = Portrait.rooted(tau(5), TreeSequence((5, 7)), 1)
    with pytest.raises(ValueError):
        embed_at(wrong, (2,), TreeSequence((5, 9)))


def test_compose_with_inverse_is_identity():
    rng = Random(2)
    seq = TreeSequence((5, 5, 5))
    for _ in range(10):
        p = random_portrait(seq, 3, rng)
        assert (p * p.inverse()).is_identity()
        assert (p.inverse() * p).is_identity()


def test_level_permutation_is_homomorphism():
    rng = Random(3)
    seq = TreeSequence((5, 5, 5))
    for _ in range(10):
        p = random_portrait(seq, 3, rng)
        q = random_portrait(seq, 3, rng)
        for n in (1, 2, 3):
            assert (p * q).level_permutation(n) == p.level_permutation(
                n
            ) * q.level_permutation(n)


def test_xi_is_conjugate_of_zeta():
    seq = TreeSequence((7, 7, 7, 7))
    psi = Portrait.spinal("psi", seq, 3)
    zeta = Portrait.spinal("zeta", seq, 3)
    xi = Portrait.spinal("xi", seq, 3)
    conj = (psi ** -2) * zeta * (psi ** 2)
    assert xi.equal_to_depth(conj, 3)


def test_theta_section_word():
    seq = TreeSequence((7, 7, 7, 7))
    psi = Portrait.spinal("psi", seq, 3)
    zeta = Portrait.spinal("zeta", seq, 3)
    theta = Portrait.spinal("theta", seq, 3)
    word = psi * zeta ** 2
    # the section at the second vertex must be rho; the full portraits agree too
    assert word.section((2,)).label_at(()) == embedded_alt_generators(7)[1]
    assert word == theta


def test_truncate_and_equal_to_depth():
    seq = TreeSequence((5, 5, 5))
    z3 = Portrait.spinal("zeta", seq, 3)
    z2 = Portrait.spinal("zeta", seq, 2)
    assert z3.truncate(2).labels == z2.labels
    assert z3.equal_to_depth(Portrait.identity(seq, 3), 1)
    assert not z3.equal_to_depth(Portrait.identity(seq, 3), 2)


def test_apply_depth_guard():
    p = Portrait.spinal("zeta", SEQ55, 1)
    with pytest.raises(ValueError):
        p.apply((1, 1))


def test_spinal_depth_validation():
    with pytest.raises(ValueError):
        Portrait.spinal("zeta", SEQ55, 3)
    with pytest.raises(ValueError):
        Portrait.spinal("nope", SEQ55, 2)
    with pytest.raises(ValueError):
        Portrait.spinal("xi", TreeSequence((5, 4)), 2)


def test_dump_format():
    p = Portrait.spinal("zeta", SEQ55, 2)
    assert p.dump_lines() == ["1 2: (3 4 5)"]
    assert p.dump_records() == [{"level": 1, "path": [2], "cycles": "(3 4 5)"}]
    deep = Portrait.spinal("psi", TreeSequence((5, 5, 5)), 3)
    assert deep.dump_lines() == ["2 1,2: (1 2 3 4 5)", "1 2: (1 2 3 4 5)"]
