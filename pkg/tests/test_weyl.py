import random

import pytest

from artifact.intlin import identity, snf_diagonal
from artifact.rootdata import root_datum
from artifact.weyl import (
    DatumMismatch,
    GroupBoundExceeded,
    WeylElement,
    conjugacy_classes,
    conjugate,
    coxeter_length,
    enumerate_group,
    from_word,
    inverse,
    is_cuspidal,
    multiply,
    parse_word,
    reflection_length,
    reflection_length_bfs,
    reflections,
)

CLASS_COUNTS = [(("A", 3), 5), (("A", 4), 7), (("B", 3), 10), (("C", 3), 10), (("B", 4), 20),
                (("D", 4), 13), (("G2", None), 6), (("F4", None), 25)]


def pid(x):
    if isinstance(x, tuple):
        return x[0] if x[1] is None else f"{x[0]}{x[1]}"
    return str(x)


@pytest.mark.parametrize("p,count", CLASS_COUNTS, ids=pid)
def test_group_order_and_class_count(p, count):
    d = root_datum(*p)
    G = enumerate_group(d)
    assert len(G) == d.group_order
    assert len(set(G.elements)) == len(G)
    assert len(conjugacy_classes(d)) == count


def test_bfs_words_evaluate_to_elements():
    d = root_datum("B", 3)
    G = enumerate_group(d)
    for M, w in zip(G.elements, G.words):
        assert from_word(d, w).matrix == M
        assert coxeter_length(from_word(d, w)) == len(w)


def test_longest_element_g2():
    w0 = from_word(root_datum("G2"), "121212")
    assert w0.matrix == ((-1, 0), (0, -1))
    assert snf_diagonal(w0.id_minus()) == (2, 2)
    assert coxeter_length(w0) == 6


def test_golden_matrices():
    assert from_word(root_datum("A", 3), "123").matrix == ((0, 0, -1), (1, 0, -1), (0, 1, -1))
    assert from_word(root_datum("C", 4), "4321").matrix == (
        (-1, 1, 0, 0), (-1, 0, 1, 0), (-1, 0, 0, 1), (-2, 0, 0, 1))
    assert from_word(root_datum("B", 4), "4321").matrix == (
        (-1, 1, 0, 0), (-1, 0, 1, 0), (-1, 0, 0, 2), (-1, 0, 0, 1))


@pytest.mark.parametrize("p", [("A", 3), ("B", 3), ("D", 4), ("G2", None)], ids=pid)
def test_reflection_length_matches_bfs(p):
    d = root_datum(*p)
    dist = reflection_length_bfs(d)
    for M in enumerate_group(d).elements:
        assert reflection_length(WeylElement(d, M)) == dist[M]


@pytest.mark.parametrize("p", [("A", 4), ("C", 3), ("D", 5), ("F4", None), ("E6", None)], ids=pid)
def test_reflection_count_is_positive_root_count(p):
    d = root_datum(*p)
    assert len(reflections(d)) == len(d.positive_coroots)


def test_conjugation_equivariance():
    d = root_datum("C", 3)
    rng = random.Random(5)
    for _ in range(50):
        u = from_word(d, [rng.randint(1, 3) for _ in range(rng.randint(0, 8))])
        v = from_word(d, [rng.randint(1, 3) for _ in range(rng.randint(0, 8))])
        w = from_word(d, [rng.randint(1, 3) for _ in range(rng.randint(0, 8))])
        assert conjugate(multiply(u, v), w) == conjugate(u, conjugate(v, w))
        assert reflection_length(conjugate(u, w)) == reflection_length(w)
        assert snf_diagonal(conjugate(u, w).id_minus()) == snf_diagonal(w.id_minus())
        assert multiply(w, inverse(w)).matrix == identity(3)


def test_cuspidal_examples():
    assert is_cuspidal(from_word(root_datum("A", 3), "123"))
    assert not is_cuspidal(from_word(root_datum("A", 3), "12"))
    assert is_cuspidal(from_word(root_datum("G2"), "12"))
    assert not is_cuspidal(from_word(root_datum("B", 2), ""))


def test_parse_word_forms():
    assert parse_word("s_{1234}") == (1, 2, 3, 4)
    assert parse_word("id") == ()
    assert parse_word([3, 1]) == (3, 1)
    with pytest.raises(ValueError):
        parse_word("1a")


def test_from_word_out_of_range():
    with pytest.raises(ValueError):
        from_word(root_datum("A", 2), "13")


def test_mixed_datum_rejected():
    with pytest.raises(DatumMismatch):
        multiply(from_word(root_datum("B", 3), "1"), from_word(root_datum("C", 3), "1"))


def test_group_bound():
    with pytest.raises(GroupBoundExceeded):
        enumerate_group(root_datum("A", 5), bound=100)
