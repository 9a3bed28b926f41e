import pytest

from artifact.classreps import (
    ClassParams,
    ClassParamsError,
    all_class_params,
    exceptional_table,
    index_sets,
    parse_class_params,
    partitions,
    representative,
    rep_word,
    u_word,
    word_delta,
)
from artifact.intlin import identity, mat_neg, mat_sub
from artifact.rootdata import root_datum
from artifact.weyl import conjugacy_classes, enumerate_group, from_word, is_cuspidal

D10_ID_MINUS_W = (
    (2, -1, 0, 0, 0, 0, 0, 0, 0, 0),
    (1, 1, -1, 0, 0, 0, 0, 0, 0, 0),
    (2, 0, 0, 0, 0, 0, 0, 0, 0, 0),
    (2, 0, -1, 2, -1, 0, 0, 0, 0, 0),
    (2, 0, -2, 2, 0, 0, 0, 0, 0, 0),
    (2, 0, -2, 2, -1, 2, -1, 0, 0, 0),
    (2, 0, -2, 2, -2, 2, 0, 0, 0, 0),
    (2, 0, -2, 2, -2, 2, -2, 2, 0, 0),
    (1, 0, -1, 1, -1, 1, -1, 0, 2, 0),
    (1, 0, -1, 1, -1, 1, -1, 0, 0, 2),
)


def rep(text):
    return representative(parse_class_params(text))


class TestWords:
    def test_type_a(self):
        assert rep_word(parse_class_params("A:beta=4,3,1")) == (1, 2, 3, 5, 6)

    def test_type_c_cuspidal(self):
        assert rep_word(parse_class_params("C:beta=;gamma=2,3,4")) == (
            9, 8, 7, 8, 9, 8, 7, 6, 5, 4, 5, 6, 7, 8, 9, 8, 7, 6, 5, 4, 3, 2, 1)
        assert rep_word(parse_class_params("C:beta=;gamma=1,3")) == (4, 3, 4, 3, 2, 1)

    def test_single_block_is_sn_down_to_s1(self):
        assert rep_word(parse_class_params("C:beta=;gamma=4")) == (4, 3, 2, 1)

    def test_u_words(self):
        assert u_word(0, 10) == (10,)
        assert u_word(1, 10) == (10, 9)
        assert u_word(2, 10) == (8, 10, 9, 8)
        assert u_word(3, 10) == (7, 8, 10, 9, 8, 7)

    def test_d10_word_factorisation(self):
        n = 10
        expected = (u_word(1, n) + u_word(2, n) + u_word(3, n) + (6,) + u_word(5, n) + (4,)
                    + u_word(7, n) + (2, 1))
        assert word_delta((1, 1, 1, 2, 2, 3), n) == expected

    def test_d10_matrix(self):
        w = rep("D:beta=;delta=1,1,1,2,2,3")
        assert w.id_minus() == D10_ID_MINUS_W

    def test_all_ones_delta_is_minus_identity(self):
        for n in (4, 6, 8):
            w = rep(f"D:beta=;delta={','.join(['1'] * n)}")
            assert w.matrix == mat_neg(identity(n))

    def test_sign_swaps_last_two_generators(self):
        assert rep_word(parse_class_params("D:beta=2,2;delta=;sign=-")) == (1, 4)
        assert rep_word(parse_class_params("D:beta=2,2;delta=;sign=+")) == (1, 3)

    def test_exceptional_rows(self):
        p = parse_class_params("G2:row=6")
        assert representative(p).matrix == from_word(root_datum("G2"), exceptional_table("G2")[5]["word"]).matrix


class TestTables:
    @pytest.mark.parametrize("t,count", [("G2", 6), ("F4", 25), ("E6", 25), ("E7", 60), ("E8", 112)])
    def test_row_counts(self, t, count):
        assert len(exceptional_table(t)) == count

    def test_first_rows_are_identity(self):
        for t in ("G2", "F4", "E6", "E7", "E8"):
            row = exceptional_table(t)[0]
            assert row["word"] == "" and all(x == 0 for x in row["snf"])

    def test_g2_rows(self):
        rows = exceptional_table("G2")
        assert [r["snf"] for r in rows] == [[0, 0], [1, 0], [1, 0], [1, 1], [1, 3], [2, 2]]
        assert [r["closure"] for r in rows][-1] == "G2"

    def test_e8_repaired_row(self):
        # the row that needed a missing s_1 restored; its SNF must match the recorded one
        row = exceptional_table("E8")[110]
        assert row["word"][55] == "1"

    def test_table_is_a_copy(self):
        exceptional_table("G2")[0]["word"] = "junk"
        assert exceptional_table("G2")[0]["word"] == ""


class TestEnumeration:
    @pytest.mark.parametrize("t,n,count", [("A", 2, 3), ("A", 4, 7), ("B", 2, 5), ("C", 2, 5),
                                           ("C", 3, 10), ("B", 4, 20), ("D", 4, 13), ("D", 5, 18)])
    def test_counts(self, t, n, count):
        assert len(all_class_params(t, n)) == count

    def test_order(self):
        assert [str(p) for p in all_class_params("B", 2)] == [
            "B:beta=2;gamma=", "B:beta=1,1;gamma=", "B:beta=1;gamma=1",
            "B:beta=;gamma=1,1", "B:beta=;gamma=2"]
        assert [str(p) for p in all_class_params("D", 4)][:2] == [
            "D:beta=4;delta=;sign=+", "D:beta=4;delta=;sign=-"]

    def test_partitions(self):
        assert list(partitions(4)) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]

    @pytest.mark.parametrize("t,n", [("A", 2), ("A", 3), ("A", 4), ("B", 2), ("B", 3), ("B", 4),
                                     ("C", 2), ("C", 3), ("D", 4), ("D", 5), ("G2", None), ("F4", None)])
    def test_representatives_hit_every_class_once(self, t, n):
        d = root_datum(t, n)
        G = enumerate_group(d)
        cls_of = {}
        for k, c in enumerate(conjugacy_classes(d)):
            for i in c:
                cls_of[G.elements[i]] = k
        params = all_class_params(t, n)
        hit = [cls_of[representative(p).matrix] for p in params]
        assert sorted(hit) == list(range(len(conjugacy_classes(d))))

    @pytest.mark.parametrize("t", ["B", "C", "D"])
    def test_cuspidal_exactly_when_beta_empty(self, t):
        for n in range(4 if t == "D" else 2, 8):
            for p in all_class_params(t, n):
                assert is_cuspidal(representative(p)) == (not p.beta), str(p)

    def test_type_a_cuspidal_only_coxeter(self):
        for n in range(1, 7):
            cusp = [p.beta for p in all_class_params("A", n) if is_cuspidal(representative(p))]
            assert cusp == [(n + 1,)]


class TestParsing:
    @pytest.mark.parametrize("t,n", [("A", 4), ("C", 4), ("D", 6), ("E6", None)])
    def test_roundtrip(self, t, n):
        for p in all_class_params(t, n):
            assert parse_class_params(str(p)) == p

    def test_rank_check(self):
        assert parse_class_params("A:beta=4", rank=3).rank == 3
        with pytest.raises(ClassParamsError):
            parse_class_params("A:beta=4", rank=4)

    @pytest.mark.parametrize("bad", [
        "A:beta=1,3", "A:beta=1", "A:beta=2;gamma=1", "C:beta=1;gamma=3,1", "C:beta=1",
        "D:beta=2,2;delta=", "D:beta=3,1;delta=;sign=+", "D:beta=2;delta=1", "D:beta=1,1;delta=1,2,3",
        "E6:row=26", "E6:row=0", "X:beta=1", "C:beta=2;gamma=0,2", "A:bta=3", "A:beta=x",
    ])
    def test_rejects(self, bad):
        with pytest.raises(ClassParamsError):
            parse_class_params(bad)

    def test_index_sets(self):
        s = index_sets(parse_class_params("C:beta=3,2;gamma=1,3"))
        assert s.j_beta == (0, 3, 5)
        assert s.J_beta == {1, 2, 4}
        assert s.I_beta == {3, 5}
        assert s.J_gamma == {6, 7, 8, 9}
        assert s.I_gamma == {8, 9}

    def test_support_of_type_a_word(self):
        # J_beta is where the cycles live; I_beta collects block ends
        s = index_sets(ClassParams("A", beta=(4, 3, 1)))
        assert s.J_beta == {1, 2, 3, 5, 6}
        assert s.I_beta == {4, 7, 8}
