import pytest
from hypothesis import given
from hypothesis import strategies as st

from jimm.cf import DomainError
from jimm.matrix import IDENTITY, Mat
from jimm.pgl2 import (
    GENERATORS,
    PRESENTATIONS,
    Word,
    jimm_matrix,
    jimm_word,
    matrix_to_word,
    substitute,
    word_to_matrix,
)
from jimm.verify import MATRIX_TABLE

letters = st.sampled_from(["S", "L", "L2", "V", "T", "Ttilde", "U", "K"])
words = st.lists(st.tuples(letters, st.integers(-3, 3).filter(bool)), max_size=12).map(Word)
unimodular = st.builds(word_to_matrix, words)


class TestWords:
    def test_parse_and_print(self):
        w = Word.parse("T^-1 T~ S V L2 T~^2")
        assert str(w) == "T^-1 T~ S V L2 T~^2"

    def test_torsion_reduces(self):
        assert Word.parse("S S") == Word()
        assert Word.parse("L L L") == Word()
        assert Word.parse("T T^-1 U") == Word.parse("U")

    def test_unknown_generator(self):
        with pytest.raises(ValueError):
            Word.parse("Q")

    @pytest.mark.parametrize("g", ["S", "U", "V", "K"])
    def test_involutions(self, g):
        assert (GENERATORS[g] @ GENERATORS[g]).is_identity()

    def test_order_three(self):
        assert (GENERATORS["L"] ** 3).is_identity()


class TestDecomposition:
    @given(unimodular, st.sampled_from(["floor", "ceil"]))
    def test_round_trip(self, m, strategy):
        assert word_to_matrix(matrix_to_word(m, strategy)) == m

    def test_rejects_non_unimodular(self):
        with pytest.raises(DomainError):
            matrix_to_word(Mat(2, 0, 0, 1))


class TestAutomorphism:
    @pytest.mark.parametrize("m, expected", MATRIX_TABLE, ids=[str(m) for m, _ in MATRIX_TABLE])
    @pytest.mark.parametrize("strategy", ["floor", "ceil"])
    def test_table(self, m, expected, strategy):
        assert jimm_matrix(m, strategy) == expected

    def test_generator_images(self):
        assert jimm_matrix(GENERATORS["S"]) == GENERATORS["V"]
        assert jimm_matrix(GENERATORS["T"]) == GENERATORS["Ttilde"]
        for g in ("U", "K", "L", "L2"):
            assert jimm_matrix(GENERATORS[g]) == GENERATORS[g]

    def test_t_squared(self):
        assert jimm_matrix(GENERATORS["T"] ** 2) == Mat(2, 1, 1, 1)

    @given(words)
    def test_word_level_agrees_with_matrix_level(self, w):
        assert word_to_matrix(jimm_word(w)) == jimm_matrix(word_to_matrix(w))

    @given(unimodular)
    def test_involution(self, m):
        assert jimm_matrix(jimm_matrix(m)) == m

    @given(unimodular, unimodular)
    def test_homomorphism(self, a, b):
        assert jimm_matrix(a @ b) == jimm_matrix(a) @ jimm_matrix(b)

    @pytest.mark.parametrize("pres", PRESENTATIONS, ids=lambda p: "".join(p["generators"]))
    def test_relators_survive_substitution(self, pres):
        for rel in pres["relators"]:
            assert word_to_matrix(Word.parse(rel)) == IDENTITY
            assert word_to_matrix(substitute(rel, pres["images"])) == IDENTITY
