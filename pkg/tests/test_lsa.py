import numpy as np
import pytest

from sumforge.errors import InvalidParameter, NoSentences
from sumforge.lsa import build_term_sentence_matrix, summarize_lsa, svd
from sumforge.termstats import IdfTable
from sumforge.textprep import document_from_texts, sentence_from_text


def ones(*words):
    return IdfTable({w: 1.0 for w in words}, 1)


class TestMatrix:
    def test_single(self):
        m = build_term_sentence_matrix([sentence_from_text("weld weld")], ones("weld"))
        np.testing.assert_array_equal(m.entries, [[2.0]])

    def test_disjoint_diagonal(self):
        s = [sentence_from_text("weld"), sentence_from_text("steel", index=1)]
        m = build_term_sentence_matrix(s, ones("weld", "steel"))
        assert m.terms == ("steel", "weld")
        np.testing.assert_array_equal(m.entries, [[0, 1], [1, 0]])

    def test_layout(self):
        s = [sentence_from_text("a b"), sentence_from_text("b c", index=1)]
        m = build_term_sentence_matrix(s, ones("a", "b", "c"))
        assert m.terms == ("a", "b", "c") and m.n_sentences == 2
        np.testing.assert_array_equal(m.entries, [[1, 0], [1, 1], [0, 1]])

    def test_positive_iff_occurs(self, prepared_doc):
        from sumforge.termstats import compute_idf
        m = build_term_sentence_matrix(prepared_doc.sentences, compute_idf(prepared_doc.sentences))
        row = {t: i for i, t in enumerate(m.terms)}
        for j, s in enumerate(prepared_doc.sentences):
            present = {t.surface for t in s.content_tokens}
            assert {m.terms[i] for i in np.flatnonzero(m.entries[:, j] > 0)} == present
        assert np.all(m.entries.sum(axis=1) > 0)
        assert len(row) == m.entries.shape[0]

    def test_empty(self):
        with pytest.raises(NoSentences):
            build_term_sentence_matrix([sentence_from_text("the", {"the"})], ones())


class TestSvd:
    def test_diagonal(self):
        np.testing.assert_allclose(svd(np.array([[2.0, 0.0], [0.0, 1.0]])).S, [2.0, 1.0])

    def test_rank_one(self):
        # sigma_1 = Frobenius norm = sqrt(1 + 4 + 4 + 16) = 5
        np.testing.assert_allclose(svd(np.array([[1.0, 2.0], [2.0, 4.0]])).S, [5.0, 0.0], atol=1e-8)

    def test_against_gram_eigenvalues(self):
        rng = np.random.default_rng(0)
        for _ in range(50):
            A = rng.standard_normal((8, 6))
            expected = np.sqrt(np.clip(np.linalg.eigvalsh(A.T @ A), 0, None))[::-1]
            np.testing.assert_allclose(svd(A).S, expected, atol=1e-8)

    def test_sign_convention(self):
        rng = np.random.default_rng(1)
        for _ in range(50):
            f = svd(rng.standard_normal((5, 7)))
            for row in f.Vt:
                assert row[np.argmax(np.abs(row))] >= 0

    def test_sign_stable_under_negation(self):
        A = np.random.default_rng(2).standard_normal((6, 4))
        np.testing.assert_allclose(np.abs(svd(A).Vt), np.abs(svd(-A).Vt), atol=1e-12)
        np.testing.assert_allclose(svd(A).Vt, svd(-A).Vt, atol=1e-12)

    def test_rejects_empty(self):
        with pytest.raises(NoSentences):
            svd(np.zeros((0, 3)))


class TestSummarize:
    def test_single(self):
        doc = document_from_texts(["Weld."])
        assert summarize_lsa(doc, k=1).sentence_indices == (0,)

    def test_dominant_topic(self):
        doc = document_from_texts(["Steel.", "Weld weld."])
        assert summarize_lsa(doc, ones("weld", "steel"), k=1).sentence_indices == (1,)

    def test_cycles_topics(self):
        # rank-1 matrix: one usable topic, the budget still fills
        doc = document_from_texts(["weld steel.", "weld steel.", "weld steel."])
        assert summarize_lsa(doc, k=3).sentence_indices == (0, 1, 2)

    def test_size_and_order(self, prepared_doc):
        for k in (1, 5, 11, 500):
            s = summarize_lsa(prepared_doc, k=k)
            assert len(s) == min(k, len(prepared_doc.sentences))
            assert list(s.sentence_indices) == sorted(set(s.sentence_indices))

    def test_invalid_budget(self, prepared_doc):
        with pytest.raises(InvalidParameter):
            summarize_lsa(prepared_doc, k=0)

    def test_permutation(self):
        texts = ["Weld steel plate tool.", "Grain size zone weld.", "Tool pin wear steel.",
                 "Hardness zone grain heat.", "Copper aluminum interface layer.", "Heat input tool speed."]
        doc = document_from_texts(texts)
        chosen = {texts[i] for i in summarize_lsa(doc, k=3).sentence_indices}
        perm = [3, 0, 5, 1, 4, 2]
        pdoc = document_from_texts([texts[i] for i in perm])
        pchosen = {texts[perm[i]] for i in summarize_lsa(pdoc, k=3).sentence_indices}
        assert chosen == pchosen
