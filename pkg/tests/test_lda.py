import numpy as np
import pytest
from sklearn.base import clone

from itemset_synth import Dataset, LDAGenerator, LdaModel, ModelDegeneracyError, choose_k, learn_lda
from itemset_synth.lda import generate_dataset_lda, generate_transaction_lda
from itemset_synth.models import model_from_dict


def _one_hot_model(lengths, word=0, n_words=3):
    phi = np.zeros((1, n_words))
    phi[0, word] = 1.0
    return LdaModel(K=1, alpha=1.0, beta=0.01, doc_topic=np.ones((len(lengths), 1)),
                    topic_word=phi, lengths=lengths, alphabet=tuple(range(10, 10 + n_words)))


def test_choose_k(d4):
    assert choose_k(d4, 0.5) == 6
    assert choose_k(d4, 0.25) == 7
    with pytest.raises(ModelDegeneracyError, match="lower minsup"):
        choose_k(d4, 1.0)


def test_normalization_two_documents():
    m = learn_lda(Dataset([[1], [2]]), 2, iterations=50, random_state=0)
    assert m.doc_topic.shape == (2, 2) and m.topic_word.shape == (2, 2)
    assert np.allclose(m.doc_topic.sum(axis=1), 1.0, atol=1e-12)
    assert np.allclose(m.topic_word.sum(axis=1), 1.0, atol=1e-12)


def test_single_item_alphabet():
    m = learn_lda(Dataset([[4]] * 5), 3, iterations=20, random_state=0)
    assert m.topic_word.tolist() == [[1.0]] * 3


def test_planted_blocks():
    # items 1-5 always together, items 6-10 always together
    d = Dataset([[1, 2, 3, 4, 5], [6, 7, 8, 9, 10]] * 100)
    m = learn_lda(d, 2, iterations=300, random_state=1)
    mass_a = m.topic_word[:, :5].sum(axis=1)
    assert np.all(np.maximum(mass_a, 1 - mass_a) >= 0.8)
    assert np.argmax(mass_a) != np.argmax(1 - mass_a)


def test_learn_is_seeded():
    d = Dataset([[1, 2], [2, 3], [1, 3, 4], [4, 5]])
    a = learn_lda(d, 2, iterations=30, random_state=5)
    b = learn_lda(d, 2, iterations=30, random_state=5)
    assert np.array_equal(a.doc_topic, b.doc_topic)
    assert np.array_equal(a.topic_word, b.topic_word)


def test_count_checks_pass():
    d = Dataset([[1, 2, 3], [2, 3], [3, 4, 5], [1, 5]])
    learn_lda(d, 3, iterations=40, random_state=2, check_counts=True)


def test_default_alpha():
    m = learn_lda(Dataset([[1, 2], [2, 3]]), 5, iterations=5, random_state=0)
    assert m.alpha == 10.0 and m.beta == 0.01


def test_rejects_empty_transactions():
    with pytest.raises(ValueError, match="empty"):
        learn_lda(Dataset([[1], []]), 2, iterations=5)
    with pytest.raises(ValueError):
        LDAGenerator(n_topics=2).fit([[1], []])


def test_one_hot_generation():
    m = _one_hot_model([1], word=1)
    rng = np.random.default_rng(0)
    assert {generate_transaction_lda(m, 0, rng) for _ in range(50)} == {((11,), False)}


def test_cap_fires_on_unreachable_length():
    m = _one_hot_model([2], word=0)
    items, capped = generate_transaction_lda(m, 0, np.random.default_rng(0))
    assert capped and items == (10,)
    gen = LDAGenerator.from_model(m)
    gen.sample(4, random_state=1)
    assert gen.n_warnings_ == 4


def test_full_length_gives_full_alphabet():
    phi = np.full((2, 6), 1 / 6)
    m = LdaModel(K=2, alpha=1.0, beta=0.01, doc_topic=[[0.5, 0.5]], topic_word=phi,
                 lengths=[6], alphabet=tuple(range(6)))
    for seed in range(20):
        items, capped = generate_transaction_lda(m, 0, np.random.default_rng(seed))
        assert items == tuple(range(6)) and not capped


def test_document_cycling():
    d = Dataset([[1], [1, 2, 3], [2, 4], [1, 2, 3, 4, 5]])
    gen = LDAGenerator(n_topics=2, n_iter=50, burn_in=10, random_state=3).fit(d)
    syn = gen.sample(2 * len(d), random_state=4)
    assert [len(t) for t in syn] == [len(t) for t in d] * 2
    assert gen.n_warnings_ == 0


def test_uniform_policy():
    d = Dataset([[1], [1, 2, 3, 4]])
    gen = LDAGenerator(n_topics=2, n_iter=30, burn_in=5, doc_policy="uniform", random_state=3).fit(d)
    sizes = {len(t) for t in gen.sample(200, random_state=1)}
    assert sizes == {1, 4}
    with pytest.raises(ValueError):
        LDAGenerator(n_topics=2, doc_policy="shuffle").fit(d)


def test_index_out_of_range():
    with pytest.raises(IndexError):
        generate_transaction_lda(_one_hot_model([1]), 1, np.random.default_rng(0))


def test_model_validation():
    with pytest.raises(ValueError, match="lengths"):
        _one_hot_model([4])
    with pytest.raises(ValueError, match="M x K"):
        LdaModel(K=2, alpha=1.0, beta=0.01, doc_topic=[[1.0]], topic_word=[[1.0], [1.0]],
                 lengths=[1], alphabet=(1,))


def test_generator_minsup_and_roundtrip(d4):
    gen = LDAGenerator(minsup=0.5, n_iter=40, burn_in=10, random_state=9).fit(d4)
    assert gen.model_.K == 6
    assert gen.model_.provenance["minsup"] == 0.5
    back = model_from_dict(gen.model_.to_dict())
    assert generate_dataset_lda(back, 30, random_state=2) == gen.sample(30, random_state=2)
    assert clone(gen).get_params() == gen.get_params()
    with pytest.raises(ValueError, match="n_topics or minsup"):
        LDAGenerator().fit(d4)


def test_generation_deterministic_across_threads(d4):
    gen = LDAGenerator(n_topics=3, n_iter=40, random_state=1).fit(d4)
    assert gen.sample(400, random_state=8, n_jobs=1) == gen.sample(400, random_state=8, n_jobs=6)
