import pytest

from peakalg import lemmas, peakcore
from peakalg.lemmas import run_all, unshuffle_counts


def test_unshuffle_counts_small():
    # S_2 * S^{11}: the word 11 splits as (11 | ) only for part sums (2)
    assert unshuffle_counts((2,), (1, 1)) == {(1, 1): 1}
    assert sum(unshuffle_counts((1, 1), (1, 1)).values()) == 2


@pytest.mark.parametrize("fn,args", [
    (lemmas.lemma_s_times_zeta, (5,)), (lemmas.lemma_zeta_products, (5,)),
    (lemmas.lemma_gamma_primitive, (5,)), (lemmas.lemma_level_coproduct, (5, 3)),
    (lemmas.lemma_t_times_level_zeta, (5, 2)), (lemmas.lemma_t_times_level_zeta, (5, 3)),
    (lemmas.lemma_exchange, (4,)), (lemmas.lemma_sigma_sharp, (4,)),
    (lemmas.prop_bsym_products, (3,)), (lemmas.chow_conditions, (3,)),
    (lemmas.lemma_zeta_projections, (4,)),
])
def test_lemma(fn, args):
    rep = fn(*args)
    assert rep.passed, rep.failures


def test_unnormalized_t_fails(monkeypatch):
    raw = peakcore.t_product
    monkeypatch.setattr(peakcore, "t_product", lambda lab, r: raw(lab, r, normalized=False))
    assert not lemmas.lemma_t_times_level_zeta(5, 2).passed


def test_run_all_small():
    reps = run_all(4)
    assert reps and all(r.passed for r in reps)
    assert all(r.to_json()["cases"] > 0 for r in reps)
