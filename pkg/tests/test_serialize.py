import json

from hypothesis import given, strategies as st

from peakalg.exactmath import Cyclo, cyclo_gen
from peakalg.mrbsym import bsym_space, solve_bsym_zetas
from peakalg.peakmodel import build_peak_algebra
from peakalg.reptheory import q_cartan
from peakalg.serialize import (cartan_from_json, element_from_json, element_to_json,
                               element_to_latex, element_to_text, term_key)
from peakalg.symcore import zassenhaus_zetas


def test_zeta_text_order():
    text = element_to_text(zassenhaus_zetas(4)[4].terms)
    assert text.startswith("S_4 - 1/2*S^2.2")
    assert text.endswith("- 1/4*S^1.1.1.1")


def test_latex_form():
    tex = element_to_latex(zassenhaus_zetas(2)[2].terms)
    assert tex == r"S_{2} - \frac{1}{2} S^{11}"


@given(st.integers(1, 6))
def test_element_json_round_trip(n):
    terms = dict(zassenhaus_zetas(n)[n].terms)
    data = json.loads(json.dumps(element_to_json(terms, n)))
    assert element_from_json(data) == terms
    labels = [t["label"] for t in data["terms"]]
    assert len(labels) == len(set(labels))


def test_headed_labels_round_trip():
    zetas, tildes = solve_bsym_zetas(3)
    terms = bsym_space(3).coordinates(tildes[3])
    assert element_from_json(element_to_json(terms, 3)) == terms
    assert "S#^" in element_to_text(terms)


def test_cyclotomic_coefficients_round_trip():
    w = cyclo_gen(5)
    terms = {(2, 1): w + 1, (3,): w * w - 2}
    data = element_to_json(terms, 3, "QQ(zeta_5)")
    back = element_from_json(data)
    assert back == terms and isinstance(back[(2, 1)], Cyclo)


def test_cartan_json_round_trip():
    C = q_cartan(build_peak_algebra(6, 2).algebra)
    assert cartan_from_json(json.loads(json.dumps(C.to_json()))) == C


def test_term_key_sorts_by_length():
    assert sorted([(1, 1), (2,), (1, -1)], key=term_key) == [(2,), (1, -1), (1, 1)]
