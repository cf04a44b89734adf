import math

import pgstkit


def test_path_end_pair_is_refuted():
    g = pgstkit.Graph.path(8)
    v = pgstkit.decide(g, 1, 8)
    assert v["status"] == "NO_PGST_CERTIFIED"
    assert v["p_plus"] == "x^4 - x^3 - 3x^2 + 2x + 1"
    assert v["p_minus"] == "x^4 + x^3 - 3x^2 - 2x + 1"
    assert v["certificate"]["kind"] == "odd_degree_pair"


def test_ratio_rule_certifies_p4():
    g = pgstkit.Graph.path(4)
    v = pgstkit.decide(g, 1, 4)
    assert v["status"] == "PGST_CERTIFIED"
    assert v["certificate"]["ratio_plus"] == "1/2"
    assert v["certificate"]["ratio_minus"] == "-1/2"


def test_cospectrality_and_relative_pair():
    g = pgstkit.Graph.path(8)
    r = pgstkit.cospectrality(g, 1, 2)
    assert not r["cospectral"]
    p = pgstkit.relative_pair(g, 1, 8)
    assert p["p_zero"] == "1"


def test_path_classification():
    c = pgstkit.classify_path(11, 2, 10)
    assert c["pgst"] and c["clause"] == "c" and c["t"] == 2 and c["p"] == 3
    assert not pgstkit.classify_path(8, 1, 8)["pgst"]


def test_modified_path():
    assert pgstkit.classify_modified_path(4, 1)["verdict"] == "PGST"
    assert pgstkit.classify_modified_path(6, 2)["verdict"] == "NO_PGST"
    plus, minus = pgstkit.modified_path_quotients(4, 1)
    assert plus == "x^3 + (-1)x^2 + (-w^2 - 1)x + (w^2)"
    g = pgstkit.modified_path_graph(4, 1, "2/3")
    assert pgstkit.decide(g, 2, 5)["status"] == "PGST_CERTIFIED"


def test_involution_quotients_multiply_to_char_poly():
    g = pgstkit.Graph.cycle(4)
    sigmas = pgstkit.involutions(g)
    assert sigmas
    plus, minus = pgstkit.quotient_polys(g, sigmas[0])
    assert plus and minus


def test_simulator_hits_known_peak():
    g = pgstkit.Graph.path(2)
    assert abs(pgstkit.fidelity(g, 1, 2, math.pi / 2) - 1.0) < 1e-12
    t, f = pgstkit.max_fidelity(g, 1, 2, 4.0)
    assert f > 0.999999999


def test_census_counts():
    levels = pgstkit.census_counts(4)
    got = {lv["n"]: (lv["connected"], lv["hit_graphs"]) for lv in levels}
    assert got == {2: (1, 1), 3: (2, 0), 4: (6, 3)}


def test_corpus_all_pass():
    results = pgstkit.corpus_check()
    assert len(results) == 10
    assert all(ok for _, ok in results)


def test_document_round_trip():
    text = '{"edges":[[1,2,"1"],[2,3,"1/2"]],"n":3,"name":"tiny","pair":[1,3]}'
    doc = pgstkit.parse_document(text)
    assert doc["name"] == "tiny"
    assert doc["pair"] == (1, 3)
    out = pgstkit.serialize_document(doc["graph"], doc["name"], doc["pair"])
    assert out == text


def test_document_error_has_position():
    try:
        pgstkit.parse_document("{bad")
    except pgstkit.DocumentError as e:
        assert "line" in str(e)
    else:
        assert False, "expected DocumentError"
