import pytest

from pyknotslopes.diagram import (ArcLabelError, ArcSuccessionError, BraidParseError, BraidWord,
                                  NotAKnotError, PDDiagram, PDFormatError, PretzelParameterError,
                                  UnionFind, braid_to_pd, crossing_signs, is_alternating, mirror,
                                  parse_braid, parse_pd, pretzel_name, pretzel_pd, serialize_pd,
                                  stats)

TREFOIL_PD = [(1, 5, 2, 4), (5, 3, 6, 2), (3, 1, 4, 6)]


def test_union_find_groups():
    uf = UnionFind()
    for label in range(1, 7):
        uf.add(label)
    uf.union(4, 2)
    uf.union(6, 4)
    uf.union(5, 3)
    assert uf.find(6) == 2
    assert uf.groups() == [[1], [2, 4, 6], [3, 5]]


def test_parse_braid():
    assert parse_braid("2: 1 1 1") == BraidWord(2, (1, 1, 1))
    assert parse_braid("1, -2, 1") == BraidWord(3, (1, -2, 1))
    assert parse_braid("4:") == BraidWord(4, ())
    assert str(parse_braid("3: 1 -2")) == "3: 1 -2"


@pytest.mark.parametrize("text", ["2: 1 0", "x: 1", "2: 3", "2: a", "0: "])
def test_parse_braid_rejects(text):
    with pytest.raises(BraidParseError):
        parse_braid(text)


def test_braid_permutation():
    assert parse_braid("2: 1 1 1").closure_components() == 1
    assert parse_braid("2: 1 1").closure_components() == 2
    assert parse_braid("3: 1 2").permutation() == (2, 0, 1)
    assert parse_braid("3: 1").closure_components() == 2


def test_trefoil_braid_pd(trefoil):
    assert list(trefoil) == TREFOIL_PD
    assert trefoil.is_knot()
    assert crossing_signs(trefoil) == [1, 1, 1]
    assert stats(trefoil).to_json() == {"c": 3, "c_plus": 3, "c_minus": 0, "w": 3, "components": 1}


def test_kink_pd(kink):
    assert list(kink) == [(1, 1, 2, 2)]
    assert crossing_signs(kink) == [1]


def test_negative_letters_give_negative_crossings():
    d = braid_to_pd(parse_braid("2: -1 -1 -1"))
    assert crossing_signs(d) == [-1, -1, -1]


def test_figure_eight_signs(figure_eight):
    st = stats(figure_eight)
    assert (st.c_plus, st.c_minus, st.w) == (2, 2, 0)
    assert figure_eight.is_knot()


def test_untouched_strands_become_loops():
    d = braid_to_pd(parse_braid("3: 1 1 1"))
    assert d.loops == 1
    assert d.componentCount == 2
    assert not d.is_knot()


def test_hopf_link_is_not_a_knot():
    d = braid_to_pd(parse_braid("2: 1 1"))
    assert d.componentCount == 2
    with pytest.raises(NotAKnotError):
        d.require_knot()


def test_unknot_and_empty():
    assert PDDiagram.unknot().is_knot()
    assert len(PDDiagram.unknot()) == 0
    assert PDDiagram.empty().componentCount == 0


def test_knot_atlas_codes():
    d = PDDiagram([(4, 2, 5, 1), (8, 6, 1, 5), (6, 3, 7, 4), (2, 7, 3, 8)])
    assert crossing_signs(d) == [1, 1, -1, -1]
    d = PDDiagram([(1, 4, 2, 5), (3, 6, 4, 1), (5, 2, 6, 3)])
    assert crossing_signs(d) == [-1, -1, -1]


@pytest.mark.parametrize("crossings, error", [
    ([(1, 2, 3)], PDFormatError),
    ([(1, 2, 3, 0)], PDFormatError),
    ([(1, "a", 2, 2)], PDFormatError),
    ([(1, 1, 2, 3)], ArcLabelError),
    ([(1, 4, 2, 5), (3, 6, 4, 1), (5, 2, 6, 9), (7, 7, 9, 3)], ArcLabelError),
    ([(2, 5, 1, 4), (5, 3, 6, 2), (3, 1, 4, 6)], ArcSuccessionError),
])
def test_invalid_pd(crossings, error):
    with pytest.raises(error):
        PDDiagram(crossings)


def test_parse_pd_inputs(trefoil):
    text = '{"crossings": [[1, 5, 2, 4], [5, 3, 6, 2], [3, 1, 4, 6]], "name": "3_1r"}'
    d = parse_pd(text.encode("utf-8"))
    assert d == trefoil
    assert d.name == "3_1r"
    assert parse_pd(b"\xef\xbb\xbf[[1, 5, 2, 4], [5, 3, 6, 2], [3, 1, 4, 6]]", name="x") == trefoil
    assert parse_pd('{"crossings": [], "loops": 1}') == PDDiagram.unknot()


@pytest.mark.parametrize("text", ["not json", '{"arcs": []}', '{"crossings": 3}',
                                  '{"crossings": [], "loops": "1"}'])
def test_parse_pd_rejects(text):
    with pytest.raises(PDFormatError):
        parse_pd(text)


def test_serialize_pd(trefoil):
    assert parse_pd(serialize_pd(trefoil)) == trefoil


def test_mirror(trefoil, figure_eight):
    m = mirror(trefoil)
    assert crossing_signs(m) == [-1, -1, -1]
    assert m.name == "mirror(trefoil)"
    assert mirror(m) == trefoil
    assert stats(mirror(figure_eight)).w == 0


def test_alternation(trefoil, figure_eight):
    assert is_alternating(trefoil)
    assert is_alternating(figure_eight)
    assert not is_alternating(braid_to_pd(parse_braid("3: 1 1 1 2 2 2")))
    assert is_alternating(pretzel_pd([3, 3, 3]))
    assert not is_alternating(pretzel_pd((-2, 3, 5)))


def test_pretzel_signs():
    assert pretzel_name((-2, 3, 5)) == "P(-2,3,5)"
    d = pretzel_pd((-2, 3, 5))
    assert d.is_knot()
    assert d.name == "P(-2,3,5)"
    assert stats(d).c_plus == 10
    st = stats(pretzel_pd((-2, 3, -5)))
    assert (st.c_plus, st.c_minus) == (5, 5)
    assert stats(pretzel_pd((3, 3, 3))).c_minus == 9


@pytest.mark.parametrize("params", [(3,), (2, 0, 3), (2, 1.5)])
def test_pretzel_rejects(params):
    with pytest.raises(PretzelParameterError):
        pretzel_pd(params)
