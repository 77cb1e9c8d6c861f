from itertools import permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from specht.tableaux import (
    IncomparableError,
    Multipartition,
    MultipartitionParseError,
    Node,
    Permutation,
    StandardTableau,
    addable_nodes,
    count_standard_tableaux,
    dominates,
    initial_tableau,
    multipartitions,
    parse_multipartition,
    removable_nodes,
    restrict_tableau,
    restriction_partition,
    standard_tableaux,
    tableau_dominates,
    tableau_permutation,
)

P = parse_multipartition


@st.composite
def shapes(draw, max_n=6, max_level=3):
    level = draw(st.integers(1, max_level))
    n = draw(st.integers(0, max_n))
    return draw(st.sampled_from(multipartitions(n, level)))


# oracles -------------------------------------------------------------------


def brute_removable(lam):
    out = []
    for node in lam.nodes:
        try:
            lam.remove(node)
        except ValueError:
            continue
        out.append(node)
    return sorted(out, reverse=True)


def brute_standard_count(lam):
    """Count fillings directly: try every bijection of 1..n onto the nodes."""
    nodes = lam.nodes
    count = 0
    for perm in permutations(range(len(nodes))):
        t = StandardTableau.from_nodes([nodes[i] for i in perm], lam)
        count += t.is_standard()
    return count


# parsing ---------------------------------------------------------------------


def test_parse_three_components():
    lam = P("(3,2|1,1,1|2,2)")
    assert lam.level == 3
    assert lam.components[1] == (1, 1, 1)
    assert lam.size == 12  # 3+2 + 1+1+1 + 2+2


def test_parse_exponent_and_empty():
    assert P("(3,2|1^3|2^2)") == P("(3,2|1,1,1|2,2)")
    lam = P("(|1)")
    assert lam.components == ((), (1,)) and lam.size == 1
    assert P("(∅|1)") == lam


def test_parse_rejects_increasing_parts():
    with pytest.raises(ValueError):
        P("(2,3)")


@pytest.mark.parametrize("text", ["2,1", "(2,1", "(a)", "(2,,1)", "(0)"])
def test_parse_errors(text):
    with pytest.raises(ValueError):
        P(text)


def test_parse_error_has_position():
    with pytest.raises(MultipartitionParseError) as info:
        P("(2,x)")
    assert info.value.position >= 1


@given(shapes())
def test_render_round_trip(lam):
    assert P(lam.render()) == lam
    assert P(lam.render(exponents=False)) == lam


# dominance and nodes ----------------------------------------------------------


def test_dominance_examples():
    assert dominates(P("(2)"), P("(1,1)"))
    assert dominates(P("(1|)"), P("(|1)"))
    assert not dominates(P("(|1)"), P("(1|)"))
    assert dominates(P("(2,1)"), P("(2,1)"))
    with pytest.raises(IncomparableError):
        dominates(P("(2)"), P("(1)"))


def test_removable_examples():
    assert removable_nodes(P("(3,2|1,1,1|2,2)")) == [(3, 2, 2), (2, 3, 1), (1, 2, 2), (1, 1, 3)]
    assert removable_nodes(P("(1|1)")) == [(2, 1, 1), (1, 1, 1)]
    assert removable_nodes(Multipartition.empty(2)) == []


def test_addable_examples():
    assert addable_nodes(P("(1)")) == [(1, 1, 2), (1, 2, 1)]
    assert addable_nodes(P("(|)")) == [(1, 1, 1), (2, 1, 1)]
    assert addable_nodes(P("(2,1)")) == [(1, 1, 3), (1, 2, 2), (1, 3, 1)]


@given(shapes())
def test_removable_matches_brute_force(lam):
    assert removable_nodes(lam) == brute_removable(lam)


@given(shapes())
def test_add_then_remove_round_trips(lam):
    for node in addable_nodes(lam):
        assert lam.add(node).remove(node) == lam
    for node in removable_nodes(lam):
        assert node in addable_nodes(lam.remove(node))


@given(shapes())
def test_addable_count(lam):
    row_ends = sum(len(set(c)) for c in lam.components)
    assert len(addable_nodes(lam)) == row_ends + lam.level


@given(shapes(max_n=7))
def test_mu_chain_decreases_in_dominance(lam):
    mus = [lam.remove(A) for A in removable_nodes(lam)]
    for a, b in zip(mus, mus[1:]):
        assert dominates(a, b) and a != b


def test_multipartition_enumeration_order():
    got = [m.render(exponents=False) for m in multipartitions(2, 2)]
    assert got == ["(2|)", "(1,1|)", "(1|1)", "(|2)", "(|1,1)"]
    assert [m.render() for m in multipartitions(0, 1)] == ["()"]


# tableaux ------------------------------------------------------------------


def test_standard_tableaux_examples():
    assert len(standard_tableaux(P("(2,1)"))) == 2
    assert len(standard_tableaux(P("(1|1)"))) == 2
    assert len(standard_tableaux(P("(5)"))) == 1


@given(shapes(max_n=6))
@settings(max_examples=40)
def test_enumeration_matches_hook_formula(lam):
    tabs = standard_tableaux(lam)
    assert len(set(tabs)) == len(tabs) == count_standard_tableaux(lam)
    assert all(t.is_standard() for t in tabs)


@pytest.mark.parametrize("text", ["(2,1)", "(2|1)", "(1|1|1)", "(2,2)", "(3,1|)"])
def test_hook_formula_against_brute_force(text):
    assert count_standard_tableaux(P(text)) == brute_standard_count(P(text))


def test_initial_tableau_examples():
    t = initial_tableau(P("(2,1)"))
    assert t.rows == (((1, 2), (3,)),)
    t = initial_tableau(P("(1|1)"))
    assert t.position(1).comp == 1 and t.position(2).comp == 2
    assert initial_tableau(Multipartition.empty()).size == 0


@given(shapes(max_n=6))
@settings(max_examples=40)
def test_basis_order_extends_dominance(lam):
    tabs = standard_tableaux(lam)
    assert tabs[0] == initial_tableau(lam)
    for i, s in enumerate(tabs):
        assert tableau_dominates(tabs[0], s)
        for t in tabs[:i]:
            # anything dominating s must come before it
            assert not (tableau_dominates(s, t) and s != t)


def test_tableau_dominance_example():
    t1, t2 = standard_tableaux(P("(2,1)"))
    assert t1.rows == (((1, 2), (3,)),)
    assert tableau_dominates(t1, t2) and not tableau_dominates(t2, t1)
    assert tableau_dominates(t2, t2)


def test_restrict_examples():
    t = initial_tableau(P("(2,1)"))
    assert restrict_tableau(t, 3) == t
    assert restrict_tableau(t, 2).shape == P("(2)")
    assert restrict_tableau(t, 0).size == 0
    with pytest.raises(ValueError):
        restrict_tableau(t, 4)


@given(shapes(max_n=6), st.data())
@settings(max_examples=40)
def test_restriction_is_standard_at_every_m(lam, data):
    t = data.draw(st.sampled_from(standard_tableaux(lam)))
    for m in range(lam.size + 1):
        s = restrict_tableau(t, m)
        assert s.is_standard() and s.size == m and s.shape.level == lam.level


def test_restriction_partition_examples():
    parts = restriction_partition(P("(2,1)"))
    assert {k.render(): len(v) for k, v in parts.items()} == {"(1^2)": 1, "(2)": 1}
    assert [len(v) for v in restriction_partition(P("(1|1)")).values()] == [1, 1]
    assert list(restriction_partition(P("(2)"))) == [P("(1)")]


@given(shapes(max_n=6, max_level=3))
@settings(max_examples=60)
def test_restriction_bijection(lam):
    if lam.size == 0:
        return
    parts = restriction_partition(lam)
    assert set(parts) == {lam.remove(A) for A in removable_nodes(lam)}
    assert sum(len(v) for v in parts.values()) == count_standard_tableaux(lam)
    for mu, tabs in parts.items():
        down = [restrict_tableau(t, lam.size - 1) for t in tabs]
        assert sorted(map(str, down)) == sorted(map(str, standard_tableaux(mu)))


# permutations -------------------------------------------------------------------


def test_tableau_permutation_examples():
    lam = P("(2,1)")
    w, word = tableau_permutation(initial_tableau(lam))
    assert w == Permutation.identity(3) and word == []
    t = StandardTableau(lam, (((1, 3), (2,)),))
    w, word = tableau_permutation(t)
    assert w == Permutation.simple(2, 3) and word == [2]
    t = StandardTableau(P("(1|1)"), (((2,),), ((1,),)))
    assert tableau_permutation(t)[1] == [1]


@given(shapes(max_n=6), st.data())
@settings(max_examples=60)
def test_reduced_word_reproduces_tableau(lam, data):
    t = data.draw(st.sampled_from(standard_tableaux(lam)))
    w, word = tableau_permutation(t)
    assert len(word) == w.length()
    assert Permutation.from_word(word, lam.size) == w
    s = initial_tableau(lam)
    for r in word:
        s = StandardTableau.from_nodes(
            [s.position(r + 1) if k == r else s.position(r) if k == r + 1 else s.position(k) for k in range(1, lam.size + 1)],
            lam,
        )
    assert s == t


@given(st.permutations(list(range(1, 6))))
def test_all_reduced_words_evaluate(image):
    w = Permutation(tuple(image))
    words = w.reduced_words()
    assert len(set(words)) == len(words)
    for word in words:
        assert len(word) == w.length()
        assert Permutation.from_word(word, 5) == w


def test_node_order_is_lexicographic():
    assert Node(1, 2, 2) > Node(1, 1, 3)
    assert Node(2, 1, 1) > Node(1, 9, 9)
