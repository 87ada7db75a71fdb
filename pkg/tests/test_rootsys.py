import pytest

from magicsq.rootsys import (
    CartanType,
    build_root_system,
    cartan_matrix,
    diagram_aut,
    identity_aut,
    opposition_involution,
    root_system_to_json,
    sub_diagram_type,
)

# classical positive-root counts
COUNTS = {
    "A1": 1, "A2": 3, "A3": 6, "A5": 15,
    "B2": 4, "B3": 9, "C3": 9,
    "D4": 12, "D5": 20, "D6": 30,
    "E6": 36, "E7": 63, "E8": 120,
    "F4": 24, "G2": 6,
}


@pytest.mark.parametrize("label,count", sorted(COUNTS.items()))
def test_positive_root_counts(label, count):
    rs = build_root_system(CartanType.from_string(label))
    assert rs.num_positive == count


@pytest.mark.parametrize("label", sorted(COUNTS))
def test_roots_are_nonnegative_and_contain_simples(label):
    rs = build_root_system(CartanType.from_string(label))
    for v in rs.positive_roots:
        assert all(c >= 0 for c in v)
    for i in range(1, rs.rank + 1):
        v = rs.positive_roots[rs.simple_root_index(i)]
        assert sum(v) == 1 and v[i - 1] == 1


@pytest.mark.parametrize("label", sorted(COUNTS))
def test_deterministic_graded_lex_order(label):
    rs = build_root_system(CartanType.from_string(label))
    keys = [(sum(v), v) for v in rs.positive_roots]
    assert keys == sorted(keys)


@pytest.mark.parametrize("label", sorted(COUNTS))
def test_reflection_tables_are_signed_permutations(label):
    rs = build_root_system(CartanType.from_string(label))
    n = rs.num_positive
    for i, tab in enumerate(rs.simple_reflection_tables):
        # bijective on the signed set, and an involution
        images = {x for x in tab} | {~x for x in tab}
        assert len(images) == 2 * n
        for r in range(n):
            y = tab[r]
            back = tab[y] if y >= 0 else ~tab[~y]
            assert back == r
        # s_i negates exactly its own simple root among the positives
        negated = [r for r in range(n) if tab[r] < 0]
        assert negated == [rs.simple_root_index(i + 1)]


def test_cartan_matrices_match_standard_tables():
    assert cartan_matrix(CartanType("F", 4)) == (
        (2, -1, 0, 0),
        (-1, 2, -2, 0),
        (0, -1, 2, -1),
        (0, 0, -1, 2),
    )
    assert cartan_matrix(CartanType("G", 2)) == ((2, -1), (-3, 2))
    assert cartan_matrix(CartanType("B", 3)) == (
        (2, -1, 0),
        (-1, 2, -2),
        (0, -1, 2),
    )
    assert cartan_matrix(CartanType("C", 3)) == (
        (2, -1, 0),
        (-1, 2, -1),
        (0, -2, 2),
    )
    e6 = cartan_matrix(CartanType("E", 6))
    assert e6[0][2] == e6[2][0] == -1  # edge 1-3
    assert e6[1][3] == e6[3][1] == -1  # edge 2-4
    assert e6[0][1] == e6[1][0] == 0  # nodes 1,2 not adjacent


@pytest.mark.parametrize("label", sorted(COUNTS))
def test_cartan_invariants(label):
    a = cartan_matrix(CartanType.from_string(label))
    for i, row in enumerate(a):
        assert row[i] == 2
        for j, entry in enumerate(row):
            if i != j:
                assert entry <= 0


@pytest.mark.parametrize(
    "label",
    ["E9", "F5", "G3", "A0", "D2", "H3"],
)
def test_invalid_types_rejected(label):
    with pytest.raises(ValueError):
        CartanType.from_string(label)


def test_outer_twist_validation():
    assert CartanType.from_string("2E6").outer_twist == 2
    assert CartanType.from_string("1D6") == CartanType("D", 6, 1)
    CartanType("A", 5, 2)
    CartanType("D", 4, 2)
    with pytest.raises(ValueError):
        CartanType("E", 7, 2)
    with pytest.raises(ValueError):
        CartanType("B", 3, 2)
    with pytest.raises(ValueError):
        CartanType("A", 1, 2)
    with pytest.raises(ValueError):
        CartanType("E", 6, 3)


def test_twist_does_not_change_root_data():
    inner = build_root_system(CartanType("E", 6))
    outer = build_root_system(CartanType("E", 6, 2))
    assert inner.positive_roots == outer.positive_roots
    assert inner.cartan == outer.cartan


@pytest.mark.parametrize(
    "label,perm",
    [
        ("A1", (1,)),
        ("A3", (3, 2, 1)),
        ("A5", (5, 4, 3, 2, 1)),
        ("B3", (1, 2, 3)),
        ("C3", (1, 2, 3)),
        ("D4", (1, 2, 3, 4)),
        ("D5", (1, 2, 3, 5, 4)),
        ("E6", (6, 2, 5, 4, 3, 1)),
        ("E7", (1, 2, 3, 4, 5, 6, 7)),
        ("E8", (1, 2, 3, 4, 5, 6, 7, 8)),
        ("F4", (1, 2, 3, 4)),
        ("G2", (1, 2)),
    ],
)
def test_opposition_involution(label, perm):
    rs = build_root_system(CartanType.from_string(label))
    aut = opposition_involution(rs)
    assert aut.node_permutation == perm
    # involutive
    assert all(aut(aut(i)) == i for i in range(1, rs.rank + 1))


def test_diagram_aut_validation():
    rs = build_root_system(CartanType("E", 6))
    diagram_aut(rs, (6, 2, 5, 4, 3, 1))
    with pytest.raises(ValueError):
        diagram_aut(rs, (2, 1, 3, 4, 5, 6))  # breaks the Cartan matrix
    with pytest.raises(ValueError):
        diagram_aut(rs, (1, 1, 3, 4, 5, 6))  # not a permutation
    assert identity_aut(rs).is_identity


@pytest.mark.parametrize(
    "ambient,nodes,expected",
    [
        ("E6", {3, 4, 5}, ["A3"]),
        ("E6", {2, 3, 4, 5}, ["D4"]),
        ("E6", {1, 3, 4, 5, 6}, ["A5"]),
        ("E6", set(), []),
        ("E6", {1, 3, 5, 6}, ["A2", "A2"]),
        ("E6", {2}, ["A1"]),
        ("E7", {2, 3, 4, 5, 6, 7}, ["D6"]),
        ("E7", {1, 3, 4, 5, 6, 7}, ["A6"]),
        ("E8", {1, 2, 3, 4, 5, 6, 7}, ["E7"]),
        ("E8", {2, 3, 4, 5, 6, 7, 8}, ["D7"]),
        ("F4", {1, 2, 3}, ["B3"]),
        ("F4", {2, 3, 4}, ["C3"]),
        ("F4", {2, 3}, ["B2"]),
        ("F4", {1, 2}, ["A2"]),
        ("F4", {1, 3, 4}, ["A1", "A2"]),
        ("F4", {1, 2, 3, 4}, ["F4"]),
        ("G2", {1}, ["A1"]),
        ("B3", {2, 3}, ["B2"]),
        ("C3", {2, 3}, ["B2"]),
        ("G2", {1, 2}, ["G2"]),
        ("D6", {1, 2, 3, 4}, ["A4"]),
        ("D6", {3, 4, 5, 6}, ["D4"]),
    ],
)
def test_sub_diagram_type(ambient, nodes, expected):
    rs = build_root_system(CartanType.from_string(ambient))
    assert [str(t) for t in sub_diagram_type(rs, nodes)] == expected


def test_sub_diagram_rejects_bad_nodes():
    rs = build_root_system(CartanType("A", 3))
    with pytest.raises(ValueError):
        sub_diagram_type(rs, {0, 1})
    with pytest.raises(ValueError):
        sub_diagram_type(rs, {4})


def test_json_serialization():
    rs = build_root_system(CartanType("A", 2))
    doc = root_system_to_json(rs)
    assert doc["type"] == "A2"
    assert doc["cartan"] == [[2, -1], [-1, 2]]
    assert doc["positive_roots"] == [[0, 1], [1, 0], [1, 1]]


def test_e6_against_golden_file():
    import json
    import pathlib

    golden = json.loads(
        (pathlib.Path(__file__).parent / "data" / "e6_root_system.json").read_text()
    )
    doc = root_system_to_json(build_root_system(CartanType("E", 6)))
    assert doc == golden
    # classical anchors of the golden data itself
    assert golden["positive_roots"][-1] == [1, 2, 2, 3, 2, 1]
    assert len(golden["positive_roots"]) == 36


def test_build_is_memoized():
    a = build_root_system(CartanType("D", 4))
    b = build_root_system(CartanType("D", 4))
    assert a is b
