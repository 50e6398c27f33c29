import pytest

from sqconn.connectivity import edge_connectivity, vertex_connectivity
from sqconn.families import (
    Claim,
    FamilySpec,
    gen_coro2_sharp,
    gen_Gkappa_even,
    gen_Gkappa_odd,
    gen_Glambda,
    gen_Gn,
    generate,
    gn_part_sizes,
)
from sqconn.graph import GraphError, is_connected, min_degree
from sqconn.power import square


def _partition_ok(inst):
    ids = sorted(v for r in inst.blocks.values() for v in r)
    return ids == list(range(inst.graph.n))


@pytest.mark.parametrize("n,parts,delta", [
    (12, (3, 2, 1, 1, 1, 4), 2),
    (13, (4, 2, 1, 1, 1, 4), 2),
    (14, (4, 2, 1, 1, 2, 4), 3),
    (15, (4, 2, 1, 1, 2, 5), 3),
])
def test_gn_layout(n, parts, delta):
    assert gn_part_sizes(n) == parts
    inst = gen_Gn(n)
    assert tuple(len(r) for r in inst.blocks.values()) == parts
    assert min_degree(inst.graph) == delta == (n + 2) // 4 - 1
    assert _partition_ok(inst) and is_connected(inst.graph)


def test_gn_rejects_small():
    with pytest.raises(GraphError):
        gen_Gn(9)


@pytest.mark.parametrize("kappa,n,lam_sq", [(2, 24, 6), (4, 80, 20)])
def test_gkappa_even(kappa, n, lam_sq):
    inst = gen_Gkappa_even(kappa)
    g = inst.graph
    assert g.n == n and _partition_ok(inst)
    assert inst.expected["lambda_sq"] == Claim("==", lam_sq)
    # degree audit: middle blocks see k-2 inside, k per path edge side, and the end block when adjacent
    b = inst.blocks
    for v in b["V1"]:
        assert g.degree(v) == (kappa - 2) + 1 + 2 * kappa * kappa
    for v in b["V2"]:
        assert g.degree(v) == (kappa - 2) + 2
    for v in b["V0"]:
        assert g.degree(v) == 2 * kappa * kappa - 1 + kappa


def test_gkappa_even_six_claim():
    assert gen_Gkappa_even(6).expected["lambda_sq"].value == 42


def test_gkappa_parity():
    with pytest.raises(GraphError):
        gen_Gkappa_even(3)
    with pytest.raises(GraphError):
        gen_Gkappa_odd(4)


def test_gkappa_odd_shape():
    inst = gen_Gkappa_odd(5)
    g, b = inst.graph, inst.blocks
    assert g.n == 120 and _partition_ok(inst)
    assert g.has_edge(b["V2"][3], b["V1"][4])
    assert g.has_edge(b["V3"][3], b["V4"][4])
    assert inst.expected["lambda_sq"] == Claim("<=", 31)
    assert gen_Gkappa_odd(3).graph.n == 48
    assert gen_Gkappa_odd(7).expected["lambda_sq"].value == 57


def test_gkappa_odd3_measured():
    inst = gen_Gkappa_odd(3)
    assert vertex_connectivity(inst.graph)[0] == 3
    assert edge_connectivity(square(inst.graph))[0] <= 13


@pytest.mark.parametrize("lam,parts,lam_sq,delta_sq", [
    (4, (16, 2, 2, 2, 2, 16), 12, 19),
    (9, (81, 6, 3, 3, 6, 81), 45, 89),
])
def test_glambda(lam, parts, lam_sq, delta_sq):
    inst = gen_Glambda(lam)
    assert tuple(len(r) for r in inst.blocks.values()) == parts
    assert inst.graph.n == sum(parts)
    assert inst.expected["lambda_sq"].value == lam_sq
    assert inst.expected["delta_sq"].value == delta_sq
    assert is_connected(inst.graph) and _partition_ok(inst)


def test_glambda16_parts():
    inst = gen_Glambda(16)
    assert tuple(len(r) for r in inst.blocks.values()) == (256, 12, 4, 4, 12, 256)
    assert inst.expected["lambda_sq"].value == 112


def test_glambda_rejects_non_square():
    for bad in (1, 3, 8, 10):
        with pytest.raises(GraphError):
            gen_Glambda(bad)


@pytest.mark.parametrize("delta,n", [(1, 4), (3, 8), (5, 12)])
def test_coro2(delta, n):
    inst = gen_coro2_sharp(delta)
    assert inst.graph.n == n
    assert min_degree(inst.graph) == delta
    assert inst.expected["lambda_sq"].value == delta + 1
    with pytest.raises(GraphError):
        gen_coro2_sharp(0)


def test_spec_parsing_and_metadata():
    spec = FamilySpec.parse("g-lambda", 9)
    assert spec == FamilySpec("Glambda", 9)
    meta = generate(spec).metadata()
    assert meta["n"] == 180
    assert meta["expected"]["lambda_sq"] == {"op": "==", "value": 45, "source": "claimed"}
    assert meta["blocks"]["V0"] == [0, 81]
    with pytest.raises(GraphError):
        FamilySpec("nope", 1)


def test_claim_relations():
    assert Claim("<=", 31).holds(30)
    assert not Claim("==", 12).holds(13)
    assert Claim(">=", 32).holds(32)
