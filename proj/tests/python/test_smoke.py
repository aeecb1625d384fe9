"""End-to-end smoke tests for the Python bindings."""

import pytest

import gracelab as gl


def test_base_and_labelers():
    base = gl.base_path(4)
    assert base.q0 == 3 and base.m == 2 and base.r == 2

    rep = gl.label_path_union(base, 3)
    assert rep.certificate.ok()
    assert rep.labeled.q == 3 * (base.q0 + 1) - 1
    assert sorted(rep.labeled.edge_labels()) == list(range(1, rep.labeled.q + 1))

    star = gl.label_open_star(gl.base_complete_bipartite(2, 2), 2)
    assert star.certificate.ok()
    assert star.labeled.q == 2 * 5


def test_verifier_and_complement():
    rep = gl.label_star_of(gl.base_path(2))
    comp = gl.complement_labeling(rep.labeled)
    assert gl.verify_graceful(comp).ok()
    assert gl.complement_labeling(comp) == rep.labeled


def test_oracle():
    found = gl.find_graceful(gl.make_cycle_graph(4))
    assert found.status == gl.SearchStatus.FOUND
    none = gl.find_graceful(gl.make_cycle_graph(5))
    assert none.status == gl.SearchStatus.EXHAUSTED_NONE
    agree = gl.cross_check_enumeration(gl.make_cycle_graph(5))
    assert agree.status == gl.SearchStatus.EXHAUSTED_NONE


def test_document_roundtrip_and_corruption():
    spec = gl.ConstructionSpec(gl.Family.OPEN_STAR, t=2)
    base_desc = gl.parse_base_descriptor("path:4")
    rep = gl.label(spec, gl.realize_base(base_desc))
    doc = gl.LabeledGraphDocument(spec, base_desc, rep.labeled, rep.certificate)

    text = gl.serialize(doc)
    parsed = gl.parse_document(text)
    assert not parsed.tamper
    assert parsed.doc == doc
    assert gl.verify_document(parsed).ok()
    assert gl.serialize(parsed.doc) == text

    # flip one stored edge label: parse keeps going but verification fails
    lines = text.splitlines()
    i = next(k for k, ln in enumerate(lines) if ln.startswith("edge "))
    parts = lines[i].split()
    parts[-1] = str(int(parts[-1]) + 1)
    lines[i] = " ".join(parts)
    tampered = gl.parse_document("\n".join(lines) + "\n")
    assert tampered.tamper
    assert not gl.verify_document(tampered).ok()


def test_export_dot():
    spec = gl.ConstructionSpec(gl.Family.PATH_UNION, n=2)
    base_desc = gl.parse_base_descriptor("path:2")
    rep = gl.label(spec, gl.realize_base(base_desc))
    doc = gl.LabeledGraphDocument(spec, base_desc, rep.labeled, rep.certificate)
    dot = gl.export_dot(doc)
    assert "--" in dot and dot.startswith("graph")


def test_graph6():
    g = gl.decode_graph6("Cl")  # C4
    assert g.vertex_count == 4 and g.edge_count == 4
    assert gl.encode_graph6(g) == "Cl"
    with pytest.raises(gl.DocumentParseError):
        gl.decode_graph6("C")  # truncated


def test_errors_are_typed():
    with pytest.raises(gl.ValidationError):
        gl.base_cycle(5)  # not divisible by 4
