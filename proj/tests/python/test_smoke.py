import propertylab as pl


def test_builtin_sensitivity():
    parity = pl.builtin("edge-parity", 4)
    assert parity.n == 4
    assert parity.arity == 6
    s = pl.max_sensitivity(parity)
    assert s["value"] == 6
    assert pl.max_block_sensitivity(parity) == 6

    for n in (4, 5, 6):
        dom = pl.builtin("degree-n-minus-1", n)
        assert pl.max_sensitivity(dom)["value"] == n - 1


def test_registry_and_evaluation():
    names = pl.builtin_names()
    assert "has-edge" in names and "connected" in names
    f = pl.builtin("has-edge", 4)
    assert f.evaluate(0) is False
    assert f.evaluate(1) is True
    assert pl.is_graph_property(f)
    assert pl.is_monotone(f)
    assert pl.is_nontrivial(f)


def test_iso_classes_and_canonical_form():
    assert [len(pl.iso_classes(n)) for n in range(1, 6)] == [1, 2, 4, 11, 34]
    triangle = (1 << pl.edge_index(4, 1, 2)) | (1 << pl.edge_index(4, 1, 3)) | (
        1 << pl.edge_index(4, 2, 3))
    relabeled = (1 << pl.edge_index(4, 2, 3)) | (1 << pl.edge_index(4, 2, 4)) | (
        1 << pl.edge_index(4, 3, 4))
    assert pl.are_isomorphic(4, triangle, relabeled)
    assert pl.canonical_form(4, triangle) == pl.canonical_form(4, relabeled)
    assert pl.edge_unindex(4, pl.edge_index(4, 2, 4)) == (2, 4)


def test_structures():
    # triangle with a pendant edge on n=4
    g = 0
    for (a, b) in [(1, 2), (1, 3), (2, 3), (3, 4)]:
        g |= 1 << pl.edge_index(4, a, b)
    bare = g & ~(1 << pl.edge_index(4, 3, 4))
    assert pl.degree_truncation(4, g, 2) == bare
    assert pl.positive_min_degree(4, g) == 1
    assert pl.positive_min_degree(4, 0) is None

    mg = pl.minimal_graphs(pl.builtin("has-edge", 5))
    assert len(mg["graphs"]) == 10
    assert mg["positive_min_degree"] == 1
    assert mg["min_tree_size"] == 1


def test_witness_extraction():
    report = pl.extract_witness(pl.builtin("has-edge", 5))
    assert report["best"]["point"] == "0"
    assert report["best"]["verified_sensitivity"] == 10
    assert all(t["false_claims"] == 0 for t in report["traces"])
    s = pl.max_sensitivity(pl.builtin("has-edge", 5))["value"]
    assert report["best"]["verified_sensitivity"] <= s


def test_verification_sweeps():
    report = pl.verify_exhaustive(4)
    assert report["properties_examined"] == 2046
    assert report["min_sensitivity"] >= 1
    a = pl.verify_sampled(5, seed=11, count=200)
    b = pl.verify_sampled(5, seed=11, count=200, jobs=2)
    assert a["histogram"] == b["histogram"]

    mono = pl.monotone_check(5)
    assert mono["all_passed"]


def test_class_set_round_trip():
    classes = pl.iso_classes(4)
    f = pl.from_class_set(4, classes[1:3])
    assert pl.is_graph_property(f)
    assert pl.is_nontrivial(f)
