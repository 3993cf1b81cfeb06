import pytest

import orthogoval as og


def _catalog_params():
    for name, entry in og.CATALOG.items():
        marks = [pytest.mark.slow] if entry.q >= 7 else []
        yield pytest.param(name, marks=marks, id=name)


@pytest.mark.parametrize("name", list(_catalog_params()))
def test_every_catalog_entry_builds(name):
    result = og.pipeline_reproduce(name)
    assert result.actual == result.entry.expected
    assert result.matches
    assert result.diff() == {}


@pytest.mark.parametrize(
    "name, expected",
    [
        ("q2-proj-λ1", (15, 7, 2, 1)),
        ("q3-proj-λ1", (53, 13, 3, 1)),
        ("q3-proj-λ3", (107, 13, 3, 3)),
        ("q5-proj-λ1", (249, 31, 5, 1)),
        ("q2-extended-λ1", (14, 6, 2, 1)),
        ("q2-extended-λ2", (22, 6, 2, 2)),
        ("q4-extended-λ1", (124, 18, 4, 1)),
        ("q4-extended-λ3", (252, 18, 4, 3)),
        ("q8-extended-λ1", (1016, 66, 8, 1)),
        ("q8-extended-λ2", (1528, 66, 8, 2)),
        ("q3-sherwood-λ2", (78, 9, 3, 2)),
        ("q3-sherwood-λ6", (186, 9, 3, 6)),
        ("q4-sherwood-λ1", (124, 16, 4, 1)),
        ("q4-sherwood-λ6", (444, 16, 4, 6)),
        ("q8-sherwood-λ6", (3576, 64, 8, 6)),
    ],
)
def test_catalog_parameters(name, expected):
    assert og.catalog_entry(name).expected == expected


def test_catalog_names():
    assert og.catalog_entry("q3-proj-lambda2") is og.CATALOG["q3-proj-λ2"]
    with pytest.raises(og.OrthogovalError):
        og.catalog_entry("q6-proj-λ1")


def test_catalog_omits_unextendable_arrays():
    extended = {e.name for e in og.CATALOG.values() if e.layout == "extended"}
    assert extended == {
        "q2-extended-λ1",
        "q4-extended-λ1",
        "q8-extended-λ1",
        "q2-extended-λ2",
        "q4-extended-λ2",
        "q4-extended-λ3",
        "q8-extended-λ2",
    }
    assert not any(name.startswith("q3-extended") for name in og.CATALOG)


def test_extended_catalog_respects_pair_bound():
    # (λ + 1) q C(q, 2) pairs must fit in C(q^2, 2)
    for entry in og.CATALOG.values():
        if entry.layout == "extended":
            q = entry.q
            used = (entry.index + 1) * q * q * (q - 1) // 2
            assert used <= q * q * (q * q - 1) // 2, entry.name
