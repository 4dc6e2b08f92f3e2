"""Manifest loading, canonical dumping, hashing, and validation errors."""

import copy
import json

import pytest

from contactframe import (
    ManifestError,
    dump_manifest,
    load_manifest,
    load_manifest_file,
    make_abelian3,
    make_lambda_family,
    manifest_hash,
)

LAMBDA_PATH = "manifests/lambda_family.json"
ABELIAN_PATH = "manifests/abelian3.json"

LAMBDA_HASH = "70a9e3409abc5179e73d14419f6d821e0b6b775bbebb1546187d0b68a720cbf9"
ABELIAN_HASH = "9fddb272255fd1ce2592fcd78535b7137bc0fe6eb180edf35d4604fbd37574c6"


def _base_doc() -> dict:
    with open(LAMBDA_PATH) as fh:
        return json.load(fh)


def test_shipped_manifest_matches_constructor():
    m, s = load_manifest_file(LAMBDA_PATH)
    entry = make_lambda_family()
    assert m == entry.manifold
    assert s == entry.structure


def test_shipped_abelian_matches_constructor():
    m, s = load_manifest_file(ABELIAN_PATH)
    entry = make_abelian3()
    assert m == entry.manifold
    assert s == entry.structure


def test_dump_load_roundtrip():
    for path in (LAMBDA_PATH, ABELIAN_PATH):
        m, s = load_manifest_file(path)
        doc = dump_manifest(m, s)
        m2, s2 = load_manifest(doc)
        assert m2 == m
        assert s2 == s
        assert dump_manifest(m2, s2) == doc


def test_hashes_are_stable():
    m, s = load_manifest_file(LAMBDA_PATH)
    assert manifest_hash(dump_manifest(m, s)) == LAMBDA_HASH
    m2, s2 = load_manifest_file(ABELIAN_PATH)
    assert manifest_hash(dump_manifest(m2, s2)) == ABELIAN_HASH


def test_xi_accepts_frame_index():
    doc = _base_doc()
    doc["contact"]["xi"] = 1
    m, s = load_manifest(doc)
    entry = make_lambda_family()
    assert s == entry.structure


def test_missing_file_raises_manifest_error(tmp_path):
    with pytest.raises(ManifestError):
        load_manifest_file(str(tmp_path / "nope.json"))
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    with pytest.raises(ManifestError):
        load_manifest_file(str(bad))


@pytest.mark.parametrize(
    "mutate, fragment",
    [
        (lambda d: d.update(dimension=4), "odd"),
        (lambda d: d.update(dimension="three"), "dimension"),
        (lambda d: d.pop("contact"), "contact"),
        (lambda d: d["contact"].pop("phi"), "phi"),
        (lambda d: d.update(extra_field=1), "extra_field"),
        (lambda d: d["structure_constants"].append({"i": 1, "j": 9, "k": 1, "coeff": "1"}), "j"),
        (lambda d: d["structure_constants"].append({"i": 2, "j": 1, "k": 3, "coeff": "1"}), "i"),
        (
            lambda d: d["structure_constants"].append(
                {"i": 1, "j": 2, "k": 3, "coeff": "1"}
            ),
            "duplicate",
        ),
        (
            lambda d: d["structure_constants"].append(
                {"i": 1, "j": 2, "k": 1, "coeff": "x/{"}
            ),
            "coeff",
        ),
        (
            lambda d: d["structure_constants"].append(
                {"i": 1, "j": 2, "k": 1, "coeff": "1", "weight": 2}
            ),
            "weight",
        ),
        (lambda d: d["contact"].update(eta=["1", "0"]), "eta"),
        (lambda d: d.update(parameters=["lambda", "lambda"]), "parameters"),
        (lambda d: d.update(parameters=["lambda", "not an ident!"]), "parameters"),
        (lambda d: d["contact"].update(phi=[["0", "0"], ["0", "0"]]), "phi"),
        (lambda d: d["contact"].update(xi=9), "xi"),
    ],
)
def test_rejections(mutate, fragment):
    doc = copy.deepcopy(_base_doc())
    mutate(doc)
    with pytest.raises(ManifestError) as excinfo:
        load_manifest(doc)
    text = " ".join(str(issue) for issue in excinfo.value.issues)
    assert fragment.lower() in text.lower(), text


def test_error_collects_multiple_issues():
    doc = copy.deepcopy(_base_doc())
    doc["contact"]["eta"] = ["1", "0"]
    doc["structure_constants"].append({"i": 2, "j": 1, "k": 3, "coeff": "1"})
    with pytest.raises(ManifestError) as excinfo:
        load_manifest(doc)
    assert len(excinfo.value.issues) >= 2


def test_hash_is_order_insensitive_via_canonical_dump():
    """dump_manifest emits a canonical ordering, so two equal structures can

    never hash differently."""
    m, s = load_manifest_file(LAMBDA_PATH)
    doc_a = dump_manifest(m, s)
    doc_b = dump_manifest(*load_manifest(doc_a))
    assert manifest_hash(doc_a) == manifest_hash(doc_b)
