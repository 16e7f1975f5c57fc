import json
from pathlib import Path

import pytest
from hypothesis import given

from conftest import fields, rng_for, seeds
from dkcoalg import serialize
from dkcoalg.chain import ChainComplex, sphere
from dkcoalg.connected.algebras import dual_algebra
from dkcoalg.exactlinalg import GF, QQ, Matrix
from dkcoalg.generators import (
    random_chain_map,
    random_complex,
    random_connected_coalgebra,
    random_connected_coalgebra_map,
    random_simplicial,
)

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


def _same(a, b):
    return serialize.dumps(a) == serialize.dumps(b)


def test_fixture_bytes_roundtrip(tmp_path):
    src = FIXTURES / "sphere2.json"
    obj = serialize.load(src)
    assert isinstance(obj, ChainComplex) and obj.dims == (0, 0, 1, 0, 0)
    out = tmp_path / "out.json"
    serialize.save(obj, out)
    assert out.read_bytes() == src.read_bytes()


@pytest.mark.parametrize("name", ["sphere2", "disk2", "gamma_sphere1", "tensor_sphere1", "counit_map",
                                  "sphere1_to_disk2", "identity_sphere1", "no_lift_square"])
def test_all_good_fixtures_are_canonical(name):
    text = (FIXTURES / f"{name}.json").read_text(encoding="utf-8").strip()
    assert serialize.dumps(serialize.loads(text)) == text


def test_broken_differential_names_degree():
    with pytest.raises(serialize.InvariantError, match="degree 3"):
        serialize.load(FIXTURES / "bad_d2.json")


def test_non_prime_field_rejected():
    with pytest.raises(serialize.SchemaError, match="GF\\(4\\)"):
        serialize.load(FIXTURES / "gf4.json")


def test_schema_errors():
    doc = serialize.to_document(sphere(1, 3, QQ))
    for mutate in (lambda d: d.update(schema=2), lambda d: d.update(D=5), lambda d: d.pop("field"),
                   lambda d: d["object"].update(type="torus"),
                   lambda d: d["object"]["d"][0].update(shape=[3, 3])):
        bad = json.loads(json.dumps(doc))
        mutate(bad)
        with pytest.raises(serialize.SchemaError):
            serialize.from_document(bad)
    with pytest.raises(serialize.SchemaError):
        serialize.loads("{not json")


def test_prime_field_entries_must_be_reduced():
    F = GF(3)
    M = Matrix.from_dense(F, [[1, 2]], ncols=2)
    obj = serialize.matrix_to_json(M)
    assert obj == {"shape": [1, 2], "rows": [[1, 2]]}
    obj["rows"][0][1] = 5
    with pytest.raises(serialize.SchemaError, match="reduced"):
        serialize.matrix_from_json(F, obj)


def test_rational_entries_are_strings():
    M = Matrix.from_dense(QQ, [[QQ(1) / 3, QQ(-2)]], ncols=2)
    obj = serialize.matrix_to_json(M)
    assert obj["rows"] == [["1/3", "-2"]]
    assert serialize.matrix_from_json(QQ, obj) == M


def test_algebra_roundtrip():
    A = dual_algebra(random_connected_coalgebra(rng_for(5), QQ, 3, 1))
    assert _same(serialize.loads(serialize.dumps(A)), A)


@given(seeds, fields)
def test_roundtrip_random_objects(seed, F):
    rng = rng_for(seed)
    X = random_complex(rng, F, 3, 2)
    Y = random_complex(rng, F, 3, 2)
    objs = [X, random_chain_map(rng, X, Y), random_simplicial(rng, F, 3, 1),
            random_connected_coalgebra(rng, F, 3, 1), random_connected_coalgebra_map(rng, F, 3, 1)]
    for obj in objs:
        text = serialize.dumps(obj)
        back = serialize.loads(text)
        assert type(back) is type(obj)
        assert serialize.dumps(back) == text
