import json

import pytest
from hypothesis import given, settings, strategies as st

from stablemod.errors import InputError, InvalidMorphism
from stablemod.quiver import an_orientations, an_quiver
from stablemod.sampling import Sampler, make_rng
from stablemod.serialize import dumps, morphism_from_json, morphism_to_json, rep_from_json, rep_to_json

P = 101


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10_000))
def test_roundtrip(seed):
    q = an_quiver(3, an_orientations(3)[seed % 4])
    s = Sampler(q, P, make_rng(seed))
    f = s.morphism_pair()
    doc = json.loads(json.dumps(morphism_to_json(f)))
    assert morphism_from_json(doc, P) == f
    assert rep_from_json(json.loads(json.dumps(rep_to_json(f.source))), P) == f.source
    assert dumps(morphism_to_json(f)) == dumps(morphism_to_json(morphism_from_json(doc, P)))


def test_rejects_bad_input(a2):
    with pytest.raises(InputError):
        rep_from_json({"quiver": a2.to_json(), "dims": [1, 1], "matrices": {"zz": [[1]]}}, P)
    with pytest.raises(InputError):
        rep_from_json({"quiver": a2.to_json(), "dims": [1, 1], "matrices": {"a1": [[1, 2]]}}, P)
    with pytest.raises(InputError):
        rep_from_json({"dims": [1]}, P)
    src = {"dims": [1, 1], "matrices": {"a1": [[1]]}}
    tgt = {"dims": [1, 0], "matrices": {"a1": [[]]}}
    with pytest.raises(InvalidMorphism):
        morphism_from_json({"quiver": a2.to_json(), "source": tgt, "target": src, "components": [[[1]], []]}, P)
