import math
import os

import pytest

import twistlab as tl

DATA = os.environ.get("TWISTLAB_DATA_DIR", os.path.join(os.path.dirname(__file__), "..", "..", "data"))


def delta(t, name, scale=1.0):
    f = [0j] * t.num_arrows
    f[t.groupoid.find_arrow(name)] = complex(scale)
    return f


def test_pair_groupoid_norm():
    t = tl.pair_groupoid(3)
    assert tl.validate(t) == []
    assert tl.reduced_norm(t, [1.0] * 9) == pytest.approx(3.0, abs=1e-10)
    assert tl.center_dimension(t) == 1


def test_bilinear_twist_is_noncommutative():
    t = tl.twisted_group(2, 2, [[0, 0], [1, 0]])
    ab = tl.convolve(t, delta(t, "(0,1)"), delta(t, "(1,0)"))
    ba = tl.convolve(t, delta(t, "(1,0)"), delta(t, "(0,1)"))
    assert ab[t.groupoid.find_arrow("(1,1)")] == pytest.approx(-1.0)
    assert ba[t.groupoid.find_arrow("(1,1)")] == pytest.approx(1.0)
    assert tl.center_dimension(t) == 1
    assert tl.center_dimension(tl.group_groupoid(tl.FiniteGroup.from_preset("Z2xZ2"))) == 4
    f = [a + b for a, b in zip(delta(t, "(1,0)"), delta(t, "(0,1)"))]
    assert tl.reduced_norm(t, f) == pytest.approx(math.sqrt(2.0), abs=1e-10)


def test_adjoint_and_components():
    t = tl.group_groupoid(tl.FiniteGroup.cyclic(4))
    f = [1 + 2j, -1j, 0.5, 3]
    assert tl.adjoint(t, tl.adjoint(t, f)) == pytest.approx(f)
    parts = [tl.spectral_component(t, s, f) for s in t.gamma.names]
    assert [sum(col) for col in zip(*parts)] == f
    for omega in t.gamma.characters():
        assert tl.reduced_norm(t, tl.dual_action(t, omega, f)) == pytest.approx(tl.reduced_norm(t, f), abs=1e-8)


def test_reconstruction_certificate():
    t = tl.twisted_group(2, 2, [[0, 0], [1, 0]])
    assert tl.cartan_check(t)["passed"]
    cert = tl.verify_roundtrip(t)
    assert cert["status"] == "pass"
    assert cert["cocycle_class_trivial"] is False
    assert len(cert["upsilon"]) == 4
    rebuilt = tl.reconstruct(t)
    assert rebuilt.num_arrows == 4
    assert tl.validate(rebuilt) == []


def test_corpus_roundtrips():
    for name, t in tl.corpus(1):
        assert tl.verify_roundtrip(t, samples=4)["status"] == "pass", name


def test_preconditions_raise():
    t = tl.graded_group_groupoid(tl.FiniteGroup.cyclic(4), tl.FiniteGroup.cyclic(2), [0, 1, 0, 1],
                                 require_injective=False)
    assert tl.is_effective(t) == (False, 2)
    assert tl.cartan_check(t)["precondition_ok"] is False
    with pytest.raises(tl.PreconditionError):
        tl.reconstruct(t)


def test_documents():
    t = tl.load_document(os.path.join(DATA, "z3.json"))
    assert t.num_arrows == 3
    again = tl.parse_document(tl.dump_document(t))
    assert tl.dump_document(again) == tl.dump_document(t)
    with pytest.raises(tl.DocumentError, match=r"arrows\[0\]\.src"):
        tl.load_document(os.path.join(DATA, "malformed.json"))
    assert tl.validate(tl.load_document(os.path.join(DATA, "broken_cocycle.json")))[0]["rule"] == "cocycle-identity"


def test_bad_element_size():
    t = tl.pair_groupoid(2)
    with pytest.raises(ValueError):
        tl.reduced_norm(t, [1.0])
