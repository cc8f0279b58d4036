from fractions import Fraction
import math

import pytest

import crofton

SEGMENT = {"kind": "polyline", "vertices": [[0, 0], [1, 0]]}
SQUARE = {"kind": "polyline", "vertices": [[0, 0], [1, 0], [1, 1], [0, 1], [0, 0]]}
PARABOLA = {"kind": "polynomial", "x": [0, 1], "y": [0, 0, 1]}


def bounds(report):
    return Fraction(report["value"]["lo"]), Fraction(report["value"]["hi"])


def test_segment_length():
    r = crofton.length(SEGMENT, eps="1e-9")
    lo, hi = bounds(r)
    assert r["certified"] and r["kind"] == "two-sided-converged"
    assert lo <= 1 <= hi and hi - lo <= Fraction(1, 10**9)


def test_sawtooth_length_encloses_sqrt2():
    for n in (1, 4, 9):
        lo, hi = bounds(crofton.length({"kind": "sawtooth", "n": n}, eps=1e-8))
        assert lo * lo <= 2 <= hi * hi


def test_variation_routes_agree():
    for route in ("auto", "length", "direct"):
        lo, hi = bounds(crofton.variation(SEGMENT, "pi/3", eps="1e-9", route=route))
        assert lo <= Fraction(1, 2) <= hi


def test_parabola_variation():
    lo, hi = bounds(crofton.variation(PARABOLA, "pi/2", eps="1e-6"))
    assert lo <= 1 <= hi


def test_profile_of_square():
    rows = crofton.profile(SQUARE, count=4)
    assert len(rows) == 5
    for row in rows:
        theta = float(row["theta"]["lo"])
        expected = 2 * (abs(math.cos(theta)) + abs(math.sin(theta)))
        assert float(row["v"]["lo"]) - 1e-6 <= expected <= float(row["v"]["hi"]) + 1e-6


def test_decide():
    assert crofton.decide(SEGMENT, "0", "0.5", "0.9") == "greater-than-a"
    assert crofton.decide({"kind": "sawtooth", "n": 3}, "pi/2", "1.5", "2") == "less-than-b"


def test_sampled_graph_is_only_bracketed():
    spec = {"kind": "sampled-graph", "lipschitz": 1, "samples": [[0, 0], [0.5, 0], [1, 0]]}
    r = crofton.length(spec)
    assert not r["certified"]
    assert r["kind"] == "non-shrinking-bracket"
    with pytest.raises(crofton.CertificationUnavailable):
        crofton.decide(spec, "pi/2", "0.1", "0.2")


def test_demo_bracket():
    d = crofton.demo(8, 3)
    assert Fraction(d["sampled"]["value"]["lo"]) == 0
    assert Fraction(d["sampled"]["value"]["hi"]) == 1
    assert Fraction(d["exact_variation"]["lo"]) <= 1 <= Fraction(d["exact_variation"]["hi"])


def test_generate_round_trips():
    spec = crofton.generate("sawtooth", n=2, tilt=True)
    assert spec["kind"] == "polyline" and len(spec["vertices"]) == 9
    lo, hi = bounds(crofton.variation(spec, "pi/2", eps="1e-9"))
    assert lo <= 1 <= hi
    assert crofton.generate("mixture", bits=[0, 0])["vertices"] == [[0, 0], [1, 0]]


def test_invalid_input():
    with pytest.raises(ValueError):
        crofton.length({"kind": "spiral"})
    with pytest.raises(ValueError):
        crofton.length(SEGMENT, eps="-1")
    with pytest.raises(ValueError):
        crofton.decide(SEGMENT, "0", "1", "1")
