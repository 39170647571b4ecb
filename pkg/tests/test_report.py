import json

from troplink.fan import Fan, validate_fan
from troplink.matroid import load_matroid
from troplink.report import OracleRow, VerificationReport
from troplink.strata import StratificationIncidence


def test_top_concentration_and_verdict():
    rep = VerificationReport("x", "y", [0, 0, 3], [OracleRow.compare("a", 1, 1)])
    assert rep.top_concentrated and rep.passed and rep.top_dimension == 2
    rep.betti = [1, 3]
    assert not rep.top_concentrated and not rep.passed
    rep.require_top_concentration = False
    assert rep.passed
    rep.oracles.append(OracleRow.compare("b", 1, 2))
    assert not rep.passed


def test_timing_is_outside_the_hashable_section():
    a = VerificationReport("x", "y", [2], timing_s=0.1)
    b = VerificationReport("x", "y", [2], timing_s=9.0)
    assert a.hashable() == b.hashable()
    assert json.loads(a.to_json())["report"] == a.hashable()


def test_written_fixtures_load(fixture_dir):
    for path in sorted((fixture_dir / "fans").glob("*.json")):
        assert validate_fan(Fan.load(path)).ok, path
    for path in sorted((fixture_dir / "matroids").glob("*.json")):
        assert load_matroid(path).rank >= 2
    for path in sorted((fixture_dir / "strata").glob("*.json")):
        StratificationIncidence.load(path)
