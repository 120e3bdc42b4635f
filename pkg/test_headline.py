"""End-to-end: the zeta disc around 0.01 + 50i and the lemma suites."""
import json
import time

import pytest

from app import main
from config import EXAMPLE_RADIUS, EXAMPLE_RADIUS_WINDOW
from discs import certify_zeta


def test_headline_disc_from_the_command_line(capsys):
    start = time.perf_counter()
    code = main(["certify-zeta", "--lambda", "0.01+50i", "--r", "0.49", "--sigma1", "0.4",
                 "--mode", "paper_bound"])
    elapsed = time.perf_counter() - start
    assert code == 0
    doc = json.loads(capsys.readouterr().out)
    assert abs(complex(doc["center_re"], doc["center_im"]) - (0.5 + 50j)) < 1e-4
    lo, hi = EXAMPLE_RADIUS_WINDOW
    assert lo <= doc["radius"] <= hi
    assert elapsed < 10.0


def test_headline_radius_near_reported_value():
    disc = certify_zeta()
    assert disc.radius == pytest.approx(EXAMPLE_RADIUS, rel=0.04)
    assert 0 < disc.R < 1e-3
    assert disc.radius == pytest.approx(2 * disc.R * 0.01 / (1 - disc.R ** 2), rel=1e-12)


def test_sharper_norm_gives_a_larger_disc(capsys):
    assert main(["certify-zeta"]) == 0
    loose = json.loads(capsys.readouterr().out)["radius"]
    assert main(["certify-zeta", "--mode", "quadrature"]) == 0
    sharp = json.loads(capsys.readouterr().out)["radius"]
    assert sharp >= loose * (1 - 1e-9)


@pytest.mark.slow
def test_all_suites_pass(capsys):
    assert main(["verify", "all"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["passed"] is True
    assert set(doc["suites"]) == {"pascal", "vandermonde", "triangular", "mellin", "completion"}
