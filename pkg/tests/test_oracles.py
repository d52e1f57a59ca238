"""Grid oracle, membership oracles and the Monte-Carlo axiom verifier."""

import numpy as np
import pytest

from bombon.errors import PreconditionError
from bombon.jsonio import canonical_dumps
from bombon.oracles import (RunConfig, bidisk_oracle, cp1_grid, fib_angles,
                            grid_line_tag, oracle_from_quadric, verify_axioms,
                            verify_point_star)
from bombon.projective import ProjLine, ProjPoint, sample_line
from bombon.quadrics import QuadricBombon, random_bombon
from bombon.sections import SectionTag, classify_line_section

ELLIPTIC = QuadricBombon.from_epsilons([1, 1, -1])


def test_fib_angles_and_grid():
    th, ph = fib_angles(128)
    assert th.shape == (128,) and ph.shape == (128,)
    assert np.all((th >= 0) & (th <= np.pi))
    grid = cp1_grid(128)
    assert grid.shape == (128, 2)
    assert np.allclose(np.linalg.norm(grid, axis=1), 1.0, atol=1e-12)


def test_grid_line_tag_frozen():
    circle_line = ProjLine([1.0, 0.0, 1.0], [0.0, 1.0, 1.0])
    assert grid_line_tag(ELLIPTIC.a, circle_line.basis()) \
        is SectionTag.CIRCLE
    empty_line = ProjLine([1.0, 0.0, 0.0], [0.0, 1.0, 0.0])
    assert grid_line_tag(ELLIPTIC.a, empty_line.basis()) is SectionTag.EMPTY
    sing = QuadricBombon.from_epsilons([1, -1, 0])
    point_line = ProjLine([0.0, 1.0, 0.0], [0.0, 0.0, 1.0])
    assert grid_line_tag(sing.a, point_line.basis()) \
        is SectionTag.SINGLE_POINT
    big = QuadricBombon.from_epsilons([1, 1, -1, -1])
    full_line = ProjLine([1.0, 0.0, 1.0, 0.0], [0.0, 1.0, 0.0, 1.0])
    assert grid_line_tag(big.a, full_line.basis()) is SectionTag.FULL_LINE


def test_grid_agrees_with_classifier():
    rng = np.random.default_rng(127)
    for _ in range(150):
        n = int(rng.integers(1, 6))
        x = random_bombon(rng, n)
        line = sample_line(rng, n)
        sec, _ = classify_line_section(x, line)
        if sec.low_confidence:
            continue
        assert grid_line_tag(x.a, line.basis()) is sec.tag


def test_quadric_oracle_labels():
    oracle = oracle_from_quadric(ELLIPTIC)
    assert oracle.dim == 2
    assert oracle.labels(np.array([1.0, 0.0, 0.0], dtype=complex)) == 1
    assert oracle.labels(np.array([0.0, 0.0, 1.0], dtype=complex)) == -1
    assert oracle.labels(np.array([1.0, 0.0, 1.0], dtype=complex)) == 0
    batch = oracle.labels(np.eye(3, dtype=complex))
    assert list(batch) == [1, 1, -1]


def test_bidisk_oracle_labels():
    oracle = bidisk_oracle()
    assert oracle.labels(np.array([1.0, 0.0, 0.0], dtype=complex)) == 1
    assert oracle.labels(np.array([1.0, 2.0, 0.0], dtype=complex)) == -1
    assert oracle.labels(np.array([0.0, 1.0, 0.0], dtype=complex)) == -1
    assert oracle.labels(np.array([1.0, 1.0, 0.5], dtype=complex)) == 0


def test_verify_axioms_consistent_on_quadric():
    cfg = RunConfig(seed=5, n_lines=60)
    rep = verify_axioms(oracle_from_quadric(ELLIPTIC), cfg)
    assert rep.verdict == "ConsistentWithBombon"
    assert rep.lines_tested == 60
    assert sum(rep.tallies.values()) == 60
    assert rep.two_sides_violations == 0
    assert rep.nonconforming_lines == []
    assert len(rep.line_tags) == 60
    assert rep.tallies["circle"] > 0


def test_verify_axioms_catches_bidisk():
    cfg = RunConfig(seed=5, n_lines=60)
    rep = verify_axioms(bidisk_oracle(), cfg)
    assert rep.verdict == "Violations"
    assert rep.tallies["nonconforming"] > 0
    assert rep.nonconforming_lines


def test_verify_axioms_vacuous():
    rep = verify_axioms(oracle_from_quadric(ELLIPTIC),
                        RunConfig(seed=1, n_lines=0))
    assert rep.verdict == "ConsistentWithBombon"
    assert rep.lines_tested == 0


def test_verify_axioms_deterministic():
    cfg = RunConfig(seed=12, n_lines=40)
    oracle = oracle_from_quadric(ELLIPTIC)
    r1 = verify_axioms(oracle, cfg)
    r2 = verify_axioms(oracle, cfg)
    assert canonical_dumps(r1.to_dict()) == canonical_dumps(r2.to_dict())
    r3 = verify_axioms(oracle, RunConfig(seed=13, n_lines=40))
    assert canonical_dumps(r1.to_dict()) != canonical_dumps(r3.to_dict())


def test_report_embeds_config():
    cfg = RunConfig(seed=99, n_lines=5)
    rep = verify_axioms(oracle_from_quadric(ELLIPTIC), cfg)
    d = rep.to_dict()
    assert d["config"]["seed"] == 99
    assert d["config"]["n_lines"] == 5
    assert "tolerances" in d["config"]
    assert d["version"]


def test_point_star_all_circles():
    rep = verify_point_star(oracle_from_quadric(ELLIPTIC),
                            ProjPoint([0.0, 0.0, 1.0]),
                            RunConfig(seed=3, n_lines=120))
    assert rep.verdict == "AllCircles"
    assert rep.circle > 0
    assert rep.other == 0


def test_point_star_precondition():
    flat = QuadricBombon.from_epsilons([1, -1, 0])
    with pytest.raises(PreconditionError):
        verify_point_star(oracle_from_quadric(flat),
                          ProjPoint([0.0, 0.0, 1.0]),
                          RunConfig(seed=3, n_lines=10))
