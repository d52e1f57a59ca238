"""Circle action, bundle projection, pseudo-unitary transports."""

import numpy as np
import pytest

from bombon.actions import (CoreSplit, bundle_projection,
                            homogeneity_transport, pseudo_unitary_check,
                            s1_action)
from bombon.errors import NotOnQuadric, NotSmooth
from bombon.linalg import max_abs
from bombon.projective import ProjPoint, proj_close
from bombon.quadrics import (QuadricBombon, random_bombon, random_point_on,
                             random_smooth_bombon)
from bombon.sections import SectionTag, classify_line_section


def test_core_split_frozen():
    x = QuadricBombon.from_epsilons([1, -1])
    split = CoreSplit.from_quadric(x)
    assert np.allclose(split.p_pos, np.diag([1.0, 0.0]))
    assert np.allclose(split.p_neg, np.diag([0.0, 1.0]))
    v = np.array([1.0, 1.0], dtype=complex)
    moved = s1_action(x, split, np.pi / 2, v)
    assert np.allclose(moved, [1.0, 1j], atol=1e-15)


def test_core_split_needs_smooth():
    with pytest.raises(NotSmooth):
        CoreSplit.from_quadric(QuadricBombon.from_epsilons([1, -1, 0]))


def test_bundle_projection_frozen():
    x = QuadricBombon.from_epsilons([1, 1, -1])
    split = CoreSplit.from_quadric(x)
    pu, pv = bundle_projection(x, split, ProjPoint([1.0, 0.0, 1.0]))
    assert proj_close(pu.v, np.array([1.0, 0.0, 0.0]))
    assert proj_close(pv.v, np.array([0.0, 0.0, 1.0]))


def test_bundle_projection_needs_on_point():
    x = QuadricBombon.from_epsilons([1, 1, -1])
    split = CoreSplit.from_quadric(x)
    with pytest.raises(NotOnQuadric):
        bundle_projection(x, split, ProjPoint([1.0, 0.0, 0.0]))


def test_orbit_stays_on_quadric_and_line():
    rng = np.random.default_rng(83)
    for _ in range(40):
        n = int(rng.integers(1, 6))
        x = random_smooth_bombon(rng, n)
        split = CoreSplit.from_quadric(x)
        p = random_point_on(rng, x)
        pu, pv = bundle_projection(x, split, p)
        span = np.column_stack([pu.v, pv.v])
        coef, *_ = np.linalg.lstsq(span, p.unit, rcond=None)
        assert np.linalg.norm(span @ coef - p.unit) < 1e-9
        for theta in (0.4, 1.9, 3.6):
            w = s1_action(x, split, theta, p.unit)
            assert abs(x.value(ProjPoint(w))) < 1e-9
            coef, *_ = np.linalg.lstsq(span, w, rcond=None)
            assert np.linalg.norm(span @ coef - w) < 1e-9


def test_action_fixes_cores_only():
    rng = np.random.default_rng(89)
    x = random_smooth_bombon(rng, 3)
    split = CoreSplit.from_quadric(x)
    cu, cv = x.cores()
    for sub in (cu, cv):
        k = sub.basis.shape[1]
        w = sub.basis @ (rng.standard_normal(k) + 1j * rng.standard_normal(k))
        assert proj_close(s1_action(x, split, 1.7, w), w, 1e-9)
    p = random_point_on(rng, x)
    assert not proj_close(s1_action(x, split, 1.7, p.unit), p.unit, 1e-6)


def test_pseudo_unitary_check():
    a = np.diag([1.0, -1.0]).astype(complex)
    assert pseudo_unitary_check(np.diag([np.exp(0.3j), np.exp(-1.1j)]), a)
    assert not pseudo_unitary_check(np.diag([2.0, 1.0]).astype(complex), a)


def test_transport_frozen_pair():
    x = QuadricBombon.from_epsilons([1, -1])
    p = ProjPoint([1.0, 1.0])
    q = ProjPoint([1.0, 1j])
    wit = homogeneity_transport(x, p, q)
    assert wit.residual < 1e-12
    assert pseudo_unitary_check(wit.t, x.a)
    assert proj_close(wit.t @ p.v, q.v, 1e-10)


def test_transport_identity_shortcut():
    x = QuadricBombon.from_epsilons([1, 1, -1])
    p = ProjPoint([1.0, 0.0, 1.0])
    wit = homogeneity_transport(x, p, ProjPoint([2.0, 0.0, 2.0]))
    assert max_abs(wit.t - np.eye(3)) == 0.0


def test_transport_random_pairs():
    rng = np.random.default_rng(97)
    for _ in range(30):
        n = int(rng.integers(1, 6))
        x = random_smooth_bombon(rng, n)
        p = random_point_on(rng, x)
        q = random_point_on(rng, x)
        wit = homogeneity_transport(x, p, q)
        assert wit.residual <= 1e-8 * max_abs(x.a)
        assert proj_close(wit.t @ p.v, q.v, 1e-8)


def test_transport_requires_smooth_and_on():
    sing = QuadricBombon.from_epsilons([1, -1, 0])
    p = ProjPoint([1.0, 1.0, 0.0])
    with pytest.raises(NotSmooth):
        homogeneity_transport(sing, p, p)
    x = QuadricBombon.from_epsilons([1, 1, -1])
    with pytest.raises(NotOnQuadric):
        homogeneity_transport(x, ProjPoint([1.0, 0.0, 0.0]),
                              ProjPoint([1.0, 0.0, 1.0]))


def test_transport_preserves_section_tags():
    rng = np.random.default_rng(101)
    x = random_smooth_bombon(rng, 3)
    p = random_point_on(rng, x)
    q = random_point_on(rng, x)
    wit = homogeneity_transport(x, p, q)
    from bombon.projective import ProjLine, sample_line
    for _ in range(25):
        line = sample_line(rng, 3)
        s1, _ = classify_line_section(x, line)
        s2, _ = classify_line_section(
            x, ProjLine(wit.t @ line.a, wit.t @ line.b))
        if s1.low_confidence or s2.low_confidence:
            continue
        assert s1.tag is s2.tag
