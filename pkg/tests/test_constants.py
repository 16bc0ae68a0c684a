from fractions import Fraction

import pytest
from mpmath import mp, mpf

from geoforge.constants import (
    CertifiedValue,
    adams_bound,
    basmajian_bound,
    bers_bound,
    collar_width,
    direct_K,
    find_D,
    find_K,
    orthogonal_distance_bound,
    thick_part_threshold,
    thin_boundary_horocycle,
    to_fraction,
)
from geoforge.errors import (
    EpsilonOutOfRange,
    NoSolutionBelowCap,
    NotApplicable,
    NotHyperbolicType,
)
from geoforge.surfaces import SurfaceDescription, build_constants_report, surface_y


def test_to_fraction_exact():
    assert to_fraction(mpf(3) / 8) == Fraction(3, 8)
    assert to_fraction(Fraction(2, 7)) == Fraction(2, 7)
    assert to_fraction(5) == 5
    x = mpf(1) / 3
    assert abs(to_fraction(x) - Fraction(1, 3)) < Fraction(1, 2**50)


def test_basmajian_bound(ctx):
    with ctx.workprec():
        expected = 2 * mp.asinh(2) + 2 * mp.log(4) + 1
        assert abs(basmajian_bound(2, 2 * mp.log(4), ctx) - expected) < mpf(2) ** -100
        # degenerate orthogonal distance
        assert abs(basmajian_bound(2, mpf(1) / 10**30, ctx)
                   - (2 * mp.asinh(2) + 1)) < mpf(2) ** -90
    with pytest.raises(ValueError):
        basmajian_bound(1, 1, ctx)


def test_basmajian_log_growth(ctx):
    # C(k)/log k approaches 2 from above
    with ctx.workprec():
        ratios = [basmajian_bound(10**e, 1, ctx) / mp.log(10**e) for e in (3, 6, 9, 12)]
        assert all(r > 2 for r in ratios)
        assert all(a > b for a, b in zip(ratios, ratios[1:]))
        assert ratios[-1] - 2 < mpf(1) / 2


def test_thick_part_threshold(ctx):
    with ctx.workprec():
        assert abs(thick_part_threshold(Fraction(1, 4), 144, ctx) - mpf(1) / 4) < mpf(2) ** -100
        assert thick_part_threshold(Fraction(1, 4), 0, ctx) == 0
    with pytest.raises(EpsilonOutOfRange):
        thick_part_threshold(0.6, 4, ctx)


def test_bers_bound(ctx):
    with ctx.workprec():
        assert abs(bers_bound(1, 1, ctx) - 4 * mp.log(4 * mp.pi)) < mpf(2) ** -100
        assert abs(bers_bound(0, 4, ctx) - 4 * mp.log(8 * mp.pi)) < mpf(2) ** -100
    with pytest.raises(NotApplicable):
        bers_bound(0, 3, ctx)


def test_adams_bound():
    assert adams_bound(0, 3) == 4
    assert adams_bound(1, 1) == 6
    assert adams_bound(2, 1) == 18
    with pytest.raises(NotHyperbolicType):
        adams_bound(0, 2)
    with pytest.raises(NotHyperbolicType):
        adams_bound(3, 0)


def test_thin_boundary_horocycle(ctx):
    with ctx.workprec():
        # algebraic inversion: coth(eps0) = 2 gives length 2
        assert abs(thin_boundary_horocycle(mp.acoth(2), ctx) - 2) < mpf(2) ** -100
        val = thin_boundary_horocycle(Fraction(1, 600), ctx)
        direct = 2 / mp.sqrt(mp.coth(mpf(1) / 600) - 1)
        assert abs(val - direct) < mpf(2) ** -100
        # frozen decimal, small-eps scale 2*sqrt(eps) as sanity
        assert mp.nstr(val, 8) == "0.081717747"
        assert abs(val - 2 * mp.sqrt(mpf(1) / 600)) < mpf("0.001")
        # monotone increasing
        samples = [thin_boundary_horocycle(mpf(e) / 100, ctx) for e in range(1, 50, 7)]
        assert all(a < b for a, b in zip(samples, samples[1:]))


def test_orthogonal_distance_bound(ctx):
    with ctx.workprec():
        L = bers_bound(1, 1, ctx)
        expected = 2 * mp.log(4 * mp.cosh(L / 2))
        assert abs(orthogonal_distance_bound(1, 1, 1, ctx) - expected) < mpf(2) ** -100
        # h at the degenerate top: distance 0
        top = 4 * mp.cosh(L / 2)
        assert abs(orthogonal_distance_bound(top, 1, 1, ctx)) < mpf(2) ** -90
        # decreasing in h, increasing in (g, n)
        assert orthogonal_distance_bound(2, 1, 1, ctx) < orthogonal_distance_bound(1, 1, 1, ctx)
        assert orthogonal_distance_bound(1, 1, 2, ctx) > orthogonal_distance_bound(1, 1, 1, ctx)
    with pytest.raises(NotApplicable):
        orthogonal_distance_bound(1, 0, 3, ctx)


def test_collar_width(ctx):
    with ctx.workprec():
        assert abs(collar_width(2 * mp.asinh(1), ctx) - mp.asinh(1)) < mpf(2) ** -100
        assert abs(collar_width(2 * mp.acosh(3), ctx) - mp.asinh(1 / mp.sqrt(8))) < mpf(2) ** -100
        assert collar_width(mpf(1) / 10**6, ctx) > 10  # diverges for short geodesics


# --------------------------------------------------------------------------
# Certified searches


def _pointwise(expr, k, bits=320):
    with mp.workprec(bits):
        return expr(k)


def test_find_D_certificate_and_unit_case(ctx):
    # unit-style case: eps0 = 12 makes the sqrt coefficient 1
    cert = find_D(12, Fraction(1, 10**30), ctx)
    assert isinstance(cert, CertifiedValue)
    phi = lambda x: mpf(1) * mp.sqrt(x) - 2 * mp.asinh(mpf(6) * x) - mpf(1) / 10**30 - 24
    assert _pointwise(phi, cert.value) > 0
    assert cert.prev_fails or cert.prev_below_regime
    if cert.prev_fails:
        assert _pointwise(phi, cert.value - 1) <= 0


def test_find_D_dominance_large_x(ctx):
    # sqrt beats log: a solution always exists for positive inputs
    cert = find_D(Fraction(1, 600), Fraction(1, 10**20), ctx)
    assert cert.value >= 2


def test_direct_K_unit_values(ctx):
    # least K with 2 asinh(k) + 1 < sqrt(k): brute scan oracle
    cert = direct_K(12, Fraction(1, 10**40), ctx)
    psi = lambda k: mp.sqrt(mpf(k)) - 2 * mp.asinh(mpf(k)) - 1
    with mp.workprec(200):
        assert psi(cert.value) > 0
        assert psi(cert.value - 1) < 0
        for k in range(2, cert.value):
            assert psi(k) < 0, k
    assert cert.value == 156  # frozen from the brute scan


def test_find_K_unit_value(ctx):
    # least K with 2 asinh(k) + 1 < k^(1/5)
    cert = find_K(1, 1, Fraction(1, 10**40), 2, ctx)
    psi = lambda k: mpf(k) ** (mpf(1) / 5) - 2 * mp.asinh(mpf(k)) - 1
    assert cert.value == 90565513  # frozen at first certified run
    with mp.workprec(200):
        assert psi(cert.value) > 0
        assert psi(cert.value - 1) < 0


def test_search_caps():
    with pytest.raises(NoSolutionBelowCap):
        find_D(Fraction(1, 10**6), 5, cap=10**6)
    with pytest.raises(NoSolutionBelowCap):
        direct_K(Fraction(1, 10**6), 5, cap=10**3)


# --------------------------------------------------------------------------
# Full pipeline reports


def test_surface_y_preset(ctx):
    y = surface_y(ctx)
    with ctx.workprec():
        assert y.h_max == 4
        assert abs(y.systole - 2 * mp.acosh(3)) < mpf(2) ** -100
        assert abs(y.d1 - 2 * mp.log(4)) < mpf(2) ** -100
        expected = 2 * mp.log(2 * mp.sqrt(mp.coth(mpf(1) / 600) - 1))
        assert abs(y.d_eps0 - expected) < mpf(2) ** -100


def test_report_identities_exact(ctx):
    rep = build_constants_report(surface_y(ctx), ks=[2, 3], ctx=ctx)
    assert rep.h0 == Fraction(1, 120)
    assert rep.eps0 == Fraction(1, 600)
    assert rep.eps == Fraction(1, 600) / (10 * rep.D.value)  # exact identity
    assert rep.K.value >= rep.D.value
    assert rep.D.value >= 2
    assert set(rep.C) == {2, 3}
    assert rep.eps0_rule == "min(h0/5, systole/5)"


def test_report_topological_modes(ctx):
    rep = build_constants_report(SurfaceDescription.topological(1, 1, 1), ctx=ctx)
    assert rep.h_adams == 6
    assert rep.h0 == Fraction(1, 180)
    assert rep.eps0 == Fraction(1, 900)
    assert rep.eps0_rule == "min(h0/5, systole_floor/2)"
    with ctx.workprec():
        assert abs(rep.L_bers - 4 * mp.log(4 * mp.pi)) < mpf(2) ** -100
        assert abs(rep.d_corollary - 2 * mp.log(4 * mp.cosh(rep.L_bers / 2))) < mpf(2) ** -100
    with pytest.raises(NotApplicable):
        build_constants_report(SurfaceDescription.topological(0, 3, 1), ctx=ctx)


def test_report_as_dict_schema(ctx):
    rep = build_constants_report(surface_y(ctx), ks=[2], ctx=ctx)
    d = rep.as_dict()
    for field in ("h0", "eps0", "eps", "d_used", "D", "K", "C",
                  "thin_boundary_horocycle", "K_direct_eps_thick",
                  "K_direct_eps_pipeline", "definitions"):
        assert field in d
    assert d["D"]["holds_at_value"] is True
    assert d["eps0"]["fraction"] == "1/600"
