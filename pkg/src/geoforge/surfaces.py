"""Surface descriptions and the full constants report.

A surface enters the pipeline either explicitly (measured horocycle
supremum, systole, orthogonal self-distances) or topologically (genus,
punctures, a systole floor); both modes share every downstream formula.
Exact rational bookkeeping is used wherever the printed identities are
exact (h0 = 1/(30 h_max), eps = eps0/(10 D)), so the reported fields
satisfy them bit for bit.

Note the deliberate asymmetry, kept as printed in the two sources of
the recipe: explicit mode uses eps0 = min(h0/5, systole/5), topological
mode uses eps0 = min(h0/5, systole_floor/2).  The report flags it.
"""

from dataclasses import dataclass
from fractions import Fraction

from mpmath import mp

from .constants import (
    CertifiedValue,
    D_SEARCH_CAP,
    K_SEARCH_CAP,
    adams_bound,
    basmajian_bound,
    bers_bound,
    direct_K,
    find_D,
    find_K,
    thin_boundary_horocycle,
    to_fraction,
)
from .numerics import PrecisionContext, context, to_mpf


@dataclass(frozen=True)
class SurfaceDescription:
    mode: str                    # "explicit" | "topological"
    h_max: object = None         # explicit: longest embedded horocycle
    systole: object = None       # explicit: systole length
    d1: object = None            # explicit: self-distance of the length-1 horocycle
    d_eps0: object = None        # explicit: max thin-boundary self-distance
    genus: int = None            # topological
    punctures: int = None        # topological
    systole_floor: object = None # topological

    @classmethod
    def explicit(cls, h_max, systole, d1, d_eps0):
        if not (h_max > 0 and systole > 0 and d1 > 0 and d_eps0 > 0):
            raise ValueError("all explicit lengths must be positive")
        return cls("explicit", h_max=h_max, systole=systole, d1=d1, d_eps0=d_eps0)

    @classmethod
    def topological(cls, genus, punctures, systole_floor):
        if punctures < 1:
            raise ValueError("topological mode needs at least one puncture")
        if not systole_floor > 0:
            raise ValueError("systole floor must be positive")
        adams_bound(genus, punctures)  # validates the type
        return cls("topological", genus=genus, punctures=punctures,
                   systole_floor=systole_floor)


def surface_y(ctx: PrecisionContext = None) -> SurfaceDescription:
    """The thrice punctured sphere preset.

    h_max = 4 is the horocycle bound for type (0,3); the systole is the
    figure-eight length 2 acosh(3) (least |trace| = 6 over the word
    survey); d1 = 2 log 4 is the exact one-cusp self-distance at level
    one; d_eps0 evaluates the same formula at the eps0-thin boundary
    horocycle.
    """
    ctx = ctx or context()
    h_max = 4
    with ctx.workprec():
        systole = 2 * mp.acosh(2 + mp.mpf(1))  # keep the integer 3 exact
        d1 = 2 * mp.log(4)
        h0 = Fraction(1, 30 * h_max)
        eps0 = min(h0 / 5, to_fraction(systole) / 5)
        d_eps0 = 2 * mp.log(4 / to_mpf(thin_boundary_horocycle(eps0, ctx)))
    return SurfaceDescription.explicit(h_max, systole, d1, d_eps0)


@dataclass(frozen=True)
class ConstantsReport:
    surface: SurfaceDescription
    h0: Fraction
    eps0: Fraction
    eps0_rule: str
    d_used: object
    d1: object
    D: CertifiedValue
    eps: Fraction
    K: CertifiedValue
    K_direct_eps_thick: CertifiedValue
    K_direct_eps_pipeline: CertifiedValue
    C: dict
    thin_boundary_horocycle: object
    precision_bits: int
    L_bers: object = None
    h_adams: int = None
    d_corollary: object = None

    def as_dict(self):
        ctx = PrecisionContext(self.precision_bits)
        s = ctx.str

        def num(x):
            if x is None:
                return None
            if isinstance(x, Fraction):
                return {"fraction": f"{x.numerator}/{x.denominator}", "decimal": s(to_mpf(x))}
            return s(x)

        surf = {"mode": self.surface.mode}
        if self.surface.mode == "explicit":
            surf.update(h_max=num(self.surface.h_max), systole=num(self.surface.systole),
                        d1=num(self.surface.d1), d_eps0=num(self.surface.d_eps0))
        else:
            surf.update(genus=self.surface.genus, punctures=self.surface.punctures,
                        systole_floor=num(self.surface.systole_floor))
        out = {
            "surface": surf,
            "h0": num(self.h0),
            "eps0": num(self.eps0),
            "eps0_rule": self.eps0_rule,
            "eps0_rule_note": (
                "the defining recipe divides the systole by 5 in explicit mode "
                "and by 2 in topological mode; both are implemented as printed"
            ),
            "d_used": num(self.d_used),
            "d1": num(self.d1),
            "D": self.D.as_dict(),
            "eps": num(self.eps),
            "K": self.K.as_dict(),
            "K_direct_eps_thick": self.K_direct_eps_thick.as_dict(),
            "K_direct_eps_pipeline": self.K_direct_eps_pipeline.as_dict(),
            "C": {str(k): num(v) for k, v in sorted(self.C.items())},
            "thin_boundary_horocycle": num(self.thin_boundary_horocycle),
            "precision_bits": self.precision_bits,
            "definitions": {
                "h0": "1/(30*h_max)",
                "eps0": self.eps0_rule,
                "eps": "eps0/(10*D)",
                "D": "least certified D >= 2 with (eps0/12)*sqrt(x) > "
                     "2*asinh(eps0*x/2) + d_used + 2*eps0 for all x >= D",
                "K": "least certified K >= D with 2*asinh(k) + d1 + 1 < "
                     "(eps/h_max)*k^(1/5) for all k >= K",
                "K_direct": "least certified K >= 2 with 2*asinh(k) + d1 + 1 < "
                            "(eps/12)*sqrt(k) for all k >= K",
                "C": "2*asinh(k) + d1 + 1",
            },
        }
        if self.surface.mode == "topological":
            out["L_bers"] = num(self.L_bers)
            out["h_adams"] = self.h_adams
            out["d_corollary"] = num(self.d_corollary)
        return out


def build_constants_report(surface: SurfaceDescription, ks=(),
                           ctx: PrecisionContext = None,
                           d_cap=D_SEARCH_CAP, k_cap=K_SEARCH_CAP) -> ConstantsReport:
    """Run the whole pipeline for one surface description."""
    ctx = ctx or context()
    topo = surface.mode == "topological"
    if topo:
        g, n = surface.genus, surface.punctures
        h_adams = adams_bound(g, n)
        L = bers_bound(g, n, ctx)  # NotApplicable for (0,3) propagates
        h_max = h_adams
        h0 = Fraction(1, 30 * h_adams)
        eps0 = min(h0 / 5, to_fraction(surface.systole_floor) / 2)
        eps0_rule = "min(h0/5, systole_floor/2)"
        thin_h = thin_boundary_horocycle(eps0, ctx)
        with ctx.workprec():
            d1 = 2 * mp.log(4 * mp.cosh(L / 2))
            d_used = 2 * mp.log(4 * mp.cosh(L / 2) / to_mpf(thin_h))
        d_corollary = d1
        systole_for_thick = surface.systole_floor
    else:
        h_adams = None
        L = None
        d_corollary = None
        h_max = surface.h_max
        h0 = 1 / (30 * to_fraction(h_max))
        eps0 = min(h0 / 5, to_fraction(surface.systole) / 5)
        eps0_rule = "min(h0/5, systole/5)"
        thin_h = thin_boundary_horocycle(eps0, ctx)
        d1 = surface.d1
        d_used = surface.d_eps0
        systole_for_thick = surface.systole

    D = find_D(eps0, d_used, ctx, cap=d_cap)
    eps = eps0 / (10 * D.value)
    K = find_K(eps, h_max, d1, D.value, ctx, cap=k_cap)
    eps_thick = min(Fraction(1, 4), to_fraction(systole_for_thick) / 2)
    K_thick = direct_K(eps_thick, d1, ctx, cap=k_cap)
    K_pipe = direct_K(eps, d1, ctx, cap=k_cap)
    C = {int(k): basmajian_bound(int(k), d1, ctx) for k in ks if int(k) >= 2}
    return ConstantsReport(
        surface=surface, h0=h0, eps0=eps0, eps0_rule=eps0_rule,
        d_used=d_used, d1=d1, D=D, eps=eps, K=K,
        K_direct_eps_thick=K_thick, K_direct_eps_pipeline=K_pipe, C=C,
        thin_boundary_horocycle=thin_h, precision_bits=ctx.precision,
        L_bers=L, h_adams=h_adams, d_corollary=d_corollary,
    )
