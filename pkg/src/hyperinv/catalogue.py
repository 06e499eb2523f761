"""The covariant/invariant catalogue for even-degree binary forms, absolute
invariants, and the genus classifier.

For F of degree d = 2g+2 the catalogue composes transvections:

    J_{4j} = (F,F)^(d-2j)            order 4j, degree 2
    I_2    = (F,F)^d
    I_4    = (J_4,J_4)^4             I_4' = (J_8,J_8)^8
    I_6    = ((F,J_4)^4,(F,J_4)^4)^(d-4)
    I_6'   = ((F,J_8)^8,(F,J_8)^8)^(d-8)          [d >= 8]
    I_6*   = ((F,J_12)^12,(F,J_12)^12)^(d-12)     [d >= 12]
    I_3    = (F,J_d)^d with J_d = (F,F)^(d/2)     [4 | d]
    M      = ((F,J_4)^4,(F,J_8)^8)^(d-10)         [d >= 10]
    I_12   = (M,M)^8
    and, for d = 22 only:
    I_6^star = ((F,J_16)^16,(F,J_16)^16)^(d-16)
    S        = (J_12,J_16)^12
    I_12^ast = ((J_16,S)^4,(J_16,S)^4)^12

Entries whose construction is impossible at the given degree are flagged
undefined (None), never zero.

Two absolute-invariant orientations deviate from their published display and
are pinned instead by the published special values they must reproduce (see
the project notes): v2 = I_3^4/(I_4')^3 and v4 = (I_6*)^2/(I_4')^3 (the
displayed v4 divides by I_4^3, which vanishes identically on the loci where
v4 is used).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import GenusError, UndefinedInvariantError, UnsupportedDegreeError
from .forms import BinaryForm, Covariant, transvect
from .polynomials import Poly, RatFunc

SUPPORTED_GENERA = (4, 5, 7, 8, 9, 10, 12)

INVARIANT_KEYS = ("I2", "I3", "I4", "I4p", "I6", "I6p", "I6star_ast", "I12",
                  "I6star", "I12ast")


def _is_zero(v) -> bool:
    if v is None:
        return True
    if isinstance(v, Poly):
        return v.is_zero
    return v == 0


@dataclass(frozen=True)
class InvariantSet:
    """Named exact invariants of one form; None marks entries undefined at this degree."""

    degree: int
    I2: object = None
    I3: object = None
    I4: object = None
    I4p: object = None
    I6: object = None
    I6p: object = None
    I6star_ast: object = None
    I12: object = None
    I6star: object = None
    I12ast: object = None

    def defined(self, name: str) -> bool:
        return getattr(self, name) is not None

    def value(self, name: str):
        v = getattr(self, name)
        if v is None:
            raise UndefinedInvariantError(f"{name} undefined for degree {self.degree} forms")
        return v

    def as_dict(self) -> dict:
        return {k: getattr(self, k) for k in INVARIANT_KEYS}


def catalogue_intermediates(F: BinaryForm) -> dict[str, Covariant]:
    """The intermediate covariants J_{4j} (j=1..4), M, and S where defined."""
    d = _check_degree(F)
    src = Covariant.source(F)
    out: dict[str, Covariant] = {}
    for j in (1, 2, 3, 4):
        if d - 2 * j >= 0:
            out[f"J{4 * j}"] = transvect(src, src, d - 2 * j)
    if d >= 10:
        fj4 = transvect(src, out["J4"], 4)
        fj8 = transvect(src, out["J8"], 8)
        out["M"] = transvect(fj4, fj8, d - 10)
    if d == 22:
        out["S"] = transvect(out["J12"], out["J16"], 12)
    return out


def _check_degree(F: BinaryForm) -> int:
    d = F.degree
    if d < 6 or d % 2:
        raise UnsupportedDegreeError(
            f"catalogue needs an even degree >= 6, got degree {d}")
    return d


def covariant_catalogue(F: BinaryForm) -> InvariantSet:
    """All catalogue invariants of F that exist at its degree, exactly."""
    d = _check_degree(F)
    src = Covariant.source(F)
    J4 = transvect(src, src, d - 2)
    J8 = transvect(src, src, d - 4)
    vals: dict[str, object] = {}
    vals["I2"] = transvect(src, src, d).constant_value()
    vals["I4"] = transvect(J4, J4, 4).constant_value()
    vals["I4p"] = transvect(J8, J8, 8).constant_value()
    fj4 = transvect(src, J4, 4)
    vals["I6"] = transvect(fj4, fj4, d - 4).constant_value()
    if d >= 8:
        fj8 = transvect(src, J8, 8)
        vals["I6p"] = transvect(fj8, fj8, d - 8).constant_value()
    if d % 4 == 0:
        Jd = transvect(src, src, d // 2)  # order d
        vals["I3"] = transvect(src, Jd, d).constant_value()
    if d >= 12:
        J12 = transvect(src, src, d - 6)
        fj12 = transvect(src, J12, 12)
        vals["I6star_ast"] = transvect(fj12, fj12, d - 12).constant_value()
    if d >= 10:
        M = transvect(fj4, fj8, d - 10)
        vals["I12"] = transvect(M, M, 8).constant_value()
    if d == 22:
        J12 = transvect(src, src, d - 6)
        J16 = transvect(src, src, d - 8)
        fj16 = transvect(src, J16, 16)
        vals["I6star"] = transvect(fj16, fj16, d - 16).constant_value()
        S = transvect(J12, J16, 12)
        js = transvect(J16, S, 4)
        vals["I12ast"] = transvect(js, js, 12).constant_value()
    return InvariantSet(degree=d, **vals)


@dataclass(frozen=True)
class AbsoluteInvariants:
    """Weight-zero ratios; None entries carry a reason in ``reasons``.

    v5 = I_6^star/I_12^ast is the one catalogue ratio that is NOT
    weight-balanced (degrees 6 vs 12), faithfully to its source.
    """

    degree: int
    i1: object = None
    i2: object = None
    i3: object = None
    j1: object = None
    j2: object = None
    s1: object = None
    s2: object = None
    v1: object = None
    v2: object = None
    v3: object = None
    v4: object = None
    v5: object = None
    reasons: dict = field(default_factory=dict)

    ABSOLUTE_KEYS = ("i1", "i2", "i3", "j1", "j2", "s1", "s2",
                     "v1", "v2", "v3", "v4", "v5")

    def defined(self, name: str) -> bool:
        return getattr(self, name) is not None

    def value(self, name: str):
        v = getattr(self, name)
        if v is None:
            raise UndefinedInvariantError(
                f"{name} undefined: {self.reasons.get(name, 'missing ingredient')}")
        return v

    def as_dict(self) -> dict:
        return {k: getattr(self, k) for k in self.ABSOLUTE_KEYS}


def _ratio(num, den):
    """Exact ratio; RatFunc when the invariants live in Q[mu]."""
    if isinstance(num, Poly) or isinstance(den, Poly):
        num = num if isinstance(num, Poly) else Poly((Fraction(num),))
        den = den if isinstance(den, Poly) else Poly((Fraction(den),))
        return RatFunc(num, den)
    return num / den


def absolute_invariants(source) -> AbsoluteInvariants:
    """Absolute invariants of a form (or of a precomputed InvariantSet)."""
    inv = source if isinstance(source, InvariantSet) else covariant_catalogue(source)
    vals: dict[str, object] = {}
    reasons: dict[str, str] = {}

    def put(name, num_name, den_name, num_fn, den_fn):
        num = getattr(inv, num_name)
        den = getattr(inv, den_name)
        if num is None:
            reasons[name] = f"requires {num_name}, undefined for degree {inv.degree}"
            return
        if den is None:
            reasons[name] = f"requires {den_name}, undefined for degree {inv.degree}"
            return
        den_v = den_fn(den)
        if _is_zero(den_v):
            reasons[name] = f"zero denominator {den_name}"
            return
        vals[name] = _ratio(num_fn(num), den_v)

    put("i1", "I4p", "I2", lambda x: x, lambda x: x * x)
    put("i2", "I3", "I2", lambda x: x * x, lambda x: x * x * x)
    put("i3", "I6star_ast", "I2", lambda x: x, lambda x: x * x * x)
    put("j1", "I6p", "I3", lambda x: x, lambda x: x * x)
    put("j2", "I6", "I3", lambda x: x, lambda x: x * x)
    put("s1", "I6", "I12", lambda x: x * x, lambda x: x)
    put("s2", "I6p", "I12", lambda x: x * x, lambda x: x)
    put("v1", "I6", "I6star_ast", lambda x: x, lambda x: x)
    put("v2", "I3", "I4p", lambda x: x * x * x * x, lambda x: x * x * x)
    put("v3", "I6", "I6p", lambda x: x, lambda x: x)
    put("v4", "I6star_ast", "I4p", lambda x: x * x, lambda x: x * x * x)
    put("v5", "I6star", "I12ast", lambda x: x, lambda x: x)
    return AbsoluteInvariants(degree=inv.degree, reasons=reasons, **vals)


@dataclass(frozen=True)
class ModuliPoint:
    """Classifier output: a 1- or 2-tuple of exact scalars plus its branch tag."""

    genus: int
    case_tag: str
    values: tuple

    def __post_init__(self):
        if len(self.values) not in (1, 2):
            raise ValueError("a moduli point has one or two components")


def genus_degree(g: int) -> int:
    return 2 * g + 2


def classify_point(F: BinaryForm, genus: int) -> ModuliPoint:
    """Dispatch the piecewise moduli invariant for the supported genera.

    The geometric reading assumes F squarefree (an actual curve); the
    computation itself is pure polynomial algebra.  For genus 4 the branch
    ratio needs I_6*, which no degree-10 form possesses; that branch raises.
    """
    if genus not in SUPPORTED_GENERA:
        raise GenusError(f"classification supports genera {SUPPORTED_GENERA}, got {genus}")
    d = genus_degree(genus)
    if F.degree != d:
        raise UnsupportedDegreeError(
            f"genus {genus} needs a degree-{d} form, got degree {F.degree}")
    inv = covariant_catalogue(F)
    absinv = absolute_invariants(inv)

    def point(tag, *names):
        return ModuliPoint(genus=genus, case_tag=tag,
                           values=tuple(_require(absinv, n, tag) for n in names))

    if genus == 4:
        return point("g=4", "v1")
    if genus in (5, 9):
        if not _is_zero(inv.I2):
            return point(f"g={genus}, I_2 != 0", "i1", "i2")
        return point(f"g={genus}, I_2 = 0", "v2")
    if genus == 7:
        if not _is_zero(inv.I3):
            return point("g=7, I_3 != 0", "j1", "j2")
        return point("g=7, I_3 = 0", "v3")
    if genus in (8, 12):
        if not _is_zero(inv.I2):
            return point(f"g={genus}, I_2 != 0", "i1", "i3")
        return point(f"g={genus}, I_2 = 0", "v4")
    # genus 10
    if not _is_zero(inv.I12):
        return point("g=10, I_12 != 0", "s2", "s1")
    return point("g=10, I_12 = 0", "v5")


def _require(absinv: AbsoluteInvariants, name: str, branch: str):
    v = getattr(absinv, name)
    if v is None:
        raise UndefinedInvariantError(
            f"branch '{branch}' needs {name}, undefined: "
            f"{absinv.reasons.get(name, 'missing ingredient')}")
    return v


#: invariants that must vanish for a curve on each locus (necessary, not sufficient)
VANISHING_BY_GENUS = {
    4: ("I2", "I4", "I4p", "I6p"),
    5: ("I4", "I6"),
    7: ("I2", "I4", "I4p", "I6star_ast"),
    8: ("I4",),
    9: ("I4", "I6"),
    10: ("I2", "I4", "I4p", "I6star_ast"),
    12: ("I4", "I6"),
}


def vanishing_profile(F: BinaryForm, genus: int):
    """Exact zero-tests of the locus's necessary-vanishing invariants."""
    if genus not in SUPPORTED_GENERA:
        raise GenusError(f"vanishing profile supports genera {SUPPORTED_GENERA}, got {genus}")
    inv = covariant_catalogue(F)
    return [(name, _is_zero(inv.value(name))) for name in VANISHING_BY_GENUS[genus]]
