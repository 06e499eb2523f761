"""Locus parametrizations for the A4-type genera, moduli-to-parameter
recovery, and the genus-5 locus equation.

The parametrization table ships as a versioned JSON fixture
(data/locus_table.json).  Entries are exact rational-function data; where the
published display and exact recomputation disagree, the recomputed form is
active and the published variant is retained with a status note.  Ground
truth for every entry is classify_point of the matching rational model; the
verification driver re-establishes that correspondence symbolically.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources

from .a4 import rational_model
from .catalogue import (ModuliPoint, absolute_invariants, classify_point,
                        vanishing_profile)
from .errors import (DomainError, GenusError, OffLocusError, PoleError,
                     RecoveryError)
from .polynomials import Poly, RatFunc, poly_divides, poly_gcd
from .scalars import rational_from_str

LOCUS_GENERA = (4, 5, 7, 8, 9, 10, 12)


@dataclass(frozen=True)
class CubicConstraint:
    """Degenerate-branch result: the moduli value satisfies relation(p) = 0
    whenever parameter_poly(mu) = 0 (no closed rational value exists)."""

    genus: int
    case_tag: str
    parameter_poly: Poly
    relation: Poly


@dataclass(frozen=True)
class SpecialValue:
    mu: Fraction
    published: Fraction
    recomputed: Fraction | None
    status: str
    case_tag: str
    note: str = ""


@dataclass(frozen=True)
class LocusEntry:
    genus: int
    kind: str                      # "constant" | "pair"
    status: str
    value: Fraction | None = None
    p1: RatFunc | None = None
    p2: RatFunc | None = None
    special_values: tuple = ()
    special_condition: dict | None = None
    degenerate_branch: dict | None = None
    published_variants: dict | None = None
    note: str = ""


@dataclass(frozen=True)
class LocusTable:
    version: str
    entries: dict

    def entry(self, genus: int) -> LocusEntry:
        try:
            return self.entries[genus]
        except KeyError:
            raise GenusError(
                f"locus table covers genera {sorted(self.entries)}, got {genus}") from None


def _parse_poly(strings) -> Poly:
    return Poly(tuple(rational_from_str(s) for s in strings))


def _parse_ratfunc(obj) -> RatFunc:
    return RatFunc(_parse_poly(obj["num"]), _parse_poly(obj["den"]))


def load_locus_table(path: str | None = None) -> LocusTable:
    """Load the shipped fixture, or an override file."""
    if path is None:
        text = resources.files("hyperinv").joinpath("data/locus_table.json").read_text()
    else:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    raw = json.loads(text)
    entries = {}
    for key, obj in raw["genera"].items():
        g = int(key)
        specials = tuple(
            SpecialValue(
                mu=rational_from_str(sv["mu"]),
                published=rational_from_str(sv["published"]),
                recomputed=(rational_from_str(sv["recomputed"])
                            if sv.get("recomputed") else None),
                status=sv["status"],
                case_tag=sv.get("case", ""),
                note=sv.get("note", ""),
            )
            for sv in obj.get("special_values", ())
        )
        entries[g] = LocusEntry(
            genus=g,
            kind=obj["kind"],
            status=obj["status"],
            value=rational_from_str(obj["value"]) if obj.get("value") else None,
            p1=_parse_ratfunc(obj["p1"]) if obj.get("p1") else None,
            p2=_parse_ratfunc(obj["p2"]) if obj.get("p2") else None,
            special_values=specials,
            special_condition=obj.get("special_condition"),
            degenerate_branch=obj.get("degenerate_branch"),
            published_variants=obj.get("published_variants"),
            note=obj.get("note", ""),
        )
    return LocusTable(version=raw["version"], entries=entries)


_DEFAULT_TABLE = None


def default_table() -> LocusTable:
    global _DEFAULT_TABLE
    if _DEFAULT_TABLE is None:
        _DEFAULT_TABLE = load_locus_table()
    return _DEFAULT_TABLE


def locus_parametrization(genus: int, mu, table: LocusTable | None = None):
    """Evaluate the locus-table entry at a rational parameter.

    Returns a ModuliPoint, or a CubicConstraint on the genus-7 degenerate
    branch.  Special parameter values (poles of the generic branch) return
    the recorded special value; the recomputed one is used where the
    published value could not be reproduced (status on the table entry).
    """
    table = table or default_table()
    entry = table.entry(genus)
    if entry.kind == "constant":
        return ModuliPoint(genus=genus, case_tag=f"g={genus}", values=(entry.value,))
    mu = Fraction(mu)
    for sv in entry.special_values:
        if sv.mu == mu:
            value = sv.recomputed if sv.recomputed is not None else sv.published
            return ModuliPoint(genus=genus, case_tag=sv.case_tag, values=(value,))
    if entry.special_condition is not None:
        cubic = _parse_poly(entry.special_condition["parameter_poly"])
        if cubic(mu) == 0:
            return CubicConstraint(
                genus=genus,
                case_tag=entry.special_condition.get("case", f"g={genus}"),
                parameter_poly=cubic,
                relation=_parse_poly(entry.special_condition["point_relation"]),
            )
    if entry.degenerate_branch is not None:
        for factor in entry.degenerate_branch["condition_factors"]:
            if _parse_poly(factor)(mu) == 0:
                raise DomainError(
                    f"genus {genus} degenerate branch at mu = {mu}: "
                    + entry.degenerate_branch["note"])
    try:
        v1 = entry.p1.eval(mu)
        v2 = entry.p2.eval(mu)
    except PoleError as exc:
        raise PoleError(
            f"mu = {mu} is a pole of the genus-{genus} parametrization not covered "
            f"by a recorded special value", at=mu) from exc
    return ModuliPoint(genus=genus, case_tag=_generic_tag(genus), values=(v1, v2))


def _generic_tag(genus: int) -> str:
    if genus in (5, 9, 8, 12):
        return f"g={genus}, I_2 != 0"
    if genus == 7:
        return "g=7, I_3 != 0"
    return "g=10, I_12 != 0"


def recover_mu(genus: int, point, table: LocusTable | None = None):
    """All rational parameters mapping to the given moduli point, smallest
    canonical encoding first.

    Computed as rational roots of gcd(num(p1(mu) - p1), num(p2(mu) - p2)),
    then filtered by exact back-substitution.  A gcd whose rational roots
    cannot be extracted raises RecoveryError carrying that polynomial.
    """
    table = table or default_table()
    entry = table.entry(genus)
    if entry.kind == "constant":
        raise GenusError(f"genus {genus} locus is a single point; no parameter to recover")
    values = tuple(point.values) if isinstance(point, ModuliPoint) else tuple(point)
    if len(values) == 1:
        hits = [sv.mu for sv in entry.special_values
                if values[0] in (sv.recomputed, sv.published)]
        if not hits:
            raise OffLocusError(
                f"one-component point {values[0]} matches no recorded special value "
                f"for genus {genus}")
        return _canonical(hits)
    p1, p2 = Fraction(values[0]), Fraction(values[1])
    n1 = entry.p1.num - p1 * entry.p1.den
    n2 = entry.p2.num - p2 * entry.p2.den
    if n1.is_zero or n2.is_zero:
        raise RecoveryError("a component matches its parametrization identically; "
                            "the fiber is not finite")
    g = poly_gcd(n1, n2)
    if g.degree == 0:
        raise OffLocusError(
            f"point ({p1}, {p2}) is not on the genus-{genus} locus "
            f"(the two component equations share no root)")
    candidates = _rational_roots(g)
    if candidates is None:
        raise RecoveryError(
            f"cannot extract rational roots of the degree-{g.degree} fiber polynomial",
            obstruction=g)
    good = []
    for mu in candidates:
        try:
            got = locus_parametrization(genus, mu, table)
        except DomainError:
            continue
        if isinstance(got, ModuliPoint) and len(got.values) == 2 and \
                tuple(got.values) == (p1, p2):
            good.append(mu)
    if not good:
        raise OffLocusError(
            f"point ({p1}, {p2}) is not on the genus-{genus} locus "
            f"(no candidate parameter back-substitutes)")
    return _canonical(good)


def _canonical(values):
    def key(q):
        enc = str(q)
        return (len(enc), enc)
    out = sorted(set(values), key=key)
    return out


def _rational_roots(p: Poly):
    """All rational roots of p, or None if extraction is out of reach."""
    from math import isqrt

    roots = set()
    # strip mu = 0 roots
    coeffs = list(p.coeffs)
    while coeffs and coeffs[0] == 0:
        roots.add(Fraction(0))
        coeffs.pop(0)
    p = Poly(coeffs)
    while p.degree >= 1:
        if p.degree == 1:
            roots.add(-p.coeffs[0] / p.coeffs[1])
            return sorted(roots)
        if p.degree == 2:
            c, b, a = p.coeffs
            disc = b * b - 4 * a * c
            if disc < 0:
                return sorted(roots)
            n, d = disc.numerator, disc.denominator
            rn, rd = isqrt(n), isqrt(d)
            if rn * rn != n or rd * rd != d:
                return sorted(roots)
            s = Fraction(rn, rd)
            roots.add((-b + s) / (2 * a))
            roots.add((-b - s) / (2 * a))
            return sorted(roots)
        # higher degree: divisor search on the primitive integer form
        ints = _to_int(p)
        if ints is None or abs(ints[0]) > 10**12 or abs(ints[-1]) > 10**12:
            return None
        found = None
        for num in _divisors(abs(ints[0])):
            for den in _divisors(abs(ints[-1])):
                for cand in (Fraction(num, den), Fraction(-num, den)):
                    if p(cand) == 0:
                        found = cand
                        break
                if found is not None:
                    break
            if found is not None:
                break
        if found is None:
            return sorted(roots)
        roots.add(found)
        p = p // Poly((-found, Fraction(1)))
    return sorted(roots)


def _to_int(p: Poly):
    from math import gcd, lcm
    den = 1
    for c in p.coeffs:
        den = lcm(den, Fraction(c).denominator)
    ints = [int(Fraction(c) * den) for c in p.coeffs]
    g = 0
    for c in ints:
        g = gcd(g, abs(c))
    return [c // g for c in ints] if g else None


def _divisors(n: int):
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            if d != n // d:
                out.append(n // d)
        d += 1
    return sorted(out)


# -- the genus-5 locus equation ----------------------------------------------

#: coefficients of the genus-5 locus relation in (p1, p2)
_L5_TERMS = (
    (Fraction(4920750), 3, 0),
    (Fraction(-28224), 0, 2),
    (Fraction(-164025), 2, 0),
    (Fraction(-136080), 1, 1),
    (Fraction(672), 0, 1),
    (Fraction(1620), 1, 0),
    (Fraction(-4), 0, 0),
)


def genus5_locus_residual(point):
    """Exact residual of the genus-5 locus equation at a two-component point.

    Accepts Fraction pairs or RatFunc pairs (for symbolic verification).
    """
    values = tuple(point.values) if isinstance(point, ModuliPoint) else tuple(point)
    if len(values) != 2:
        raise DomainError("the genus-5 locus equation needs a two-component point")
    x, y = values
    acc = None
    for coef, ex, ey in _L5_TERMS:
        term = coef * _pow(x, ex) * _pow(y, ey)
        acc = term if acc is None else acc + term
    return acc


def _pow(v, k):
    if k == 0:
        return Fraction(1)
    out = v
    for _ in range(k - 1):
        out = out * v
    return out


def _l5_partials(x, y):
    d1 = (Fraction(14762250) * _pow(x, 2) + Fraction(-328050) * x
          + Fraction(-136080) * y + Fraction(1620))
    d2 = Fraction(-56448) * y + Fraction(-136080) * x + Fraction(672)
    return d1, d2


def genus5_locus_is_singular(point) -> bool:
    """Residual and both formal partials vanish at the point."""
    values = tuple(point.values) if isinstance(point, ModuliPoint) else tuple(point)
    x, y = values
    if genus5_locus_residual(values) != 0:
        return False
    d1, d2 = _l5_partials(x, y)
    return d1 == 0 and d2 == 0


def genus5_singular_point_analysis(table: LocusTable | None = None) -> dict:
    """Exact completeness check: on the parametrized curve, the singular
    system's solutions all map to the unique singular point (0, 1/84).

    Substitutes the parametrization into both partial derivatives, takes the
    gcd of the numerators, and checks that every root of that gcd maps to
    (0, 1/84) via polynomial divisibility (no root extraction needed).
    """
    table = table or default_table()
    entry = table.entry(5)
    p1, p2 = entry.p1, entry.p2
    d1 = (Fraction(14762250) * p1 * p1 + Fraction(-328050) * p1
          + Fraction(-136080) * p2 + Fraction(1620))
    d2 = Fraction(-56448) * p2 + Fraction(-136080) * p1 + Fraction(672)
    g = poly_gcd(d1.num, d2.num)
    radical = g // poly_gcd(g, g.derivative()) if g.degree > 0 else g
    target2 = p2 - Fraction(1, 84)
    return {
        "gcd_degree": g.degree,
        "all_roots_map_to_singular_point": (
            poly_divides(radical, p1.num) and poly_divides(radical, target2.num)),
        "gcd_avoids_poles": poly_gcd(g, p1.den).degree == 0
        and poly_gcd(g, p2.den).degree == 0,
        "gcd": g,
        "radical": radical,
    }


# -- verification driver ------------------------------------------------------

def verify_genus(genus: int, table: LocusTable | None = None) -> list[dict]:
    """Re-derive the locus data for one genus and report per-check status.

    Checks: the vanishing profile identically in the parameter, the symbolic
    match between classify_point of the rational model and the table entry,
    recomputation of recorded special values, the genus-7 constraint-branch
    relation, and the genus-5 locus-equation identities.
    """
    table = table or default_table()
    entry = table.entry(genus)  # raises GenusError for unsupported genus
    checks: list[dict] = []

    def report(name, ok, detail=""):
        checks.append({"name": name, "status": "pass" if ok else "fail",
                       "detail": detail})

    if genus == 4:
        F = rational_model(4)
        profile = vanishing_profile(F, 4)
        report("vanishing-profile", all(v for _, v in profile), str(profile))
        checks.append({
            "name": "moduli-value-recomputation", "status": "skip",
            "detail": entry.note})
        return checks

    checks.append({
        "name": "transcription-status",
        "status": entry.status,
        "detail": entry.note or "published display matches exact recomputation"})
    if entry.published_variants:
        checks.append({
            "name": "published-variants-on-record",
            "status": "info",
            "detail": str(entry.published_variants)})

    mu = Poly.x()
    F = rational_model(genus, mu)
    profile = vanishing_profile(F, genus)
    report("vanishing-profile-identically", all(v for _, v in profile), str(profile))

    point = classify_point(F, genus)
    exp1, exp2 = entry.p1, entry.p2
    got1, got2 = point.values
    ok1, ok2 = got1 == exp1, got2 == exp2
    report("parametrization-first-component", ok1,
           "" if ok1 else f"recomputed {got1!r}")
    report("parametrization-second-component", ok2,
           "" if ok2 else f"recomputed {got2!r}")

    for sv in entry.special_values:
        special = classify_point(rational_model(genus, sv.mu), genus)
        value = special.values[0]
        agrees_published = value == sv.published
        agrees_recorded = sv.recomputed is not None and value == sv.recomputed
        status = "pass" if agrees_published else (
            "recomputed-differs" if agrees_recorded else "fail")
        checks.append({
            "name": f"special-value(mu={sv.mu})", "status": status,
            "detail": f"classify gives {value}; published {sv.published}"})

    if genus == 7 and entry.special_condition is not None:
        cubic = _parse_poly(entry.special_condition["parameter_poly"])
        rel = _parse_poly(entry.special_condition["point_relation"])
        # v3 = I6/I6p as a rational function of mu; rel(v3) must vanish mod cubic
        v3 = absolute_invariants(F).v3
        n, d = v3.num, v3.den
        acc = Poly()
        for k, c in enumerate(rel.coeffs):
            acc = acc + c * n ** k * d ** (rel.degree - k)
        report("constraint-branch-relation", (acc % cubic).is_zero,
               "relation(v3) = 0 modulo the parameter cubic")

    if genus == 5:
        residual = genus5_locus_residual(point.values)
        report("locus-equation-residual", residual.is_zero
               if isinstance(residual, (Poly, RatFunc)) else residual == 0,
               "identically in the parameter")
        sing = genus5_singular_point_analysis(table)
        report("singular-point-uniqueness",
               sing["all_roots_map_to_singular_point"] and sing["gcd_avoids_poles"],
               f"gcd degree {sing['gcd_degree']}")
        report("singular-point-value",
               genus5_locus_is_singular((Fraction(0), Fraction(1, 84))),
               "(0, 1/84)")
    return checks
