"""Curves whose reduced automorphism group is cyclic: normal forms, the
dihedral-invariant coordinates on their moduli, the residual H-action on
normal-form coefficients, and recovery of a normal form from the invariants.

Normal forms (coefficients a_1..a_delta over a field, delta = t-1):

    case 1 (n | 2g+2, t = (2g+2)/n):  Y^2 = X^(nt) + a_1 X^(n(t-1)) + ... + a_delta X^n + 1
    case 2 (n | 2g+1, t = (2g+1)/n):  Y^2 = X^(nt) + ... + 1
    case 3 (n | 2g,   t = 2g/n):      Y^2 = X (X^(nt) + ... + 1)

The coordinate X is pinned up to H = <tau1, tau2> with tau1: X -> eps*X
(eps a t-th root of unity) and tau2: X -> 1/X, acting on coefficients as
a_i -> eps^(n(t-i)) a_i and a_i -> a_(t-i).  The dihedral invariants

    u_i = a_1^(t-i) a_i + a_delta^(t-i) a_(t-i),   1 <= i <= delta

are H-invariant and, away from the u = 0 family, determine the normal form
up to the 2t-element fiber of the H-action.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from .errors import ConstraintError, ReconstructionError
from .forms import BinaryForm
from .polynomials import Poly
from .scalars import Cyclo


@dataclass(frozen=True)
class CyclicNormalForm:
    case: int
    n: int
    genus: int
    coeffs: tuple

    @property
    def t(self) -> int:
        return _case_t(self.case, self.n, self.genus)

    @property
    def delta(self) -> int:
        return self.t - 1


def _case_t(case: int, n: int, g: int) -> int:
    if case == 1:
        num, what = 2 * g + 2, "2g+2"
    elif case == 2:
        num, what = 2 * g + 1, "2g+1"
    elif case == 3:
        num, what = 2 * g, "2g"
    else:
        raise ConstraintError(f"case must be 1, 2 or 3, got {case}")
    if n < 2:
        raise ConstraintError(f"cyclic order n must be >= 2, got {n}")
    if num % n:
        raise ConstraintError(f"case {case} needs n | {what}: {n} does not divide {num}")
    return num // n


def make_normal_form(case: int, n: int, g: int, coeffs) -> CyclicNormalForm:
    """Validated constructor; coeffs are a_1..a_delta."""
    t = _case_t(case, n, g)
    coeffs = tuple(coeffs)
    if len(coeffs) != t - 1:
        raise ConstraintError(
            f"case {case} with n={n}, g={g} has delta={t - 1} coefficients, got {len(coeffs)}")
    return CyclicNormalForm(case=case, n=n, genus=g, coeffs=coeffs)


def normal_form_polynomial(nf: CyclicNormalForm) -> BinaryForm:
    """The right-hand side as a binary form of degree 2g+2."""
    t, n = nf.t, nf.n
    top = n * t
    poly = [0] * (top + 1)
    poly[top] = 1
    poly[0] = 1
    for i, a in enumerate(nf.coeffs, start=1):
        poly[n * (t - i)] = a
    if nf.case == 3:
        poly = [0] + poly  # the extra X factor
    return BinaryForm.from_univariate(poly, 2 * nf.genus + 2)


@dataclass(frozen=True)
class DihedralInvariants:
    values: tuple

    @property
    def is_zero(self) -> bool:
        return all(u == 0 for u in self.values)

    def __iter__(self):
        return iter(self.values)

    def __len__(self):
        return len(self.values)

    def __getitem__(self, idx):
        return self.values[idx]


def dihedral_invariants(nf: CyclicNormalForm) -> DihedralInvariants:
    """u_i = a_1^(t-i) a_i + a_delta^(t-i) a_(t-i)."""
    a = nf.coeffs
    t, delta = nf.t, nf.delta
    a1, ad = a[0], a[delta - 1]
    out = []
    for i in range(1, delta + 1):
        out.append(a1 ** (t - i) * a[i - 1] + ad ** (t - i) * a[t - i - 1])
    return DihedralInvariants(tuple(out))


def tau1(nf: CyclicNormalForm, eps) -> CyclicNormalForm:
    """X -> eps*X on the normal form: a_i -> eps^(n(t-i)) a_i.

    eps must be a t-th root of unity in Q or Q(i, sqrt3); anything else is
    not representable here (t-th roots exist for t | 12 only).
    """
    t, n = nf.t, nf.n
    if isinstance(eps, int):
        eps = Fraction(eps)
    if not isinstance(eps, (Fraction, Cyclo)):
        raise ConstraintError(f"unsupported root-of-unity type {type(eps).__name__}")
    if eps ** t != 1:
        raise ConstraintError(f"eps must satisfy eps^{t} = 1 (got {eps})")
    new = tuple(eps ** ((n * (t - i)) % t) * a for i, a in enumerate(nf.coeffs, start=1))
    return CyclicNormalForm(case=nf.case, n=nf.n, genus=nf.genus, coeffs=new)


def tau2(nf: CyclicNormalForm) -> CyclicNormalForm:
    """X -> 1/X on the normal form: a_i -> a_(t-i) (coefficient reversal)."""
    return CyclicNormalForm(case=nf.case, n=nf.n, genus=nf.genus,
                            coeffs=tuple(reversed(nf.coeffs)))


def h_action(nf: CyclicNormalForm, generator) -> CyclicNormalForm:
    """Apply an H-generator: "tau2" or ("tau1", eps)."""
    if generator == "tau2":
        return tau2(nf)
    if isinstance(generator, (tuple, list)) and len(generator) == 2 and generator[0] == "tau1":
        return tau1(nf, generator[1])
    raise ConstraintError(f"unknown H generator {generator!r}")


def extra_involution_condition(u: DihedralInvariants, g: int) -> bool:
    """Exact test of 2^(g-1) u_1^2 - u_g^(g+1) = 0 (case 1, n = 2, delta = g)."""
    if len(u) != g:
        raise ConstraintError(
            f"extra-involution test needs the case-1, n=2 tuple of length g={g}, got {len(u)}")
    lhs = 2 ** (g - 1) * u[0] ** 2 - u[g - 1] ** (g + 1)
    if isinstance(lhs, Poly):
        return lhs.is_zero
    return lhs == 0


# -- reconstruction ---------------------------------------------------------

def _rational_sqrt(q: Fraction):
    if q < 0:
        return None
    n, d = q.numerator, q.denominator
    rn, rd = isqrt(n), isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


def _rational_root(q: Fraction, k: int):
    """Exact k-th root in Q, or None."""
    if q == 0:
        return Fraction(0)
    neg = q < 0
    if neg and k % 2 == 0:
        return None
    n, d = abs(q.numerator), q.denominator

    def iroot(m):
        if m == 0:
            return 0
        r = round(m ** (1.0 / k))
        for cand in (r - 1, r, r + 1):
            if cand >= 0 and cand ** k == m:
                return cand
        return None

    rn, rd = iroot(n), iroot(d)
    if rn is None or rd is None:
        return None
    root = Fraction(rn, rd)
    return -root if neg else root


def _square_roots_in_field(q: Fraction):
    """Square roots of a rational inside Q(i, sqrt3), if any (as Cyclo)."""
    r = _rational_sqrt(q) if q >= 0 else None
    if r is not None:
        return Cyclo(r)
    for unit_sq, builder in ((Fraction(3), lambda m: Cyclo(0, 0, m, 0)),
                             (Fraction(-1), lambda m: Cyclo(0, m, 0, 0)),
                             (Fraction(-3), lambda m: Cyclo(0, 0, 0, m))):
        m = _rational_sqrt(q / unit_sq)
        if m is not None:
            return builder(m)
    return None


def _canonical_order(values):
    """Deterministic ordering by the exact text encoding (shortest first)."""
    def key(q):
        enc = str(q)
        return (len(enc), enc)
    return sorted(values, key=key)


def reconstruct_from_u(u, case: int, n: int, g: int) -> CyclicNormalForm:
    """One normal form in the H-orbit determined by nonzero dihedral invariants.

    a_delta^t satisfies 2^t z^2 - 2^t u_1 z + u_delta^t = 0; interior pairs
    (a_i, a_(t-i)) come from 2x2 linear systems with determinant
    a_1^t - a_delta^t.  Palindromic families make those systems singular but
    consistent; the symmetric (or antisymmetric) solution is taken there.
    Raises ReconstructionError (carrying the obstructing polynomial) when the
    required roots do not exist in Q, or in Q(i, sqrt3) for t = 2.
    """
    values = tuple(u.values if isinstance(u, DihedralInvariants) else u)
    t = _case_t(case, n, g)
    delta = t - 1
    if len(values) != delta:
        raise ConstraintError(f"expected {delta} invariants for case {case}, n={n}, g={g}; got {len(values)}")
    if not all(isinstance(v, (int, Fraction)) for v in values):
        raise ConstraintError("reconstruction works from rational invariants")
    if all(v == 0 for v in values):
        raise ReconstructionError(
            "u = 0 corresponds to the a_1 = a_delta = 0 sub-family, which these "
            "invariants do not coordinatize")
    u1, ud = Fraction(values[0]), Fraction(values[delta - 1])

    # roots of z^2 - u1 z + (ud/2)^t
    half_pow = (ud / 2) ** t
    disc = u1 * u1 - 4 * half_pow
    sq = _rational_sqrt(disc)
    if sq is None:
        raise ReconstructionError(
            "a_delta^t generates a quadratic extension of Q here",
            minimal_polynomial=(ud ** t, -(2 ** t) * u1, 2 ** t))
    z_roots = _canonical_order({(u1 + sq) / 2, (u1 - sq) / 2})

    failures = []
    for z in z_roots:
        try:
            return _solve_from_z(z, values, t, delta, case, n, g)
        except ReconstructionError as exc:
            failures.append(exc)
    raise failures[-1]


def _tth_root(z: Fraction, t: int):
    """A t-th root of z in Q, else in Q(i, sqrt3) for t = 2, else None."""
    r = _rational_root(z, t)
    if r is not None:
        return r
    if t == 2:
        return _square_roots_in_field(z)
    return None


def _solve_from_z(z, values, t, delta, case, n, g):
    u1 = Fraction(values[0])
    ud = Fraction(values[delta - 1])
    ad = _tth_root(z, t)
    if ad is None:
        raise ReconstructionError(
            f"no t-th root of a_delta^t = {z} in the supported fields",
            minimal_polynomial=tuple([-z] + [0] * (t - 1) + [1]))
    if ad == 0:
        if ud != 0:
            raise ReconstructionError("a_delta = 0 forces u_delta = 0; invariants inconsistent")
        a1 = _tth_root(u1, t)
        if a1 is None:
            raise ReconstructionError(
                f"no t-th root of a_1^t = {u1} in the supported fields",
                minimal_polynomial=tuple([-u1] + [0] * (t - 1) + [1]))
    else:
        a1 = (ud / 2) / ad

    coeffs = [None] * delta
    coeffs[0] = a1
    coeffs[delta - 1] = ad
    if delta == 1:
        # single coefficient: u_1 = 2 a_1^t must agree
        nf = CyclicNormalForm(case=case, n=n, genus=g, coeffs=tuple(coeffs))
        _verify_roundtrip(nf, values)
        return nf

    det = a1 ** t - ad ** t
    for i in range(2, delta // 2 + 2):
        j = t - i  # partner index
        if i > j:
            break
        ui, uj = values[i - 1], values[j - 1]
        A, B = a1 ** (t - i), ad ** (t - i)
        C, D = ad ** i, a1 ** i
        if i == j:
            denom = A + B
            if denom != 0:
                coeffs[i - 1] = ui / denom
            elif ui == 0:
                coeffs[i - 1] = Fraction(0)
            else:
                raise ReconstructionError(
                    f"singular middle equation for a_{i}: a_1^{t - i} + a_delta^{t - i} = 0 "
                    f"but u_{i} != 0")
            continue
        if det != 0:
            coeffs[i - 1] = (D * ui - B * uj) / det
            coeffs[j - 1] = (A * uj - C * ui) / det
            continue
        # singular pair: try the symmetric then the antisymmetric solution
        if A + B != 0:
            x = ui / (A + B)
            if C * x + D * x == uj:
                coeffs[i - 1] = coeffs[j - 1] = x
                continue
        if A - B != 0:
            x = ui / (A - B)
            if C * x - D * x == uj:
                coeffs[i - 1] = x
                coeffs[j - 1] = -x
                continue
        raise ReconstructionError(
            f"singular pair (a_{i}, a_{j}): a_1^t = a_delta^t and the invariants "
            f"(u_{i}, u_{j}) are inconsistent with any symmetric solution")

    nf = CyclicNormalForm(case=case, n=n, genus=g, coeffs=tuple(coeffs))
    _verify_roundtrip(nf, values)
    return nf


def _verify_roundtrip(nf, values):
    got = dihedral_invariants(nf).values
    if tuple(got) != tuple(values):
        raise ReconstructionError(
            "no normal form over the supported fields has these dihedral invariants "
            f"(round-trip gave {got})")


# -- signature catalogue ----------------------------------------------------

@dataclass(frozen=True)
class SignatureRow:
    group: str
    delta: int
    signature: tuple
    involutions: int


def signature_row(group: str, g: int, n: int | None = None) -> SignatureRow:
    """Dimension, cover signature, and involution count for one group row.

    Cyclic rows need n; the A4-type rows are pinned by g mod 6.  Violated
    divisibility/congruence/dimension constraints raise ConstraintError
    naming the failed column.
    """
    if group == "Z2xZn":
        t = _case_t(1, _need_n(n), g)
        delta = t - 1
        _exclude(delta, (0, 1), group)
        sig = (f"{n}^2", f"{n}^2") + (f"2^{n}",) * t
        return SignatureRow(group, delta, sig, 3)
    if group == "Z2n":
        n = _need_n(n)
        if (2 * g + 1) % n == 0:
            t = (2 * g + 1) // n
            sig = (f"{n}^2", f"{2 * n}^1") + (f"2^{n}",) * t
            return SignatureRow(group, t - 1, sig, 1)
        if (2 * g) % n == 0:
            t = (2 * g) // n
            delta = t - 1
            _exclude(delta, (0, 1), group)
            sig = (f"{2 * n}^1", f"{2 * n}^1") + (f"2^{n}",) * t
            return SignatureRow(group, delta, sig, 1)
        raise ConstraintError(f"Z2n row needs n | 2g+1 or n | 2g; n={n}, g={g} fits neither")
    if group == "Z2xA4":
        r = g % 6
        if r == 5:
            delta = (g + 1) // 6
            sig = ("3^8", "3^8") + ("2^12",) * (delta + 1)
        elif r == 1:
            delta = (g - 1) // 6
            sig = ("3^8", "6^4") + ("2^12",) * (delta + 1)
        elif r == 3:
            delta = (g - 3) // 6
            _exclude(delta, (0,), group)
            sig = ("6^4", "6^4") + ("2^12",) * (delta + 1)
        else:
            raise ConstraintError(f"Z2xA4 needs g = 1, 3 or 5 mod 6; got g = {g}")
        return SignatureRow(group, delta, sig, 7)
    if group == "SL2(3)":
        r = g % 6
        if r == 2:
            delta = (g - 2) // 6
            _exclude(delta, (0,), group)
            sig = ("4^6", "3^8", "3^8") + ("2^12",) * delta
        elif r == 4:
            delta = (g - 4) // 6
            sig = ("4^6", "3^8", "6^4") + ("2^12",) * delta
        elif r == 0:
            delta = (g - 6) // 6
            _exclude(delta, (0,), group)
            sig = ("4^6", "6^4", "6^4") + ("2^12",) * delta
        else:
            raise ConstraintError(f"SL2(3) needs g = 0, 2 or 4 mod 6; got g = {g}")
        return SignatureRow(group, delta, sig, 1)
    raise ConstraintError(f"unknown group tag {group!r}; "
                          "expected Z2xZn, Z2n, Z2xA4 or SL2(3)")


def _need_n(n):
    if n is None:
        raise ConstraintError("cyclic rows need the cyclic order n")
    return n


def _exclude(delta, banned, group):
    if delta in banned:
        raise ConstraintError(f"dimension column: delta = {delta} is excluded for {group}")
    if delta < 0:
        raise ConstraintError(f"dimension column: delta = {delta} < 0 for {group}")
