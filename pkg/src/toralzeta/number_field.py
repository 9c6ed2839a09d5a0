"""Arithmetic data of number fields: built-in quadratic construction via
binary quadratic forms, JSON ingestion for higher degree, validation.

Class groups of the built-in quadratic fields are realised through
reduced binary quadratic forms; composition goes through exact ideal
multiplication in Hermite normal form, which is associative by
construction and keeps every step in integer arithmetic.  Real quadratic
support is restricted to fields whose fundamental unit has norm -1, so
the form class group and the ideal class group coincide.

Embedding convention: real places first, then one (Re, Im) pair per
complex place, so ||iota(x)||_2^2 sums |x|^2 over places and the covolume
identity covol(Lambda) = 2^(-r2) sqrt(|D|) Nr(Lambda) holds.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

import numpy as np
from jsonschema import validate as _js_validate, ValidationError as _JSValidationError

from .errors import DomainError, FieldDataError, UnsupportedFieldError
from .lattice import LatticeBasis

__all__ = [
    "BinaryQuadraticForm", "IdealClassData", "NumberFieldData", "CheckResult",
    "quadratic_field", "load_field", "validate_field", "ideal_lattice",
    "is_fundamental_discriminant", "reduced_forms", "fundamental_unit",
    "embedded_one",
]


# --------------------------------------------------------------------------
# binary quadratic forms
# --------------------------------------------------------------------------

@dataclass(frozen=True, order=True)
class BinaryQuadraticForm:
    a: int
    b: int
    c: int

    def discriminant(self) -> int:
        return self.b * self.b - 4 * self.a * self.c

    def as_tuple(self):
        return (self.a, self.b, self.c)


def _reduce_definite(f: BinaryQuadraticForm) -> BinaryQuadraticForm:
    a, b, c = f.a, f.b, f.c
    if a <= 0:
        raise DomainError("definite reduction needs a > 0")
    while True:
        if -a < b <= a and a <= c:
            break
        if b > a or b <= -a:
            # normalise b into (-a, a]
            q = (b + a) // (2 * a) if b > 0 else -((-b + a) // (2 * a))
            q = round(b / (2 * a))
            b2 = b - 2 * q * a
            if b2 <= -a:
                q -= 1
            elif b2 > a:
                q += 1
            c = a * q * q - b * q + c
            b = b - 2 * q * a
        if a > c:
            a, b, c = c, -b, a
    if (a == c or a == -b) and b < 0:
        b = -b
    return BinaryQuadraticForm(a, b, c)


def _isqrt(n: int) -> int:
    return math.isqrt(n)


def _is_reduced_indefinite(f: BinaryQuadraticForm, D: int) -> bool:
    # reduced iff 0 < b < sqrt(D) and sqrt(D) - b < 2|a| < sqrt(D) + b,
    # checked with exact integer comparisons (D is never a square here)
    s = _isqrt(D)
    if not (0 < f.b <= s):
        return False
    twoa = 2 * abs(f.a)
    # sqrt(D) - b < 2|a|  <=>  D < (2|a| + b)^2
    lower_ok = D < (twoa + f.b) ** 2
    # 2|a| < sqrt(D) + b  <=>  2|a| - b < sqrt(D), trivial when 2|a| <= b
    upper_ok = twoa <= f.b or (twoa - f.b) ** 2 < D
    return lower_ok and upper_ok


def _rho_indefinite(f: BinaryQuadraticForm, D: int) -> BinaryQuadraticForm:
    s = _isqrt(D)
    a, b, c = f.a, f.b, f.c
    ac = abs(c)
    if ac > s:
        # r = -b mod 2|c| in (-|c|, |c|]
        r = (-b) % (2 * ac)
        if r > ac:
            r -= 2 * ac
    else:
        # r = -b mod 2|c| in (s - 2|c|, s]
        r = s - ((s + b) % (2 * ac))
    c2 = (r * r - D) // (4 * c)
    return BinaryQuadraticForm(c, r, c2)


def _reduce_indefinite(f: BinaryQuadraticForm, D: int) -> BinaryQuadraticForm:
    g = f
    for _ in range(10000):
        if _is_reduced_indefinite(g, D):
            return g
        g = _rho_indefinite(g, D)
    raise RuntimeError("indefinite reduction did not terminate")


def _cycle_of(f: BinaryQuadraticForm, D: int) -> frozenset:
    start = _reduce_indefinite(f, D)
    cyc = [start]
    g = _rho_indefinite(start, D)
    while g != start:
        cyc.append(g)
        g = _rho_indefinite(g, D)
        if len(cyc) > 100000:
            raise RuntimeError("runaway indefinite cycle")
    return frozenset(cyc)


def _canonical(f: BinaryQuadraticForm, D: int) -> BinaryQuadraticForm:
    if D < 0:
        return _reduce_definite(f)
    return min(_cycle_of(f, D))


def principal_form(D: int) -> BinaryQuadraticForm:
    delta = D & 1
    return BinaryQuadraticForm(1, delta, (delta * delta - D) // 4)


def reduced_forms(D: int) -> list[BinaryQuadraticForm]:
    """All reduced forms for D < 0; canonical cycle representatives for D > 0."""
    if D >= 0:
        forms = set()
        s = _isqrt(D)
        for b in range(1, s + 1):
            if (D - b * b) % 4 != 0:
                continue
            m = (D - b * b) // 4  # = -ac > 0
            for d in range(1, _isqrt(m) + 1):
                if m % d != 0:
                    continue
                for a in {d, m // d}:
                    for sign in (1, -1):
                        f = BinaryQuadraticForm(sign * a, b, -m // (sign * a))
                        if _is_reduced_indefinite(f, D):
                            forms.add(f)
        cycles = set()
        seen = set()
        for f in sorted(forms):
            if f in seen:
                continue
            cyc = _cycle_of(f, D)
            seen |= cyc
            cycles.add(min(cyc))
        return sorted(cycles)
    out = []
    limit = _isqrt(-D // 3)
    for a in range(1, limit + 1):
        for b in range(-a + 1, a + 1):
            num = b * b - D
            if num % (4 * a) != 0:
                continue
            c = num // (4 * a)
            if c < a:
                continue
            if (a == c or a == abs(b)) and b < 0:
                continue
            out.append(BinaryQuadraticForm(a, b, c))
    return sorted(out)


# --------------------------------------------------------------------------
# exact ideal arithmetic in the (1, omega) basis, omega = (delta + sqrt D)/2
# --------------------------------------------------------------------------

def _omega_delta(D: int) -> int:
    return D & 1


def _ideal_from_form(f: BinaryQuadraticForm, D: int):
    """HNF basis ((a, 0), (r, 1)) of Z|a| + Z(-b + sqrt D)/2 in (1, omega)."""
    delta = _omega_delta(D)
    a = abs(f.a)
    r = ((-f.b - delta) // 2) % a
    return (a, r)


def _hnf_2x2(rows):
    """HNF basis (a, 0), (r, g) of the module spanned by integer rows.

    a, g > 0 and 0 <= r < a; the module is Z a e1 + Z (r e1 + g e2).
    """
    rows = [(int(x), int(y)) for x, y in rows if x or y]
    vx, vy = 0, 0
    for x, y in rows:
        if y == 0:
            continue
        if vy == 0:
            vx, vy = x, y
        else:
            u, w = _xgcd(vy, y)
            vx, vy = u * vx + w * x, math.gcd(vy, y)
    if vy == 0:
        raise DomainError("module has rank < 2")
    if vy < 0:
        vx, vy = -vx, -vy
    a = 0
    for x, y in rows:
        a = math.gcd(a, x - (y // vy) * vx)
    if a == 0:
        raise DomainError("module has rank < 2")
    a = abs(a)
    return (a, vx % a, vy)


def _xgcd(p: int, q: int):
    """(u, v) with u p + v q = gcd(p, q)."""
    old_r, r = p, q
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        quo = old_r // r
        old_r, r = r, old_r - quo * r
        old_s, s = s, old_s - quo * s
        old_t, t = t, old_t - quo * t
    if old_r < 0:
        old_s, old_t = -old_s, -old_t
    return old_s, old_t


def _mul_coords(u, v, D: int):
    """(x1 + y1 w)(x2 + y2 w) in integer (1, w) coordinates."""
    delta = _omega_delta(D)
    x1, y1 = u
    x2, y2 = v
    n_w = (delta * delta - D) // 4  # = Nr(omega) ... omega^2 = delta*w - Nr
    x = x1 * x2 - y1 * y2 * n_w
    y = x1 * y2 + x2 * y1 + y1 * y2 * delta
    return (x, y)


def _form_from_ideal(a: int, r: int, g: int, D: int) -> BinaryQuadraticForm:
    """Form of the HNF ideal Z(a,0) + Z(r,g) under the standard
    correspondence (a, b, c) <-> Z a + Z (-b + sqrt D)/2.

    The raw norm form of the basis (a, r + g*omega) carries the opposite
    orientation, so its middle coefficient is negated; this makes the
    form -> ideal -> form round trip the identity on classes.
    """
    delta = _omega_delta(D)
    N = a * g
    A_num = a * a
    B_num = 2 * a * r + a * g * delta
    C_num = r * r + r * g * delta + g * g * (delta * delta - D) // 4
    if A_num % N or B_num % N or C_num % N:
        raise DomainError("module is not an ideal of the maximal order")
    return BinaryQuadraticForm(A_num // N, -(B_num // N), C_num // N)


def compose(f1: BinaryQuadraticForm, f2: BinaryQuadraticForm, D: int) -> BinaryQuadraticForm:
    """Class-group composition via exact ideal multiplication + reduction."""
    a1, r1 = _ideal_from_form(f1, D)
    a2, r2 = _ideal_from_form(f2, D)
    gens1 = [(a1, 0), (r1, 1)]
    gens2 = [(a2, 0), (r2, 1)]
    prods = [_mul_coords(u, v, D) for u in gens1 for v in gens2]
    a, r, g = _hnf_2x2(prods)
    f = _form_from_ideal(a, r, g, D)
    if f.discriminant() != D:
        raise RuntimeError("composition produced wrong discriminant")
    return _canonical(f, D)


# --------------------------------------------------------------------------
# fundamental units by continued fractions
# --------------------------------------------------------------------------

def _floor_quadratic(P: int, Q: int, D: int) -> int:
    """floor((P + sqrt(D)) / Q) with exact integer comparisons (Q != 0)."""
    s = _isqrt(D)
    if Q > 0:
        n = (P + s) // Q
        while (n + 1) * Q - P <= 0 or ((n + 1) * Q - P) ** 2 <= D:
            n += 1
        while n * Q - P > 0 and (n * Q - P) ** 2 > D:
            n -= 1
        return n
    return -_ceil_quadratic(P, -Q, D)


def _ceil_quadratic(P: int, Q: int, D: int) -> int:
    n = _floor_quadratic(P, Q, D)
    # sqrt(D) irrational for non-square D, so the value is never integral
    return n + 1


def fundamental_unit(D: int):
    """Fundamental unit of the real quadratic order of discriminant D.

    Continued-fraction expansion of omega = (delta + sqrt D)/2; every
    convergent p/q is tested exactly via Nr(p - q*conj(omega)).  Returns
    (x, y, norm) with the unit x + y*omega > 1 and norm in {+1, -1}.
    """
    if D <= 0 or _isqrt(D) ** 2 == D:
        raise DomainError("need a positive non-square discriminant")
    delta = _omega_delta(D)
    n_w = (delta * delta - D) // 4
    # alpha_0 = omega = (delta + sqrt D) / 2
    P, Q = delta, 2
    pm1, pm2 = 1, 0  # p_(k-1), p_(k-2)
    qm1, qm2 = 0, 1
    for _ in range(1000000):
        a = _floor_quadratic(P, Q, D)
        p = a * pm1 + pm2
        q = a * qm1 + qm2
        pm2, pm1 = pm1, p
        qm2, qm1 = qm1, q
        # unit candidate u = p - q * conj(omega) = (p - q*delta) + q*omega
        x, y = p - q * delta, q
        norm = x * x + x * y * delta + y * y * n_w
        if abs(norm) == 1 and (x + y * (delta + math.sqrt(D)) / 2.0) > 1.0:
            return x, y, norm
        P = a * Q - P
        Q = (D - P * P) // Q
        if Q == 0:
            raise RuntimeError("continued fraction collapsed")
    raise UnsupportedFieldError(f"no fundamental unit found for D={D}")


# --------------------------------------------------------------------------
# field data containers
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class IdealClassData:
    label: str
    embedded_basis: LatticeBasis
    norm: Fraction
    coords: tuple
    form: tuple | None = None  # (a, b, c) for the built-in quadratic fields


@dataclass(frozen=True)
class NumberFieldData:
    n: int
    r1: int
    r2: int
    D: int
    w: int
    R: float
    cyclic_orders: tuple
    classes: tuple
    unit_log_basis: np.ndarray  # (r1 + r2 - 1, r1 + r2)

    @property
    def h(self) -> int:
        return len(self.classes)

    @property
    def signature(self):
        return (self.r1, self.r2)


def embedded_one(r1: int, r2: int) -> np.ndarray:
    """iota(1) in embedded coordinates: 1 at real slots, (1, 0) per complex."""
    coords = [1.0] * r1
    for _ in range(r2):
        coords.extend([1.0, 0.0])
    return np.asarray(coords)


def kronecker_symbol(a: int, n: int) -> int:
    """Kronecker symbol (a|n), the full extension of the Jacobi symbol."""
    if n == 0:
        return 1 if abs(a) == 1 else 0
    if n < 0:
        return kronecker_symbol(a, -n) * (1 if a >= 0 else -1)
    t = 1
    while n % 2 == 0:
        n //= 2
        if a % 2 == 0:
            return 0
        if a % 8 in (3, 5):
            t = -t
    a %= n
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                t = -t
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            t = -t
        a %= n
    return t if n == 1 else 0


def is_fundamental_discriminant(D: int) -> bool:
    if D in (0, 1):
        return False
    if D % 4 == 1:
        return _squarefree(abs(D))
    if D % 4 == 0:
        m = D // 4
        return m % 4 in (2, 3) and _squarefree(abs(m))
    return False


def _squarefree(n: int) -> bool:
    if n % 4 == 0:
        return False
    p = 3
    while p * p <= n:
        if n % (p * p) == 0:
            return False
        while n % p == 0:
            n //= p
        p += 2
    return True


# --------------------------------------------------------------------------
# built-in quadratic construction
# --------------------------------------------------------------------------

def _group_structure(labels, mul, identity):
    """Invariant-factor decomposition of a finite abelian group given by a
    multiplication map on canonical labels.  Returns (orders, coords)."""
    h = len(labels)
    if h == 1:
        return (), {identity: ()}
    label_set = set(labels)
    assert identity in label_set

    def order_in_quotient(x, H):
        acc = x
        k = 1
        while acc not in H:
            acc = mul(acc, x)
            k += 1
        return k

    gens, orders = [], []
    H = {identity}
    while len(H) < h:
        best, best_ord = None, 0
        for x in sorted(label_set):
            if x in H:
                continue
            k = order_in_quotient(x, H)
            if k > best_ord:
                best, best_ord = x, k
        gens.append(best)
        orders.append(best_ord)
        newH = set()
        acc = identity
        for _ in range(best_ord):
            for y in H:
                newH.add(mul(acc, y))
            acc = mul(acc, best)
        H = newH
    # coordinates by exhaustive product over the generator powers
    coords = {}
    powers = []
    for gen, d in zip(gens, orders):
        row = [identity]
        for _ in range(d - 1):
            row.append(mul(row[-1], gen))
        powers.append(row)

    def rec(i, acc, tup):
        if i == len(powers):
            coords.setdefault(acc, tup)
            return
        for e, p in enumerate(powers[i]):
            rec(i + 1, mul(acc, p), tup + (e,))

    rec(0, identity, ())
    assert len(coords) == h, "group decomposition failed to cover all classes"
    return tuple(orders), coords


def _embed_form(f: BinaryQuadraticForm, D: int) -> np.ndarray:
    a = abs(f.a)
    b = f.b
    if D < 0:
        return np.array([[float(a), 0.0],
                         [-b / 2.0, math.sqrt(abs(D)) / 2.0]])
    rt = math.sqrt(D)
    return np.array([[float(a), float(a)],
                     [(-b + rt) / 2.0, (-b - rt) / 2.0]])


def quadratic_field(D: int) -> NumberFieldData:
    """Built-in quadratic field of fundamental discriminant D.

    D < 0: reduced-form class group, w in {2, 4, 6}, R = 1.
    D > 0: requires the fundamental unit to have norm -1 (narrow class
    group = wide class group); otherwise raises UnsupportedFieldError.
    """
    if not is_fundamental_discriminant(D):
        raise DomainError(f"{D} is not a fundamental discriminant")

    if D > 0:
        x, y, norm = fundamental_unit(D)
        if norm != -1:
            raise UnsupportedFieldError(
                f"fundamental unit of D={D} has norm +1; ingest the field instead")
        delta = _omega_delta(D)
        eps = x + y * (delta + math.sqrt(D)) / 2.0
        R = math.log(eps)
        r1, r2, w = 2, 0, 2
        unit_log = np.array([[R, -R]])
    else:
        r1, r2 = 0, 1
        w = 6 if D == -3 else (4 if D == -4 else 2)
        R = 1.0
        unit_log = np.zeros((0, 1))

    forms = reduced_forms(D)
    prin = _canonical(principal_form(D), D)
    mul = lambda f, g: compose(f, g, D)
    orders, coords = _group_structure(forms, mul, prin)

    classes = []
    # class 0 is the maximal order itself, via the principal form
    order_list = [principal_form(D)] + [f for f in forms if f != prin]
    for i, f in enumerate(order_list):
        canon = prin if i == 0 else f
        basis = LatticeBasis(_embed_form(f, D))
        classes.append(IdealClassData(
            label=f"({f.a},{f.b},{f.c})",
            embedded_basis=basis,
            norm=Fraction(abs(f.a)),
            coords=coords[canon],
            form=f.as_tuple(),
        ))
    return NumberFieldData(
        n=2, r1=r1, r2=r2, D=D, w=w, R=R,
        cyclic_orders=orders, classes=tuple(classes), unit_log_basis=unit_log,
    )


# --------------------------------------------------------------------------
# ingestion
# --------------------------------------------------------------------------

FIELD_DOCUMENT_SCHEMA = {
    "type": "object",
    "required": ["degree", "r1", "r2", "discriminant", "w", "regulator",
                 "unit_log_basis", "class_group"],
    "properties": {
        "degree": {"type": "integer", "minimum": 1},
        "r1": {"type": "integer", "minimum": 0},
        "r2": {"type": "integer", "minimum": 0},
        "discriminant": {"type": "integer"},
        "w": {"type": "integer", "minimum": 2},
        "regulator": {"type": "number", "exclusiveMinimum": 0},
        "unit_log_basis": {
            "type": "array",
            "items": {"type": "array", "items": {"type": "number"}},
        },
        "class_group": {
            "type": "object",
            "required": ["cyclic_orders", "classes"],
            "properties": {
                "cyclic_orders": {"type": "array", "items": {"type": "integer", "minimum": 2}},
                "classes": {
                    "type": "array",
                    "minItems": 1,
                    "items": {
                        "type": "object",
                        "required": ["label", "coords", "norm", "embedded_basis"],
                        "properties": {
                            "label": {"type": "string"},
                            "coords": {"type": "array", "items": {"type": "integer", "minimum": 0}},
                            "norm": {"type": "string", "pattern": r"^-?\d+/\d+$"},
                            "embedded_basis": {
                                "type": "array",
                                "items": {"type": "array", "items": {"type": "number"}},
                            },
                        },
                    },
                },
            },
        },
    },
}


def load_field(document) -> NumberFieldData:
    """Build NumberFieldData from a field-data document (path, JSON text,
    or parsed dict); schema and every arithmetic invariant are checked."""
    if isinstance(document, (str, Path)):
        p = Path(document)
        if p.exists():
            doc = json.loads(p.read_text())
        else:
            doc = json.loads(str(document))
    else:
        doc = document
    try:
        _js_validate(doc, FIELD_DOCUMENT_SCHEMA)
    except _JSValidationError as exc:
        raise FieldDataError(f"schema violation: {exc.message}", check="schema") from exc

    classes = []
    for entry in doc["class_group"]["classes"]:
        classes.append(IdealClassData(
            label=entry["label"],
            embedded_basis=LatticeBasis(np.asarray(entry["embedded_basis"], dtype=float)),
            norm=Fraction(entry["norm"]),
            coords=tuple(entry["coords"]),
        ))
    field = NumberFieldData(
        n=doc["degree"],
        r1=doc["r1"],
        r2=doc["r2"],
        D=doc["discriminant"],
        w=doc["w"],
        R=float(doc["regulator"]),
        cyclic_orders=tuple(doc["class_group"]["cyclic_orders"]),
        classes=tuple(classes),
        unit_log_basis=np.asarray(doc["unit_log_basis"], dtype=float).reshape(
            -1, doc["r1"] + doc["r2"]),
    )
    failures = [c for c in validate_field(field) if not c.passed]
    if failures:
        worst = failures[0]
        raise FieldDataError(
            f"invariant violation: {worst.name} (residual {worst.residual:.3e}): {worst.detail}",
            check=worst.name, residual=worst.residual)
    return field


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    residual: float
    detail: str = ""


def validate_field(field: NumberFieldData) -> list[CheckResult]:
    """Evaluate every structural invariant with pass/fail and residual."""
    out = []
    r1, r2, n = field.r1, field.r2, field.n

    sig_ok = n == r1 + 2 * r2
    out.append(CheckResult("signature", sig_ok, 0.0 if sig_ok else 1.0,
                           f"n={n}, r1={r1}, r2={r2}"))

    h = field.h
    expected_h = 1
    for d in field.cyclic_orders:
        expected_h *= d
    out.append(CheckResult("group-order", expected_h == h,
                           abs(expected_h - h),
                           f"prod(cyclic_orders)={expected_h}, #classes={h}"))

    coords_seen = {c.coords for c in field.classes}
    coords_ok = (len(coords_seen) == h and all(
        len(c.coords) == len(field.cyclic_orders)
        and all(0 <= e < d for e, d in zip(c.coords, field.cyclic_orders))
        for c in field.classes))
    out.append(CheckResult("coords", coords_ok, 0.0 if coords_ok else 1.0,
                           "class coordinates distinct and in range"))

    covol_target = 2.0 ** (-r2) * math.sqrt(abs(field.D))
    worst = 0.0
    for c in field.classes:
        det = abs(np.linalg.det(c.embedded_basis.matrix))
        target = covol_target * float(c.norm)
        worst = max(worst, abs(det - target) / target)
    out.append(CheckResult("covolume", worst <= 1e-9, worst,
                           "det(embedded basis) = 2^-r2 sqrt|D| Nr per class"))

    if field.unit_log_basis.size:
        tz = float(np.max(np.abs(field.unit_log_basis.sum(axis=1))))
    else:
        tz = 0.0
    out.append(CheckResult("trace-zero", tz <= 1e-10, tz,
                           "unit-log vectors sum to zero"))

    rank = r1 + r2 - 1
    if rank > 0:
        if field.unit_log_basis.shape != (rank, r1 + r2):
            out.append(CheckResult("unit-rank", False, 1.0,
                                   f"expected shape {(rank, r1 + r2)}"))
        else:
            out.append(CheckResult("unit-rank", True, 0.0, ""))
            minor = abs(np.linalg.det(field.unit_log_basis[:, :rank]))
            res = abs(minor - field.R) / field.R
            out.append(CheckResult("regulator-minor", res <= 1e-9, res,
                                   f"|det minor|={minor!r} vs R={field.R!r}"))
            gram = field.unit_log_basis @ field.unit_log_basis.T
            covol = math.sqrt(abs(np.linalg.det(gram)))
            target = math.sqrt(r1 + r2) * field.R
            res2 = abs(covol - target) / target
            out.append(CheckResult("unit-covolume", res2 <= 1e-9, res2,
                                   "Euclidean covolume = sqrt(r1+r2) R"))
    else:
        out.append(CheckResult("regulator-minor", field.R == 1.0,
                               abs(field.R - 1.0),
                               "rank-0 unit lattice uses R = 1"))

    w_ok = field.w >= 2 and field.w % 2 == 0 and (r1 == 0 or field.w == 2)
    out.append(CheckResult("roots-of-unity", w_ok, 0.0 if w_ok else 1.0,
                           f"w={field.w}"))

    B0 = field.classes[0].embedded_basis.matrix
    one = embedded_one(r1, r2)
    coeff = np.linalg.solve(B0.T, one)
    res = float(np.max(np.abs(coeff - np.round(coeff))))
    out.append(CheckResult("trivial-class", res <= 1e-9, res,
                           "iota(1) has integer coordinates in class-0 basis"))
    return out


def ideal_lattice(field: NumberFieldData, class_index: int) -> LatticeBasis:
    """Embedded lattice of the chosen ideal class; index 0 is the maximal order."""
    if not (0 <= class_index < field.h):
        raise DomainError(
            f"class index {class_index} out of range [0, {field.h})")
    return field.classes[class_index].embedded_basis
