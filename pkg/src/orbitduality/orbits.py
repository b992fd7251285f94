"""Nilpotent orbits of the classical simple Lie algebras as typed partitions.

Orbits of so(2n+1), sp(2n), so(2n) are partitions of 2n+1 / 2n / 2n of type
B / C / D; very even type-D partitions label two orbits, distinguished by a
decoration I or II.  This module implements saturation and induction along
Levi subalgebras, the induced-orbit birationality test, and the duality map
exchanging the B and C families (fixing D), together with the standard orbit
predicates.
"""

from dataclasses import dataclass

from .partitions import (
    add_unit,
    as_partition,
    collapse,
    dominates,
    drop_box,
    enumerate_type,
    format_partition,
    is_type,
    is_very_even,
    join,
    parse_partition,
    size,
    transpose,
    union,
)

DECORATIONS = (None, "I", "II")


@dataclass(frozen=True)
class Orbit:
    kind: str
    ambient: int
    parts: tuple
    decoration: str = None

    def __post_init__(self):
        if self.kind not in ("A", "B", "C", "D"):
            raise ValueError("unknown kind %r" % (self.kind,))
        object.__setattr__(self, "parts", as_partition(self.parts))
        if size(self.parts) != self.ambient:
            raise ValueError("partition size %d does not match ambient %d"
                             % (size(self.parts), self.ambient))
        if not is_type(self.parts, self.kind):
            raise ValueError("%s is not a type-%s partition"
                             % (format_partition(self.parts), self.kind))
        if self.decoration not in DECORATIONS:
            raise ValueError("decoration must be I or II")
        if self.decoration is not None:
            if self.kind != "D" or not is_very_even(self.parts):
                raise ValueError("only very even type-D orbits carry decorations")

    def __str__(self):
        return format_orbit(self)


@dataclass(frozen=True)
class LeviShape:
    """gl(a_1) x ... x gl(a_t) x g(m) inside a classical g(N).

    `residual` is the ambient size m of the classical factor (0 if absent);
    `primed` marks the second SO(2n)-class of gl-only Levis in type D.
    """
    gl: tuple
    residual: int = 0
    primed: bool = False

    def __post_init__(self):
        object.__setattr__(self, "gl", tuple(int(a) for a in self.gl))
        if any(a < 1 for a in self.gl):
            raise ValueError("gl sizes must be positive")
        if self.residual < 0:
            raise ValueError("residual ambient size must be >= 0")
        if self.primed and self.residual != 0:
            raise ValueError("primed Levis have no classical factor")

    def ambient(self):
        return 2 * sum(self.gl) + self.residual


def enumerate_orbits(kind, ambient):
    """All orbits of g(ambient); very even type-D partitions appear twice."""
    if kind == "B" and ambient % 2 == 0 or kind in ("C", "D") and ambient % 2 == 1:
        raise ValueError("ambient parity does not match kind %s" % kind)
    out = []
    for p in enumerate_type(kind, ambient):
        if kind == "D" and is_very_even(p):
            out.append(Orbit(kind, ambient, p, "I"))
            out.append(Orbit(kind, ambient, p, "II"))
        else:
            out.append(Orbit(kind, ambient, p))
    return out


def zero_orbit(kind, ambient):
    return Orbit(kind, ambient, (1,) * ambient)


def _check_levi(levi, gl_orbits, core, kind):
    if len(gl_orbits) != len(levi.gl):
        raise ValueError("expected %d gl orbits, got %d" % (len(levi.gl), len(gl_orbits)))
    for a, lam in zip(levi.gl, gl_orbits):
        if size(lam) != a:
            raise ValueError("gl(%d) orbit has size %d" % (a, size(lam)))
    if core.ambient != levi.residual:
        raise ValueError("core lives in g(%d), Levi residual is g(%d)"
                         % (core.ambient, levi.residual))
    if core.kind != kind and core.ambient > 0:
        raise ValueError("core kind %s does not match ambient kind %s" % (core.kind, kind))


def saturate(levi, gl_orbits, core, kind=None):
    """Saturation: the big-group orbit meeting the Levi orbit.

    The partition is core + a pair of rows for every gl-orbit row; a very
    even result inherits the core decoration.
    """
    kind = kind or core.kind
    gl_orbits = [as_partition(x) for x in gl_orbits]
    _check_levi(levi, gl_orbits, core, kind)
    lam = core.parts
    for p in gl_orbits:
        lam = union(lam, union(p, p))
    dec = None
    if kind == "D" and is_very_even(lam):
        dec = core.decoration
    return Orbit(kind, levi.ambient(), lam, dec)


@dataclass(frozen=True)
class InducedOrbit:
    orbit: Orbit
    birational: bool
    collapsed: bool = False
    decoration_unknown: bool = False


def induce(levi, gl_orbits, core, kind=None):
    """Lusztig-Spaltenstein induction from a Levi, with birationality flag.

    The induced partition is the type collapse of the join of the core with
    doubled gl rows.  Induction is birational exactly when no collapse is
    needed, except in type D where a join with all parts even and a single
    repeated-odd-multiplicity value collapses birationally.
    """
    kind = kind or core.kind
    gl_orbits = [as_partition(x) for x in gl_orbits]
    _check_levi(levi, gl_orbits, core, kind)
    beta = core.parts
    for p in gl_orbits:
        beta = join(beta, join(p, p))
    beta = as_partition(beta)
    if is_type(beta, kind):
        lam, birational, collapsed = beta, True, False
    else:
        lam = collapse(beta, kind)
        birational, collapsed = kind == "D" and d_exception_by_columns(beta), True
    dec_unknown = kind == "D" and is_very_even(lam)
    return InducedOrbit(Orbit(kind, levi.ambient(), lam), birational, collapsed, dec_unknown)


def d_exception_by_rows(beta):
    """Row form of the type-D birational-collapse test: all parts even with
    exactly one distinct value of odd multiplicity, necessarily the smallest.
    Strictly narrower than the column form, which is the one used by induce.
    """
    if any(v % 2 for v in beta):
        return False
    odd_mult = [v for v in set(beta) if beta.count(v) % 2 == 1]
    return len(odd_mult) == 1 and odd_mult[0] == beta[-1]


def d_exception_by_columns(beta):
    """Column form of the type-D birational-collapse test: the join consists
    of pairs of equal columns with exactly one distinct odd column length."""
    cols = transpose(beta)
    vals = sorted(set(cols))
    if any(cols.count(v) % 2 for v in vals):
        return False
    return sum(1 for v in vals if v % 2 == 1) == 1


def bvls_dual(orbit):
    """Duality on orbits: so(2n+1) <-> sp(2n), so(2n) -> so(2n).

    Transpose composed with a boundary adjustment and a type collapse; on a
    very even type-D orbit the decoration is kept when the half-dimension is
    divisible by 4 and swapped otherwise.
    """
    p = orbit.parts
    if orbit.kind == "A":
        return Orbit("A", orbit.ambient, transpose(p))
    if orbit.kind == "B":
        return Orbit("C", orbit.ambient - 1, collapse(drop_box(transpose(p)), "C"))
    if orbit.kind == "C":
        return Orbit("B", orbit.ambient + 1, collapse(transpose(add_unit(p)), "B"))
    q = collapse(transpose(p), "D")
    dec = None
    if is_very_even(p) and orbit.decoration is not None:
        if orbit.ambient // 2 % 4 == 0:
            dec = orbit.decoration
        else:
            dec = {"I": "II", "II": "I"}[orbit.decoration]
    elif is_very_even(q):
        dec = None  # decoration not determined by this rule
    return Orbit("D", orbit.ambient, q, dec)


def is_distinguished(orbit):
    """No repeated parts (type A: the principal orbit only)."""
    if orbit.kind == "A":
        return orbit.parts == (orbit.ambient,) if orbit.ambient else True
    return len(set(orbit.parts)) == len(orbit.parts)


def is_even(orbit):
    """All parts of one parity, so the semisimple element has even eigenvalues."""
    return len({v % 2 for v in orbit.parts}) <= 1


def is_special(orbit):
    """Fixed point of the square of the duality map."""
    return bvls_dual(bvls_dual(orbit)) == orbit


def orbit_predicates(orbit):
    return {
        "distinguished": is_distinguished(orbit),
        "even": is_even(orbit),
        "special": is_special(orbit),
    }


def closure_leq(a, b):
    """Closure order on orbits of one group, taken to be dominance order."""
    if (a.kind, a.ambient) != (b.kind, b.ambient):
        raise ValueError("closure order compares orbits of one group")
    return dominates(b.parts, a.parts)


def parse_orbit(text):
    """Parse "B:[5,3,1]" or "D:[2,2]I"."""
    s = text.strip()
    if len(s) < 2 or s[1] != ":":
        raise ValueError("orbit text must look like B:[5,3,1]")
    kind = s[0]
    body = s[2:]
    dec = None
    for suffix in ("II", "I"):
        if body.endswith(suffix):
            body, dec = body[: -len(suffix)], suffix
            break
    p = parse_partition(body)
    return Orbit(kind, size(p), p, dec)


def format_orbit(orbit):
    return "%s:%s%s" % (orbit.kind, format_partition(orbit.parts), orbit.decoration or "")


def parse_levi(text):
    """Parse "gl(4)+gl(1)+so(9)" or "gl(2)+gl(2)'" (primed, type D only)."""
    s = text.strip()
    primed = s.endswith("'")
    if primed:
        s = s[:-1]
    gl, residual, res_kind = [], 0, None
    for piece in s.split("+"):
        piece = piece.strip()
        if not piece.endswith(")") or "(" not in piece:
            raise ValueError("bad Levi factor %r" % piece)
        name, arg = piece[: piece.index("(")], piece[piece.index("(") + 1: -1]
        n = int(arg)
        if name == "gl":
            gl.append(n)
        elif name in ("so", "sp"):
            if res_kind is not None:
                raise ValueError("at most one classical factor in a Levi")
            residual = n
            res_kind = "C" if name == "sp" else ("B" if n % 2 else "D")
        else:
            raise ValueError("unknown Levi factor %r" % name)
    if primed and res_kind is not None:
        raise ValueError("primed Levis are gl-only")
    return LeviShape(tuple(gl), residual, primed), res_kind


def format_levi(levi, kind):
    parts = ["gl(%d)" % a for a in levi.gl]
    if levi.residual:
        parts.append(("sp(%d)" if kind == "C" else "so(%d)") % levi.residual)
    out = "+".join(parts)
    return out + ("'" if levi.primed else "")
