"""Duality on marked partitions: the extension of the B/C/D orbit duality to
pairs (orbit, class in the canonical quotient), their saturation along Levi
subalgebras and its inverse, and block decompositions.

A reduced marked partition of type B (resp. C, D) is sent to an orbit of the
dual family C (resp. B, D).  Three routes compute the same partition: the
general closed formula, a shortcut through the minimal-weight marking of a
distinguished datum, and a join over a block decomposition.
"""

from dataclasses import dataclass

from .partitions import (
    as_partition,
    bump_first,
    collapse,
    drop_box,
    drop_column_box,
    is_very_even,
    join,
    size,
    transpose,
    union,
    uparrow,
)
from .orbits import LeviShape, Orbit
from .compgroups import (
    MarkedPartition,
    canonical_split,
    is_reduced,
    markable_parts,
)

DUAL_KIND = {"B": "C", "C": "B", "D": "D"}


def require_reduced(m):
    if not is_reduced(m):
        raise ValueError("%s is not reduced (some mark is not markable)" % (m,))


def _dual_partition_general(kind, nu, eta):
    if kind == "B":
        return collapse(transpose(union(nu, collapse(drop_box(eta), "C"))), "C")
    if kind == "C":
        return collapse(transpose(union(nu, collapse(bump_first(eta), "B"))), "B")
    return collapse(transpose(union(nu, transpose(collapse(transpose(eta), "D")))), "D")


def _dual_partition_distinguished(m):
    nu0, eta0 = canonical_split(m)
    if m.kind == "B":
        return transpose(union(nu0, collapse(drop_box(eta0), "C")))
    if m.kind == "C":
        return transpose(union(nu0, collapse(bump_first(eta0), "B")))
    return transpose(union(nu0, uparrow(eta0)))


def _dual_partition_blocks(m):
    blocks = block_decompose(m)
    duals = [_dual_partition_general(b.kind, b.nu, b.eta) for b in blocks]
    if m.kind == "C":
        duals = [drop_column_box(d) for d in duals[:-1]] + [duals[-1]]
    out = ()
    for d in duals:
        out = join(out, d)
    return as_partition(out)


def sommers_dual(m, route="general"):
    """The dual orbit of a reduced marked partition, by the requested route."""
    require_reduced(m)
    if route == "general":
        parts = _dual_partition_general(m.kind, m.nu, m.eta)
    elif route == "distinguished":
        parts = _dual_partition_distinguished(m)
    elif route == "blocks":
        parts = _dual_partition_blocks(m)
    else:
        raise ValueError("unknown route %r" % (route,))
    kind = DUAL_KIND[m.kind]
    ambient = {"B": size(m.lam) - 1, "C": size(m.lam) + 1, "D": size(m.lam)}[m.kind]
    return Orbit(kind, ambient, parts)


# ---------------------------------------------------------------------------
# block decompositions


def _block_type(kind, index):
    """Type of the index-th block (0-based) of a type-`kind` decomposition."""
    if kind == "B":
        return "B" if index == 0 else "D"
    return kind


def _is_basic_or_unmarked(kind, block_kind, lam, nu, last):
    """A block is admissible when unmarked, or when its marks are exactly the
    smallest part together with the largest part of markable height (in type C
    the latter alone is allowed in the final block)."""
    if not nu:
        return True
    markables = markable_parts(lam, block_kind)
    if not markables:
        return False
    top = markables[0]
    if kind == "C" and len(nu) == 1:
        return last and nu == (top,)
    return len(nu) == 2 and nu[0] == top and nu[1] == lam[-1]


def _valid_block(kind, index, lam, nu, last):
    from .partitions import is_type
    block_kind = _block_type(kind, index)
    if not is_type(lam, block_kind):
        return False
    if kind == "C" and not last and len(lam) % 2 == 1:
        return False
    if kind == "C" and not last and len(nu) % 2 == 1:
        return False
    return _is_basic_or_unmarked(kind, block_kind, lam, nu, last)


def _superior_ok(kind, upper, lower):
    """An even (B/D) or odd (C) integer must separate consecutive blocks."""
    want = 1 if kind == "C" else 0
    lo, hi = lower[0], upper[-1]
    for m in range(lo, hi + 1):
        if m % 2 == want:
            return True
    return False


def block_decompose(m):
    """Split a reduced marked partition into basic or unmarked blocks.

    The split points are searched between distinct part values, preferring
    the finest decomposition; the defining conditions are checked on every
    block, so any returned decomposition is valid.
    """
    require_reduced(m)
    lam, nu, kind = m.lam, set(m.nu), m.kind
    values = sorted(set(lam), reverse=True)

    def rows_of(vals):
        return tuple(v for v in lam if v in vals)

    def search(start, index, acc):
        if start == len(values):
            return acc
        for stop in range(start + 1, len(values) + 1):
            vals = set(values[start:stop])
            block_lam = rows_of(vals)
            block_nu = tuple(sorted(nu & vals, reverse=True))
            last = stop == len(values)
            if not _valid_block(kind, index, block_lam, block_nu, last):
                continue
            if acc and not _superior_ok(kind, acc[-1], block_lam):
                continue
            found = search(stop, index + 1, acc + [block_lam])
            if found is not None:
                return found
        return None

    pieces = search(0, 0, [])
    if pieces is None:
        raise ValueError("no block decomposition found for %s" % (m,))
    out = []
    for i, block_lam in enumerate(pieces):
        block_nu = tuple(sorted(nu & set(block_lam), reverse=True))
        out.append(MarkedPartition(_block_type(kind, i), block_lam, block_nu))
    return out


# ---------------------------------------------------------------------------
# saturation of marked data


def sat_la(levi, gl_orbits, core, kind=None):
    """Saturate a marked partition: the rows gain a pair per gl-orbit row and
    the marks are unchanged."""
    kind = kind or core.kind
    gl_orbits = [as_partition(x) for x in gl_orbits]
    if len(gl_orbits) != len(levi.gl):
        raise ValueError("expected %d gl orbits" % len(levi.gl))
    for a, lam in zip(levi.gl, gl_orbits):
        if size(lam) != a:
            raise ValueError("gl(%d) orbit has size %d" % (a, size(lam)))
    if size(core.lam) != levi.residual:
        raise ValueError("core size %d does not match residual %d"
                         % (size(core.lam), levi.residual))
    lam = core.lam
    for p in gl_orbits:
        lam = union(lam, union(p, p))
    dec = core.decoration if kind == "D" and is_very_even(lam) else None
    return MarkedPartition(kind, lam, core.nu, dec)


def sat_inverse(m):
    """Strip gl pairs until the marking is distinguished.

    Every value of the constrained parity is removed entirely (it occurs in
    pairs), and any other value keeps one row if unmarked with odd
    multiplicity, its marked row plus one more if marked with even
    multiplicity, and so on, leaving multiplicity-free marks and remainders.
    Returns (gl sizes, distinguished core); saturating the core by principal
    gl orbits of the returned sizes restores the input.
    """
    from .partitions import EPSILON
    eps = EPSILON[m.kind]
    gl = []
    core_rows = []
    nu_set = set(m.nu)
    for v in sorted(set(m.lam), reverse=True):
        mult = m.lam.count(v)
        if v % 2 == eps:
            keep = 0
        else:
            marked = 1 if v in nu_set else 0
            keep = marked + (mult - marked) % 2
        pairs = (mult - keep) // 2
        gl.extend([v] * pairs)
        core_rows.extend([v] * keep)
    core = MarkedPartition(m.kind, tuple(sorted(core_rows, reverse=True)), m.nu)
    return tuple(sorted(gl, reverse=True)), core


def levi_of_sizes(gl_sizes, residual):
    return LeviShape(tuple(gl_sizes), residual)
