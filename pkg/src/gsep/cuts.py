"""Integer cuts and flows of a regular matroid.

Cuts live in the row space of the representation, flows in its kernel.  Both
lattices are enumerated through unique extension: a cut is determined by its
values on a basis, a flow by its values off a basis.  That keeps enumeration
exponential in the rank (resp. corank) instead of in the ground set size.
"""

from __future__ import annotations

from itertools import product
from typing import Sequence

from .errors import InvalidArgumentError, NotABasisError
from .matroid import RegularRep, fundamental_signed_circuit
from .vectors import CUT, FLOW, SIGNED_CIRCUIT, SignedVector

__all__ = [
    "SignedVector",
    "signed_circuits",
    "extend_cut",
    "k_cuts",
    "k_flows",
    "is_cut",
    "is_flow",
    "is_spanning",
    "preceq",
    "maximal_2cuts",
    "spanning_2cuts",
    "nowhere_zero",
]


def is_flow(rep: RegularRep, v: Sequence[int]) -> bool:
    return not any(rep.matrix.apply(v))


def is_cut(rep: RegularRep, v: Sequence[int]) -> bool:
    """Membership in the row space, tested against a kernel basis."""
    b = rep.bases[0]
    return all(
        fundamental_signed_circuit(rep, j, b).dot(v) == 0
        for j in range(rep.n) if j not in b
    )


def signed_circuits(rep: RegularRep) -> list:
    """Both signed circuits for every circuit, sorted lexicographically."""
    out = []
    m = rep.matrix
    for c in rep.circuits:
        e = c[-1]
        rest = list(c[:-1])
        # extend rest to a basis avoiding e; C(e, b) is then exactly c
        b = next(b for b in rep.bases if set(rest) <= set(b) and e not in b)
        lam = fundamental_signed_circuit(rep, e, b)
        if lam.support != frozenset(c):  # pragma: no cover
            raise AssertionError("fundamental circuit does not match")
        out.append(lam)
        out.append(-lam)
    assert all(not any(m.apply(v)) for v in out)
    return sorted(out)


def _fundamental_circuits(rep: RegularRep, b: Sequence[int]) -> dict:
    return {j: fundamental_signed_circuit(rep, j, b) for j in range(rep.n) if j not in b}


def _extend_from_basis(rep, b, values, circuits) -> tuple:
    entries = [0] * rep.n
    for i, v in zip(b, values):
        entries[i] = v
    for j, lam in circuits.items():
        # lam_j = 1, so orthogonality fixes gamma_j
        entries[j] = -sum(entries[i] * lam[i] for i in b)
    return tuple(entries)


def extend_cut(rep: RegularRep, prefix: Sequence[int]) -> SignedVector:
    """The unique cut whose first ``r`` entries are ``prefix``."""
    r = rep.r
    if len(prefix) != r:
        raise InvalidArgumentError(f"prefix must have length {r}")
    b = tuple(range(r))
    if not rep.is_independent(b):
        raise NotABasisError("the first r columns are dependent")
    return SignedVector(_extend_from_basis(rep, b, prefix, _fundamental_circuits(rep, b)), CUT)


def k_cuts(rep: RegularRep, k: int) -> list:
    """All cuts with every entry of absolute value below ``k``."""
    if k < 1:
        raise InvalidArgumentError("k must be at least 1")
    b = rep.bases[0]
    circ = _fundamental_circuits(rep, b)
    out = []
    for values in product(range(-(k - 1), k), repeat=rep.r):
        gamma = _extend_from_basis(rep, b, values, circ)
        if all(abs(x) < k for x in gamma):
            out.append(SignedVector(gamma, CUT))
    return sorted(out)


def k_flows(rep: RegularRep, k: int) -> list:
    """All flows with every entry of absolute value below ``k``.

    A flow is the combination of fundamental signed circuits weighted by its
    own off-basis entries, so those entries are enumerated.
    """
    if k < 1:
        raise InvalidArgumentError("k must be at least 1")
    b = rep.bases[0]
    circ = _fundamental_circuits(rep, b)
    cobasis = sorted(circ)
    out = []
    for values in product(range(-(k - 1), k), repeat=len(cobasis)):
        entries = [0] * rep.n
        for j, w in zip(cobasis, values):
            if w:
                for i, x in enumerate(circ[j].entries):
                    entries[i] += w * x
        if all(abs(x) < k for x in entries):
            out.append(SignedVector(tuple(entries), FLOW))
    return sorted(out)


def nowhere_zero(vectors) -> list:
    return [v for v in vectors if v.is_nowhere_zero()]


def is_spanning(rep: RegularRep, cut: SignedVector) -> bool:
    """True iff the support of ``cut`` contains a basis."""
    if cut.kind != CUT:
        raise InvalidArgumentError(f"expected a cut, got {cut.kind}")
    return rep.rank_of(sorted(cut.support)) == rep.r


def _ternary(v) -> tuple:
    entries = tuple(v.entries if isinstance(v, SignedVector) else v)
    if any(x not in (-1, 0, 1) for x in entries):
        raise InvalidArgumentError("order is only defined on {0, +-1} vectors")
    return entries


def preceq(u, v) -> bool:
    """Componentwise order with 0 below +1 and -1, the latter incomparable."""
    a, b = _ternary(u), _ternary(v)
    if len(a) != len(b):
        raise InvalidArgumentError("length mismatch")
    return all(x == 0 or x == y for x, y in zip(a, b))


def maximal_2cuts(rep: RegularRep) -> list:
    cuts = k_cuts(rep, 2)
    return [
        c for c in cuts
        if not any(d != c and preceq(c, d) for d in cuts)
    ]


def spanning_2cuts(rep: RegularRep) -> list:
    return [c for c in k_cuts(rep, 2) if is_spanning(rep, c)]
