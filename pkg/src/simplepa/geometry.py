"""Exact rational realization of the simple permutoassociahedron.

The polytope PA_n lives in the hyperplane x_0 + ... + x_n = 3^(n+1) of
R^(n+1).  A chain with k sets whose core has l+1 labels contributes one
facet halfspace: coefficient j on the j-th ext label (outermost first),
coefficient k on every core label, and right-hand side

    (3^(k+l+1) - 3^(l+1)) / 2  +  (3^k - 3k) / (3^n - n - 1).

The second summand is a sub-unit fractional offset; it is exactly what makes
a vertex meet its own n facets and clear every other facet strictly, so the
whole module works in exact arithmetic (unbounded ints and Fraction) and
never touches floating point.  Vertices are computed by fraction-free
elimination over the integers with a rational back-substitution.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .limits import check_cap
from .nestedsets import (
    Chain,
    NestedSet,
    enumerate_chains,
    enumerate_vertices,
    faces,
    is_full_chain,
    is_nested,
)

EQ = "="
GE = ">="


def fractional_offset(k: int, n: int) -> Fraction:
    """The sub-unit offset (3^k - 3k) / (3^n - n - 1); zero for k = 1."""
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got k={k}, n={n}")
    return Fraction(3**k - 3 * k, 3**n - n - 1)


def facet_rhs(k: int, l: int, n: int) -> Fraction:
    """Right-hand side of the facet inequality of a chain with k sets whose
    core has l+1 labels.  Equals 3^(l+k) + ... + 3^(l+1) plus the offset."""
    if not (1 <= k and 0 <= l and k + l <= n):
        raise ValueError(f"need 1 <= k and k+l <= n, got k={k}, l={l}, n={n}")
    return Fraction(3 ** (k + l + 1) - 3 ** (l + 1), 2) + fractional_offset(k, n)


@dataclass(frozen=True)
class Hyperplane:
    """Integer linear form over x_0..x_n with a rational bound."""

    coeffs: tuple[int, ...]
    rhs: Fraction
    relation: str  # EQ or GE

    def value(self, point: Sequence[Fraction]) -> Fraction:
        if len(point) != len(self.coeffs):
            raise ValueError("point dimension mismatch")
        return sum((c * x for c, x in zip(self.coeffs, point)), Fraction(0))

    def tight(self, point: Sequence[Fraction]) -> bool:
        return self.value(point) == self.rhs

    def satisfied(self, point: Sequence[Fraction]) -> bool:
        value = self.value(point)
        return value == self.rhs if self.relation == EQ else value >= self.rhs


def facet_inequality(chain: Chain, n: int) -> Hyperplane:
    """The facet halfspace of a chain, as a ``>=`` hyperplane."""
    chain.check(n)
    k = chain.num_sets
    coeffs = [0] * (n + 1)
    for position, label in enumerate(chain.ext, start=1):
        coeffs[label] = position
    for label in chain.core:
        coeffs[label] = k
    return Hyperplane(tuple(coeffs), facet_rhs(k, len(chain.core) - 1, n), GE)


def ambient_plane(n: int) -> Hyperplane:
    """The hyperplane x_0 + ... + x_n = 3^(n+1) containing the polytope."""
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    return Hyperplane((1,) * (n + 1), Fraction(3 ** (n + 1)), EQ)


def h_representation(n: int) -> tuple[Hyperplane, list[Hyperplane]]:
    """The ambient equality plus one facet inequality per chain, canonical order."""
    return ambient_plane(n), [facet_inequality(c, n) for c in enumerate_chains(n)]


# ---------------------------------------------------------------------------
# exact linear algebra

class SingularSystemError(ArithmeticError):
    """The linear system has no unique solution."""


def solve_exact(matrix: Sequence[Sequence[int]], rhs: Sequence[int]) -> tuple[Fraction, ...]:
    """Solve a square integer system exactly.

    Forward pass is fraction-free (each 2x2 determinant step divides by the
    previous pivot, which is exact and keeps entry growth polynomial); the
    back-substitution returns Fractions.  Raises SingularSystemError when no
    pivot can be found.
    """
    size = len(matrix)
    if len(rhs) != size or any(len(row) != size for row in matrix):
        raise ValueError("expected a square system")
    aug = [[*map(int, row), int(b)] for row, b in zip(matrix, rhs)]
    previous = 1
    for col in range(size):
        pivot_row = next((r for r in range(col, size) if aug[r][col] != 0), None)
        if pivot_row is None:
            raise SingularSystemError(f"no pivot in column {col}")
        if pivot_row != col:
            aug[col], aug[pivot_row] = aug[pivot_row], aug[col]
        pivot = aug[col][col]
        for r in range(col + 1, size):
            factor = aug[r][col]
            row = aug[r]
            top = aug[col]
            for c in range(col, size + 1):
                row[c] = (pivot * row[c] - factor * top[c]) // previous
        previous = pivot
    solution = [Fraction(0)] * size
    for r in range(size - 1, -1, -1):
        acc = Fraction(aug[r][size])
        for c in range(r + 1, size):
            acc -= aug[r][c] * solution[c]
        solution[r] = acc / aug[r][r]
    return tuple(solution)


Point = tuple[Fraction, ...]


@lru_cache(maxsize=None)
def _facet_table(n: int) -> dict[Chain, Hyperplane]:
    return {c: facet_inequality(c, n) for c in enumerate_chains(n)}


def _solve_vertex(v: Iterable[Chain], n: int, table: Mapping[Chain, Hyperplane]) -> Point:
    rows: list[list[int]] = []
    rhs: list[int] = []
    for chain in sorted(v, key=Chain.sort_key):
        h = table[chain]
        scale = h.rhs.denominator
        rows.append([scale * a for a in h.coeffs])
        rhs.append(h.rhs.numerator)
    rows.append([1] * (n + 1))
    rhs.append(3 ** (n + 1))
    return solve_exact(rows, rhs)


@lru_cache(maxsize=None)
def _vertex_point(v: NestedSet, n: int) -> Point:
    return _solve_vertex(v, n, _facet_table(n))


def vertex_coordinates(v: NestedSet, n: int) -> Point:
    """The unique point where the n facet hyperplanes of a maximal nested set
    meet the ambient plane."""
    v = frozenset(v)
    if len(v) != n:
        raise ValueError(f"expected a maximal nested set of cardinality {n}")
    if not is_nested(v, n):
        raise ValueError("the given chains are not nested")
    return _vertex_point(v, n)


@dataclass(frozen=True)
class VertexReport:
    """Outcome of checking one vertex against every facet."""

    vertex: Point
    tight: frozenset[Chain]
    strict_ok: bool
    multiplicity_ok: bool


def verify_vertex(
    v: NestedSet, n: int, facets: Mapping[Chain, Hyperplane] | None = None
) -> VertexReport:
    """Solve the vertex from its defining system, then report which facets it
    meets with equality and whether all remaining ones hold strictly.

    On a correct realization, ``tight`` equals ``v``, every other facet is
    strict, and the vertex lies on exactly n facet hyperplanes.
    """
    v = frozenset(v)
    if facets is None:
        table = _facet_table(n)
        point = _vertex_point(v, n)
    else:
        table = dict(facets)
        point = _solve_vertex(v, n, table)
    tight = frozenset(c for c, h in table.items() if h.tight(point))
    strict_ok = all(h.value(point) > h.rhs for c, h in table.items() if c not in v)
    return VertexReport(point, tight, strict_ok, len(tight) == n)


def affine_dimension(points: Sequence[Point], stop_at: int | None = None) -> int:
    """Dimension of the affine hull of the points, computed exactly.

    Returns -1 for no points.  ``stop_at`` allows an early exit as soon as
    the dimension is known to reach that value.
    """
    pts = list(points)
    if not pts:
        return -1
    base = pts[0]
    basis: list[tuple[int, list[Fraction]]] = []  # (leading index, echelon row)
    for p in pts[1:]:
        vec = [a - b for a, b in zip(p, base)]
        for lead, row in basis:
            if vec[lead] != 0:
                factor = vec[lead] / row[lead]
                vec = [x - factor * y for x, y in zip(vec, row)]
        lead = next((i for i, x in enumerate(vec) if x != 0), None)
        if lead is not None:
            basis.append((lead, vec))
            if stop_at is not None and len(basis) >= stop_at:
                return len(basis)
    return len(basis)


# ---------------------------------------------------------------------------
# normalization to subset-sum coordinates

@dataclass(frozen=True)
class AffineMap:
    """x' = offset + matrix @ (x_1..x_n); the x_0 coordinate is dropped."""

    matrix: tuple[tuple[Fraction, ...], ...]
    offset: tuple[Fraction, ...]

    def apply(self, point: Sequence[Fraction]) -> Point:
        n = len(self.offset)
        if len(point) != n + 1:
            raise ValueError(f"expected a point with {n + 1} coordinates")
        tail = point[1:]
        return tuple(
            off + sum((m * x for m, x in zip(row, tail)), Fraction(0))
            for row, off in zip(self.matrix, self.offset)
        )


def normalization_map(n: int) -> AffineMap:
    """The affine chart that turns the facets derived from the descending
    complete chain {n,..,1} > ... > {n} into subset-sum form: a facet whose
    sets are the suffixes with index interval Y maps to sum(x'_i, i in Y) =
    3^|Y|, and the whole polytope image satisfies x'_i >= 3."""
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    s = 3**n - n - 1
    matrix = tuple(
        tuple(Fraction(s) if j >= i else Fraction(0) for j in range(n)) for i in range(n)
    )
    offset = tuple(Fraction(3 - s * 3 ** (n - i + 1)) for i in range(1, n + 1))
    return AffineMap(matrix, offset)


def _w_vector(n: int) -> list[int]:
    # x-coordinates of the normalization's base point: 2*3^(n-i) except 3 at the end
    return [2 * 3 ** (n - i) for i in range(1, n)] + [3]


def normalized_functional(h: Hyperplane, n: int) -> tuple[tuple[Fraction, ...], Fraction]:
    """Pull the hyperplane's functional back through the inverse of the
    normalization chart, restricted to the ambient plane.

    Returns (coeffs, constant) with the image of ``h`` intersected with the
    ambient plane equal to {x' : coeffs . x' + constant = 0}.
    """
    if len(h.coeffs) != n + 1:
        raise ValueError("hyperplane dimension mismatch")
    s = 3**n - n - 1
    w = _w_vector(n)
    # x_i as an affine function of x' (1-based i); row i-1 holds its coeffs
    coeff = [[Fraction(0)] * n for _ in range(n)]
    const = [Fraction(0)] * n
    for i in range(n):
        const[i] = Fraction(w[i])
        coeff[i][i] = Fraction(1, s)
        if i + 1 < n:
            coeff[i][i + 1] = -Fraction(1, s)
        else:
            const[i] -= Fraction(3, s)
    # x_0 = 3^(n+1) - (x_1 + ... + x_n) on the ambient plane
    coeff0 = [-sum(coeff[i][j] for i in range(n)) for j in range(n)]
    const0 = Fraction(3 ** (n + 1)) - sum(const)

    out_coeffs = [h.coeffs[0] * coeff0[j] for j in range(n)]
    out_const = h.coeffs[0] * const0 - h.rhs
    for i in range(n):
        a = h.coeffs[i + 1]
        if a:
            for j in range(n):
                out_coeffs[j] += a * coeff[i][j]
            out_const += a * const[i]
    return tuple(out_coeffs), out_const


def standard_chain_interval(chain: Chain, n: int) -> tuple[int, int] | None:
    """The 1-based index interval (a, b) when every set of the chain is a
    suffix {j, ..., n}; None for chains not of that shape."""
    indices = []
    for s in chain.sets():
        j = n + 1 - len(s)
        if j < 1 or s != frozenset(range(j, n + 1)):
            return None
        indices.append(j)
    return min(indices), max(indices)


def top_simplex_points(n: int) -> list[Point]:
    """n points spanning the simplex cut out of the ambient permutohedron by
    the facet hyperplane of the complete descending chain.

    The i-th point is the common base point (2*3^n, 2*3^(n-1), ..., 6, 3)
    with the offset moved from coordinate i-1 to coordinate i.
    """
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    eps = fractional_offset(n, n)
    base = [Fraction(2 * 3 ** (n - j)) for j in range(n)] + [Fraction(3)]
    points = []
    for i in range(1, n + 1):
        coords = list(base)
        coords[i - 1] -= eps
        coords[i] += eps
        points.append(tuple(coords))
    return points


# ---------------------------------------------------------------------------
# the polytope graph and face counts

def polytope_graph(n: int, max_n: int | None = None):
    """The graph of the polytope, built from face combinatorics alone:
    vertices are maximal nested sets, edges join pairs sharing n-1 chains.
    Must coincide with the rewrite graph under the bracketing bijection."""
    from .brackets import ALPHA, SIGMA, RewriteGraph, from_nested, print_bracketing

    verts = enumerate_vertices(n, max_n=max_n)
    bracketing_of = {v: from_nested(v) for v in verts}
    order = sorted(verts, key=lambda v: print_bracketing(bracketing_of[v]))
    index = {v: i for i, v in enumerate(order)}

    buckets: dict[NestedSet, list[int]] = {}
    for v in verts:
        for chain in v:
            buckets.setdefault(v - {chain}, []).append(index[v])
    edges = set()
    for edge_face, pair in buckets.items():
        if len(pair) != 2:
            raise RuntimeError(f"edge face shared by {len(pair)} vertices, expected 2")
        i, j = sorted(pair)
        kind = ALPHA if any(is_full_chain(c, n) for c in edge_face) else SIGMA
        edges.add((i, j, kind))
    return RewriteGraph(tuple(bracketing_of[v] for v in order), frozenset(edges))


def f_vector(n: int, max_n: int | None = None) -> tuple[int, ...]:
    """(f_0, ..., f_(n-1)): the number of faces in each proper dimension."""
    return tuple(len(faces(n, dim, max_n=max_n)) for dim in range(n))


# ---------------------------------------------------------------------------
# the full verification suite

_MAX_REPORTED_FAILURES = 20


def realization_report(n: int, perturb: bool = False, max_n: int | None = None) -> dict:
    """Run every geometric and combinatorial check at size n and return a
    JSON-ready summary.

    Checks: each vertex solves to a point tight on exactly its own chains and
    strictly inside every other facet; all vertices are distinct; every facet
    carries enough affinely independent vertices to be facet-defining; the
    polytope graph equals the rewrite graph (connected, n-regular, one sigma
    edge per vertex); the face counts satisfy the Euler relation.

    ``perturb`` lowers one facet's right-hand side by 1 before checking, as a
    negative control: the report must then flag failures.
    """
    from .brackets import SIGMA, build_graph, from_nested, print_bracketing

    check_cap(n, max_n)
    table = dict(_facet_table(n))
    if perturb:
        # relax the last canonical facet (a complete descending chain); the
        # vertices on it then cross their neighboring facets
        target = list(table)[-1]
        h = table[target]
        table[target] = Hyperplane(h.coeffs, h.rhs - 1, h.relation)

    verts = enumerate_vertices(n, max_n=max_n)
    failures: list[str] = []

    def record(message: str) -> None:
        if len(failures) < _MAX_REPORTED_FAILURES:
            failures.append(message)
        elif len(failures) == _MAX_REPORTED_FAILURES:
            failures.append("... more failures suppressed")

    tight_points: dict[Chain, list[Point]] = {c: [] for c in table}
    points = []
    all_tight_match = True
    all_strict = True
    all_simple = True
    for v in verts:
        label = print_bracketing(from_nested(v))
        report = verify_vertex(v, n, facets=table)
        points.append(report.vertex)
        for chain in report.tight:
            tight_points[chain].append(report.vertex)
        if report.tight != v:
            all_tight_match = False
            record(f"vertex {label}: tight facets differ from its own chains")
        if not report.strict_ok:
            all_strict = False
            record(f"vertex {label}: some outside facet is not strict")
        if not report.multiplicity_ok:
            all_simple = False
            record(f"vertex {label}: tight on {len(report.tight)} facets, expected {n}")

    vertices_distinct = len(set(points)) == len(points)
    if not vertices_distinct:
        record("vertex coordinates collide")

    irredundant = True
    for chain, pts in tight_points.items():
        if affine_dimension(pts, stop_at=n - 1) < n - 1:
            irredundant = False
            record(f"facet {chain!r} is not facet-defining (affine dimension < {n - 1})")

    rewrite = build_graph(n, max_n=max_n)
    polytope = polytope_graph(n, max_n=max_n)
    graphs_equal = rewrite == polytope
    if not graphs_equal:
        record("polytope graph differs from the rewrite graph")
    graph_connected = rewrite.is_connected()
    if not graph_connected:
        record("rewrite graph is not connected")
    degrees_ok = all(rewrite.degree(i) == n for i in range(len(rewrite.vertices)))
    sigma_ok = all(rewrite.kind_degree(i, SIGMA) == 1 for i in range(len(rewrite.vertices)))
    if not degrees_ok:
        record("rewrite graph is not n-regular")
    if not sigma_ok:
        record("some vertex does not have exactly one sigma edge")

    fv = f_vector(n, max_n=max_n)
    euler_ok = sum((-1) ** k * fv[k] for k in range(n)) == 1 - (-1) ** n
    if not euler_ok:
        record(f"Euler relation fails for f-vector {fv}")

    expected_vertices = 1
    for i in range(n + 1, 2 * n + 1):
        expected_vertices *= i
    count_ok = len(verts) == expected_vertices and fv[0] == expected_vertices
    if not count_ok:
        record(f"vertex count {len(verts)} differs from (2n)!/n! = {expected_vertices}")

    ok = (
        all_tight_match
        and all_strict
        and all_simple
        and vertices_distinct
        and irredundant
        and graphs_equal
        and graph_connected
        and degrees_ok
        and sigma_ok
        and euler_ok
        and count_ok
    )
    return {
        "n": n,
        "perturbed": perturb,
        "vertex_count": len(verts),
        "facet_count": len(table),
        "f_vector": list(fv),
        "euler_ok": euler_ok,
        "tight_sets_match": all_tight_match,
        "strict_inequalities": all_strict,
        "simple": all_simple,
        "vertices_distinct": vertices_distinct,
        "facets_irredundant": irredundant,
        "graphs_equal": graphs_equal,
        "graph_connected": graph_connected,
        "graph_regular": degrees_ok,
        "sigma_degree_ok": sigma_ok,
        "failures": failures,
        "ok": ok,
    }
