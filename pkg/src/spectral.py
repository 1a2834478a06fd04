"""
Oriented-hypergraph matrices and the weak-walk correspondence.

Matrices are exact: entries are Python integers held in numpy object
arrays, and every product is range-checked against 64 bits. Walk counts
come from anchored hom enumeration out of incidence paths, so each matrix
identity can be cross-checked against an independent count.
"""

import csv
import io
import logging
from dataclasses import dataclass
from typing import Iterable, List, Mapping, Optional, Sequence, Tuple, Union

import numpy as np

from .core import (
    EDGE,
    INCIDENCE,
    VERTEX,
    IncidenceHypergraph,
    Morphism,
    Orientation,
    PathMapKind,
    check,
    classify_path_map,
)
from .elements import Element, label
from .errors import HomCountOverflowError, InputError, InternalError, ParityError
from .exponentials import exp_laplacian
from .generators import incidence_unit_r, path_ends, path_r
from .homsearch import INT64_MAX, AnchorConstraint, count_homs, iter_homs
from .products import dual, laplacian_product
from .reports import SuiteReport

logger = logging.getLogger(__name__)

OrientationSpec = Union[None, str, Orientation, Mapping[Element, int]]


# =============================================================================
# Oriented hypergraphs
# =============================================================================

@dataclass(frozen=True)
class OrientedHypergraph:
    """An incidence hypergraph with a ±1 orientation and fixed matrix index orders."""

    carrier: IncidenceHypergraph
    orientation: Orientation
    vertex_order: Tuple[Element, ...]
    edge_order: Tuple[Element, ...]

    @property
    def sign(self) -> Mapping[Element, int]:
        return self.orientation.sign

    @property
    def index(self) -> Tuple[Element, ...]:
        """Row/column order of the complete matrices: vertices, then edges."""
        return self.vertex_order + self.edge_order

    def flipped(self) -> "OrientedHypergraph":
        return OrientedHypergraph(self.carrier, self.orientation.flipped(), self.vertex_order, self.edge_order)


def oriented(
    g: Union[IncidenceHypergraph, OrientedHypergraph],
    orientation: OrientationSpec = None,
    vertex_order: Optional[Sequence[Element]] = None,
    edge_order: Optional[Sequence[Element]] = None,
) -> OrientedHypergraph:
    """
    Attach an orientation to g.

    Args:
        g: Incidence hypergraph (an OrientedHypergraph passes through unchanged
           when no orientation is given).
        orientation: None or "all-plus" for σ ≡ +1, "all-minus" for σ ≡ -1,
                     an Orientation, or a mapping incidence -> ±1.
        vertex_order, edge_order: Matrix index orders; canonical label order by default.

    Raises:
        ValidationError: If the orientation is not a total ±1 function.
        InputError: If an order is not a permutation of its sort.
    """
    if isinstance(g, OrientedHypergraph):
        if orientation is None and vertex_order is None and edge_order is None:
            return g
        g = g.carrier
    if not isinstance(g, IncidenceHypergraph):
        raise InputError(f"Orientations live on incidence hypergraphs, got a {g.category}")

    if orientation is None or orientation == "all-plus":
        sigma = Orientation.constant(g, 1)
    elif orientation == "all-minus":
        sigma = Orientation.constant(g, -1)
    elif isinstance(orientation, Orientation):
        if orientation.carrier != g:
            raise InputError("Orientation belongs to a different incidence hypergraph")
        sigma = orientation
    elif isinstance(orientation, str):
        raise InputError(f"Unknown orientation {orientation!r}")
    else:
        sigma = Orientation(g, orientation)
    check(sigma)

    vertices = _order(g, VERTEX, vertex_order)
    edges = _order(g, EDGE, edge_order)
    return OrientedHypergraph(g, sigma, vertices, edges)


def _order(g: IncidenceHypergraph, sort: str, order: Optional[Sequence[Element]]) -> Tuple[Element, ...]:
    if order is None:
        return tuple(g.ordered(sort))
    order = tuple(order)
    if len(order) != len(set(order)) or set(order) != g.elements(sort):
        raise InputError(f"The {sort} order is not a permutation of the {sort}s")
    return order


# =============================================================================
# Exact integer matrices
# =============================================================================

def _checked_range(entries: np.ndarray) -> np.ndarray:
    if entries.size and max(abs(int(x)) for x in entries.flat) > INT64_MAX:
        raise HomCountOverflowError("Matrix entry does not fit in 64 bits")
    return entries


class IntMatrix:
    """
    Integer matrix indexed by elements.

    Entries are Python ints in a numpy object array, so products never
    wrap around; results beyond 64 bits raise HomCountOverflowError.
    """

    def __init__(self, row_index: Sequence[Element], col_index: Sequence[Element], entries=None):
        self.row_index = tuple(row_index)
        self.col_index = tuple(col_index)
        shape = (len(self.row_index), len(self.col_index))
        array = np.zeros(shape, dtype=object)
        if entries is not None:
            source = np.asarray(entries, dtype=object)
            if source.size:
                array[:, :] = source.reshape(shape)
        self.entries = _checked_range(array)
        self._rows = {x: n for n, x in enumerate(self.row_index)}
        self._cols = {y: n for n, y in enumerate(self.col_index)}

    @classmethod
    def identity(cls, index: Sequence[Element]) -> "IntMatrix":
        m = cls(index, index)
        for n in range(len(m.row_index)):
            m.entries[n, n] = 1
        return m

    @property
    def rows(self) -> int:
        return len(self.row_index)

    @property
    def cols(self) -> int:
        return len(self.col_index)

    @property
    def shape(self) -> Tuple[int, int]:
        return self.rows, self.cols

    def entry(self, x: Element, y: Element) -> int:
        return int(self.entries[self._rows[x], self._cols[y]])

    def add_to(self, x: Element, y: Element, amount: int) -> None:
        self.entries[self._rows[x], self._cols[y]] += amount

    def to_lists(self) -> List[List[int]]:
        return [[int(value) for value in row] for row in self.entries]

    def block(self, rows: Iterable[Element], cols: Iterable[Element]) -> "IntMatrix":
        rows, cols = tuple(rows), tuple(cols)
        return IntMatrix(rows, cols, [[self.entry(x, y) for y in cols] for x in rows])

    @property
    def T(self) -> "IntMatrix":
        return IntMatrix(self.col_index, self.row_index, self.entries.T)

    def transpose(self) -> "IntMatrix":
        return self.T

    def _same_shape(self, other: "IntMatrix") -> None:
        if self.row_index != other.row_index or self.col_index != other.col_index:
            raise InputError("Matrices have different index sets")

    def __add__(self, other: "IntMatrix") -> "IntMatrix":
        self._same_shape(other)
        return IntMatrix(self.row_index, self.col_index, self.entries + other.entries)

    def __sub__(self, other: "IntMatrix") -> "IntMatrix":
        self._same_shape(other)
        return IntMatrix(self.row_index, self.col_index, self.entries - other.entries)

    def __neg__(self) -> "IntMatrix":
        return IntMatrix(self.row_index, self.col_index, -self.entries)

    def scaled(self, factor: int) -> "IntMatrix":
        return IntMatrix(self.row_index, self.col_index, self.entries * factor)

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.col_index != other.row_index:
            raise InputError("Inner matrix indices do not match")
        if not self.cols:
            return IntMatrix(self.row_index, other.col_index)
        return IntMatrix(self.row_index, other.col_index, np.dot(self.entries, other.entries))

    def power(self, k: int) -> "IntMatrix":
        """Exact k-th power by repeated squaring; the 0th power is the identity."""
        if self.row_index != self.col_index:
            raise InputError("Only square matrices with equal row and column indices have powers")
        if k < 0:
            raise InputError(f"Matrix power must be non-negative, got {k}")
        result = IntMatrix.identity(self.row_index)
        base = self
        while k:
            if k & 1:
                result = result @ base
            k >>= 1
            if k:
                base = base @ base
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return (
            self.row_index == other.row_index
            and self.col_index == other.col_index
            and self.to_lists() == other.to_lists()
        )

    __hash__ = None

    def __repr__(self) -> str:
        return f"IntMatrix({self.rows}x{self.cols})"

    def to_csv(self) -> str:
        """Header row of column labels, then one row per row label."""
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow([""] + [label(y) for y in self.col_index])
        for x, row in zip(self.row_index, self.to_lists()):
            writer.writerow([label(x)] + row)
        return buffer.getvalue()

    def to_text(self) -> str:
        """Right-aligned plain-text block with row and column labels."""
        header = [""] + [label(y) for y in self.col_index]
        body = [[label(x)] + [str(v) for v in row] for x, row in zip(self.row_index, self.to_lists())]
        table = [header] + body
        widths = [max(len(line[n]) for line in table) for n in range(len(header))]
        lines = []
        for line in table:
            first = line[0].ljust(widths[0])
            rest = [cell.rjust(width) for cell, width in zip(line[1:], widths[1:])]
            lines.append(" ".join([first] + rest).rstrip())
        return "\n".join(lines) + "\n"


def matrix_power(m: IntMatrix, k: int) -> IntMatrix:
    return m.power(k)


# =============================================================================
# Matrices of an oriented hypergraph
# =============================================================================

def walk_sign(og: OrientedHypergraph, f: Morphism, k: int) -> int:
    """(-1)^⌊k/2⌋ times the product of σ over the image incidences of a path map."""
    sign = -1 if (k // 2) % 2 else 1
    for i in f.domain.incidences:
        sign *= og.sign[f.incidence_map[i]]
    return sign


def incidence_matrix(g) -> IntMatrix:
    """V × E matrix whose (v, e)-entry sums σ(i) over incidences from v to e."""
    og = oriented(g)
    m = IntMatrix(og.vertex_order, og.edge_order)
    for i in og.carrier.incidences:
        m.add_to(og.carrier.port[i], og.carrier.attachment[i], og.sign[i])
    return m


def _length_one_walks(og: OrientedHypergraph) -> Tuple[IntMatrix, IntMatrix]:
    adjacency = IntMatrix(og.vertex_order, og.vertex_order)
    degree = IntMatrix(og.vertex_order, og.vertex_order)
    tail, head = path_ends(2)
    for f in iter_homs(path_r(2), og.carrier):
        x, y = f.vertex_map[tail], f.vertex_map[head]
        if classify_path_map(f) is PathMapKind.BACKSTEP:
            degree.add_to(x, y, 1)
        else:
            adjacency.add_to(x, y, walk_sign(og, f, 2))
    return adjacency, degree


def adjacency_matrix(g) -> IntMatrix:
    """A(u, w): signed count of incidence-monic length-one walks from u to w."""
    return _length_one_walks(oriented(g))[0]


def degree_matrix(g) -> IntMatrix:
    """D(v, v): number of backsteps at v (counted +1 each, not signed)."""
    return _length_one_walks(oriented(g))[1]


def laplacian_matrix(g) -> IntMatrix:
    """
    L = H Hᵀ, checked against D - A.

    Raises:
        InternalError: If H Hᵀ and D - A disagree.
    """
    og = oriented(g)
    h = incidence_matrix(og)
    laplacian = h @ h.T
    adjacency, degree = _length_one_walks(og)
    if laplacian != degree - adjacency:
        raise InternalError("H Hᵀ differs from D - A")
    return laplacian


def complete_incidence(g) -> IntMatrix:
    """H̄ = [[0, H], [Hᵀ, 0]] over vertices then edges."""
    og = oriented(g)
    h = incidence_matrix(og)
    m = IntMatrix(og.index, og.index)
    for v in og.vertex_order:
        for e in og.edge_order:
            value = h.entry(v, e)
            m.add_to(v, e, value)
            m.add_to(e, v, value)
    return m


def complete_laplacian(g) -> IntMatrix:
    """L̄ = H̄²."""
    bar = complete_incidence(g)
    return bar @ bar


# =============================================================================
# Weak walks
# =============================================================================

def _sort_of(g: IncidenceHypergraph, x: Element, sort: Optional[str], what: str) -> str:
    if sort is not None:
        if sort not in (VERTEX, EDGE) or x not in g.elements(sort):
            raise InputError(f"{what} {label(x)} is not a {sort}")
        return sort
    in_v, in_e = x in g.vertices, x in g.edges
    if in_v and in_e:
        raise InputError(f"{what} {label(x)} is both a vertex and an edge; give its sort")
    if not (in_v or in_e):
        raise InputError(f"{what} {label(x)} is neither a vertex nor an edge")
    return VERTEX if in_v else EDGE


def _other(sort: str) -> str:
    return EDGE if sort == VERTEX else VERTEX


def walk_domain(k: int, tail_sort: str) -> Tuple[IncidenceHypergraph, str]:
    """
    The path with k incidences rooted at a vertex (or, dualized, at an edge),
    with the sort of its head.
    """
    domain = path_r(k)
    head_sort = VERTEX if k % 2 == 0 else EDGE
    if tail_sort == EDGE:
        domain, head_sort = dual(domain), _other(head_sort)
    return domain, head_sort


def weak_walk_count(
    g,
    k: int,
    tail: Element,
    head: Element,
    signed: bool = False,
    tail_sort: Optional[str] = None,
    head_sort: Optional[str] = None,
) -> int:
    """
    Count weak walks with k incidences (half-length k/2) from tail to head.

    Unsigned mode counts anchored homs from the incidence path; signed mode
    sums (-1)^⌊k/2⌋ Π σ(image incidences) over the same homs.

    Raises:
        ParityError: If the sorts of tail and head do not fit the parity of k.
        HomCountOverflowError: If the count does not fit in 64 bits.
    """
    og = oriented(g)
    if k < 0:
        raise InputError(f"Walk length must be non-negative, got {k}")
    tail_sort = _sort_of(og.carrier, tail, tail_sort, "Tail")
    head_sort = _sort_of(og.carrier, head, head_sort, "Head")
    domain, expected = walk_domain(k, tail_sort)
    if head_sort != expected:
        raise ParityError(
            f"A walk with {k} incidences from a {tail_sort} ends at a {expected}, "
            f"but {label(head)} is a {head_sort}"
        )
    if k == 0:
        return int(tail == head)

    start, end = path_ends(k)
    anchors = AnchorConstraint(((tail_sort, start, tail), (head_sort, end, head)))
    if not signed:
        return count_homs(domain, og.carrier, anchors)
    total = sum(walk_sign(og, f, k) for f in iter_homs(domain, og.carrier, anchors))
    if abs(total) > INT64_MAX:
        raise HomCountOverflowError("Signed walk count does not fit in 64 bits")
    return total


def _walk_matrix(og: OrientedHypergraph, k: int, signed: bool) -> IntMatrix:
    m = IntMatrix(og.index, og.index)
    if k == 0:
        return IntMatrix.identity(og.index)
    start, end = path_ends(k)
    for tail_sort in (VERTEX, EDGE):
        domain, head_sort = walk_domain(k, tail_sort)
        for f in iter_homs(domain, og.carrier):
            x = f.component(tail_sort)[start]
            y = f.component(head_sort)[end]
            m.add_to(x, y, walk_sign(og, f, k) if signed else 1)
    return _checked_matrix(m)


def _checked_matrix(m: IntMatrix) -> IntMatrix:
    _checked_range(m.entries)
    return m


def signed_walk_matrix(g, k: int) -> IntMatrix:
    """Entry (x, y): signed weak-walk sum with k incidences, over vertices then edges."""
    return _walk_matrix(oriented(g), k, signed=True)


def walk_count_matrix(g, k: int) -> IntMatrix:
    """Entry (x, y): unsigned number of weak walks with k incidences."""
    return _walk_matrix(oriented(g), k, signed=False)


# =============================================================================
# Theorem checks
# =============================================================================

def _first_mismatch(pairs: Iterable[Tuple[Element, Element]], left, right) -> Optional[str]:
    for x, y in pairs:
        a, b = left(x, y), right(x, y)
        if a != b:
            return f"({label(x)},{label(y)}): {a} != {b}"
    return None


def _record(report: SuiteReport, name: str, mismatch: Optional[str]) -> None:
    if mismatch:
        logger.warning(f"{report.suite}: {name} failed at {mismatch}")
    report.add(name, mismatch is None, mismatch or "")


def verify_weak_walk_theorem(g, k_max: int = 2) -> SuiteReport:
    """
    Check the matrix/walk correspondence entrywise.

    Degree entries against backstep counts, adjacency entries against signed
    non-weak walk sums, -L against signed length-one weak walks, and for each
    k <= k_max the all-plus powers of H̄ against unsigned walk counts. The
    signed walk matrix is compared with (-1)^⌊k/2⌋ H̄^k and the sign
    convention is recorded as a note.
    """
    og = oriented(g)
    report = SuiteReport("weakwalk")
    vertices = og.vertex_order
    diagonal = [(v, v) for v in vertices]
    vertex_pairs = [(u, w) for u in vertices for w in vertices]
    tail, head = path_ends(2)

    def walks(u, w, kinds):
        anchors = AnchorConstraint(((VERTEX, tail, u), (VERTEX, head, w)))
        return [f for f in iter_homs(path_r(2), og.carrier, anchors) if classify_path_map(f) in kinds]

    adjacency = adjacency_matrix(og)
    degree = degree_matrix(og)
    laplacian = incidence_matrix(og) @ incidence_matrix(og).T

    _record(report, "L = H Hᵀ = D - A", _first_mismatch(
        vertex_pairs, laplacian.entry, lambda x, y: (degree - adjacency).entry(x, y)))
    _record(report, "D counts backsteps", _first_mismatch(
        diagonal, degree.entry, lambda x, y: len(walks(x, y, {PathMapKind.BACKSTEP}))))
    _record(report, "A sums signed non-weak walks", _first_mismatch(
        vertex_pairs, adjacency.entry,
        lambda x, y: sum(walk_sign(og, f, 2) for f in walks(x, y, {PathMapKind.LOOP, PathMapKind.ADJACENCY}))))
    _record(report, "-L sums signed weak walks of length 1", _first_mismatch(
        vertex_pairs, lambda x, y: -laplacian.entry(x, y),
        lambda x, y: weak_walk_count(og, 2, x, y, signed=True, tail_sort=VERTEX, head_sort=VERTEX)))

    plus = oriented(og.carrier, "all-plus", og.vertex_order, og.edge_order)
    bar = complete_incidence(plus)
    signed_bar = complete_incidence(og)
    sorts = {x: VERTEX for x in og.vertex_order}
    sorts.update({e: EDGE for e in og.edge_order})
    for k in range(k_max + 1):
        power = bar.power(k)

        def expected(x, y, k=k):
            if walk_domain(k, sorts[x])[1] != sorts[y]:
                return 0
            return weak_walk_count(plus, k, x, y, tail_sort=sorts[x], head_sort=sorts[y])

        pairs = [(x, y) for x in og.index for y in og.index]
        _record(report, f"all-plus H̄^{k} counts weak walks with {k} incidences",
                _first_mismatch(pairs, power.entry, expected))

        factor = -1 if (k // 2) % 2 else 1
        signed_power = signed_bar.power(k).scaled(factor)
        _record(report, f"signed walk matrix = (-1)^{k // 2} H̄^{k}",
                _first_mismatch(pairs, signed_walk_matrix(og, k).entry, signed_power.entry))
        if factor == -1 and any(v != 0 for row in signed_power.to_lists() for v in row):
            report.note(
                f"k={k}: H̄^{k} equals L̄^{k // 2} as matrices; the signed walk matrix is "
                f"(-1)^{k // 2} times it, so the two differ in sign"
            )

    logger.info(report.summary())
    return report


def laplacian_exponential_census(g: IncidenceHypergraph, k: int) -> SuiteReport:
    """
    Count the sorts of the Laplacian exponential of the k-incidence path
    into g three ways: its constructed carrier, weak-walk counts, and
    powers of the all-plus H̄.

    Raises:
        HomCountOverflowError, SizeGuardError: On objects too large to enumerate.
    """
    if isinstance(g, OrientedHypergraph):
        g = g.carrier
    plus = oriented(g)
    report = SuiteReport("census")
    exp = exp_laplacian(path_r(k), g)
    carrier = exp.carrier
    power = complete_incidence(plus).power(k)

    for sort, rows in ((VERTEX, plus.vertex_order), (EDGE, plus.edge_order)):
        _, head_sort = walk_domain(k, sort)
        heads = plus.vertex_order if head_sort == VERTEX else plus.edge_order
        walks = sum(
            weak_walk_count(plus, k, x, y, tail_sort=sort, head_sort=head_sort)
            for x in rows for y in heads
        )
        matrix_total = sum(power.entry(x, y) for x in rows for y in heads)
        built = len(carrier.elements(sort))
        detail = f"built {built}, walks {walks}, matrix {matrix_total}"
        ok = built == walks == matrix_total
        if not ok:
            logger.warning(f"census: {sort} count mismatch ({detail})")
        report.add(f"{sort}s of the exponential", ok, detail)

    prism_maps = count_homs(laplacian_product(path_r(k), incidence_unit_r()), g)
    built = len(carrier.incidences)
    report.add(f"{INCIDENCE}s of the exponential", built == prism_maps, f"built {built}, prism maps {prism_maps}")

    if report.ok:
        report.note(f"exponential of the {k}-incidence path: {carrier.describe()} confirmed")
    logger.info(report.summary())
    return report
