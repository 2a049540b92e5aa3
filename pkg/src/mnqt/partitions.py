"""Partitions, skew and shifted shapes, and the combinatorial statistics used
by the closed-form formulas.

Cells are 1-indexed ``(row, column)`` pairs with rows counted downward
(English notation).  Shifted diagrams place row ``i`` in columns
``i .. i + part - 1``.
"""
from functools import cached_property, lru_cache
from math import comb, factorial


class Partition(tuple):
    """A weakly decreasing tuple of positive integers.

    Trailing zeros are dropped on construction.  Indexing helpers treat
    missing parts as zero (``part(i)`` is 1-indexed).
    """

    def __new__(cls, parts=()):
        if isinstance(parts, Partition):
            return parts
        if isinstance(parts, str):
            return cls.parse(parts)
        parts = [int(x) for x in parts]
        while parts and parts[-1] == 0:
            parts.pop()
        for i, x in enumerate(parts):
            if x < 0 or (i and parts[i - 1] < x):
                raise ValueError("not a partition: %r" % (tuple(parts),))
        return super().__new__(cls, parts)

    @classmethod
    def parse(cls, text):
        text = text.strip()
        if text in ("-", "", "()", "[]"):
            return cls(())
        tokens = text.strip("()[]").replace(" ", "").split(",")
        parts = []
        for tok in tokens:
            if not tok.isdigit():
                raise ValueError("bad partition token %r in %r" % (tok, text))
            parts.append(int(tok))
        return cls(parts)

    def __str__(self):
        return ",".join(map(str, self)) if self else "-"

    def __repr__(self):
        return "Partition(%s)" % (str(self),)

    @cached_property
    def size(self):
        return sum(self)

    @property
    def length(self):
        return len(self)

    def part(self, i):
        """The i-th part (1-indexed), zero past the end."""
        return self[i - 1] if 0 < i <= len(self) else 0

    @cached_property
    def conjugate(self):
        if not self:
            return self
        return Partition(sum(1 for x in self if x > j) for j in range(self[0]))

    @cached_property
    def multiplicities(self):
        out = {}
        for x in self:
            out[x] = out.get(x, 0) + 1
        return out

    def multiplicity(self, i):
        return self.multiplicities.get(i, 0)

    @cached_property
    def n(self):
        """sum (i-1) * part_i, equal to sum over columns of C(column, 2)."""
        return sum(i * x for i, x in enumerate(self))

    @cached_property
    def z(self):
        out = 1
        for i, m in self.multiplicities.items():
            out *= i ** m * factorial(m)
        return out

    @cached_property
    def sign(self):
        """Sign of a permutation with this cycle type."""
        return -1 if (self.size - len(self)) % 2 else 1

    def is_strict(self):
        return all(self[i] > self[i + 1] for i in range(len(self) - 1))

    def contains(self, other):
        other = Partition(other)
        return len(other) <= len(self) and all(x <= y for x, y in zip(other, self))

    def cells(self):
        return [(i + 1, j + 1) for i, x in enumerate(self) for j in range(x)]

    def arm(self, i, j):
        return self.part(i) - j

    def leg(self, i, j):
        return self.conjugate.part(j) - i

    def dominates(self, other):
        """Dominance order: every prefix sum of self is at least other's."""
        other = Partition(other)
        if self.size != other.size:
            return False
        a = b = 0
        for i in range(max(len(self), len(other))):
            a += self.part(i + 1)
            b += other.part(i + 1)
            if a < b:
                return False
        return True

    def remove_first(self):
        """The partition with its first part deleted."""
        return Partition(self[1:])

    def remove_last(self):
        return Partition(self[:-1])


EMPTY = Partition(())


class Composition(tuple):
    """A finite sequence of non-negative integers."""

    def __new__(cls, parts=()):
        parts = tuple(int(x) for x in parts)
        if any(x < 0 for x in parts):
            raise ValueError("negative part in composition %r" % (parts,))
        return super().__new__(cls, parts)

    @property
    def size(self):
        return sum(self)

    def is_partition(self):
        return all(self[i] >= self[i + 1] for i in range(len(self) - 1))

    def __str__(self):
        return ",".join(map(str, self)) if self else "-"


def _connected_pieces(cells):
    """Split a set of cells into edge-connected pieces, each sorted."""
    cells = set(cells)
    pieces = []
    while cells:
        start = min(cells)
        stack = [start]
        cells.discard(start)
        piece = [start]
        while stack:
            i, j = stack.pop()
            for nb in ((i + 1, j), (i - 1, j), (i, j + 1), (i, j - 1)):
                if nb in cells:
                    cells.discard(nb)
                    stack.append(nb)
                    piece.append(nb)
        pieces.append(sorted(piece))
    pieces.sort()
    return pieces


def _has_square(cells):
    cells = set(cells)
    return any((i + 1, j) in cells and (i, j + 1) in cells and (i + 1, j + 1) in cells
               for i, j in cells)


def _rows_cols(cells):
    return len({i for i, _ in cells}), len({j for _, j in cells})


class SkewShape:
    """The skew diagram outer/inner."""

    __slots__ = ("outer", "inner", "__dict__")

    def __init__(self, outer, inner=()):
        self.outer = Partition(outer)
        self.inner = Partition(inner)
        if not self.outer.contains(self.inner):
            raise ValueError("%s is not contained in %s" % (self.inner, self.outer))

    @classmethod
    def parse(cls, text):
        if "/" in text:
            o, i = text.split("/", 1)
            return cls(Partition.parse(o), Partition.parse(i))
        return cls(Partition.parse(text))

    def __str__(self):
        return "%s/%s" % (self.outer, self.inner)

    def __repr__(self):
        return "SkewShape(%s)" % self

    def __eq__(self, other):
        return isinstance(other, SkewShape) and (self.outer, self.inner) == (other.outer, other.inner)

    def __hash__(self):
        return hash((self.outer, self.inner))

    @cached_property
    def cells(self):
        return [(i + 1, j + 1) for i, x in enumerate(self.outer)
                for j in range(self.inner.part(i + 1), x)]

    @property
    def size(self):
        return self.outer.size - self.inner.size

    def conjugate(self):
        return SkewShape(self.outer.conjugate, self.inner.conjugate)

    def row_lengths(self):
        return [self.outer.part(i) - self.inner.part(i) for i in range(1, len(self.outer) + 1)]

    def column_lengths(self):
        lo, li = self.outer.conjugate, self.inner.conjugate
        return [lo.part(j) - li.part(j) for j in range(1, len(lo) + 1)]

    def is_horizontal_strip(self):
        return all(self.outer.part(i + 1) <= self.inner.part(i)
                   for i in range(1, len(self.outer)))

    def is_vertical_strip(self):
        return all(x <= 1 for x in self.row_lengths())

    def has_square(self):
        return _has_square(self.cells)

    @cached_property
    def components(self):
        return _connected_pieces(self.cells)


def n_stat(shape):
    """Sum over columns of C(outer' - inner', 2)."""
    if not isinstance(shape, SkewShape):
        shape = SkewShape(shape)
    return sum(comb(c, 2) for c in shape.column_lengths())


HORIZONTAL = "horizontal"
VERTICAL = "vertical"
BORDER = "border"
GENERALIZED_BORDER = "generalized-border"


def strip_classify(shape):
    """Set of strip classes the skew shape belongs to.

    The empty shape is a horizontal and vertical strip and a generalized
    border strip with no components, but not a border strip.
    """
    flags = set()
    if shape.is_horizontal_strip():
        flags.add(HORIZONTAL)
    if shape.is_vertical_strip():
        flags.add(VERTICAL)
    if not shape.has_square():
        flags.add(GENERALIZED_BORDER)
        if len(shape.components) == 1:
            flags.add(BORDER)
    return frozenset(flags)


def gbs_weight(shape, t):
    """(t-1)^(m-1) * prod over components of (-1)^(rows-1) t^(cols-1).

    ``t`` may be any ring element (RatFunc, int, ...).  The empty shape has
    weight 1 by convention.
    """
    if shape.has_square():
        raise ValueError("%s is not a generalized border strip" % shape)
    comps = shape.components
    if not comps:
        return t ** 0
    out = (t - 1) ** (len(comps) - 1)
    for piece in comps:
        rows, cols = _rows_cols(piece)
        out = out * (-1) ** (rows - 1) * t ** (cols - 1)
    return out


def column_removal_bounds(shape):
    """[(j, a_j)] with a_j = outer'_j - max(inner'_j, outer'_{j+1}) > 0."""
    lo, li = shape.outer.conjugate, shape.inner.conjugate
    out = []
    for j in range(1, len(lo) + 1):
        a = lo.part(j) - max(li.part(j), lo.part(j + 1))
        if a > 0:
            out.append((j, a))
    return out


def coarsenings(parts):
    """All compositions obtained by merging adjacent blocks, including itself."""
    parts = tuple(parts)
    if any(x <= 0 for x in parts):
        raise ValueError("coarsenings need positive parts")
    if not parts:
        return [Composition(())]
    out = []
    gaps = len(parts) - 1
    for mask in range(1 << gaps):
        cur = [parts[0]]
        for i in range(gaps):
            if mask >> i & 1:
                cur[-1] += parts[i + 1]
            else:
                cur.append(parts[i + 1])
        out.append(Composition(cur))
    out.sort(key=lambda c: (-len(c), tuple(c)))
    return out


# -- shifted shapes ---------------------------------------------------------

def shifted_cells(outer, inner=()):
    outer, inner = Partition(outer), Partition(inner)
    return [(i + 1, i + j + 1) for i, x in enumerate(outer)
            for j in range(inner.part(i + 1), x)]


class ShiftedSkewShape:
    """Shifted skew diagram of two strict partitions."""

    __slots__ = ("outer", "inner", "__dict__")

    def __init__(self, outer, inner=()):
        self.outer = Partition(outer)
        self.inner = Partition(inner)
        if not (self.outer.is_strict() and self.inner.is_strict()):
            raise ValueError("shifted shapes need strict partitions")
        if not self.outer.contains(self.inner):
            raise ValueError("%s is not contained in %s" % (self.inner, self.outer))

    def __str__(self):
        return "%s/%s" % (self.outer, self.inner)

    @cached_property
    def cells(self):
        return shifted_cells(self.outer, self.inner)

    @property
    def size(self):
        return self.outer.size - self.inner.size

    def has_square(self):
        return _has_square(self.cells)


def _between_strict(inner, outer):
    """Strict partitions nu with inner contained in nu contained in outer."""
    def rec(i, prev, acc):
        if i > len(outer):
            yield Partition(acc)
            return
        hi = outer.part(i)
        if prev is not None:
            hi = min(hi, prev - 1)
        lo = inner.part(i)
        for x in range(hi, lo - 1, -1):
            if x == 0:
                yield Partition(acc)
                break
            yield from rec(i + 1, x, acc + [x])
    yield from rec(1, None, [])


class DoubleStrip:
    """Result of ``double_strip_decompose``."""

    __slots__ = ("is_gds", "c", "components", "t_boxes", "minus_boxes", "witness")

    def __init__(self, is_gds, c, components, t_boxes, minus_boxes, witness):
        self.is_gds = is_gds
        self.c = c
        self.components = components
        self.t_boxes = t_boxes
        self.minus_boxes = minus_boxes
        self.witness = witness

    @property
    def m(self):
        return len(self.components)

    def __iter__(self):
        return iter((self.is_gds, self.c, self.components))


def double_strip_decompose(shape):
    """Decide the generalized double strip property and cut the shape.

    The property is decided by trying every strict intermediate partition.
    Cells on diagonals (constant column - row) meeting the shape twice form
    the paired part; the rest splits into connected pieces.
    """
    witness = None
    for nu in _between_strict(shape.inner, shape.outer):
        if not _has_square(shifted_cells(shape.outer, nu)) and \
                not _has_square(shifted_cells(nu, shape.inner)):
            witness = nu
            break
    diagonals = {}
    for i, j in shape.cells:
        diagonals.setdefault(j - i, []).append((i, j))
    t_boxes, minus_boxes, singles = [], [], []
    for d in sorted(diagonals):
        cells = sorted(diagonals[d])
        if len(cells) == 1:
            singles.append(cells[0])
        elif len(cells) == 2:
            t_boxes.append(cells[0])
            minus_boxes.append(cells[1])
        else:
            witness = None  # three cells on a diagonal force a square
    return DoubleStrip(witness is not None, len(t_boxes), _connected_pieces(singles),
                       t_boxes, minus_boxes, witness)


def row_composition(piece):
    """Row lengths of a piece of cells, top row first."""
    rows = {}
    for i, _ in piece:
        rows[i] = rows.get(i, 0) + 1
    return Composition(rows[i] for i in sorted(rows))


def _d_value(r, t):
    # 2(t-1)(-1)^(r-1) [r]_{-t}
    s = sum((-t) ** k for k in range(r))
    return 2 * (t - 1) * (-1) ** (r - 1) * s


def gds_weight(shape, t):
    """Weight of a generalized double strip in the variable ``t``."""
    info = double_strip_decompose(shape)
    if not info.is_gds:
        raise ValueError("%s is not a generalized double strip" % shape)
    out = (-t) ** info.c
    if len(shape.outer) == len(shape.inner) + 2:
        out = out * 2
    for piece in info.components:
        xi = row_composition(piece)
        total = 0
        for tau in coarsenings(xi):
            term = (-1) ** (len(xi) - len(tau))
            for r in tau:
                term = term * _d_value(r, t)
            total = total + term
        out = out * total
    return out


# -- enumeration -------------------------------------------------------------

@lru_cache(maxsize=None)
def partitions_of(n, max_part=None):
    """Partitions of n in reverse-lexicographic order, (n) first."""
    if max_part is None:
        max_part = n
    if n == 0:
        return (EMPTY,)
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions_of(n - first, first):
            out.append(Partition((first,) + rest))
    return tuple(out)


def strict_partitions(n):
    return tuple(p for p in partitions_of(n) if p.is_strict())


def partitions_between(inner, outer):
    """Partitions nu with inner contained in nu contained in outer."""
    inner, outer = Partition(inner), Partition(outer)
    out = []

    def rec(i, prev, acc):
        if i > len(outer):
            out.append(Partition(acc))
            return
        hi = min(outer.part(i), prev)
        lo = inner.part(i)
        for x in range(hi, lo - 1, -1):
            if x == 0:
                out.append(Partition(acc))
                return
            rec(i + 1, x, acc + [x])

    rec(1, outer.part(1), [])
    return out


def skew_shapes(n):
    """Skew shapes lam/rho with n cells and no empty row or column, as
    (lam, rho) pairs; every skew shape is a translate of exactly one."""
    out = []

    def rec(lam, rho, left):
        if left == 0:
            if rho[-1] == 0:
                out.append((Partition(lam), Partition(rho)))
            return
        top_l, top_r = lam[-1], rho[-1]
        for r in range(top_r, -1, -1):
            for l in range(max(r + 1, top_r), min(top_l, r + left) + 1):
                rec(lam + [l], rho + [r], left - (l - r))

    for first in range(1, n + 1):
        for r in range(0, n):
            if first + r <= n + r:
                rec([first + r], [r], n - first)
    return out


def partitions_containing(inner, n, max_length=None):
    """Partitions of n containing ``inner``."""
    inner = Partition(inner)
    return [p for p in partitions_of(n) if p.contains(inner)
            and (max_length is None or len(p) <= max_length)]


def horizontal_strips_removed(outer, k=None):
    """Partitions mu with outer/mu a horizontal strip (of size k if given)."""
    outer = Partition(outer)
    out = []

    def rec(i, acc):
        if i > len(outer):
            mu = Partition(acc)
            if k is None or outer.size - mu.size == k:
                out.append(mu)
            return
        lo = outer.part(i + 1)
        for x in range(outer.part(i), lo - 1, -1):
            rec(i + 1, acc + [x])

    rec(1, [])
    return out


def vertical_strips_removed(outer, k=None):
    """Partitions mu with outer/mu a vertical strip (of size k if given)."""
    outer = Partition(outer)
    return [m.conjugate for m in horizontal_strips_removed(outer.conjugate, k)]


def standard_tableaux(shape):
    """All standard fillings of a skew shape, each as {cell: entry}."""
    cells = shape.cells
    n = len(cells)
    out = []
    rows = list(shape.inner) + [0] * (len(shape.outer) - len(shape.inner))

    def rec(filled, k):
        if k > n:
            out.append(dict(filled))
            return
        for i in range(len(rows)):
            if rows[i] < shape.outer[i] and (i == 0 or rows[i - 1] > rows[i]):
                cell = (i + 1, rows[i] + 1)
                rows[i] += 1
                filled[cell] = k
                rec(filled, k + 1)
                del filled[cell]
                rows[i] -= 1

    rec({}, 1)
    return out


def major_index(tableau):
    """Sum of descents i, where i + 1 sits in a strictly lower row."""
    where = {v: c for c, v in tableau.items()}
    return sum(i for i in range(1, len(where)) if where[i + 1][0] > where[i][0])


def is_partition_sequence(seq):
    return all(x >= 0 for x in seq) and all(seq[i] >= seq[i + 1] for i in range(len(seq) - 1))


__all__ = [
    "Partition", "Composition", "SkewShape", "ShiftedSkewShape", "EMPTY",
    "n_stat", "strip_classify", "gbs_weight", "double_strip_decompose",
    "gds_weight", "coarsenings", "column_removal_bounds", "partitions_of",
    "strict_partitions", "partitions_between", "partitions_containing",
    "horizontal_strips_removed", "vertical_strips_removed",
    "standard_tableaux", "major_index", "row_composition",
    "HORIZONTAL", "VERTICAL", "BORDER", "GENERALIZED_BORDER",
    "is_partition_sequence", "skew_shapes",
]


# -- symmetric group characters ------------------------------------------

def _beta_set(lam, length):
    return [lam.part(i + 1) + length - 1 - i for i in range(length)]


@lru_cache(maxsize=None)
def character(lam, rho):
    """Irreducible character value chi^lam at cycle type rho, by removing
    border strips of length rho_1 (bead moves on the abacus)."""
    lam, rho = Partition(lam), Partition(rho)
    if lam.size != rho.size:
        raise ValueError("sizes differ: %s vs %s" % (lam, rho))
    if not rho:
        return 1
    r, rest = rho[0], Partition(rho[1:])
    length = len(lam)
    beads = _beta_set(lam, length)
    occupied = set(beads)
    total = 0
    for b in beads:
        nb = b - r
        if nb < 0 or nb in occupied:
            continue
        between = sum(1 for x in beads if nb < x < b)
        moved = sorted((nb if x == b else x for x in beads), reverse=True)
        mu = Partition(x - (length - 1 - i) for i, x in enumerate(moved))
        total += (-1) ** between * character(mu, rest)
    return total


@lru_cache(maxsize=None)
def skew_character(lam, inner, rho):
    """chi^{lam/inner} at cycle type rho: strips of length rho_1 are removed
    from lam while the result still contains ``inner``."""
    lam, inner, rho = Partition(lam), Partition(inner), Partition(rho)
    if lam.size - inner.size != rho.size:
        raise ValueError("sizes differ: %s/%s vs %s" % (lam, inner, rho))
    if not rho:
        return 1 if lam == inner else 0
    r, rest = rho[0], Partition(rho[1:])
    length = len(lam)
    beads = _beta_set(lam, length)
    occupied = set(beads)
    total = 0
    for b in beads:
        nb = b - r
        if nb < 0 or nb in occupied:
            continue
        between = sum(1 for x in beads if nb < x < b)
        moved = sorted((nb if x == b else x for x in beads), reverse=True)
        mu = Partition(x - (length - 1 - i) for i, x in enumerate(moved))
        if mu.contains(inner):
            total += (-1) ** between * skew_character(mu, inner, rest)
    return total


__all__.extend(["character", "skew_character"])
