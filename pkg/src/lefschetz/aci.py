"""Almost complete intersections in three variables and their tilings.

For I = <x^a, y^b, z^c, x^alpha y^beta z^gamma> there is a single
critical degree s where multiplication by ell = x+y+z is (potentially) a
bijection.  Whether WLP holds, in characteristic 0 or mod p, reduces to
a determinant: the full multiplication matrix Z in the monomial bases,
or the small matrix N obtained after eliminating z.  The standard
monomials at degrees s and s+1 also form the triangles of a punctured
hexagonal region whose lozenge tilings are counted by |det Z|, tying the
algebra to MacMahon-style box counting.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .engine import decide_wlp, mult_matrix
from .intlinalg import IntegerMatrix, NonSquare, determinant, is_probable_prime, NonPrimeModulus
from .monomials import MonomialIdeal, complete_intersection


class NonMinimalGenerators(ValueError):
    pass


class ConditionsNotMet(ValueError):
    pass


class NotSquare(NonSquare):
    pass


class TooLarge(ValueError):
    pass


class Unbalanced(ValueError):
    pass


@dataclass(frozen=True)
class AciData:
    """Exponents plus the derived quantities for the critical degree.

    s is the critical degree; A, B, C, M are the column counts that the
    four generators contribute to the eliminated matrix N (so
    A + B + C + M = s + 2 when everything is in range).  `conditions`
    holds five booleans:

      0: exponent sum divisible by 3 (s is an integer)
      1: M >= 0
      2: 0 <= A <= beta + gamma
      3: 0 <= B <= alpha + gamma
      4: 0 <= C <= alpha + beta

    The derived fields are None when condition 0 fails.
    """

    a: int
    b: int
    c: int
    alpha: int
    beta: int
    gamma: int
    s: int | None
    A: int | None
    B: int | None
    C: int | None
    M: int | None
    conditions: tuple

    @property
    def all_conditions(self) -> bool:
        return all(self.conditions)


def aci_ideal(a, b, c, alpha, beta, gamma) -> MonomialIdeal:
    return MonomialIdeal.of(3, [(a, 0, 0), (0, b, 0), (0, 0, c), (alpha, beta, gamma)])


def aci_data(a, b, c, alpha, beta, gamma) -> AciData:
    if min(a, b, c) < 1 or min(alpha, beta, gamma) < 0:
        raise NonMinimalGenerators("exponents out of range")
    if not (alpha < a and beta < b and gamma < c):
        raise NonMinimalGenerators("mixed generator lies inside a pure power")
    if len(aci_ideal(a, b, c, alpha, beta, gamma).gens) != 4:
        raise NonMinimalGenerators("fewer than four minimal generators")
    total = a + b + c + alpha + beta + gamma
    if total % 3:
        return AciData(a, b, c, alpha, beta, gamma, None, None, None, None, None,
                       (False, False, False, False, False))
    s = total // 3 - 2
    A, B, C = s + 2 - a, s + 2 - b, s + 2 - c
    M = s + 2 - (alpha + beta + gamma)
    conds = (True,
             M >= 0,
             0 <= A <= beta + gamma,
             0 <= B <= alpha + gamma,
             0 <= C <= alpha + beta)
    return AciData(a, b, c, alpha, beta, gamma, s, A, B, C, M, conds)


def build_Z(data: AciData) -> IntegerMatrix:
    """Multiplication by ell from degree s to s+1 in the monomial bases."""
    if not data.all_conditions:
        raise ConditionsNotMet(f"conditions {data.conditions}")
    ideal = aci_ideal(data.a, data.b, data.c, data.alpha, data.beta, data.gamma)
    gm = mult_matrix(ideal, data.s, 1)
    if gm.source_dim != gm.target_dim:
        raise NotSquare(f"{gm.target_dim}x{gm.source_dim} at degree {data.s}")
    return gm.matrix


def build_N(data: AciData) -> IntegerMatrix:
    """The (C+M)-square matrix left after eliminating z = -(x+y).

    Setting z to -(x+y) maps the quotient onto k[x,y] modulo the images
    of the four generators.  Expanding the degree-(s+1) multiples of the
    images in the basis x^j y^(s+1-j), the multiples of x^a and y^b give
    unit columns (rows j >= a and j < B); crossing those out leaves this
    block, whose entries are signed binomial coefficients.  Its
    determinant agrees with det Z up to sign.
    """
    if not data.all_conditions:
        raise ConditionsNotMet(f"conditions {data.conditions}")
    c, alpha, gamma = data.c, data.alpha, data.gamma
    sc = (-1) ** c
    sg = (-1) ** gamma
    rows = []
    for j in range(data.B, data.a):
        row = []
        for i in range(data.C):
            k = j - i
            row.append(sc * math.comb(c, k) if 0 <= k <= c else 0)
        for i in range(data.M):
            k = j - alpha - i
            row.append(sg * math.comb(gamma, k) if 0 <= k <= gamma else 0)
        rows.append(row)
    size = data.C + data.M
    if not rows:
        return IntegerMatrix(0, 0)
    assert len(rows) == size
    return IntegerMatrix.from_rows(rows)


def wlp_via_det(data: AciData, characteristic: int = 0) -> bool:
    """WLP verdict straight from det N: nonzero (resp. nonzero mod p)."""
    det = determinant(build_N(data))
    if characteristic == 0:
        return det != 0
    if not is_probable_prime(characteristic):
        raise NonPrimeModulus(f"characteristic {characteristic} is not prime")
    return det % characteristic != 0


@dataclass(frozen=True)
class RegionGraph:
    """Bipartite multiplication graph at one degree.

    down_nodes are the standard monomials of degree s (downward
    triangles of the region), up_nodes those of degree s+1 (upward
    triangles).  Edges are (down_index, up_index, variable_index) with
    up = down * x_variable; they are exactly the support of Z.  Perfect
    matchings of this graph are the lozenge tilings of the region.
    """

    degree: int
    down_nodes: tuple
    up_nodes: tuple
    edges: tuple


def bipartite_multiplication_graph(ideal: MonomialIdeal, degree: int) -> RegionGraph:
    down = ideal.standard_basis(degree)
    up = ideal.standard_basis(degree + 1)
    up_index = {m: i for i, m in enumerate(up)}
    edges = []
    for di, m in enumerate(down):
        for v in range(ideal.num_vars):
            ui = up_index.get(m.times_var(v))
            if ui is not None:
                edges.append((di, ui, v))
    return RegionGraph(degree, down, up, tuple(edges))


def region_graph(data: AciData) -> RegionGraph:
    if not data.all_conditions:
        raise ConditionsNotMet(f"conditions {data.conditions}")
    ideal = aci_ideal(data.a, data.b, data.c, data.alpha, data.beta, data.gamma)
    return bipartite_multiplication_graph(ideal, data.s)


def count_matchings(graph: RegionGraph) -> int:
    """Exact perfect-matching count by backtracking (the oracle side of
    the tiling equivalences, so deliberately brute force)."""
    n_down = len(graph.down_nodes)
    n_up = len(graph.up_nodes)
    if n_down != n_up:
        raise Unbalanced(f"{n_down} down vs {n_up} up nodes")
    if n_down > 30:
        raise TooLarge(f"{n_down} nodes exceeds the matching-count limit of 30")
    if n_down == 0:
        return 1
    neighbors = [[] for _ in range(n_down)]
    for di, ui, _ in graph.edges:
        neighbors[di].append(ui)

    used = [False] * n_up

    def count(remaining) -> int:
        if not remaining:
            return 1
        # branch on the most constrained node
        best = min(remaining, key=lambda d: sum(not used[u] for u in neighbors[d]))
        rest = [d for d in remaining if d != best]
        total = 0
        for u in neighbors[best]:
            if not used[u]:
                used[u] = True
                total += count(rest)
                used[u] = False
        return total

    return count(list(range(n_down)))


def find_matching(graph: RegionGraph):
    """One perfect matching as (down, up, variable) triples, or None."""
    n_down = len(graph.down_nodes)
    if n_down != len(graph.up_nodes):
        return None
    neighbors = [[] for _ in range(n_down)]
    for di, ui, v in graph.edges:
        neighbors[di].append((ui, v))
    used = [False] * len(graph.up_nodes)
    chosen = {}

    def search(remaining) -> bool:
        if not remaining:
            return True
        best = min(remaining, key=lambda d: sum(not used[u] for u, _ in neighbors[d]))
        rest = [d for d in remaining if d != best]
        for u, v in neighbors[best]:
            if not used[u]:
                used[u] = True
                chosen[best] = (u, v)
                if search(rest):
                    return True
                used[u] = False
        return False

    if not search(list(range(n_down))):
        return None
    return [(d, u, v) for d, (u, v) in sorted(chosen.items())]


def macmahon(a: int, b: int, c: int) -> int:
    """Boxed plane partitions in an a x b x c box, by the product formula."""
    if min(a, b, c) < 0:
        raise ValueError("box sides must be non-negative")
    out = Fraction(1)
    for i in range(1, a + 1):
        for j in range(1, b + 1):
            for k in range(1, c + 1):
                out *= Fraction(i + j + k - 1, i + j + k - 2)
    assert out.denominator == 1
    return int(out)


def plane_partitions_bruteforce(a: int, b: int, c: int) -> int:
    """Count a x b arrays with entries in 0..c, weakly decreasing along
    rows and columns, by direct enumeration."""
    if a * b * c > 27:
        raise TooLarge("brute-force box larger than 27 cells")
    if a == 0 or b == 0:
        return 1
    grid = [[0] * b for _ in range(a)]

    def fill(pos) -> int:
        if pos == a * b:
            return 1
        i, j = divmod(pos, b)
        cap = c
        if i > 0:
            cap = min(cap, grid[i - 1][j])
        if j > 0:
            cap = min(cap, grid[i][j - 1])
        total = 0
        for val in range(cap + 1):
            grid[i][j] = val
            total += fill(pos + 1)
        return total

    return fill(0)


def li_zanello_equiv(a: int, b: int, c: int, p: int) -> bool:
    """Check the equivalence: p divides the box count in an a x b x c box
    iff <x^(a+b), y^(a+c), z^(b+c)> fails WLP in characteristic p."""
    divides = macmahon(a, b, c) % p == 0
    ci = complete_intersection((a + b, a + c, b + c))
    fails = not decide_wlp(ci, p).holds
    return divides == fails


def brenner_kaid_char2(d: int) -> bool:
    """Predict WLP of <x^d, y^d, z^d> in characteristic 2: holds exactly
    when d = floor((2^n + 1)/3) for some n >= 1."""
    if d < 1:
        raise ValueError("d must be >= 1")
    n = 1
    while True:
        v = (2 ** n + 1) // 3
        if v == d:
            return True
        if v > d:
            return False
        n += 1
