"""The Grassmann graph J_q(N, D) over a small finite field.

Vertices are D-dimensional subspaces of GF(q)^N stored in canonical reduced
row echelon form.  For bulk work each vertex is also encoded by the set of
projective points it contains: two subspaces meet in a d-dimensional space
exactly when they share [d]_q = (q^d - 1)/(q - 1) points, so intersection
dimensions for many pairs come out of a single matrix product.
"""

from __future__ import annotations

import hashlib
import itertools
import os
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

import numpy as np

from .fields import GF, FiniteField
from .qcomb import gauss_binom
from .scalars import specialize_q

__all__ = [
    "Subspace",
    "BudgetExceeded",
    "NotEquitable",
    "GrassmannGraph",
    "CellPartition",
    "enumerate_subspaces",
    "distance",
    "build_delsarte_clique",
    "classify",
    "empirical_intersection_numbers",
    "quotient_matrices",
    "cell_index",
    "cell_label",
    "count_subspaces",
    "default_base_pair",
    "random_base_pair",
    "default_cache_dir",
    "cache_key",
    "save_partition",
    "load_partition_labels",
    "clear_cache",
]

DEFAULT_BUDGET = 10**6
CACHE_VERSION = 1


class BudgetExceeded(RuntimeError):
    def __init__(self, count, budget):
        super().__init__(f"enumeration would produce {count} subspaces, budget is {budget}")
        self.count = count
        self.budget = budget


class NotEquitable(RuntimeError):
    pass


def cell_index(i: int, sign: str) -> int:
    """Position of C_i^sign in the ordered basis (C_0^-, C_0^+, C_1^-, ...)."""
    return 2 * i + (1 if sign == "+" else 0)


def cell_label(j: int) -> str:
    return f"C{j // 2}{'+' if j % 2 else '-'}"


@dataclass(frozen=True)
class Subspace:
    """A subspace of GF(q)^N in reduced row echelon form."""

    q: int
    N: int
    rows: tuple
    pivots: tuple

    @classmethod
    def span(cls, ff: FiniteField, N: int, vectors) -> "Subspace":
        vectors = np.array(vectors, dtype=np.int64).reshape(-1, N)
        m, piv = ff.rref(vectors)
        return cls(ff.q, N, tuple(tuple(int(a) for a in r) for r in m), tuple(piv))

    @property
    def dim(self) -> int:
        return len(self.rows)

    @property
    def field(self) -> FiniteField:
        return GF(self.q)

    def array(self) -> np.ndarray:
        return np.array(self.rows, dtype=np.int64).reshape(self.dim, self.N)

    def contains(self, other: "Subspace") -> bool:
        if other.dim == 0:
            return True
        ff = self.field
        return ff.rank(np.vstack([self.array(), other.array()])) == self.dim

    def hex(self) -> str:
        return "".join(format(a, "x") for r in self.rows for a in r)


def distance(x: Subspace, y: Subspace) -> int:
    """D - dim(x cap y), by exact rank over GF(q)."""
    if (x.q, x.N, x.dim) != (y.q, y.N, y.dim):
        raise ValueError("subspaces live in different Grassmannians")
    ff = x.field
    r = ff.rank(np.vstack([x.array(), y.array()]))
    return r - x.dim


def count_subspaces(q: int, N: int, D: int) -> int:
    return int(specialize_q(gauss_binom(N, D), q).re)


def _rref_array(ff: FiniteField, N: int, D: int, budget: int) -> np.ndarray:
    count = count_subspaces(ff.q, N, D)
    if count > budget:
        raise BudgetExceeded(count, budget)
    out = np.zeros((count, D, N), dtype=np.int64)
    pos = 0
    for piv in itertools.combinations(range(N), D):
        slots = [(r, c) for r, p in enumerate(piv) for c in range(p + 1, N) if c not in piv]
        base = np.zeros((D, N), dtype=np.int64)
        for r, p in enumerate(piv):
            base[r, p] = 1
        n = ff.q ** len(slots)
        block = np.broadcast_to(base, (n, D, N)).copy()
        if slots:
            vals = np.array(list(itertools.product(range(ff.q), repeat=len(slots))), dtype=np.int64)
            for k, (r, c) in enumerate(slots):
                block[:, r, c] = vals[:, k]
        out[pos:pos + n] = block
        pos += n
    assert pos == count
    return out


def enumerate_subspaces(ff: FiniteField, N: int, D: int, budget: int = DEFAULT_BUDGET) -> list:
    """All D-subspaces of GF(q)^N, ordered by pivot set then free entries."""
    arr = _rref_array(ff, N, D, budget)
    out = []
    for m in arr:
        piv = tuple(int(np.nonzero(r)[0][0]) for r in m)
        out.append(Subspace(ff.q, N, tuple(tuple(int(a) for a in r) for r in m), piv))
    return out


def _normalized_vectors(q: int, n: int) -> np.ndarray:
    """Representatives of the projective points of GF(q)^n (first nonzero = 1)."""
    out = []
    for lead in range(n):
        tail = n - lead - 1
        for rest in itertools.product(range(q), repeat=tail):
            v = [0] * lead + [1] + list(rest)
            out.append(v)
    return np.array(out, dtype=np.int64).reshape(-1, n)


def _qint(q: int, d: int) -> int:
    return (q**d - 1) // (q - 1)


class GrassmannGraph:
    """J_q(N, D) with vertex list, point incidence and adjacency queries."""

    def __init__(self, q: int, N: int, D: int, budget: int = DEFAULT_BUDGET):
        if N < D or D < 1:
            raise ValueError("need 1 <= D <= N")
        self.ff = GF(q)
        self.q, self.N, self.D = q, N, D
        self.rows = _rref_array(self.ff, N, D, budget)
        self.num_vertices = len(self.rows)
        self.points = _normalized_vectors(q, N)
        weights = q ** np.arange(N - 1, -1, -1, dtype=np.int64)
        lookup = np.full(q**N, -1, dtype=np.int64)
        lookup[self.points @ weights] = np.arange(len(self.points))
        self._weights = weights
        self._lookup = lookup
        self._coeffs = _normalized_vectors(q, D)
        self.point_ids = self._points_of(self.rows)
        self.incidence = np.zeros((self.num_vertices, len(self.points)), dtype=np.float32)
        np.put_along_axis(self.incidence, self.point_ids, 1.0, axis=1)
        # shared point count -> intersection dimension
        self._dim_of = np.full(_qint(q, D) + 1, -1, dtype=np.int64)
        for d in range(D + 1):
            self._dim_of[_qint(q, d)] = d
        self._index = None

    def _points_of(self, rows: np.ndarray) -> np.ndarray:
        """Point ids of every subspace given as RREF arrays (V, k, N)."""
        ff = self.ff
        k = rows.shape[1]
        coeffs = _normalized_vectors(self.q, k)
        acc = np.zeros((rows.shape[0], len(coeffs), self.N), dtype=np.int64)
        for d in range(k):
            term = ff.mul[coeffs[:, d][None, :, None], rows[:, d, None, :]]
            acc = ff.add[acc, term]
        # RREF rows + normalized coefficients give normalized vectors
        return self._lookup[acc @ self._weights]

    def subspace(self, idx: int) -> Subspace:
        m = self.rows[idx]
        piv = tuple(int(np.nonzero(r)[0][0]) for r in m)
        return Subspace(self.q, self.N, tuple(tuple(int(a) for a in r) for r in m), piv)

    def index_of(self, s: Subspace) -> int:
        if self._index is None:
            keys = self.rows.reshape(self.num_vertices, -1)
            self._index = {k.tobytes(): i for i, k in enumerate(keys)}
        return self._index[np.array(s.rows, dtype=np.int64).reshape(-1).tobytes()]

    def incidence_of(self, subs) -> np.ndarray:
        subs = list(subs)
        out = np.zeros((len(subs), len(self.points)), dtype=np.float32)
        for r, s in enumerate(subs):
            arr = s.array()[None]
            out[r, self._points_of(arr)[0]] = 1.0
        return out

    def intersection_dims(self, inc_other: np.ndarray, start: int = 0, stop: int | None = None) -> np.ndarray:
        """dim(y cap z) for vertices y in [start, stop) against rows of inc_other."""
        shared = self.incidence[start:stop] @ inc_other.T
        return self._dim_of[np.rint(shared).astype(np.int64)]

    def distances_to(self, subs) -> np.ndarray:
        """Matrix of graph distances, vertices x given subspaces."""
        return self.D - self.intersection_dims(self.incidence_of(subs))

    def adjacency_block(self, start: int, stop: int) -> np.ndarray:
        shared = self.incidence[start:stop] @ self.incidence.T
        return np.rint(shared) == _qint(self.q, self.D - 1)

    def neighbor_counts(self, labels: np.ndarray, nlabels: int, block: int = 1024) -> np.ndarray:
        """For every vertex, the number of neighbours carrying each label."""
        onehot = np.zeros((self.num_vertices, nlabels), dtype=np.float32)
        onehot[np.arange(self.num_vertices), labels] = 1.0
        out = np.zeros((self.num_vertices, nlabels), dtype=np.int64)
        for s in range(0, self.num_vertices, block):
            adj = self.adjacency_block(s, min(s + block, self.num_vertices)).astype(np.float32)
            out[s:s + block] = np.rint(adj @ onehot).astype(np.int64)
        return out

    def neighbors(self, y: Subspace) -> list:
        """Neighbours of y built directly: a hyperplane of y plus an outside point."""
        ff = self.ff
        ya = y.array()
        out = set()
        result = []
        inside = set(int(p) for p in self._points_of(ya[None])[0])
        for f in _normalized_vectors(self.q, self.D):
            # hyperplane {c . ya : f . c = 0}
            basis = ff.null_space(f[None, :])
            hyper = np.array([_lincomb(ff, c, ya) for c in basis])
            for pid, p in enumerate(self.points):
                if pid in inside:
                    continue
                z = Subspace.span(ff, self.N, np.vstack([hyper, p[None, :]]))
                if z.rows not in out:
                    out.add(z.rows)
                    result.append(z)
        return result

    def bfs_distances(self, source: int) -> np.ndarray:
        """Breadth-first graph distances from one vertex (small graphs only)."""
        adj = self.adjacency_block(0, self.num_vertices)
        dist = np.full(self.num_vertices, -1, dtype=np.int64)
        dist[source] = 0
        queue = deque([source])
        while queue:
            v = queue.popleft()
            for w in np.nonzero(adj[v])[0]:
                if dist[w] < 0:
                    dist[w] = dist[v] + 1
                    queue.append(w)
        return dist

    def bfs_distance_matrix(self) -> np.ndarray:
        """All-pairs graph distances by frontier expansion on the adjacency."""
        if self.num_vertices > 5000:
            raise ValueError("all-pairs BFS oracle is only meant for small graphs")
        adj = self.adjacency_block(0, self.num_vertices).astype(np.float32)
        dist = np.full((self.num_vertices,) * 2, -1, dtype=np.int64)
        np.fill_diagonal(dist, 0)
        reach = np.eye(self.num_vertices, dtype=np.float32)
        step = 0
        while (dist < 0).any():
            step += 1
            reach = ((reach @ adj) + reach > 0).astype(np.float32)
            new = (reach > 0) & (dist < 0)
            if not new.any():
                break
            dist[new] = step
        return dist

    def all_pairs_distances(self) -> np.ndarray:
        return self.D - self.intersection_dims(self.incidence)


def _lincomb(ff: FiniteField, coeffs, rows) -> np.ndarray:
    acc = np.zeros(rows.shape[1], dtype=np.int64)
    for c, r in zip(coeffs, rows):
        acc = ff.add[acc, ff.mul[int(c), r]]
    return acc


def build_delsarte_clique(x: Subspace, hyperplane: Subspace) -> list:
    """All D-subspaces containing a fixed (D-1)-subspace of x."""
    if hyperplane.dim != x.dim - 1:
        raise ValueError(f"hyperplane has dimension {hyperplane.dim}, need {x.dim - 1}")
    if not x.contains(hyperplane):
        raise ValueError("hyperplane is not contained in x")
    ff = x.field
    H = hyperplane.array()
    seen = {x.rows: x}
    for v in _normalized_vectors(x.q, x.N):
        if ff.rank(np.vstack([H, v[None, :]])) < x.dim:
            continue
        z = Subspace.span(ff, x.N, np.vstack([H, v[None, :]]))
        seen.setdefault(z.rows, z)
    members = sorted(seen.values(), key=lambda s: s.rows)
    members.remove(x)
    return [x] + members


def random_base_pair(graph: GrassmannGraph, rng: np.random.Generator):
    """A random vertex x and a random hyperplane of x."""
    x = graph.subspace(int(rng.integers(graph.num_vertices)))
    ff = graph.ff
    while True:
        f = rng.integers(0, graph.q, size=graph.D)
        if f.any():
            break
    basis = ff.null_space(f[None, :])
    H = Subspace.span(ff, graph.N, np.array([_lincomb(ff, c, x.array()) for c in basis]))
    return x, H


def default_base_pair(graph: GrassmannGraph):
    """x = span(e_1..e_D) and its hyperplane span(e_1..e_{D-1})."""
    x = graph.subspace(0)
    H = Subspace.span(graph.ff, graph.N, x.array()[:-1])
    return x, H


@dataclass
class CellPartition:
    """Assignment of every vertex to a cell C_i^-, C_i^+."""

    graph: GrassmannGraph
    base: Subspace
    hyperplane: Subspace
    clique: list
    labels: np.ndarray          # cell index 2i or 2i+1
    dist_x: np.ndarray
    dist_clique: np.ndarray
    clique_at_distance: np.ndarray  # number of clique members at distance dist_clique
    cell_sizes: list = field(default_factory=list)

    @property
    def D(self):
        return self.graph.D

    def assignment(self, idx: int):
        j = int(self.labels[idx])
        return (j // 2, "+" if j % 2 else "-")


def classify(graph: GrassmannGraph, x: Subspace, clique: list, hyperplane: Subspace | None = None) -> CellPartition:
    """Split the vertices by distance to the clique and to x."""
    if x not in clique:
        raise ValueError("base vertex must lie in the clique")
    D = graph.D
    dist_c = graph.distances_to(clique)                  # (V, |C|)
    dist_clique = dist_c.min(axis=1)
    at_min = (dist_c == dist_clique[:, None]).sum(axis=1)
    dist_x = dist_c[:, clique.index(x)]
    sign = dist_x - dist_clique
    if ((sign != 0) & (sign != 1)).any():
        bad = int(np.nonzero((sign != 0) & (sign != 1))[0][0])
        raise NotEquitable(f"vertex {bad} is at distance {dist_x[bad]} from x and {dist_clique[bad]} from C")
    if dist_clique.max() > D - 1:
        raise NotEquitable("covering radius exceeds D - 1")
    labels = 2 * dist_clique + sign
    sizes = np.bincount(labels, minlength=2 * D).tolist()
    if hyperplane is None:
        hyperplane = Subspace.span(graph.ff, graph.N, _common_hyperplane(graph.ff, clique))
    return CellPartition(graph, x, hyperplane, clique, labels, dist_x, dist_clique, at_min, sizes)


def _common_hyperplane(ff, clique):
    # intersection of two distinct clique members
    a, b = clique[0].array(), clique[1].array()
    # y in a cap b  <=>  y = c.a with c.a in rowspace(b)
    nb = ff.null_space(b)
    if not nb:
        return a
    M = np.array([[int(ff.add.dtype.type(0))] * len(nb) for _ in range(a.shape[0])])
    for i, r in enumerate(a):
        for j, v in enumerate(nb):
            s = 0
            for t in range(len(r)):
                s = int(ff.add[s, ff.mul[r[t], v[t]]])
            M[i, j] = s
    kernel = ff.null_space(M.T)
    return np.array([_lincomb(ff, c, a) for c in kernel])


@dataclass
class EmpiricalNumbers:
    """Counted intersection numbers and the full per-cell tallies."""

    a: list
    b: list
    c: list
    a_tilde: list
    b_tilde: list
    c_tilde: list
    n: list
    quotient: np.ndarray        # quotient[k, j]: neighbours in cell j of a vertex of cell k
    discrepancies: list
    sampled: int


def _tally_rows(partition: CellPartition, sample_size):
    graph = partition.graph
    nl = 2 * graph.D
    if sample_size is None or sample_size >= graph.num_vertices:
        counts = graph.neighbor_counts(partition.labels, nl)
        return np.arange(graph.num_vertices), counts
    rng = np.random.default_rng(0 if not hasattr(sample_size, "seed") else sample_size.seed)
    # at least one vertex per cell, then random extras
    picks = []
    for j in range(nl):
        members = np.nonzero(partition.labels == j)[0]
        picks.append(int(members[rng.integers(len(members))]))
    extra = max(0, int(sample_size) - nl)
    picks += [int(v) for v in rng.integers(0, graph.num_vertices, size=extra)]
    picks = np.array(sorted(set(picks)))
    counts = np.zeros((len(picks), nl), dtype=np.int64)
    for r, v in enumerate(picks):
        for z in graph.neighbors(graph.subspace(int(v))):
            counts[r, partition.labels[graph.index_of(z)]] += 1
    return picks, counts


def empirical_intersection_numbers(partition: CellPartition, sample_size=None) -> EmpiricalNumbers:
    """Tally neighbour counts per cell.

    ``sample_size=None`` checks every vertex.  Otherwise neighbours of a
    sample of vertices are built directly, without any adjacency matrix.
    """
    D = partition.D
    picks, counts = _tally_rows(partition, sample_size)
    labels = partition.labels[picks]
    quotient = np.zeros((2 * D, 2 * D), dtype=np.int64)
    discrepancies = []
    for j in range(2 * D):
        rows = counts[labels == j]
        if len(rows) == 0:
            continue
        quotient[j] = rows[0]
        bad = np.nonzero((rows != rows[0]).any(axis=1))[0]
        if len(bad):
            v = int(picks[labels == j][bad[0]])
            discrepancies.append(f"{cell_label(j)}: vertex {v} has tally {rows[bad[0]].tolist()}, expected {rows[0].tolist()}")

    def into(row, cells):
        return int(sum(row[c] for c in cells if 0 <= c < 2 * D))

    def shell(i):  # Gamma_i(x) = C_{i-1}^+ u C_i^-
        return [2 * (i - 1) + 1, 2 * i]

    a, b, c = [], [], []
    for i in range(D + 1):
        vals = set()
        for cell in shell(i):
            if 0 <= cell < 2 * D:
                r = quotient[cell]
                vals.add((into(r, shell(i)), into(r, shell(i + 1)), into(r, shell(i - 1))))
        if len(vals) != 1:
            discrepancies.append(f"Gamma_{i}(x): cells disagree {sorted(vals)}")
        ai, bi, ci = sorted(vals)[0]
        a.append(ai), b.append(bi), c.append(ci)
    at, bt, ct = [], [], []
    for i in range(D):
        vals = set()
        for cell in (2 * i, 2 * i + 1):
            r = quotient[cell]
            vals.add((into(r, [2 * i, 2 * i + 1]), into(r, [2 * i + 2, 2 * i + 3]), into(r, [2 * i - 2, 2 * i - 1])))
        if len(vals) != 1:
            discrepancies.append(f"C_{i}: cells disagree {sorted(vals)}")
        ai, bi, ci = sorted(vals)[0]
        at.append(ai), bt.append(bi), ct.append(ci)
    n = []
    for i in range(D):
        vals = set(partition.clique_at_distance[partition.dist_clique == i].tolist())
        if len(vals) != 1:
            discrepancies.append(f"n_{i} not constant: {sorted(vals)}")
        n.append(min(vals))
    return EmpiricalNumbers(a, b, c, at, bt, ct, n, quotient, discrepancies, len(picks))


def _cosine_multiplicity(num_vertices, a, b, c, theta):
    """Exact cosine sequence and multiplicity of eigenvalue theta."""
    D = len(a) - 1
    u = [Fraction(1), Fraction(theta, b[0])]
    for i in range(1, D):
        u.append(((theta - a[i]) * u[i] - c[i] * u[i - 1]) / b[i])
    # last row must close: c_D u_{D-1} + a_D u_D = theta u_D
    closes = c[D] * u[D - 1] + a[D] * u[D] == theta * u[D]
    k = [Fraction(1)]
    for i in range(1, D + 1):
        k.append(k[-1] * b[i - 1] / c[i])
    m = Fraction(num_vertices) / sum(ki * ui * ui for ki, ui in zip(k, u))
    return u, m, closes


def quotient_matrices(partition: CellPartition, numbers: EmpiricalNumbers | None = None, theta1=None):
    """Counted A_W, A*_W and tilde A*_W as Fraction matrices.

    Column j of A_W holds the coordinates of A applied to the j-th cell
    vector, so entry [k, j] counts neighbours in cell j of a vertex of cell k.
    A*_W comes from the cosine sequence of the counted intersection numbers
    at the eigenvalue ``theta1`` (found by search if not given).
    """
    numbers = numbers or empirical_intersection_numbers(partition)
    if numbers.discrepancies:
        raise NotEquitable("; ".join(numbers.discrepancies))
    graph = partition.graph
    D = graph.D
    A = [[Fraction(int(v)) for v in r] for r in numbers.quotient]
    if theta1 is None:
        theta1 = _second_eigenvalue(graph.num_vertices, numbers)
    u, m, closes = _cosine_multiplicity(graph.num_vertices, numbers.a, numbers.b, numbers.c, theta1)
    if not closes:
        raise ValueError(f"{theta1} is not an eigenvalue of the counted intersection matrix")
    ts = [m * ui for ui in u]
    csize = len(partition.clique)
    tts = [(numbers.n[i] * ts[i] + (csize - numbers.n[i]) * ts[i + 1]) / csize for i in range(D)]
    Astar = [[Fraction(0)] * (2 * D) for _ in range(2 * D)]
    Atil = [[Fraction(0)] * (2 * D) for _ in range(2 * D)]
    for i in range(D):
        Astar[2 * i][2 * i] = ts[i]
        Astar[2 * i + 1][2 * i + 1] = ts[i + 1]
        Atil[2 * i][2 * i] = tts[i]
        Atil[2 * i + 1][2 * i + 1] = tts[i]
    return A, Astar, Atil


def _second_eigenvalue(num_vertices, numbers):
    # the largest integer eigenvalue of the intersection matrix below b_0
    a, b, c = numbers.a, numbers.b, numbers.c
    for theta in range(b[0] - 1, -b[0] - 1, -1):
        _, _, closes = _cosine_multiplicity(num_vertices, a, b, c, theta)
        if closes:
            return theta
    raise ValueError("no integer eigenvalue found")


# -- cache -----------------------------------------------------------------


def default_cache_dir() -> Path:
    env = os.environ.get("GRASSMANN_DAHA_CACHE")
    if env:
        return Path(env)
    return Path(os.environ.get("XDG_CACHE_HOME", Path.home() / ".cache")) / "grassmann_daha"


def cache_key(q, N, D, base: Subspace, hyperplane: Subspace) -> str:
    text = f"v{CACHE_VERSION}|{q}|{N}|{D}|{base.hex()}|{hyperplane.hex()}"
    return hashlib.sha256(text.encode()).hexdigest()[:32]


def save_partition(partition: CellPartition, cache_dir: Path) -> Path:
    g = partition.graph
    key = cache_key(g.q, g.N, g.D, partition.base, partition.hyperplane)
    cache_dir = Path(cache_dir)
    cache_dir.mkdir(parents=True, exist_ok=True)
    path = cache_dir / f"{key}.txt"
    lines = [f"grassmann-daha-cache {CACHE_VERSION} {key} {g.num_vertices}"]
    flat = g.rows.reshape(g.num_vertices, -1)
    for r, lab in zip(flat, partition.labels):
        lines.append("".join(format(int(a), "x") for a in r) + f" {int(lab)}")
    path.write_text("\n".join(lines) + "\n")
    return path


def load_partition_labels(graph: GrassmannGraph, base: Subspace, hyperplane: Subspace, cache_dir: Path):
    """Cached labels if a matching, intact cache file exists; otherwise None."""
    key = cache_key(graph.q, graph.N, graph.D, base, hyperplane)
    path = Path(cache_dir) / f"{key}.txt"
    if not path.exists():
        return None
    lines = path.read_text().splitlines()
    header = lines[0].split() if lines else []
    if header != ["grassmann-daha-cache", str(CACHE_VERSION), key, str(graph.num_vertices)]:
        return None
    if len(lines) != graph.num_vertices + 1:
        return None
    flat = graph.rows.reshape(graph.num_vertices, -1)
    labels = np.zeros(graph.num_vertices, dtype=np.int64)
    for i, (line, r) in enumerate(zip(lines[1:], flat)):
        parts = line.split()
        if len(parts) != 2 or parts[0] != "".join(format(int(a), "x") for a in r):
            return None
        if not parts[1].isdigit() or int(parts[1]) >= 2 * graph.D:
            return None
        labels[i] = int(parts[1])
    return labels


def clear_cache(cache_dir: Path) -> int:
    cache_dir = Path(cache_dir)
    n = 0
    if cache_dir.exists():
        for p in cache_dir.glob("*.txt"):
            if p.read_text().startswith("grassmann-daha-cache"):
                p.unlink()
                n += 1
    return n
