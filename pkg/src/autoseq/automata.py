"""r-kernels, automata with output, and the shift-relation criterion.

Kernel elements are the decimations ``n -> v(r^a n + b)`` (n >= 1,
0 <= b < r^a) of a 1-indexed sequence, reached from v by the operators
``(T_j x)(n) = x(r n + j)``.  Two elements are identified when they agree on
the longest window both can show from the available prefix, so closure is
evidence at a horizon, never a proof.

Digits are consumed least-significant first: the transition on digit j leads
from the class of x to the class of T_j x, and ``v(r^a n + b)`` is reached
by reading the base-r digits of b from the lowest one up.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Any, Sequence

import numpy as np

from .errors import KernelNotClosed, PrefixTooShort
from .contfrac import detect_ultimate_periodicity

DEFAULT_MIN_WINDOW = 32


def _encode(v: Sequence):
    """Map the values of v to small ints; returns (array, alphabet)."""
    index: dict[Any, int] = {}
    alphabet: list = []
    out = np.empty(len(v), dtype=np.int64)
    for i, x in enumerate(v):
        c = index.get(x)
        if c is None:
            c = index[x] = len(alphabet)
            alphabet.append(x)
        out[i] = c
    return out, alphabet


@dataclass
class KernelResult:
    r: int
    horizon: int
    classes: list[list]  # representative prefixes
    transitions: dict[tuple[int, int], int]
    origins: list[tuple[int, int]]  # (a, b): class rep is n -> v(r^a n + b)
    windows: list[int]
    closed: bool
    min_window: int
    smallest_window_used: int
    root: int = 0

    @property
    def class_count(self) -> int:
        return len(self.classes)

    def to_json(self) -> dict:
        return {
            "r": self.r,
            "horizon": self.horizon,
            "closed": self.closed,
            "class_count": self.class_count,
            "transitions": [
                [self.transitions.get((c, j)) for j in range(self.r)] for c in range(self.class_count)
            ],
        }


def kernel_explore(
    v,
    r: int,
    horizon: int,
    min_window: int = DEFAULT_MIN_WINDOW,
    max_classes: int = 5000,
) -> KernelResult:
    """Breadth-first closure of {v} under T_0, ..., T_{r-1}.

    ``v`` is either a finite prefix or a term oracle (a callable n -> v(n),
    such as :class:`~autoseq.recurrences.TermOracle`).  For a prefix of
    length L the element n -> v(r^a n + b) shows min(horizon, (L - b) // r^a)
    terms; an oracle always shows ``horizon`` terms.  ``closed`` is true when
    the search finished and every identification or new class rested on a
    window of at least ``min_window`` terms.
    """
    if r < 2:
        raise ValueError("r must be >= 2")
    if horizon < 1:
        raise ValueError("horizon must be >= 1")
    if callable(v):
        values, decode = _oracle_windows(v, r, horizon)
    else:
        values, decode = _prefix_windows(v, r, horizon)

    reps: list[np.ndarray] = []
    origins: list[tuple[int, int]] = []
    # classes are bucketed by their first `key` values; shorter ones are scanned
    buckets: dict[bytes, list[int]] = {}
    short: list[int] = []
    key = min(min_window, horizon)

    def find(x: np.ndarray) -> int | None:
        if len(x) >= key:
            candidates = sorted(buckets.get(x[:key].tobytes(), []) + short)
        else:
            candidates = range(len(reps))
        for c in candidates:
            y = reps[c]
            w = min(len(x), len(y))
            if np.array_equal(x[:w], y[:w]):
                return c
        return None

    def add(x: np.ndarray, origin) -> int:
        c = len(reps)
        reps.append(x)
        origins.append(origin)
        if len(x) >= key:
            buckets.setdefault(x[:key].tobytes(), []).append(c)
        else:
            short.append(c)
        return c

    root = values(0, 0)
    add(root, (0, 0))
    smallest = len(root)
    transitions: dict[tuple[int, int], int] = {}
    queue = deque([0])
    complete = True
    while queue:
        c = queue.popleft()
        a, b = origins[c]
        for j in range(r):
            child = (a + 1, b + j * r**a)
            x = values(*child)
            smallest = min(smallest, len(x))
            target = find(x)
            if target is None:
                if len(reps) >= max_classes:
                    complete = False
                    continue
                target = add(x, child)
                queue.append(target)
            transitions[(c, j)] = target
    return KernelResult(
        r=r,
        horizon=horizon,
        classes=[decode(rep) for rep in reps],
        transitions=transitions,
        origins=origins,
        windows=[len(rep) for rep in reps],
        closed=complete and smallest >= min_window,
        min_window=min_window,
        smallest_window_used=smallest,
    )


def _prefix_windows(v: Sequence, r: int, horizon: int):
    L = len(v)
    if L < r * horizon + r:
        raise PrefixTooShort(f"need at least {r * horizon + r} terms for horizon {horizon}, have {L}")
    arr, alphabet = _encode(v)

    def values(a: int, b: int) -> np.ndarray:
        step = r**a
        w = max(0, min(horizon, (L - b) // step))
        start = step + b - 1
        return arr[start : start + step * w : step]

    return values, lambda rep: [alphabet[i] for i in rep]


def _oracle_windows(v, r: int, horizon: int):
    if hasattr(v, "code") and hasattr(v, "field"):
        code, ctx = v.code, v.field

        if hasattr(v, "codes"):

            def values(a: int, b: int) -> np.ndarray:
                step = r**a
                return v.codes([step * i + b for i in range(1, horizon + 1)])

            return values, lambda rep: [ctx.element(int(c)) for c in rep]

        def values(a: int, b: int) -> np.ndarray:
            step = r**a
            return np.fromiter((code(step * i + b) for i in range(1, horizon + 1)), np.int64, horizon)

        return values, lambda rep: [ctx.element(int(c)) for c in rep]

    index: dict[Any, int] = {}
    alphabet: list = []

    def encode(x) -> int:
        c = index.get(x)
        if c is None:
            c = index[x] = len(alphabet)
            alphabet.append(x)
        return c

    def values(a: int, b: int) -> np.ndarray:
        step = r**a
        return np.fromiter((encode(v(step * i + b)) for i in range(1, horizon + 1)), np.int64, horizon)

    return values, lambda rep: [alphabet[i] for i in rep]


@dataclass
class DFAO:
    r: int
    n_states: int
    delta: list[list[int]]  # delta[state][digit]
    small_values: list[list]  # small_values[state][n-1] for 1 <= n < r
    initial: int = 0
    origins: list[tuple[int, int]] = field(default_factory=list)

    def __call__(self, n: int):
        return run_dfao(self, n)


def synthesize_dfao(k: KernelResult) -> DFAO:
    if not k.closed:
        raise KernelNotClosed(
            f"kernel not closed at horizon {k.horizon} "
            f"(smallest window {k.smallest_window_used} < {k.min_window} or class cap hit)"
        )
    delta = [[k.transitions[(c, j)] for j in range(k.r)] for c in range(k.class_count)]
    small = [list(rep[: k.r - 1]) for rep in k.classes]
    return DFAO(
        r=k.r,
        n_states=k.class_count,
        delta=delta,
        small_values=small,
        initial=k.root,
        origins=list(k.origins),
    )


def run_dfao(d: DFAO, n: int):
    """v(n): strip base-r digits from the low end until 1 <= n < r."""
    if n < 1:
        raise ValueError("sequences are indexed from 1")
    r = d.r
    state = d.initial
    delta = d.delta
    while n >= r:
        n, digit = divmod(n, r)
        state = delta[state][digit]
    return d.small_values[state][n - 1]


def export_dot(d: DFAO, name: str = "dfao") -> str:
    """GraphViz text; states in BFS order, edges by digit (LSD-first reading)."""
    lines = [
        f"digraph {name} {{",
        "  // digits are read least-significant first; a state outputs v(n) for 1 <= n < r",
        "  rankdir=LR;",
        "  node [shape=box];",
    ]
    for s in range(d.n_states):
        outs = " ".join(f"{n}:{d.small_values[s][n - 1]}" for n in range(1, d.r))
        extra = ", peripheries=2" if s == d.initial else ""
        lines.append(f'  s{s} [label="s{s}\\n{outs}"{extra}];')
    for s in range(d.n_states):
        for j in range(d.r):
            lines.append(f'  s{s} -> s{d.delta[s][j]} [label="{j}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


# ------------------------------------------------------ shift relations


@dataclass(frozen=True)
class ShiftRelation:
    """(T_i v)(n + m) = sigma(v(n)) for every checkable n >= 1."""

    i: int
    m: int
    sigma: dict

    @property
    def is_permutation(self) -> bool:
        return set(self.sigma) == set(self.sigma.values())

    def __hash__(self):
        return hash((self.i, self.m, tuple(sorted(map(repr, self.sigma.items())))))


def detect_shift_relation(v: Sequence, r: int, max_m: int, min_samples: int = 64) -> list[ShiftRelation]:
    L = len(v)
    if (L - (r - 1)) // r - max_m < min_samples:
        raise PrefixTooShort(
            f"prefix of {L} terms leaves fewer than {min_samples} samples at m={max_m}"
        )
    arr, alphabet = _encode(v)
    size = len(alphabet)
    found = []
    for i in range(r):
        for m in range(max_m + 1):
            n_max = (L - i) // r - m
            xs = arr[:n_max]
            start = r * (1 + m) + i - 1
            ys = arr[start : start + r * n_max : r]
            table = np.full(size, -1, dtype=np.int64)
            table[xs] = ys
            if not np.array_equal(table[xs], ys):
                continue  # some value maps to two different images
            dom = np.flatnonzero(table >= 0)
            img = table[dom]
            if len(np.unique(img)) != len(img):
                continue
            sigma = {alphabet[a]: alphabet[b] for a, b in zip(dom, img)}
            found.append(ShiftRelation(i=i, m=m, sigma=sigma))
    return found


def decimation(v: Sequence, r: int, j: int) -> list:
    """Prefix of T_j v: n -> v(r n + j)."""
    return list(v[r + j - 1 :: r])


def periodic_within(v: Sequence):
    """(preperiod, period) found with bounds of a third of the prefix, or None."""
    n = len(v)
    if n < 3:
        return None
    return detect_ultimate_periodicity(v, n // 3, n // 3)


@dataclass
class AutomaticityReport:
    r: int
    horizon: int
    periodic: list  # per digit j: (preperiod, period) of T_j v, or None
    certificate: dict | None
    kernel_closed: bool
    class_count: int
    notes: list[str] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "r": self.r,
            "horizon": self.horizon,
            "periodic": [list(p) if p else None for p in self.periodic],
            "certificate": self.certificate,
            "kernel_closed": self.kernel_closed,
            "class_count": self.class_count,
            "notes": self.notes,
        }


def _shift_certificate(v, r, path, depth, max_m):
    children = [decimation(v, r, j) for j in range(r)]
    periodic = [periodic_within(c) for c in children]
    rest = [j for j, p in enumerate(periodic) if p is None]
    if not rest:
        return periodic, {"path": path, "kind": "all decimations ultimately periodic"}
    if len(rest) > 1:
        return periodic, None
    i = rest[0]
    m_cap = min(max_m, (len(v) - (r - 1)) // r - 64)
    if m_cap >= 0:
        for rel in detect_shift_relation(v, r, m_cap):
            if rel.i == i:
                return periodic, {
                    "path": path,
                    "kind": "shift relation",
                    "i": rel.i,
                    "m": rel.m,
                    "sigma": {str(a): str(b) for a, b in rel.sigma.items()},
                }
    if depth > 0:
        _, cert = _shift_certificate(children[i], r, path + [i], depth - 1, max_m)
        return periodic, cert
    return periodic, None


def automaticity_report(
    v: Sequence,
    r: int,
    horizon: int | None = None,
    max_m: int = 32,
    depth: int = 2,
    oracle=None,
) -> AutomaticityReport:
    """Two independent, horizon-bounded pieces of evidence for r-automaticity.

    1. The shift criterion: if all decimations T_j v but one are ultimately
       periodic and the remaining T_i v satisfies (T_i v)(n+m) = sigma(v(n))
       for a bijection sigma, v is r-automatic.  When no relation holds on v
       itself the search descends into the one non-periodic decimation
       (``path`` records the digits taken), up to ``depth`` levels.
    2. Closure of the r-kernel at the horizon, on ``oracle`` when given
       (full windows at every depth) and on the prefix otherwise.
    """
    if horizon is None:
        horizon = (len(v) - r) // r
    periodic, cert = _shift_certificate(list(v), r, [], depth, max_m)
    notes = []
    if cert is not None:
        cert["heuristic_horizon"] = horizon
        notes.append(f"shift-criterion certificate (heuristic at horizon {horizon})")
    k = kernel_explore(oracle if oracle is not None else v, r, horizon)
    notes.append(
        f"kernel {'closed' if k.closed else 'not closed'} with {k.class_count} classes "
        f"(heuristic at horizon {horizon})"
    )
    return AutomaticityReport(
        r=r,
        horizon=horizon,
        periodic=periodic,
        certificate=cert,
        kernel_closed=k.closed,
        class_count=k.class_count,
        notes=notes,
    )
