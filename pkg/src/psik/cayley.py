"""Explicit Cayley tables: construction from specs, validation, JSON I/O, brute-force orders.

Element enumeration used by :func:`build_cayley` (index 0 is always the identity):

* ``Cyclic(n)``: index i is the residue i mod n.
* abelian specs: mixed radix over the cyclic factors Z_{p^r} listed by prime,
  then by part; the last factor varies fastest.
* ``Dihedral(m)``: index i + m*e is r^i s^e.
* ``Dicyclic(m)``: index i + 2m*e is a^i x^e with a^(2m) = 1, x^2 = a^m, x a x^-1 = a^-1.
* ``SemidirectCyclic``: index u*m + x is the pair (u, x), multiplied as
  (u1, x1)(u2, x2) = (u1 + a^x1 u2, x1 + x2).
* ``DirectProduct``: mixed radix over the factor tables, last factor fastest.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Callable

import numpy as np

from .groups import (
    CayleyTable,
    Cyclic,
    Dicyclic,
    Dihedral,
    DirectProduct,
    GroupSpec,
    OrderSpectrum,
    SemidirectCyclic,
    abelian_components,
)

CAYLEY_CAP = 5000
ASSOCIATIVITY_AUTO_LIMIT = 512


class CayleyTableError(ValueError):
    """The table does not describe a group."""


class ResourceError(RuntimeError):
    """A request would exceed a configured size cap."""


def _cyclic_table(n: int) -> np.ndarray:
    idx = np.arange(n, dtype=np.int64)
    return (idx[:, None] + idx[None, :]) % n


def _product_table(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    na, nb = len(a), len(b)
    t = a[:, None, :, None] * nb + b[None, :, None, :]
    return t.reshape(na * nb, na * nb)


def _dihedral_table(m: int) -> np.ndarray:
    idx = np.arange(2 * m, dtype=np.int64)
    i, e = idx % m, idx // m
    sign = np.where(e == 1, -1, 1)
    rot = (i[:, None] + sign[:, None] * i[None, :]) % m
    ref = (e[:, None] + e[None, :]) % 2
    return rot + m * ref


def _dicyclic_table(m: int) -> np.ndarray:
    n2 = 2 * m
    idx = np.arange(2 * n2, dtype=np.int64)
    i, e = idx % n2, idx // n2
    sign = np.where(e == 1, -1, 1)
    rot = i[:, None] + sign[:, None] * i[None, :]
    both = (e[:, None] == 1) & (e[None, :] == 1)
    rot = (rot + np.where(both, m, 0)) % n2
    ref = (e[:, None] + e[None, :]) % 2
    return rot + n2 * ref


def _semidirect_table(spec: SemidirectCyclic) -> np.ndarray:
    q, m = spec.q, spec.m
    idx = np.arange(q * m, dtype=np.int64)
    u, x = idx // m, idx % m
    apow = np.array([pow(spec.a, j, q) for j in range(m)], dtype=np.int64)
    uu = (u[:, None] + apow[x][:, None] * u[None, :]) % q
    xx = (x[:, None] + x[None, :]) % m
    return uu * m + xx


def _table_and_identity(spec: GroupSpec) -> tuple[np.ndarray, int]:
    if isinstance(spec, CayleyTable):
        return np.asarray(spec.table), spec.identity
    if isinstance(spec, DirectProduct):
        table, ident = np.zeros((1, 1), dtype=np.int64), 0
        for f in spec.factors:
            ft, fi = _table_and_identity(f)
            ident = ident * len(ft) + fi
            table = _product_table(table, ft)
        return table, ident
    if isinstance(spec, Dihedral):
        return _dihedral_table(spec.m), 0
    if isinstance(spec, Dicyclic):
        return _dicyclic_table(spec.m), 0
    if isinstance(spec, SemidirectCyclic):
        return _semidirect_table(spec), 0
    if isinstance(spec, Cyclic):
        return _cyclic_table(spec.n), 0
    comps = abelian_components(spec)
    if comps is None:
        raise TypeError(f"cannot build a table for {spec!r}")
    table = np.zeros((1, 1), dtype=np.int64)
    for p, parts in sorted(comps.items()):
        for r in parts:
            table = _product_table(table, _cyclic_table(p**r))
    return table, 0


def build_cayley(spec: GroupSpec, cap: int = CAYLEY_CAP) -> CayleyTable:
    """Materialize ``spec`` as an explicit table (see module docstring for the layout)."""
    if spec.order > cap:
        raise ResourceError(f"group order {spec.order} exceeds the Cayley cap {cap}")
    table, ident = _table_and_identity(spec)
    return CayleyTable(spec.order, table, ident)


def validate_cayley(g: CayleyTable, check: str = "auto") -> None:
    """Check the Latin-square, identity and (per ``check``) associativity properties.

    ``check`` is ``"auto"`` (associativity only up to order 512), ``"always"``
    or ``"never"``.
    """
    if check not in ("auto", "always", "never"):
        raise ValueError(f"unknown associativity mode {check!r}")
    n, t = g.n, np.asarray(g.table)
    if n < 1 or t.shape != (n, n):
        raise CayleyTableError(f"table must be {n}x{n}, got shape {t.shape}")
    if not 0 <= g.identity < n:
        raise CayleyTableError(f"identity index {g.identity} outside [0, {n})")
    bad = np.argwhere((t < 0) | (t >= n))
    if bad.size:
        i, j = (int(v) for v in bad[0])
        raise CayleyTableError(f"cell ({i}, {j}) holds {t[i, j]}, outside [0, {n})")
    for axis, name in ((1, "row"), (0, "column")):
        srt = np.sort(t, axis=axis)
        dup = np.argwhere(np.diff(srt, axis=axis) == 0)
        if dup.size:
            a, b = (int(v) for v in dup[0])
            line = a if axis == 1 else b
            value = int(srt[a, b])
            cells = np.flatnonzero((t[line] if axis == 1 else t[:, line]) == value)[:2]
            where = [(line, int(c)) if axis == 1 else (int(c), line) for c in cells]
            raise CayleyTableError(f"{name} {line} repeats value {value} at cells {where}")
    e = g.identity
    ar = np.arange(n)
    for name, line in (("row", t[e]), ("column", t[:, e])):
        off = np.flatnonzero(line != ar)
        if off.size:
            j = int(off[0])
            cell = (e, j) if name == "row" else (j, e)
            raise CayleyTableError(f"identity {name} differs from the identity map at cell {cell}")
    if check == "always" or (check == "auto" and n <= ASSOCIATIVITY_AUTO_LIMIT):
        for a in range(n):
            left = t[t[a]]  # left[b, c] = (a*b)*c
            right = t[a][t]  # right[b, c] = a*(b*c)
            off = np.argwhere(left != right)
            if off.size:
                b, c = (int(v) for v in off[0])
                raise CayleyTableError(f"(a*b)*c != a*(b*c) at a={a}, b={b}, c={c}")


def iterate_orders(
    n: int,
    power: tuple[np.ndarray, ...],
    step: Callable[[tuple[np.ndarray, ...], np.ndarray], tuple[np.ndarray, ...]],
    is_identity: Callable[[tuple[np.ndarray, ...]], np.ndarray],
) -> np.ndarray:
    """Least j >= 1 with g^j = e for every element, by repeated multiplication.

    ``power`` holds the state of g^1 for elements 0..n-1; ``step(state, idx)``
    returns g^(j+1) from g^j for the still-unresolved elements ``idx``.
    """
    orders = np.zeros(n, dtype=np.int64)
    alive = np.arange(n)
    j = 1
    while alive.size:
        done = is_identity(power)
        if done.any():
            orders[alive[done]] = j
            keep = ~done
            alive = alive[keep]
            power = tuple(arr[keep] for arr in power)
        if not alive.size:
            break
        if j >= n:
            raise CayleyTableError(f"element {int(alive[0])} never reaches the identity")
        power = step(power, alive)
        j += 1
    return orders


def _spectrum_from_orders(orders: np.ndarray, n: int) -> OrderSpectrum:
    values, counts = np.unique(orders, return_counts=True)
    return OrderSpectrum.from_counts({int(d): int(c) for d, c in zip(values, counts)}, n)


def element_orders(g: CayleyTable) -> np.ndarray:
    t = np.asarray(g.table)
    return iterate_orders(
        g.n,
        (np.arange(g.n),),
        lambda s, idx: (t[s[0], idx],),
        lambda s: s[0] == g.identity,
    )


def spectrum_bruteforce(g: CayleyTable, check: str = "auto") -> OrderSpectrum:
    """Definitional spectrum: validate the table, then iterate powers of each element."""
    validate_cayley(g, check)
    return _spectrum_from_orders(element_orders(g), g.n)


def spectrum_semidirect_bruteforce(spec: SemidirectCyclic) -> OrderSpectrum:
    """Element orders of Z_{p^r} x| Z_m by iterating the group law on pairs (no table)."""
    q, m = spec.q, spec.m
    idx = np.arange(spec.order, dtype=np.int64)
    gu, gx = idx // m, idx % m
    apow = np.array([pow(spec.a, j, q) for j in range(m)], dtype=np.int64)

    def step(state, alive):
        u, x = state
        return (u + apow[x] * gu[alive]) % q, (x + gx[alive]) % m

    orders = iterate_orders(
        spec.order, (gu.copy(), gx.copy()), step, lambda s: (s[0] == 0) & (s[1] == 0)
    )
    return _spectrum_from_orders(orders, spec.order)


def cayley_from_json(data: dict, check: str = "auto", source: str | None = None) -> CayleyTable:
    try:
        n, identity, rows = int(data["n"]), int(data["identity"]), data["table"]
    except (KeyError, TypeError, ValueError) as exc:
        raise CayleyTableError(f"Cayley JSON needs integer 'n', 'identity' and 'table': {exc}")
    if not isinstance(rows, list) or len(rows) != n or any(
        not isinstance(row, list) or len(row) != n for row in rows
    ):
        raise CayleyTableError(f"'table' must be a list of {n} rows of length {n}")
    if any(not isinstance(v, int) or isinstance(v, bool) for row in rows for v in row):
        raise CayleyTableError("'table' entries must be integers")
    g = CayleyTable(n, np.array(rows, dtype=np.int64).reshape(n, n), identity, source)
    validate_cayley(g, check)
    return g


def load_cayley(path: str | Path, check: str = "auto") -> CayleyTable:
    path = Path(path)
    with path.open() as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise CayleyTableError(f"{path}: not valid JSON ({exc})")
    return cayley_from_json(data, check, source=str(path))


def cayley_to_json(g: CayleyTable) -> dict:
    return {"n": g.n, "identity": g.identity, "table": np.asarray(g.table).tolist()}


def save_cayley(g: CayleyTable, path: str | Path) -> None:
    Path(path).write_text(json.dumps(cayley_to_json(g)))
