"""Degree-based index functions and the local contribution tables derived from them.

Every vertex of a polyomino chain has degree 2, 3 or 4, so an index
``TI_f(G) = sum f(d_u, d_v)`` over chain graphs is fully described by the six
values of ``f`` on unordered degree pairs drawn from {2, 3, 4}.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, fields
from fractions import Fraction
from typing import Callable, Dict, Tuple

from polychain.values import Value, format_value, parse_fraction, total

PAIRS: Tuple[Tuple[int, int], ...] = ((2, 2), (2, 3), (2, 4), (3, 3), (3, 4), (4, 4))
PAIR_NAMES = tuple(f"f{a}{b}" for a, b in PAIRS)


class IndexSpecError(ValueError):
    """Unknown index name or malformed parameters."""


class DegreeError(ValueError):
    """A vertex degree outside {2, 3, 4}: the graph is not a chain graph."""


@dataclass(frozen=True)
class DegreeFunction:
    f22: Value
    f23: Value
    f24: Value
    f33: Value
    f34: Value
    f44: Value
    name: str = "custom"
    params: str = ""

    def __post_init__(self):
        kinds = {isinstance(v, Fraction) for v in self.values()}
        if len(kinds) != 1:
            raise IndexSpecError("degree function mixes exact and float values")

    def values(self) -> Tuple[Value, ...]:
        return tuple(getattr(self, n) for n in PAIR_NAMES)

    @property
    def exact(self) -> bool:
        return isinstance(self.f22, Fraction)

    def f(self, x: int, y: int) -> Value:
        if x > y:
            x, y = y, x
        if x < 2 or y > 4:
            raise DegreeError(f"degree pair ({x}, {y}) outside {{2,3,4}}")
        return getattr(self, f"f{x}{y}")

    def as_dict(self) -> Dict[Tuple[int, int], Value]:
        return dict(zip(PAIRS, self.values()))

    @property
    def spec(self) -> str:
        return f"{self.name}:{self.params}" if self.params else self.name

    def __str__(self) -> str:
        body = ", ".join(f"{n}={format_value(v)}" for n, v in zip(PAIR_NAMES, self.values()))
        return f"{self.spec} ({body})"


@dataclass(frozen=True)
class GTable:
    gSS: Value
    gSC: Value
    gCS: Value
    gCC: Value
    gTT: Value
    gST: Value
    gCT: Value

    def __getitem__(self, action: str) -> Value:
        return getattr(self, "g" + action)

    def as_dict(self) -> Dict[str, Value]:
        return {f.name[1:]: getattr(self, f.name) for f in fields(self)}


@dataclass(frozen=True)
class BaseValues:
    tiSS: Value
    tiSC: Value


# ---------------------------------------------------------------------------
# catalog


def _power(base: int, alpha: Fraction) -> Value:
    if alpha.denominator == 1:
        return Fraction(base) ** int(alpha)
    return float(base) ** float(alpha)


def _randic(p):
    alpha = p["alpha"]
    return lambda x, y: _power(x * y, alpha)


def _sumconnectivity(p):
    alpha = p["alpha"]
    return lambda x, y: _power(x + y, alpha)


def _constant(p):
    c = p["value"]
    return lambda x, y: c


_CATALOG: Dict[str, Tuple[str, Dict[str, str], Callable]] = {
    "randic": ("generalized Randic index (d_u d_v)^alpha", {"alpha": "-1"}, _randic),
    "zagreb1": ("first Zagreb index d_u + d_v", {}, lambda p: lambda x, y: Fraction(x + y)),
    "zagreb2": ("second Zagreb index d_u d_v", {}, lambda p: lambda x, y: Fraction(x * y)),
    "sumconnectivity": (
        "general sum-connectivity index (d_u + d_v)^alpha",
        {"alpha": "-1/2"},
        _sumconnectivity,
    ),
    "harmonic": ("harmonic index 2/(d_u + d_v)", {}, lambda p: lambda x, y: Fraction(2, x + y)),
    "constant": ("constant f = value (edge count when value=1)", {"value": "1"}, _constant),
    "custom": ("six explicit pair values f22..f44", {}, None),
}


def index_names() -> Tuple[str, ...]:
    return tuple(_CATALOG)


def describe_index(name: str) -> str:
    if name not in _CATALOG:
        raise IndexSpecError(f"unknown index {name!r}")
    desc, defaults, _ = _CATALOG[name]
    if name == "custom":
        keys = ",".join(f"{k}=p/q" for k in PAIR_NAMES)
    else:
        keys = ",".join(f"{k}={v}" for k, v in defaults.items())
    return f"{name}: {desc}" + (f" [{keys}]" if keys else "")


def _parse_params(params: str) -> Dict[str, str]:
    out: Dict[str, str] = {}
    if not params.strip():
        return out
    for item in params.split(","):
        key, sep, val = item.partition("=")
        key, val = key.strip(), val.strip()
        if not sep or not key or not val:
            raise IndexSpecError(f"malformed parameter {item.strip()!r} (expected key=value)")
        if key in out:
            raise IndexSpecError(f"duplicate parameter {key!r}")
        out[key] = val
    return out


def builtin_index(name: str, params: str = "") -> DegreeFunction:
    """Build one of the catalog indices, e.g. ``builtin_index("randic", "alpha=-1")``."""
    if name not in _CATALOG:
        raise IndexSpecError(f"unknown index {name!r}; known: {', '.join(_CATALOG)}")
    raw = _parse_params(params)
    _, defaults, factory = _CATALOG[name]
    allowed = set(PAIR_NAMES) if name == "custom" else set(defaults)
    unknown = sorted(set(raw) - allowed)
    if unknown:
        raise IndexSpecError(f"{name} does not take parameter(s) {', '.join(unknown)}")

    try:
        if name == "custom":
            missing = [k for k in PAIR_NAMES if k not in raw]
            if missing:
                raise IndexSpecError(f"custom index needs {', '.join(missing)}")
            vals = [parse_fraction(raw[k]) for k in PAIR_NAMES]
            norm = ",".join(f"{k}={v}" for k, v in zip(PAIR_NAMES, vals))
            return DegreeFunction(*vals, name=name, params=norm)
        merged = {**defaults, **raw}
        parsed = {k: parse_fraction(v) for k, v in merged.items()}
    except ZeroDivisionError as exc:
        raise IndexSpecError(str(exc)) from None
    except ValueError as exc:
        if isinstance(exc, IndexSpecError):
            raise
        raise IndexSpecError(str(exc)) from None

    fn = factory(parsed)
    vals = [fn(x, y) for x, y in PAIRS]
    if not all(isinstance(v, Fraction) for v in vals):
        vals = [float(v) for v in vals]
    norm = ",".join(f"{k}={v}" for k, v in parsed.items())
    return DegreeFunction(*vals, name=name, params=norm)


def parse_index_spec(text: str) -> DegreeFunction:
    """Parse ``<name>[:key=value,...]``."""
    name, _, params = text.strip().partition(":")
    return builtin_index(name.strip(), params)


def negate(df: DegreeFunction) -> DegreeFunction:
    neg = [-v for v in df.values()]
    if df.name.startswith("-"):
        name = df.name[1:]
    else:
        name = "-" + df.name
    return DegreeFunction(*neg, name=name, params=df.params)


# ---------------------------------------------------------------------------
# local contributions


def g_table(df: DegreeFunction) -> GTable:
    f22, f23, f24, f33, f34, f44 = df.values()
    ss = 3 * f33
    sc = 3 * f34 + f24 + f23 - 2 * f33
    cs = f34 - f24 + f23 + 2 * f33
    cc = f44 + 2 * f24
    tt = f23 + f24 + f34 + f44 - f33
    return GTable(gSS=ss, gSC=sc, gCS=cs, gCC=cc, gTT=tt, gST=sc + cs + tt, gCT=cc + cs + tt)


def base_values(df: DegreeFunction) -> BaseValues:
    """Index values of the two three-square chains: straight (SS) and bent (SC)."""
    f22, f23, f24, f33, f34, f44 = df.values()
    return BaseValues(
        tiSS=2 * f22 + 4 * f23 + 4 * f33,
        tiSC=2 * f22 + 4 * f23 + 2 * f34 + 2 * f24,
    )


def ti_of_graph(graph, df: DegreeFunction) -> Value:
    """Sum of f(d_u, d_v) over the edges of a chain graph.

    ``graph`` needs ``edges`` (pairs of vertices) and ``degree`` (vertex -> int).
    """
    deg = graph.degree
    profile: Counter = Counter()
    for u, v in graph.edges:
        a, b = deg[u], deg[v]
        profile[(a, b) if a <= b else (b, a)] += 1
    return ti_of_profile(profile, df)


def ti_of_profile(profile: Dict[Tuple[int, int], int], df: DegreeFunction) -> Value:
    """Index value from edge counts per (sorted) degree pair."""
    terms = []
    for (a, b), count in sorted(profile.items()):
        if a < 2 or b > 4:
            raise DegreeError(f"edge with degree pair ({a}, {b}); not a chain graph")
        terms.append(count * df.f(a, b))
    return total(terms)
