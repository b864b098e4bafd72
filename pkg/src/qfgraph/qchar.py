"""Column-tableau q-characters of fundamental modules in type A.

An l-weight is a Laurent monomial in the fundamental weights omega_{i, q^c},
stored as an exact multiplicity map.  The q-character of the i-th fundamental
module is the sum over strictly increasing columns of height i with entries
in {1, ..., n+1}; every monomial appears with multiplicity one.  From these
we compute the dominant l-weights of a product of two fundamentals and the
resulting socle / head data.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .dynkin import DynkinA
from .drinfeld import DrinfeldPoly, KRFactor
from .redsets import r_set, string_parameter


@dataclass(frozen=True)
class LWeight:
    """Laurent monomial (color, exponent) -> multiplicity, zeros dropped."""

    entries: tuple[tuple[tuple[int, int], int], ...]

    @classmethod
    def from_dict(cls, data: dict) -> "LWeight":
        return cls(tuple(sorted((k, v) for k, v in data.items() if v != 0)))

    @classmethod
    def identity(cls) -> "LWeight":
        return cls(())

    @classmethod
    def fundamental(cls, color: int, exponent: int, power: int = 1) -> "LWeight":
        if power == 0:
            return cls.identity()
        return cls((((color, exponent), power),))

    def as_dict(self) -> dict:
        return dict(self.entries)

    def __mul__(self, other: "LWeight") -> "LWeight":
        data = self.as_dict()
        for key, mult in other.entries:
            data[key] = data.get(key, 0) + mult
        return LWeight.from_dict(data)

    def inverse(self) -> "LWeight":
        return LWeight(tuple((k, -v) for k, v in self.entries))

    def shift(self, delta: int) -> "LWeight":
        """Translate every exponent; rebasing the formal spectral parameter."""
        return LWeight(tuple(sorted((((c, e + delta), v) for (c, e), v in self.entries))))

    def is_dominant(self) -> bool:
        return all(v > 0 for _, v in self.entries)

    def is_identity(self) -> bool:
        return not self.entries

    def to_json(self) -> list:
        return [{"color": c, "exponent": e, "power": v} for (c, e), v in self.entries]


@dataclass(frozen=True)
class ColumnTableau:
    """Strictly increasing column with entries in {1, ..., n+1}."""

    entries: tuple[int, ...]
    support: int

    def __post_init__(self) -> None:
        if not self.entries:
            raise ValueError("a column tableau needs at least one box")
        if any(b >= a for a, b in zip(self.entries[1:], self.entries)):
            raise ValueError(f"column entries must strictly increase: {self.entries}")
        if self.entries[0] < 1:
            raise ValueError(f"column entries must be at least 1: {self.entries}")

    @property
    def height(self) -> int:
        return len(self.entries)


def box_lweight(diagram: DynkinA, entry: int, support: int) -> LWeight:
    """l-weight of one box: omega_{i, q^{s+i-1}} * omega_{i-1, q^{s+i}}^{-1}.

    The extreme entries 1 and n+1 contribute a single factor because
    omega_0 and omega_{n+1} are trivial.
    """
    n = diagram.n
    if not 1 <= entry <= n + 1:
        raise ValueError(f"box entry {entry} out of range 1..{n + 1}")
    out = LWeight.identity()
    if entry <= n:
        out = out * LWeight.fundamental(entry, support + entry - 1)
    if entry - 1 >= 1:
        out = out * LWeight.fundamental(entry - 1, support + entry, -1)
    return out


def tableau_lweight(diagram: DynkinA, tableau: ColumnTableau) -> LWeight:
    """Product of the box l-weights, box j sitting at support s + 2(k - j)."""
    if tableau.entries[-1] > diagram.n + 1:
        raise ValueError(f"entries {tableau.entries} exceed {diagram.n + 1}")
    k = tableau.height
    out = LWeight.identity()
    for j, entry in enumerate(tableau.entries, start=1):
        out = out * box_lweight(diagram, entry, tableau.support + 2 * (k - j))
    return out


def fundamental_qchar(diagram: DynkinA, i: int) -> tuple[LWeight, ...]:
    """All l-weights of the i-th fundamental module, based at exponent 0.

    One monomial per strictly increasing column of height i supported at
    1 - i; the column (1, ..., i) gives the highest l-weight omega_{i, q^0}.
    """
    diagram.check_node(i)
    n = diagram.n
    out = []
    for combo in itertools.combinations(range(1, n + 2), i):
        out.append(tableau_lweight(diagram, ColumnTableau(combo, 1 - i)))
    return tuple(out)


def _fundamental_pre(diagram: DynkinA, i: int, j: int, m: int) -> int:
    """Validate m = 2 + d(i,j) - 2p with p <= 0 admissible; return p."""
    p = string_parameter(diagram, i, 1, j, 1, m)
    if p is None:
        raise ValueError(
            f"gap {m} is not an admissible arrow gap for fundamentals ({i}, {j})")
    return p


def dominant_product_lweights(diagram: DynkinA, i: int, j: int,
                              m: int) -> frozenset[LWeight]:
    """Dominant l-weights of the product of two linked fundamental modules.

    Computed by brute force: every pairwise product of the two q-characters
    (the j-side rebased at exponent m), filtered for dominance.  The closed
    two-element form lives in socle_head; tests hold the two routes equal.
    """
    _fundamental_pre(diagram, i, j, m)
    left = fundamental_qchar(diagram, i)
    right = [w.shift(m) for w in fundamental_qchar(diagram, j)]
    return frozenset(a * b for a in left for b in right if (a * b).is_dominant())


@dataclass(frozen=True)
class SocleHead:
    """Closed-form socle pair and head of a reducible fundamental product."""

    socle: tuple[KRFactor, ...]
    head: tuple[KRFactor, KRFactor]
    dropped_trivial: int
    p: int

    def socle_lweight(self) -> LWeight:
        out = LWeight.identity()
        for f in self.socle:
            out = out * LWeight.fundamental(f.color, f.exponent)
        return out

    def head_lweight(self) -> LWeight:
        out = LWeight.identity()
        for f in self.head:
            out = out * LWeight.fundamental(f.color, f.exponent)
        return out

    def head_poly(self) -> DrinfeldPoly:
        return DrinfeldPoly.from_roots((f.color, f.exponent) for f in self.head)

    def to_json(self) -> dict:
        return {
            "socle": [f.to_json() for f in self.socle],
            "head": [f.to_json() for f in self.head],
            "dropped_trivial": self.dropped_trivial,
            "string_parameter": self.p,
        }


def socle_head(diagram: DynkinA, i: int, j: int, m: int) -> SocleHead:
    """Socle pair and head of the product of fundamentals i at 0 and j at m.

    The head is omega_{i, 0} omega_{j, m}; the socle is the pair of
    fundamental factors with colors min+p-1 and max+1-p at the stated
    exponents, trivial colors (0 or n+1) silently dropped and counted.
    The socle pair is checked to be a simple tensor product through the
    reducibility sets; a failure would be an internal error.
    """
    p = _fundamental_pre(diagram, i, j, m)
    n = diagram.n
    i_minus, i_plus = min(i, j), max(i, j)
    lo_color = i_minus + p - 1
    hi_color = i_plus + 1 - p
    lo_factor = KRFactor(lo_color, 1 - p + i - i_minus, 1) if lo_color >= 1 else None
    hi_factor = KRFactor(hi_color, 1 - p + j - i_minus, 1) if hi_color <= n else None
    socle = tuple(f for f in (lo_factor, hi_factor) if f is not None)
    dropped = 2 - len(socle)
    if lo_factor is not None and hi_factor is not None:
        pair_set = r_set(diagram, lo_color, 1, hi_color, 1)
        if pair_set.member(diagram.distance(i, j)):
            raise AssertionError("socle pair unexpectedly fails the simplicity test")
    head = (KRFactor(i, 0, 1), KRFactor(j, m, 1))
    return SocleHead(socle, head, dropped, p)
