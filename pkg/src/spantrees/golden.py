"""Reference generating functions shipped with the package (see golden/README.md)."""
from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources

from spantrees.cfinite import RationalGF


@dataclass(frozen=True)
class GoldenGF:
    name: str
    family: str
    params: dict
    quantity: str
    start_n: int
    num: tuple[int, ...] | None
    den: tuple[int, ...]
    den_factors: tuple[tuple[tuple[int, ...], int], ...]

    @property
    def gf(self) -> RationalGF:
        if self.num is None:
            raise ValueError(f"{self.name}: only the denominator is recorded")
        return RationalGF(self.num, self.den)


def load(name: str) -> GoldenGF:
    text = resources.files("spantrees").joinpath("golden").joinpath(f"{name}.json").read_text()
    data = json.loads(text)
    return GoldenGF(
        name=name,
        family=data["family"],
        params=data["params"],
        quantity=data["quantity"],
        start_n=data["start_n"],
        num=None if data["num"] is None else tuple(int(c) for c in data["num"]),
        den=tuple(int(c) for c in data["den"]),
        den_factors=tuple((tuple(int(c) for c in f["coeffs"]), f["power"]) for f in data["den_factors"]),
    )


def available() -> list[str]:
    root = resources.files("spantrees").joinpath("golden")
    return sorted(p.name[:-5] for p in root.iterdir() if p.name.endswith(".json"))


def find(family: str, params: dict, quantity: str) -> GoldenGF | None:
    for name in available():
        g = load(name)
        if g.family == family and g.params == params and g.quantity == quantity:
            return g
    return None
