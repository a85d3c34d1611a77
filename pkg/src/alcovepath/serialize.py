"""JSON readers and writers for chains, subsets and evacuation reports.

Chains store roots by their simple-root coordinates.  Subsets are written both
as 0-based positions and as ``head``/``tail`` lists, 1-based within each segment.
"""

from __future__ import annotations

import json
from typing import Any, Mapping, Sequence

from .admissible import Positions
from .chains import LambdaChain, YbWindow
from .evacuation import EvacuationReport
from .rootsys import Root, RootSystem, WeylElement


def dumps(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def chain_to_json(chain: LambdaChain) -> dict:
    rs = chain.rs
    return {
        "type": rs.name,
        "lambda": list(chain.lam),
        "roots": [list(rs.root_coords(b)) for b in chain.roots],
        "head_len": chain.head_len,
    }


def chain_from_json(data: Mapping, rs: RootSystem | None = None) -> LambdaChain:
    """Read a chain; the result is not validated here."""
    if rs is None:
        rs = RootSystem.from_descriptor(data["type"])
    elif "type" in data and data["type"] != rs.name:
        raise ValueError(f"chain is for {data['type']}, expected {rs.name}")
    lam = tuple(int(x) for x in data["lambda"])
    if len(lam) != rs.rank:
        raise ValueError(f"lambda has {len(lam)} coordinates, rank is {rs.rank}")
    roots = tuple(rs.root_from_coords(tuple(int(c) for c in r)) for r in data["roots"])
    return LambdaChain(rs, lam, roots)


def subset_to_json(chain: LambdaChain, J: Sequence[int]) -> dict:
    out: dict = {"positions": list(J)}
    q = chain.head_len
    if q is not None:
        out["head"] = [j + 1 for j in J if j < q]
        out["tail"] = [j - q + 1 for j in J if j >= q]
    return out


def parse_subset(text: str, chain: LambdaChain) -> Positions:
    """Parse ``head:1,2+tail:3`` (any of ``+``, ``;`` or whitespace separates the parts)."""
    q = chain.head_len
    if q is None:
        raise ValueError("head/tail addressing needs a chain in special form")
    out = []
    for part in text.replace("+", " ").replace(";", " ").split():
        name, _, items = part.partition(":")
        if name not in ("head", "tail"):
            raise ValueError(f"unknown subset segment {name!r}")
        base, size = (0, q) if name == "head" else (q, len(chain) - q)
        for item in filter(None, items.split(",")):
            k = int(item)
            if not 1 <= k <= size:
                raise ValueError(f"{name} index {k} outside 1..{size}")
            out.append(base + k - 1)
    if len(set(out)) != len(out):
        raise ValueError(f"repeated positions in {text!r}")
    return tuple(sorted(out))


def subset_from_json(data: Mapping, chain: LambdaChain) -> Positions:
    if "positions" in data:
        return tuple(sorted(int(j) for j in data["positions"]))
    q = chain.head_len or 0
    return tuple(sorted([int(k) - 1 for k in data.get("head", [])] + [q + int(k) - 1 for k in data.get("tail", [])]))


def window_to_json(rs: RootSystem, w: YbWindow) -> dict:
    return {"offset": w.offset, "q": w.q, "alpha": list(rs.root_coords(w.alpha)), "beta": list(rs.root_coords(w.beta))}


def window_from_json(rs: RootSystem, data: Mapping) -> YbWindow:
    return YbWindow(
        int(data["offset"]),
        int(data["q"]),
        rs.root_from_coords(tuple(data["alpha"])),
        rs.root_from_coords(tuple(data["beta"])),
    )


def weyl_to_json(rs: RootSystem, w: WeylElement) -> list[int]:
    """A Weyl element as its lexicographically least reduced word, 1-based letters."""
    return [i + 1 for i in rs.reduced_word(w)]


def weyl_from_json(rs: RootSystem, word: Sequence[int]) -> WeylElement:
    return rs.weyl_from_word(i - 1 for i in word)


def evacuation_to_json(report: EvacuationReport) -> dict:
    chain = report.chain
    rs = chain.rs
    rev = report.reversed_chain
    return {
        "chain": chain_to_json(chain),
        "J": subset_to_json(chain, report.J),
        "reversed_chain": chain_to_json(rev),
        "J_rev": subset_to_json(rev, report.J_rev),
        "moves": [window_to_json(rs, w) for w in report.moves],
        "trail": [list(J) for J in report.trail],
        "J_star": subset_to_json(chain, report.J_star),
        "checks": dict(report.checks),
    }


def root_to_json(rs: RootSystem, root: Root) -> list[int]:
    coords = rs.root_coords(root)
    return list(coords) if root.sign > 0 else [-c for c in coords]
