"""Closed-form bound evaluation and per-tree invariant records.

All arithmetic is exact integer floor/ceil; nothing here touches floats.
Field and CSV column names follow the census schema: ``lb_tree`` is
floor((n-p+d+5)/6), ``ub_tree_np`` is n-p, ``ub_tree_23`` is
floor((2n-p)/3), ``wub_d`` is ceil((2n-d-1)/2), ``wub_p`` is
floor((2n+p-2)/3), ``w_lb`` is ceil(n/2) and ``w_ub_triv`` is n-1.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Optional

from .graphs import TreeWitness, structural_invariants
from .invariants import independence_number, induced_matching_number
from .trees import canonical_code

ORACLE_ORDER_CAP = 10

CSV_HEADER = (
    "tree_code,n,p,d,im,alpha,reg,lb_tree,ub_tree_np,ub_tree_23,"
    "wub_d,wub_p,lb_tight,ub_tight,wub_tight"
)


def _floor_div(a: int, b: int) -> int:
    return a // b


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


@dataclass(frozen=True)
class BoundSet:
    """Every closed-form bound evaluated at one (n, p, d) triple."""

    lb_tree: int
    ub_tree_np: int
    ub_tree_23: int
    ub_tree: int
    wub_d: int
    wub_p: int
    wub: int
    w_lb: int
    w_ub_triv: int


def evaluate_bounds(n: int, p: int, d: int) -> BoundSet:
    """Evaluate all bounds at parameter level; no tree-realizability check."""
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    if not 1 <= p <= n:
        raise ValueError(f"p must be in 1..{n}, got {p}")
    if not 1 <= d <= n - 1:
        raise ValueError(f"d must be in 1..{n - 1}, got {d}")
    lb_tree = _floor_div(n - p + d + 5, 6)
    ub_tree_np = n - p
    ub_tree_23 = _floor_div(2 * n - p, 3)
    wub_d = _ceil_div(2 * n - d - 1, 2)
    wub_p = _floor_div(2 * n + p - 2, 3)
    return BoundSet(
        lb_tree=lb_tree,
        ub_tree_np=ub_tree_np,
        ub_tree_23=ub_tree_23,
        ub_tree=min(ub_tree_np, ub_tree_23),
        wub_d=wub_d,
        wub_p=wub_p,
        wub=min(wub_d, wub_p),
        w_lb=_ceil_div(n, 2),
        w_ub_triv=n - 1,
    )


@dataclass(frozen=True)
class InvariantRecord:
    """One census row: structural data, invariants, bounds, tightness flags.

    ``bounds`` is None only for the one-vertex tree, whose parameters fall
    outside every bound's domain.  ``reg`` is None above the oracle cap.
    The witness fields make every reported number checkable in O(n^2).
    """

    tree_code: str
    n: int
    p: int
    d: int
    im: int
    alpha: int
    reg: Optional[int]
    bounds: Optional[BoundSet]
    lb_tight: bool
    ub_tight: bool
    wub_tight: bool
    im_witness: tuple[tuple[int, int], ...]
    alpha_witness: tuple[int, ...]

    def csv_row(self) -> str:
        b = self.bounds

        def s(x) -> str:
            return "" if x is None else str(x)

        def flag(x: bool) -> str:
            return "true" if x else "false"

        cells = [
            self.tree_code,
            str(self.n),
            str(self.p),
            str(self.d),
            str(self.im),
            str(self.alpha),
            s(self.reg),
            s(b.lb_tree if b else None),
            s(b.ub_tree_np if b else None),
            s(b.ub_tree_23 if b else None),
            s(b.wub_d if b else None),
            s(b.wub_p if b else None),
            flag(self.lb_tight),
            flag(self.ub_tight),
            flag(self.wub_tight),
        ]
        return ",".join(cells)

    def to_json_dict(self) -> dict:
        out = {
            "tree_code": self.tree_code,
            "n": self.n,
            "p": self.p,
            "d": self.d,
            "im": self.im,
            "alpha": self.alpha,
            "reg": self.reg,
            "lb_tight": self.lb_tight,
            "ub_tight": self.ub_tight,
            "wub_tight": self.wub_tight,
            "im_witness": [list(e) for e in self.im_witness],
            "alpha_witness": list(self.alpha_witness),
        }
        if self.bounds is not None:
            out["bounds"] = {
                "lb_tree": self.bounds.lb_tree,
                "ub_tree_np": self.bounds.ub_tree_np,
                "ub_tree_23": self.bounds.ub_tree_23,
                "ub_tree": self.bounds.ub_tree,
                "wub_d": self.bounds.wub_d,
                "wub_p": self.bounds.wub_p,
                "wub": self.bounds.wub,
                "w_lb": self.bounds.w_lb,
                "w_ub_triv": self.bounds.w_ub_triv,
            }
        else:
            out["bounds"] = None
        return out

    def to_jsonl(self) -> str:
        return json.dumps(self.to_json_dict(), separators=(",", ":"), sort_keys=True)


def bound_parameters(n: int, p: int) -> int:
    """The pendant count the bounds are evaluated at.

    The 2-vertex tree is handled throughout as the one-leaf star (p = 1):
    with p = 2 the n-p upper bound would degenerate to 0 and sit below the
    actual invariant, so the single-edge case uses the star parameters.
    """
    return 1 if n == 2 else p


def record_for_tree(t: TreeWitness, with_oracle: bool = False) -> InvariantRecord:
    """Populate a full record; reg only when asked for and within the cap."""
    g = t.graph
    inv = structural_invariants(g)
    im, im_cert = induced_matching_number(g)
    alpha, alpha_cert = independence_number(g)
    code = canonical_code(t).to_text()
    reg = None
    if with_oracle and g.order <= ORACLE_ORDER_CAP:
        from .homology import regularity

        reg = regularity(g)
    if inv.n >= 2:
        bounds = evaluate_bounds(inv.n, bound_parameters(inv.n, inv.p), inv.d)
        lb_tight = im == bounds.lb_tree
        ub_tight = im == bounds.ub_tree
        wub_tight = alpha == bounds.wub
    else:
        bounds = None
        lb_tight = ub_tight = wub_tight = False
    return InvariantRecord(
        tree_code=code,
        n=inv.n,
        p=inv.p,
        d=inv.d,
        im=im,
        alpha=alpha,
        reg=reg,
        bounds=bounds,
        lb_tight=lb_tight,
        ub_tight=ub_tight,
        wub_tight=wub_tight,
        im_witness=tuple(sorted(im_cert.edges)),
        alpha_witness=tuple(sorted(alpha_cert.vertices)),
    )


@dataclass(frozen=True)
class Violation:
    """A failed inequality for one tree; data, not an exception."""

    tree_code: str
    check: str
    detail: str

    def to_json_dict(self) -> dict:
        return {"tree_code": self.tree_code, "check": self.check, "detail": self.detail}


def verify_record(r: InvariantRecord) -> list[Violation]:
    """All inequality failures for a fully populated record (empty = sound)."""
    out: list[Violation] = []

    def bad(check: str, detail: str) -> None:
        out.append(Violation(r.tree_code, check, detail))

    b = r.bounds
    if b is not None:
        if not b.lb_tree <= r.im:
            bad(
                "tree_lower_bound",
                f"floor((n-p+d+5)/6) = {b.lb_tree} > im = {r.im}",
            )
        if not r.im <= b.ub_tree:
            bad(
                "tree_upper_bound",
                f"im = {r.im} > min(n-p, floor((2n-p)/3)) = {b.ub_tree}",
            )
        if not b.w_lb <= r.alpha:
            bad("alpha_lower_bound", f"ceil(n/2) = {b.w_lb} > alpha = {r.alpha}")
        if not r.alpha <= min(b.wub, b.w_ub_triv):
            bad(
                "whisker_upper_bound",
                f"alpha = {r.alpha} > min(wub, n-1) = {min(b.wub, b.w_ub_triv)}",
            )
    if r.reg is not None and r.reg != r.im:
        bad(
            "regularity_equals_induced_matching",
            f"reg = {r.reg} != im = {r.im}",
        )
    return out
