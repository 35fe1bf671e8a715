"""Analysis reports and their JSON form.

Field order is fixed by the dataclasses below, so serialized reports diff
cleanly.  Vectors are written as ``x_1 ... x_n`` bit strings.  The PC set is
stored through its complement (``non_pc_vectors``) plus ``pc_count``, since it
has up to 2^n - 1 members.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, fields
from fractions import Fraction

from .construct import blockseq_of, format_blocks
from .core import BooleanFunction, format_anf, to_anf, to_hex, vector_str
from .criteria import BoundsReport, GacReport, analyze, bounds_report


@dataclass
class AnalysisReport:
    source_format: str
    n: int
    gac: GacReport
    bounds: BoundsReport
    anf: str
    blocks: str
    hex: str

    @property
    def violations(self) -> list[str]:
        return self.bounds.violations()

    def to_dict(self) -> dict:
        return {
            "input": {"format": self.source_format, "n": self.n},
            "function": {"hex": self.hex, "anf": self.anf, "blocks": self.blocks},
            "gac": _gac_to_dict(self.gac),
            "bounds": _bounds_to_dict(self.bounds),
            "violations": self.violations,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"

    @classmethod
    def from_dict(cls, d: dict) -> AnalysisReport:
        n = d["input"]["n"]
        return cls(
            source_format=d["input"]["format"],
            n=n,
            gac=_gac_from_dict(d["gac"], n),
            bounds=_bounds_from_dict(d["bounds"]),
            anf=d["function"]["anf"],
            blocks=d["function"]["blocks"],
            hex=d["function"]["hex"],
        )

    @classmethod
    def from_json(cls, text: str) -> AnalysisReport:
        return cls.from_dict(json.loads(text))

    def to_text(self) -> str:
        g, b = self.gac, self.bounds
        n = self.n
        rows = [
            ("n", n),
            ("input format", self.source_format),
            ("hex", self.hex),
            ("anf", self.anf),
            ("blocks", self.blocks),
            ("weight", g.weight),
            ("balanced", g.balanced),
            ("algebraic degree", g.algebraic_degree),
            ("nonlinearity", g.nonlinearity),
            ("sigma", g.sigma),
            ("Delta", g.delta_abs),
            ("SAC", g.sac),
            ("PC degree", g.pc_degree),
            ("PC vectors", len(g.pc_vectors)),
            ("non-PC vectors", " ".join(_vecs(g.non_pc_vectors, n)) or "-"),
            ("linear structures", " ".join(_vecs(g.linear_structures, n)) or "-"),
            ("even linear structures", g.linear_structures_even),
        ]
        rows += [
            ("sigma range", f"[{b.zz_sigma_lower}, {b.zz_sigma_upper}]"),
            ("balanced sigma lower", b.son_lower),
        ]
        if b.sung_lower is not None:
            rows.append((f"PC(t={b.t}) sigma lower", f"{b.sung_lower} (case {b.sung_case})"))
        rows += [
            ("N upper from sigma", b.nl_upper_from_sigma),
            ("SAC N lower", b.zz_sac_nl_lower),
        ]
        for name, ok in b.satisfied.items():
            rows.append((f"check {name}", "ok" if ok else "VIOLATED"))
        width = max(len(k) for k, _ in rows)
        return "".join(f"{k:<{width}}  {v}\n" for k, v in rows)


def _vecs(vs, n: int) -> list[str]:
    return [vector_str(v, n) for v in sorted(vs)]


def _gac_to_dict(g: GacReport) -> dict:
    return {
        "n": g.n,
        "weight": g.weight,
        "balanced": g.balanced,
        "nonlinearity": g.nonlinearity,
        "sigma": g.sigma,
        "delta_abs": g.delta_abs,
        "sac": g.sac,
        "pc_degree": g.pc_degree,
        "pc_count": len(g.pc_vectors),
        "non_pc_vectors": _vecs(g.non_pc_vectors, g.n),
        "linear_structures": _vecs(g.linear_structures, g.n),
        "linear_structures_even": g.linear_structures_even,
        "algebraic_degree": g.algebraic_degree,
    }


def _gac_from_dict(d: dict, n: int) -> GacReport:
    non_pc = frozenset(int(v, 2) for v in d["non_pc_vectors"])
    pc = frozenset(range(1, 1 << n)) - non_pc
    if len(pc) != d["pc_count"]:
        raise ValueError("pc_count disagrees with non_pc_vectors")
    return GacReport(
        n=d["n"],
        weight=d["weight"],
        balanced=d["balanced"],
        nonlinearity=d["nonlinearity"],
        sigma=d["sigma"],
        delta_abs=d["delta_abs"],
        sac=d["sac"],
        pc_degree=d["pc_degree"],
        pc_vectors=pc,
        non_pc_vectors=non_pc,
        linear_structures=frozenset(int(v, 2) for v in d["linear_structures"]),
        linear_structures_even=d["linear_structures_even"],
        algebraic_degree=d["algebraic_degree"],
    )


def _bounds_to_dict(b: BoundsReport) -> dict:
    out = {}
    for f in fields(b):
        v = getattr(b, f.name)
        if isinstance(v, Fraction):
            v = str(v)
        elif isinstance(v, tuple):
            v = list(v)
        elif isinstance(v, dict):
            v = dict(v)
        out[f.name] = v
    return out


def _bounds_from_dict(d: dict) -> BoundsReport:
    d = dict(d)
    if d.get("sung_lower") is not None:
        d["sung_lower"] = Fraction(d["sung_lower"])
    if d.get("nl_band") is not None:
        d["nl_band"] = tuple(d["nl_band"])
    return BoundsReport(**d)


def build_report(
    f: BooleanFunction,
    source_format: str = "truth-table",
    t: int | None = None,
    l_h_even: int | None = None,
) -> AnalysisReport:
    gac = analyze(f)
    return AnalysisReport(
        source_format=source_format,
        n=f.n,
        gac=gac,
        bounds=bounds_report(f.n, t=t, l_h_even=l_h_even, report=gac),
        anf=format_anf(to_anf(f)),
        blocks=format_blocks(blockseq_of(f)),
        hex=to_hex(f),
    )
