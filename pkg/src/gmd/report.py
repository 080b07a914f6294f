"""Plain-text, JSON and CSV rendering of command results."""

from __future__ import annotations

import csv
import io
import json
import time
from dataclasses import dataclass, field


@dataclass
class Report:
    command: str
    banner: list = field(default_factory=list)
    sections: list = field(default_factory=list)     # (heading, [lines])
    data: dict = field(default_factory=dict)
    started: float = field(default_factory=time.perf_counter)
    warnings: list = field(default_factory=list)

    def section(self, heading: str, lines):
        self.sections.append((heading, list(lines)))

    def warn(self, msg: str):
        self.warnings.append(msg)

    @property
    def elapsed(self) -> float:
        return time.perf_counter() - self.started

    def text(self) -> str:
        out = [f"$ {self.command}"]
        out += self.banner
        for heading, lines in self.sections:
            out.append("")
            out.append(f"[{heading}]")
            out += ["  " + ln if ln else "" for ln in lines]
        for w in self.warnings:
            out.append(f"warning: {w}")
        out.append("")
        out.append(f"time: {self.elapsed:.2f}s")
        return "\n".join(out) + "\n"

    def json(self) -> str:
        payload = {"command": self.command, **self.data}
        if self.warnings:
            payload["warnings"] = self.warnings
        payload["seconds"] = round(self.elapsed, 3)
        return json.dumps(payload, indent=2, sort_keys=False) + "\n"


def ring_banner(ring) -> list:
    return [f"ring: {ring.field!r}[{', '.join(ring.variables)}]",
            f"order: {ring.describe_order()}"]


def flag_lines(flags: dict) -> list:
    return [f"{k}: {v}" for k, v in flags.items()]


def hilbert_lines(hd, upto: int = 0) -> list:
    reg = hd.cm_regularity if hd.cm_regularity is not None else "n/a (CM not established)"
    lines = [f"dim: {hd.dim}",
             f"degree: {hd.degree}",
             f"h-vector: {tuple(hd.h_vector)}",
             f"a-invariant: {hd.a_invariant}",
             f"regularity index: {hd.reg_index}",
             f"cm regularity: {reg}"]
    if upto:
        lines.append("H(0..%d): %s" % (upto, tuple(hd.hilbert_function(d) for d in range(upto + 1))))
    return lines


def matrix_csv(m) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["d"] + [f"r={r}" for r in range(1, m.r_max + 1)])
    for d in range(1, m.d_max + 1):
        w.writerow([d] + [e.display() for e in m.row(d)])
    return buf.getvalue()


def matrix_lines(m) -> list:
    return [f"kind: {m.kind}", f"order: {m.order}", ""] + m.table().splitlines()
