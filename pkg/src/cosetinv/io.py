"""Text formats: theory and manifold specs, category tables, result records."""
from __future__ import annotations

import hashlib
import os
import re
from pathlib import Path

import numpy as np

from . import cosets, invariants
from .affine import build_affine
from .errors import ParseError
from .invariants import Affine, Diagonal, Extension, Parafermion, PsuRestricted, U1
from .modular import ModularData
from .surgery import Chain, Lens, parse_link_text
from .u1 import build_u1

TABLE_VERSION = "cosetinv-table 1"

_FAMILIES = {
    "su": (Affine, ("N", "k")),
    "u1": (U1, ("k",)),
    "parafermion": (Parafermion, ("k",)),
    "diagonal": (Diagonal, ("N", "m1", "m2")),
    "extension": (Extension, ("N", "k", "m")),
    "psu": (PsuRestricted, ("m", "n")),
}


def parse_theory(spec: str):
    """Parse e.g. ``su:N=2,k=1`` into a theory object."""
    family, sep, rest = spec.partition(":")
    if not sep:
        raise ParseError(f"expected '<family>:<params>' in {spec!r}", len(family))
    if family not in _FAMILIES:
        raise ParseError(f"unknown theory family {family!r}", 0)
    cls, names = _FAMILIES[family]
    values = {}
    pos = len(family) + 1
    for item in rest.split(","):
        m = re.fullmatch(r"\s*(\w+)\s*=\s*(-?\d+)\s*", item)
        if not m:
            raise ParseError(f"expected <name>=<int>, got {item!r}", pos)
        key, val = m.group(1), int(m.group(2))
        if key not in names:
            raise ParseError(f"{family} takes parameters {', '.join(names)}; got {key!r}", pos)
        if key in values:
            raise ParseError(f"parameter {key!r} given twice", pos)
        values[key] = val
        pos += len(item) + 1
    missing = [n for n in names if n not in values]
    if missing:
        raise ParseError(f"missing parameter(s) {', '.join(missing)} for {family}", len(spec))
    for n in names:
        if values[n] < 1 or (n == "N" and values[n] < 2) or (family == "psu" and values[n] < 2):
            raise ParseError(f"parameter {n}={values[n]} out of range", spec.index(n + "="))
    return cls(*(values[n] for n in names))


def format_theory(theory) -> str:
    for family, (cls, names) in _FAMILIES.items():
        if type(theory) is cls:
            return family + ":" + ",".join(f"{n}={getattr(theory, n)}" for n in names)
    raise TypeError(theory)


def _int_list(text, offset):
    out = []
    pos = offset
    for tok in text.split(","):
        try:
            out.append(int(tok))
        except ValueError:
            raise ParseError(f"expected an integer, got {tok!r}", pos) from None
        pos += len(tok) + 1
    return out


def parse_manifold(spec: str):
    kind, sep, rest = spec.partition(":")
    if not sep:
        raise ParseError(f"expected lens:p,q | chain:a1,... | link:<path>, got {spec!r}", len(kind))
    off = len(kind) + 1
    if kind == "lens":
        vals = _int_list(rest, off)
        if len(vals) != 2:
            raise ParseError("lens needs exactly two integers p,q", off)
        try:
            return Lens(*vals)
        except ValueError as exc:
            raise ParseError(str(exc), off) from None
    if kind == "chain":
        return Chain(tuple(_int_list(rest, off)))
    if kind == "link":
        try:
            text = Path(rest).read_text()
        except OSError as exc:
            raise ParseError(f"cannot read link file {rest!r}: {exc.strerror}", off) from None
        return parse_link_text(text)
    raise ParseError(f"unknown manifold kind {kind!r}", 0)


# --- tables ------------------------------------------------------------------

def _f(x) -> str:
    return format(float(x), ".17g")


def _c(z) -> str:
    z = complex(z)
    return f"{_f(z.real)} {_f(z.imag)}"


def _label_str(lab) -> str:
    if isinstance(lab, tuple):
        return "(" + ",".join(_label_str(x) for x in lab) + ")"
    return str(lab)


def modular_table(md: ModularData, extra_header=()) -> str:
    n = md.size
    lines = [TABLE_VERSION, *extra_header, "kind modular", f"name {md.name}", f"size {n}"]
    lines += [f"label {i} {_label_str(lab)}" for i, lab in enumerate(md.labels)]
    lines += [
        f"central_charge {_f(md.central_charge)}",
        f"rank {_f(md.rank)}",
        f"anomaly {_c(md.anomaly)}",
        "conj " + " ".join(map(str, md.conj)),
        "dims " + " ".join(_f(d) for d in md.dims),
    ]
    lines += [f"twist {i} {_c(w)}" for i, w in enumerate(md.twists)]
    lines += [f"T {i} {_c(t)}" for i, t in enumerate(md.Tdiag)]
    for i in range(n):
        lines.append(f"S {i} " + " ".join(_c(z) for z in md.S[i]))
    for i, j, k in zip(*np.nonzero(md.fusion)):
        lines.append(f"fusion {i} {j} {k} {md.fusion[i, j, k]}")
    return "\n".join(lines) + "\n"


def sector_table(table: cosets.CosetSectorTable, extra_header=()) -> str:
    lines = [TABLE_VERSION, *extra_header, "kind sectors", f"family {table.family}",
             "params " + " ".join(map(str, table.params)), f"size {table.size}"]
    for i, s in enumerate(table.sectors):
        cons = " ".join(f"{c[0][0]}{list(c[0][1:])}:{_label_str(c[1])}{'*' if c[2] else ''}"
                        for c in s.constituents)
        lines.append(f"sector {i} label={_label_str(s.label)} f={s.f} t={s.t} "
                     f"dim={_f(s.dim)} twist={_c(s.twist).replace(' ', ',')} [{cons}]")
    lines += [
        f"central_charge {_f(table.central_charge)}",
        f"rank {_f(table.rank)}",
        f"anomaly {_c(table.anomaly)}",
        f"mu {_f(table.mu)}",
    ]
    return "\n".join(lines) + "\n"


def restricted_table(model, extra_header=()) -> str:
    md = build_affine(model.keys[0][1], model.keys[0][2])
    lines = [TABLE_VERSION, *extra_header, "kind restricted", f"name {model.name}",
             f"size {model.size}"]
    for i, (lab,) in enumerate(model.labels):
        j = md.index(lab)
        lines.append(f"label {i} {_label_str(lab)} dim={_f(md.dims[j])} twist={_c(md.twists[j]).replace(' ', ',')}")
    lines += [f"rank {_f(model.rank)}", f"anomaly {_c(model.anomaly)}"]
    return "\n".join(lines) + "\n"


def render_table(theory) -> str:
    header = (f"theory {format_theory(theory)}",)
    if isinstance(theory, Affine):
        return modular_table(build_affine(theory.N, theory.k), header)
    if isinstance(theory, U1):
        return modular_table(build_u1(theory.k), header)
    if isinstance(theory, Parafermion):
        return sector_table(cosets.parafermion_sectors(theory.k), header)
    if isinstance(theory, Diagonal):
        return sector_table(cosets.diagonal_sectors(theory.N, theory.m1, theory.m2), header)
    if isinstance(theory, Extension):
        return sector_table(cosets.extension_orbits(theory.N, theory.k, theory.m), header)
    if isinstance(theory, PsuRestricted):
        return restricted_table(invariants.psu_model(theory.m, theory.n), header)
    raise TypeError(theory)


def parse_table_floats(text: str) -> dict:
    """Scalar fields of a table ('rank', 'central_charge', 'anomaly', 'mu', 'dims')."""
    out = {}
    for line in text.splitlines():
        key, _, rest = line.partition(" ")
        if key in ("rank", "central_charge", "mu"):
            out[key] = float(rest)
        elif key == "anomaly":
            re_, im = rest.split()
            out[key] = complex(float(re_), float(im))
        elif key == "dims":
            out[key] = [float(x) for x in rest.split()]
    return out


# --- cache -------------------------------------------------------------------

def cache_dir() -> Path:
    root = os.environ.get("COSETINV_CACHE_DIR")
    return Path(root) if root else Path.home() / ".cache" / "cosetinv"


def cache_key(theory) -> str:
    return hashlib.sha256(f"{TABLE_VERSION}\n{format_theory(theory)}".encode()).hexdigest()


def cached_table(theory) -> tuple[str, bool]:
    """(table text, was_cache_hit)."""
    path = cache_dir() / f"{cache_key(theory)}.txt"
    if path.exists():
        return path.read_text(), True
    text = render_table(theory)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        tmp = path.with_suffix(".tmp")
        tmp.write_text(text)
        tmp.replace(path)
    except OSError:
        pass  # an unwritable cache is not an error
    return text, False


# --- results -------------------------------------------------------------------

def _fixed(x: float) -> str:
    s = f"{x:.12f}"
    return "0.000000000000" if s == "-0.000000000000" else s


def format_result(theory_str, manifold_str, result) -> str:
    return "\n".join([
        f"theory {theory_str}",
        f"manifold {manifold_str}",
        f"value {_fixed(result.value.real)} {_fixed(result.value.imag)}",
        f"b_plus {result.b_plus}",
        f"b_minus {result.b_minus}",
        f"colorings {result.terms}",
        f"wall_time {result.seconds:.6f}",
    ]) + "\n"


def parse_result(text: str) -> dict:
    out = {}
    for line in text.splitlines():
        key, _, rest = line.partition(" ")
        if key == "value":
            re_, im = rest.split()
            out[key] = complex(float(re_), float(im))
        elif key in ("b_plus", "b_minus", "colorings"):
            out[key] = int(rest)
        elif key == "wall_time":
            out[key] = float(rest)
        elif key:
            out[key] = rest
    return out
