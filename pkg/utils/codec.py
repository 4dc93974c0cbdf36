# filename: utils/codec.py

"""
Structure files: JSON text holding a kind tag, named dimensions and sparse
coefficient lists with exact rational literals.

Every kind has a fixed table of maps and their signatures in terms of the
dimension names. Printing is canonical (sorted keys, sorted entries, lowest
terms), so decode followed by encode reproduces a file byte for byte.
"""

import json
import logging
from fractions import Fraction
from pathlib import Path

from pydantic import ValidationError

from app.core.config import MAX_DIM
from app.schemas.models import MapBlock, StructureFile
from utils.ainf2 import AInf2, AInf2Morphism, TwoTermComplex
from utils.checking import Structure
from utils.cohom import DiffCochain
from utils.corresp import CrossedModule
from utils.diffainf2 import DiffAInf2Morphism, DiffOp2, TwoTermDiffAInf
from utils.diffalg import AssocAlgebra, DiffBimodule, DifferenceAlgebra
from utils.errors import FormatError
from utils.exactlin import MultiMap, Space
from utils.hbimod import DiffHBimod2, HBimod2
from utils.twoalg import DiffAss2, TwoVec

logger = logging.getLogger(__name__)

Signature = tuple[tuple[str, ...], str]


class BimoduleData(Structure):
    algebra: DifferenceAlgebra
    module: DiffBimodule


class CochainData(Structure):
    algebra: DifferenceAlgebra
    module: DiffBimodule
    cochain: DiffCochain


class HBimodData(Structure):
    algebra: AssocAlgebra
    hbimod: HBimod2


class DiffHBimodData(Structure):
    algebra: DifferenceAlgebra
    hbimod: DiffHBimod2


class MorphismData(Structure):
    src: TwoTermDiffAInf
    dst: TwoTermDiffAInf
    morphism: DiffAInf2Morphism


_ALGEBRA = {"mult": (("A", "A"), "A")}
_DIFF_ALGEBRA = {**_ALGEBRA, "d": (("A",), "A")}
_DIFF_BIMODULE = {
    **_DIFF_ALGEBRA,
    "left": (("A", "M"), "M"),
    "right": (("M", "A"), "M"),
    "Delta": (("M",), "M"),
}
_AINF2 = {
    "delta": (("A1",), "A0"),
    "m00": (("A0", "A0"), "A0"),
    "m01": (("A0", "A1"), "A1"),
    "m10": (("A1", "A0"), "A1"),
    "mu": (("A0", "A0", "A0"), "A1"),
}
_DIFF_AINF2 = {
    **_AINF2,
    "d0": (("A0",), "A0"),
    "d1": (("A1",), "A1"),
    "d2": (("A0", "A0"), "A1"),
}
_MORPHISM = {
    "phi0": (("A0",), "B0"),
    "phi1": (("A1",), "B1"),
    "phi2": (("A0", "A0"), "B1"),
    "phi3": (("A0",), "B1"),
}
_CROSSED = {
    **_DIFF_ALGEBRA,
    "top_mult": (("H", "H"), "H"),
    "top_d": (("H",), "H"),
    "left": (("A", "H"), "H"),
    "right": (("H", "A"), "H"),
    "partial": (("H",), "A"),
}
_HBIMOD = {
    **_ALGEBRA,
    "delta": (("M1",), "M0"),
    "left0": (("A", "M0"), "M0"),
    "right0": (("M0", "A"), "M0"),
    "left1": (("A", "M1"), "M1"),
    "right1": (("M1", "A"), "M1"),
    "nu_aav": (("A", "A", "M0"), "M1"),
    "nu_ava": (("A", "M0", "A"), "M1"),
    "nu_vaa": (("M0", "A", "A"), "M1"),
}
_DIFF_HBIMOD = {
    **_HBIMOD,
    "d": (("A",), "A"),
    "Delta0": (("M0",), "M0"),
    "Delta1": (("M1",), "M1"),
    "theta_am": (("A", "M0"), "M1"),
    "theta_ma": (("M0", "A"), "M1"),
}
_DIFFASS2 = {
    "s": (("C1",), "C0"),
    "t": (("C1",), "C0"),
    "i": (("C0",), "C1"),
    "bullet0": (("C0", "C0"), "C0"),
    "bullet1": (("C1", "C1"), "C1"),
    "assoc": (("C0", "C0", "C0"), "C1"),
    "D0": (("C0",), "C0"),
    "D1": (("C1",), "C1"),
    "Dnat": (("C0", "C0"), "C1"),
}


def _cochain_schema(degree: int) -> dict[str, Signature]:
    schema = {**_DIFF_BIMODULE, "f": (("A",) * degree, "M")}
    if degree > 0:
        schema["chi"] = (("A",) * (degree - 1), "M")
    return schema


def map_schema(kind: str, params: dict[str, int] | None = None) -> dict[str, Signature]:
    tables = {
        "algebra": _ALGEBRA,
        "diff_algebra": _DIFF_ALGEBRA,
        "diff_bimodule": _DIFF_BIMODULE,
        "ainf2": _AINF2,
        "diff_ainf2": _DIFF_AINF2,
        "diff_morphism": _MORPHISM,
        "crossed_module": _CROSSED,
        "hbimod": _HBIMOD,
        "diff_hbimod": _DIFF_HBIMOD,
        "diffass2": _DIFFASS2,
    }
    if kind == "cochain":
        if not params or "degree" not in params:
            raise FormatError("a cochain file needs params.degree")
        return _cochain_schema(params["degree"])
    if kind not in tables:
        raise FormatError(f"unknown structure kind '{kind}'")
    return tables[kind]


# -- encoding -------------------------------------------------------------------


def _block(m: MultiMap, sig: Signature) -> MapBlock:
    srcs, dst = sig
    return MapBlock(
        srcs=list(srcs),
        dst=dst,
        entries=[(list(index), str(value)) for index, value in m.nonzero_entries()],
    )


def _flatten(obj) -> tuple[str, dict[str, MultiMap], dict[str, int], dict[str, StructureFile]]:
    """kind, named maps, params and parts of a structure."""
    if isinstance(obj, AssocAlgebra):
        return "algebra", {"mult": obj.mult}, {}, {}
    if isinstance(obj, DifferenceAlgebra):
        return "diff_algebra", {"mult": obj.mult, "d": obj.d}, {}, {}
    if isinstance(obj, BimoduleData):
        bm = obj.module
        maps = {"mult": obj.algebra.mult, "d": obj.algebra.d, "left": bm.left, "right": bm.right, "Delta": bm.Delta}
        return "diff_bimodule", maps, {}, {}
    if isinstance(obj, AInf2):
        return "ainf2", _ainf2_maps(obj), {}, {}
    if isinstance(obj, TwoTermDiffAInf):
        maps = {**_ainf2_maps(obj.ainf), "d0": obj.dop.d0, "d1": obj.dop.d1, "d2": obj.dop.d2}
        return "diff_ainf2", maps, {}, {}
    if isinstance(obj, MorphismData):
        m = obj.morphism
        maps = {"phi0": m.base.phi0, "phi1": m.base.phi1, "phi2": m.base.phi2, "phi3": m.phi3}
        return "diff_morphism", maps, {}, {"src": encode(obj.src), "dst": encode(obj.dst)}
    if isinstance(obj, CochainData):
        c, bm = obj.cochain, obj.module
        maps = {"mult": obj.algebra.mult, "d": obj.algebra.d, "left": bm.left, "right": bm.right, "Delta": bm.Delta, "f": c.f}
        if c.degree > 0:
            maps["chi"] = c.second()
        return "cochain", maps, {"degree": c.degree}, {}
    if isinstance(obj, CrossedModule):
        maps = {
            "mult": obj.base.mult,
            "d": obj.base.d,
            "top_mult": obj.top.mult,
            "top_d": obj.top.d,
            "left": obj.left,
            "right": obj.right,
            "partial": obj.partial,
        }
        return "crossed_module", maps, {}, {}
    if isinstance(obj, HBimodData):
        return "hbimod", {"mult": obj.algebra.mult, **_hbimod_maps(obj.hbimod)}, {}, {}
    if isinstance(obj, DiffHBimodData):
        dhb = obj.hbimod
        maps = {
            "mult": obj.algebra.mult,
            "d": obj.algebra.d,
            **_hbimod_maps(dhb.base),
            "Delta0": dhb.Delta0,
            "Delta1": dhb.Delta1,
            "theta_am": dhb.theta_am,
            "theta_ma": dhb.theta_ma,
        }
        return "diff_hbimod", maps, {}, {}
    if isinstance(obj, DiffAss2):
        tv = obj.tv
        maps = {
            "s": tv.s,
            "t": tv.t,
            "i": tv.i,
            "bullet0": obj.bullet0,
            "bullet1": obj.bullet1,
            "assoc": obj.assoc,
            "D0": obj.D0,
            "D1": obj.D1,
            "Dnat": obj.Dnat,
        }
        return "diffass2", maps, {}, {}
    raise FormatError(f"cannot encode objects of type {type(obj).__name__}")


def _ainf2_maps(a: AInf2) -> dict[str, MultiMap]:
    return {"delta": a.delta, "m00": a.m00, "m01": a.m01, "m10": a.m10, "mu": a.mu}


def _hbimod_maps(hb: HBimod2) -> dict[str, MultiMap]:
    return {name: getattr(hb, name) for name in _HBIMOD if name != "mult"}


def encode(obj) -> StructureFile:
    kind, maps, params, parts = _flatten(obj)
    schema = map_schema(kind, params)
    dims: dict[str, int] = {}
    for name, (srcs, dst) in schema.items():
        m = maps[name]
        for label, space in zip(srcs + (dst,), m.srcs + (m.dst,)):
            dims.setdefault(label, space.dim)
    blocks = {name: _block(maps[name], sig) for name, sig in schema.items()}
    return StructureFile(kind=kind, dims=dims, maps=blocks, params=params, parts=parts)


def dumps(sf: StructureFile) -> str:
    return json.dumps(sf.model_dump(), sort_keys=True, indent=2) + "\n"


def dump(obj) -> str:
    return dumps(encode(obj))


def write_structure(path: str | Path, obj) -> None:
    Path(path).write_text(dump(obj), encoding="utf-8")


# -- decoding -------------------------------------------------------------------


def loads(text: str) -> StructureFile:
    try:
        return StructureFile.model_validate_json(text)
    except ValidationError as e:
        raise FormatError(f"not a structure file: {e.errors()[0]['msg']}") from e


def read_structure_file(path: str | Path) -> StructureFile:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise FormatError(f"cannot read {path}: {e}") from e
    return loads(text)


def _read_map(name: str, block: MapBlock, sig: Signature, spaces: dict[str, Space]) -> MultiMap:
    srcs, dst = sig
    if tuple(block.srcs) != srcs or block.dst != dst:
        raise FormatError(f"map '{name}' declared as {block.srcs} -> {block.dst}, expected {list(srcs)} -> {dst}")
    src_spaces = [spaces[s] for s in srcs]
    shape = (spaces[dst].dim,) + tuple(s.dim for s in src_spaces)
    seen = set()
    entries = []
    for index, literal in block.entries:
        index = tuple(index)
        if len(index) != len(shape) or any(i >= n for i, n in zip(index, shape)):
            raise FormatError(f"map '{name}': index {list(index)} out of range for shape {list(shape)}")
        if index in seen:
            raise FormatError(f"map '{name}': index {list(index)} given twice")
        seen.add(index)
        entries.append((index, Fraction(literal)))
    return MultiMap.from_entries(src_spaces, spaces[dst], entries)


def _spaces(sf: StructureFile, schema: dict[str, Signature], max_dim: int) -> dict[str, Space]:
    needed = []
    for srcs, dst in schema.values():
        for label in srcs + (dst,):
            if label not in needed:
                needed.append(label)
    missing = [label for label in needed if label not in sf.dims]
    if missing:
        raise FormatError(f"missing dimension(s) {missing}")
    spaces = {}
    for label in needed:
        dim = sf.dims[label]
        if dim < 0:
            raise FormatError(f"dimension {label} is negative")
        if dim > max_dim:
            raise FormatError(f"dimension {label} = {dim} exceeds the limit {max_dim}")
        spaces[label] = Space(dim, label)
    return spaces


def read_maps(sf: StructureFile, max_dim: int = MAX_DIM) -> tuple[dict[str, MultiMap], dict[str, Space]]:
    schema = map_schema(sf.kind, sf.params)
    spaces = _spaces(sf, schema, max_dim)
    missing = [name for name in schema if name not in sf.maps]
    extra = [name for name in sf.maps if name not in schema]
    if missing:
        raise FormatError(f"{sf.kind} file is missing map(s) {missing}")
    if extra:
        raise FormatError(f"{sf.kind} file has unknown map(s) {extra}")
    return {name: _read_map(name, sf.maps[name], sig, spaces) for name, sig in schema.items()}, spaces


def decode(sf: StructureFile, max_dim: int = MAX_DIM):
    """The structure a file describes; shapes are validated, identities are not."""
    maps, spaces = read_maps(sf, max_dim)
    kind = sf.kind
    if kind == "diff_morphism":
        return _decode_morphism(sf, maps, spaces, max_dim)
    if kind in ("ainf2", "diff_ainf2"):
        ainf = AInf2(
            cx=TwoTermComplex(A0=spaces["A0"], A1=spaces["A1"], delta=maps["delta"]),
            m00=maps["m00"],
            m01=maps["m01"],
            m10=maps["m10"],
            mu=maps["mu"],
        )
        if kind == "ainf2":
            return ainf
        return TwoTermDiffAInf(ainf=ainf, dop=DiffOp2(d0=maps["d0"], d1=maps["d1"], d2=maps["d2"]))
    if kind == "diffass2":
        return DiffAss2(
            tv=TwoVec(C0=spaces["C0"], C1=spaces["C1"], s=maps["s"], t=maps["t"], i=maps["i"]),
            **{name: maps[name] for name in ("bullet0", "bullet1", "assoc", "D0", "D1", "Dnat")},
        )

    alg = AssocAlgebra(space=spaces["A"], mult=maps["mult"])
    if kind == "algebra":
        return alg
    if kind == "hbimod":
        return HBimodData(algebra=alg, hbimod=_hbimod(maps, spaces))
    da = DifferenceAlgebra(alg=alg, d=maps["d"])
    if kind == "diff_algebra":
        return da
    if kind == "diff_hbimod":
        dhb = DiffHBimod2(
            base=_hbimod(maps, spaces),
            **{name: maps[name] for name in ("Delta0", "Delta1", "theta_am", "theta_ma")},
        )
        return DiffHBimodData(algebra=da, hbimod=dhb)
    if kind == "crossed_module":
        top = DifferenceAlgebra(alg=AssocAlgebra(space=spaces["H"], mult=maps["top_mult"]), d=maps["top_d"])
        return CrossedModule(base=da, top=top, left=maps["left"], right=maps["right"], partial=maps["partial"])

    bm = DiffBimodule(module=spaces["M"], left=maps["left"], right=maps["right"], Delta=maps["Delta"])
    if kind == "diff_bimodule":
        return BimoduleData(algebra=da, module=bm)
    try:
        cochain = DiffCochain(degree=sf.params["degree"], f=maps["f"], chi=maps.get("chi"))
    except ValidationError as e:
        raise FormatError(f"bad cochain: {e.errors()[0]['msg']}") from e
    return CochainData(algebra=da, module=bm, cochain=cochain)


def _hbimod(maps: dict[str, MultiMap], spaces: dict[str, Space]) -> HBimod2:
    return HBimod2(M0=spaces["M0"], M1=spaces["M1"], **{name: maps[name] for name in _HBIMOD if name != "mult"})


def _decode_morphism(sf: StructureFile, maps, spaces, max_dim: int) -> MorphismData:
    for part in ("src", "dst"):
        if part not in sf.parts or sf.parts[part].kind != "diff_ainf2":
            raise FormatError(f"a diff_morphism file needs a diff_ainf2 part '{part}'")
    src = decode(sf.parts["src"], max_dim)
    dst = decode(sf.parts["dst"], max_dim)
    if (src.A0.dim, src.A1.dim, dst.A0.dim, dst.A1.dim) != tuple(spaces[k].dim for k in ("A0", "A1", "B0", "B1")):
        raise FormatError("morphism dimensions do not match its parts")
    base = AInf2Morphism(phi0=maps["phi0"], phi1=maps["phi1"], phi2=maps["phi2"])
    return MorphismData(src=src, dst=dst, morphism=DiffAInf2Morphism(base=base, phi3=maps["phi3"]))


def load(text: str, max_dim: int = MAX_DIM):
    return decode(loads(text), max_dim)


def read_structure(path: str | Path, max_dim: int = MAX_DIM):
    return decode(read_structure_file(path), max_dim)
