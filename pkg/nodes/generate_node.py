# filename: nodes/generate_node.py

import random

from pocketflow import Node
from app.core.config import DEFAULT_SEED, MAX_DIM
from app.schemas.models import StructureFile
from utils.codec import BimoduleData, CochainData, DiffHBimodData, HBimodData, MorphismData, encode
from utils.cohom import diff_coboundary
from utils.corresp import crossed_to_strict, identity_crossed_module
from utils.diffalg import DifferenceAlgebra, regular_diff_bimodule
from utils.errors import AlgebraError, FormatError, exit_code_for
from utils.genkit import (
    CatalogEntry,
    catalog,
    diff_bimodules,
    gen_crossed_modules,
    gen_diff_hbimods,
    gen_hbimods,
    gen_skeletal,
    random_cochain,
    random_transport,
)
from utils.hbimod import semidirect_2alg
from utils.twoalg import functor_T
import logging

logger = logging.getLogger(__name__)

GEN_KINDS = (
    "algebra",
    "diff_algebra",
    "diff_bimodule",
    "cochain",
    "ainf2",
    "diff_ainf2",
    "diff_morphism",
    "crossed_module",
    "hbimod",
    "diff_hbimod",
    "diffass2",
)


def _per_algebra(kind: str, entry: CatalogEntry, seed: int) -> list:
    if kind == "algebra":
        return [entry.algebra]
    return [HBimodData(algebra=entry.algebra, hbimod=hb) for hb in gen_hbimods(entry.algebra, seed)]


def _per_operator(kind: str, da: DifferenceAlgebra, entry: CatalogEntry, seed: int) -> list:
    regular = regular_diff_bimodule(da)
    if kind == "diff_algebra":
        return [da]
    if kind == "diff_bimodule":
        return [BimoduleData(algebra=da, module=bm) for _, bm in diff_bimodules(da)]
    if kind == "cochain":
        cocycle = diff_coboundary(da, regular, random_cochain(random.Random(seed), da, regular, 2))
        return [CochainData(algebra=da, module=regular, cochain=cocycle)]
    if kind == "crossed_module":
        return gen_crossed_modules(da, entry.ideals)
    if kind == "diff_hbimod":
        return [DiffHBimodData(algebra=da, hbimod=dhb) for dhb in gen_diff_hbimods(da, seed)]

    skeletal = gen_skeletal(da, regular, seed)
    strict = crossed_to_strict(identity_crossed_module(da))
    if kind == "diffass2":
        mixed = gen_diff_hbimods(da, seed)[-1]
        return [functor_T(skeletal), functor_T(strict), semidirect_2alg(da, mixed)]
    moved, morphism = random_transport(skeletal, seed)
    if kind == "diff_morphism":
        return [MorphismData(src=skeletal, dst=moved, morphism=morphism)]
    found = [skeletal, strict, moved]
    return found if kind == "diff_ainf2" else [x.ainf for x in found]


def generate_structures(
    kind: str,
    seed: int = DEFAULT_SEED,
    max_dim: int = MAX_DIM,
    algebra: str | None = None,
) -> list[tuple[str, StructureFile]]:
    """Encoded catalog instances of one kind with every dimension at most ``max_dim``."""
    if kind not in GEN_KINDS:
        raise FormatError(f"unknown kind '{kind}', expected one of {GEN_KINDS}")
    entries = [e for e in catalog(max_dim) if algebra is None or e.name == algebra]
    if algebra is not None and not entries:
        raise FormatError(f"no catalog algebra '{algebra}' of dimension at most {max_dim}")

    found = []
    for entry in entries:
        if kind in ("algebra", "hbimod"):
            found.extend((f"{kind}-{entry.name}-{k}", obj) for k, obj in enumerate(_per_algebra(kind, entry, seed)))
            continue
        for j, d in enumerate(entry.difference_ops()):
            da = DifferenceAlgebra(alg=entry.algebra, d=d)
            found.extend((f"{kind}-{entry.name}-d{j}-{k}", obj) for k, obj in enumerate(_per_operator(kind, da, entry, seed)))
    files = [(name, encode(obj)) for name, obj in found]
    return [(name, sf) for name, sf in files if all(dim <= max_dim for dim in sf.dims.values())]


class GenerateNode(Node):
    def prep(self, shared: dict):
        logger.info("GenerateNode: Preparing...")
        return (
            shared.get("gen_kind"),
            shared.get("seed", DEFAULT_SEED),
            shared.get("max_dim") or MAX_DIM,
            shared.get("algebra"),
        )

    def exec(self, prep_res) -> dict:
        logger.info("GenerateNode: Executing...")
        kind, seed, max_dim, algebra = prep_res
        try:
            files = generate_structures(kind, seed, max_dim, algebra)
        except AlgebraError as e:
            logger.error(f"GenerateNode: {e}")
            return {"status": "error", "error_message": str(e), "exit_code": exit_code_for(e)}
        logger.info(f"GenerateNode: Generated {len(files)} {kind} file(s) from seed {seed}.")
        return {"status": "success", "files": files}

    def post(self, shared: dict, prep_res, exec_res: dict) -> str:
        logger.info("GenerateNode: Post-processing...")
        if exec_res.get("status") == "error":
            shared["error_message"] = exec_res["error_message"]
            shared["exit_code"] = exec_res["exit_code"]
            return "error"

        shared["outputs"] = exec_res["files"]
        shared["exit_code"] = 0
        return "default"
