# SPDX-License-Identifier: MIT
# Copyright (c) 2026 vcyc Authors

"""The acceptance corpus as a spec document, with the expected (hdim_fin, hdim_vcyc) per entry."""

import json
from pathlib import Path
from typing import Any

J = [[0, 1], [-1, 0]]
ROT90_PLUS_ONE = [[0, -1, 0], [1, 0, 0], [0, 0, 1]]


def heisenberg(f_bar: list[list[int]]) -> dict[str, Any]:
    return {"tag": "heisenberg_by_z", "n": 2, "form": J, "f_bar": f_bar, "epsilon": 1}


def zn_by_z(a: list[list[int]]) -> dict[str, Any]:
    return {"tag": "zn_by_z", "n": len(a), "A": a}


def free_abelian(n: int) -> dict[str, Any]:
    return {"tag": "free_abelian", "n": n}


def central_extension(m: int, n: int, forms: list[list[list[int]]]) -> dict[str, Any]:
    return {"tag": "central_extension", "m": m, "n": n, "form": forms}


def local(kind: str, **flags: bool) -> dict[str, Any]:
    return {"tag": "countable_local", "kind": kind, **flags}


def product(left: dict[str, Any], right: dict[str, Any]) -> dict[str, Any]:
    return {"tag": "product", "left": left, "right": right}


G_MINUS_ONE = heisenberg([[3, 2], [1, 1]])

EXPECTED: dict[str, tuple[dict[str, Any], tuple[int, int]]] = {
    "heisenberg_f_minus_one": (G_MINUS_ONE, (4, 3)),
    "heisenberg_f_zero": (heisenberg([[1, 1], [0, 1]]), (4, 4)),
    "heisenberg_f_one": (heisenberg([[1, 0], [0, 1]]), (4, 5)),
    **{f"free_abelian_{n}": (free_abelian(n), (n, n + 1 if n >= 2 else 0)) for n in range(6)},
    "zn_by_z_hyperbolic": (zn_by_z([[2, 1], [1, 1]]), (3, 3)),
    "zn_by_z_unipotent": (zn_by_z([[1, 1], [0, 1]]), (3, 3)),
    "zn_by_z_identity": (zn_by_z([[1, 0], [0, 1]]), (3, 4)),
    "zn_by_z_rot90_plus_one": (zn_by_z(ROT90_PLUS_ONE), (4, 5)),
    "central_1_2": (central_extension(1, 2, [J]), (3, 3)),
    "central_1_3": (central_extension(1, 3, [[[0, 1, 0], [-1, 0, 0], [0, 0, 0]]]), (4, 4)),
    "central_2_1": (central_extension(2, 1, [[[0]], [[0]]]), (3, 4)),
    "central_3_2": (central_extension(3, 2, [J, [[0, 0], [0, 0]], [[0, 0], [0, 0]]]), (5, 6)),
    "klein_bottle": (zn_by_z([[-1]]), (2, 3)),
    "torus": (zn_by_z([[1]]), (2, 3)),
    "crystallographic_p2": ({"tag": "crystallographic", "n": 2, "point_group": [[[-1, 0], [0, -1]]]}, (2, 3)),
    **{f"z_one_over_{p}": ({"tag": "z_one_over_p", "p": p}, (2, 1)) for p in (2, 3, 5)},
    "locally_finite": (local("locally_finite", infinite=True), (1, 1)),
    "infinite_dihedral": (local("locally_virtually_cyclic", infinite=True, virtually_cyclic=True), (1, 0)),
    "locally_cyclic": (local("locally_virtually_cyclic", infinite=True), (2, 1)),
    "product_z_z": (product(free_abelian(1), free_abelian(1)), (2, 3)),
    "product_g_minus_one_squared": (product(G_MINUS_ONE, G_MINUS_ONE), (8, 9)),
}


def document(groups: dict[str, dict[str, Any]]) -> dict[str, Any]:
    return {"version": "1", "groups": [{"name": name, "spec": spec} for name, spec in groups.items()]}


def corpus() -> dict[str, Any]:
    return document({name: spec for name, (spec, _) in EXPECTED.items()})


def write_document(path: Path, payload: dict[str, Any]) -> str:
    path.write_text(json.dumps(payload))
    return str(path)
