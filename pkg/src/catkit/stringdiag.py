"""Progressive plane string diagrams evaluated in the strict category of matrices.

A diagram is a list of horizontal layers read top to bottom; the first layer
is applied first. Each cell of a layer is one of

* ``{"id": "A"}``          identity wire on ``A``
* ``{"box": "f"}``         a box; its input/output labels come from the environment
* ``{"cap": "A"}``         counit ``e: A ⊗ A* -> I``
* ``{"cup": "A"}``         unit ``d: I -> A* ⊗ A``

The dual of label ``A`` is written ``A*`` and has the same dimension. Units,
associators and the coherence isomorphisms are identities and never appear.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .laurent import ONE, LaurentPoly
from .sparse import DimensionError, SparseMat, compose, kron, kron_all, trace


class DiagramError(ValueError):
    pass


@dataclass(frozen=True)
class Box:
    inputs: tuple[str, ...]
    outputs: tuple[str, ...]
    value: SparseMat


@dataclass
class Environment:
    dims: dict[str, int]
    boxes: dict[str, Box] = field(default_factory=dict)

    def dim(self, label: str) -> int:
        base = label[:-1] if label.endswith("*") else label
        if base not in self.dims:
            raise DiagramError(f"unknown object {label!r}")
        return self.dims[base]

    def dim_of(self, labels: Sequence[str]) -> int:
        out = 1
        for x in labels:
            out *= self.dim(x)
        return out

    def bind(self, name: str, inputs: Sequence[str], outputs: Sequence[str],
             value: SparseMat) -> None:
        box = Box(tuple(inputs), tuple(outputs), value)
        expected = (self.dim_of(box.outputs), self.dim_of(box.inputs))
        if value.shape != expected:
            raise DiagramError(f"box {name!r} has shape {value.shape}, expected {expected}")
        self.boxes[name] = box


def dual(label: str) -> str:
    return label[:-1] if label.endswith("*") else label + "*"


def cap_matrix(n: int) -> SparseMat:
    """``e(v_i ⊗ φ_j) = δ_ij`` as a ``1 x n²`` matrix."""
    return SparseMat(1, n * n, {(0, i * n + i): ONE for i in range(n)})


def cup_matrix(n: int) -> SparseMat:
    """``d(1) = Σ φ_i ⊗ v_i`` as an ``n² x 1`` matrix."""
    return SparseMat(n * n, 1, {(i * n + i, 0): ONE for i in range(n)})


def cell_signature(cell: Mapping, env: Environment) -> tuple[tuple[str, ...], tuple[str, ...]]:
    if "id" in cell:
        return (cell["id"],), (cell["id"],)
    if "box" in cell:
        if cell["box"] not in env.boxes:
            raise DiagramError(f"unbound box {cell['box']!r}")
        b = env.boxes[cell["box"]]
        return b.inputs, b.outputs
    if "cap" in cell:
        a = cell["cap"]
        return (a, dual(a)), ()
    if "cup" in cell:
        a = cell["cup"]
        return (), (dual(a), a)
    raise DiagramError(f"unrecognized cell {cell!r}")


def cell_value(cell: Mapping, env: Environment) -> SparseMat:
    if "id" in cell:
        return SparseMat.identity(env.dim(cell["id"]))
    if "box" in cell:
        return env.boxes[cell["box"]].value
    if "cap" in cell:
        return cap_matrix(env.dim(cell["cap"]))
    return cup_matrix(env.dim(cell["cup"]))


def layer_signature(layer, env):
    ins, outs = [], []
    for cell in layer:
        i, o = cell_signature(cell, env)
        ins.extend(i)
        outs.extend(o)
    return tuple(ins), tuple(outs)


def eval_diagram(layers: Sequence[Sequence[Mapping]], env: Environment) -> SparseMat:
    """Value of the diagram: each layer tensored, layers composed in order."""
    if not layers:
        raise DiagramError("empty diagram")
    value = None
    prev_out = None
    for k, layer in enumerate(layers):
        ins, outs = layer_signature(layer, env)
        if prev_out is not None and ins != prev_out:
            raise DiagramError(f"layer {k} expects {list(ins)} but receives {list(prev_out)}")
        m = kron_all(cell_value(c, env) for c in layer)
        value = m if value is None else compose(m, value)
        prev_out = outs
    return value


def check_snake(dim: int) -> bool:
    """Both string-straightening identities for the standard dual basis."""
    I = SparseMat.identity(dim)
    e, d = cap_matrix(dim), cup_matrix(dim)
    first = compose(kron(e, I), kron(I, d))    # A -> A ⊗ A* ⊗ A -> A
    second = compose(kron(I, e), kron(d, I))   # A* -> A* ⊗ A ⊗ A* -> A*
    return first == I and second == I


def categorical_trace(f: SparseMat) -> LaurentPoly:
    """``I -d-> A*⊗A -1⊗f-> A*⊗A -flip-> A⊗A* -e-> I``."""
    if not f.is_square():
        raise DimensionError(f"trace of non-square {f.shape} matrix")
    n = f.nrows
    flip = SparseMat.permutation([j * n + i for i in range(n) for j in range(n)])
    composite = cap_matrix(n) @ flip @ kron(SparseMat.identity(n), f) @ cup_matrix(n)
    return composite[(0, 0)]


# -- text format ------------------------------------------------------------


def load_diagram(text: str) -> tuple[list, Environment]:
    """Read ``{"dims": {...}, "boxes": {name: {inputs, outputs, matrix}}, "layers": [...]}``."""
    data = json.loads(text)
    env = Environment({k: int(v) for k, v in data["dims"].items()})
    for name, b in data.get("boxes", {}).items():
        env.bind(name, b["inputs"], b["outputs"], SparseMat.from_json(b["matrix"]))
    return data["layers"], env


# -- the diagram Γ ----------------------------------------------------------

# a: B⊗B -> A, b: C⊗D -> B, c: C -> B⊗C, d: D -> D⊗C
GAMMA_BOXES = {
    "a": (("B", "B"), ("A",)),
    "b": (("C", "D"), ("B",)),
    "c": (("C",), ("B", "C")),
    "d": (("D",), ("D", "C")),
}


def gamma_layerings() -> tuple[list, list]:
    """Two layerings of the same diagram ``B⊗C⊗D -> A⊗B⊗C``.

    The first applies ``c`` and ``d`` together, then ``b``, then ``a``; the
    second slides ``a`` below ``d``.
    """
    first = [
        [{"id": "B"}, {"box": "c"}, {"box": "d"}],
        [{"id": "B"}, {"id": "B"}, {"box": "b"}, {"id": "C"}],
        [{"box": "a"}, {"id": "B"}, {"id": "C"}],
    ]
    second = [
        [{"id": "B"}, {"box": "c"}, {"id": "D"}],
        [{"box": "a"}, {"id": "C"}, {"id": "D"}],
        [{"id": "A"}, {"id": "C"}, {"box": "d"}],
        [{"id": "A"}, {"box": "b"}, {"id": "C"}],
    ]
    return first, second


def random_matrix(rng, nrows: int, ncols: int, density: float = 0.6) -> SparseMat:
    entries = {}
    for i in range(nrows):
        for j in range(ncols):
            if rng.random() < density:
                entries[(i, j)] = LaurentPoly({rng.randint(-2, 2): rng.randint(-3, 3)})
    return SparseMat(nrows, ncols, entries)


def random_gamma_environment(rng, max_dim: int = 3) -> Environment:
    env = Environment({x: rng.randint(1, max_dim) for x in "ABCD"})
    for name, (ins, outs) in GAMMA_BOXES.items():
        env.bind(name, ins, outs, random_matrix(rng, env.dim_of(outs), env.dim_of(ins)))
    return env
