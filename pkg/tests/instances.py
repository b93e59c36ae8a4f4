"""Named presentations shared by the test modules."""

from __future__ import annotations

from pathlib import Path as FsPath

from hypothesis import strategies as st

from qhh.generator import GenConfig, generate
from qhh.presentation import Presentation, parse_presentation, validate

SAMPLES = FsPath(__file__).resolve().parent.parent / "samples"


def sample(name: str):
    return validate(parse_presentation((SAMPLES / f"{name}.qp").read_text()))


def build(vertices, arrows, relations=(), name="Q"):
    return validate(Presentation.build(vertices, arrows, relations, name))


def crown7():
    return sample("crown7")


def crown5():
    return sample("crown5")


def crown(n: int, m: int):
    """Oriented n-cycle with the single relation a0 (a_{n-1} ... a1 a0)^(m-1)."""
    arrows = [(f"a{i}", str(i), str((i + 1) % n)) for i in range(n)]
    gamma = [f"a{i}" for i in range(n - 1, 0, -1)] + ["a0"]
    return build([str(i) for i in range(n)], arrows, [["a0"] + gamma * (m - 1)], f"crown{n}_{m}")


def loop(power: int | None = 2):
    rels = [["a"] * power] if power else []
    return build(["u"], [("a", "u", "u")], rels, "loop")


def unchecked_loop():
    return Presentation.build(["u"], [("a", "u", "u")], [], "loop")


def a2():
    return build(["u", "v"], [("a", "u", "v")], name="A2")


def point():
    return build(["u"], [], name="point")


def disjoint_loops():
    return build(
        ["u", "v"], [("a", "u", "u"), ("b", "v", "v")], ["a a", "b b"], "two_loops"
    )


def two_cycle(relations=()):
    return build(["u", "v"], [("a", "u", "v"), ("b", "v", "u")], relations, "two_cycle")


KINDS = ("any", "any", "tree", "nontree")


@st.composite
def presentations(draw, max_basis: int = 40, connected=None):
    """A generated finite-dimensional presentation, drawn by seed and shape."""
    seed = draw(st.integers(0, 2**31 - 1))
    kind = draw(st.sampled_from(KINDS))
    conn = draw(st.booleans()) if connected is None else connected
    cfg = GenConfig(seed=seed, kind=kind, connected=conn, max_basis=max_basis)
    return next(generate(cfg))


def chars():
    return st.sampled_from([0, 2, 3, 5])
