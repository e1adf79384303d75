"""Built-in fusion data fixtures.

Each entry is frozen golden data: fusion rules entered once by hand (or
generated from a group), with eps annotations that the eps-consistency check
corroborates independently.  The descriptions say what category the data
presents; rep_f2_z3 and jj_bim deliberately share one semiring and differ
only in endomorphism degree.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Sequence

from .core import FusionData
from .deligne import DivisionType, SemisimpleDesc
from .galois import FiniteGroup, GaloisAnnotation, GaloisMark, from_galois_group

_R = DivisionType.REAL
_C = DivisionType.COMPLEX
_H = DivisionType.QUATERNION


@dataclass(frozen=True)
class FixtureEntry:
    name: str
    data: FusionData
    annotation: Optional[GaloisAnnotation] = None
    desc: Optional[SemisimpleDesc] = None
    description: str = ""


def vec_group(labels: Sequence[str], table: Sequence[Sequence[int]]) -> FusionData:
    """Group-ring fusion data: one simple per element, product from the
    multiplication table, duality the inverse, all eps = 1, degree 1."""
    group = FiniteGroup(tuple(labels), tuple(tuple(row) for row in table))
    n = group.order
    tensor = [[[0] * n for _ in range(n)] for _ in range(n)]
    for i in range(n):
        for j in range(n):
            tensor[i][j][group.table[i][j]] = 1
    return FusionData(
        labels=group.labels,
        n_tensor=tuple(tuple(tuple(row) for row in plane) for plane in tensor),
        dual=tuple(group.inverse(i) for i in range(n)),
        eps=(1,) * n,
        endo_degree=1,
        unit=(group.identity,),
    )


def _cyclic_table(n: int) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple((i + j) % n for j in range(n)) for i in range(n))


def _s3_group() -> FiniteGroup:
    def compose(f, g):
        return tuple(f[g[i]] for i in range(3))

    elements = {
        "1": (0, 1, 2),
        "r": (1, 2, 0),
        "r2": (2, 0, 1),
        "s": (1, 0, 2),
        "sr": compose((1, 0, 2), (1, 2, 0)),
        "sr2": compose((1, 0, 2), (2, 0, 1)),
    }
    labels = tuple(sorted(elements))
    perms = [elements[l] for l in labels]
    index = {perm: i for i, perm in enumerate(perms)}
    table = tuple(tuple(index[compose(a, b)] for b in perms) for a in perms)
    return FiniteGroup(labels, table)


def _rank2_data(top_label: str, eps_top: int, endo_degree: int) -> FusionData:
    """Rank-2 data with x*x = eps_top * 1 + x for the non-unit simple x."""
    return FusionData(
        labels=("1", top_label),
        n_tensor=(
            ((1, 0), (0, 1)),
            ((0, 1), (eps_top, 1)),
        ),
        dual=(0, 1),
        eps=(1, eps_top),
        endo_degree=endo_degree,
        unit=(0,),
    )


def _rep_r_q8() -> FusionData:
    r = 5
    tensor = [[[0] * r for _ in range(r)] for _ in range(r)]
    for i in range(4):  # Klein four-group on 1, a, b, c via bit xor
        for j in range(4):
            tensor[i][j][i ^ j] = 1
    for i in range(4):
        tensor[i][4][4] = 1
        tensor[4][i][4] = 1
    for k in range(4):
        tensor[4][4][k] = 4
    return FusionData(
        labels=("1", "a", "b", "c", "h"),
        n_tensor=tuple(tuple(tuple(row) for row in plane) for plane in tensor),
        dual=(0, 1, 2, 3, 4),
        eps=(1, 1, 1, 1, 4),
        endo_degree=1,
        unit=(0,),
    )


def _m2_vec() -> FusionData:
    # matrix units E11, E12, E21, E22; E_ij E_kl = delta_jk E_il
    labels = ("E11", "E12", "E21", "E22")
    pos = {(1, 1): 0, (1, 2): 1, (2, 1): 2, (2, 2): 3}
    coords = {v: k for k, v in pos.items()}
    tensor = [[[0] * 4 for _ in range(4)] for _ in range(4)]
    for a in range(4):
        for b in range(4):
            (i, j), (k, l) = coords[a], coords[b]
            if j == k:
                tensor[a][b][pos[(i, l)]] = 1
    return FusionData(
        labels=labels,
        n_tensor=tuple(tuple(tuple(row) for row in plane) for plane in tensor),
        dual=(0, 2, 1, 3),
        eps=(1, 1, 1, 1),
        endo_degree=1,
        unit=(0, 3),
    )


def _vec_line(endo_degree: int) -> FusionData:
    return FusionData(
        labels=("1",),
        n_tensor=(((1,),),),
        dual=(0,),
        eps=(1,),
        endo_degree=endo_degree,
        unit=(0,),
    )


@lru_cache(maxsize=1)
def _builtins() -> dict[str, FixtureEntry]:
    entries: list[FixtureEntry] = []

    entries.append(
        FixtureEntry(
            name="vec_z2",
            data=vec_group(("1", "g"), ((0, 1), (1, 0))),
            description="group ring of Z/2",
        )
    )
    entries.append(
        FixtureEntry(
            name="vec_z3",
            data=vec_group(("1", "g", "g2"), _cyclic_table(3)),
            description="group ring of Z/3",
        )
    )
    s3 = _s3_group()
    entries.append(
        FixtureEntry(
            name="vec_s3",
            data=vec_group(s3.labels, s3.table),
            description="group ring of the symmetric group S3",
        )
    )

    entries.append(
        FixtureEntry(
            name="rep_r_q8",
            data=_rep_r_q8(),
            desc=SemisimpleDesc(
                (("1", _R), ("a", _R), ("b", _R), ("c", _R), ("h", _H))
            ),
            description=(
                "real representations of the quaternion group Q8: four split "
                "lines and one quaternionic simple of dimension four"
            ),
        )
    )

    entries.append(
        FixtureEntry(
            name="rep_f2_z3",
            data=_rank2_data("v", eps_top=2, endo_degree=1),
            description=(
                "representations of Z/3 over the field with two elements: the "
                "unit and a simple V with V*V = 1 + 1 + V and End(V) the field "
                "with four elements"
            ),
        )
    )

    entries.append(
        FixtureEntry(
            name="fib",
            data=_rank2_data("x", eps_top=1, endo_degree=1),
            description="Fibonacci ring: x*x = 1 + x, golden-ratio dimension",
        )
    )

    cc_group = FiniteGroup(("1", "c"), ((0, 1), (1, 0)))
    cc_data, cc_annotation = from_galois_group(cc_group, ("1", "c"))
    entries.append(
        FixtureEntry(
            name="cc_bim",
            data=cc_data,
            annotation=cc_annotation,
            desc=SemisimpleDesc((("1", _C), ("c", _C))),
            description=(
                "bimodules for the complex numbers over the reals: the trivial "
                "and the conjugating bimodule, endomorphism degree 2"
            ),
        )
    )

    z6 = FiniteGroup(("1", "s", "s2", "s3", "s4", "s5"), _cyclic_table(6))
    gal7_data, gal7_annotation = from_galois_group(z6, ("1", "s2", "s4"))
    entries.append(
        FixtureEntry(
            name="gal7",
            data=gal7_data,
            annotation=gal7_annotation,
            description=(
                "bimodules for the degree-6 cyclotomic field of seventh roots "
                "of unity, restricted to the index-2 subgroup of its Galois "
                "group; the center's field is the quadratic subfield"
            ),
        )
    )

    jj_data = _rank2_data("x", eps_top=2, endo_degree=3)
    entries.append(
        FixtureEntry(
            name="jj_bim",
            data=jj_data,
            annotation=GaloisAnnotation(
                marks=(GaloisMark.trivial(), GaloisMark.nontrivial()),
                center_degree=1,
            ),
            description=(
                "bimodules for the real cube-root field of 2 over the "
                "rationals: the unit and the splitting-field simple; the same "
                "semiring as rep_f2_z3 with endomorphism degree 3, and a "
                "non-normal extension (no Galois group element applies)"
            ),
        )
    )

    entries.append(
        FixtureEntry(
            name="m2_vec",
            data=_m2_vec(),
            description="2x2 matrix units over Vec: strictly multifusion, unit E11 + E22",
        )
    )

    entries.append(
        FixtureEntry(
            name="vec_r",
            data=_vec_line(1),
            desc=SemisimpleDesc((("1", _R),)),
            description="one real line: the trivial fusion ring of Vec over R",
        )
    )
    entries.append(
        FixtureEntry(
            name="vec_c",
            data=_vec_line(2),
            desc=SemisimpleDesc((("1", _C),)),
            description=(
                "complex lines viewed over the reals: one simple with a "
                "degree-2 endomorphism field"
            ),
        )
    )

    return {entry.name: entry for entry in sorted(entries, key=lambda e: e.name)}


def list_builtins() -> tuple[str, ...]:
    return tuple(_builtins())


def get_builtin(name: str) -> FixtureEntry:
    try:
        return _builtins()[name]
    except KeyError:
        raise KeyError(
            f"unknown builtin {name!r}; available: {', '.join(list_builtins())}"
        ) from None
