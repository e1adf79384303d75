from __future__ import annotations

import pytest

import fusionring as fr

ALL_NAMES = list(fr.list_builtins())
FUSION_NAMES = [n for n in ALL_NAMES if fr.get_builtin(n).data.is_fusion]
RANK2_FUSION_NAMES = [n for n in FUSION_NAMES if fr.get_builtin(n).data.rank == 2]


@pytest.fixture(scope="session")
def builtins():
    return {name: fr.get_builtin(name) for name in ALL_NAMES}


def fusion_data(name):
    return fr.get_builtin(name).data


def mutate_tensor(data, i, j, k, delta):
    """Copy of the fusion data with one product multiplicity shifted; raises
    ValueError if the shift drives the entry negative."""
    tensor = [[list(row) for row in plane] for plane in data.n_tensor]
    tensor[i][j][k] += delta
    return fr.FusionData(
        labels=data.labels,
        n_tensor=tuple(tuple(tuple(row) for row in plane) for plane in tensor),
        dual=data.dual,
        eps=data.eps,
        endo_degree=data.endo_degree,
        unit=data.unit,
    )
