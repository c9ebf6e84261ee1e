from __future__ import annotations

import random

import pytest

from grcat import fixture, generate_an, render_spec, spec_from_doc, write_spec_file


@pytest.fixture(scope="session")
def final_example():
    return fixture("final-example")


@pytest.fixture(scope="session")
def db_windows():
    return {w: fixture("db-window", window=w) for w in (1, 2, 3)}


@pytest.fixture(scope="session")
def an_specs():
    return {n: generate_an(n) for n in (1, 2, 3, 4)}


@pytest.fixture(scope="session")
def final_example_path(tmp_path_factory, final_example):
    path = tmp_path_factory.mktemp("specs") / "final-example.grcat.json"
    write_spec_file(final_example, str(path))
    return path


def random_valid_spec(rng: random.Random, max_objects: int = 10):
    """A random spec that passes validation by construction.

    Inflation edges only go from strictly shorter to strictly longer
    objects, so the derived subobject relation is a DAG with strictly
    increasing lengths.
    """
    count = rng.randint(1, max_objects)
    ids = [f"m{i}" for i in range(count)]
    theta = {m: rng.randint(1, 6) for m in ids}
    inflations = []
    for x in ids:
        for y in ids:
            if theta[x] < theta[y] and rng.random() < 0.4:
                inflations.append({"sub": x, "target": [y]})
    doc = {
        "name": f"random-{rng.random():.6f}",
        "indecomposables": [{"id": m, "theta": theta[m]} for m in ids],
        "inflations": inflations,
    }
    return spec_from_doc(doc)


def orthogonal_simples_spec(count: int):
    """A category of pairwise Hom-orthogonal objects of length one."""
    doc = {
        "name": f"simples-{count}",
        "metadata": {"complete": True},
        "indecomposables": [{"id": f"s{i}", "theta": 1} for i in range(count)],
    }
    return spec_from_doc(doc)
