"""Diffusion and epidemic models on graphs.

All five models run in synchronous steps from the time-0 seed state and are
deterministic for a fixed RNG seed (nodes and neighbors are visited in
sorted order so the draw sequence is fixed).  A run stops early when a step
changes nothing.

States: SIS/SIR/SIRS use ``S``/``I``/``R``; ICM and LTM use ``inactive``/
``active``.  Infection is per-contact: every infected/active neighbor gets
its own independent trial.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Mapping, Optional, Union

from .graph import Graph

EPIDEMIC_MODELS = ("sis", "sir", "sirs")
CASCADE_MODELS = ("icm", "ltm")
MODELS = EPIDEMIC_MODELS + CASCADE_MODELS

S, I, R = "S", "I", "R"
INACTIVE, ACTIVE = "inactive", "active"


@dataclass(frozen=True)
class Trajectory:
    model: str
    params: tuple[tuple[str, float], ...]
    seeds: tuple[int, ...]
    rng_seed: int
    states: tuple[tuple[str, ...], ...]  # states[t][node]

    @property
    def steps(self) -> int:
        return len(self.states) - 1

    def counts(self, t: int) -> dict[str, int]:
        out: dict[str, int] = {}
        for state in self.states[t]:
            out[state] = out.get(state, 0) + 1
        return out

    def final(self) -> tuple[str, ...]:
        return self.states[-1]


def _check_prob(name: str, value: Optional[float], required: bool) -> Optional[float]:
    if value is None:
        if required:
            raise ValueError(f"model requires parameter {name!r}")
        return None
    if not 0.0 <= value <= 1.0:
        raise ValueError(f"{name} must be in [0, 1], got {value}")
    return value


def diffuse(
    g: Graph,
    model: str,
    seeds: set[int] | frozenset[int] | tuple[int, ...] | list[int],
    steps: int,
    rng_seed: int,
    *,
    beta: Optional[float] = None,
    mu: Optional[float] = None,
    xi: Optional[float] = None,
    p: Optional[float] = None,
    threshold: Union[None, float, Mapping[int, float]] = None,
) -> Trajectory:
    """Run one diffusion model from a seed set.

    beta/mu drive SIS and SIR (infection per contact / cure per step), xi
    adds the R->S transition for SIRS, p is the one-shot ICM infection
    probability and threshold the LTM activation level (uniform float or a
    per-node mapping); activation needs the active-neighbor fraction to be
    strictly greater than the threshold.
    """
    model = model.lower()
    if model not in MODELS:
        raise ValueError(f"unknown model {model!r}; expected one of {', '.join(MODELS)}")
    seed_set = set(seeds)
    if not seed_set:
        raise ValueError("seed set must be non-empty")
    for v in seed_set:
        if not 0 <= v < g.n:
            raise ValueError(f"seed node {v} out of range [0, {g.n})")
    if steps < 0:
        raise ValueError("steps must be non-negative")

    params: dict[str, float] = {}
    if model in EPIDEMIC_MODELS:
        params["beta"] = _check_prob("beta", beta, required=True)
        params["mu"] = _check_prob("mu", mu, required=True)
        if model == "sirs":
            params["xi"] = _check_prob("xi", xi, required=True)
    elif model == "icm":
        params["p"] = _check_prob("p", p, required=True)
    else:  # ltm
        if threshold is None:
            raise ValueError("model requires parameter 'threshold'")
        if isinstance(threshold, Mapping):
            phi = {v: float(threshold.get(v, 0.0)) for v in range(g.n)}
        else:
            phi = {v: float(threshold) for v in range(g.n)}
        for v, value in phi.items():
            if not 0.0 <= value <= 1.0:
                raise ValueError(f"threshold of node {v} must be in [0, 1], got {value}")
        if not isinstance(threshold, Mapping):
            params["threshold"] = float(threshold)

    rng = random.Random(rng_seed)
    neighbors = [g.neighbors(v) for v in range(g.n)]

    if model in EPIDEMIC_MODELS:
        current = [I if v in seed_set else S for v in range(g.n)]
        step_fn = lambda state: _epidemic_step(model, state, neighbors, params, rng)
    elif model == "icm":
        current = [ACTIVE if v in seed_set else INACTIVE for v in range(g.n)]
        frontier = sorted(seed_set)

        def step_fn(state):
            nonlocal frontier
            nxt, frontier = _icm_step(state, frontier, neighbors, params["p"], rng)
            return nxt

    else:  # ltm
        current = [ACTIVE if v in seed_set else INACTIVE for v in range(g.n)]
        step_fn = lambda state: _ltm_step(state, neighbors, phi)

    history = [tuple(current)]
    for _ in range(steps):
        nxt = step_fn(current)
        if nxt == current:
            break
        history.append(tuple(nxt))
        current = nxt

    return Trajectory(
        model=model,
        params=tuple(sorted(params.items())),
        seeds=tuple(sorted(seed_set)),
        rng_seed=rng_seed,
        states=tuple(history),
    )


def _epidemic_step(model, state, neighbors, params, rng):
    n = len(state)
    beta, mu = params["beta"], params["mu"]
    newly_infected = set()
    for v in range(n):
        if state[v] != I:
            continue
        for w in neighbors[v]:
            if state[w] == S and rng.random() < beta:
                newly_infected.add(w)
    nxt = list(state)
    for v in range(n):
        if state[v] == I:
            if rng.random() < mu:
                nxt[v] = S if model == "sis" else R
        elif state[v] == S and v in newly_infected:
            nxt[v] = I
    if model == "sirs":
        for v in range(n):
            if state[v] == R and rng.random() < params["xi"]:
                nxt[v] = S
    return nxt


def _icm_step(state, frontier, neighbors, p, rng):
    activated = []
    nxt = list(state)
    for u in frontier:
        for w in neighbors[u]:
            # One shot per (active, neighbor) pair: u only attempts in the
            # single step after its own activation.
            if nxt[w] == INACTIVE and rng.random() < p:
                nxt[w] = ACTIVE
                activated.append(w)
    return nxt, sorted(set(activated))


def _ltm_step(state, neighbors, phi):
    nxt = list(state)
    for v in range(len(state)):
        if state[v] != INACTIVE or not neighbors[v]:
            continue
        active = sum(1 for w in neighbors[v] if state[w] == ACTIVE)
        if active / len(neighbors[v]) > phi[v]:
            nxt[v] = ACTIVE
    return nxt
