"""Seeded random Burling set generator.

Grows a set one element at a time from a singleton, using only moves that
provably preserve the axioms: attaching a fresh probe to an exposed
element, joining a fresh crossing partner at a root, and folding the
current probes into a fresh enclosing element.  The joins go through the
real join operations so their contract checks run on every step.

The random stream is splitmix64, fixed here by recurrence so corpora are
reproducible bit for bit from the seed:

    state = (state + 0x9E3779B97F4A7C15) mod 2^64
    z = state; z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9 mod 2^64
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB mod 2^64
    output = z ^ (z >> 31)
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import BurlingSet, inner_join, outer_join, verify_axioms
from .errors import ContractError, InputError

_MASK = (1 << 64) - 1


class SplitMix64:
    """The splitmix64 pseudo-random stream."""

    def __init__(self, seed: int):
        self.state = seed & _MASK

    def next(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def randrange(self, n: int) -> int:
        return self.next() % n

    def coin(self) -> bool:
        return bool(self.next() & 1)


@dataclass(frozen=True)
class GeneratorConfig:
    seed: int
    target_size: int
    probe_bias: float = 0.5  # chance of attaching a probe vs joining
    join_mix: float = 0.5  # chance a join folds probes vs adds a crossing

    def __post_init__(self):
        if self.target_size < 1:
            raise InputError("target_size must be at least 1")
        for name in ("probe_bias", "join_mix"):
            v = getattr(self, name)
            if not 0.0 <= v <= 1.0:
                raise InputError(f"{name} must lie in [0, 1]")


def _pick(rng: SplitMix64, pool) -> object:
    items = sorted(pool)
    return items[rng.randrange(len(items))]


def gen_burling(cfg: GeneratorConfig) -> BurlingSet:
    """A random Burling set with exactly cfg.target_size elements 0..k-1."""
    rng = SplitMix64(cfg.seed)
    attach_cut = int(cfg.probe_bias * (1 << 64))
    inner_cut = int(cfg.join_mix * (1 << 64))

    b = BurlingSet({0})
    probes = {0}
    roots = {0}
    exposed = {0}
    k = 1

    while k < cfg.target_size:
        fresh = k
        if rng.next() < attach_cut:
            # fresh probe crossing out of an exposed element; the target
            # keeps its exposure, the new element is a probe
            q = _pick(rng, exposed)
            b = BurlingSet(
                b.elements | {fresh}, b.prec, b.adj | {(fresh, q)}
            )
            probes.discard(q)
            probes.add(fresh)
            exposed.add(fresh)
        elif rng.next() < inner_cut:
            # fold a probe subset under a fresh enclosing element
            chosen = {p for p in sorted(probes) if rng.coin()}
            if not chosen:
                chosen = {_pick(rng, probes)}
            piece = BurlingSet(
                chosen | {fresh}, (), {(p, fresh) for p in chosen}
            )
            b = inner_join(b, piece, {fresh})
            probes = set(chosen)
            roots = {fresh}
            exposed = set(chosen) | {fresh}
        else:
            # give a root a fresh crossing target; the root stays exposed
            q = _pick(rng, roots)
            piece = BurlingSet({q, fresh}, (), {(q, fresh)})
            b = outer_join(b, piece, q)
            roots.discard(q)
            roots.add(fresh)
            exposed.add(fresh)
        k += 1

    report = verify_axioms(b)
    if not report.ok:
        raise ContractError(f"generator produced a bad set: {report.lines()[0]}")
    return b
