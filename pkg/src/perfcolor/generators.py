"""Seeded instance generators and their compact text form.

Randomness comes from SplitMix64 (Steele, Lea & Flood 2014), used as a
counter-based stream: draw ``i`` (1-based) of a stream seeded with ``s`` is
``mix(s + i * 0x9E3779B97F4A7C15 mod 2**64)`` where ``mix`` is::

    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB
    z =  z ^ (z >> 31)

all modulo 2**64. A uniform in [0, 1) is ``(z >> 11) * 2**-53``, and a
Bernoulli(p) draw succeeds when that uniform is ``< p``. Batches are
computed with numpy uint64 wrap-around arithmetic and agree bit for bit
with the scalar path.

Text form (seed is appended once, at top level)::

    cmp:2,2,2                 complete multipartite with those part sizes
    bip:3x4:p=0.5             random bipartite, sides 3 and 4
    gnp:100:p=0.1             Erdos-Renyi
    union:(SPEC)+(SPEC)+...   disjoint union, offsets in listed order
    pawed:(SPEC)              SPEC plus a paw bridged to it
    ...:seed=<u64>
"""

from __future__ import annotations

import os
import re
from dataclasses import dataclass
from typing import Union

import numpy as np

from .graph import Graph, build_graph

GOLDEN = 0x9E3779B97F4A7C15
MASK64 = (1 << 64) - 1


class SpecError(ValueError):
    pass


class SplitMix64:
    def __init__(self, seed: int):
        self.seed = seed & MASK64
        self.counter = 0

    @staticmethod
    def _mix(z: int) -> int:
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def next_u64(self) -> int:
        self.counter += 1
        return self._mix((self.seed + self.counter * GOLDEN) & MASK64)

    def below(self, bound: int) -> int:
        """Uniform integer in ``[0, bound)`` by rejection."""
        if bound <= 0:
            raise ValueError("bound must be positive")
        limit = (1 << 64) - (1 << 64) % bound
        while True:
            x = self.next_u64()
            if x < limit:
                return x % bound

    def u64_batch(self, k: int) -> np.ndarray:
        idx = np.arange(self.counter + 1, self.counter + 1 + k, dtype=np.uint64)
        self.counter += k
        with np.errstate(over="ignore"):
            z = np.uint64(self.seed) + idx * np.uint64(GOLDEN)
            z = (z ^ (z >> np.uint64(30))) * np.uint64(0xBF58476D1CE4E5B9)
            z = (z ^ (z >> np.uint64(27))) * np.uint64(0x94D049BB133111EB)
            return z ^ (z >> np.uint64(31))

    def bernoulli_batch(self, k: int, p: float) -> np.ndarray:
        u = (self.u64_batch(k) >> np.uint64(11)).astype(np.float64) * 2.0**-53
        return u < p


@dataclass(frozen=True)
class BipartiteSpec:
    n_a: int
    n_b: int
    p: float


@dataclass(frozen=True)
class MultipartiteSpec:
    sizes: tuple[int, ...]


@dataclass(frozen=True)
class GnpSpec:
    n: int
    p: float


@dataclass(frozen=True)
class UnionSpec:
    parts: tuple["GenSpec", ...]


@dataclass(frozen=True)
class PawedSpec:
    base: "GenSpec"


GenSpec = Union[BipartiteSpec, MultipartiteSpec, GnpSpec, UnionSpec, PawedSpec]


def _validate(spec: GenSpec) -> None:
    if isinstance(spec, BipartiteSpec):
        if spec.n_a < 0 or spec.n_b < 0 or not 0.0 <= spec.p <= 1.0:
            raise SpecError(f"invalid bipartite parameters {spec}")
    elif isinstance(spec, MultipartiteSpec):
        if not spec.sizes or any(s <= 0 for s in spec.sizes):
            raise SpecError("complete multipartite part sizes must be positive")
    elif isinstance(spec, GnpSpec):
        if spec.n < 0 or not 0.0 <= spec.p <= 1.0:
            raise SpecError(f"invalid gnp parameters {spec}")
    elif isinstance(spec, UnionSpec):
        if not spec.parts:
            raise SpecError("union needs at least one part")
        for part in spec.parts:
            _validate(part)
    elif isinstance(spec, PawedSpec):
        _validate(spec.base)
    else:
        raise SpecError(f"unknown spec {spec!r}")


def _edges(spec: GenSpec, rng: SplitMix64) -> tuple[int, np.ndarray]:
    """Vertex count and (k, 2) edge array; randomness drawn in a fixed order."""
    if isinstance(spec, BipartiteSpec):
        a, b = spec.n_a, spec.n_b
        keep = np.flatnonzero(rng.bernoulli_batch(a * b, spec.p))
        return a + b, np.stack([keep // b, a + keep % b], axis=1) if b else np.empty((0, 2), np.int64)
    if isinstance(spec, MultipartiteSpec):
        sizes = np.asarray(spec.sizes, dtype=np.int64)
        n = int(sizes.sum())
        part = np.repeat(np.arange(len(sizes)), sizes)
        iu, ju = np.triu_indices(n, k=1)
        cross = part[iu] != part[ju]
        return n, np.stack([iu[cross], ju[cross]], axis=1)
    if isinstance(spec, GnpSpec):
        iu, ju = np.triu_indices(spec.n, k=1)
        keep = rng.bernoulli_batch(len(iu), spec.p)
        return spec.n, np.stack([iu[keep], ju[keep]], axis=1)
    if isinstance(spec, UnionSpec):
        total, chunks = 0, []
        for part in spec.parts:
            n, e = _edges(part, rng)
            chunks.append(e + total)
            total += n
        return total, np.concatenate(chunks) if chunks else np.empty((0, 2), np.int64)
    if isinstance(spec, PawedSpec):
        n, e = _edges(spec.base, rng)
        a, b, c, d = n, n + 1, n + 2, n + 3
        extra = [(a, b), (a, c), (b, c), (c, d)]
        if n:
            extra.append((rng.below(n), d))
        return n + 4, np.concatenate([e.reshape(-1, 2), np.asarray(extra, dtype=np.int64)])
    raise SpecError(f"unknown spec {spec!r}")


def generate(spec: GenSpec, seed: int = 0) -> Graph:
    """Deterministic graph for ``(spec, seed)``.

    Complete multipartite parts occupy consecutive vertex ranges; bipartite
    side A precedes side B; union members are offset in listed order; a
    planted paw takes four fresh vertices ``a, b, c, d`` (triangle ``abc``,
    pendant ``d`` on ``c``) and ``d`` is bridged to one random base vertex.
    """
    _validate(spec)
    n, edges = _edges(spec, SplitMix64(seed))
    return build_graph(n, edges)


# --- text form -------------------------------------------------------------

_NUM = r"\d+"
_PROB = r"p=([0-9]*\.?[0-9]+(?:[eE][-+]?\d+)?)"


def default_seed() -> int:
    raw = os.environ.get("PERFCOLOR_SEED")
    if raw is None:
        return 0
    try:
        return int(raw, 0) & MASK64
    except ValueError:
        raise SpecError(f"PERFCOLOR_SEED={raw!r} is not an integer") from None


def _split_top(body: str, sep: str) -> list[str]:
    """Split on ``sep`` outside parentheses."""
    out, depth, start = [], 0, 0
    for i, ch in enumerate(body):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise SpecError(f"unbalanced parentheses in {body!r}")
        elif ch == sep and depth == 0:
            out.append(body[start:i])
            start = i + 1
    if depth:
        raise SpecError(f"unbalanced parentheses in {body!r}")
    out.append(body[start:])
    return out


def _unwrap(text: str) -> str:
    if not (text.startswith("(") and text.endswith(")")):
        raise SpecError(f"expected parenthesized spec, got {text!r}")
    return text[1:-1]


def _parse(text: str) -> GenSpec:
    text = text.strip()
    kind, _, rest = text.partition(":")
    if kind == "cmp":
        if not re.fullmatch(rf"{_NUM}(,{_NUM})*", rest):
            raise SpecError(f"bad part sizes in {text!r}")
        return MultipartiteSpec(tuple(int(x) for x in rest.split(",")))
    if kind == "bip":
        m = re.fullmatch(rf"({_NUM})x({_NUM}):{_PROB}", rest)
        if not m:
            raise SpecError(f"expected bip:<a>x<b>:p=<prob>, got {text!r}")
        return BipartiteSpec(int(m[1]), int(m[2]), float(m[3]))
    if kind == "gnp":
        m = re.fullmatch(rf"({_NUM}):{_PROB}", rest)
        if not m:
            raise SpecError(f"expected gnp:<n>:p=<prob>, got {text!r}")
        return GnpSpec(int(m[1]), float(m[2]))
    if kind == "union":
        return UnionSpec(tuple(_parse(_unwrap(p)) for p in _split_top(rest, "+")))
    if kind == "pawed":
        return PawedSpec(_parse(_unwrap(rest)))
    raise SpecError(f"unknown generator kind {kind!r} in {text!r}")


def parse_spec(text: str) -> tuple[GenSpec, int | None]:
    """Parse a spec string into ``(spec, seed)``; seed is None when absent."""
    seed = None
    m = re.search(r":seed=(\d+)$", text.strip())
    if m:
        seed = int(m[1])
        if seed > MASK64:
            raise SpecError(f"seed {seed} does not fit in 64 bits")
        text = text.strip()[: m.start()]
    spec = _parse(text)
    _validate(spec)
    return spec, seed


def format_spec(spec: GenSpec, seed: int | None = None) -> str:
    if isinstance(spec, MultipartiteSpec):
        out = "cmp:" + ",".join(map(str, spec.sizes))
    elif isinstance(spec, BipartiteSpec):
        out = f"bip:{spec.n_a}x{spec.n_b}:p={spec.p!r}"
    elif isinstance(spec, GnpSpec):
        out = f"gnp:{spec.n}:p={spec.p!r}"
    elif isinstance(spec, UnionSpec):
        out = "union:" + "+".join(f"({format_spec(p)})" for p in spec.parts)
    elif isinstance(spec, PawedSpec):
        out = f"pawed:({format_spec(spec.base)})"
    else:
        raise SpecError(f"unknown spec {spec!r}")
    return out if seed is None else f"{out}:seed={seed}"
