"""Recursive construction of infinitely many words inside one abelian
closure.

Each stage factors the current word over the standard pair named by its
shortest unbalanced pair, pulls the block structure back to a binary
word, drives that word through the shifted traffic map until its 1s are
isolated, and re-expands through the accumulated morphism.  The block
lengths grow strictly, which separates the stages' factor sets.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .abelian import shortest_unbalanced_pair
from .errors import ConfigError, DomainError
from .specs import MorphicSpec, WordSpec
from .structure import factorize_over_standard_pair
from .transforms import (BinaryMorphism, MORPHISM_ID, iterate_F_until_isolated)
from .words import complement, factors, parikh, weight

DEFAULT_SEED = MorphicSpec(BinaryMorphism("001111", "0"), "0")


@dataclass(frozen=True)
class FamilyStage:
    index: int
    z_window: str  # the isolated-1s word driving this stage
    x_window: str  # its image under the accumulated morphism
    psi: BinaryMorphism  # accumulated morphism producing x from z
    phi: BinaryMorphism | None = None  # block morphism found at the next stage
    pair: tuple[str, str] | None = None  # (psi . phi)(0), (psi . phi)(1)

    @property
    def pair_length(self) -> int | None:
        if self.pair is None:
            return None
        return len(self.pair[0]) + len(self.pair[1])


@dataclass(frozen=True)
class SeedNormalization:
    window: str
    complemented: bool
    iterations: int


def normalize_seed(seed: WordSpec | str, window: int = 1 << 17,
                   max_iter: int = 256) -> SeedNormalization:
    """Bring a seed window into the construction's precondition: letter
    1 in the minority and no factor 11, complementing and applying the
    shifted traffic map as needed."""
    raw = seed if isinstance(seed, str) else seed.prefix(window + 2 * max_iter)
    complemented = False
    if Fraction(weight(raw), len(raw)) >= Fraction(1, 2):
        raw = complement(raw)
        complemented = True
    res = iterate_F_until_isolated(raw, window, max_iter)
    if res.iterations is None:
        raise ConfigError("seed did not isolate its 1s within the cap")
    return SeedNormalization(res.window, complemented, res.iterations)


def construct_family(seed: WordSpec | str = DEFAULT_SEED, depth: int = 3,
                     window: int = 1 << 17,
                     x_window_cap: int = 1 << 18) -> list[FamilyStage]:
    """Stages 0..depth of the construction; stage n carries the block
    pair once stage n + 1 has been built, so the last stage has none."""
    if depth < 1:
        raise ConfigError("depth must be >= 1")
    norm = normalize_seed(seed, window)
    z = norm.window
    psi = MORPHISM_ID
    stages = [FamilyStage(0, z, z, psi)]
    for n in range(1, depth + 1):
        fac = factorize_over_standard_pair(z)
        x_img, y_img = fac.pair
        phi = BinaryMorphism(x_img, y_img)
        y_word = fac.tokens
        if Fraction(weight(y_word), len(y_word)) >= Fraction(1, 2):
            # exchange the roles of the blocks to keep 1 in the minority
            phi = BinaryMorphism(y_img, x_img)
            y_word = complement(y_word)
        max_iter = min(128, max(1, (len(y_word) - 8) // 4))
        res = iterate_F_until_isolated(
            y_word, len(y_word) - 2 * max_iter, max_iter)
        if res.iterations is None:
            raise ConfigError(f"stage {n}: 1s not isolated within the cap")
        z_next = res.window
        if not z_next:
            raise ConfigError(f"stage {n}: window exhausted; start larger")
        psi_next = psi.compose(phi)
        prev = stages[-1]
        stages[-1] = FamilyStage(prev.index, prev.z_window, prev.x_window,
                                 prev.psi, phi,
                                 (psi_next.image0, psi_next.image1))
        x_next = psi_next(z_next)[:x_window_cap]
        stages.append(FamilyStage(n, z_next, x_next, psi_next))
        z = z_next
        psi = psi_next
    return stages


@dataclass(frozen=True)
class DistinctnessReport:
    growth: list[tuple[int, int, int]]  # (stage, pair length, next length)
    factor_witnesses: list[tuple[int, int, int, str]]
    # (stage a, stage b, factor length, factor in exactly one of them)
    ok: bool


def verify_distinct(stages: list[FamilyStage]) -> DistinctnessReport:
    """Strict pair-length growth plus an explicit distinguishing factor
    for every pair of stages that carries block data."""
    with_pairs = [s for s in stages if s.pair is not None]
    if len(with_pairs) < 2:
        raise ConfigError("need at least two stages with block pairs")
    growth = []
    ok = True
    for a, b in zip(with_pairs, with_pairs[1:]):
        la, lb = a.pair_length, b.pair_length
        growth.append((a.index, la, lb))
        if not lb > la:
            ok = False
    witnesses = []
    for i, a in enumerate(with_pairs):
        for b in with_pairs[i + 1:]:
            n = max(a.pair_length, b.pair_length)
            if len(a.x_window) < 2 * n or len(b.x_window) < 2 * n:
                ok = False
                witnesses.append((a.index, b.index, n, ""))
                continue
            fa, fb = factors(a.x_window, n), factors(b.x_window, n)
            diff = fa ^ fb
            if diff:
                witnesses.append((a.index, b.index, n, min(diff)))
            else:
                ok = False
                witnesses.append((a.index, b.index, n, ""))
    return DistinctnessReport(growth, witnesses, ok)


def growth_identity_holds(stage: FamilyStage,
                          next_stage: FamilyStage) -> bool:
    """|x_{n+1} y_{n+1}| equals the Parikh pairing of the next block
    morphism's 01-image with the current pair lengths."""
    if stage.pair is None or next_stage.pair is None or next_stage.phi is None:
        raise ConfigError("both stages need block data")
    n0, n1 = parikh(next_stage.phi.image0 + next_stage.phi.image1)
    lx, ly = len(stage.pair[0]), len(stage.pair[1])
    return next_stage.pair_length == n0 * lx + n1 * ly
