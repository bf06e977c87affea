"""Order and membership oracle for permutation groups (Schreier-Sims).

The chain is built by a seeded randomized fill (product replacement) and
then certified by an exhaustive Schreier-generator verification pass, so
the final structure is exact regardless of what the randomized phase did.
Any witness the verification finds is fed back in and the pass is rerun
until it comes back clean.

The verification is the expensive part; it is batched with numpy, one
matrix holding every Schreier generator of a level at once.

Internally permutations are 0-based tuples; the public API speaks
:class:`~spinaldim.perms.Permutation`.
"""

from __future__ import annotations

from random import Random

import numpy as np

from .perms import Permutation

_EXIT_ROUNDS = 16
_MAX_WITNESSES_PER_PASS = 64


def _mul(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    """Product applying b first: (a*b)(x) = a(b(x))."""
    return tuple(a[x] for x in b)


def _inv(a: tuple[int, ...]) -> tuple[int, ...]:
    inv = [0] * len(a)
    for i, y in enumerate(a):
        inv[y] = i
    return tuple(inv)


def _is_id(a: tuple[int, ...]) -> bool:
    return all(i == y for i, y in enumerate(a))


class _Level:
    __slots__ = ("base", "gens", "transversal", "inv_transversal")

    def __init__(self, base: int):
        self.base = base
        self.gens: list[tuple[int, ...]] = []
        self.transversal: dict[int, tuple[int, ...]] = {}
        self.inv_transversal: dict[int, tuple[int, ...]] = {}


class StabilizerChain:
    """Base, transversals and strong generators for a permutation group."""

    def __init__(self, generators, seed: int = 0, degree: int | None = None):
        gens = list(generators)
        if degree is None:
            if not gens:
                raise ValueError("degree is required when the generator list is empty")
            degree = gens[0].degree
        for g in gens:
            if g.degree != degree:
                raise ValueError(f"degree mismatch: {g.degree} != {degree}")
        self.degree = degree
        self._identity = tuple(range(degree))
        self._levels: list[_Level] = []
        self._rng = Random(seed)
        self.seed = seed

        raw = [tuple(x - 1 for x in g.images) for g in gens]
        raw = [g for g in raw if not _is_id(g)]
        for g in raw:
            self._add(g)
        self._randomized_fill()
        while True:
            witnesses = self._verify_pass()
            if not witnesses:
                break
            for w in witnesses:
                self._add(w)
            self._randomized_fill()

    @classmethod
    def from_generators(cls, generators, seed: int = 0, degree: int | None = None):
        return cls(generators, seed=seed, degree=degree)

    # -- queries ---------------------------------------------------------

    def order(self) -> int:
        n = 1
        for lv in self._levels:
            n *= len(lv.transversal)
        return n

    def base(self) -> tuple[int, ...]:
        """Base points, 1-based."""
        return tuple(lv.base + 1 for lv in self._levels)

    def strong_generators(self) -> list[Permutation]:
        out = []
        for lv in self._levels:
            for g in lv.gens:
                out.append(Permutation(tuple(x + 1 for x in g)))
        return out

    def contains(self, g: Permutation) -> bool:
        if g.degree != self.degree:
            raise ValueError(f"degree mismatch: {g.degree} != {self.degree}")
        residue, _ = self._sift(tuple(x - 1 for x in g.images))
        return _is_id(residue)

    def random_element(self, rng: Random | None = None) -> Permutation:
        """Uniform random element (the chain is verified, so this is exact)."""
        rng = rng or self._rng
        word = self._identity
        for lv in self._levels:
            pt = rng.choice(sorted(lv.transversal))
            word = _mul(lv.transversal[pt], word)
        return Permutation(tuple(x + 1 for x in word))

    # -- construction ----------------------------------------------------

    def _sift(self, g: tuple[int, ...]) -> tuple[tuple[int, ...], int]:
        """Reduce g through the chain; returns (residue, stuck_level)."""
        for i, lv in enumerate(self._levels):
            b = g[lv.base]
            if b == lv.base:
                continue
            u_inv = lv.inv_transversal.get(b)
            if u_inv is None:
                return g, i
            g = _mul(u_inv, g)
        return g, len(self._levels)

    def _add(self, g: tuple[int, ...]) -> bool:
        residue, level = self._sift(g)
        if _is_id(residue):
            return False
        if level == len(self._levels):
            base = min(i for i, y in enumerate(residue) if y != i)
            lv = _Level(base)
            lv.transversal[base] = self._identity
            lv.inv_transversal[base] = self._identity
            self._levels.append(lv)
        self._levels[level].gens.append(residue)
        for i in range(level, -1, -1):
            self._extend_orbit(i, residue)
        return True

    def _gens_at(self, level: int) -> list[tuple[int, ...]]:
        out = []
        for lv in self._levels[level:]:
            out.extend(lv.gens)
        return out

    def _extend_orbit(self, level: int, new_gen: tuple[int, ...]) -> None:
        """Grow the level's orbit after new_gen joined its generating set."""
        lv = self._levels[level]
        queue = []
        for a in list(lv.transversal):
            b = new_gen[a]
            if b not in lv.transversal:
                u_b = _mul(new_gen, lv.transversal[a])
                lv.transversal[b] = u_b
                lv.inv_transversal[b] = _inv(u_b)
                queue.append(b)
        gens = self._gens_at(level)
        while queue:
            a = queue.pop(0)
            u_a = lv.transversal[a]
            for g in gens:
                b = g[a]
                if b not in lv.transversal:
                    u_b = _mul(g, u_a)
                    lv.transversal[b] = u_b
                    lv.inv_transversal[b] = _inv(u_b)
                    queue.append(b)

    def _randomized_fill(self) -> None:
        gens = self._gens_at(0)
        if not gens:
            return
        slots = list(gens) + [self._identity] * 3
        stall = 0
        rounds = 0
        max_rounds = 200 + 40 * len(gens)
        while stall < _EXIT_ROUNDS and rounds < max_rounds:
            rounds += 1
            i = self._rng.randrange(len(slots))
            j = self._rng.randrange(len(slots))
            if i == j:
                continue
            other = slots[j]
            if self._rng.randrange(2):
                other = _inv(other)
            slots[i] = _mul(slots[i], other)
            if self._add(slots[i]):
                stall = 0
            else:
                stall += 1

    # -- verification ----------------------------------------------------

    def _verify_pass(self) -> list[tuple[int, ...]]:
        """Sift every Schreier generator at every level, batched with numpy.

        Returns nonidentity residues (deduplicated).  An empty list proves
        the chain exact: by Schreier's lemma each stabilizer is then
        generated by the next level's strong generators.
        """
        deg = self.degree
        idrow = np.arange(deg, dtype=np.int32)
        levels = self._levels
        pos_l, u_l, uinv_flat_l = [], [], []
        for lv in levels:
            pts = sorted(lv.transversal)
            pos = np.full(deg, -1, dtype=np.int32)
            pos[pts] = np.arange(len(pts), dtype=np.int32)
            u = np.array([lv.transversal[p] for p in pts], dtype=np.int32)
            uinv = np.array([lv.inv_transversal[p] for p in pts], dtype=np.int32)
            pos_l.append(pos)
            u_l.append(u)
            uinv_flat_l.append(uinv.ravel())

        witnesses: list[tuple[int, ...]] = []
        seen: set[tuple[int, ...]] = set()

        def note(rows) -> None:
            for row in rows:
                t = tuple(int(x) for x in row)
                if t not in seen:
                    seen.add(t)
                    witnesses.append(t)

        for i, lv in enumerate(levels):
            pos_i, u_i, uinv_i_flat = pos_l[i], u_l[i], uinv_flat_l[i]
            gens_i = self._gens_at(i)
            if not gens_i:
                continue
            s_stack = np.array(gens_i, dtype=np.int32)
            su = s_stack[:, u_i].reshape(-1, deg)
            sel = pos_i[su[:, lv.base]]
            w = np.take(uinv_i_flat, sel[:, None] * deg + su)
            w = w[~(w == idrow).all(axis=1)]
            for j in range(i + 1, len(levels)):
                if w.size == 0:
                    break
                sel = pos_l[j][w[:, levels[j].base]]
                bad = sel < 0
                if bad.any():
                    note(w[bad])
                    w = w[~bad]
                    sel = sel[~bad]
                    if w.size == 0:
                        break
                w = np.take(uinv_flat_l[j], sel[:, None] * deg + w)
                done = (w == idrow).all(axis=1)
                if done.any():
                    w = w[~done]
            if w.size:
                note(w)
            if len(witnesses) >= _MAX_WITNESSES_PER_PASS:
                return witnesses
        return witnesses
