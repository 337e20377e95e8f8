"""Finitely presented groups of 2-complexes.

A word is a tuple of nonzero ints: ``+(i+1)`` is generator ``i`` and
``-(i+1)`` its inverse. No word problem or isomorphism test is attempted;
what can be reported is "trivial", "free of rank r" (no relators left after
simplification) or the abelian invariants.
"""

from __future__ import annotations

import json
import string
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .complexes import TwoComplex
from .exceptions import GraphError
from .homology import AbelianGroupDesc
from .snf import smith_normal_form

Word = tuple


def free_reduce(word: Iterable[int]) -> Word:
    out: list[int] = []
    for x in word:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def cyclic_reduce(word: Iterable[int]) -> Word:
    w = list(free_reduce(word))
    i, j = 0, len(w) - 1
    while i < j and w[i] == -w[j]:
        i += 1
        j -= 1
    return tuple(w[i:j + 1])


def invert(word: Sequence[int]) -> Word:
    return tuple(-x for x in reversed(word))


def _canonical(word: Word) -> Word:
    """Least rotation of the word or its inverse; relators equal up to these generate the same normal closure."""
    if not word:
        return word
    cands = []
    for w in (word, invert(word)):
        cands += [w[i:] + w[:i] for i in range(len(w))]
    return min(cands)


@dataclass
class Presentation:
    n_generators: int
    relators: list[Word] = field(default_factory=list)

    def __post_init__(self):
        self.relators = [free_reduce(r) for r in self.relators]
        for r in self.relators:
            if any(x == 0 or abs(x) > self.n_generators for x in r):
                raise ValueError(f"relator {r} uses an unknown generator")

    @property
    def total_length(self) -> int:
        return sum(len(r) for r in self.relators)

    def to_json(self) -> str:
        return json.dumps({"generators": self.n_generators,
                           "relators": [list(r) for r in self.relators]})

    @classmethod
    def from_json(cls, text: str) -> "Presentation":
        d = json.loads(text)
        return cls(d["generators"], [tuple(r) for r in d["relators"]])

    def __str__(self):
        # lowercase letters, uppercase for inverses; x0, x1, ... past 26 generators
        if self.n_generators <= 26:
            def letter(x):
                c = string.ascii_lowercase[abs(x) - 1]
                return c if x > 0 else c.upper()
        else:
            def letter(x):
                return f"x{abs(x) - 1}" + ("" if x > 0 else "^-1")
        gens = ", ".join(letter(i) for i in range(1, self.n_generators + 1))
        rels = ", ".join("".join(map(letter, r)) or "1" for r in self.relators)
        return f"<{gens} | {rels}>"


def presentation_from_complex(X: TwoComplex) -> Presentation:
    """Edge-path group: generators are the edges off a BFS spanning tree rooted at 0."""
    G = X.graph
    if not G.is_connected():
        raise GraphError("presentation_from_complex requires a connected complex")
    parent = G.spanning_tree(0)
    tree = {(min(v, p), max(v, p)) for v, p in parent.items() if p is not None}
    gen = {}
    for e in X.edges:
        if e not in tree:
            gen[e] = len(gen) + 1
    relators = []
    for f in X.faces:
        word = []
        for u, v in zip(f, f[1:] + f[:1]):
            g = gen.get((min(u, v), max(u, v)))
            if g is not None:
                word.append(g if u < v else -g)
        relators.append(cyclic_reduce(word))
    return Presentation(len(gen), relators)


def abelianize(P: Presentation) -> AbelianGroupDesc:
    """Invariants of the relator exponent-sum matrix."""
    rows = []
    for r in P.relators:
        row: dict[int, int] = {}
        for x in r:
            j = abs(x) - 1
            row[j] = row.get(j, 0) + (1 if x > 0 else -1)
        rows.append(row)
    snf = smith_normal_form(rows) if any(rows) else None
    r = snf.rank if snf else 0
    return AbelianGroupDesc(P.n_generators - r, tuple(snf.torsion) if snf else ())


def _substitute(word: Word, g: int, image: Word) -> Word:
    out: list[int] = []
    inv = invert(image)
    for x in word:
        if x == g:
            out.extend(image)
        elif x == -g:
            out.extend(inv)
        else:
            out.append(x)
    return cyclic_reduce(out)


def _drop_generator(relators: list[Word], g: int) -> list[Word]:
    def shift(x):
        a = abs(x)
        return x if a < g else (a - 1) * (1 if x > 0 else -1)
    return [tuple(shift(x) for x in r) for r in relators]


def _tidy(relators: Iterable[Word]) -> list[Word]:
    seen, out = set(), []
    for r in relators:
        r = cyclic_reduce(r)
        if not r:
            continue
        key = _canonical(r)
        if key not in seen:
            seen.add(key)
            out.append(r)
    out.sort(key=lambda w: (len(w), _canonical(w)))
    return out


def _eliminate_once(n: int, relators: list[Word], max_length: int):
    """One generator elimination, shortest relator first. None if nothing applies."""
    for idx, r in enumerate(relators):
        counts: dict[int, int] = {}
        for x in r:
            counts[abs(x)] = counts.get(abs(x), 0) + 1
        for g in sorted(a for a, c in counts.items() if c == 1):
            pos = next(i for i, x in enumerate(r) if abs(x) == g)
            rot = r[pos:] + r[:pos]  # g^e W = 1
            rest = rot[1:]
            image = invert(rest) if rot[0] > 0 else rest
            others = [_substitute(w, g, image) for k, w in enumerate(relators) if k != idx]
            if sum(map(len, others)) > max_length:
                continue
            return n - 1, _tidy(_drop_generator(others, g))
    return None


def _nielsen_pass(n: int, relators: list[Word]) -> list[Word] | None:
    """Try ``a -> a b^{+-1}`` / ``a -> b^{+-1} a``; keep the first that shortens the total."""
    total = sum(map(len, relators))
    for a in range(1, n + 1):
        for b in range(1, n + 1):
            if a == b:
                continue
            for image in ((a, b), (a, -b), (b, a), (-b, a)):
                cand = [_substitute(w, a, image) for w in relators]
                if sum(map(len, cand)) < total:
                    return _tidy(cand)
    return None


def tietze_simplify(P: Presentation, budget: int = 10_000, max_length: int = 100_000
                    ) -> Presentation:
    """Simplify by moves that keep the group's isomorphism type.

    Moves: free and cyclic reduction, dropping empty and duplicate relators,
    eliminating a generator that occurs exactly once in some relator, and
    length-reducing free-group automorphisms of a pair of generators. At most
    ``budget`` moves are made.
    """
    n, rels = P.n_generators, _tidy(P.relators)
    steps = 0
    while steps < budget:
        res = _eliminate_once(n, rels, max_length)
        if res is not None:
            n, rels = res
            steps += 1
            continue
        if n <= 12:
            nxt = _nielsen_pass(n, rels)
            if nxt is not None:
                rels = nxt
                steps += 1
                continue
        break
    return Presentation(n, rels)


def describe(P: Presentation) -> dict:
    """What can be said about the group without solving word problems."""
    S = tietze_simplify(P)
    out = {"generators": S.n_generators, "relators": len(S.relators),
           "abelianization": abelianize(S).to_dict()}
    if S.n_generators == 0:
        out["identified"] = "trivial"
    elif not S.relators:
        out["identified"] = f"free of rank {S.n_generators}"
    else:
        out["identified"] = None
    return out
