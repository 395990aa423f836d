"""Exhaustive property suites over a corpus of small skew shapes.

Each suite returns a :class:`SuiteResult` carrying the number of cases it
checked and, on failure, a reproducible witness (shape, bound, tableau).
"""

from __future__ import annotations

import itertools
import json
import random
from dataclasses import dataclass
from typing import Callable, Iterator

from .reading import height_vector, reading_word, reconstruct
from .rpp_crystal import (
    MIXED, PURE_HIGH, PURE_LOW, column_pairing, column_word_positions, crystal_graph,
    lower_rpp, raise_rpp, resolution_steps, restrict, is_benign, step_bound,
)
from .shapes import Partition, SkewShape, skew_corpus
from .symfunc import (
    elegant_table, expand_in_schur, g_poly, g_refined, h_coeffs, h_coeffs_refined,
    SparsePoly, lr_classical, marginalize, refined_from_coeffs, schur, skew_schur, t_count,
)
from .tableaux import Filling, ceq, enumerate_rpp, rpp_weight
from .word_crystal import is_lattice, lower_word, pairing, raise_word, word_weight


@dataclass
class SuiteResult:
    name: str
    checked: int
    failure: str | None = None

    @property
    def ok(self) -> bool:
        return self.failure is None

    def report(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        line = f"{self.name}: {status} ({self.checked} cases)"
        if self.failure:
            line += f"\n  counterexample: {self.failure}"
        return line


class _Failed(Exception):
    pass


def _witness(shape: SkewShape, m: int, t: Filling | None = None, **extra) -> str:
    data = {"shape": str(shape), "m": m}
    if t is not None:
        data["tableau"] = t.to_json()
    data.update({k: (list(v) if isinstance(v, tuple) else v) for k, v in extra.items()})
    return json.dumps(data, default=str)


def _expect(cond: bool, witness: Callable[[], str]) -> None:
    if not cond:
        raise _Failed(witness())


def corpus(max_cells: int, max_entry: int) -> Iterator[tuple[SkewShape, int]]:
    for shape in skew_corpus(max_cells):
        for m in range(1, max_entry + 1):
            yield shape, m


def _run(name: str, body: Callable[[], Iterator[None]]) -> SuiteResult:
    checked = 0
    try:
        for _ in body():
            checked += 1
    except _Failed as exc:
        return SuiteResult(name, checked, str(exc))
    return SuiteResult(name, checked)


def suite_words(max_len: int = 8, max_entry: int = 3, **_) -> SuiteResult:
    """E_i/F_i inverse pair, weight shift and lattice equivalence on all short words."""
    m = max_entry

    def body():
        for n in range(max_len + 1):
            for s in itertools.product(range(1, m + 1), repeat=n):
                w = word_weight(s, m)
                for i in range(1, m):
                    up, down = raise_word(s, i), lower_word(s, i)
                    wit = lambda: json.dumps({"word": s, "i": i})
                    if up is not None:
                        _expect(lower_word(up, i) == s, wit)
                        wu = word_weight(up, m)
                        _expect(wu[i - 1] == w[i - 1] + 1 and wu[i] == w[i] - 1, wit)
                    if down is not None:
                        _expect(raise_word(down, i) == s, wit)
                    p = pairing(s, i)
                    sub = tuple(x for x in s if x in (i, i + 1))
                    q = pairing(sub, i)
                    _expect(len(p.unmatched_opens) == len(q.unmatched_opens)
                            and len(p.unmatched_closes) == len(q.unmatched_closes), wit)
                lattice = is_lattice(s)
                _expect(lattice == all(raise_word(s, i) is None for i in range(1, m)),
                        lambda: json.dumps({"word": s}))
                if lattice:
                    _expect(all(a >= b for a, b in zip(w, w[1:])), lambda: json.dumps({"word": s}))
                yield

    return _run("words", body)


def suite_reconstruct(max_cells: int = 6, max_entry: int = 3, **_) -> SuiteResult:
    def body():
        for shape, m in corpus(max_cells, max_entry):
            for t in enumerate_rpp(shape, m):
                r, h = reading_word(t), height_vector(t)
                _expect(reconstruct(shape, r, h, m) == t, lambda: _witness(shape, m, t))
                _expect(all(a >= b for a, b in zip(h, h[1:])), lambda: _witness(shape, m, t))
                _expect(word_weight(r, m) == rpp_weight(t), lambda: _witness(shape, m, t))
                by_height: dict[int, list[int]] = {}
                for letter, row in zip(r, h):
                    by_height.setdefault(row, []).append(letter)
                _expect(all(v == sorted(v) for v in by_height.values()),
                        lambda: _witness(shape, m, t))
                yield

    return _run("reconstruct", body)


def suite_intertwine(max_cells: int = 6, max_entry: int = 3, **_) -> SuiteResult:
    """Reading word intertwines e_i/f_i with E_i/F_i; e_i and f_i preserve shape, heights, ceq."""

    def body():
        for shape, m in corpus(max_cells, max_entry):
            for t in enumerate_rpp(shape, m):
                word, heights, stat, w = reading_word(t), height_vector(t), ceq(t), rpp_weight(t)
                for i in range(1, m):
                    wit = lambda: _witness(shape, m, t, i=i)
                    down, up = lower_rpp(t, i), raise_rpp(t, i)
                    fw, ew = lower_word(word, i), raise_word(word, i)
                    _expect((down is None) == (fw is None), wit)
                    _expect((up is None) == (ew is None), wit)
                    if down is not None:
                        _expect(down.is_rpp() and reading_word(down) == fw, wit)
                        _expect(raise_rpp(down, i) == t, wit)
                        _expect(height_vector(down) == heights and ceq(down) == stat, wit)
                        wd = rpp_weight(down)
                        _expect(wd[i - 1] == w[i - 1] - 1 and wd[i] == w[i] + 1, wit)
                    if up is not None:
                        _expect(up.is_rpp() and reading_word(up) == ew, wit)
                        _expect(lower_rpp(up, i) == t, wit)
                        _expect(height_vector(up) == heights and ceq(up) == stat, wit)
                    yield

    return _run("intertwine", body)


def benign_variants(t: Filling, i: int) -> Iterator:
    """Restrictions of ``t`` with any nonempty set of pure columns flipped."""
    rest = restrict(t, i)
    pure = [c for c in rest.columns() if rest.kind(c) in (PURE_LOW, PURE_HIGH)]
    for k in range(1, len(pure) + 1):
        for subset in itertools.combinations(pure, k):
            updates = {
                c: (None if rest.kind(c) == PURE_LOW else rest.supports[c][-1]) for c in subset
            }
            yield rest._with_columns(updates)


def _run_resolution(rest, order):
    steps = list(resolution_steps(rest, order))
    final = steps[-1][2] if steps else rest
    return steps, final.to_filling()


def suite_confluence(max_cells: int = 6, max_entry: int = 3, seed: int = 0, seeds: int = 10, **_):
    """All resolution orders agree, stay within the step bound, and move pure columns monotonically."""
    master = random.Random(seed)

    def body():
        for shape, m in corpus(max_cells, max_entry):
            bound = step_bound(shape)
            for t in enumerate_rpp(shape, m):
                for i in range(1, m):
                    for variant in benign_variants(t, i):
                        start = variant.to_filling()
                        wit = lambda: _witness(shape, m, start, i=i)
                        _expect(is_benign(variant), wit)
                        steps, ref = _run_resolution(variant, "leftmost")
                        _expect(len(steps) <= bound and ref.is_rpp(), wit)
                        _expect(rpp_weight(ref) == rpp_weight(start), wit)
                        _expect(height_vector(ref) == height_vector(start), wit)
                        _expect(_monotone(variant, steps), wit)
                        orders = ["rightmost"] + [master.randrange(2**32) for _ in range(seeds)]
                        for order in orders:
                            _expect(_run_resolution(variant, order)[1] == ref, wit)
                        yield

    return _run("confluence", body)


def _monotone(rest, steps) -> bool:
    """Each step moves an (i+1)-pure column right or an i-pure column left."""
    before = rest
    for a, _, after in steps:
        kb = (before.kind(a), before.kind(a + 1))
        ka = (after.kind(a), after.kind(a + 1))
        high_right = kb[0] == PURE_HIGH and ka[1] == PURE_HIGH
        low_left = kb[1] == PURE_LOW and ka[0] == PURE_LOW
        if not (high_right or low_left):
            return False
        before = after
    return True


def suite_matching(max_cells: int = 6, max_entry: int = 3, **_) -> SuiteResult:
    """Column matching versus reading-word matching, the three implications."""

    def body():
        for shape, m in corpus(max_cells, max_entry):
            for t in enumerate_rpp(shape, m):
                for i in range(1, m):
                    rest = restrict(t, i)
                    positions = column_word_positions(rest)
                    sub = [x for x in reading_word(t) if x in (i, i + 1)]
                    wp = pairing(sub, i)
                    matched = wp.matched_positions()
                    cols, cp = column_pairing(rest)
                    matched_cols = {cols[p] for pair in cp.pairs for p in pair}
                    wit = lambda: _witness(shape, m, t, i=i)
                    _expect(sum(2 if isinstance(v, tuple) else 1 for v in positions.values())
                            == len(sub), wit)
                    for c in rest.columns():
                        kind = rest.kind(c)
                        if kind == PURE_LOW:
                            _expect((positions[c] in matched) == (c in matched_cols), wit)
                        elif kind == MIXED:
                            _expect(positions[c][0] in matched, wit)
                    yield

    return _run("matching", body)


def suite_identity(max_cells: int = 6, max_entry: int = 3, **_) -> SuiteResult:
    def body():
        for shape, m in corpus(max_cells, max_entry):
            oracle = expand_in_schur(g_poly(shape, m))
            rule = h_coeffs(shape, m)
            _expect(oracle == rule, lambda: _witness(shape, m, oracle=oracle, rule=rule))
            yield

    return _run("identity", body)


def suite_refined(max_cells: int = 6, max_entry: int = 3, **_) -> SuiteResult:
    def body():
        for shape, m in corpus(max_cells, max_entry):
            coeffs = h_coeffs_refined(shape, m)
            lhs = g_refined(shape, m)
            _expect(lhs == refined_from_coeffs(coeffs, m, t_count(shape)),
                    lambda: _witness(shape, m))
            _expect(lhs.set_t_to_one() == g_poly(shape, m), lambda: _witness(shape, m))
            _expect(marginalize(coeffs) == h_coeffs(shape, m), lambda: _witness(shape, m))
            yield

    return _run("refined", body)


def suite_symmetry(max_cells: int = 6, max_entry: int = 3, **_) -> SuiteResult:
    def body():
        for shape, m in corpus(max_cells, max_entry):
            g = g_poly(shape, m)
            for j in range(1, m):
                _expect(g.swap_x(j) == g, lambda: _witness(shape, m, swap=j))
            yield

    return _run("symmetry", body)


def suite_topdegree(max_cells: int = 6, max_entry: int = 3, **_) -> SuiteResult:
    def body():
        for shape, m in corpus(max_cells, max_entry):
            top = g_poly(shape, m).x_degree_part(shape.size)
            ss = skew_schur(shape, m)
            _expect(top == ss, lambda: _witness(shape, m))
            lr = {nu: c for nu, c in lr_classical(shape).items() if len(nu) <= m}
            _expect(expand_in_schur(top) == lr, lambda: _witness(shape, m, lr=lr))
            yield

    return _run("topdegree", body)


def suite_elegant(max_cells: int = 6, max_entry: int = 3, **_) -> SuiteResult:
    def body():
        for shape, m in corpus(max_cells, max_entry):
            if shape.inner:
                continue
            h = h_coeffs(shape, m)
            f = elegant_table(shape.outer, m)
            _expect(h == f, lambda: _witness(shape, m, h=h, elegant=f))
            yield

    return _run("elegant", body)


def suite_stability(max_cells: int = 6, max_entry: int = 3, **_) -> SuiteResult:
    def body():
        for shape in skew_corpus(max_cells):
            for m in range(1, max_entry):
                small = h_coeffs(shape, m)
                big = {nu: c for nu, c in h_coeffs(shape, m + 1).items() if len(nu) <= m}
                _expect(small == big, lambda: _witness(shape, m, small=small, big=big))
                yield

    return _run("stability", body)


def check_graph(shape: SkewShape, m: int) -> None:
    g = crystal_graph(shape, m)
    wit = lambda **kw: (lambda: _witness(shape, m, **kw))
    seen_down, seen_up = set(), set()
    for s, i, t in g.edges:
        _expect((s, i) not in seen_down and (t, i) not in seen_up, wit(edge=(s, i, t)))
        seen_down.add((s, i))
        seen_up.add((t, i))
    highest = []
    for comp in g.components:
        _expect(len(comp.highest) == 1, wit(component=comp.vertices))
        top = g.vertices[comp.highest[0]]
        _expect(is_lattice(reading_word(top)), lambda: _witness(shape, m, top))
        _expect(comp.highest_weight is not None, lambda: _witness(shape, m, top))
        total = g_poly_of(g, comp.vertices)
        _expect(total == schur(tuple(comp.highest_weight), m), lambda: _witness(shape, m, top))
        highest.append(comp.highest_weight)
    counts: dict[Partition, int] = {}
    for nu in highest:
        counts[nu] = counts.get(nu, 0) + 1
    _expect(counts == h_coeffs(shape, m), wit(components=counts))


def g_poly_of(graph, members):
    return SparsePoly.from_monomials(graph.m, 0, (rpp_weight(graph.vertices[v]) for v in members))


def suite_components(max_cells: int = 6, max_entry: int = 3, **_) -> SuiteResult:
    def body():
        for shape, m in corpus(max_cells, max_entry):
            check_graph(shape, m)
            yield

    return _run("components", body)


SUITES: dict[str, Callable[..., SuiteResult]] = {
    "words": suite_words,
    "reconstruct": suite_reconstruct,
    "intertwine": suite_intertwine,
    "matching": suite_matching,
    "confluence": suite_confluence,
    "identity": suite_identity,
    "refined": suite_refined,
    "symmetry": suite_symmetry,
    "topdegree": suite_topdegree,
    "elegant": suite_elegant,
    "stability": suite_stability,
    "components": suite_components,
}


def run_suite(name: str, **kwargs) -> list[SuiteResult]:
    names = list(SUITES) if name == "all" else [name]
    return [SUITES[n](**kwargs) for n in names]
