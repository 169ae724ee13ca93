"""Experiment harness: exhaustive verification sweeps over all small trees,
the distance-sum versus walk-count counterexample at full scale, and the
multi-broom path-count optimization.

Every reported relation is recomputed from exact integer counts; sweeps
cache per-tree counts only inside a single run.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from math import sqrt

from .generate import (
    broom,
    double_broom_walks,
    enumerate_free_trees,
    p_broom,
    path_tree,
    star_tree,
)
from .transforms import bare_paths, dc_transform, kc_transform, valency
from .trees import Tree, canonical_code, distance, distances_from, tree_path
from .walks import count_closed_walks, count_ell_paths, count_walks, enumerate_walks, wiener
from .words import (
    HOST_T,
    HOST_T2,
    WordType,
    _trace,
    build_context,
    classify,
    decode_word,
    encode_walk,
    f_map,
    g_even,
    g_odd,
    g_total,
    is_closed_word,
    h_map,
    words_of,
)

__all__ = [
    "BroomProfile",
    "Check",
    "CounterexampleResult",
    "VerificationReport",
    "broom_profile",
    "broom_paths_exact",
    "build_counterexample",
    "dc_reduce",
    "dc_reduce_trace",
    "is_double_broom",
    "is_p_broom",
    "report_to_csv",
    "report_to_json",
    "verify_closed_extremal",
    "verify_injections",
    "verify_kc_monotone",
    "verify_path_extremal",
]


@dataclass(frozen=True)
class Check:
    instance: str
    lhs: object
    rhs: object
    relation: str
    passed: bool


@dataclass
class VerificationReport:
    scope: dict
    checks: list = field(default_factory=list)
    extremal_witnesses: dict = field(default_factory=dict)

    @property
    def violations(self) -> list:
        return [c for c in self.checks if not c.passed]

    @property
    def ok(self) -> bool:
        return not self.violations

    def finalize(self) -> "VerificationReport":
        self.checks.sort(key=lambda c: c.instance)
        return self


def report_to_csv(report: VerificationReport) -> str:
    lines = ["instance,lhs,rhs,relation,passed"]
    for c in report.checks:
        lines.append(f"{c.instance},{c.lhs},{c.rhs},{c.relation},{int(c.passed)}")
    return "\n".join(lines) + "\n"


def report_to_json(report: VerificationReport) -> str:
    payload = {
        "scope": {k: str(v) for k, v in report.scope.items()},
        "ok": report.ok,
        "checks": len(report.checks),
        "violations": [c.__dict__ | {"lhs": str(c.lhs), "rhs": str(c.rhs)} for c in report.violations],
        "extremal_witnesses": report.extremal_witnesses,
    }
    return json.dumps(payload, sort_keys=True, default=str) + "\n"


def _pmap(fn, items, workers: int):
    if workers <= 1:
        return [fn(item) for item in items]
    from concurrent.futures import ProcessPoolExecutor

    chunk = max(1, len(items) // (workers * 4)) if items else 1
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items, chunksize=chunk))


# ---------------------------------------------------------------------------
# Closed-walk extremality and monotonicity sweeps


def verify_closed_extremal(max_n: int, max_len: int, workers: int = 1) -> VerificationReport:
    """For each n <= max_n and even length, the star must attain the
    maximum closed-walk count and the path the minimum, uniquely whenever
    the counts are not all equal."""
    report = VerificationReport(scope={"max_n": max_n, "max_len": max_len})
    for n in range(1, max_n + 1):
        trees = enumerate_free_trees(n)
        values = {}
        star_code = canonical_code(star_tree(n))
        path_code = canonical_code(path_tree(n))
        for ell in range(2, max_len + 1, 2):
            for t in trees:
                values[canonical_code(t)] = count_closed_walks(t, ell)
            vmax = max(values.values())
            vmin = min(values.values())
            argmax = sorted(c for c, v in values.items() if v == vmax)
            argmin = sorted(c for c, v in values.items() if v == vmin)
            base = f"n={n:02d} len={ell:02d}"
            report.checks.append(
                Check(f"{base} star-max", values[star_code], vmax, "==", values[star_code] == vmax)
            )
            report.checks.append(
                Check(f"{base} path-min", values[path_code], vmin, "==", values[path_code] == vmin)
            )
            if vmax != vmin:
                report.checks.append(
                    Check(f"{base} star-unique", len(argmax), 1, "==", len(argmax) == 1)
                )
                report.checks.append(
                    Check(f"{base} path-unique", len(argmin), 1, "==", len(argmin) == 1)
                )
            report.extremal_witnesses[base] = {"max": argmax, "min": argmin}
    return report.finalize()


def _kc_monotone_rows(args) -> list:
    t, index, max_len, kind = args
    counter = count_closed_walks if kind == "closed" else count_walks
    cache: dict[str, tuple] = {}

    def vector(tr: Tree) -> tuple:
        code = canonical_code(tr)
        if code not in cache:
            cache[code] = tuple(counter(tr, ell) for ell in range(1, max_len + 1))
        return cache[code]

    rows = []
    base_vec = vector(t)
    for bp in bare_paths(t):
        x, y = bp.endpoints
        moved = vector(kc_transform(t, x, y))
        pid = "-".join(map(str, bp.vertices))
        for ell in range(1, max_len + 1):
            rows.append(
                Check(
                    f"n={t.n:02d} t={index:03d} path={pid} len={ell:02d} {kind}",
                    base_vec[ell - 1],
                    moved[ell - 1],
                    "<=",
                    base_vec[ell - 1] <= moved[ell - 1],
                )
            )
    return rows


def verify_kc_monotone(
    max_n: int, max_len: int, kind: str = "closed", workers: int = 1
) -> VerificationReport:
    """Counts of the given kind must never decrease under any single
    end-to-end path move, over every tree up to max_n and every bare path."""
    if kind not in ("closed", "all"):
        raise ValueError(f"kind must be 'closed' or 'all', got {kind!r}")
    report = VerificationReport(scope={"max_n": max_n, "max_len": max_len, "kind": kind})
    jobs = []
    for n in range(2, max_n + 1):
        for index, t in enumerate(enumerate_free_trees(n)):
            jobs.append((t, index, max_len, kind))
    for rows in _pmap(_kc_monotone_rows, jobs, workers):
        report.checks.extend(rows)
    return report.finalize()


# ---------------------------------------------------------------------------
# Injection suites


def _word_sets(ctx, walks_by_len, ell):
    words = set()
    closed = set()
    for w in walks_by_len[ell]:
        word = encode_walk(ctx, w, HOST_T)
        words.add(word)
        if w[0] == w[-1]:
            closed.add(word)
    return words, closed


def _injection_rows(args) -> list:
    t, index, max_len, suites = args
    rows = []
    walks_by_len = {ell: enumerate_walks(t, ell) for ell in range(1, max_len + 1)}
    for bp in bare_paths(t):
        ctx = build_context(t, *bp.endpoints)
        pid = "-".join(map(str, bp.vertices))
        base = f"n={t.n:02d} t={index:03d} path={pid}"
        for ell in range(1, max_len + 1):
            tag = f"{base} len={ell:02d}"
            words, closed = _word_sets(ctx, walks_by_len, ell)
            if "f" in suites:
                rows.extend(_check_f(ctx, tag, words, closed))
            if "h" in suites:
                rows.extend(_check_h(ctx, tag, words))
            if "g" in suites:
                rows.extend(_check_g(ctx, tag, ell))
            if "lemmas" in suites:
                rows.extend(_check_lemmas(ctx, tag, ell))
    return rows


def _image_ok(ctx, word, image, require_closed):
    if len(image) != len(word):
        return False
    if classify(image) is not classify(word):
        return False
    if not decode_word(ctx, image, HOST_T2):
        return False
    if require_closed and not is_closed_word(ctx, image, HOST_T2):
        return False
    return True


def _check_f(ctx, tag, words, closed):
    rows = []
    images = []
    good = True
    for word in sorted(closed):
        image = f_map(ctx, word, closed=True)
        good = good and _image_ok(ctx, word, image, require_closed=True)
        images.append(image)
    rows.append(
        Check(
            f"{tag} f-closed-inject",
            len(closed),
            len(set(images)),
            "==",
            good and len(set(images)) == len(closed),
        )
    )
    open_dom = sorted(
        w
        for w in words
        if classify(w) in (WordType.T0, WordType.T11, WordType.T12)
    )
    images = []
    good = True
    for word in open_dom:
        image = f_map(ctx, word, closed=False)
        good = good and _image_ok(ctx, word, image, require_closed=False)
        images.append(image)
    rows.append(
        Check(
            f"{tag} f-general-inject",
            len(open_dom),
            len(set(images)),
            "==",
            good and len(set(images)) == len(open_dom),
        )
    )
    return rows


def _check_h(ctx, tag, words):
    images = []
    good = True
    for word in sorted(words):
        image = h_map(ctx, word)
        good = good and _image_ok(ctx, word, image, require_closed=False)
        images.append(image)
    distinct = len(set(images))
    row = Check(
        f"{tag} h-inject", len(words), distinct, "==", good and distinct == len(words)
    )
    ell = len(next(iter(words))) if words else 0
    rows = [row]
    if words:
        t2_words = words_of(ctx, HOST_T2, ell)
        rows.append(
            Check(
                f"{tag} word-count-monotone",
                len(words),
                len(t2_words),
                "<=",
                len(words) <= len(t2_words),
            )
        )
    return rows


def _has_b(word):
    return any(kind == "b" for kind, _ in word)


def _check_g(ctx, tag, ell):
    rows = []
    p0, pk, p1 = ctx.p0, ctx.pk, ctx.path[1]
    if ctx.k % 2 == 0:
        domain = sorted(
            w for w in words_of(ctx, HOST_T, ell, start=p0, part="B") if _has_b(w)
        )
        images = []
        good = True
        for word in domain:
            image = g_even(ctx, word)
            ok = (
                len(image) == ell
                and _has_b(image)
                and _trace(ctx, image, pk, HOST_T) is not None
                and g_even(ctx, image) == word
            )
            good = good and ok
            images.append(image)
        rows.append(
            Check(
                f"{tag} g-even-involution",
                len(domain),
                len(set(images)),
                "==",
                good and len(set(images)) == len(domain),
            )
        )
    else:
        b_nbrs = ctx.b_neighbors_of_pk()
        if b_nbrs and ell >= 2:
            u = min(b_nbrs)
            domain = sorted(
                w
                for w in words_of(ctx, HOST_T, ell - 1, start=p1, part="B")
                if _has_b(w)
            )
            images = []
            good = True
            for word in domain:
                image = g_odd(ctx, word, u)
                ok = (
                    len(image) == ell - 1
                    and _has_b(image)
                    and _trace(ctx, image, pk, HOST_T) is not None
                    and g_odd(ctx, image, u) == word
                )
                good = good and ok
                images.append(image)
            rows.append(
                Check(
                    f"{tag} g-odd-involution",
                    len(domain),
                    len(set(images)),
                    "==",
                    good and len(set(images)) == len(domain),
                )
            )
    domain = sorted(
        w for w in words_of(ctx, HOST_T, ell, start=p0, part="B") if _has_b(w)
    )
    images = []
    good = True
    for word in domain:
        image = g_total(ctx, word)
        ok = (
            len(image) == ell
            and _has_b(image)
            and _trace(ctx, image, p0, HOST_T2) is not None
        )
        good = good and ok
        images.append(image)
    rows.append(
        Check(
            f"{tag} g-total-inject",
            len(domain),
            len(set(images)),
            "==",
            good and len(set(images)) == len(domain),
        )
    )
    return rows


def _check_lemmas(ctx, tag, ell):
    rows = []
    p0, pk = ctx.p0, ctx.pk
    w_p0 = len(words_of(ctx, HOST_T, ell, start=p0, part="B"))
    path_p0 = len(words_of(ctx, HOST_T, ell, start=p0, part="P"))
    lhs = w_p0 - path_p0
    if ctx.k % 2 == 0:
        w_pk = len(words_of(ctx, HOST_T, ell, start=pk, part="B"))
        path_pk = len(words_of(ctx, HOST_T, ell, start=pk, part="P"))
        rhs = w_pk - path_pk
        rows.append(Check(f"{tag} lemma-even", lhs, rhs, "<=", lhs <= rhs))
    else:
        w_pk = len(words_of(ctx, HOST_T, ell - 1, start=pk, part="B"))
        path_pk = len(words_of(ctx, HOST_T, ell - 1, start=pk, part="P"))
        rhs = w_pk - path_pk
        rows.append(Check(f"{tag} lemma-odd", lhs, rhs, "<=", lhs <= rhs))
    w2_p0 = len(words_of(ctx, HOST_T2, ell, start=p0, part="B"))
    path2_p0 = len(words_of(ctx, HOST_T2, ell, start=p0, part="P"))
    rhs = w2_p0 - path2_p0
    rows.append(Check(f"{tag} corollary-total", lhs, rhs, "<=", lhs <= rhs))
    return rows


def verify_injections(
    max_n: int,
    max_len: int,
    suites: tuple = ("f", "g", "h", "lemmas"),
    workers: int = 1,
) -> VerificationReport:
    """Exhaustively check injectivity, validity, length- and
    type-preservation of the word maps over every context from trees up to
    max_n, plus the endpoint-swap counting inequalities."""
    report = VerificationReport(
        scope={"max_n": max_n, "max_len": max_len, "suites": ",".join(suites)}
    )
    jobs = []
    for n in range(2, max_n + 1):
        for index, t in enumerate(enumerate_free_trees(n)):
            jobs.append((t, index, max_len, tuple(suites)))
    for rows in _pmap(_injection_rows, jobs, workers):
        report.checks.extend(rows)
    return report.finalize()


# ---------------------------------------------------------------------------
# The distance-sum counterexample


@dataclass(frozen=True)
class CounterexampleResult:
    """Exact comparison of a broom against the balanced double broom of the
    same order: distance sums, closed-walk counts at twice the length, and
    total walk counts at the length."""

    c: Fraction
    k: int
    ell: int
    wiener_broom: int
    wiener_double: int
    closed_broom: int
    closed_double: int
    total_broom: int
    total_double: int

    @property
    def verdict(self) -> bool:
        return (
            self.wiener_broom > self.wiener_double
            and self.closed_broom > self.closed_double
        )


def build_counterexample(c, k: int, ell: int) -> CounterexampleResult:
    """Build the broom with (2-c)k path edges and ck leaves and the double
    broom on a k-edge path, both on 2k+1 vertices, and compare exactly.

    c is taken as an exact rational; ck, (2-c)k and k/2 must be integers.
    """
    c = Fraction(c)
    if ell < 2:
        raise ValueError("ell must be >= 2")
    leaves = c * k
    handle = (2 - c) * k
    if leaves.denominator != 1 or handle.denominator != 1 or k % 2 != 0:
        raise ValueError(
            f"c={c} and k={k} must make ck, (2-c)k and k/2 all integral"
        )
    t1 = broom(int(handle), int(leaves))
    t2 = double_broom_walks(k)
    assert t1.n == t2.n == 2 * k + 1
    return CounterexampleResult(
        c=c,
        k=k,
        ell=ell,
        wiener_broom=wiener(t1),
        wiener_double=wiener(t2),
        closed_broom=count_closed_walks(t1, 2 * ell),
        closed_double=count_closed_walks(t2, 2 * ell),
        total_broom=count_walks(t1, ell),
        total_double=count_walks(t2, ell),
    )


# ---------------------------------------------------------------------------
# Fixed-length path extremality


def verify_path_extremal(max_n: int, ell: int, workers: int = 1) -> VerificationReport:
    """For each n <= max_n the maximum count of length-ell paths over all
    trees must equal the best multi-broom value (even ell) or the balanced
    double-broom formula (odd ell)."""
    if ell < 2:
        raise ValueError("ell must be >= 2")
    report = VerificationReport(scope={"max_n": max_n, "ell": ell})
    for n in range(1, max_n + 1):
        trees = enumerate_free_trees(n)
        values = {canonical_code(t): count_ell_paths(t, ell) for t in trees}
        vmax = max(values.values())
        argmax = sorted(c for c, v in values.items() if v == vmax)
        base = f"n={n:02d} len={ell:02d}"
        report.extremal_witnesses[base] = {"max": argmax, "value": vmax}
        if ell == 2:
            expect = (n - 1) * (n - 2) // 2
            report.checks.append(
                Check(f"{base} star-formula", vmax, expect, "==", vmax == expect)
            )
        elif ell % 2 == 0:
            best = 0
            p = 1
            while n >= 1 + p * (ell - 2) // 2 + p:
                best = max(best, count_ell_paths(p_broom(n, ell, p), ell))
                p += 1
            report.checks.append(
                Check(f"{base} broom-max", vmax, best, "==", vmax == best)
            )
        else:
            extra = max(n - ell + 1, 0)
            expect = (extra // 2) * (extra - extra // 2)
            report.checks.append(
                Check(f"{base} double-broom-max", vmax, expect, "==", vmax == expect)
            )
            if ell == 3:
                expect3 = (n - 2) ** 2 // 4 if n >= 2 else 0
                report.checks.append(
                    Check(f"{base} square-formula", vmax, expect3, "==", vmax == expect3)
                )
    return report.finalize()


# ---------------------------------------------------------------------------
# Multi-broom optimization


def broom_paths_exact(n: int, ell: int, p: int) -> int:
    """Exact count of length-ell paths in the balanced p-legged broom:
    pairs of leaves on different legs, with leaf counts as equal as
    possible."""
    half = (ell - 2) // 2
    total = n - 1 - p * half
    if total < p:
        raise ValueError(f"p={p} infeasible for n={n}, ell={ell}")
    base, rem = divmod(total, p)
    sizes = [base + 1] * rem + [base] * (p - rem)
    return (total * total - sum(s * s for s in sizes)) // 2


@dataclass(frozen=True)
class BroomProfile:
    n: int
    ell: int
    rows: tuple  # (p, exact path count)
    argmax_p: int
    best: int
    p_opt: float


def broom_profile(n: int, ell: int) -> BroomProfile:
    """Exact path counts of every feasible balanced p-broom, the optimal p,
    and the real-valued stationary point 1/4 + sqrt(1/16 + (n-1)/(ell-2)).

    The integer argmax always lies within 1 of the stationary point; that
    is asserted here."""
    if ell < 4 or ell % 2 != 0:
        raise ValueError("broom profile needs even ell >= 4")
    half = (ell - 2) // 2
    rows = []
    p = 1
    while n - 1 - p * half >= p:
        rows.append((p, broom_paths_exact(n, ell, p)))
        p += 1
    if not rows:
        raise ValueError(f"no feasible leg count for n={n}, ell={ell}")
    best = max(v for _, v in rows)
    p_opt = 0.25 + sqrt(1.0 / 16.0 + (n - 1) / (ell - 2))
    argmax_p = min(
        (p for p, v in rows if v == best), key=lambda p: abs(p - p_opt)
    )
    if abs(argmax_p - p_opt) > 1:
        raise AssertionError(
            f"argmax {argmax_p} drifted from stationary point {p_opt}"
        )
    return BroomProfile(
        n=n, ell=ell, rows=tuple(rows), argmax_p=argmax_p, best=best, p_opt=p_opt
    )


# ---------------------------------------------------------------------------
# Greedy delete-clone reduction


def _sorted_leaf_pairs(t: Tree):
    leaves = t.leaves()
    for v in leaves:
        for w in leaves:
            if v != w:
                yield v, w


def _improve_valency(t: Tree, ell: int) -> Tree | None:
    """One strict improvement: remove the leaf with smaller distance-ell
    valency in favor of a clone of the larger, over pairs at distance
    other than ell, smallest pair first."""
    for v, w in _sorted_leaf_pairs(t):
        if distance(t, v, w) == ell:
            continue
        if valency(t, v, ell).r < valency(t, w, ell).r:
            return dc_transform(t, v, w)
    return None


def _shrink_diameter(t: Tree, ell: int) -> Tree | None:
    """Replace everything beyond distance ell from a leaf (along a too-long
    leaf pair) with clones of that leaf, one delete-clone at a time."""
    target = None
    for v, w in _sorted_leaf_pairs(t):
        if v < w and distance(t, v, w) > ell:
            target = (v, w)
            break
    if target is None:
        return None
    v, w = target
    path = tree_path(t, v, w)
    vprime = path[ell]
    dist = distances_from(t, v)
    on_v_side = tree_path(t, vprime, v)[1]
    beyond = set()
    stack = [x for x in t.neighbors(vprime) if x != on_v_side]
    seen = set(stack) | {vprime, on_v_side}
    while stack:
        x = stack.pop()
        beyond.add(x)
        for y in t.adjacency[x]:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    del dist
    cur = t
    moved = False
    while beyond:
        u = min(x for x in beyond if cur.degree(x) == 1)
        if valency(cur, u, ell).r > valency(cur, v, ell).r:
            break  # a strictly better move exists; the valency phase takes over
        cur = dc_transform(cur, u, v)
        beyond.discard(u)
        moved = True
    return cur if moved else None


def _merge_leaf_classes(t: Tree, ell: int) -> Tree | None:
    """Merge the sibling class of one leaf onto another leaf at distance
    strictly between 2 and ell, preserving counts (valencies are equal at
    this point in the reduction)."""
    target = None
    for v, w in _sorted_leaf_pairs(t):
        if 2 < distance(t, v, w) < ell:
            target = (v, w)
            break
    if target is None:
        return None
    v, w = target
    parent_v = t.neighbors(v)[0]
    siblings = sorted(u for u in t.neighbors(parent_v) if t.degree(u) == 1)
    cur = t
    moved = False
    for u in siblings:
        if valency(cur, u, ell).r > valency(cur, w, ell).r:
            break
        cur = dc_transform(cur, u, w)
        moved = True
    return cur if moved else None


def dc_reduce_trace(t: Tree, ell: int) -> list[Tree]:
    """All intermediate trees of the greedy delete-clone reduction,
    starting with the input.  Every executed move keeps the length-ell
    path count from decreasing."""
    if ell < 3:
        raise ValueError("reduction needs ell >= 3")
    trace = [t]
    cur = t
    guard = 0
    limit = 200 + 20 * t.n * t.n
    while True:
        guard += 1
        if guard > limit:
            raise RuntimeError("delete-clone reduction did not converge")
        nxt = (
            _improve_valency(cur, ell)
            or _shrink_diameter(cur, ell)
            or _merge_leaf_classes(cur, ell)
        )
        if nxt is None:
            return trace
        trace.append(nxt)
        cur = nxt


def dc_reduce(t: Tree, ell: int) -> Tree:
    """Greedy delete-clone reduction: strict valency improvements first,
    then diameter shrinking, then sibling-class merging, until no move
    applies.  The length-ell path count never decreases."""
    return dc_reduce_trace(t, ell)[-1]


def is_p_broom(t: Tree, ell: int) -> bool:
    """Whether some vertex splits the tree into legs: chains of (ell-2)/2
    vertices with extra leaves allowed only at the chain ends.  Legs with
    empty leaf stars are accepted."""
    if ell < 4 or ell % 2 != 0:
        raise ValueError("p-broom shape needs even ell >= 4")
    half = (ell - 2) // 2
    for c in range(t.n):
        if all(_is_leg(t, c, nb, half) for nb in t.neighbors(c)):
            return True
    return False


def _is_leg(t: Tree, center: int, nb: int, half: int) -> bool:
    prev, cur = center, nb
    for _ in range(half - 1):
        nxt = [x for x in t.neighbors(cur) if x != prev]
        if len(nxt) != 1:
            return False
        prev, cur = cur, nxt[0]
    return all(t.degree(x) == 1 for x in t.neighbors(cur) if x != prev)


def is_double_broom(t: Tree, ell: int) -> bool:
    """Whether the tree is a spine of ell-2 edges with every remaining
    vertex a leaf on one of the spine ends."""
    if ell < 3:
        raise ValueError("double-broom shape needs ell >= 3")
    span = ell - 2
    for x in range(t.n):
        dist = distances_from(t, x)
        for y in range(t.n):
            if dist[y] != span:
                continue
            spine = set(tree_path(t, x, y))
            ok = True
            for v in range(t.n):
                if v in spine:
                    continue
                if t.degree(v) != 1 or t.neighbors(v)[0] not in (x, y):
                    ok = False
                    break
            if ok:
                return True
    return False
