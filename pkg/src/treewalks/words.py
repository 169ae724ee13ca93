"""Walk words over a bare-path context, their block grammar, and the
injective word maps that witness walk-count monotonicity under the
end-to-end path move.

Fix a tree T and a bare path p_0..p_k in it, and let T' be the transform
that moves p_k's outside branches to p_0.  Deleting the path edges splits T
into the component A of p_0, the component B of p_k, and bare interior
vertices.  Each edge gets a label: c_1..c_k along the path, a_i in A, b_i
in B; T' keeps every label (the moved B-edges keep theirs).  A walk is
encoded by its sequence of traversed edge labels with directions dropped.
Words with at least two distinct letters decode to a unique walk; a word
that repeats a single letter decodes to two (one per direction).

Words decompose into blocks: an A-block is a maximal run of a/c letters
starting and ending with an a, a B-block the same with b, and C-blocks are
the leftover c-runs.  A word's type is T0 when it is all c's, otherwise it
is named by the kinds of its first and last non-C blocks: (A,A) -> T11,
(B,B) -> T12, (A,B) -> T21, (B,A) -> T22.  This matches the parity of the
count of separating C-runs because non-C blocks strictly alternate.

The maps:

* f_map rewrites a T-word into a T'-word of the same length and type.  It
  is total on T0/T11/T12 and on closed words of types T21/T22, injective on
  each type, and maps closed words to closed words.  f_inverse undoes it on
  the image.
* g_even / g_odd are self-inverse swaps between walk words rooted at the
  two path endpoints inside the B-side subgraph (even k splits at the path
  midpoint; odd k reflects through the path extended by one designated
  B-neighbor of p_k).
* g_total composes these into an injection from p_0-rooted B-side T-words
  that touch B into their T'-side counterparts; g_total_aside is the mirror
  for the A-side.
* h_map stitches f_map and the g-injections into a length- and
  type-preserving injection on all T-words.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from .transforms import kc_transform, _path_if_bare
from .trees import Tree
from .walks import Walk

__all__ = [
    "Block",
    "BlockSeq",
    "HOST_T",
    "HOST_T2",
    "Letter",
    "PathContext",
    "Word",
    "WordType",
    "block_decompose",
    "build_context",
    "classify",
    "closed_words",
    "conjugate",
    "decode_word",
    "encode_walk",
    "f_inverse",
    "f_map",
    "g_even",
    "g_odd",
    "g_total",
    "g_total_aside",
    "h_map",
    "is_closed_word",
    "parse_word",
    "reverse",
    "split_c_block",
    "validate_word",
    "word_to_str",
    "words_of",
]

Letter = tuple[str, int]  # (kind 'a'|'b'|'c', 1-based index)
Word = tuple[Letter, ...]

HOST_T = "T"
HOST_T2 = "T'"

_PART_KINDS = {None: "abc", "A": "ac", "B": "bc", "P": "c"}


class WordType(Enum):
    T0 = "0"
    T11 = "1.1"
    T12 = "1.2"
    T21 = "2.1"
    T22 = "2.2"


@dataclass(frozen=True, eq=False)
class PathContext:
    """A tree, a bare path p_0..p_k, the edge labeling it induces, and the
    transformed tree with the inherited labeling."""

    tree: Tree
    path: tuple[int, ...]
    transformed_tree: Tree
    a_component: frozenset
    b_component: frozenset
    _edge_label: dict = field(repr=False)  # (u,v) -> Letter, host T
    _edge_label_t2: dict = field(repr=False)
    _label_edge: dict = field(repr=False)  # Letter -> (u,v), host T
    _label_edge_t2: dict = field(repr=False)

    @property
    def k(self) -> int:
        return len(self.path) - 1

    @property
    def p0(self) -> int:
        return self.path[0]

    @property
    def pk(self) -> int:
        return self.path[-1]

    @property
    def labeling(self) -> dict:
        """Edge -> label map for the original tree."""
        return dict(self._edge_label)

    @property
    def labeling_transformed(self) -> dict:
        return dict(self._edge_label_t2)

    def edge_of(self, letter: Letter, host: str) -> tuple[int, int] | None:
        table = self._label_edge if host == HOST_T else self._label_edge_t2
        return table.get(letter)

    def label_of(self, u: int, v: int, host: str) -> Letter | None:
        table = self._edge_label if host == HOST_T else self._edge_label_t2
        return table.get((min(u, v), max(u, v)))

    def b_neighbors_of_pk(self) -> tuple[int, ...]:
        return tuple(
            w for w in self.tree.neighbors(self.pk) if w in self.b_component
        )

    def a_neighbors_of_p0(self) -> tuple[int, ...]:
        return tuple(
            w for w in self.tree.neighbors(self.p0) if w in self.a_component
        )


def _component(t: Tree, root: int, banned_edges: set) -> frozenset:
    seen = {root}
    stack = [root]
    while stack:
        x = stack.pop()
        for y in t.adjacency[x]:
            e = (min(x, y), max(x, y))
            if e in banned_edges or y in seen:
                continue
            seen.add(y)
            stack.append(y)
    return frozenset(seen)


def build_context(t: Tree, x: int, y: int) -> PathContext:
    """Label the tree relative to the bare path from x to y and build the
    transformed tree with the inherited labeling."""
    path = _path_if_bare(t, x, y)
    if path is None:
        raise ValueError(f"({x}, {y}) does not span a bare path")
    path_edges = {
        (min(path[i], path[i + 1]), max(path[i], path[i + 1]))
        for i in range(len(path) - 1)
    }
    a_comp = _component(t, path[0], path_edges)
    b_comp = _component(t, path[-1], path_edges)
    assert not (a_comp & b_comp)

    edge_label: dict[tuple[int, int], Letter] = {}
    for i in range(len(path) - 1):
        u, v = path[i], path[i + 1]
        edge_label[(min(u, v), max(u, v))] = ("c", i + 1)
    a_edges = sorted(e for e in t.edges if e[0] in a_comp and e[1] in a_comp)
    for i, e in enumerate(a_edges):
        edge_label[e] = ("a", i + 1)
    b_edges = sorted(e for e in t.edges if e[0] in b_comp and e[1] in b_comp)
    for i, e in enumerate(b_edges):
        edge_label[e] = ("b", i + 1)
    assert len(edge_label) == t.n - 1

    t2 = kc_transform(t, x, y)
    p0, pk = path[0], path[-1]
    edge_label_t2: dict[tuple[int, int], Letter] = {}
    for (u, v), letter in edge_label.items():
        if letter[0] == "b" and pk in (u, v):
            w = v if u == pk else u
            edge_label_t2[(min(p0, w), max(p0, w))] = letter
        else:
            edge_label_t2[(u, v)] = letter
    assert set(edge_label_t2) == set(t2.edges)

    return PathContext(
        tree=t,
        path=path,
        transformed_tree=t2,
        a_component=a_comp,
        b_component=b_comp,
        _edge_label=edge_label,
        _edge_label_t2=edge_label_t2,
        _label_edge={v: k for k, v in edge_label.items()},
        _label_edge_t2={v: k for k, v in edge_label_t2.items()},
    )


def word_to_str(word: Word) -> str:
    return " ".join(f"{kind}{idx}" for kind, idx in word)


def parse_word(text: str) -> Word:
    letters = []
    for token in text.split():
        kind, idx = token[0], token[1:]
        if kind not in "abc" or not idx.isdigit() or int(idx) < 1:
            raise ValueError(f"bad letter token {token!r}")
        letters.append((kind, int(idx)))
    return tuple(letters)


def _trace(ctx: PathContext, word: Word, start: int, host: str) -> tuple[int, ...] | None:
    """Vertex positions of the walk spelled by `word` from `start` in the
    host, or None when the word is not walkable from there."""
    pos = start
    positions = [start]
    for letter in word:
        edge = ctx.edge_of(letter, host)
        if edge is None:
            return None
        u, v = edge
        if pos == u:
            pos = v
        elif pos == v:
            pos = u
        else:
            return None
        positions.append(pos)
    return tuple(positions)


def encode_walk(ctx: PathContext, walk: Walk, host: str) -> Word:
    """The label sequence traversed by a walk in the given host."""
    letters = []
    for u, v in zip(walk, walk[1:]):
        letter = ctx.label_of(u, v, host)
        if letter is None:
            raise ValueError(f"step ({u}, {v}) is not an edge of host {host}")
        letters.append(letter)
    return tuple(letters)


def decode_word(ctx: PathContext, word: Word, host: str) -> list[Walk]:
    """All walks in the host whose encoding is `word`.  A word over at
    least two distinct letters has at most one; a repeated single letter
    has two (one per direction); invalid words give an empty list."""
    if not word:
        return []
    edge = ctx.edge_of(word[0], host)
    if edge is None:
        return []
    walks = []
    for start in sorted(edge):
        positions = _trace(ctx, word, start, host)
        if positions is not None:
            walks.append(positions)
    return walks


def is_closed_word(ctx: PathContext, word: Word, host: str) -> bool:
    return any(w[0] == w[-1] for w in decode_word(ctx, word, host))


@dataclass(frozen=True)
class Block:
    kind: str  # 'A' | 'B' | 'C'
    letters: Word


@dataclass(frozen=True)
class BlockSeq:
    blocks: tuple[Block, ...]

    def is_proper(self, i: int) -> bool:
        return 0 < i < len(self.blocks) - 1

    @property
    def proper_c_count(self) -> int:
        return sum(
            1
            for i, b in enumerate(self.blocks)
            if b.kind == "C" and self.is_proper(i)
        )

    @property
    def non_c_kinds(self) -> tuple[str, ...]:
        return tuple(b.kind for b in self.blocks if b.kind != "C")


def block_decompose(word: Word) -> BlockSeq:
    """The unique decomposition into maximal A-, B- and C-blocks."""
    if not word:
        raise ValueError("cannot decompose an empty word")
    marks = [(i, letter[0]) for i, letter in enumerate(word) if letter[0] != "c"]
    blocks: list[Block] = []
    cursor = 0
    i = 0
    while i < len(marks):
        j = i
        while j + 1 < len(marks) and marks[j + 1][1] == marks[i][1]:
            j += 1
        start, end = marks[i][0], marks[j][0]
        if cursor < start:
            blocks.append(Block("C", word[cursor:start]))
        blocks.append(Block(marks[i][1].upper(), word[start : end + 1]))
        cursor = end + 1
        i = j + 1
    if cursor < len(word):
        blocks.append(Block("C", word[cursor:]))
    return BlockSeq(tuple(blocks))


def classify(word: Word) -> WordType:
    """Word type from the kinds of the first and last non-C letters."""
    if not word:
        raise ValueError("cannot classify an empty word")
    kinds = [letter[0] for letter in word if letter[0] != "c"]
    if not kinds:
        return WordType.T0
    first, last = kinds[0], kinds[-1]
    if first == "a":
        return WordType.T11 if last == "a" else WordType.T21
    return WordType.T12 if last == "b" else WordType.T22


def conjugate(ctx: PathContext, word: Word) -> Word:
    """The involution c_i -> c_(k+1-i); a- and b-letters are unchanged.
    It identifies B-side words of the original tree with those of the
    transform."""
    k = ctx.k
    return tuple(
        ("c", k + 1 - idx) if kind == "c" else (kind, idx) for kind, idx in word
    )


def reverse(word: Word) -> Word:
    return tuple(reversed(word))


_SPLIT_MODES = {
    # mode: (start is p0?, target picker, use first visit?)
    "last-visit-p0": (True, "p0", False),
    "last-visit-pk": (False, "pk", False),
    "first-visit-pk": (True, "pk", True),
    "first-visit-mid": (True, "mid", True),
}


def split_c_block(ctx: PathContext, cblock: Word, mode: str) -> tuple[Word, Word]:
    """Split a path-walk word at a distinguished visit of its walk.

    The walk's start vertex is implied by the mode: p_0 for all modes
    except last-visit-pk, which starts at p_k.  first-visit-mid targets
    p_(k/2) and needs even k.
    """
    try:
        from_p0, target_name, first = _SPLIT_MODES[mode]
    except KeyError:
        raise ValueError(f"unknown split mode {mode!r}") from None
    if any(kind != "c" for kind, _ in cblock):
        raise ValueError("split_c_block takes pure path words")
    if target_name == "mid":
        if ctx.k % 2 != 0:
            raise ValueError("first-visit-mid needs a path of even length")
        target = ctx.path[ctx.k // 2]
    else:
        target = ctx.p0 if target_name == "p0" else ctx.pk
    start = ctx.p0 if from_p0 else ctx.pk
    positions = _trace(ctx, cblock, start, HOST_T)
    if positions is None:
        raise ValueError(
            f"not a path-walk word from the start implied by mode {mode!r}"
        )
    hits = [i for i, p in enumerate(positions) if p == target]
    if not hits:
        raise ValueError(f"the walk never visits the {mode!r} target")
    cut = hits[0] if first else hits[-1]
    return cblock[:cut], cblock[cut:]


def validate_word(ctx: PathContext, word: Word, host: str) -> bool:
    """Check the block grammar: every block must be a walk word of its side
    subgraph with the endpoint conditions its position forces.  Complete:
    a word passes iff it decodes in the host."""
    if not word:
        return False
    seq = block_decompose(word)
    blocks = seq.blocks
    p0, pk = ctx.p0, ctx.pk
    # In the transform every non-path branch hangs at p_0.
    a_anchor = p0
    b_anchor = pk if host == HOST_T else p0
    for i, blk in enumerate(blocks):
        first_b, last_b = i == 0, i == len(blocks) - 1
        if blk.kind == "C":
            if host == HOST_T:
                prev = blocks[i - 1].kind if not first_b else None
                nxt = blocks[i + 1].kind if not last_b else None
                need_start = {None: None, "A": p0, "B": pk}[prev]
                need_end = {None: None, "A": p0, "B": pk}[nxt]
            else:
                need_start = None if first_b else p0
                need_end = None if last_b else p0
        else:
            anchor = a_anchor if blk.kind == "A" else b_anchor
            need_start = None if first_b else anchor
            need_end = None if last_b else anchor
        if not _block_ok(ctx, blk.letters, host, need_start, need_end):
            return False
    return True


def _block_ok(
    ctx: PathContext,
    letters: Word,
    host: str,
    need_start: int | None,
    need_end: int | None,
) -> bool:
    edge = ctx.edge_of(letters[0], host)
    if edge is None:
        return False
    starts = [need_start] if need_start is not None else sorted(edge)
    for s in starts:
        positions = _trace(ctx, letters, s, host)
        if positions is not None and (need_end is None or positions[-1] == need_end):
            return True
    return False


def words_of(
    ctx: PathContext,
    host: str,
    length: int,
    start: int | None = None,
    end: int | None = None,
    part: str | None = None,
) -> set[Word]:
    """The set of host words of the given length, optionally restricted to
    walks starting/ending at fixed vertices and to a side subgraph
    (part 'A' = A with the path, 'B' = B with the path, 'P' = path only)."""
    kinds = _PART_KINDS[part]
    t = ctx.tree if host == HOST_T else ctx.transformed_tree
    adj: list[list[tuple[int, Letter]]] = [[] for _ in range(t.n)]
    for v in range(t.n):
        for u in t.adjacency[v]:
            letter = ctx.label_of(v, u, host)
            if letter[0] in kinds:
                adj[v].append((u, letter))
    if length == 0:
        sources = [start] if start is not None else range(t.n)
        return {() for v in sources if end is None or v == end}
    out: set[Word] = set()
    sources = [start] if start is not None else list(range(t.n))
    for s in sources:
        stack: list[tuple[int, Word]] = [(s, ())]
        while stack:
            pos, word = stack.pop()
            if len(word) == length:
                if end is None or pos == end:
                    out.add(word)
                continue
            for u, letter in adj[pos]:
                stack.append((u, word + (letter,)))
    return out


def closed_words(ctx: PathContext, host: str, length: int) -> set[Word]:
    """Host words of the given length encoding at least one closed walk."""
    t = ctx.tree if host == HOST_T else ctx.transformed_tree
    out: set[Word] = set()
    for v in range(t.n):
        out |= words_of(ctx, host, length, start=v, end=v)
    return out


# The injective maps.  f_map operates per type with two symmetric block
# surgeries; see the module docstring for the shape of the construction.


def f_map(ctx: PathContext, word: Word, closed: bool = False) -> Word:
    """Rewrite a T-word as a T'-word of the same length and type.

    Total on types T0/T11/T12.  Types T21/T22 are only defined for closed
    words (pass closed=True); the closedness itself is the caller's claim
    and is not re-derived here.
    """
    if not word:
        raise ValueError("cannot map an empty word")
    if not decode_word(ctx, word, HOST_T):
        raise ValueError("word is not valid in the original tree")
    wtype = classify(word)
    if wtype is WordType.T0:
        return word
    if wtype in (WordType.T21, WordType.T22) and not closed:
        raise ValueError(f"type {wtype.value} words are only mapped when closed")
    if wtype in (WordType.T11, WordType.T21):
        return _f_a_first(ctx, word)
    return _f_b_first(ctx, word)


def _f_a_first(ctx: PathContext, word: Word) -> Word:
    """Surgery for words whose first non-C block is an A-block: split each
    C-run that leads from an A-block to a B-block at its walk's last visit
    to p_0, conjugate the B-block, and append the conjugated reversal of
    the split tail after it."""
    blocks = block_decompose(word).blocks
    out: list[Letter] = []
    pending: Word | None = None
    for i, blk in enumerate(blocks):
        if blk.kind == "A":
            out.extend(blk.letters)
        elif blk.kind == "C":
            if 0 < i < len(blocks) - 1 and blocks[i + 1].kind == "B":
                left, right = split_c_block(ctx, blk.letters, "last-visit-p0")
                out.extend(left)
                pending = conjugate(ctx, reverse(right))
            else:
                out.extend(blk.letters)
        else:
            out.extend(conjugate(ctx, blk.letters))
            assert pending is not None, "B-block without a leading C-run"
            out.extend(pending)
            pending = None
    return tuple(out)


def _f_b_first(ctx: PathContext, word: Word) -> Word:
    """Mirror surgery for words starting on the B-side: conjugate B-blocks
    and plain C-runs, split B-to-A runs at the last visit to p_k, emit the
    conjugated head before the A-block and the reversed tail after it."""
    blocks = block_decompose(word).blocks
    out: list[Letter] = []
    pending: Word | None = None
    for i, blk in enumerate(blocks):
        if blk.kind == "B":
            out.extend(conjugate(ctx, blk.letters))
        elif blk.kind == "C":
            if 0 < i < len(blocks) - 1 and blocks[i + 1].kind == "A":
                left, right = split_c_block(ctx, blk.letters, "last-visit-pk")
                out.extend(conjugate(ctx, left))
                pending = reverse(right)
            else:
                out.extend(conjugate(ctx, blk.letters))
        else:
            out.extend(blk.letters)
            assert pending is not None, "A-block without a leading C-run"
            out.extend(pending)
            pending = None
    return tuple(out)


def f_inverse(ctx: PathContext, word: Word, closed: bool = False) -> Word:
    """Left inverse of f_map: defined on the image, recovers the original
    by splitting the merged C-runs at the first visit to p_k."""
    if not word:
        raise ValueError("cannot map an empty word")
    if not decode_word(ctx, word, HOST_T2):
        raise ValueError("word is not valid in the transformed tree")
    wtype = classify(word)
    if wtype is WordType.T0:
        return word
    if wtype in (WordType.T21, WordType.T22) and not closed:
        raise ValueError(f"type {wtype.value} words are only mapped when closed")
    blocks = block_decompose(word).blocks
    out: list[Letter] = []
    i = 0
    if wtype in (WordType.T11, WordType.T21):
        while i < len(blocks):
            blk = blocks[i]
            if blk.kind != "B":
                out.extend(blk.letters)
                i += 1
                continue
            if i + 1 >= len(blocks) or blocks[i + 1].kind != "C":
                raise ValueError("word is not in the image of the map")
            head, tail = split_c_block(ctx, blocks[i + 1].letters, "first-visit-pk")
            out.extend(conjugate(ctx, reverse(head)))
            out.extend(conjugate(ctx, blk.letters))
            out.extend(tail)
            i += 2
    else:
        while i < len(blocks):
            blk = blocks[i]
            if blk.kind == "B":
                out.extend(conjugate(ctx, blk.letters))
                i += 1
            elif blk.kind == "C":
                out.extend(conjugate(ctx, blk.letters))
                i += 1
            else:
                if i + 1 >= len(blocks) or blocks[i + 1].kind != "C":
                    raise ValueError("word is not in the image of the map")
                head, tail = split_c_block(
                    ctx, blocks[i + 1].letters, "first-visit-pk"
                )
                out.extend(reverse(head))
                out.extend(blk.letters)
                out.extend(conjugate(ctx, tail))
                i += 2
    return tuple(out)


def _locate_b_side(ctx: PathContext, word: Word, starts: tuple[int, ...]) -> tuple[int, ...]:
    """Trace a B-side word from the first start vertex that works."""
    for s in starts:
        positions = _trace(ctx, word, s, HOST_T)
        if positions is not None:
            return positions
    raise ValueError(
        f"word does not start at any of {starts} in the B-side subgraph"
    )


def g_even(ctx: PathContext, word: Word) -> Word:
    """Even-k endpoint swap on the B-side subgraph: split at the walk's
    first visit to the path midpoint and conjugate the head.  Self-inverse
    between the p_0- and p_k-rooted word sets that touch B."""
    if ctx.k % 2 != 0:
        raise ValueError("g_even needs a path of even length")
    if any(kind == "a" for kind, _ in word):
        raise ValueError("g_even takes B-side words only")
    if not any(kind == "b" for kind, _ in word):
        raise ValueError("word lacks a b-letter")
    positions = _locate_b_side(ctx, word, (ctx.p0, ctx.pk))
    mid = ctx.path[ctx.k // 2]
    hits = [i for i, p in enumerate(positions) if p == mid]
    if not hits:
        raise ValueError("the walk never visits the path midpoint")
    cut = hits[0]
    return conjugate(ctx, word[:cut]) + word[cut:]


def _reflection_map(ctx: PathContext, u: int) -> dict[Letter, Letter]:
    """Letter involution of the even-length path p_0..p_k,u: c_i maps to
    c_(k+2-i) for i >= 2, and c_1 swaps with the label of the p_k-u edge."""
    k = ctx.k
    u_letter = ctx.label_of(ctx.pk, u, HOST_T)
    table: dict[Letter, Letter] = {}
    for i in range(2, k + 1):
        table[("c", i)] = ("c", k + 2 - i)
    table[("c", 1)] = u_letter
    table[u_letter] = ("c", 1)
    return table


def g_odd(ctx: PathContext, word: Word, u: int) -> Word:
    """Odd-k reflection between the p_1- and p_k-rooted B-side word sets:
    extend the path by the designated B-neighbor u of p_k, split at the
    walk's first visit to p_((k+1)/2), and reflect the head through the
    extended path.  Self-inverse."""
    if ctx.k % 2 != 1:
        raise ValueError("g_odd needs a path of odd length")
    if u not in ctx.b_neighbors_of_pk():
        raise ValueError(f"{u} is not a B-side neighbor of the far endpoint")
    if any(kind == "a" for kind, _ in word):
        raise ValueError("g_odd takes B-side words only")
    if not any(kind == "b" for kind, _ in word):
        raise ValueError("word lacks a b-letter")
    positions = _locate_b_side(ctx, word, (ctx.path[1], ctx.pk))
    mid = ctx.path[(ctx.k + 1) // 2]
    hits = [i for i, p in enumerate(positions) if p == mid]
    if not hits:
        raise ValueError("the walk never visits the reflection midpoint")
    cut = hits[0]
    table = _reflection_map(ctx, u)
    head = tuple(table.get(letter, letter) for letter in word[:cut])
    return head + word[cut:]


def g_total(ctx: PathContext, word: Word) -> Word:
    """Injection from p_0-rooted B-side T-words containing a b-letter into
    p_0-rooted B-side T'-words of the same length containing a b-letter.

    Even k: g_even then conjugate into the transform.  Odd k: strip the
    forced leading c_1, apply g_odd with the smallest B-neighbor of p_k,
    conjugate, then restore the length by repeating the final letter (the
    walk steps back along its last edge)."""
    if not any(kind == "b" for kind, _ in word):
        raise ValueError("word lacks a b-letter")
    if _trace(ctx, word, ctx.p0, HOST_T) is None:
        raise ValueError("word is not a B-side walk word from p_0")
    if ctx.k % 2 == 0:
        return conjugate(ctx, g_even(ctx, word))
    u = min(ctx.b_neighbors_of_pk())
    swapped = g_odd(ctx, word[1:], u)
    image = conjugate(ctx, swapped)
    return image + (image[-1],)


def g_total_aside(ctx: PathContext, word: Word) -> Word:
    """A-side mirror of g_total: injection from p_k-rooted A-side words
    containing an a-letter into p_0-rooted ones of the same length.  The
    A-side subgraph is identical in the tree and its transform, so no
    final reinterpretation is needed."""
    if any(kind == "b" for kind, _ in word):
        raise ValueError("g_total_aside takes A-side words only")
    if not any(kind == "a" for kind, _ in word):
        raise ValueError("word lacks an a-letter")
    positions = _trace(ctx, word, ctx.pk, HOST_T)
    if positions is None:
        raise ValueError("word is not an A-side walk word from p_k")
    k = ctx.k
    if k % 2 == 0:
        mid = ctx.path[k // 2]
        hits = [i for i, p in enumerate(positions) if p == mid]
        cut = hits[0]
        return conjugate(ctx, word[:cut]) + word[cut:]
    # Odd k: strip the forced leading c_k, reflect through the path
    # extended by the smallest A-neighbor of p_0, then restore the length.
    u = min(ctx.a_neighbors_of_p0())
    u_letter = ctx.label_of(ctx.p0, u, HOST_T)
    table: dict[Letter, Letter] = {}
    for i in range(1, k):
        table[("c", i)] = ("c", k - i)
    table[("c", k)] = u_letter
    table[u_letter] = ("c", k)
    rest = word[1:]
    rest_positions = positions[1:]
    mid = ctx.path[(k - 1) // 2]
    hits = [i for i, p in enumerate(rest_positions) if p == mid]
    cut = hits[0]
    head = tuple(table.get(letter, letter) for letter in rest[:cut])
    image = head + rest[cut:]
    return image + (image[-1],)


def h_map(ctx: PathContext, word: Word) -> Word:
    """Length- and type-preserving injection from all T-words into T'-words.

    Types T0/T11/T12 delegate to f_map.  T21 splits before the last
    separating C-run into a T11 prefix (mapped by f) and a p_0-rooted
    B-side suffix (mapped by g_total); T22 is the mirror with the A-side.
    """
    if not word:
        raise ValueError("cannot map an empty word")
    if not decode_word(ctx, word, HOST_T):
        raise ValueError("word is not valid in the original tree")
    wtype = classify(word)
    if wtype in (WordType.T0, WordType.T11, WordType.T12):
        return f_map(ctx, word, closed=False)
    seq = block_decompose(word)
    blocks = seq.blocks
    split_at = max(
        i for i, b in enumerate(blocks) if b.kind == "C" and seq.is_proper(i)
    )
    prefix = tuple(
        letter for b in blocks[:split_at] for letter in b.letters
    )
    suffix = tuple(
        letter for b in blocks[split_at:] for letter in b.letters
    )
    mapped_prefix = f_map(ctx, prefix, closed=False)
    if wtype is WordType.T21:
        return mapped_prefix + g_total(ctx, suffix)
    return mapped_prefix + g_total_aside(ctx, suffix)
