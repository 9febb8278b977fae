"""Assembly objects, pathways, and the exact assembly-index search.

An assembly object here is a non-empty Python string over an arbitrary
alphabet of single characters.  The only joining operation is concatenation
of two already-available objects; every individual symbol is a basic unit
that is always available at zero cost, and every product of a join becomes
reusable.  The assembly index of a string is the minimum number of joins
needed to build it this way.

The exact search is an iterative-deepening DFS over join sequences.  It is
seeded with a cheap greedy witness (upper bound), starts at the doubling
lower bound, restricts intermediate products to substrings of the target
(any product that is not a substring of the target can be deleted from a
minimal path), and memoizes visited product-sets per depth budget.  Results
are cached per canonical (relabelled) string; the cache only ever stores
values that would be recomputed identically, so concurrent use is safe.
"""

from __future__ import annotations

from dataclasses import dataclass

DEFAULT_LENGTH_CAP = 25

_CANON_TOKENS = "0123456789abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ"


class EmptyObjectError(ValueError):
    """An assembly object must be a non-empty string."""


def _check(s: str) -> None:
    if not isinstance(s, str):
        raise TypeError(f"expected str, got {type(s).__name__}")
    if not s:
        raise EmptyObjectError("assembly objects must be non-empty")


def join(left: str, right: str) -> str:
    """Concatenate two available objects into a new one."""
    _check(left)
    _check(right)
    return left + right


@dataclass(frozen=True)
class JoinStep:
    """One join in an assembly pathway.

    ``left`` and ``right`` reference the operands: a single-character
    string means a basic symbol, an int means the product of that earlier
    step (0-based).
    """

    left: str | int
    right: str | int
    product: str


@dataclass(frozen=True)
class AssemblyPath:
    """An ordered witness of joins; its length upper-bounds the index."""

    steps: tuple[JoinStep, ...] = ()

    def __len__(self) -> int:
        return len(self.steps)

    def validate(self, target: str) -> None:
        """Check the recursion invariants and that the path ends at target."""
        _check(target)
        products: list[str] = []
        for i, step in enumerate(self.steps):
            parts = []
            for ref in (step.left, step.right):
                if isinstance(ref, int):
                    if not 0 <= ref < i:
                        raise ValueError(
                            f"step {i} references product {ref}, which does not exist yet"
                        )
                    parts.append(products[ref])
                else:
                    if len(ref) != 1:
                        raise ValueError(f"step {i}: symbol operands are single characters")
                    parts.append(ref)
            if parts[0] + parts[1] != step.product:
                raise ValueError(f"step {i}: product is not the concatenation of its operands")
            products.append(step.product)
        if products:
            if products[-1] != target:
                raise ValueError("final step does not produce the target")
        elif len(target) != 1:
            raise ValueError("an empty path only witnesses a single basic symbol")


@dataclass(frozen=True)
class AssemblyResult:
    """Assembly index of one string plus its witness and bounds."""

    index: int
    witness: AssemblyPath
    exact: bool
    lower: int
    upper: int

    def __post_init__(self) -> None:
        if not self.lower <= self.index <= self.upper:
            raise ValueError("bounds must sandwich the index")


def assembly_lower_bound(s: str) -> int:
    """ceil(log2(len(s))): each join at most doubles the longest object."""
    _check(s)
    return (len(s) - 1).bit_length()


def assembly_upper_bound(s: str) -> tuple[int, AssemblyPath]:
    """Greedy witness: extend a prefix by the longest available piece.

    Always valid, never longer than len(s) - 1 steps, and exact on pure
    doubling strings.
    """
    _check(s)
    steps: list[JoinStep] = []
    avail: dict[str, str | int] = {c: c for c in set(s)}
    built = s[0]
    ref: str | int = s[0]
    while built != s:
        avail[built] = ref
        rest = s[len(built):]
        best, best_ref = "", None
        for obj, r in avail.items():
            if len(obj) > len(best) and rest.startswith(obj):
                best, best_ref = obj, r
        steps.append(JoinStep(ref, best_ref, built + best))
        built += best
        ref = len(steps) - 1
    return len(steps), AssemblyPath(tuple(steps))


def doubling_string(k: int, sym: str = "z") -> tuple[str, AssemblyPath]:
    """The 2**k-fold repeat of one symbol and its k-step doubling witness."""
    if k < 0:
        raise ValueError("k must be >= 0")
    if len(sym) != 1:
        raise ValueError("sym must be a single character")
    s = sym
    steps: list[JoinStep] = []
    ref: str | int = sym
    for i in range(k):
        steps.append(JoinStep(ref, ref, s + s))
        s += s
        ref = i
    return s, AssemblyPath(tuple(steps))


def canonicalize(s: str) -> str:
    """Relabel symbols by first occurrence; preserves the assembly index."""
    _check(s)
    mapping: dict[str, str] = {}
    for ch in s:
        if ch not in mapping:
            if len(mapping) >= len(_CANON_TOKENS):
                raise ValueError("alphabet too large to canonicalize")
            mapping[ch] = _CANON_TOKENS[len(mapping)]
    return s.translate(str.maketrans(mapping))


# canonical string -> (exact index, witness over canonical tokens)
_EXACT_CACHE: dict[str, tuple[int, AssemblyPath]] = {}


def clear_cache() -> None:
    _EXACT_CACHE.clear()


def _search_exact(s: str, upper: int) -> tuple[list[tuple[int, int, int]], list[str]] | None:
    """Branch-and-bound over split decompositions, strictly below ``upper``.

    A minimal pathway contains no junk: every product is the target or an
    operand of a later product, so the product set is the closure of the
    target under chosen binary splits.  The search therefore works top-down:
    keep a set of products still needing a split ("need") and a set already
    scheduled ("done"); splitting the longest needed product costs 1 and
    pushes its non-basic, unscheduled parts onto need.  Cost = number of
    distinct products.

    Returns the step list as (left_id, right_id, product_id) triples in a
    dependency-safe order plus the id -> substring table, or None when no
    pathway shorter than ``upper`` exists.
    """
    n = len(s)
    subs = sorted(
        {s[i:j] for i in range(n) for j in range(i + 1, n + 1)},
        key=lambda t: (len(t), t),
    )
    index_of = {t: i for i, t in enumerate(subs)}
    lengths = [len(t) for t in subs]
    target = index_of[s]

    # every split of a substring yields two substrings, so lookups never miss;
    # ids ascend with (length, lex), so the highest bit of a mask is a
    # longest member.  All state sets below are bitmasks over ids.
    nids = len(subs)
    # per id: [(left, right, mask of non-basic parts), ...]
    split_info: list[list[tuple[int, int, int]]] = []
    for t in subs:
        rows = []
        for k in range(1, len(t)):
            u, v = index_of[t[:k]], index_of[t[k:]]
            pmask = (1 << u if lengths[u] > 1 else 0) | (1 << v if lengths[v] > 1 else 0)
            rows.append((u, v, pmask))
        split_info.append(rows)
    # contains_mask[j] = ids occurring as proper substrings of subs[j]
    contains_mask = [
        sum(1 << i for i, u in enumerate(subs) if len(u) < len(t) and u in t)
        for t in subs
    ]
    # bigram occurrence masks: a join creates at most one new bigram (its
    # boundary), so remaining joins >= count of not-yet-available bigrams
    gram_ids: dict[str, int] = {}
    for i in range(n - 1):
        gram_ids.setdefault(s[i : i + 2], len(gram_ids))
    gram_mask = [
        sum(1 << gram_ids[t[i : i + 2]] for i in range(len(t) - 1)) for t in subs
    ]

    # states carry only the scheduled products still usable as parts of a
    # needed product; anything else cannot occur in the remaining build
    fail: dict[int, int] = {}  # state key -> largest budget proven infeasible
    best_memo: dict[int, tuple[int, dict[int, tuple[int, int]]]] = {}

    def lower_bound(need: int, rel_done: int) -> int:
        # two admissible bounds, take the larger:
        # 1. needed lengths in descending order occupy disjoint length bands;
        #    band (m, l] takes a doubling chain of >= ceil(log2(l / m)) links
        # 2. every bigram of a needed product that no usable scheduled
        #    product carries must be created by a distinct remaining join
        d = 1
        done_grams = 0
        while rel_done:
            i = rel_done.bit_length() - 1
            rel_done ^= 1 << i
            if lengths[i] > d:
                d = lengths[i]
            done_grams |= gram_mask[i]
        lens = []
        need_grams = 0
        while need:
            i = need.bit_length() - 1
            need ^= 1 << i
            lens.append(lengths[i])
            need_grams |= gram_mask[i]
        lb = 0
        last = len(lens) - 1
        for i, l in enumerate(lens):
            m = lens[i + 1] if i < last else 1
            if d > m:
                m = d
            lb += ((l + m - 1) // m - 1).bit_length() or 1
        lb2 = (need_grams & ~done_grams).bit_count()
        return lb if lb >= lb2 else lb2

    def solve(
        need: int, rel_done: int, budget: int
    ) -> tuple[int, dict[int, tuple[int, int]]] | None:
        if not need:
            return 0, {}
        lb = lower_bound(need, rel_done)
        if lb > budget:
            return None
        key = (need << nids) | rel_done
        hit = best_memo.get(key)
        if hit is not None:
            return hit if hit[0] <= budget else None
        if fail.get(key, -1) >= budget:
            return None
        t = need.bit_length() - 1
        rest = need ^ (1 << t)
        known = need | rel_done
        # candidate splits of t, deduplicated and dominance-pruned by the set
        # of new products they would require
        opts: dict[int, tuple[int, int]] = {}
        for u, v, pmask in split_info[t]:
            added = pmask & ~known
            if not added:
                opts = {0: (u, v)}
                break
            if added not in opts:
                opts[added] = (u, v)
        kept = sorted(opts, key=lambda a: (a.bit_count(), a))
        candidates = [
            a for i, a in enumerate(kept) if not any(b & ~a == 0 for b in kept[:i])
        ]
        found: tuple[int, dict[int, tuple[int, int]]] | None = None
        cap = budget
        done_plus = rel_done | (1 << t)
        for added in candidates:
            new_need = rest | added
            usable = 0
            mm = new_need
            while mm:
                i = mm.bit_length() - 1
                mm ^= 1 << i
                usable |= contains_mask[i]
            sub = solve(new_need, done_plus & usable, cap - 1)
            if sub is not None:
                chosen = dict(sub[1])
                chosen[t] = opts[added]
                found = (1 + sub[0], chosen)
                cap = found[0] - 1  # keep searching only for strictly better
                if cap < lb:
                    break
        if found is None:
            if fail.get(key, -1) < budget:
                fail[key] = budget
            return None
        # the improvement loop exhausted all non-dominated splits, so this
        # is the true minimum
        best_memo[key] = found
        return found

    result = solve(1 << target, 0, upper - 1)
    if result is None:
        return None
    _, chosen = result
    steps = [(u, v, t) for t, (u, v) in sorted(chosen.items())]
    return steps, subs


def _path_from_ids(steps: list[tuple[int, int, int]], subs: list[str]) -> AssemblyPath:
    step_of: dict[int, int] = {}
    out: list[JoinStep] = []
    for i, (a, b, c) in enumerate(steps):
        refs: list[str | int] = []
        for part in (a, b):
            refs.append(subs[part] if len(subs[part]) == 1 else step_of[part])
        out.append(JoinStep(refs[0], refs[1], subs[c]))
        step_of[c] = i
    return AssemblyPath(tuple(out))


def _relabel_path(path: AssemblyPath, canon: str, original: str) -> AssemblyPath:
    mapping: dict[str, str] = {}
    for c_tok, o_sym in zip(canon, original):
        mapping.setdefault(c_tok, o_sym)
    table = str.maketrans(mapping)

    def ref(r: str | int) -> str | int:
        return mapping[r] if isinstance(r, str) else r

    return AssemblyPath(
        tuple(
            JoinStep(ref(st.left), ref(st.right), st.product.translate(table))
            for st in path.steps
        )
    )


def assembly_index(s: str, length_cap: int = DEFAULT_LENGTH_CAP) -> AssemblyResult:
    """Exact assembly index with witness, or honest bounds beyond the cap.

    Exact whenever len(s) <= length_cap, and also whenever the doubling
    lower bound meets the greedy upper bound (e.g. pure repeats), which
    needs no search at all.
    """
    _check(s)
    if length_cap < 1:
        raise ValueError("length_cap must be >= 1")
    lower = assembly_lower_bound(s)
    upper, greedy = assembly_upper_bound(s)
    if upper == lower:
        return AssemblyResult(upper, greedy, True, lower, upper)
    if len(s) > length_cap:
        return AssemblyResult(upper, greedy, False, lower, upper)
    canon = canonicalize(s)
    cached = _EXACT_CACHE.get(canon)
    if cached is None:
        found = _search_exact(canon, upper)
        if found is None:
            _, c_greedy = assembly_upper_bound(canon)
            cached = (upper, c_greedy)
        else:
            steps, subs = found
            cached = (len(steps), _path_from_ids(steps, subs))
        _EXACT_CACHE[canon] = cached
    index, c_path = cached
    return AssemblyResult(index, _relabel_path(c_path, canon, s), True, lower, upper)
