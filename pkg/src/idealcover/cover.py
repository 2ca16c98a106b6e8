"""Exact minimal covers of a ring by proper ideals.

A cover is a set of proper side-ideals whose union is the whole ring.
The search space is restricted to maximal ideals: every proper ideal of a
finite ring sits inside a maximal one, so replacing members by maximal
ideals never makes a cover longer.  Cyclic maximal ideals are *forced*:
their generator lies only in ideals that contain the whole cyclic ideal,
so every cover (hence every minimal one) must include them.

Certificates:

  uncoverable-proof          the union of all maximal ideals misses some
                             element, so no cover by proper ideals exists
  forced-equals-upper        the forced ideals alone already cover the
                             ring; optimality is immediate since every
                             cover contains all of them
  exhaustive-branch-and-bound   a completed branch-and-bound run over
                             supersets of the forced set

Covering numbers live in the integers extended by a dedicated INFINITY
marker that compares above every integer; it is never a sentinel value.
"""

import time
from dataclasses import dataclass

from .errors import DEFAULT_GUARDS, GuardExceeded, UncoverableError
from .ideals import enumerate_ideals, full_ideal, maximal_ideals
from .ideals import cyclic_generator


class _Infinity:
    """Top element for covering-number comparisons."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __lt__(self, other):
        return False

    def __le__(self, other):
        return other is self

    def __gt__(self, other):
        return other is not self

    def __ge__(self, other):
        return True

    def __eq__(self, other):
        return other is self

    def __hash__(self):
        return hash("idealcover.INFINITY")

    def __repr__(self):
        return "INFINITY"


INFINITY = _Infinity()


def is_finite(eta):
    return eta is not INFINITY


@dataclass(frozen=True)
class CoverResult:
    eta: object  # positive int or INFINITY
    cover: tuple  # tuple of IdealBasis, empty when INFINITY
    certificate: str
    node_count: int = 0
    elapsed: float = 0.0


def forced_ideals(R, side, guards=DEFAULT_GUARDS, lattice=None):
    """Maximal side-ideals generated by a single element, in canonical order.

    When a cover exists these appear in every cover; when none exists the
    set is still well defined but binds nothing.
    """
    maximal = maximal_ideals(R, side, guards=guards, lattice=lattice)
    return [M for M in maximal if cyclic_generator(M) is not None]


def covering_number(R, side, guards=DEFAULT_GUARDS, mode="auto"):
    """Exact covering number of R by proper side-ideals, with certificate.

    mode="auto" takes the forced-equals-upper shortcut when the forced
    ideals already cover R; mode="search" always runs the branch and
    bound to completion.  Both are exact.
    """
    if mode not in ("auto", "search"):
        raise ValueError(f"mode must be 'auto' or 'search', got {mode!r}")
    start = time.perf_counter()
    deadline = start + guards.time_budget
    lattice = enumerate_ideals(R, side, guards=guards)
    maximal = maximal_ideals(R, side, guards=guards, lattice=lattice)
    universe = full_ideal(R, side).element_mask()

    union = 0
    for M in maximal:
        union |= M.element_mask()
    if union != universe:
        return CoverResult(INFINITY, (), "uncoverable-proof",
                           node_count=0,
                           elapsed=time.perf_counter() - start)

    forced = [M for M in maximal if cyclic_generator(M) is not None]
    seed_mask = 0
    for M in forced:
        seed_mask |= M.element_mask()

    if seed_mask == universe and mode == "auto":
        return CoverResult(len(forced), tuple(forced), "forced-equals-upper",
                           node_count=0,
                           elapsed=time.perf_counter() - start)

    candidates = [M for M in maximal if M not in forced]
    masks = [M.element_mask() for M in candidates]

    # greedy completion for the initial incumbent
    greedy = []
    covered = seed_mask
    while covered != universe:
        best_idx = -1
        best_gain = -1
        for idx in range(len(candidates)):
            if idx in greedy:
                continue
            gain = (masks[idx] | covered).bit_count() - covered.bit_count()
            if gain > best_gain:
                best_gain = gain
                best_idx = idx
        greedy.append(best_idx)
        covered |= masks[best_idx]
    incumbent = greedy
    best_size = len(forced) + len(greedy)

    # branch and bound over supersets of the forced seed
    node_counter = [0]
    element_bits = {}
    rest = universe & ~seed_mask
    while rest:
        low = rest & -rest
        rest ^= low
        bit = low.bit_length() - 1
        element_bits[bit] = [i for i, m in enumerate(masks) if (m >> bit) & 1]

    best = [best_size, list(incumbent)]

    def dfs(selected, covered):
        node_counter[0] += 1
        if node_counter[0] > guards.max_search_nodes:
            raise GuardExceeded("cover search exceeded the node cap",
                                partial=node_counter[0])
        if node_counter[0] % 4096 == 0 and time.perf_counter() > deadline:
            raise GuardExceeded("cover search exceeded the time budget",
                                partial=node_counter[0])
        if covered == universe:
            size = len(forced) + len(selected)
            if size < best[0]:
                best[0] = size
                best[1] = list(selected)
            return
        uncovered = universe & ~covered
        max_gain = 0
        for i, m in enumerate(masks):
            if i in selected:
                continue
            gain = (m & uncovered).bit_count()
            if gain > max_gain:
                max_gain = gain
        if max_gain == 0:
            return
        need = (uncovered.bit_count() + max_gain - 1) // max_gain
        if len(forced) + len(selected) + need >= best[0]:
            return
        # branch on the uncovered element with the fewest covering ideals
        pick_opts = None
        rest = uncovered
        while rest:
            low = rest & -rest
            rest ^= low
            bit = low.bit_length() - 1
            opts = [i for i in element_bits[bit] if i not in selected]
            if pick_opts is None or len(opts) < len(pick_opts):
                pick_opts = opts
                if len(opts) <= 1:
                    break
        if not pick_opts:
            return
        for i in pick_opts:
            dfs(selected + [i], covered | masks[i])

    dfs([], seed_mask)
    cover = list(forced) + [candidates[i] for i in best[1]]
    cover.sort(key=lambda M: M.sort_key())
    certificate = ("forced-equals-upper"
                   if seed_mask == universe else "exhaustive-branch-and-bound")
    if mode == "search":
        certificate = "exhaustive-branch-and-bound"
    return CoverResult(best[0], tuple(cover), certificate,
                       node_count=node_counter[0],
                       elapsed=time.perf_counter() - start)


def minimal_cover(R, side, guards=DEFAULT_GUARDS, mode="auto"):
    """A witness minimal cover; raises UncoverableError when none exists."""
    result = covering_number(R, side, guards=guards, mode=mode)
    if result.eta is INFINITY:
        raise UncoverableError(
            f"no cover of this ring by proper {side} ideals exists")
    return result


@dataclass(frozen=True)
class ElementaryReport:
    """Verdict of the covering-elementary test with per-quotient evidence."""

    side: str
    eta: object
    verdict: bool
    quotients: tuple  # tuple of (IdealBasis, eta of R/I)

    def __bool__(self):
        return self.verdict


def is_eta_elementary(R, side, guards=DEFAULT_GUARDS):
    """True iff R is coverable and every proper quotient covers strictly worse.

    Tests covering_number(R/I, side) > covering_number(R, side) for every
    nonzero two-sided ideal I, with INFINITY above all integers.  Returns
    an ElementaryReport that is truthy on success and lists each quotient.
    """
    from .ring import quotient

    own = covering_number(R, side, guards=guards)
    entries = []
    if own.eta is INFINITY:
        return ElementaryReport(side, INFINITY, False, ())
    verdict = True
    for I in enumerate_ideals(R, "two-sided", guards=guards):
        if I.is_zero():
            continue
        Q, _ = quotient(R, I)
        q_eta = covering_number(Q, side, guards=guards).eta
        entries.append((I, q_eta))
        if not q_eta > own.eta:
            verdict = False
    return ElementaryReport(side, own.eta, verdict, tuple(entries))
