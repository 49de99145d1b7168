"""Good arc sequences: construction by innermost slides and validation.

A good positive sequence interpolates from the monodromy image of an arc
back to the arc through consecutively disjoint, non-parallel arcs whose
endpoint quadruples sit positively ordered on the oriented boundary.  The
builder perturbs the image's endpoints off the shared positions, removes
crossings with the target one endpoint slide at a time (each slide follows
the target past one of its endpoints), and bridges consecutive stages with
auxiliary non-separating arcs found by a deterministic position search.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from ..freegroup.words import Monodromy, Word
from .arcs import Arc, ArcError, apply_monodromy, geometric_intersection, \
    intersection_points, parallel
from .realization import non_separating
from .ribbon import FatGraphSurface


class SequenceBuildError(RuntimeError):
    pass


def cyclically_ordered(p1: Fraction, p2: Fraction, p3: Fraction, p4: Fraction) -> bool:
    """True iff p1,p2,p3,p4 are pairwise distinct and appear in this cyclic
    order on the positively oriented boundary circle."""
    pts = [p1 % 1, p2 % 1, p3 % 1, p4 % 1]
    if len(set(pts)) != 4:
        return False
    t = [(p - pts[0]) % 1 for p in pts]
    return 0 < t[1] < t[2] < t[3]


def endpoint_order_ok(a: Arc, b: Arc, sign: int = 1) -> bool:
    """Condition (3) ordering: (start a, start b, end a, end b) occur in
    this order on the oriented boundary (reversed order for sign = -1)."""
    if sign == 1:
        return cyclically_ordered(a.start, b.start, a.end, b.end)
    return cyclically_ordered(b.end, a.end, b.start, a.start)


@dataclass(frozen=True)
class GoodSequence:
    surface: FatGraphSurface
    base_arc: Arc
    monodromy: Monodromy
    sign: int
    arcs: tuple[Arc, ...]

    @property
    def length(self) -> int:
        """The index n of the last arc (arcs are alpha_0 .. alpha_n)."""
        return len(self.arcs) - 1


@dataclass(frozen=True)
class SequenceReport:
    arcs_ok: bool
    first_bad_arc: int | None
    cond1_image: bool
    cond2_returns: bool
    cond3_pairs: bool
    first_bad_pair: int | None
    pair_failure: str | None = None

    @property
    def ok(self) -> bool:
        return (self.arcs_ok and self.cond1_image and self.cond2_returns
                and self.cond3_pairs)


def _oriented_parallel(a: Arc, b: Arc) -> bool:
    surf = a.surface
    for d1 in (1, -1):
        for d2 in (1, -1):
            bridge_in = surf.boundary_path_element(b.start, a.start, d1)
            bridge_out = surf.boundary_path_element(a.end, b.end, d2)
            if (bridge_in * a.word * bridge_out).letters == b.word.letters:
                return True
    return False


def _pair_ok(a: Arc, b: Arc, sign: int) -> tuple[bool, str]:
    if {a.start, a.end} & {b.start, b.end}:
        return False, "shared endpoint"
    if geometric_intersection(a, b) != 0:
        return False, "not disjoint"
    if parallel(a, b):
        return False, "parallel"
    if not endpoint_order_ok(a, b, sign):
        return False, "endpoint order"
    return True, ""


def validate_good_sequence(seq: GoodSequence) -> SequenceReport:
    arcs = seq.arcs
    arcs_ok, first_bad_arc = True, None
    for i, a in enumerate(arcs):
        if not (a.embedded and non_separating(a)):
            arcs_ok, first_bad_arc = False, i
            break

    image = apply_monodromy(seq.monodromy.automorphism, seq.base_arc)
    cond1 = arcs[0] == image or _oriented_parallel(image, arcs[0])
    cond2 = (arcs[-1].start == seq.base_arc.start
             and arcs[-1].end == seq.base_arc.end
             and arcs[-1].word.letters == seq.base_arc.word.letters)

    cond3, first_bad_pair, why = True, None, None
    for i in range(len(arcs) - 1):
        ok, reason = _pair_ok(arcs[i], arcs[i + 1], seq.sign)
        if not ok:
            cond3, first_bad_pair, why = False, i, reason
            break
    return SequenceReport(arcs_ok, first_bad_arc, cond1, cond2, cond3,
                          first_bad_pair, why)


# -- construction ----------------------------------------------------------

def _blocked_positions(surface: FatGraphSurface, arcs: list[Arc]) -> list[Fraction]:
    n = surface.n_slots
    pts = {Fraction(k, n) for k in range(n)}
    for a in arcs:
        pts.add(a.start)
        pts.add(a.end)
    return sorted(pts)


def _nudge(surface: FatGraphSurface, pos: Fraction, side: int,
           blocked: list[Fraction]) -> Fraction:
    gaps = sorted({(b - pos) % 1 for b in blocked if (b - pos) % 1 != 0}
                  | {(pos - b) % 1 for b in blocked if (pos - b) % 1 != 0})
    delta = gaps[0] / 16 if gaps else Fraction(1, 64)
    return (pos + side * delta) % 1


def _gap_midpoints(surface: FatGraphSurface, arcs: list[Arc]) -> list[Fraction]:
    blocked = _blocked_positions(surface, arcs)
    mids = []
    for i, lo in enumerate(blocked):
        hi = blocked[(i + 1) % len(blocked)]
        width = (hi - lo) % 1
        if width:
            mids.append((lo + width / 2) % 1)
    return mids


def _aux_words(rank: int, max_len: int) -> list[Word]:
    letters = [i for i in range(1, rank + 1)] + [-i for i in range(1, rank + 1)]
    out = [Word((x,)) for x in letters]
    if max_len >= 2:
        out += [Word((x, y)) for x in letters for y in letters if y != -x]
    return out


_mid_cache: dict[tuple, list[Word]] = {}


def _seed_mids(surface: FatGraphSurface) -> list[Word]:
    """P_a * seed * P_b^{-1} over window prefixes P and single-band seeds:
    the position-independent middles of slid seed arcs."""
    key = surface.rotation
    if key in _mid_cache:
        return _mid_cache[key]
    prefixes = [surface.boundary_prefix(surface.window_position(w, Fraction(1, 2)))
                for w in surface.window_visit_order]
    mids = []
    for letter in range(1, surface.rank + 1):
        for sgn in (1, -1):
            seed = Word((sgn * letter,))
            for pa in prefixes:
                for pb in prefixes:
                    mids.append(pa * seed * pb.inverse())
    _mid_cache[key] = mids
    return mids


def _aux_word_batches(surface: FatGraphSurface, s_pos: Fraction,
                      e_pos: Fraction) -> list[list[Word]]:
    """Candidate words for an auxiliary arc from s_pos to e_pos, cheapest
    batch first: short words, then slid seed arcs, then seed arcs slid with
    an extra boundary wrap on either side (needed near wound arcs)."""
    p_s_inv = surface.boundary_prefix(s_pos).inverse()
    p_e = surface.boundary_prefix(e_pos)
    eta = surface.boundary_word
    mids = _seed_mids(surface)

    def batch(k1: int, k2: int) -> list[Word]:
        left = p_s_inv * (eta ** k1)
        right = (eta ** k2) * p_e
        seen: set[tuple[int, ...]] = set()
        out = []
        for mid in mids:
            w = left * mid * right
            if len(w) and w.letters not in seen:
                seen.add(w.letters)
                out.append(w)
        out.sort(key=lambda w: (len(w), w.letters))
        return out

    batches = [_aux_words(surface.rank, 2), batch(0, 0)]
    wrapped: list[Word] = []
    for k1, k2 in ((1, 0), (0, 1), (-1, 0), (0, -1), (1, 1), (-1, -1)):
        wrapped += batch(k1, k2)
    wrapped.sort(key=lambda w: (len(w), w.letters))
    batches.append(wrapped[:600])
    return batches


_nonsep_cache: dict[tuple, bool] = {}


def _nonsep(arc: Arc) -> bool:
    s = arc.surface.position_to_window(arc.start)
    e = arc.surface.position_to_window(arc.end)
    key = (arc.surface.rotation, arc.word.letters, s[0], e[0],
           s[0] == e[0] and s[1] < e[1])
    if key not in _nonsep_cache:
        _nonsep_cache[key] = non_separating(arc)
    return _nonsep_cache[key]


def _ordered_pair_positions(before: Arc, s_pos: Fraction, e_pos: Fraction,
                            after: Arc, sign: int) -> bool:
    if sign == 1:
        return (cyclically_ordered(before.start, s_pos, before.end, e_pos)
                and cyclically_ordered(s_pos, after.start, e_pos, after.end))
    return (cyclically_ordered(e_pos, before.end, s_pos, before.start)
            and cyclically_ordered(after.end, e_pos, after.start, s_pos))


def _find_aux(surface: FatGraphSurface, before: Arc, after: Arc, sign: int,
              context: list[Arc]) -> Arc | None:
    """A bridging arc beta with (before, beta) and (beta, after) both
    satisfying condition (3), beta embedded, non-separating, and disjoint
    from every context arc.  Deterministic: position pairs in boundary
    order, shortest candidate word first."""
    positions = _gap_midpoints(surface, context + [before, after])
    pairs = [(s, e) for s in positions for e in positions
             if s != e and _ordered_pair_positions(before, s, e, after, sign)]
    for depth in range(3):
        for s_pos, e_pos in pairs:
            batches = _aux_word_batches(surface, s_pos, e_pos)
            if depth >= len(batches):
                continue
            for w in batches[depth]:
                try:
                    beta = Arc(surface, s_pos, e_pos, w)
                except ArcError:
                    continue
                if not beta.embedded or not _nonsep(beta):
                    continue
                if any(geometric_intersection(beta, c) != 0 for c in context):
                    continue
                if _pair_ok(before, beta, sign)[0] and _pair_ok(beta, after, sign)[0]:
                    return beta
    return None


def _slide_candidates(surface: FatGraphSurface, cur: Arc, target: Arc,
                      context: list[Arc]) -> list[Arc]:
    """Endpoint slides of cur along target: at a crossing, abandon one side
    of cur and run parallel to target past one of its endpoints."""
    base = geometric_intersection(cur, target)
    out = []
    blocked = _blocked_positions(surface, context + [cur, target])
    for (ja, jb, _g) in intersection_points(cur, target):
        wa, wb = cur.word.letters, target.word.letters
        inv = lambda xs: tuple(-x for x in reversed(xs))
        # (kept position, word, slid position, slid position is the end?)
        variants = [
            (cur.start, Word(wa[:ja] + wb[jb:]), target.end, True),
            (cur.start, Word(wa[:ja] + inv(wb[:jb])), target.start, True),
            (cur.end, Word(wb[:jb] + wa[ja:]), target.start, False),
            (cur.end, Word(inv(wb[jb:]) + wa[ja:]), target.end, False),
        ]
        for kept, word, slid_from, slid_is_end in variants:
            for side in (1, -1):
                new_pos = _nudge(surface, slid_from, side, blocked)
                try:
                    if slid_is_end:
                        cand = Arc(surface, kept, new_pos, word)
                    else:
                        cand = Arc(surface, new_pos, kept, word)
                except ArcError:
                    continue
                try:
                    gain = geometric_intersection(cand, target)
                except ArcError:
                    continue
                if gain >= base:
                    continue
                if not cand.embedded or not non_separating(cand):
                    continue
                out.append((gain, len(cand.word), str(cand.word), cand))
    # innermost-like first: remove as little as possible per slide, so the
    # slid arc stays close to the current one and auxiliaries stay findable
    out.sort(key=lambda t: (-t[0], t[1], t[2]))
    return [t[3] for t in out]


def build_good_sequence(arc: Arc, monodromy: Monodromy, sign: int = 1,
                        max_slides: int = 64) -> GoodSequence:
    """Construct a validated good sequence from arc to monodromy(arc).

    The monodromy image shares the arc's endpoints; each of the four ways
    of pushing them off is tried in a fixed order and the first fully
    validated sequence is returned.
    """
    if sign not in (1, -1):
        raise ValueError("sign must be +1 (positive) or -1 (negative)")
    surface = arc.surface
    if not (arc.embedded and non_separating(arc)):
        raise SequenceBuildError("base arc must be embedded and non-separating")
    image = apply_monodromy(monodromy.automorphism, arc)

    blocked = _blocked_positions(surface, [arc])
    last_error = "no admissible endpoint perturbation"
    for ds in (1, -1):
        for de in (-1, 1):
            try:
                alpha0 = Arc(surface,
                             _nudge(surface, image.start, ds, blocked),
                             _nudge(surface, image.end, de, blocked),
                             image.word)
                seq = _extend_to_target(alpha0, arc, monodromy, sign, max_slides)
            except SequenceBuildError as err:
                last_error = str(err)
                continue
            report = validate_good_sequence(seq)
            if report.ok:
                return seq
            last_error = f"validation failed: {report}"
    raise SequenceBuildError(last_error)


def _extend_to_target(alpha0: Arc, target: Arc, monodromy: Monodromy,
                      sign: int, max_slides: int) -> GoodSequence:
    surface = target.surface
    arcs = [alpha0]
    cur = alpha0
    for _ in range(max_slides):
        if geometric_intersection(cur, target) == 0:
            break
        slid = None
        for cand in _slide_candidates(surface, cur, target, [target]):
            beta = _find_aux(surface, cur, cand.reverse(), sign, [cur, cand])
            if beta is not None:
                slid, aux = cand, beta
                break
        if slid is None:
            raise SequenceBuildError("no admissible slide/auxiliary pair found")
        arcs += [aux, slid.reverse(), aux.reverse(), slid]
        cur = slid
    else:
        raise SequenceBuildError("slide budget exhausted without efficiency")

    # close with the target itself, bridged by one or two auxiliaries
    beta = _find_aux(surface, cur, target, sign, [cur, target])
    if beta is not None:
        arcs += [beta, target]
    else:
        done = False
        for beta1 in _aux_probe(surface, cur, target, sign):
            beta2 = _find_aux(surface, beta1, target, sign, [cur, beta1, target])
            if beta2 is not None and _pair_ok(cur, beta1, sign)[0]:
                arcs += [beta1, beta2, target]
                done = True
                break
        if not done:
            raise SequenceBuildError("no closing auxiliary chain found")
    return GoodSequence(surface, target, monodromy, sign, tuple(arcs))


def _aux_probe(surface: FatGraphSurface, before: Arc, target: Arc,
               sign: int, limit: int = 40) -> list[Arc]:
    """First-stage closing candidates: disjoint from both ends, correctly
    ordered after `before`."""
    out: list[Arc] = []
    positions = _gap_midpoints(surface, [before, target])
    for s_pos in positions:
        for e_pos in positions:
            if s_pos == e_pos:
                continue
            batches = _aux_word_batches(surface, s_pos, e_pos)
            for w in (batches[0] + batches[1][:60]):
                if len(out) >= limit:
                    return out
                try:
                    beta = Arc(surface, s_pos, e_pos, w)
                except ArcError:
                    continue
                if not _pair_ok(before, beta, sign)[0]:
                    continue
                if not beta.embedded or not _nonsep(beta):
                    continue
                if geometric_intersection(beta, target) != 0:
                    continue
                out.append(beta)
    return out
