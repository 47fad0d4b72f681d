"""Constant-weight codes with the intersection-covering ball identity.

A code C of weight-s words in F_2^L with radius parameter r is "PPRIC"
(private proximity retrieval intersection covering) when

    B(0, r)  =  intersection over c in C of B(c, r + s).

The containment left-to-right always holds, so the whole question is
whether some word of weight > r sneaks into every ball B(c, r+s).  A word
y of weight w is in B(c, r+s) iff |supp(y) & supp(c)| >= ceil((w-r)/2),
which turns verification into a family of hitting problems: with

    h(gamma) = min { |P| : |P & supp(c)| >= gamma for every codeword c }

a violator of weight w in {r+1..L} exists iff h(ceil((w-r)/2)) <= w.
verify_exact solves h by branch and bound; verify_enumeration re-derives
the verdict from scratch with characteristic vectors over all 2^L words so
the two routes stay independent checks of one another.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .errors import CapacityError, FormatError, ParameterError
from .words import (
    BinaryWord,
    SchemeParams,
    ball_vector,
    min_weight_member,
    weight_vectors,
    xor_translate,
)


@dataclass(frozen=True)
class PpricCode:
    params: SchemeParams
    codewords: tuple[BinaryWord, ...]

    def __post_init__(self):
        L, s = self.params.L, self.params.s
        if not self.codewords:
            raise ParameterError("a code needs at least one codeword")
        seen = set()
        for w in self.codewords:
            if w.length != L:
                raise ParameterError(f"codeword length {w.length} != L={L}")
            if w.weight != s:
                raise ParameterError(f"codeword weight {w.weight} != s={s}")
            if w.mask in seen:
                raise ParameterError("duplicate codeword")
            seen.add(w.mask)

    @property
    def size(self) -> int:
        return len(self.codewords)

    def masks(self) -> list[int]:
        return [w.mask for w in self.codewords]

    # -- JSON interchange ---------------------------------------------------

    def to_json_dict(self) -> dict:
        return {
            "L": self.params.L,
            "s": self.params.s,
            "r": self.params.r,
            "codewords": [w.to_string() for w in self.codewords],
        }

    @classmethod
    def from_json_dict(cls, doc: dict) -> "PpricCode":
        try:
            L, s, r = int(doc["L"]), int(doc["s"]), int(doc["r"])
            words = tuple(BinaryWord.from_string(t) for t in doc["codewords"])
        except (KeyError, TypeError) as exc:
            raise FormatError(f"bad code document: {exc}") from exc
        return cls(SchemeParams(L, s, r), words)

    def dumps(self, pretty: bool = False) -> str:
        doc = self.to_json_dict()
        if pretty:
            return json.dumps(doc, indent=2, sort_keys=True)
        return json.dumps(doc, sort_keys=True)

    @classmethod
    def loads(cls, text: str) -> "PpricCode":
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise FormatError(f"bad JSON: {exc}") from exc
        return cls.from_json_dict(doc)


def make_code(L: int, s: int, r: int, supports) -> PpricCode:
    """Convenience constructor from 1-based coordinate supports."""
    words = tuple(BinaryWord.from_support(L, supp) for supp in supports)
    return PpricCode(SchemeParams(L, s, r), words)


@dataclass(frozen=True)
class Verdict:
    is_ppric: bool
    violator: object | None = None
    gamma_profile: dict[int, int] = field(default_factory=dict)

    def to_json_dict(self) -> dict:
        viol = None
        if self.violator is not None:
            viol = getattr(self.violator, "to_string", lambda: str(self.violator))()
        return {
            "is_ppric": self.is_ppric,
            "violator": viol,
            "gamma_profile": {str(g): h for g, h in sorted(self.gamma_profile.items())},
        }


# ---------------------------------------------------------------------------
# h(gamma): exact minimum multihit weight by branch and bound
# ---------------------------------------------------------------------------

def _greedy_multihit(masks: list[int], L: int, gamma: int) -> int:
    """Feasible multihit set found greedily; used as the initial upper bound.

    Each step adds the coordinate lying in the most still-deficient
    codeword supports, ties to the lowest index.
    """
    chosen = 0
    hits = [0] * len(masks)
    while True:
        deficient = [i for i, h in enumerate(hits) if h < gamma]
        if not deficient:
            return chosen
        best_c, best_cnt = -1, -1
        for c in range(L):
            bit = 1 << c
            if chosen & bit:
                continue
            cnt = sum(1 for i in deficient if masks[i] & bit)
            if cnt > best_cnt:
                best_c, best_cnt = c, cnt
        chosen |= 1 << best_c
        for i in deficient:
            if masks[i] >> best_c & 1:
                hits[i] += 1


def _min_multihit_set(masks: list[int], L: int, gamma: int) -> tuple[int, int] | None:
    """(h(gamma), witness mask), or None when gamma exceeds the weight s.

    Branch and bound over coordinate classes: coordinates with the same
    codeword-membership pattern are interchangeable, so the search only
    decides how many to take from each class.  Branching: the codeword
    with the largest remaining deficit, over the classes meeting it (a
    class passed over is frozen for the whole subtree).  Lower bounds:
    the largest single deficit, and the total deficit divided by the best
    per-coordinate yield among usable classes.
    """
    if gamma <= 0:
        return (0, 0)
    if any(m.bit_count() < gamma for m in masks):
        return None

    greedy = _greedy_multihit(masks, L, gamma)
    best_size = greedy.bit_count()
    best_set = greedy

    groups: dict[int, list[int]] = {}
    for c in range(L):
        key = 0
        for i, m in enumerate(masks):
            if m >> c & 1:
                key |= 1 << i
        if key:
            groups.setdefault(key, []).append(c)
    keys = sorted(groups)
    coords = [groups[k] for k in keys]
    caps = [len(cs) for cs in coords]
    nregions = len(keys)
    take = [0] * nregions
    hits = [0] * len(masks)
    best_take: list[int] | None = None

    def rec(size: int, frozen: int):
        nonlocal best_size, best_take
        worst_def = total_def = defmask = 0
        worst_i = -1
        for i in range(len(masks)):
            d = gamma - hits[i]
            if d > 0:
                total_def += d
                defmask |= 1 << i
                if d > worst_def:
                    worst_def, worst_i = d, i
        if worst_def == 0:
            if size < best_size:
                best_size = size
                best_take = take[:]
            return
        if size + worst_def >= best_size:
            return
        best_yield = 0
        for j in range(nregions):
            if take[j] < caps[j] and not frozen >> j & 1:
                y = (keys[j] & defmask).bit_count()
                if y > best_yield:
                    best_yield = y
        if best_yield == 0:
            return
        if size - (-total_def // best_yield) >= best_size:
            return
        f = frozen
        room = 0  # capacity left for the branched codeword
        for j in range(nregions):
            if keys[j] >> worst_i & 1 and not f >> j & 1:
                room += caps[j] - take[j]
        if room < worst_def:
            return
        for j in range(nregions):
            if not keys[j] >> worst_i & 1 or f >> j & 1 or take[j] >= caps[j]:
                continue
            take[j] += 1
            kk = keys[j]
            while kk:
                lowb = kk & -kk
                hits[lowb.bit_length() - 1] += 1
                kk ^= lowb
            rec(size + 1, f)
            kk = keys[j]
            while kk:
                lowb = kk & -kk
                hits[lowb.bit_length() - 1] -= 1
                kk ^= lowb
            take[j] -= 1
            f |= 1 << j
            room -= caps[j] - take[j]
            if room < worst_def:
                return

    rec(0, 0)
    if best_take is not None:
        chosen = 0
        for j, tk in enumerate(best_take):
            for c in coords[j][:tk]:
                chosen |= 1 << c
        best_set = chosen
    return (best_size, best_set)


def min_multihit_weight(code: PpricCode, gamma: int) -> int | None:
    """h(gamma) for the code's support family; None means infeasible
    (gamma > s, no set can meet a weight-s support that often)."""
    if gamma < 1:
        raise ParameterError("gamma must be >= 1")
    if gamma > code.params.s:
        return None
    res = _min_multihit_set(code.masks(), code.params.L, gamma)
    return None if res is None else res[0]


# ---------------------------------------------------------------------------
# exact verification via the gamma criterion
# ---------------------------------------------------------------------------

def _gamma_range(L: int, s: int, r: int) -> range:
    # weights r+2g-1 must not exceed L, hence g <= ceil((L-r)/2)
    return range(1, min(s, (L - r + 1) // 2) + 1)


def verify_exact(code: PpricCode) -> Verdict:
    """Verdict from the hitting-problem criterion (no 2^L scan).

    A violator of weight w exists iff h(ceil((w-r)/2)) <= w, so it is
    enough to check, for each gamma, whether h(gamma) <= min(r+2*gamma, L).
    The reported violator has minimum violating weight: the minimum
    multihit set padded with the lowest-index unused coordinates.
    """
    L, s, r = code.params.L, code.params.s, code.params.r
    masks = code.masks()
    profile: dict[int, int] = {}
    violator = None
    for gamma in _gamma_range(L, s, r):
        res = _min_multihit_set(masks, L, gamma)
        assert res is not None  # gamma <= s here
        h, hit_set = res
        profile[gamma] = h
        if violator is None and h <= min(r + 2 * gamma, L):
            w = max(h, r + 2 * gamma - 1)
            pad = w - hit_set.bit_count()
            m = hit_set
            c = 0
            while pad > 0:
                if not m >> c & 1:
                    m |= 1 << c
                    pad -= 1
                c += 1
            violator = BinaryWord(L, m)
    return Verdict(violator is None, violator, profile)


def verify_enumeration(code: PpricCode) -> Verdict:
    """Independent verdict from a full scan of F_2^L (L <= 24).

    Characteristic vectors: intersect the translated balls B(c, r+s) and
    compare against B(0, r).  The reported violator is the lowest-weight
    word in the difference, ties to the smallest mask value.
    """
    L, s, r = code.params.L, code.params.s, code.params.r
    if L > 24:
        raise CapacityError(f"enumeration verification capped at L <= 24, got {L}")
    ball_r = ball_vector(L, r)
    ball_big = ball_vector(L, r + s)
    inter = (1 << (1 << L)) - 1
    for m in code.masks():
        inter &= xor_translate(ball_big, m, L)
    extra = inter & ~ball_r
    if not extra:
        return Verdict(True, None, _enumeration_profile(code))
    y = min_weight_member(extra, L)
    return Verdict(False, BinaryWord(L, y), _enumeration_profile(code))


def _enumeration_profile(code: PpricCode) -> dict[int, int]:
    """gamma -> h(gamma) recomputed by brute scan (kept when 2^L is small)."""
    L, s, r = code.params.L, code.params.s, code.params.r
    if L > 20:
        return {}
    masks = code.masks()
    grange = _gamma_range(L, s, r)
    best: dict[int, int] = {}
    for y in range(1 << L):
        g = min((y & m).bit_count() for m in masks)
        if g >= 1:
            w = y.bit_count()
            for gamma in grange:
                if gamma <= g and w < best.get(gamma, L + 1):
                    best[gamma] = w
    return {g: best[g] for g in grange if g in best}


def full_sphere_identity_holds(L: int, s: int, r: int) -> bool:
    """Does B(0,r) equal the intersection of B(z, r+s) over ALL weight-s z?

    Pure enumeration oracle (the triple may be inadmissible; that is the
    point).  True exactly when r + 2s + 1 <= L.
    """
    if not 0 <= r < L:
        raise ParameterError("need 0 <= r < L")
    if s < 0 or s > L:
        raise ParameterError("need 0 <= s <= L")
    if L > 24:
        raise CapacityError(f"identity check capped at L <= 24, got {L}")
    ball_r = ball_vector(L, r)
    ball_big = ball_vector(L, r + s)
    inter = (1 << (1 << L)) - 1
    centers = weight_vectors(L)[s]
    z = centers
    while z:
        low = z & -z
        inter &= xor_translate(ball_big, low.bit_length() - 1, L)
        z ^= low
        if inter == ball_r:
            # every ball contains B(0, r), so the intersection cannot shrink
            # below it; once equal it stays equal
            return True
    return inter == ball_r


def mippr_min_weight(code: PpricCode) -> int | None:
    """Minimum weight of a word meeting every codeword's support (= h(1))."""
    return min_multihit_weight(code, 1)


# ---------------------------------------------------------------------------
# code surgery
# ---------------------------------------------------------------------------

def pad_coordinate(code: PpricCode, extra: int = 1) -> PpricCode:
    """Append ``extra`` always-zero coordinates; verdict is preserved."""
    if extra < 0:
        raise ParameterError("extra must be >= 0")
    L, s, r = code.params.L, code.params.s, code.params.r
    params = SchemeParams(L + extra, s, r)
    words = tuple(BinaryWord(L + extra, w.mask) for w in code.codewords)
    return PpricCode(params, words)


def scale_code(code: PpricCode, alpha: int) -> PpricCode:
    """Blow every coordinate up into a run of alpha copies: (aL, as, r)."""
    if alpha < 1:
        raise ParameterError("alpha must be >= 1")
    L, s, r = code.params.L, code.params.s, code.params.r
    run = (1 << alpha) - 1
    words = []
    for w in code.codewords:
        m = 0
        for i in range(L):
            if w.mask >> i & 1:
                m |= run << (alpha * i)
        words.append(BinaryWord(alpha * L, m))
    return PpricCode(SchemeParams(alpha * L, alpha * s, r), tuple(words))
