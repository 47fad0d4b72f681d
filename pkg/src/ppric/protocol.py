"""Seeded simulation of the multi-server private proximity retrieval scheme.

One server per codeword.  The user draws a random coordinate permutation,
applies it to every codeword (the same permutation for all servers, which
is what the privacy analysis assumes), translates by the user's own word,
and sends each server one proximity query of radius r+s.  Each server
answers with the indices of its database records within the radius, and
the intersection of the answers is exactly the radius-r neighborhood of
the user's word whenever the code verifies.

Randomness comes from splitmix64 (Steele, Lea, and Flood's 64-bit mixer)
driving a Fisher-Yates shuffle, so a transcript is reproducible from its
seed on any platform.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

from .codes import PpricCode, verify_exact
from .errors import CapacityError, FormatError, ParameterError
from .schemes import JOHNSON_SCAN_CAP, JohnsonPpricCode, johnson_verify
from .words import (
    BinaryWord,
    JohnsonWord,
    QaryWord,
    binom,
    distance,
)

_MASK64 = (1 << 64) - 1


class SplitMix64:
    """splitmix64 stream: 64-bit golden-gamma counter plus a finalizer."""

    def __init__(self, seed: int):
        if not 0 <= seed <= _MASK64:
            raise ParameterError("seed must fit in 64 unsigned bits")
        self._state = seed

    def next64(self) -> int:
        self._state = (self._state + 0x9E3779B97F4A7C15) & _MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        """Uniform draw from 0..bound-1 by rejection."""
        if bound <= 0:
            raise ParameterError("bound must be positive")
        limit = _MASK64 + 1 - ((_MASK64 + 1) % bound)
        while True:
            draw = self.next64()
            if draw < limit:
                return draw % bound


def shuffled(items, rng: SplitMix64) -> list:
    """Fisher-Yates, consuming one bounded draw per step."""
    out = list(items)
    for i in range(len(out) - 1, 0, -1):
        j = rng.below(i + 1)
        out[i], out[j] = out[j], out[i]
    return out


# ---------------------------------------------------------------------------
# database and transcript objects
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Database:
    """Replicated record store; every server sees the same copy.

    Records are 1-based: answers and reconstructions speak in indices
    m = 1..M.
    """

    records: tuple

    def __post_init__(self):
        if not self.records:
            raise ParameterError("a database needs at least one record")
        first = self.records[0]
        for rec in self.records[1:]:
            if type(rec) is not type(first):
                raise ParameterError("mixed record kinds in one database")

    @property
    def size(self) -> int:
        return len(self.records)

    def record(self, m: int):
        if not 1 <= m <= len(self.records):
            raise ParameterError(f"record index {m} out of 1..{len(self.records)}")
        return self.records[m - 1]

    def neighborhood(self, x, radius: int) -> set[int]:
        """Ground-truth index set { m : d(x, record m) <= radius }."""
        return {
            m for m, rec in enumerate(self.records, start=1)
            if distance(x, rec) <= radius
        }

    @classmethod
    def from_text(cls, text: str, kind: str = "binary", q: int = 2,
                  n: int = 0) -> "Database":
        """One word per line; blank lines and '#' comments are skipped."""
        records = []
        for lineno, raw in enumerate(text.splitlines(), start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            try:
                if kind == "binary":
                    records.append(BinaryWord.from_string(line))
                elif kind == "qary":
                    records.append(QaryWord.from_string(q, line))
                elif kind == "johnson":
                    records.append(JohnsonWord.from_string(n, line))
                else:
                    raise ParameterError(f"unknown record kind {kind!r}")
            except FormatError as exc:
                raise FormatError(str(exc), line=lineno) from exc
        if not records:
            raise FormatError("no records in database text")
        return cls(tuple(records))


def load_database(path: str, kind: str = "binary", q: int = 2,
                  n: int = 0) -> Database:
    with open(path, encoding="utf-8") as fh:
        return Database.from_text(fh.read(), kind=kind, q=q, n=n)


@dataclass(frozen=True)
class Query:
    vector: object
    radius: int

    def to_json_dict(self) -> dict:
        return {"vector": self.vector.to_string(), "radius": self.radius}


@dataclass(frozen=True)
class ProtocolTranscript:
    seed: int
    permutation: object
    queries: tuple[Query, ...]
    answers: tuple[frozenset[int], ...]
    reconstructed: frozenset[int]
    privacy_level: float | None

    def to_json_dict(self) -> dict:
        return {
            "seed": self.seed,
            "permutation": self.permutation,
            "queries": [qu.to_json_dict() for qu in self.queries],
            "answers": [sorted(a) for a in self.answers],
            "reconstructed": sorted(self.reconstructed),
            "privacy_level": self.privacy_level,
        }

    def dumps(self, pretty: bool = False) -> str:
        if pretty:
            return json.dumps(self.to_json_dict(), indent=2, sort_keys=True)
        return json.dumps(self.to_json_dict(), sort_keys=True)


# ---------------------------------------------------------------------------
# query generation
# ---------------------------------------------------------------------------

def _require_binary_code(x, code):
    if not isinstance(code, PpricCode):
        raise ParameterError("expected a Hamming-scheme code")
    if x.length != code.params.L:
        raise ParameterError(
            f"record length {x.length} != code length {code.params.L}"
        )


def _binary_queries(x: BinaryWord, code: PpricCode, rng: SplitMix64):
    L = code.params.L
    radius = code.params.r + code.params.s
    perm = shuffled(range(L), rng)
    queries = []
    for z in code.masks():
        pz = 0
        for dst in range(L):
            pz |= (z >> perm[dst] & 1) << dst
        queries.append(Query(BinaryWord(L, x.mask ^ pz), radius))
    return [p + 1 for p in perm], queries


def _qary_queries(x: QaryWord, code: PpricCode, rng: SplitMix64):
    L, q = x.length, x.q
    radius = code.params.r + code.params.s
    perm = shuffled(range(L), rng)
    queries = []
    for z in code.masks():
        symbols = tuple(
            (x.symbols[dst] + (z >> perm[dst] & 1)) % q for dst in range(L)
        )
        queries.append(Query(QaryWord(q, symbols), radius))
    return [p + 1 for p in perm], queries


def _johnson_queries(x: JohnsonWord, code: JohnsonPpricCode, rng: SplitMix64):
    """Relabel the canonical code onto x with two independent shuffles.

    Center elements map to a shuffled copy of x's elements, the rest to a
    shuffled copy of the complement, so every query stays at Johnson
    distance s from x and pairwise distances among queries match the
    codewords'.
    """
    if x.n != code.n or x.length != code.L:
        raise ParameterError("record does not live in the code's J(n, L)")
    inside = shuffled(sorted(x.elements), rng)
    outside = shuffled(sorted(set(range(1, x.n + 1)) - x.elements), rng)
    relabel = {}
    for canon, img in zip(sorted(code.x.elements), inside):
        relabel[canon] = img
    rest = sorted(set(range(1, code.n + 1)) - code.x.elements)
    for canon, img in zip(rest, outside):
        relabel[canon] = img
    radius = code.r + code.s
    queries = [
        Query(JohnsonWord(x.n, frozenset(relabel[e] for e in v.elements)),
              radius)
        for v in code.codewords
    ]
    return {"inside": inside, "outside": outside}, queries


def _check_code(x, code, allow_unverified: bool):
    if isinstance(x, (BinaryWord, QaryWord)):
        _require_binary_code(x, code)
        if allow_unverified:
            return
        # a binary-verified code stays valid over any larger alphabet
        if not verify_exact(code).is_ppric:
            raise ParameterError(
                "code failed verification; pass allow_unverified=True to "
                "simulate with it anyway"
            )
    elif isinstance(x, JohnsonWord):
        if not isinstance(code, JohnsonPpricCode):
            raise ParameterError("expected a Johnson-scheme code")
        if allow_unverified:
            return
        if binom(code.n, code.L) > JOHNSON_SCAN_CAP:
            raise CapacityError(
                "code too large to verify by enumeration; pass "
                "allow_unverified=True to simulate without the check"
            )
        if not johnson_verify(code).is_ppric:
            raise ParameterError(
                "code failed verification; pass allow_unverified=True to "
                "simulate with it anyway"
            )
    else:
        raise ParameterError(f"not a scheme word: {x!r}")


def generate_queries(x, code, seed: int,
                     allow_unverified: bool = False) -> list[Query]:
    """One query per codeword: the shared shuffle applied, then translated.

    Deterministic for a fixed seed.  The code is verified first unless the
    caller explicitly opts out (the opt-out exists so that broken codes
    can be demonstrated end to end).
    """
    _check_code(x, code, allow_unverified)
    rng = SplitMix64(seed)
    if isinstance(x, BinaryWord):
        return _binary_queries(x, code, rng)[1]
    if isinstance(x, QaryWord):
        return _qary_queries(x, code, rng)[1]
    return _johnson_queries(x, code, rng)[1]


def server_answer(db: Database, query: Query) -> set[int]:
    """Indices of records within the query radius; one server's whole job."""
    return {
        m for m, rec in enumerate(db.records, start=1)
        if distance(query.vector, rec) <= query.radius
    }


def reconstruct(answers) -> set[int]:
    """Intersection of the per-server answer sets."""
    answers = list(answers)
    if not answers:
        raise ParameterError("reconstruction needs at least one answer")
    out = set(answers[0])
    for a in answers[1:]:
        out &= set(a)
    return out


def privacy_level(L: int, s: int) -> float:
    """Per-server privacy log2(binom(L, s)) / L for the binary scheme."""
    if L < 1 or not 0 <= s <= L:
        raise ParameterError("need L >= 1 and 0 <= s <= L")
    return math.log2(binom(L, s)) / L


def run_simulation(db: Database, x, r: int, code, seed: int,
                   allow_unverified: bool = False) -> ProtocolTranscript:
    """Full pipeline: queries, per-server answers, intersection, privacy.

    The privacy level is the binary-scheme formula; for q-ary and Johnson
    runs it is None, since no analogue is on record.
    """
    _check_code(x, code, allow_unverified)
    rng = SplitMix64(seed)
    if isinstance(x, BinaryWord):
        if r != code.params.r:
            raise ParameterError(
                f"requested radius {r} != code radius {code.params.r}"
            )
        perm, queries = _binary_queries(x, code, rng)
        privacy = privacy_level(code.params.L, code.params.s)
    elif isinstance(x, QaryWord):
        if r != code.params.r:
            raise ParameterError(
                f"requested radius {r} != code radius {code.params.r}"
            )
        perm, queries = _qary_queries(x, code, rng)
        privacy = None
    else:
        if r != code.r:
            raise ParameterError(f"requested radius {r} != code radius {code.r}")
        perm, queries = _johnson_queries(x, code, rng)
        privacy = None
    for rec in db.records:
        # fail fast on dimension mismatches before any server runs
        distance(x, rec)
    answers = tuple(frozenset(server_answer(db, qu)) for qu in queries)
    return ProtocolTranscript(
        seed=seed,
        permutation=perm,
        queries=tuple(queries),
        answers=answers,
        reconstructed=frozenset(reconstruct(answers)),
        privacy_level=privacy,
    )
