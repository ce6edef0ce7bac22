"""
Pitch classes, scale/triad templates and the scale catalog.

Tones are plain ints 0..11 (C=0).  Names use sharps for C#, F#, G# and
flats for Eb, Bb; any enharmonic spelling is accepted on input.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cache
from typing import Iterable, Sequence

NAMES = ("C", "C#", "D", "Eb", "E", "F", "F#", "G", "G#", "A", "Bb", "B")

_LETTER = {"C": 0, "D": 2, "E": 4, "F": 5, "G": 7, "A": 9, "B": 11}
_ACCIDENTAL = {"": 0, "#": 1, "♯": 1, "s": 1, "b": -1, "♭": -1, "##": 2, "bb": -2, "♯♯": 2, "♭♭": -2}
_TONE_RE = re.compile(r"^\s*([A-Ga-g])(#|##|♯|♯♯|b|bb|♭|♭♭|s)?\s*$")


class ToneError(ValueError):
    pass


def parse_tone(s: str | int) -> int:
    """'C#' / 'Db' / 'D♭' / 3 -> pitch class."""
    if isinstance(s, int):
        return s % 12
    m = _TONE_RE.match(s)
    if not m:
        raise ToneError(f"unknown tone {s!r}")
    letter, acc = m.group(1).upper(), m.group(2) or ""
    return (_LETTER[letter] + _ACCIDENTAL[acc]) % 12


def tone_name(t: int) -> str:
    return NAMES[t % 12]


def format_tones(ts: Iterable[int], sep: str = ",") -> str:
    return sep.join(tone_name(t) for t in ts)


def transpose_tone(t: int, k: int) -> int:
    return (t + k) % 12


@dataclass(frozen=True)
class ScaleTemplate:
    name: str
    offsets: tuple[int, ...]
    cyclic: bool = False

    def __post_init__(self):
        if not self.offsets or self.offsets[0] != 0:
            raise ValueError(f"{self.name}: offsets must start at 0")
        if len(set(self.offsets)) != len(self.offsets) or not all(0 <= o < 12 for o in self.offsets):
            raise ValueError(f"{self.name}: offsets must be distinct values in 0..11")

    def at(self, root: int | str) -> ScaleInstance:
        return ScaleInstance(parse_tone(root), self)


@dataclass(frozen=True)
class TriadTemplate(ScaleTemplate):
    def __post_init__(self):
        super().__post_init__()
        if len(self.offsets) != 3:
            raise ValueError(f"{self.name}: a triad has three offsets")


@dataclass(frozen=True)
class ScaleInstance:
    root: int
    template: ScaleTemplate

    @property
    def tones(self) -> tuple[int, ...]:
        return tuple((self.root + o) % 12 for o in self.template.offsets)

    @property
    def cyclic(self) -> bool:
        return self.template.cyclic

    @property
    def name(self) -> str:
        return f"{tone_name(self.root)}-{self.template.name}"

    def tone_set(self) -> frozenset[int]:
        return frozenset(self.tones)

    def __str__(self):
        return f"{self.name}: {format_tones(self.tones)}"


def transpose(x, k: int):
    """Raise a tone or scale instance by ``k`` semitones."""
    if isinstance(x, ScaleInstance):
        return ScaleInstance((x.root + k) % 12, x.template)
    return (x + k) % 12


MAJOR = ScaleTemplate("major", (0, 2, 4, 5, 7, 9, 11))
MINOR = ScaleTemplate("minor", (0, 2, 3, 5, 7, 8, 10))
HEXATONIC_MAJOR = ScaleTemplate("hexatonic-major", (0, 2, 4, 5, 7, 9))
HEXATONIC_MINOR = ScaleTemplate("hexatonic-minor", (0, 2, 3, 5, 7, 10))
PENTATONIC_MAJOR = ScaleTemplate("pentatonic-major", (0, 2, 4, 7, 9))
PENTATONIC_MINOR = ScaleTemplate("pentatonic-minor", (0, 3, 5, 7, 10))
DORIAN = ScaleTemplate("dorian", (0, 2, 3, 5, 7, 9, 10))
PHRYGIAN = ScaleTemplate("phrygian", (0, 1, 3, 5, 7, 8, 10))
LYDIAN = ScaleTemplate("lydian", (0, 2, 4, 6, 7, 9, 11))
MIXOLYDIAN = ScaleTemplate("mixolydian", (0, 2, 4, 5, 7, 9, 10))
CHROMATIC = ScaleTemplate("chromatic", tuple(range(12)), cyclic=True)
WHOLE_TONE = ScaleTemplate("whole-tone", (0, 2, 4, 6, 8, 10), cyclic=True)
PYTHAGOREAN_CHAIN = ScaleTemplate("pythagorean-chain", tuple(7 * i % 12 for i in range(12)), cyclic=True)
MESSIAEN_DIMINISHED = ScaleTemplate("messiaen-0369", (0, 3, 6, 9))
MESSIAEN_0167 = ScaleTemplate("messiaen-0167", (0, 1, 6, 7))
MESSIAEN_0268 = ScaleTemplate("messiaen-0268", (0, 2, 6, 8))

MAJOR_TRIAD = TriadTemplate("major-triad", (0, 4, 7))
MINOR_TRIAD = TriadTemplate("minor-triad", (0, 3, 7))
HEXATONIC_MINOR_TRIAD = TriadTemplate("hexatonic-minor-triad", (0, 7, 10))
HEXATONIC_MAJOR_TRIAD = TriadTemplate("hexatonic-major-triad", (0, 7, 9))

GREGORIAN = (DORIAN, PHRYGIAN, LYDIAN, MIXOLYDIAN)
MESSIAEN_FOUR = (MESSIAEN_DIMINISHED, MESSIAEN_0167, MESSIAEN_0268)

WHOLE_TONE_C = frozenset(range(0, 12, 2))
WHOLE_TONE_CS = frozenset(range(1, 12, 2))


@cache
def catalog() -> dict[str, ScaleTemplate]:
    items = [
        MAJOR, MINOR, HEXATONIC_MAJOR, HEXATONIC_MINOR, PENTATONIC_MAJOR, PENTATONIC_MINOR,
        DORIAN, PHRYGIAN, LYDIAN, MIXOLYDIAN, CHROMATIC, WHOLE_TONE, PYTHAGOREAN_CHAIN,
        *MESSIAEN_FOUR,
        MAJOR_TRIAD, MINOR_TRIAD, HEXATONIC_MINOR_TRIAD, HEXATONIC_MAJOR_TRIAD,
    ]
    return {t.name: t for t in items}


def get_template(name: str) -> ScaleTemplate:
    try:
        return catalog()[name.lower()]
    except KeyError:
        raise KeyError(f"unknown scale {name!r}; known: {', '.join(catalog())}") from None


def whole_tone_class(t: int) -> frozenset[int]:
    return WHOLE_TONE_C if t % 2 == 0 else WHOLE_TONE_CS


def ascending_normal_form(tones: Iterable[int], root: int) -> tuple[int, ...]:
    tones = set(tones)
    if root not in tones:
        raise ToneError(f"root {tone_name(root)} not in {format_tones(sorted(tones))}")
    return tuple(sorted(tones, key=lambda t: (t - root) % 12))


def union_of(instances: Sequence[ScaleInstance]) -> frozenset[int]:
    out = frozenset()
    for s in instances:
        out |= s.tone_set()
    return out


def tritone_pairs(tones: Iterable[int]) -> list[tuple[int, int]]:
    ts = set(tones)
    return sorted((t, t + 6) for t in ts if t < 6 and t + 6 in ts)
