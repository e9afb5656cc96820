"""Verdicts: three-valued outcomes with machine-checkable witnesses.

The quantifiers being decided ("for every subideal", "for every exponent")
range over infinite sets in general, so a bare boolean would overclaim.  A
verdict records how much was actually decided:

  holds-exhaustive    the candidate scope is provably complete (finite ideal
                      lattices; windowed prime-field enumerations), and over
                      it nothing violates;
  holds-within-bounds nothing violates among the supplied candidates / up to
                      the exponent bound;
  fails               a violating witness was found (it re-verifies);
  fails-within-bounds a bounded positive search was exhausted without success
                      (used by reduction-index searches, which have inverted
                      polarity: found = holds).
"""

from __future__ import annotations

from dataclasses import dataclass, field


HOLDS_EXHAUSTIVE = "holds-exhaustive"
HOLDS_WITHIN_BOUNDS = "holds-within-bounds"
FAILS = "fails"
FAILS_WITHIN_BOUNDS = "fails-within-bounds"


@dataclass(frozen=True)
class Verdict:
    outcome: str
    witness: object = None
    n: int | None = None
    n_max: int | None = None
    scope: str | None = None
    transcript: tuple = field(default=(), compare=False, repr=False)

    @property
    def holds(self) -> bool:
        return self.outcome in (HOLDS_EXHAUSTIVE, HOLDS_WITHIN_BOUNDS)

    @property
    def exhaustive(self) -> bool:
        return self.outcome == HOLDS_EXHAUSTIVE

    @classmethod
    def holds_exhaustive(cls, witness=None, n=None, scope=None, transcript=()):
        return cls(HOLDS_EXHAUSTIVE, witness, n, None, scope, tuple(transcript))

    @classmethod
    def holds_bounded(cls, n_max=None, scope=None, transcript=()):
        return cls(HOLDS_WITHIN_BOUNDS, None, None, n_max, scope, tuple(transcript))

    @classmethod
    def fails_definitely(cls, witness=None, n=None, scope=None, transcript=()):
        return cls(FAILS, witness, n, None, scope, tuple(transcript))

    @classmethod
    def fails_bounded(cls, n_max=None, scope=None, transcript=()):
        return cls(FAILS_WITHIN_BOUNDS, None, None, n_max, scope, tuple(transcript))

    def describe(self, render=repr) -> str:
        bits = [self.outcome]
        if self.witness is not None:
            bits.append(f"witness={render(self.witness)}")
        if self.n is not None:
            bits.append(f"n={self.n}")
        if self.n_max is not None:
            bits.append(f"n_max={self.n_max}")
        if self.scope:
            bits.append(f"[{self.scope}]")
        return " ".join(bits)

    def to_json(self, render=repr) -> dict:
        out = {"outcome": self.outcome, "holds": self.holds}
        if self.witness is not None:
            out["witness"] = render(self.witness)
        if self.n is not None:
            out["n"] = self.n
        if self.n_max is not None:
            out["n_max"] = self.n_max
        if self.scope:
            out["scope"] = self.scope
        out["checked"] = len(self.transcript)
        return out


@dataclass(frozen=True)
class Candidates:
    """A deterministic candidate pool plus what completeness it can claim."""

    ideals: tuple
    complete: bool
    description: str

    @classmethod
    def witness_list(cls, ideals, description: str = "supplied candidates"):
        ideals = tuple(ideals)
        return cls(ideals, False, f"{description} ({len(ideals)})")

    @classmethod
    def complete_pool(cls, ideals, description: str):
        ideals = tuple(ideals)
        return cls(ideals, True, f"{description} ({len(ideals)})")
