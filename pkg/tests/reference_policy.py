"""Independent transcription of the scoring threshold table.

Deliberately written as declarative predicate rows over exact Fraction
arithmetic, sharing no code with the engine. Used by the equivalence
tests to cross-check every scoring bin; if the engine and this file
disagree, one of them misread the table.
"""
from __future__ import annotations

from fractions import Fraction as F

INVALID = object()  # stands for an invalid/absent turnout
ABSENT = object()  # stands for any absent numeric field

LOW, MEDIUM, HIGH = "Low", "Medium", "High"


def _first_match(rows, *args):
    for predicate, value in rows:
        if predicate(*args):
            return value
    raise AssertionError("no row matched; the table must be total")


# turnout -> score
PARTICIPATION_ROWS = (
    (lambda t: t is INVALID, F(1)),
    (lambda t: t > 40, F(3)),
    (lambda t: F(10) <= t <= F(40), F(2)),
    (lambda t: t < 10, F(1)),
)

# (treasury, circ_share, rel_treasury) -> score; circ_share may be ABSENT
FUNDS_ROWS = (
    (lambda t, c, r: t >= F(10) ** 9, F(3)),
    (lambda t, c, r: t >= F(10) ** 8 and (c is ABSENT or c > 50), F(9, 4)),
    (lambda t, c, r: t >= F(10) ** 8, F(3, 2)),
    (lambda t, c, r: t >= F(10) ** 7 and r >= 10, F(3, 2)),
    (lambda t, c, r: t >= F(10) ** 6 and r >= 5, F(5, 4)),
    (lambda t, c, r: True, F(3, 4)),
)

# (proposals, approval, duration) -> score; approval may be ABSENT
VOTING_ROWS = (
    (lambda p, a, d: p is ABSENT or p < 3, F(1)),
    (lambda p, a, d: a is not ABSENT and a > 70 and F(3) <= d <= F(14), F(3)),
    (lambda p, a, d: a is not ABSENT and F(30) <= a <= F(70) and F(3) <= d <= F(14), F(2)),
    (lambda p, a, d: True, F(1)),
)

# (largest_holder, s_participation, automation_is_yes) -> score
DECENTRALISATION_ROWS = (
    (lambda h, sp, yes: h is ABSENT, F(3, 5)),
    (lambda h, sp, yes: h < 10, F(3)),
    (lambda h, sp, yes: h <= 33 and sp >= 2 and yes, F(12, 5)),
    (lambda h, sp, yes: h <= 33, F(9, 5)),
    (lambda h, sp, yes: h <= 66, F(6, 5)),
    (lambda h, sp, yes: True, F(3, 5)),
)


def ref_participation(turnout) -> F:
    return _first_match(PARTICIPATION_ROWS, turnout)


def ref_funds(treasury, circ_share, rel_treasury) -> F:
    t = F(0) if treasury is ABSENT else F(treasury)
    r = F(0) if rel_treasury is ABSENT else F(rel_treasury)
    c = circ_share if circ_share is ABSENT else F(circ_share)
    return _first_match(FUNDS_ROWS, t, c, r)


def ref_voting(proposals, approval, duration) -> F:
    a = approval if approval is ABSENT else F(approval)
    d = F(-1) if duration is ABSENT else F(duration)  # out of any window
    return _first_match(VOTING_ROWS, proposals, a, d)


def ref_decentralisation(largest_holder, s_participation, automation_is_yes) -> F:
    h = largest_holder if largest_holder is ABSENT else F(largest_holder)
    return _first_match(DECENTRALISATION_ROWS, h, F(s_participation), automation_is_yes)


def ref_band(composite: F) -> str:
    if composite < 6:
        return LOW
    if composite < 9:
        return MEDIUM
    return HIGH


def ref_card(turnout, treasury, circ_share, rel_treasury, proposals, approval,
             duration, largest_holder, automation_is_yes):
    sp = ref_participation(turnout)
    sf = ref_funds(treasury, circ_share, rel_treasury)
    sv = ref_voting(proposals, approval, duration)
    sd = ref_decentralisation(largest_holder, sp, automation_is_yes)
    c = sp + sf + sv + sd
    return sp, sf, sv, sd, c, ref_band(c)
