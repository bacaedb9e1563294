"""Winner determination for the five supported voting rules.

All rules use strict dominance with the unique-winner condition: a winner
must strictly beat every rival in the rule's tally, so ties produce no
winner. With a single candidate every rule declares it the winner, because
the rival quantification is empty. Majority thresholds are evaluated in
exact integer arithmetic (2*count > n).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .core import Election, ScoreMatrix, StrictProfile, restrict_to_candidates, restrict_to_voters


@dataclass(frozen=True)
class WinnerOutcome:
    """Winner (if any) plus the full per-candidate tally for diagnostics.

    `direction` states how tallies compare: "max" means larger is better,
    "min" means smaller is better (Bucklin).
    """

    winner: Optional[int]
    tally: tuple
    direction: str = "max"


def _unique_extreme(tally, direction) -> Optional[int]:
    best = max(tally) if direction == "max" else min(tally)
    winners = [i for i, t in enumerate(tally, start=1) if t == best]
    return winners[0] if len(winners) == 1 else None


def range_winner(scores: ScoreMatrix) -> WinnerOutcome:
    """Candidate with strictly the largest total score, if unique."""
    totals = tuple(sum(row) for row in scores.scores)
    return WinnerOutcome(_unique_extreme(totals, "max"), totals)


def pairwise_advantage(profile: StrictProfile, a: int, b: int) -> int:
    """Number of voters preferring candidate a to candidate b."""
    if a == b:
        raise ValueError("advantage is defined for distinct candidates only")
    return sum(1 for r in profile.rankings if r.index(a) < r.index(b))


def condorcet_winner(profile: StrictProfile) -> WinnerOutcome:
    """Candidate beating every rival in pairwise majority, if one exists.

    The dominance relation may contain cycles, in which case there is no
    winner. The tally is the number of rivals each candidate strictly beats:
    the winner is exactly the candidate beating all m-1.
    """
    m, n = profile.m, profile.n
    adv = [[0] * m for _ in range(m)]
    for r in profile.rankings:
        for pos, c in enumerate(r):
            for d in r[pos + 1 :]:
                adv[c - 1][d - 1] += 1
    beats = tuple(
        sum(1 for k in range(m) if k != i and 2 * adv[i][k] > n) for i in range(m)
    )
    winner = None
    for i in range(m):
        if beats[i] == m - 1:
            winner = i + 1
            break
    return WinnerOutcome(winner, beats)


def plurality_winner(profile: StrictProfile) -> WinnerOutcome:
    """Candidate with strictly the most top preferences, if unique."""
    tops = [0] * profile.m
    for r in profile.rankings:
        tops[r[0] - 1] += 1
    tops = tuple(tops)
    return WinnerOutcome(_unique_extreme(tops, "max"), tops)


def maximin_phi(profile: StrictProfile, c: int) -> int:
    """Minimum pairwise advantage of candidate c over all rivals."""
    if profile.m == 1:
        raise ValueError("the minimum advantage is undefined with a single candidate")
    return min(pairwise_advantage(profile, c, d) for d in range(1, profile.m + 1) if d != c)


def maximin_winner(profile: StrictProfile) -> WinnerOutcome:
    """Candidate whose minimum advantage is strictly the largest, if unique."""
    if profile.m == 1:
        return WinnerOutcome(1, (0,))
    phis = tuple(maximin_phi(profile, c) for c in range(1, profile.m + 1))
    return WinnerOutcome(_unique_extreme(phis, "max"), phis)


def bucklin_rank_set(profile: StrictProfile, voter: int, k: int) -> frozenset[int]:
    """Candidates ranked among the top k positions by the given voter."""
    if not 1 <= k <= profile.m:
        raise ValueError(f"depth {k} out of range 1..{profile.m}")
    return frozenset(profile.rankings[voter - 1][:k])


def bucklin_psi(profile: StrictProfile, c: int) -> int:
    """Least depth k at which c is in the top k of a strict majority.

    Returns the sentinel m+1 when no depth qualifies, which cannot happen
    for complete strict profiles with at least one voter.
    """
    m, n = profile.m, profile.n
    positions = [r.index(c) + 1 for r in profile.rankings]
    for k in range(1, m + 1):
        if 2 * sum(1 for p in positions if p <= k) > n:
            return k
    return m + 1


def bucklin_winner(profile: StrictProfile) -> WinnerOutcome:
    """Candidate whose Bucklin score is strictly the smallest, if unique."""
    psis = tuple(bucklin_psi(profile, c) for c in range(1, profile.m + 1))
    return WinnerOutcome(_unique_extreme(psis, "min"), psis, direction="min")


def winner_for_rule(rule: str, election: Election) -> WinnerOutcome:
    """Dispatch winner determination on an election.

    The range rule needs a score matrix payload; the preference-based rules
    need a strict profile.
    """
    prefs = election.preferences
    if rule == "range":
        if not isinstance(prefs, ScoreMatrix):
            raise TypeError("range winner requires a score matrix")
        return range_winner(prefs)
    if not isinstance(prefs, StrictProfile):
        raise TypeError(f"{rule} winner requires a strict-order profile")
    if rule == "condorcet":
        return condorcet_winner(prefs)
    if rule == "plurality":
        return plurality_winner(prefs)
    if rule == "maximin":
        return maximin_winner(prefs)
    if rule == "bucklin":
        return bucklin_winner(prefs)
    raise ValueError(f"unknown rule {rule!r}")


def winner_after_deletion(election: Election, rule: str, kept, action: str) -> Optional[int]:
    """Winner of the election restricted to the kept voters or candidates,
    reported in the original candidate indices.

    An empty kept voter set means nobody votes: no candidate strictly beats
    anything, so there is no winner unless there are no rivals at all (m=1,
    where every winner condition holds vacuously).
    """
    kept = sorted(set(kept))
    if action == "delete-voters":
        if not kept:
            return 1 if election.m == 1 else None
        restricted = restrict_to_voters(election, kept)
        return winner_for_rule(rule, restricted).winner
    restricted = restrict_to_candidates(election, kept)
    winner = winner_for_rule(rule, restricted).winner
    if winner is None:
        return None
    return kept[winner - 1]
