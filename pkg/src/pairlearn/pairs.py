"""Alignment-constrained pair construction and test-set sampling.

Learning trials present two objects side by side. A *compare* pair holds
two category members; a *contrast* pair holds one member and one
non-member. Alignment controls how many irrelevant dimensions vary
within the pair:

  high contrast   objects differ only on the diagnostic feature
  high compare    objects share the diagnostic value and differ in color only
  low contrast    objects differ on the diagnostic feature, color, and one
                  more structural dimension
  low compare     objects share the diagnostic value and color but differ
                  on two structural dimensions

The "one more" / "two more" structural dimensions are chosen by fixed
priority (center shape first), so e.g. low-alignment contrast pairs for a
size category always vary center shape and color alongside size.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass

import numpy as np

from .errors import ConstraintInfeasibleError, ExhaustionError
from .space import (
    OBJECT_FIELDS,
    STRUCTURAL_FIELDS,
    AttributeSpace,
    CategoryRule,
    DEFAULT_SPACE,
    ObjectSpec,
    member,
)

PAIR_KINDS = ("compare", "contrast")


@dataclass(frozen=True)
class PairSpec:
    """A compare or contrast pairing of two objects under a category rule."""

    left: ObjectSpec
    right: ObjectSpec
    pair_kind: str
    alignment: str
    rule: CategoryRule
    left_is_member: bool
    right_is_member: bool

    @property
    def same(self) -> bool:
        """Same/different indicator used by the pair-based objectives."""
        return self.pair_kind == "compare"

    @property
    def pair_id(self) -> str:
        """Content hash of the pair (membership flags excluded; they are derivable)."""
        payload = (
            tuple(sorted(self.left.as_dict().items())),
            tuple(sorted(self.right.as_dict().items())),
            self.pair_kind,
            self.alignment,
            (self.rule.name, self.rule.feature, self.rule.target_value, self.rule.shape_locus),
        )
        digest = hashlib.sha1(json.dumps(payload).encode()).hexdigest()
        return digest[:12]


def varied_fields(alignment: str, pair_kind: str, target: str) -> tuple[str, ...]:
    """Exact set of object fields that differ within a pair, per cell."""
    extras = [f for f in STRUCTURAL_FIELDS if f != target]
    if alignment == "high":
        return (target,) if pair_kind == "contrast" else ("color",)
    if alignment == "low":
        if pair_kind == "contrast":
            return (target, "color", extras[0])
        return (extras[0], extras[1])
    raise ValueError(f"unknown alignment {alignment!r}")


def make_pair(
    rule: CategoryRule,
    alignment: str,
    pair_kind: str,
    rng: np.random.Generator,
    space: AttributeSpace = DEFAULT_SPACE,
) -> PairSpec:
    """Sample a pair satisfying the (alignment, pair_kind) cell's constraints.

    The base object is drawn uniformly from the members of the category;
    the partner copies it and resamples exactly the fields the cell varies.
    For contrast pairs, which side holds the member is uniform-random.
    """
    if pair_kind not in PAIR_KINDS:
        raise ValueError(f"unknown pair_kind {pair_kind!r}")
    rule.validate_in(space)
    target = rule.field
    fields = varied_fields(alignment, pair_kind, target)
    for f in fields:
        if len(space.field_values(f)) < 2:
            raise ConstraintInfeasibleError(
                f"cell ({alignment}, {pair_kind}) varies {f!r} but the space has "
                f"only {len(space.field_values(f))} value(s) for it"
            )

    base = {}
    for f in OBJECT_FIELDS:
        values = space.field_values(f)
        base[f] = values[rng.integers(len(values))]
    base[target] = rule.target_value
    partner = dict(base)
    for f in fields:
        alternatives = [v for v in space.field_values(f) if v != base[f]]
        partner[f] = alternatives[rng.integers(len(alternatives))]

    first, second = ObjectSpec(**base), ObjectSpec(**partner)
    if rng.integers(2):
        first, second = second, first
    return PairSpec(
        left=first,
        right=second,
        pair_kind=pair_kind,
        alignment=alignment,
        rule=rule,
        left_is_member=member(rule, first),
        right_is_member=member(rule, second),
    )


def validate_pair(p: PairSpec, space: AttributeSpace = DEFAULT_SPACE) -> list[str]:
    """Return a description of every violated pair invariant (empty if none)."""
    violations: list[str] = []
    for side, obj in (("left", p.left), ("right", p.right)):
        for f in OBJECT_FIELDS:
            if getattr(obj, f) not in space.field_values(f):
                violations.append(f"{side}.{f}={getattr(obj, f)!r} not in attribute space")

    for side, obj, flag in (("left", p.left, p.left_is_member), ("right", p.right, p.right_is_member)):
        if member(p.rule, obj) != flag:
            violations.append(f"membership flag mismatch on {side} side")

    n_members = int(p.left_is_member) + int(p.right_is_member)
    if p.pair_kind == "compare" and n_members != 2:
        violations.append("pair_kind/membership mismatch")
    if p.pair_kind == "contrast" and n_members != 1:
        violations.append("pair_kind/membership mismatch")

    target = p.rule.field
    differs = {f for f in OBJECT_FIELDS if getattr(p.left, f) != getattr(p.right, f)}
    structural_extra = differs & (set(STRUCTURAL_FIELDS) - {target})

    if p.alignment == "high" and p.pair_kind == "contrast":
        if differs != {target}:
            violations.append(
                f"high-alignment contrast must differ only on {target}; differs on {sorted(differs)}"
            )
    elif p.alignment == "high" and p.pair_kind == "compare":
        if differs != {"color"}:
            violations.append(
                f"high-alignment compare must differ only in color; differs on {sorted(differs)}"
            )
    elif p.alignment == "low" and p.pair_kind == "contrast":
        if target not in differs:
            violations.append(f"low-alignment contrast must differ on {target}")
        if "color" not in differs:
            violations.append("low-alignment contrast must differ in color")
        if len(structural_extra) < 1:
            violations.append("low-alignment contrast must vary a non-target structural dimension")
    elif p.alignment == "low" and p.pair_kind == "compare":
        if target in differs:
            violations.append(f"low-alignment compare must share the target value on {target}")
        if "color" in differs:
            violations.append("low-alignment compare must share color")
        if len(structural_extra) < 2:
            violations.append("low-alignment compare must vary >=2 non-target structural dimensions")
    else:
        violations.append(f"unknown cell ({p.alignment}, {p.pair_kind})")

    return violations


@dataclass(frozen=True)
class TestPair:
    """Two test objects shown side by side; scored per image, not per pair."""

    left: ObjectSpec
    right: ObjectSpec
    left_is_member: bool
    right_is_member: bool


def build_test_set(
    rule: CategoryRule,
    alignment: str,
    seen: set[ObjectSpec],
    rng: np.random.Generator,
    space: AttributeSpace = DEFAULT_SPACE,
) -> list[ObjectSpec]:
    """Draw 12 unseen test objects: 6 members and 6 non-members, shuffled.

    ``alignment`` is carried through for manifests; sampling is uniform over
    unseen objects in both conditions (the learning pairs' base objects are
    uniform draws too, so the marginal image distribution matches).
    """
    del alignment
    unseen_members = [o for o in space.objects() if o not in seen and member(rule, o)]
    unseen_nonmembers = [o for o in space.objects() if o not in seen and not member(rule, o)]
    if len(unseen_members) < 6 or len(unseen_nonmembers) < 6:
        raise ExhaustionError(
            f"need 6 unseen members and 6 unseen non-members; have "
            f"{len(unseen_members)} and {len(unseen_nonmembers)}"
        )
    members = [unseen_members[i] for i in rng.choice(len(unseen_members), size=6, replace=False)]
    nonmembers = [unseen_nonmembers[i] for i in rng.choice(len(unseen_nonmembers), size=6, replace=False)]
    items = members + nonmembers
    order = rng.permutation(len(items))
    return [items[i] for i in order]


def pair_test_items(
    items: list[ObjectSpec], rule: CategoryRule, rng: np.random.Generator
) -> list[TestPair]:
    """Randomly partition the 12 test items into 6 pairs with per-side flags."""
    if len(items) != 12:
        raise ValueError(f"test set must contain exactly 12 items, got {len(items)}")
    order = rng.permutation(12)
    pairs = []
    for k in range(6):
        left, right = items[order[2 * k]], items[order[2 * k + 1]]
        pairs.append(TestPair(left, right, member(rule, left), member(rule, right)))
    return pairs
