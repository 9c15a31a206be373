"""Attribute space, object specifications, and category rules.

A stimulus object is a point in a small factorial attribute space:
center shape x appendage shape x size x pattern x fill color. Category
membership is defined by a single diagnostic feature (size, shape, or
pattern) taking a designated target value; for shape the rule applies at
either the center or the appendage locus.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, replace

from .errors import SpaceError

SIZES = ("large", "small")
PATTERNS = ("dotted", "striped", "plain")
FEATURES = ("size", "shape", "pattern")
ALIGNMENTS = ("high", "low")
CATEGORY_NAMES = ("Modi", "Toma", "Zorg", "Hux", "Adet", "Bem")

DEFAULT_CENTER_SHAPES = ("circle", "square", "triangle", "hexagon")
DEFAULT_APPENDAGE_SHAPES = ("spikes", "stubs", "loops", "nub")
DEFAULT_COLORS = ("red", "blue", "green", "yellow")

# Non-color attributes, in the fixed priority order used when alignment
# rules must pick "one more dimension to vary". Color is handled
# separately because the alignment rules treat it specially.
STRUCTURAL_FIELDS = ("center_shape", "appendage_shape", "size", "pattern")
OBJECT_FIELDS = STRUCTURAL_FIELDS + ("color",)


def _check_identifiers(name: str, values: tuple[str, ...], minimum: int) -> tuple[str, ...]:
    values = tuple(values)
    if len(values) < minimum:
        raise SpaceError(f"{name} needs at least {minimum} values, got {len(values)}")
    if len(set(values)) != len(values):
        raise SpaceError(f"{name} contains duplicates: {values}")
    if not all(isinstance(v, str) and v for v in values):
        raise SpaceError(f"{name} must be non-empty strings: {values}")
    return values


@dataclass(frozen=True)
class AttributeSpace:
    """The factorial space stimulus objects are drawn from."""

    center_shapes: tuple[str, ...] = DEFAULT_CENTER_SHAPES
    appendage_shapes: tuple[str, ...] = DEFAULT_APPENDAGE_SHAPES
    sizes: tuple[str, ...] = SIZES
    patterns: tuple[str, ...] = PATTERNS
    colors: tuple[str, ...] = DEFAULT_COLORS

    def __post_init__(self):
        object.__setattr__(self, "center_shapes", _check_identifiers("center_shapes", self.center_shapes, 3))
        object.__setattr__(self, "appendage_shapes", _check_identifiers("appendage_shapes", self.appendage_shapes, 3))
        object.__setattr__(self, "sizes", _check_identifiers("sizes", self.sizes, 2))
        object.__setattr__(self, "patterns", _check_identifiers("patterns", self.patterns, 3))
        object.__setattr__(self, "colors", _check_identifiers("colors", self.colors, 4))
        if len(self.sizes) != 2:
            raise SpaceError(f"sizes must have exactly 2 values, got {self.sizes}")
        if len(self.patterns) != 3:
            raise SpaceError(f"patterns must have exactly 3 values, got {self.patterns}")

    def field_values(self, field: str) -> tuple[str, ...]:
        if field not in OBJECT_FIELDS:
            raise SpaceError(f"unknown object field {field!r}")
        return getattr(self, field + "s")

    def feature_values(self, feature: str, shape_locus: str = "center") -> tuple[str, ...]:
        """Value set of a diagnostic feature (shape resolved at its locus)."""
        if feature == "size":
            return self.sizes
        if feature == "pattern":
            return self.patterns
        if feature == "shape":
            if shape_locus == "center":
                return self.center_shapes
            if shape_locus == "appendage":
                return self.appendage_shapes
            raise SpaceError(f"unknown shape locus {shape_locus!r}")
        raise SpaceError(f"unknown feature {feature!r}")

    def contains(self, obj: "ObjectSpec") -> bool:
        return all(getattr(obj, f) in self.field_values(f) for f in OBJECT_FIELDS)

    def objects(self):
        """Iterate every object in the space, in a fixed deterministic order."""
        for cs, ap, sz, pat, col in itertools.product(
            self.center_shapes, self.appendage_shapes, self.sizes, self.patterns, self.colors
        ):
            yield ObjectSpec(cs, ap, sz, pat, col)

    def __len__(self) -> int:
        return (
            len(self.center_shapes)
            * len(self.appendage_shapes)
            * len(self.sizes)
            * len(self.patterns)
            * len(self.colors)
        )


DEFAULT_SPACE = AttributeSpace()


@dataclass(frozen=True, order=True)
class ObjectSpec:
    """One stimulus object: a point in the attribute space."""

    center_shape: str
    appendage_shape: str
    size: str
    pattern: str
    color: str

    def validate_in(self, space: AttributeSpace) -> None:
        for f in OBJECT_FIELDS:
            if getattr(self, f) not in space.field_values(f):
                raise SpaceError(f"{f}={getattr(self, f)!r} not in space {space.field_values(f)}")

    def as_dict(self) -> dict[str, str]:
        return {f: getattr(self, f) for f in OBJECT_FIELDS}


def target_field(feature: str, shape_locus: str = "center") -> str:
    """Object field a rule's feature reads (shape resolved at its locus)."""
    if feature == "size":
        return "size"
    if feature == "pattern":
        return "pattern"
    if feature == "shape":
        if shape_locus == "center":
            return "center_shape"
        if shape_locus == "appendage":
            return "appendage_shape"
        raise SpaceError(f"unknown shape locus {shape_locus!r}")
    raise SpaceError(f"unknown feature {feature!r}")


@dataclass(frozen=True)
class CategoryRule:
    """Membership rule: an object belongs iff its diagnostic feature equals the target value."""

    name: str
    feature: str
    target_value: str
    shape_locus: str = "center"

    def __post_init__(self):
        if self.name not in CATEGORY_NAMES:
            raise SpaceError(f"category name must be one of {CATEGORY_NAMES}, got {self.name!r}")
        if self.feature not in FEATURES:
            raise SpaceError(f"feature must be one of {FEATURES}, got {self.feature!r}")
        if self.shape_locus not in ("center", "appendage"):
            raise SpaceError(f"shape_locus must be 'center' or 'appendage', got {self.shape_locus!r}")

    @property
    def field(self) -> str:
        return target_field(self.feature, self.shape_locus)

    def validate_in(self, space: AttributeSpace) -> None:
        values = space.feature_values(self.feature, self.shape_locus)
        if self.target_value not in values:
            raise SpaceError(
                f"target_value {self.target_value!r} not in {self.feature} values {values}"
            )


def member(rule: CategoryRule, obj: ObjectSpec) -> bool:
    """True iff ``obj``'s value on the rule's feature equals the target value."""
    return getattr(obj, rule.field) == rule.target_value


@dataclass(frozen=True)
class CategoryAssignment:
    """A category rule together with its alignment condition."""

    rule: CategoryRule
    alignment: str

    def __post_init__(self):
        if self.alignment not in ALIGNMENTS:
            raise SpaceError(f"alignment must be one of {ALIGNMENTS}, got {self.alignment!r}")


DEFAULT_TARGETS = {"size": "large", "shape": "circle", "pattern": "dotted"}

# One category per (feature x alignment) cell. Overridable via config.
DEFAULT_CATEGORY_CELLS = {
    "Modi": ("shape", "high"),
    "Toma": ("shape", "low"),
    "Zorg": ("size", "high"),
    "Hux": ("size", "low"),
    "Adet": ("pattern", "high"),
    "Bem": ("pattern", "low"),
}


def default_category_map(
    targets: dict[str, str] | None = None, shape_locus: str = "center"
) -> dict[str, CategoryAssignment]:
    targets = {**DEFAULT_TARGETS, **(targets or {})}
    out = {}
    for name, (feature, alignment) in DEFAULT_CATEGORY_CELLS.items():
        rule = CategoryRule(name, feature, targets[feature], shape_locus)
        out[name] = CategoryAssignment(rule, alignment)
    return out


def category_for_cell(
    feature: str, alignment: str, category_map: dict[str, CategoryAssignment] | None = None
) -> tuple[str, CategoryRule]:
    """Find the category assigned to a (feature, alignment) cell."""
    category_map = category_map or default_category_map()
    for name, assignment in category_map.items():
        if assignment.rule.feature == feature and assignment.alignment == alignment:
            return name, assignment.rule
    raise SpaceError(f"no category assigned to cell ({feature}, {alignment})")
