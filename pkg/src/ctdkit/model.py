"""Test-space models: attributes, values, constraints, and their encoding.

A `Model` is the user-facing artifact: an ordered list of attributes with
ordered value domains (optionally carrying integer subdomain ranges),
constraint expression strings, and optional explicit requirement tuples
(directives).  `build_encoding` maps each attribute to a block of Boolean
variables (log encoding, most-significant bit first, declaration order),
and `ModelSpace` binds a model to a BDD manager holding its legal space:

    legal = validity AND constraint_1 AND ... AND constraint_k

where validity excludes the bit patterns that decode to no value.  Tuple
counts over the legal space therefore equal counts of legal tests.

Model document (JSON):

    {
      "attributes": [
        {"name": "Cache", "values": ["on", "off"]},
        {"name": "Writes", "values": [{"label": "small", "range": [1, 10]}]}
      ],
      "constraints": ["Cache = off -> Writes != small"],
      "directives": [[{"attr": "Cache", "value": "on"}, ...], ...]
    }

Ranges are half-open integer intervals [lo, hi); both bounds are required.
Unknown fields anywhere are rejected.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterator

from . import constraints
from .bdd import BDD, Function
from .errors import (
    ConstraintError,
    CtdError,
    InfeasibleModelError,
    ModelFormatError,
    UnknownAttributeError,
    UnknownValueError,
)


@dataclass(frozen=True)
class Value:
    """One element of an attribute's domain, optionally a subdomain range."""
    label: str
    range: tuple[int, int] | None = None


@dataclass(frozen=True)
class Attribute:
    name: str
    values: tuple[Value, ...]

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(v.label for v in self.values)

    def index_of(self, label: str) -> int | None:
        for i, v in enumerate(self.values):
            if v.label == label:
                return i
        return None

    @property
    def size(self) -> int:
        return len(self.values)


@dataclass(frozen=True)
class Model:
    attributes: tuple[Attribute, ...]
    constraints: tuple[str, ...] = ()
    directives: tuple[tuple[tuple[str, str], ...], ...] = ()

    @property
    def attribute_names(self) -> tuple[str, ...]:
        return tuple(a.name for a in self.attributes)

    def attribute_index(self, name: str) -> int | None:
        for i, a in enumerate(self.attributes):
            if a.name == name:
                return i
        return None

    def attribute(self, name: str) -> Attribute:
        i = self.attribute_index(name)
        if i is None:
            raise UnknownAttributeError(name)
        return self.attributes[i]

    def cartesian_count(self) -> int:
        """Size of the full Cartesian product, ignoring constraints."""
        n = 1
        for a in self.attributes:
            n *= a.size
        return n

    def check_assignment(self, assignment: dict[str, str], full: bool = False) -> None:
        """Typecheck a (partial) assignment of value labels to attributes."""
        for name, label in assignment.items():
            attr = self.attribute(name)
            if attr.index_of(label) is None:
                raise UnknownValueError(name, label)
        if full:
            for a in self.attributes:
                if a.name not in assignment:
                    raise CtdError(f"assignment does not bind attribute {a.name!r}")


# ----------------------------------------------------------------------
# loading

def parse_model(document: dict) -> Model:
    """Build a Model from a parsed JSON document; rejects unknown fields."""
    if not isinstance(document, dict):
        raise ModelFormatError("model document must be a JSON object")
    unknown = set(document) - {"attributes", "constraints", "directives"}
    if unknown:
        raise ModelFormatError(f"unknown model fields: {sorted(unknown)}")
    raw_attrs = document.get("attributes")
    if not isinstance(raw_attrs, list):
        raise ModelFormatError("'attributes' must be a list")
    attributes = tuple(_parse_attribute(a) for a in raw_attrs)

    raw_constraints = document.get("constraints", [])
    if not isinstance(raw_constraints, list) or any(
            not isinstance(c, str) for c in raw_constraints):
        raise ModelFormatError("'constraints' must be a list of strings")

    raw_directives = document.get("directives", [])
    if not isinstance(raw_directives, list):
        raise ModelFormatError("'directives' must be a list")
    directives = tuple(_parse_directive(d) for d in raw_directives)

    return Model(attributes, tuple(raw_constraints), directives)


def _parse_attribute(raw) -> Attribute:
    if not isinstance(raw, dict):
        raise ModelFormatError("each attribute must be an object")
    unknown = set(raw) - {"name", "values"}
    if unknown:
        raise ModelFormatError(f"unknown attribute fields: {sorted(unknown)}")
    name = raw.get("name")
    if not isinstance(name, str) or not name.strip():
        raise ModelFormatError("attribute 'name' must be a non-empty string")
    values = raw.get("values")
    if not isinstance(values, list):
        raise ModelFormatError(f"attribute {name!r}: 'values' must be a list")
    return Attribute(name.strip(), tuple(_parse_value(name, v) for v in values))


def _parse_value(attr_name: str, raw) -> Value:
    if isinstance(raw, str):
        return Value(raw.strip())
    if not isinstance(raw, dict):
        raise ModelFormatError(
            f"attribute {attr_name!r}: each value must be a string or object")
    unknown = set(raw) - {"label", "range"}
    if unknown:
        raise ModelFormatError(f"unknown value fields: {sorted(unknown)}")
    label = raw.get("label")
    if not isinstance(label, str) or not label.strip():
        raise ModelFormatError(f"attribute {attr_name!r}: value 'label' must be a string")
    rng = raw.get("range")
    if rng is None:
        return Value(label.strip())
    if (not isinstance(rng, list) or len(rng) != 2
            or not all(isinstance(x, int) and not isinstance(x, bool) for x in rng)):
        raise ModelFormatError(
            f"value {label!r}: 'range' must be a two-integer [lo, hi) interval; "
            "unbounded subdomains need an explicit upper bound")
    lo, hi = rng
    if lo >= hi:
        raise ModelFormatError(f"value {label!r}: empty range [{lo}, {hi})")
    return Value(label.strip(), (lo, hi))


def _parse_directive(raw) -> tuple[tuple[str, str], ...]:
    if not isinstance(raw, list) or not raw:
        raise ModelFormatError("each directive must be a non-empty list of bindings")
    bindings = []
    for b in raw:
        if not isinstance(b, dict) or set(b) != {"attr", "value"}:
            raise ModelFormatError(
                "each directive binding must be an object {attr, value}")
        if not isinstance(b["attr"], str) or not isinstance(b["value"], str):
            raise ModelFormatError("directive 'attr' and 'value' must be strings")
        bindings.append((b["attr"], b["value"]))
    return tuple(bindings)


def load_model(path) -> Model:
    """Load a model document from a JSON file."""
    with open(path, "r", encoding="utf-8") as fh:
        try:
            document = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ModelFormatError(f"{path}: invalid JSON: {exc}") from exc
    return parse_model(document)


# ----------------------------------------------------------------------
# encoding

@dataclass(frozen=True)
class Encoding:
    """Attribute blocks of Boolean variables, log-encoded, MSB first."""
    blocks: tuple[tuple[int, ...], ...]
    var_count: int

    def value_bits(self, attr_index: int, value_index: int) -> tuple[int, ...]:
        """Big-endian bit pattern of the value index, one bit per block var."""
        width = len(self.blocks[attr_index])
        return tuple((value_index >> (width - 1 - i)) & 1 for i in range(width))

    def value_eq(self, manager: BDD, attr_index: int, value_index: int) -> Function:
        """Function true exactly when the block holds this value's code."""
        fn = manager.true
        block = self.blocks[attr_index]
        bits = self.value_bits(attr_index, value_index)
        for var, bit in zip(block, bits):
            v = manager.var(var)
            fn = fn & (v if bit else ~v)
        return fn

    def encode(self, value_indices) -> tuple[int, ...]:
        """Bit vector for one full assignment given as value indices."""
        bits = [0] * self.var_count
        for ai, vi in enumerate(value_indices):
            for var, bit in zip(self.blocks[ai], self.value_bits(ai, vi)):
                bits[var] = bit
        return tuple(bits)

    def decode(self, bits) -> tuple[int, ...]:
        """Value indices for one bit vector (codes assumed valid)."""
        out = []
        for block in self.blocks:
            code = 0
            for var in block:
                code = (code << 1) | bits[var]
            out.append(code)
        return tuple(out)


def build_encoding(model: Model) -> Encoding:
    """Assign disjoint variable blocks in declaration order; deterministic."""
    blocks = []
    next_var = 0
    for attr in model.attributes:
        width = (attr.size - 1).bit_length()
        blocks.append(tuple(range(next_var, next_var + width)))
        next_var += width
    return Encoding(tuple(blocks), next_var)


# ----------------------------------------------------------------------
# validation

@dataclass
class ValidationReport:
    errors: list[str] = field(default_factory=list)
    warnings: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.errors

    def format(self) -> str:
        lines = [f"error: {e}" for e in self.errors]
        lines += [f"warning: {w}" for w in self.warnings]
        lines.append("OK" if self.ok else f"{len(self.errors)} error(s)")
        return "\n".join(lines)


def validate_model(model: Model) -> ValidationReport:
    """Check structure, constraints, and feasibility; never raises."""
    report = ValidationReport()
    seen = set()
    for a in model.attributes:
        if a.name in seen:
            report.errors.append(f"duplicate attribute name {a.name!r}")
        seen.add(a.name)
        if a.size == 0:
            report.errors.append(f"attribute {a.name!r} has an empty domain")
        labels = set()
        for v in a.values:
            if v.label in labels:
                report.errors.append(
                    f"attribute {a.name!r} has duplicate value {v.label!r}")
            labels.add(v.label)
    if not model.attributes:
        report.errors.append("model declares no attributes")

    parsed = []
    for i, source in enumerate(model.constraints):
        try:
            parsed.append(constraints.typecheck(constraints.parse(source), model))
        except ConstraintError as exc:
            report.errors.append(f"constraint {i + 1}: {exc}")
            parsed.append(None)

    for j, directive in enumerate(model.directives):
        names = [attr for attr, _ in directive]
        if len(set(names)) != len(names):
            report.errors.append(f"directive {j + 1}: repeated attribute")
        for attr, value in directive:
            ai = model.attribute_index(attr)
            if ai is None:
                report.errors.append(f"directive {j + 1}: unknown attribute {attr!r}")
            elif model.attributes[ai].index_of(value) is None:
                report.errors.append(
                    f"directive {j + 1}: unknown value {value!r} for {attr!r}")

    if report.errors:
        return report

    # feasibility and per-constraint effect need the symbolic space
    encoding = build_encoding(model)
    manager = BDD(encoding.var_count)
    validity = _validity_fn(model, encoding, manager)
    compiled = [constraints.compile_expr(e, model, encoding, manager) for e in parsed]
    legal = validity
    for fn in compiled:
        legal = legal & fn
    if legal.is_false:
        report.errors.append(
            "constraints leave no legal test (the legal space is empty)")
        return report
    for i, _ in enumerate(compiled):
        others = validity
        for j, fn in enumerate(compiled):
            if j != i:
                others = others & fn
        if others == legal:
            report.warnings.append(
                f"constraint {i + 1} eliminates nothing: "
                f"{model.constraints[i]!r}")
    return report


def _validity_fn(model: Model, encoding: Encoding, manager: BDD) -> Function:
    fn = manager.true
    for ai, attr in enumerate(model.attributes):
        width = len(encoding.blocks[ai])
        if attr.size == (1 << width):
            continue  # every code decodes to a value
        any_value = manager.false
        for vi in range(attr.size):
            any_value = any_value | encoding.value_eq(manager, ai, vi)
        fn = fn & any_value
    return fn


# ----------------------------------------------------------------------
# the bound symbolic space

class ModelSpace:
    """A model bound to one BDD manager with its legal space built.

    Immutable once constructed; confine it (and any Function derived from
    it) to a single thread of control per the engine's contract.
    """

    def __init__(self, model: Model):
        self.model = model
        self.encoding = build_encoding(model)
        self.manager = BDD(self.encoding.var_count)
        self.validity = _validity_fn(model, self.encoding, self.manager)
        self.constraint_fns = []
        for source in model.constraints:
            ast = constraints.typecheck(constraints.parse(source), model)
            self.constraint_fns.append(
                constraints.compile_expr(ast, model, self.encoding, self.manager))
        legal = self.validity
        for fn in self.constraint_fns:
            legal = legal & fn
        if legal.is_false:
            raise InfeasibleModelError("constraints leave no legal test")
        self.legal = legal

    @property
    def illegal(self) -> Function:
        """Valid-but-excluded combinations."""
        return self.validity & ~self.legal

    def value_eq(self, attr: str, label: str) -> Function:
        ai = self.model.attribute_index(attr)
        if ai is None:
            raise UnknownAttributeError(attr)
        vi = self.model.attributes[ai].index_of(label)
        if vi is None:
            raise UnknownValueError(attr, label)
        return self.encoding.value_eq(self.manager, ai, vi)

    def requirement_fn(self, bindings) -> Function:
        """Conjunction of equality conditions for (attr, value) bindings."""
        fn = self.manager.true
        for attr, label in bindings:
            fn = fn & self.value_eq(attr, label)
        return fn

    def project(self, partial: dict[str, str]) -> Function:
        """Legal combinations consistent with the fixed attribute values."""
        self.model.check_assignment(partial)
        return self.legal & self.requirement_fn(partial.items())

    def tuple_count(self, fn: Function | None = None) -> int:
        """Number of value tuples a function admits (legal space by default)."""
        return (fn if fn is not None else self.legal).count()

    def assignment_bits(self, test: dict[str, str]) -> tuple[int, ...]:
        self.model.check_assignment(test, full=True)
        indices = [a.index_of(test[a.name]) for a in self.model.attributes]
        return self.encoding.encode(indices)

    def contains(self, test: dict[str, str]) -> bool:
        """True when a full assignment satisfies the legal space."""
        return self.legal.evaluate(self.assignment_bits(test))

    def decode_bits(self, bits) -> dict[str, str]:
        indices = self.encoding.decode(bits)
        return {a.name: a.values[vi].label
                for a, vi in zip(self.model.attributes, indices)}

    def assignments(self, fn: Function | None = None,
                    limit: int | None = None) -> Iterator[dict[str, str]]:
        """Decode satisfying bit vectors to assignments, lexicographically."""
        space = fn if fn is not None else self.legal
        for i, bits in enumerate(space.satisfying()):
            if limit is not None and i >= limit:
                return
            yield self.decode_bits(bits)
