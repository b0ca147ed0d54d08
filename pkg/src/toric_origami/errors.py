"""Exception types and the violation record shared by the validators."""

from dataclasses import dataclass, field


class OrigamiError(Exception):
    """Base class for every error raised by this package."""


class DimensionError(OrigamiError, ValueError):
    pass


class NotAPolytopeError(OrigamiError, ValueError):
    """The inequalities do not cut out a bounded full-dimensional polytope."""


class PreconditionError(OrigamiError, ValueError):
    pass


class StructuralError(OrigamiError, RuntimeError):
    """A combinatorial structure violated an invariant it must satisfy.

    When the input passed validation this indicates a bug, not bad input.
    """


class InconsistencyError(OrigamiError, ArithmeticError):
    """Computed invariants contradict each other (e.g. a negative Betti number)."""


class CapabilityError(OrigamiError, NotImplementedError):
    pass


class TemplateParseError(OrigamiError, ValueError):
    def __init__(self, message, field=None, line=None):
        self.field = field
        self.line = line
        where = []
        if line is not None:
            where.append(f"line {line}")
        if field is not None:
            where.append(field)
        prefix = f"{', '.join(where)}: " if where else ""
        super().__init__(prefix + message)


@dataclass(frozen=True)
class Violation:
    kind: str
    where: str
    detail: str = ""

    def __str__(self):
        s = f"[{self.kind}] {self.where}"
        return f"{s}: {self.detail}" if self.detail else s

    def to_dict(self):
        return {"kind": self.kind, "where": self.where, "detail": self.detail}


@dataclass
class Report:
    """Outcome of a validation pass; violations are data, never raised."""

    subject: str
    violations: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.violations

    def add(self, kind, where, detail=""):
        self.violations.append(Violation(kind, where, detail))

    def extend(self, other, prefix=""):
        for v in other.violations:
            self.violations.append(Violation(v.kind, prefix + v.where, v.detail))
        self.notes.extend(prefix + n for n in other.notes)

    def to_dict(self):
        return {
            "subject": self.subject,
            "ok": self.ok,
            "violations": [v.to_dict() for v in self.violations],
            "notes": list(self.notes),
        }

    def __str__(self):
        lines = [f"{self.subject}: {'ok' if self.ok else 'FAILED'}"]
        lines += [f"  note: {n}" for n in self.notes]
        lines += [f"  {v}" for v in self.violations]
        return "\n".join(lines)
