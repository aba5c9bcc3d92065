"""
Typed errors for the whole package, shaped after RFC7807 problem documents so the CLI can
render them as JSON error objects. `status` doubles as the process exit code.
"""


class _ProblemMeta(type):
    """The Problem Metaclass, this will validate your Problems."""

    def __new__(cls, class_name, parents, attrs):  # noqa: D102
        # create the class
        _cls = type.__new__(cls, class_name, parents, attrs)

        # don't validate Problem
        if class_name == "Problem":
            return _cls

        # ensure required fields
        missing = [key for key in ("status", "title", "kind") if key not in attrs]
        if missing:
            fmt = "Can't build a Problem: {} is missing the field(s): {}"
            raise TypeError(fmt.format(class_name, ", ".join(missing)))

        return _cls


class Problem(Exception, metaclass=_ProblemMeta):
    """The Problem base class, extend this to build new Problems.

    class RootsCollided(Problem):
        status = 1
        title = "Two roots of the characteristic cubic coincide"
        kind = "roots-collided"

    raise RootsCollided("alpha == omega1 at x=0.25")
    """

    status: int
    title: str
    kind: str

    def __init__(self, detail: str | None = None, context: dict | None = None):
        super().__init__(detail)
        self.detail = detail or "No detail provided"
        self.context = context

    def __str__(self):
        fmt = "<{}(status={}, title='{}', detail='{}')>"
        return fmt.format(self.__class__.__name__, self.status, self.title, self.detail)

    def to_dict(self) -> dict:
        data = {
            "status": self.status,  # the exit code
            "title": self.title,  # a generic one liner about the issue
            "detail": self.detail,  # a more contextual one liner about the issue
            "type": self.kind,  # stable identifier, safe to match on
        }

        # if provided, additional data for debugging, etc...
        if self.context:
            data["context"] = self.context

        return data


class IndexOutOfDomain(Problem):
    status = 2
    title = "The requested index lies outside the sequence's domain."
    kind = "index-out-of-domain"


class InvalidArgument(Problem):
    status = 2
    title = "An argument was rejected."
    kind = "invalid-argument"


class NonUnitConstantTerm(Problem):
    status = 2
    title = "Series division needs a denominator with constant term 1."
    kind = "non-unit-constant-term"


class ConvergenceFailure(Problem):
    status = 1
    title = "The cubic roots did not meet tolerance after polishing."
    kind = "convergence-failure"


class SingularDenominator(Problem):
    status = 1
    title = "A Binet weight is undefined because two roots coincide."
    kind = "singular-denominator"


class InconsistentIdentity(Problem):
    status = 1
    title = "An identity check produced a contradictory result."
    kind = "inconsistent-identity"


class UncaughtException(Problem):
    """A generic Problem for uncaught Exceptions reaching the CLI."""

    status = 1
    title = "The program experienced an unexpected problem."
    kind = "uncaught-exception"
