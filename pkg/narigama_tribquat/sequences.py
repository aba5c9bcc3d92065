import enum
import threading

from loguru import logger

from .problem import IndexOutOfDomain
from .problem import InvalidArgument
from .quaternion import QPoly
from .quaternion import Quaternion
from .ring import ONE
from .ring import ZERO
from .ring import Poly
from .ring import X


class Kind(enum.StrEnum):
    TRIB = "T"
    TRIB_LUCAS = "t"
    TRIB_QUAT = "QT"
    TRIB_LUCAS_QUAT = "Qt"

    @property
    def is_quaternion(self) -> bool:
        return self in (Kind.TRIB_QUAT, Kind.TRIB_LUCAS_QUAT)

    @property
    def scalar(self) -> "Kind":
        """The scalar sequence a quaternion kind is built from."""
        return {Kind.TRIB_QUAT: Kind.TRIB, Kind.TRIB_LUCAS_QUAT: Kind.TRIB_LUCAS}.get(self, self)


# coefficients of s_{n-1}, s_{n-2}, s_{n-3} in s_n = x^2 s_{n-1} + x s_{n-2} + s_{n-3}
RECURRENCE = (X**2, X, ONE)

TRIB_SEEDS = (ZERO, ONE, X**2)
TRIB_LUCAS_SEEDS = (Poly.const(3), X**2, X**4 + 2 * X)


class SequenceTable:
    """A memoized third order recurrence in x, grown on demand.

    The table is the one mutable structure in the package, growth happens under a lock.
    Backward extension (min_index < 0) runs s_{n-3} = s_n - a s_{n-1} - b s_{n-2}, which
    is only exact when the s_{n-3} coefficient is 1.
    """

    def __init__(
        self,
        name: str,
        seeds: tuple[Poly, Poly, Poly],
        coefficients: tuple[Poly, Poly, Poly] = RECURRENCE,
        min_index: int = 0,
    ):
        if min_index < 0 and coefficients[2] != ONE:
            raise InvalidArgument("Backward extension of {} needs a unit s_(n-3) coefficient".format(name))

        self.name = name
        self.seeds = tuple(seeds)
        self.coefficients = tuple(coefficients)
        self.min_index = min_index

        self._terms: dict[int, Poly] = dict(enumerate(self.seeds))
        self._lo, self._hi = 0, 2
        self._lock = threading.Lock()

    def __repr__(self) -> str:
        return "SequenceTable(name={!r}, min_index={}, cached={}..{})".format(self.name, self.min_index, self._lo, self._hi)

    def term(self, n: int) -> Poly:
        if n < self.min_index:
            err = "{}_n is defined for n >= {}, got n={}".format(self.name, self.min_index, n)
            raise IndexOutOfDomain(err)

        with self._lock:
            if n > self._hi:
                self._grow_forward(n)
            elif n < self._lo:
                self._grow_backward(n)
            return self._terms[n]

    def quat(self, n: int) -> QPoly:
        """The quaternion s_n + s_{n+1} i + s_{n+2} j + s_{n+3} k."""
        if n < 0:
            err = "Q_{},n is defined for n >= 0, got n={}".format(self.name, n)
            raise IndexOutOfDomain(err)
        return Quaternion(self.term(n), self.term(n + 1), self.term(n + 2), self.term(n + 3))

    def _grow_forward(self, n: int):
        logger.trace("growing {} forward from {} to {}", self.name, self._hi, n)
        a, b, c = self.coefficients
        terms = self._terms
        for m in range(self._hi + 1, n + 1):
            terms[m] = a * terms[m - 1] + b * terms[m - 2] + c * terms[m - 3]
        self._hi = n

    def _grow_backward(self, n: int):
        logger.trace("growing {} backward from {} to {}", self.name, self._lo, n)
        a, b, _ = self.coefficients
        terms = self._terms
        for m in range(self._lo - 1, n - 1, -1):
            terms[m] = terms[m + 3] - a * terms[m + 2] - b * terms[m + 1]
        self._lo = n


TRIBONACCI = SequenceTable("T", TRIB_SEEDS, min_index=-3)
TRIBONACCI_LUCAS = SequenceTable("t", TRIB_LUCAS_SEEDS)


def trib_poly(n: int) -> Poly:
    return TRIBONACCI.term(n)


def trib_lucas_poly(n: int) -> Poly:
    return TRIBONACCI_LUCAS.term(n)


def trib_quat(n: int) -> QPoly:
    return TRIBONACCI.quat(n)


def trib_lucas_quat(n: int) -> QPoly:
    return TRIBONACCI_LUCAS.quat(n)


def table_for(kind: Kind) -> SequenceTable:
    return TRIBONACCI if kind.scalar is Kind.TRIB else TRIBONACCI_LUCAS


def sequence_term(kind: Kind, n: int, table: SequenceTable | None = None) -> Poly | QPoly:
    """Term n of `kind`, read from `table` (defaults to the canonical table for the kind)."""
    table = table or table_for(kind)
    return table.quat(n) if kind.is_quaternion else table.term(n)


def seq_range(kind: Kind, lo: int, hi: int) -> list[Poly | QPoly]:
    if lo > hi:
        raise InvalidArgument("Empty range: lo={} is above hi={}".format(lo, hi))
    return [sequence_term(kind, n) for n in range(lo, hi + 1)]
