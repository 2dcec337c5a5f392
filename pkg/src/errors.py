"""Typed errors raised by the Milnor degree engines."""

from typing import Sequence, Tuple


class MilnorError(ValueError):
    """Base class for domain errors. The CLI maps these to exit status 1."""


class WordError(MilnorError):
    """Invalid free-group word (rank, generator index or exponent)."""


class TruncationError(MilnorError):
    """A truncation cap outside the computable range."""


class RankMismatch(MilnorError):
    """Longitude words of different ranks in one link."""


class LowerDegreeNonvanishing(MilnorError):
    """A mu-bar invariant was requested while a lower-degree one is nonzero."""

    def __init__(self, degree: int, witness: Tuple[int, ...], coefficient: int):
        self.degree = degree
        self.witness = witness
        self.coefficient = coefficient
        super().__init__(
            f"invariant of degree {degree} is not first-nonvanishing: "
            f"mu({_fmt_indices(witness)}) = {coefficient} is nonzero"
        )


class BingDoubleError(MilnorError):
    """Bing doubling requested outside the certified family."""


class SurgeryHypothesisError(MilnorError):
    """Zero-surgery degree requested on a link violating a hypothesis."""

    def __init__(self, hypothesis: str, detail: str):
        self.hypothesis = hypothesis
        super().__init__(f"hypothesis '{hypothesis}' violated: {detail}")


class NonCyclicTorsion(MilnorError):
    """Torsion of the cokernel is not cyclic."""

    def __init__(self, factors: Sequence[int]):
        self.factors = tuple(factors)
        super().__init__(
            f"torsion is not cyclic: invariant factors {list(self.factors)}"
        )


class FormError(MilnorError):
    """Invalid linking-form data (non-coprime q, bad factorization, ...)."""


class VacuousBound(MilnorError):
    """The quantum bound is undefined because b_p <= o_hat."""


class LinkFileError(MilnorError):
    """Parse error in a link file, with 1-based position."""

    def __init__(self, message: str, line: int, column: int):
        self.line = line
        self.column = column
        super().__init__(f"line {line}, column {column}: {message}")


def _fmt_indices(indices: Sequence[int]) -> str:
    if all(0 < i < 10 for i in indices):
        return "".join(str(i) for i in indices)
    return ",".join(str(i) for i in indices)
