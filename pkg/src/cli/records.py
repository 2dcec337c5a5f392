"""Report records shared by the text, CSV and JSON-lines emitters and the tool server."""

from typing import List, Optional

from pydantic import BaseModel, ConfigDict


class Record(BaseModel):
    """One logical report row. ``text()`` is the human-readable rendering."""

    model_config = ConfigDict(frozen=True)

    def text(self) -> str:
        return ", ".join(f"{k}={v}" for k, v in self.model_dump().items())


class DegreeRecord(Record):
    source: str
    components: int
    cap: int
    degree: int
    exact: bool
    witness: Optional[str] = None
    coefficient: Optional[int] = None

    def text(self) -> str:
        if not self.exact:
            return f"degree >= {self.degree}"
        line = f"degree = {self.degree} (exact)"
        if self.witness is not None:
            line += f", witness {self.witness}={self.coefficient}"
        return line


class InvariantRecord(Record):
    source: str
    invariant: str
    value: int

    def text(self) -> str:
        return f"{self.invariant} = {self.value}"


class FormRecord(Record):
    q: int
    n: int
    canonical: str
    simple: bool
    semisimple: bool
    verdict: str

    def text(self) -> str:
        kind = "simple" if self.simple else "semisimple" if self.semisimple else "not semisimple"
        return f"({self.q}/{self.n}) ~ {self.canonical}: {kind}, degree verdict {self.verdict}"


class MatrixFormRecord(Record):
    source: str
    size: int
    nullity: int
    torsion: List[int]
    form: str
    verdict: Optional[str] = None

    def text(self) -> str:
        line = f"nullity {self.nullity}, torsion {self.torsion}, linking form {self.form}"
        if self.verdict is not None:
            line += f", degree verdict {self.verdict}"
        return line


class SplitRecord(Record):
    q: int
    n: int
    summands: List[str]

    def text(self) -> str:
        return f"({self.q}/{self.n}) = " + " + ".join(self.summands)


class Table1Row(Record):
    n: int
    representatives: List[int]

    def text(self) -> str:
        return f"{self.n}: {', '.join(str(q) for q in self.representatives)}"


class CountRecord(Record):
    quantity: str
    r: int
    k: int
    value: int

    def text(self) -> str:
        symbol = "N" if self.quantity == "witt" else "M"
        return f"{symbol}_{self.k}^{self.r} = {self.value}"


class GridRecord(Record):
    check: str
    r_max: int
    k_max: int
    ok: bool
    exceptions: List[str]
    violations: List[str]

    def text(self) -> str:
        status = "ok" if self.ok else "FAILED"
        line = f"{self.check} on 2..{self.r_max} x 2..{self.k_max}: {status}"
        line += f"; exceptions {' '.join(self.exceptions) or 'none'}"
        if self.violations:
            line += f"; violations {' '.join(self.violations)}"
        return line


class BoundRecord(Record):
    p: int
    b_p: int
    o_hat: str
    bound: str
    floor: int

    def text(self) -> str:
        return f"p = {self.p}, b_p = {self.b_p}, o_hat = {self.o_hat}: degree <= {self.bound} (floor {self.floor})"


class PlanRecord(Record):
    b: int
    d: str
    recipe: str
    betti: int
    b_p: Optional[int] = None
    o_hat: Optional[str] = None
    bound: Optional[str] = None
    note: str = ""

    def text(self) -> str:
        line = f"b = {self.b}, degree {self.d}: {self.recipe}"
        if self.bound is not None:
            line += f" (b_5 = {self.b_p}, o_hat = {self.o_hat}, bound {self.bound})"
        return line


class VerdictRecord(Record):
    q: int
    n: int
    verdict: str

    def text(self) -> str:
        return f"({self.q}/{self.n}): {self.verdict}"
