"""Embedded minimal-web table and its verification pipeline.

The dataset lists, for each prime knot up to nine crossings, the integer
codes of its minimal webs together with the braid index b, tight length l,
web count n, and a symmetry column.  Verification recomputes everything the
columns claim from the codes alone, using the codec and the two polynomial
oracles, and reports per-row findings plus the table-wide averages.
"""

from __future__ import annotations

import hashlib
import multiprocessing
import re
from dataclasses import dataclass
from importlib import resources

from .codec import (
    code_int,
    is_alternating,
    step_code,
    symmetry_class,
    word_from_code,
)
from .invariants import (
    closure_components,
    homfly,
    homfly_mirrored,
    jones_from_homfly,
    jones_via_bracket,
    mfw_bound,
)
from .limits import DEFAULT_ENUM_FRONTIER, ResourceLimitError, default_jobs
from .polynomials import TwoVarLaurent
from .words import BraidWord, mirror

__all__ = [
    "WebEntry",
    "KnotRow",
    "RowReport",
    "VerifyReport",
    "MinimalityReport",
    "load_table",
    "verify_row",
    "verify_table",
    "enumerate_webs",
    "minimality_check",
]

_TABLE_SHA256 = "41e501e3d22bf2a10965a80c0fa72127e534555af85ebeaed6821af26279e861"

_TOKEN = re.compile(r"^(\+-)?(-?\d+)(an|s|a|n)?(!)?$")


@dataclass(frozen=True)
class WebEntry:
    """One code token of a table row.

    A plain integer stands for two webs (the listed one and its reversal,
    whose own integer is absolutely larger and not listed); any flag means
    the token stands for one web.  plus_minus doubles the token into both
    signs; alternating mirrors the italics of the source table.
    """

    code: int
    flag: str = ""
    plus_minus: bool = False
    alternating: bool = False

    def codes(self) -> tuple[int, ...]:
        return (self.code, -self.code) if self.plus_minus else (self.code,)

    def web_count(self) -> int:
        per_sign = 1 if self.flag else 2
        return per_sign * len(self.codes())


@dataclass(frozen=True)
class KnotRow:
    label: str
    entries: tuple[WebEntry, ...]
    braid_index: int
    tight_length: int
    web_count: int
    sym: str

    def all_codes(self) -> tuple[int, ...]:
        return tuple(c for e in self.entries for c in e.codes())


def _parse_entry(token: str) -> WebEntry:
    m = _TOKEN.match(token)
    if not m:
        raise ValueError(f"malformed web token {token!r}")
    pm, num, flag, italic = m.groups()
    return WebEntry(
        code=int(num),
        flag=flag or "",
        plus_minus=bool(pm),
        alternating=bool(italic),
    )


def load_table(path=None) -> tuple[KnotRow, ...]:
    """Parse the embedded dataset, verifying its checksum first."""
    if path is None:
        data = (
            resources.files("braidloom")
            .joinpath("_data/minimal_webs.tsv")
            .read_bytes()
        )
    else:
        with open(path, "rb") as fh:
            data = fh.read()
    digest = hashlib.sha256(data).hexdigest()
    if digest != _TABLE_SHA256:
        raise ValueError(f"table dataset corrupted: sha256 {digest}")
    rows = []
    for line in data.decode().splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        label, webs, b, l, n, s = line.split("\t")
        rows.append(
            KnotRow(
                label=label,
                entries=tuple(_parse_entry(t) for t in webs.split(",")),
                braid_index=int(b),
                tight_length=int(l),
                web_count=int(n),
                sym=s,
            )
        )
    if len(rows) != 84:
        raise ValueError(f"expected 84 rows, found {len(rows)}")
    return tuple(rows)


@dataclass(frozen=True)
class RowReport:
    label: str
    failures: tuple[str, ...]
    mfw_bound: int
    mfw_equal: bool

    @property
    def passed(self) -> bool:
        return not self.failures

    def record(self) -> dict:
        return {
            "row": self.label,
            "passed": self.passed,
            "failures": list(self.failures),
            "mfw_bound": self.mfw_bound,
            "mfw_equal": self.mfw_equal,
        }


_EXPECTED_CLASS = {"s": "symmetric", "a": "antisymmetric", "an": "antisymmetric"}


def verify_row(row: KnotRow, check_jones: bool = False) -> RowReport:
    """Recompute every column claim of one row from its codes."""
    failures: list[str] = []
    words: list[tuple[int, BraidWord]] = []
    for code in row.all_codes():
        try:
            words.append((code, word_from_code(code)))
        except ValueError as exc:
            failures.append(f"code {code} does not decode: {exc}")
    for code, w in words:
        if len(w.letters) != row.tight_length:
            failures.append(f"code {code}: length {len(w.letters)} != l")
        if w.strands != row.braid_index:
            failures.append(f"code {code}: strands {w.strands} != b")
        if closure_components(w) != 1:
            failures.append(f"code {code}: closure is not a knot")
        if code_int(step_code(w)) != code:
            failures.append(f"code {code}: does not re-encode to itself")

    claimed = sum(e.web_count() for e in row.entries)
    if claimed != row.web_count:
        failures.append(f"web arithmetic {claimed} != n = {row.web_count}")

    decoded = dict(words)
    for entry in row.entries:
        for code in entry.codes():
            w = decoded.get(code)
            if w is None:
                continue
            expected = _EXPECTED_CLASS.get(entry.flag, "none")
            got = symmetry_class(w)
            if got != expected:
                failures.append(f"code {code}: symmetry {got} != {expected}")
            if is_alternating(w) != entry.alternating:
                failures.append(f"code {code}: alternation flag mismatch")
        if entry.plus_minus and entry.code in decoded and -entry.code in decoded:
            plus, minus = decoded[entry.code], decoded[-entry.code]
            if minus.letters != mirror(plus).letters:
                failures.append(f"+-{entry.code}: signs are not mirror words")

    polys = {code: homfly(w) for code, w in words}
    bound, mfw_equal = 0, False
    if polys:
        base = next(iter(polys.values()))
        for code, p in polys.items():
            if p != base:
                failures.append(f"code {code}: HOMFLY differs within row")
        bound = mfw_bound(base)
        if bound > row.braid_index:
            failures.append(f"MFW bound {bound} exceeds b = {row.braid_index}")
        mfw_equal = bound == row.braid_index
        if row.sym in ("f", "i") and homfly_mirrored(base) != base:
            failures.append("amphicheiral row has chiral HOMFLY")
        if check_jones:
            for code, w in words:
                if jones_from_homfly(polys[code]) != jones_via_bracket(w):
                    failures.append(f"code {code}: Jones oracles disagree")
    return RowReport(row.label, tuple(failures), bound, mfw_equal)


@dataclass(frozen=True)
class VerifyReport:
    rows: tuple[RowReport, ...]
    webs_per_knot: float
    length_per_web: float
    length_per_row: float

    @property
    def averages_ok(self) -> bool:
        lengths_ok = (
            abs(self.length_per_web - 11.5) <= 0.05
            or abs(self.length_per_row - 11.5) <= 0.05
        )
        return abs(self.webs_per_knot - 2.9) <= 0.05 and lengths_ok

    @property
    def passed(self) -> bool:
        return self.averages_ok and all(r.passed for r in self.rows)

    def strict_mfw_rows(self) -> tuple[str, ...]:
        return tuple(r.label for r in self.rows if not r.mfw_equal)

    def to_text(self) -> str:
        lines = []
        for r in self.rows:
            status = "pass" if r.passed else "FAIL"
            lines.append(f"{r.label:<6} {status}  mfw={r.mfw_bound}")
            lines.extend(f"    {f}" for f in r.failures)
        eq = sum(1 for r in self.rows if r.mfw_equal)
        lines.append(
            f"webs/knot {self.webs_per_knot:.3f}  "
            f"length/web {self.length_per_web:.3f}  "
            f"length/row {self.length_per_row:.3f}  "
            f"averages {'ok' if self.averages_ok else 'FAIL'}"
        )
        lines.append(f"MFW equality on {eq}/{len(self.rows)} rows")
        strict = self.strict_mfw_rows()
        if strict:
            lines.append("strict MFW rows: " + " ".join(strict))
        lines.append("table: " + ("pass" if self.passed else "FAIL"))
        return "\n".join(lines)

    def records(self) -> list[dict]:
        out = [r.record() for r in self.rows]
        out.append(
            {
                "summary": True,
                "passed": self.passed,
                "webs_per_knot": self.webs_per_knot,
                "length_per_web": self.length_per_web,
                "length_per_row": self.length_per_row,
                "mfw_equal_rows": sum(1 for r in self.rows if r.mfw_equal),
                "strict_mfw_rows": list(self.strict_mfw_rows()),
            }
        )
        return out


def verify_table(
    rows=None,
    jobs: int | None = None,
    check_jones: bool = False,
) -> VerifyReport:
    """Verify every row, optionally across a process pool."""
    if rows is None:
        rows = load_table()
    jobs = default_jobs() if jobs is None else jobs
    args = [(row, check_jones) for row in rows]
    if jobs > 1 and len(rows) > 1:
        with multiprocessing.get_context("fork").Pool(jobs) as pool:
            reports = pool.starmap(verify_row, args)
    else:
        reports = [verify_row(*a) for a in args]
    total_webs = sum(r.web_count for r in rows)
    weighted = sum(r.tight_length * r.web_count for r in rows)
    return VerifyReport(
        rows=tuple(reports),
        webs_per_knot=total_webs / len(rows),
        length_per_web=weighted / total_webs,
        length_per_row=sum(r.tight_length for r in rows) / len(rows),
    )


def enumerate_webs(
    max_len: int,
    n_range=None,
    max_frontier: int | None = None,
    prefix=None,
):
    """Yield every tight word of length <= max_len, in step-sequence order.

    Words are produced once per step sequence (never per braid class); the
    moving strand's index never dips below 1 and a word is emitted whenever
    the walk is currently complete.  n_range, if given, keeps only words
    whose strand count lies in it.  prefix = (lead_sign, steps) restricts
    the search to extensions of one subtree, enabling work splitting.
    """
    if max_len < 1:
        return
    cap = DEFAULT_ENUM_FRONTIER if max_frontier is None else max_frontier
    visited = 0

    def emit(letters, mx):
        if n_range is None or mx + 1 in n_range:
            return BraidWord(mx + 1, tuple(letters))
        return None

    def rec(letters, i, d, e, mx):
        nonlocal visited
        visited += 1
        if visited > cap:
            raise ResourceLimitError(f"enumeration frontier cap {cap} exceeded")
        if d == 1 and i == mx:
            w = emit(letters, mx)
            if w is not None:
                yield w
        if len(letters) == max_len:
            return
        for c in (0, 1, 2):
            if c == 2:
                i2, d2, e2 = i, -d, e
            else:
                i2, d2 = i + d, d
                if i2 < 1:
                    continue
                e2 = -e if c == 1 else e
            letters.append(e2 * i2)
            yield from rec(letters, i2, d2, e2, max(mx, i2))
            letters.pop()

    def replay(lead, steps):
        i, d, e = 1, 1, lead
        letters = [lead]
        for c in steps:
            if c == 2:
                d = -d
            else:
                i += d
                if i < 1:
                    raise ValueError("prefix is not a valid walk")
                if c == 1:
                    e = -e
            letters.append(e * i)
        return letters, i, d, e, max(abs(x) for x in letters)

    if prefix is not None:
        lead, steps = prefix
        if len(steps) + 1 > max_len:
            return
        letters, i, d, e, mx = replay(lead, steps)
        yield from rec(letters, i, d, e, mx)
        return
    for lead in (1, -1):
        yield from rec([lead], 1, 1, lead, 1)


@dataclass(frozen=True)
class MinimalityReport:
    braid_index: int
    tight_length: int
    shorter_matches: tuple[tuple[int, str], ...]
    matches: tuple[int, ...]

    @property
    def passed(self) -> bool:
        return not self.shorter_matches

    def record(self) -> dict:
        return {
            "b": self.braid_index,
            "l": self.tight_length,
            "passed": self.passed,
            "shorter_matches": [list(m) for m in self.shorter_matches],
            "length_matches": list(self.matches),
        }


def minimality_check(
    target: TwoVarLaurent,
    braid_index: int,
    tight_length: int,
    max_frontier: int | None = None,
) -> MinimalityReport:
    """Search all webs on the given strand count up to the given length.

    Reports any strictly shorter web whose closure has the target HOMFLY
    (there should be none for a minimal row) and the integer codes of all
    webs matching at the exact length.
    """
    shorter: list[tuple[int, str]] = []
    matches: list[int] = []
    for w in enumerate_webs(
        tight_length, n_range=(braid_index,), max_frontier=max_frontier
    ):
        if homfly(w) != target:
            continue
        if len(w.letters) < tight_length:
            shorter.append((len(w.letters), str(w)))
        else:
            matches.append(code_int(step_code(w)))
    return MinimalityReport(
        braid_index=braid_index,
        tight_length=tight_length,
        shorter_matches=tuple(shorter),
        matches=tuple(sorted(matches)),
    )
