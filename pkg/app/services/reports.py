"""
Report Service for OrientLab

Shared by the command line and the HTTP API: resolves graph families into
SimpleGraph instances, runs the core computations and turns their results into
the pydantic documents of core.schemas, plus the CSV and text renderings.

Functions:
- build_graph(family, n, k, r, graph_path, ...) - Resolve a family (or file) to a graph, budget-checked on request
- spectrum_document(g, ...) - Spectrum, closed-form d_max and pi_T of one graph
- construction_document(n) - The verified reversal sequence of C_n^2
- survey(family, ns, ...) - One SurveyRow per family member
- probe_alpha(k, ns, ...) - Full orientability of C_n^k over a range of n
"""

import logging
import time
from enum import Enum
from pathlib import Path
from typing import Dict, Iterable, List, Optional, Tuple, Union

from app.config import settings
from core.constructions import OrientationSequence, SequenceEntry, construct_reversal_sequence
from core.errors import BudgetExceeded, GraphError
from core.graph_core import (
    SimpleGraph,
    are_isomorphic,
    complete_graph,
    complete_multipartite,
    cycle_graph,
    cycle_power,
    read_graph,
)
from core.orientation import dependent_arcs
from core.schemas import (
    GraphDocument,
    GraphInfo,
    ProbeRow,
    ProbeTable,
    SequenceDocument,
    SequenceEntryDocument,
    SpectrumDocument,
    SurveyRow,
    VerificationReport,
)
from core.spectrum import (
    Strategy,
    check_budget,
    d_max_closed_form,
    dependency_spectrum,
    min_triangle_edge_deletion,
)

logger = logging.getLogger(__name__)


class Family(str, Enum):
    """Graph families known to the command line and the API"""
    CYCLE = "cycle"
    CYCLE_POWER = "cycle-power"
    COMPLETE = "complete"
    MULTIPARTITE = "multipartite"


def parse_range(text: str) -> range:
    """
    Parse "A..B" (inclusive) or a single integer "A".

    Raises:
        GraphError: If the text is not a valid range
    """
    lo, sep, hi = text.partition("..")
    try:
        start = int(lo)
        stop = int(hi) if sep else start
    except ValueError:
        raise GraphError(f"Invalid range {text!r}: expected N or A..B") from None
    if stop < start:
        raise GraphError(f"Invalid range {text!r}: upper end below lower end")
    return range(start, stop + 1)


def _family_params(family: Family, n: int, k: Optional[int], r: Optional[int]) -> Dict[str, int]:
    if family is Family.CYCLE_POWER:
        return {"n": n, "k": k}
    if family is Family.MULTIPARTITE:
        return {"r": r, "n": n}
    return {"n": n}


def family_size(
    family: Union[Family, str],
    n: Optional[int],
    k: Optional[int] = None,
    r: Optional[int] = None,
) -> Optional[Tuple[int, int]]:
    """
    (|V|, |E|) of a family member from its parameters alone, or None when the
    parameters are invalid (the generator reports those).
    """
    try:
        family = Family(family)
    except ValueError:
        return None
    if n is None:
        return None
    if family is Family.CYCLE:
        return (n, n) if n >= 3 else None
    if family is Family.CYCLE_POWER:
        if n < 3 or k is None or k < 1:
            return None
        # C_n^k is complete once k reaches the diameter n // 2
        return n, n * (n - 1) // 2 if k >= n // 2 else n * k
    if family is Family.COMPLETE:
        return (n, n * (n - 1) // 2) if n >= 1 else None
    if r is None or r < 2 or n < 1:
        return None
    return r * n, r * (r - 1) // 2 * n * n


def family_info(
    family: Union[Family, str],
    n: Optional[int],
    k: Optional[int] = None,
    r: Optional[int] = None,
) -> Optional[GraphInfo]:
    """GraphInfo of a family member without generating it."""
    size = family_size(family, n, k, r)
    if size is None:
        return None
    family = Family(family)
    return GraphInfo(family=family.value, params=_family_params(family, n, k, r), n=size[0], m=size[1])


def check_family_budget(
    family: Union[Family, str],
    n: Optional[int],
    k: Optional[int] = None,
    r: Optional[int] = None,
    strategy: Union[Strategy, str] = Strategy.AUTO,
    budget: Optional[int] = None,
) -> None:
    """
    Refuse an over-budget family member before any of its edges are generated.

    Raises:
        BudgetExceeded: If enumerating the member would exceed the budget
    """
    size = family_size(family, n, k, r)
    if size is None:
        return
    params = " ".join(f"{name}={value}" for name, value in _family_params(Family(family), n, k, r).items())
    check_budget(*size, strategy=Strategy(strategy), budget=budget, label=f"{Family(family).value} {params}")


def build_graph(
    family: Optional[Union[Family, str]] = None,
    n: Optional[int] = None,
    k: Optional[int] = None,
    r: Optional[int] = None,
    graph_path: Optional[Union[str, Path]] = None,
    strategy: Optional[Union[Strategy, str]] = None,
    budget: Optional[int] = None,
) -> SimpleGraph:
    """
    Resolve CLI/API parameters to a graph.

    For the multipartite family, r is the number of parts and n the part size.
    When a strategy is given the family member is first checked against the
    enumeration budget, from its parameters alone.

    Raises:
        GraphError: On missing or invalid parameters, or an unreadable graph file
        BudgetExceeded: If a strategy is given and enumeration would exceed the budget
    """
    if graph_path is not None:
        return read_graph(graph_path)
    if family is None:
        raise GraphError("Either a family or a graph file is required")
    try:
        family = Family(family)
    except ValueError:
        raise GraphError(f"Unknown family {family!r}") from None
    if n is None:
        raise GraphError(f"Family {family.value} needs n")
    if strategy is not None:
        check_family_budget(family, n, k, r, strategy=strategy, budget=budget)

    if family is Family.CYCLE:
        return cycle_graph(n)
    if family is Family.CYCLE_POWER:
        if k is None:
            raise GraphError("Family cycle-power needs k")
        return cycle_power(n, k)
    if family is Family.COMPLETE:
        return complete_graph(n)
    if r is None:
        raise GraphError("Family multipartite needs r (number of parts)")
    return complete_multipartite(r, n)


def graph_info(g: SimpleGraph) -> GraphInfo:
    return GraphInfo(family=g.family, params=dict(g.params), n=g.n_vertices, m=g.n_edges)


def graph_document(g: SimpleGraph) -> GraphDocument:
    return GraphDocument(
        family=g.family, params=dict(g.params), n=g.n_vertices, m=g.n_edges, edges=[list(e) for e in g.edges],
    )


def _pi_t(g: SimpleGraph) -> Optional[int]:
    try:
        return min_triangle_edge_deletion(g).pi_t
    except BudgetExceeded as exc:
        logger.warning(f"pi_T skipped: {exc}")
        return None


def spectrum_document(
    g: SimpleGraph,
    strategy: Union[Strategy, str] = Strategy.AUTO,
    budget: Optional[int] = None,
    workers: Optional[int] = None,
) -> SpectrumDocument:
    """
    Raises:
        BudgetExceeded: If the enumeration does not fit the budget
    """
    started = time.perf_counter()
    result = dependency_spectrum(g, budget=budget, strategy=Strategy(strategy), workers=workers)
    return SpectrumDocument(
        graph=graph_info(g),
        achievable=list(result.achievable),
        counts=result.counts,
        d_min=result.d_min,
        d_max=result.d_max,
        d_max_formula=d_max_closed_form(g),
        fully_orientable=result.fully_orientable,
        gaps=list(result.gaps),
        strategy=result.strategy.value,
        enumerated=result.enumerated,
        pi_t=_pi_t(g),
        elapsed_ms=round((time.perf_counter() - started) * 1000, 3),
    )


def spectrum_csv(doc: SpectrumDocument) -> str:
    """One "d,count" row per achievable d, then a '#' summary row."""
    lines = ["d,count"]
    lines.extend(f"{d},{count}" for d, count in sorted(doc.counts.items()))
    gaps = " ".join(map(str, doc.gaps))
    lines.append(
        f"# d_min={doc.d_min},d_max={doc.d_max},fully_orientable={str(doc.fully_orientable).lower()},"
        f"gaps={gaps},strategy={doc.strategy}"
    )
    return "\n".join(lines) + "\n"


def spectrum_text(doc: SpectrumDocument) -> str:
    params = " ".join(f"{k}={v}" for k, v in doc.graph.params.items())
    lines = [
        f"graph       {doc.graph.family} {params} (n={doc.graph.n}, m={doc.graph.m})".rstrip(),
        f"spectrum    {doc.achievable}",
        f"d range     [{doc.d_min}, {doc.d_max}]  closed form d_max = {doc.d_max_formula}",
        f"fully orientable: {'yes' if doc.fully_orientable else 'no'}"
        + (f"  (gaps: {doc.gaps})" if doc.gaps else ""),
        f"pi_T        {doc.pi_t if doc.pi_t is not None else 'skipped'}",
        f"enumerated  {doc.enumerated} acyclic orientations via {doc.strategy}",
    ]
    return "\n".join(lines) + "\n"


def entry_document(index: int, entry: SequenceEntry) -> SequenceEntryDocument:
    report = dependent_arcs(entry.orientation)
    return SequenceEntryDocument(
        index=index,
        label=entry.label,
        target_d=entry.target_d,
        d=report.d,
        predecessor=entry.predecessor,
        reversed_arcs=[list(a) for a in sorted(entry.reversal_from_previous)],
        dependent_arcs=[list(a) for a in sorted(report.dependent)],
        arcs=[list(a) for a in sorted(entry.orientation.arcs())],
    )


def sequence_document(sequence: OrientationSequence) -> SequenceDocument:
    entries = [entry_document(index, entry) for index, entry in enumerate(sequence.entries)]
    return SequenceDocument(n=sequence.n, targets=list(sequence.targets), entries=entries)


def construction_document(n: int) -> SequenceDocument:
    """
    Raises:
        GraphError: If n < 7
        VerificationFailure: If the oracle rejects an entry
    """
    return sequence_document(construct_reversal_sequence(n))


def sequence_text(doc: SequenceDocument) -> str:
    lines = [f"C_{doc.n}^2 reversal sequence, d = {doc.targets[0]}..{doc.targets[-1]}"]
    for entry in doc.entries:
        origin = "" if entry.predecessor is None else f" <- #{entry.predecessor}"
        flipped = f" reverse {entry.reversed_arcs}" if entry.reversed_arcs else ""
        lines.append(f"  #{entry.index:<3} {entry.label:<12} d={entry.d}{origin}{flipped}")
    return "\n".join(lines) + "\n"


def report_text(report: VerificationReport) -> str:
    lines = [f"C_{report.n}^2 verification ({report.elapsed_ms:.1f} ms)"]
    for clause in report.clauses:
        lines.append(f"  [{clause.status.upper()}] {clause.name}: {clause.detail}")
    return "\n".join(lines) + "\n"


def survey(
    family: Union[Family, str],
    ns: Iterable[int],
    k: Optional[int] = None,
    r: Optional[int] = None,
    strategy: Union[Strategy, str] = Strategy.AUTO,
    budget: Optional[int] = None,
    workers: Optional[int] = None,
) -> List[SurveyRow]:
    """Spectrum summary per family member; over-budget members are reported as skipped."""
    rows = []
    for n in ns:
        try:
            g = build_graph(family, n, k, r, strategy=strategy, budget=budget)
            result = dependency_spectrum(g, budget=budget, strategy=Strategy(strategy), workers=workers)
        except BudgetExceeded as exc:
            info = family_info(family, n, k, r)
            logger.warning(f"Survey skips {info.family} n={n}: {exc}")
            # every family member is connected, so c = 1
            rows.append(SurveyRow(graph=info, status="skipped", d_max_formula=info.m - info.n + 1, reason=str(exc)))
            continue
        rows.append(SurveyRow(
            graph=graph_info(g),
            status="ok",
            fully_orientable=result.fully_orientable,
            d_min=result.d_min,
            d_max=result.d_max,
            d_max_formula=d_max_closed_form(g),
            pi_t=_pi_t(g),
            gaps=list(result.gaps),
        ))
    return rows


def survey_csv(rows: List[SurveyRow]) -> str:
    lines = ["family,n,m,d_min,d_max,d_max_formula,pi_t,fully_orientable,gaps,status"]
    for row in rows:
        cells = [
            row.graph.family,
            row.graph.n,
            row.graph.m,
            row.d_min,
            row.d_max,
            row.d_max_formula,
            row.pi_t,
            None if row.fully_orientable is None else str(row.fully_orientable).lower(),
            None if row.gaps is None else " ".join(map(str, row.gaps)),
            row.status,
        ]
        lines.append(",".join("" if c is None else str(c) for c in cells))
    return "\n".join(lines) + "\n"


def probe_alpha(
    k: int,
    ns: Iterable[int],
    strategy: Union[Strategy, str] = Strategy.AUTO,
    budget: Optional[int] = None,
    workers: Optional[int] = None,
) -> ProbeTable:
    """
    Full orientability of C_n^k for each n. Rows with n = 2k + 2 are marked:
    there C_n^k is the complete (k+1)-partite graph with parts of size 2, which
    is never fully orientable for k >= 2.

    Raises:
        GraphError: If k < 2
        BudgetExceeded: If every requested n is over budget
    """
    if k < 2:
        raise GraphError(f"probe-alpha needs k >= 2, got {k}")
    table = ProbeTable(k=k)
    for n in ns:
        marked = n == 2 * k + 2
        note = _multipartite_note(cycle_power(n, k), k) if marked else None
        try:
            check_family_budget(Family.CYCLE_POWER, n, k, strategy=strategy, budget=budget)
            g = cycle_power(n, k)
            result = dependency_spectrum(g, budget=budget, strategy=Strategy(strategy), workers=workers)
        except BudgetExceeded as exc:
            logger.warning(f"probe-alpha skips n={n}: {exc}")
            table.rows.append(ProbeRow(n=n, k=k, status="skipped", marked=marked, note=note, reason=str(exc)))
            continue
        table.rows.append(ProbeRow(
            n=n,
            k=k,
            status="ok",
            fully_orientable=result.fully_orientable,
            achievable=list(result.achievable),
            d_min=result.d_min,
            d_max=result.d_max,
            gaps=list(result.gaps),
            marked=marked,
            note=note,
        ))

    if table.rows and all(row.status == "skipped" for row in table.rows):
        raise BudgetExceeded(
            f"Every requested C_n^{k} exceeds the budget", budget=budget or settings.default_budget
        )
    return table


def _multipartite_note(g: SimpleGraph, k: int) -> str:
    target = complete_multipartite(k + 1, 2)
    try:
        same = are_isomorphic(g, target)
    except BudgetExceeded:
        return f"isomorphism with K_{k + 1}(2) not checked (too many vertices)"
    return f"{'isomorphic' if same else 'NOT isomorphic'} to K_{k + 1}(2)"


def probe_text(table: ProbeTable) -> str:
    lines = [f"{'n':>4}  {'fully':<6} {'d_min':>5} {'d_max':>5}  gaps"]
    for row in table.rows:
        mark = "  * n = 2k+2" + (f", {row.note}" if row.note else "") if row.marked else ""
        if row.status == "skipped":
            lines.append(f"{row.n:>4}  skipped{mark}")
            continue
        verdict = "yes" if row.fully_orientable else "no"
        lines.append(f"{row.n:>4}  {verdict:<6} {row.d_min:>5} {row.d_max:>5}  {row.gaps}{mark}")
    return "\n".join(lines) + "\n"
