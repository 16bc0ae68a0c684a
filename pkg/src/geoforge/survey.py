"""Word surveys: enumerate classes, length them, count intersections.

Rows are sorted by (length, word); since length is monotone in |trace|
the sort key is exact integer data, so the output order never depends
on floating-point rounding or on the number of worker processes.
Workers receive plain strings and return plain tuples; the assembly
order is the enumeration order, which makes byte-identical output
across thread counts a structural property rather than an accident.
"""

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from mpmath import mp

from .intersect import IntersectionConfig, _ORDER_TR, self_intersection
from .numerics import PrecisionContext, context
from .words import CyclicWord, back_winding_shape, enumerate_words, evaluate_letters


@dataclass(frozen=True)
class SurveyRow:
    word: str
    trace: int
    length: object
    self_intersections: int
    certified: bool
    bacK_shape: object
    radius_used: int

    def sort_key(self):
        return (abs(self.trace), self.word.translate(_ORDER_TR))

    def as_dict(self, ctx: PrecisionContext):
        return {
            "word": self.word,
            "trace": str(self.trace),
            "length": ctx.str(self.length),
            "self_intersections": self.self_intersections,
            "certified": self.certified,
            "bacK": _shape_str(self.bacK_shape),
        }


@dataclass(frozen=True)
class SurveySummary:
    k: int
    best_word: str
    s_geq_k_upper: object
    candidate_bacK_length: object
    coverage_note: str

    def as_dict(self, ctx: PrecisionContext):
        return {
            "k": self.k,
            "best_word": self.best_word,
            "s_geq_k_upper": None if self.s_geq_k_upper is None else ctx.str(self.s_geq_k_upper),
            "candidate_bacK_length": ctx.str(self.candidate_bacK_length),
            "coverage_note": self.coverage_note,
        }


def _shape_str(shape):
    if shape is None:
        return ""
    return f"{shape[0]}^{shape[1]}"


def _survey_one(args):
    letters, precision, start_radius, max_radius = args
    word = CyclicWord(letters)
    m = evaluate_letters(letters)
    trace = m[0] + m[3]
    config = IntersectionConfig(start_radius=start_radius, max_radius=max_radius)
    res = self_intersection(word, config)
    return (letters, trace, res.count, res.certified, res.radius_used)


def run_survey(max_len, ks=(), threads=1, ctx: PrecisionContext = None,
               config: IntersectionConfig = None):
    """Survey all primitive hyperbolic classes through word length
    max_len; returns (rows, summaries)."""
    ctx = ctx or context()
    config = config or IntersectionConfig()
    words = [w.letters for w in enumerate_words(max_len, "hyperbolic-primitive")]
    tasks = [(w, ctx.precision, config.start_radius, config.max_radius) for w in words]
    if threads > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            chunk = max(1, len(tasks) // (threads * 16))
            results = list(pool.map(_survey_one, tasks, chunksize=chunk))
    else:
        results = [_survey_one(t) for t in tasks]

    rows = []
    with ctx.workprec():
        for letters, trace, count, certified, radius in results:
            length = 2 * mp.acosh(mp.mpf(abs(trace)) / 2)
            rows.append(SurveyRow(letters, trace, length, count, certified,
                                  back_winding_shape(CyclicWord(letters)), radius))
    rows.sort(key=SurveyRow.sort_key)
    summaries = [summarize(rows, int(k), max_len, ctx) for k in sorted(set(int(k) for k in ks))]
    return rows, summaries


def summarize(rows, k, max_len, ctx: PrecisionContext = None) -> SurveySummary:
    """Shortest certified class with at least k self-intersections, next
    to the k-fold cusp-winding candidate of length 2 acosh(2k+1)."""
    ctx = ctx or context()
    best = next((r for r in rows if r.certified and r.self_intersections >= k), None)
    with ctx.workprec():
        candidate = 2 * mp.acosh(mp.mpf(2 * k + 1))
    note = (f"complete enumeration of primitive hyperbolic classes through "
            f"word length {max_len}; certified rows only")
    if best is None:
        return SurveySummary(k, "", None, candidate, note)
    return SurveySummary(k, best.word, best.length, candidate, note)


def rows_to_csv(rows, ctx: PrecisionContext, header=True):
    lines = []
    if header:
        lines.append("word,trace,length,self_intersections,certified,bacK")
    for r in rows:
        d = r.as_dict(ctx)
        lines.append(",".join([
            d["word"], d["trace"], d["length"], str(d["self_intersections"]),
            "true" if d["certified"] else "false", d["bacK"],
        ]))
    return "\n".join(lines) + "\n"
