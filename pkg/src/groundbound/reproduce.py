"""Full reproduction pipeline: every quantitative claim, one report.

Assembles the dataset checks, the dimension eliminations, the Fuchsian
and quadrangle degree bounds, the five family tables, both pair-search
global bounds and the final summary of family maxima.  The output is a
`report.Report`, deterministic for a fixed configuration.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import datasets, polytopes
from .balls import PI, Const, Mul, Div
from .graphs import Family, FamilyTable, family_bound, PUBLISHED_FAMILY_MAXIMA
from .pairs import PairKind, global_bound
from .report import Record, Report

PUBLISHED_N14 = 120


@dataclass(frozen=True)
class RunConfig:
    k_max: int = 10**7
    jobs: int = 1
    precision_cap_bits: int = 4096
    output_format: str = "text"


def dataset_records() -> list[Record]:
    summary = datasets.dataset_summary()
    expected = {
        "lanner4_count": 3,
        "takeuchi_field_count": 13,
        "takeuchi_max_degree": 5,
        "triangle_triple_count": 76,
        "all_triples_hyperbolic": True,
    }
    out = []
    for key, want in expected.items():
        got = summary[key]
        out.append(Record(pipeline="datasets", case=key, inputs={},
                          result=int(got) if isinstance(got, bool) is False else str(got).lower(),
                          paper_expected=None if isinstance(want, bool) else want,
                          match=(got == want)))
    return out


def polytope_records(n_max: int = 10**4) -> list[Record]:
    out = []
    dim = polytopes.max_admissible_dimension(n_max)
    out.append(Record(pipeline="polytope", case=f"max admissible dimension (n <= {n_max})",
                      inputs={}, result=dim, paper_expected=9, match=dim == 9))
    tie = polytopes.existence_inequality(10)
    out.append(Record(pipeline="polytope", case="n=10 counting inequality",
                      inputs={"lhs": tie.lhs, "rhs": tie.rhs},
                      result="holds" if tie.holds else "fails",
                      paper_expected=None, match=not tie.holds,
                      note="exact tie 180 vs 180 resolved as failure of the strict inequality"))
    identity_ok = all(
        polytopes.narrow_face_vertex_bound(n) == polytopes.face_average_bound(0, 2, n - 1)
        for n in range(4, 201)
    )
    out.append(Record(pipeline="polytope", case="narrow-face bound identity (4 <= n <= 200)",
                      inputs={}, result="exact" if identity_ok else "broken",
                      paper_expected=None, match=identity_ok))
    return out


def fuchsian_records() -> list[Record]:
    out = []
    t11 = polytopes.takeuchi_bound(0, 4)
    out.append(Record(pipeline="fuchsian", case="quadrangle degree bound (g=0, t=4)",
                      inputs={"a": Fraction("29.099"), "b": Fraction("8.3185")},
                      result=t11, paper_expected=11, match=t11 == 11))
    area = Div(Mul(Const(Fraction(128)), PI), Const(Fraction(3)))
    t46 = polytopes.fuchsian_t_bound(area)
    out.append(Record(pipeline="fuchsian", case="periods bound at area 128 pi/3",
                      inputs={"area": area}, result=t46, paper_expected=46, match=t46 == 46))
    t44 = polytopes.takeuchi_bound(0, 46)
    out.append(Record(pipeline="fuchsian", case="genus-0 degree bound (g=0, t=46)",
                      inputs={}, result=t44, paper_expected=44, match=t44 == 44))
    return out


def family_records(table: FamilyTable) -> list[Record]:
    out = []
    for row in table.rows:
        inputs = {}
        if row.problem is not None:
            inputs = {
                "M": row.problem.m_field_degree,
                "B": row.problem.b_disc_root,
                "R": row.problem.r_ratio,
                "S": row.problem.s_factor,
            }
        variant = row.variant.value if row.variant else ""
        out.append(Record(
            pipeline=f"family-{table.family.value}",
            case=f"{row.case.label()} [{variant}, m={row.m}]",
            inputs=inputs,
            result=row.bound,
            paper_expected=row.published_bound,
            match=row.match,
            note=("forced degree: identity discriminant negative"
                  if row.mechanism == "forced_degree" else ""),
        ))
    published_max = PUBLISHED_FAMILY_MAXIMA.get(table.family)
    out.append(Record(pipeline=f"family-{table.family.value}",
                      case="family maximum (Method A table)",
                      inputs={}, result=table.maximum,
                      paper_expected=published_max if table.family in
                      (Family.G1, Family.G2, Family.G3) else None,
                      match=(table.maximum == published_max) if table.family in
                      (Family.G1, Family.G2, Family.G3) else None))
    return out


def pair_records(kind: PairKind, k_max: int, jobs: int) -> tuple[list[Record], int]:
    gb = global_bound(kind, k_max=k_max, jobs=jobs)
    out = []
    result = gb.search_result
    out.append(Record(pipeline=f"pairs-{kind.value}", case="exceptional pair count",
                      inputs={}, result=len(result.exceptional),
                      paper_expected=14 if kind is PairKind.GAMMA5 else None,
                      match=(len(result.exceptional) == 14) if kind is PairKind.GAMMA5 else None))
    out.append(Record(pipeline=f"pairs-{kind.value}",
                      case=f"surviving non-exceptional pairs (k <= {k_max})",
                      inputs={}, result=len(result.survivors), paper_expected=None, match=None))
    for r in result.survivors:
        if r.published_bound_kf is not None or r.bound_k > 120:
            note = ""
            if r.published_bound_kf is not None and not r.intermediates_match:
                note = (f"formula intermediates ({r.bound_kf}, {r.bound_k}) diverge from "
                        f"printed ({r.published_bound_kf}, {r.published_bound_k}); "
                        "divergence documented, refined bound is normative")
            out.append(Record(
                pipeline=f"pairs-{kind.value}",
                case=f"pair (k={r.k}, s={r.s})",
                inputs={"coefficient": Fraction(r.coefficient).limit_denominator(10**12),
                        "field_degree": r.field_degree,
                        "bound_KF": r.bound_kf, "bound_K": r.bound_k,
                        "refined_KF": r.refined_kf},
                result=r.final_bound,
                paper_expected=r.published_final,
                match=None if r.published_final is None else r.final_bound == r.published_final,
                note=note,
            ))
    if kind is PairKind.GAMMA4:
        out.append(Record(pipeline=f"pairs-{kind.value}",
                          case="Method A maximum over 2 <= k <= 6",
                          inputs={}, result=gb.method_a_small_k_max,
                          paper_expected=31, match=gb.method_a_small_k_max == 31))
    out.append(Record(pipeline=f"pairs-{kind.value}", case="global maximum",
                      inputs={"argmax": str(gb.argmax)},
                      result=gb.maximum, paper_expected=120, match=gb.maximum == 120))
    return out, gb.maximum


def reproduce_all(config: RunConfig = RunConfig()) -> Report:
    report = Report(title="groundbound reproduction report")
    report.add_section("datasets", dataset_records())
    report.add_section("polytope dimension elimination", polytope_records())
    report.add_section("Fuchsian and quadrangle bounds", fuchsian_records())

    maxima = {}
    for family in (Family.G1, Family.G2, Family.G3):
        table = family_bound(family)
        maxima[family] = table.maximum
        report.add_section(f"family {family.value}", family_records(table))

    g4_table = family_bound(Family.G4, range(2, 7))
    report.add_section("family Gamma4 (2 <= k <= 6)", family_records(g4_table))

    g5_records, g5_max = pair_records(PairKind.GAMMA5, config.k_max, config.jobs)
    report.add_section("pair search (path family, ln 7)", g5_records)
    g4_records, g4_max = pair_records(PairKind.GAMMA4, config.k_max, config.jobs)
    report.add_section("pair search (star family, ln 8)", g4_records)
    maxima[Family.G4] = g4_max
    maxima[Family.G5] = g5_max

    summary = []
    for family in Family:
        want = PUBLISHED_FAMILY_MAXIMA[family]
        got = maxima[family]
        summary.append(Record(pipeline="summary", case=f"max degree over {family.value}",
                              inputs={}, result=got, paper_expected=want,
                              match=got == want))
    overall = max(maxima.values())
    summary.append(Record(pipeline="summary", case="degree bound N(14)",
                          inputs={}, result=overall, paper_expected=PUBLISHED_N14,
                          match=overall == PUBLISHED_N14))
    report.add_section("family maxima summary", summary)
    return report
