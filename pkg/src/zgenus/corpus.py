"""Regression corpus: recompute the published identities from bundled JSON files.

Each corpus file holds one object with a ``name``, a ``check`` naming one of
the recomputations below and the check's parameters.  Files run in sorted
filename order and cases inside a file in a fixed order, so a run is
reproducible for a given seed.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Callable, Iterator

from .alexander import alexander_polynomial, is_torsion_free, ln_family_module, torsion_decomposition
from .blanchfield import verify_certificate
from .documents import from_json
from .errors import CorpusMismatch, SchemaError
from .genus import SearchBudget, shake_genus, z_genus_knot, z_genus_link
from .laurent import LaurentPoly, is_associate
from .matrix import LambdaMatrix, det
from .pipeline import run
from .seifert import (
    internal_band_sum,
    parallel_link,
    validate_knot_seifert,
    whitehead_double_2,
    whitehead_double_3,
)

Case = tuple[str, bool, str]  # (case id, passed, detail)


@dataclass
class CorpusResult:
    name: str
    check: str
    cases: int = 0
    failures: list[tuple[str, str]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


@dataclass
class CorpusSummary:
    results: list[CorpusResult]

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.results)

    def table(self) -> str:
        width = max([len(r.name) for r in self.results] + [6])
        lines = [f"{'corpus':<{width}}  {'check':<24} {'cases':>6} {'failed':>6}  status"]
        for r in self.results:
            status = "ok" if r.ok else "MISMATCH"
            lines.append(f"{r.name:<{width}}  {r.check:<24} {r.cases:>6} {len(r.failures):>6}  {status}")
            for case, detail in r.failures[:10]:
                lines.append(f"    {case}: {detail}")
        return "\n".join(lines)

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "results": [
                {"name": r.name, "check": r.check, "cases": r.cases, "failures": [list(f) for f in r.failures]}
                for r in self.results
            ],
        }


# -- identities --------------------------------------------------------


def _raw_det(S) -> LaurentPoly:
    return det(LambdaMatrix.presentation(S.V))


def _range(params, key) -> range:
    lo, hi = params[key]
    return range(lo, hi + 1)


def whitehead3_condition(n: tuple[int, int, int], a: tuple[int, int, int]) -> bool:
    """All n_i vanish, or some i, j, k distinct have a_i = -a_j, n_k = 0, |n_i| = |n_j|."""
    if not any(n):
        return True
    return any(
        a[i] == -a[j] and n[k] == 0 and abs(n[i]) == abs(n[j])
        for i, j, k in itertools.permutations(range(3))
    )


def _whitehead2_coefficients(params, budget) -> Iterator[Case]:
    for n in _range(params, "n"):
        for a1, a2 in itertools.product((1, -1), repeat=2):
            d = _raw_det(whitehead_double_2(n, a1, a2))
            want3, want4 = 4 * a1 * a2 * n * n, -a1 * a2 * n * n
            ok = d.coeff(3) == want3 and d.coeff(4) == want4 and d.eval_at_one() == 1
            yield (
                f"n={n},a=({a1},{a2})",
                ok,
                f"t^3 {d.coeff(3)} vs {want3}, t^4 {d.coeff(4)} vs {want4}, det(1) {d.eval_at_one()}",
            )


def _whitehead2_genus(params, budget) -> Iterator[Case]:
    for n in _range(params, "n"):
        for a1, a2 in itertools.product((1, -1), repeat=2):
            rep = z_genus_link(whitehead_double_2(n, a1, a2), budget)
            want = 0 if n == 0 else 1
            ok = rep.exact and rep.upper == want
            yield f"n={n},a=({a1},{a2})", ok, f"bounds {rep.lower}..{rep.upper}, expected {want}"


def _whitehead3_criterion(params, budget) -> Iterator[Case]:
    t3 = LaurentPoly.monomial(1, 3)
    for n in itertools.product(_range(params, "n"), repeat=3):
        for a in itertools.product((1, -1), repeat=3):
            d = _raw_det(whitehead_double_3(*n, *a))
            prod_a = a[0] * a[1] * a[2]
            n1, n2, n3 = n
            a1, a2, a3 = a
            want5 = 12 * n1 * n2 * n3 * prod_a - n1 * n1 * a2 * a3 - n2 * n2 * a1 * a3 - n3 * n3 * a1 * a2
            want6 = -2 * n1 * n2 * n3 * prod_a
            trivial = is_associate(d, t3)
            ok = d.coeff(5) == want5 and d.coeff(6) == want6 and trivial == whitehead3_condition(n, a)
            yield (
                f"n={n},a={a}",
                ok,
                f"t^5 {d.coeff(5)} vs {want5}, t^6 {d.coeff(6)} vs {want6}, det~t^3 {trivial}",
            )


def _ln_obstruction(params, budget) -> Iterator[Case]:
    for n in _range(params, "n"):
        M = ln_family_module(n)
        order = torsion_decomposition(M).order
        obstructed = is_torsion_free(M) != "weakly-slice-compatible"
        ok = obstructed == (n not in (0, 1)) and order.eval_at_one() in (1, -1)
        yield f"n={n}", ok, f"obstructed={obstructed}, order(1)={order.eval_at_one()}"


def _parallel_cable(params, budget) -> Iterator[Case]:
    for name, V in params["knots"].items():
        K = validate_knot_seifert(V)
        delta = alexander_polynomial(K)
        for p in range(params["max_components"] + 1):
            for n in range(params["max_components"] + 1 - p):
                if p + n == 0:
                    continue
                S = parallel_link(K, p, n)
                got = alexander_polynomial(internal_band_sum(S))
                w = p - n
                oracle = delta.subs_power(w) if w else LaurentPoly.constant(1)
                ok = is_associate(got, oracle)
                if w == 0:
                    ok = ok and z_genus_link(S, budget).upper == 0
                yield f"{name},p={p},n={n}", ok, f"{got.pretty()} vs {oracle.canonical().pretty()}"


def _shake(params, budget) -> Iterator[Case]:
    K = validate_knot_seifert(params["seifert"])
    want = params["expect"]
    sh = shake_genus(K, budget, params.get("max_ell", 1))
    zg = z_genus_knot(K, budget)
    ok = sh.exact and zg.exact and sh.upper == zg.upper == want and all(c["agrees"] for c in sh.checks.values())
    yield params.get("label", "shake"), ok, f"shake {sh.lower}..{sh.upper}, g_Z {zg.lower}..{zg.upper}"


def _golden_certificate(params, budget) -> Iterator[Case]:
    K = validate_knot_seifert(params["seifert"])
    A = LambdaMatrix.from_json(params["hermitian"])
    rep = verify_certificate(A, K, params["genus"])
    yield params.get("label", "golden"), rep.verdict == "pass", json.dumps(rep.to_json(), sort_keys=True)


def _documents(params, budget) -> Iterator[Case]:
    for i, data in enumerate(params["documents"]):
        doc = from_json(data, f"documents[{i}]")
        expect = data.get("expect", {})
        cid = doc.label or f"documents[{i}]"
        command = "genus" if "genus" in expect else "invariants"
        rep = run(command, doc, budget)
        problems = []
        if "alexander" in expect and rep.alexander.canonical() != LaurentPoly.parse(expect["alexander"]).canonical():
            problems.append(f"alexander {rep.alexander.canonical().pretty()} vs {expect['alexander']}")
        if "free_rank" in expect and rep.free_rank != expect["free_rank"]:
            problems.append(f"free rank {rep.free_rank} vs {expect['free_rank']}")
        if "weakly_slice" in expect and rep.weakly_slice != expect["weakly_slice"]:
            problems.append(f"weakly slice {rep.weakly_slice} vs {expect['weakly_slice']}")
        if "genus" in expect and not (rep.genus.exact and rep.genus.upper == expect["genus"]):
            problems.append(f"genus {rep.genus.lower}..{rep.genus.upper} vs {expect['genus']}")
        if not rep.is_consistent():
            problems.append("inconsistent report")
        yield cid, not problems, "; ".join(problems)


CHECKS: dict[str, Callable] = {
    "whitehead2_coefficients": _whitehead2_coefficients,
    "whitehead2_genus": _whitehead2_genus,
    "whitehead3_criterion": _whitehead3_criterion,
    "ln_obstruction": _ln_obstruction,
    "parallel_cable": _parallel_cable,
    "shake_genus": _shake,
    "golden_certificate": _golden_certificate,
    "documents": _documents,
}


# -- running -----------------------------------------------------------


def bundled_dir() -> Path:
    return Path(str(resources.files("zgenus") / "data"))


def corpus_files(directory: Path | str | None = None) -> list[Path]:
    """All ``*.json`` corpus files below ``directory``, in sorted order."""
    root = Path(directory) if directory is not None else bundled_dir()
    if not root.is_dir():
        raise SchemaError(f"corpus directory {root} does not exist")
    files = sorted(root.rglob("*.json"))
    if not files:
        raise SchemaError(f"no corpus files in {root}")
    return files


def run_entry(entry: dict, budget: SearchBudget | None = None, where: str = "corpus") -> CorpusResult:
    budget = budget or SearchBudget()
    if not isinstance(entry, dict) or "check" not in entry:
        raise SchemaError(f"{where}: expected an object with a 'check' field")
    check = entry["check"]
    if check not in CHECKS:
        raise SchemaError(f"{where}: unknown check {check!r}")
    result = CorpusResult(entry.get("name", where), check)
    for cid, ok, detail in CHECKS[check](entry.get("params", entry), budget):
        result.cases += 1
        if not ok:
            result.failures.append((cid, detail))
    return result


def run_corpus(
    directory: Path | str | None = None, budget: SearchBudget | None = None, strict: bool = False
) -> CorpusSummary:
    """Run every corpus file.  With ``strict``, any mismatch raises CorpusMismatch."""
    results = []
    for path in corpus_files(directory):
        try:
            entry = json.loads(path.read_text(encoding="utf-8"))
        except json.JSONDecodeError as exc:
            raise SchemaError(f"{path}: invalid JSON at line {exc.lineno}, column {exc.colno}") from exc
        results.append(run_entry(entry, budget, str(path.name)))
    summary = CorpusSummary(results)
    if strict and not summary.ok:
        bad = [f"{r.name}: {c}" for r in summary.results for c, _ in r.failures]
        raise CorpusMismatch("mismatching identities: " + ", ".join(bad[:20]))
    return summary
