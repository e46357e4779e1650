"""Invariant pipelines behind the command line."""

from __future__ import annotations

from dataclasses import dataclass

from .alexander import torsion_decomposition
from .blanchfield import CertificateReport, verify_certificate
from .documents import LinkDocument
from .errors import SchemaError
from .genus import GenusReport, SearchBudget, find_hermitian_presentation, z_genus_knot
from .laurent import LaurentPoly, normalize_assoc
from .matrix import LambdaMatrix, det
from .seifert import internal_band_sum

COMMANDS = ("invariants", "genus", "weakly-slice", "verify", "construct")


@dataclass(frozen=True)
class InvariantReport:
    """Everything one command computed for one document.

    ``alexander`` is the raw determinant det(tV - V^T) of the band-sum knot
    (or the torsion order for module-only documents); text output shows its
    canonical associate and JSON output also records the unit.
    """

    label: str | None
    alexander: LaurentPoly
    free_rank: int
    torsion_order: LaurentPoly
    weakly_slice: str
    genus: GenusReport | None = None
    certificate: CertificateReport | None = None
    construction: dict | None = None

    def is_consistent(self) -> bool:
        trivial = self.torsion_order == 1
        if (self.weakly_slice == "yes") != trivial:
            return False
        if self.genus is not None:
            if trivial != (self.genus.lower == 0):
                return False
            if self.genus.upper == 0 and not (self.genus.exact and self.genus.lower == 0):
                return False
        return True

    @property
    def ok(self) -> bool:
        """Whether the requested check passed."""
        if self.certificate is not None and self.certificate.verdict != "pass":
            return False
        if self.genus is not None and not self.genus.exact:
            return False
        return self.is_consistent()

    def to_json(self) -> dict:
        unit = normalize_assoc(self.alexander)
        out = {
            "label": self.label,
            "alexander": {
                "canonical": unit.canonical.pretty(),
                "sign": unit.sign,
                "shift": unit.shift,
            },
            "free_rank": self.free_rank,
            "torsion_order": self.torsion_order.pretty(),
            "weakly_slice": self.weakly_slice,
        }
        if self.genus is not None:
            out["genus"] = self.genus.to_json()
        if self.certificate is not None:
            out["certificate"] = self.certificate.to_json()
        if self.construction is not None:
            out["construction"] = self.construction
        return out

    def render(self) -> str:
        lines = []
        if self.label:
            lines.append(f"label: {self.label}")
        lines.append(f"alexander: {self.alexander.canonical().pretty()}")
        lines.append(f"free rank: {self.free_rank}")
        lines.append(f"torsion order: {self.torsion_order.pretty()}")
        lines.append(f"Z-weakly slice: {self.weakly_slice}")
        if self.genus is not None:
            g = self.genus
            tag = "exact" if g.exact else "bounds"
            lines.append(f"{g.invariant}: {g.lower}..{g.upper} ({tag})")
            if g.witness_block is not None:
                lines.append(f"  witness block: {[list(r) for r in g.witness_block]}")
            for name, chk in g.checks.items():
                lines.append(f"  {name}: {chk['lower']}..{chk['upper']} agrees={chk['agrees']}")
        if self.certificate is not None:
            c = self.certificate
            lines.append(
                f"certificate: {c.verdict} (hermitian={c.hermitian_ok}, size_ok={c.size_ok}, "
                f"det_matches_order={c.det_matches_order}, signature_at_one={c.signature_at_one})"
            )
        if self.construction is not None:
            r, N = self.construction["r"], self.construction["matrix"]
            lines.append(f"r = {r}, g = {(len(N) - r + 1) // 2}")
            lines.extend("  " + " ".join(f"{x:3d}" for x in row) for row in N)
        return "\n".join(lines)


def _base(doc: LinkDocument) -> tuple[LaurentPoly, int, LaurentPoly]:
    dec = torsion_decomposition(doc.module())
    if doc.is_module_only():
        return det(dec.torsion_presentation), dec.free_rank, dec.order
    K = internal_band_sum(doc.system())
    raw = det(LambdaMatrix.presentation(K.V))
    return raw, dec.free_rank, dec.order


def run(
    command: str,
    doc: LinkDocument,
    budget: SearchBudget | None = None,
    hermitian: LambdaMatrix | None = None,
    claimed_genus: int | None = None,
) -> InvariantReport:
    """Dispatch ``command`` on ``doc``.  Deterministic for a fixed budget seed."""
    if command not in COMMANDS:
        raise ValueError(f"unknown command {command!r}")
    budget = budget or SearchBudget()
    raw, free_rank, order = _base(doc)
    verdict = "yes" if order == 1 else "no"
    report = dict(label=doc.label, alexander=raw, free_rank=free_rank, torsion_order=order, weakly_slice=verdict)

    if command in ("invariants", "weakly-slice"):
        return InvariantReport(**report)

    if doc.is_module_only():
        raise SchemaError(f"command {command!r} needs a Seifert matrix, {doc.kind!r} documents have none")
    K = internal_band_sum(doc.system())

    if command == "genus":
        invariant = "g_Z" if doc.kind == "knot" else "g_Z(link)"
        return InvariantReport(**report, genus=z_genus_knot(K, budget).relabel(invariant))

    if command == "construct":
        S = doc.system()
        built = {"kind": "boundary_link", "r": S.r, "matrix": S.to_list()}
        if doc.label is not None:
            built["label"] = doc.label
        return InvariantReport(**report, construction=built)

    # verify
    A = hermitian if hermitian is not None else doc.hermitian()
    g = claimed_genus if claimed_genus is not None else doc.payload.get("claimed_genus")
    if g is None:
        g = z_genus_knot(K, budget).upper
    if A is None:
        hit = find_hermitian_presentation(K, g, budget)
        if hit is None:
            raise SchemaError("no Hermitian matrix given and none found within the search budget")
        A = hit.presentation.A
    return InvariantReport(**report, certificate=verify_certificate(A, K, g))
