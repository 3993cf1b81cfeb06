"""Named covering-array parameter sets reproduced end to end:
construction, CPHF, expansion and exhaustive verification."""

import functools
import itertools
import logging
from dataclasses import dataclass

import orthogoval as og
from orthogoval.exception import (
    OrthogovalError,
    SearchExhaustedError,
    VerificationError,
)
from orthogoval.finite_field import ff_from_order

__all__ = [
    "CatalogEntry",
    "ReproductionResult",
    "CATALOG",
    "catalog_entry",
    "family_planes",
    "pipeline_reproduce",
]

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CatalogEntry:
    """A covering array ``CA_index(N; 3, k, q)`` and the family it comes from.

    ``layout`` is ``"proj"`` (plain CPHF), ``"sherwood"`` or ``"extended"``.
    """

    name: str
    family: str
    q: int
    index: int
    layout: str

    @property
    def expected(self):
        """``(N, k, v, index)`` from the row-count identities."""
        q, lam = self.q, self.index
        if self.layout == "proj":
            N, k = (lam + 1) * (q**3 - 1) + lam, q * q + q + 1
        elif self.layout == "sherwood":
            N, k = (lam + 1) * (q**3 - q) + lam * q, q * q
        else:
            N, k = (lam + 1) * q**3 - q, q * q + 2
        return (N, k, q, lam)

    def describe(self):
        N, k, v, lam = self.expected
        return f"{self.name}: CA_{lam}({N};3,{k},{v}) from {self.family}"


def _entries():
    entries = [
        CatalogEntry(f"q{q}-proj-λ1", "cremona", q, 1, "proj")
        for q in (2, 4, 5, 7, 8, 9)
    ]
    entries += [
        CatalogEntry(f"q3-proj-λ{lam}", "ds13", 3, lam, "proj") for lam in (1, 2, 3)
    ]
    entries += [
        CatalogEntry(f"q{q}-extended-λ1", "pencil", q, 1, "extended")
        for q in (2, 4, 8)
    ]
    entries += [
        CatalogEntry("q2-extended-λ2", "phi-k", 2, 2, "extended"),
        CatalogEntry("q4-extended-λ2", "m4-powers", 4, 2, "extended"),
        CatalogEntry("q4-extended-λ3", "m4-powers", 4, 3, "extended"),
        CatalogEntry("q8-extended-λ2", "m6-powers", 8, 2, "extended"),
    ]
    for q, family in ((3, "sts9-large"), (4, "m4-powers"), (8, "m6-powers")):
        entries += [
            CatalogEntry(f"q{q}-sherwood-λ{lam}", family, q, lam, "sherwood")
            for lam in range(1, 7)
        ]
    return {e.name: e for e in entries}


CATALOG = _entries()


def catalog_entry(name):
    """Look up `name`; ``lambda`` is accepted for ``λ``."""
    key = name.replace("lambda", "λ")
    try:
        return CATALOG[key]
    except KeyError:
        raise OrthogovalError(
            f"unknown catalog entry {name!r}; see `orthogoval reproduce --list`"
        ) from None


@functools.lru_cache(maxsize=None)
def family_planes(family, q):
    """The verified plane set of a catalog family, as a tuple."""
    spec = ff_from_order(q)
    if family == "cremona":
        first, second, _ = og.cremona_pair(spec)
        return (first, second)
    if family == "ds13":
        return tuple(og.ds_quadruple())
    if family == "pencil":
        first, second, _ = og.pencil_pair(spec.n)
        return (first, second)
    if family == "phi-k":
        return tuple(og.phi_k_triple(spec.n, 1))
    if family == "sts9-large":
        return tuple(og.large_set_sts9())
    if family in ("m4-powers", "m6-powers"):
        matrix = og.M4 if family == "m4-powers" else og.M6
        planes, report = og.matrix_power_planes(matrix, 7)
        if not report:
            raise VerificationError(f"{family} planes are not orthogoval")
        return tuple(planes)
    raise OrthogovalError(f"unknown family {family!r}")


@dataclass(frozen=True)
class ReproductionResult:
    entry: CatalogEntry
    actual: tuple
    report: object

    @property
    def matches(self):
        return self.actual == self.entry.expected and bool(self.report)

    def diff(self):
        """Mismatched parameters as ``{name: (expected, actual)}``."""
        names = ("N", "k", "v", "lambda")
        return {
            n: (e, a)
            for n, e, a in zip(names, self.entry.expected, self.actual)
            if e != a
        }


def _extended_cphf(planes, size, get_chunks):
    """Extended CPHF from the first `size`-subset of `planes`, in
    lexicographic order, whose parallel classes admit the two extra columns."""
    for subset in itertools.combinations(range(len(planes)), size):
        chosen = [planes[i] for i in subset]
        cphf = og.cphf_from_planes(chosen, get_chunks=get_chunks)
        try:
            return og.extend_scphf(cphf, chosen, get_chunks=get_chunks)
        except SearchExhaustedError:
            logger.debug("planes %s admit no extension", subset)
    raise SearchExhaustedError(f"no {size} of {len(planes)} planes can be extended")


def pipeline_reproduce(name, get_chunks="chunks"):
    """Construct, compile and verify the catalog entry `name`.

    Plain and Sherwood entries use the first ``index + 1`` planes of their
    family. Extended entries use the first subset of that size, in
    lexicographic order, that can be extended.

    Returns
    -------
    ReproductionResult
        Carries the parameters of the built array and its coverage report.
    """
    entry = catalog_entry(name)
    planes = list(family_planes(entry.family, entry.q))
    if entry.layout == "extended":
        cphf = _extended_cphf(planes, entry.index + 1, get_chunks)
        ca = og.ca_from_extended_scphf(cphf, entry.index)
    else:
        cphf = og.cphf_from_planes(planes[: entry.index + 1], get_chunks=get_chunks)
        ca = og.ca_from_cphf(cphf, entry.index)
    report = og.verify_ca(ca, index=entry.index, get_chunks=get_chunks)
    result = ReproductionResult(entry, (ca.N, ca.k, ca.v, ca.index), report)
    logger.info("%s -> %s, verified: %s", entry.name, ca, bool(report))
    return result
