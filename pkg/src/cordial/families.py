"""Closed forms and constructive witnesses for the named graph families.

Every witness constructor runs its output through the certificate checker
before returning, so a bug here surfaces as an assertion, not as a wrong
table entry. Formulas and constructions are independent of the exhaustive
search; agreement between the two is established by certify.cross_validate.
"""

from __future__ import annotations

from dataclasses import dataclass

from .certify import Certificate, check_certificate
from .errors import NotApplicable, NoUnitCrossEdge, SizeTooSmall, StrictlyNoncordial
from .graph_core import FamilySpec, MultiGraph
from .labeling import (
    BalanceReport,
    VertexLabeling,
    balance,
    first_pair_with_edge_label,
)
from .oracle import DeficiencyValue, InfinityReason

# ---------------------------------------------------------------- complete


@dataclass(frozen=True)
class CompleteSplit:
    """A vertex split of the complete graph: ell zeros against n - ell ones.

    j is the vertex imbalance |n - 2*ell|; the split is edge-balanced exactly
    when delta = n - j*j lies in {-2, 0, 2}.
    """

    n: int
    ell: int

    @property
    def j(self) -> int:
        return abs(self.n - 2 * self.ell)

    @property
    def delta(self) -> int:
        return self.n - self.j * self.j


def complete_split(n: int) -> CompleteSplit | None:
    """Edge-balanced split of smallest vertex imbalance, or None if none exists."""
    FamilySpec("complete", n)
    best: CompleteSplit | None = None
    for ell in range(n + 1):
        cand = CompleteSplit(n, ell)
        if cand.delta not in (-2, 0, 2):
            continue
        if best is None or (cand.j, cand.ell) < (best.j, best.ell):
            best = cand
    return best


def is_cordial_complete(n: int) -> bool:
    FamilySpec("complete", n)
    return n <= 3


def ced_complete(n: int) -> DeficiencyValue:
    """Edge deficiency of the complete graph; defined for n >= 2."""
    FamilySpec("complete", n)
    if n < 2:
        raise SizeTooSmall("the edge deficiency formula needs at least 2 vertices")
    return DeficiencyValue.finite(n // 2 - 1)


def cvd_complete(n: int) -> DeficiencyValue:
    """Vertex deficiency via the best edge-balanced split (operational form)."""
    split = complete_split(n)
    if split is None:
        return DeficiencyValue.infinite(InfinityReason.STRICTLY_NONCORDIAL)
    return DeficiencyValue.finite(max(0, split.j - 1))


def cvd_complete_literal(n: int) -> DeficiencyValue:
    """Vertex deficiency by the square rule: j - 1 when n = j*j + delta, j >= 1.

    Differs from cvd_complete at exactly one size, where the rule forces
    j = 2 while the split with j = 0 is already edge-balanced.
    """
    FamilySpec("complete", n)
    j = 1
    while j * j <= n + 2:
        if n - j * j in (-2, 0, 2):
            return DeficiencyValue.finite(j - 1)
        j += 1
    return DeficiencyValue.infinite(InfinityReason.STRICTLY_NONCORDIAL)


def complete_cordial_labeling(n: int) -> "LabeledFamilyInstance":
    FamilySpec("complete", n)
    if n > 3:
        raise NotApplicable(
            "complete graphs on more than 3 vertices have no cordial labeling"
        )
    labels = (0,) * (n // 2) + (1,) * (n - n // 2)
    return LabeledFamilyInstance.build("complete", n, labels)


def complete_ced_witness(n: int) -> Certificate:
    """Balanced split plus repeated same-labeled edge additions."""
    value = ced_complete(n).value
    labels = (0,) * (n // 2) + (1,) * (n - n // 2)
    cert = Certificate(
        kind="ced",
        family="complete",
        param=n,
        labels=labels,
        claimed_value=value,
        added_edges=((0, 1),) * value,
    )
    assert check_certificate(cert).accepted
    return cert


def complete_cvd_witness(n: int) -> Certificate:
    """Edge-balanced split plus isolated vertices on the minority side."""
    split = complete_split(n)
    if split is None:
        raise StrictlyNoncordial(
            f"no edge-balanced labeling of the complete graph on {n} vertices"
        )
    value = max(0, split.j - 1)
    labels = (0,) * split.ell + (1,) * (n - split.ell)
    v0, v1 = split.ell, n - split.ell
    added = ((0 if v1 > v0 else 1),) * value
    cert = Certificate(
        kind="cvd",
        family="complete",
        param=n,
        labels=labels,
        claimed_value=value,
        added_vertex_labels=added,
    )
    assert check_certificate(cert).accepted
    return cert


# ---------------------------------------------------------------- instances


@dataclass(frozen=True)
class LabeledFamilyInstance:
    """A family member together with a labeling and its balance counts."""

    spec: FamilySpec
    graph: MultiGraph
    labeling: VertexLabeling
    balance: BalanceReport

    @classmethod
    def build(cls, family: str, size: int, labels) -> "LabeledFamilyInstance":
        spec = FamilySpec(family, size)
        g = spec.build()
        f = VertexLabeling(tuple(labels))
        return cls(spec, g, f, balance(g, f))

    @property
    def is_cordial(self) -> bool:
        return self.balance.vertex_diff <= 1 and self.balance.edge_diff <= 1


def instance_certificate(inst: LabeledFamilyInstance) -> Certificate:
    cert = Certificate(
        kind="cordial",
        family=inst.spec.family,
        param=inst.spec.size,
        labels=inst.labeling.labels,
        claimed_value=0,
    )
    assert check_certificate(cert).accepted
    return cert


# ------------------------------------------------------------------ mobius

_MOBIUS_BASE_LABELS = {
    3: (1, 1, 0, 1, 0, 0),
    4: (1, 1, 0, 1, 1, 0, 0, 0),
    5: (1, 1, 1, 1, 0, 1, 0, 0, 0, 0),
}

# width-6 seeds for the deficiency witnesses; both carry a (1, 1) cross edge
# at index 0 so the same splice used for cordial widths extends them
_MOBIUS6_CED_LABELS = (1, 1, 1, 1, 1, 0, 1, 0, 0, 0, 0, 0)  # e0 = 10, e1 = 8
_MOBIUS6_CVD_LABELS = (1, 1, 1, 0, 1, 0, 1, 1, 0, 0, 1, 0)  # balanced, v1 = 7


def is_cordial_mobius(k: int) -> bool:
    FamilySpec("mobius", k)
    return k % 4 != 2


def base_mobius_labeling(k: int) -> LabeledFamilyInstance:
    FamilySpec("mobius", k)
    if k not in _MOBIUS_BASE_LABELS:
        raise NotApplicable("base labelings exist for widths 3, 4 and 5 only")
    return LabeledFamilyInstance.build("mobius", k, _MOBIUS_BASE_LABELS[k])


def _unit_cross_edge(inst: LabeledFamilyInstance) -> int:
    """Smallest i whose cross edge (i, i+k) has both endpoints labeled 1."""
    k = inst.spec.size
    f = inst.labeling
    for i in range(k):
        if f[i] == 1 and f[i + k] == 1:
            return i
    raise NoUnitCrossEdge(
        f"no cross edge with both endpoints labeled 1 in the width-{k} instance"
    )


@dataclass(frozen=True)
class GraftSeams:
    """Edge-label multisets removed and added by one splice, both sorted."""

    removed_labels: tuple[int, ...]
    added_labels: tuple[int, ...]


def graft_with_seams(
    big: LabeledFamilyInstance, patch: LabeledFamilyInstance
) -> tuple[LabeledFamilyInstance, GraftSeams]:
    """Splice the patch ladder into the big one at (1, 1) cross edges.

    Both instances are cut at their first all-ones cross edge; the four cycle
    edges incident to the cuts are replaced by four seam edges. Because each
    cut edge joins two 1-labeled vertices, the seam edge labels reproduce the
    removed edge labels exactly, so every balance count is additive.
    """
    kb, kp = big.spec.size, patch.spec.size
    fb, fp = big.labeling, patch.labeling
    nb, npp = 2 * kb, 2 * kp
    t0 = _unit_cross_edge(big)
    s0 = _unit_cross_edge(patch)
    b0, u0 = t0 + kb, s0 + kp
    top_big = [fb[(t0 + i) % nb] for i in range(kb)]
    top_patch = [fp[(s0 + i) % npp] for i in range(kp)]
    bottom_big = [fb[(b0 + i) % nb] for i in range(kb)]
    bottom_patch = [fp[(u0 + i) % npp] for i in range(kp)]
    labels = tuple(top_big + top_patch + bottom_big + bottom_patch)
    merged = LabeledFamilyInstance.build("mobius", kb + kp, labels)
    removed = sorted(
        (
            fb[(b0 - 1) % nb] ^ fb[b0 % nb],
            fb[(t0 - 1) % nb] ^ fb[t0],
            fp[(u0 - 1) % npp] ^ fp[u0 % npp],
            fp[(s0 - 1) % npp] ^ fp[s0],
        )
    )
    added = sorted(
        (
            fb[(b0 - 1) % nb] ^ fp[s0],
            fp[(u0 - 1) % npp] ^ fb[b0 % nb],
            fb[(t0 - 1) % nb] ^ fp[u0 % npp],
            fp[(s0 - 1) % npp] ^ fb[t0],
        )
    )
    assert removed == added, "seam exchange must conserve edge labels"
    return merged, GraftSeams(tuple(removed), tuple(added))


def graft(
    big: LabeledFamilyInstance, patch: LabeledFamilyInstance
) -> LabeledFamilyInstance:
    return graft_with_seams(big, patch)[0]


def construct_mobius_labeling(k: int) -> LabeledFamilyInstance:
    """Cordial labeling for any admissible width, by repeated splicing."""
    FamilySpec("mobius", k)
    if k % 4 == 2:
        raise NotApplicable("no cordial labeling exists when the width is 2 modulo 4")
    k0 = {3: 3, 0: 4, 1: 5}[k % 4]
    inst = base_mobius_labeling(k0)
    for _ in range((k - k0) // 4):
        inst = graft(inst, base_mobius_labeling(4))
    assert inst.is_cordial
    return inst


def _grow_mobius_seed(k: int, seed: tuple[int, ...]) -> LabeledFamilyInstance:
    FamilySpec("mobius", k)
    if k % 4 != 2:
        raise NotApplicable(
            "the deficiency witnesses apply to widths 2 modulo 4 only"
        )
    inst = LabeledFamilyInstance.build("mobius", 6, seed)
    for _ in range((k - 6) // 4):
        inst = graft(inst, base_mobius_labeling(4))
    return inst


def mobius_ced_witness(k: int) -> Certificate:
    """Friendly labeling two edges apart plus one mixed edge addition."""
    inst = _grow_mobius_seed(k, _MOBIUS6_CED_LABELS)
    pair = first_pair_with_edge_label(inst.labeling, 1)
    assert pair is not None
    cert = Certificate(
        kind="ced",
        family="mobius",
        param=k,
        labels=inst.labeling.labels,
        claimed_value=1,
        added_edges=(pair,),
    )
    assert check_certificate(cert).accepted
    return cert


def mobius_cvd_witness(k: int) -> Certificate:
    """Edge-balanced labeling two vertices apart plus one isolated zero."""
    inst = _grow_mobius_seed(k, _MOBIUS6_CVD_LABELS)
    rep = inst.balance
    added = ((0 if rep.v1 > rep.v0 else 1),)
    cert = Certificate(
        kind="cvd",
        family="mobius",
        param=k,
        labels=inst.labeling.labels,
        claimed_value=1,
        added_vertex_labels=added,
    )
    assert check_certificate(cert).accepted
    return cert


# ------------------------------------------------------------- cycle, wheel

_CYCLE_PATTERN = (1, 1, 0, 0)


def is_cordial_cycle(n: int) -> bool:
    FamilySpec("cycle", n)
    return n % 4 != 2


def cycle_cordial_labeling(n: int) -> LabeledFamilyInstance:
    FamilySpec("cycle", n)
    if n % 4 == 2:
        raise NotApplicable("no cordial labeling exists when the length is 2 modulo 4")
    labels = tuple(_CYCLE_PATTERN[i % 4] for i in range(n))
    inst = LabeledFamilyInstance.build("cycle", n, labels)
    assert inst.is_cordial
    return inst


def is_cordial_wheel(n: int) -> bool:
    FamilySpec("wheel", n)
    return n % 4 != 3


def _wheel_rim(n: int) -> tuple[int, ...]:
    # lengths 2 mod 4 need a longer leading run; the plain cycle pattern
    # would leave the spokes unable to absorb the rim imbalance
    if n % 4 == 2:
        t = (n - 2) // 4
        return (1, 1, 1, 1) + (0, 0, 1, 1) * (t - 1) + (0, 0)
    return tuple(_CYCLE_PATTERN[i % 4] for i in range(n))


def wheel_cordial_labeling(n: int) -> LabeledFamilyInstance:
    """Hub labeled 0; rim chosen so spokes rebalance the rim's edge counts."""
    FamilySpec("wheel", n)
    if n % 4 == 3:
        raise NotApplicable("no cordial labeling exists when the rim is 3 modulo 4")
    labels = _wheel_rim(n) + (0,)
    inst = LabeledFamilyInstance.build("wheel", n, labels)
    assert inst.is_cordial
    return inst


def wheel_ced_witness(n: int) -> Certificate:
    """Hub 0 over the cycle-patterned rim, repaired by one same-labeled edge."""
    FamilySpec("wheel", n)
    if n % 4 != 3:
        raise NotApplicable("the deficiency witnesses apply to rims 3 modulo 4 only")
    if n < 7:
        raise NotApplicable("witness construction starts at rim length 7")
    labels = tuple(_CYCLE_PATTERN[i % 4] for i in range(n)) + (0,)
    f = VertexLabeling(labels)
    pair = first_pair_with_edge_label(f, 0)
    assert pair is not None
    cert = Certificate(
        kind="ced",
        family="wheel",
        param=n,
        labels=labels,
        claimed_value=1,
        added_edges=(pair,),
    )
    assert check_certificate(cert).accepted
    return cert


def wheel_cvd_witness(n: int) -> Certificate:
    """Hub 1 balances the edges exactly; one isolated zero restores friendliness."""
    FamilySpec("wheel", n)
    if n % 4 != 3:
        raise NotApplicable("the deficiency witnesses apply to rims 3 modulo 4 only")
    if n < 7:
        raise NotApplicable("witness construction starts at rim length 7")
    labels = tuple(_CYCLE_PATTERN[i % 4] for i in range(n)) + (1,)
    cert = Certificate(
        kind="cvd",
        family="wheel",
        param=n,
        labels=labels,
        claimed_value=1,
        added_vertex_labels=(0,),
    )
    assert check_certificate(cert).accepted
    return cert
