"""
体積の上界

Λ(θ) = -∫_0^θ log|2 sin t| dt（奇関数・周期 π・θ = π/6 で最大）
maxvol(m) = 2m·Λ(π/m)  正則理想 m-双角錐の体積（m ≤ 2 は平坦なので 0）
v_oct = maxvol(4) = 8Λ(π/4) ≈ 3.66386

MCCB = Σ_{c,i} maxvol(|B_{c,i}|)
MFCB = Σ_F maxvol(|B_F|)
八面体上界 = Σ_c C(n_c, 2)·v_oct
"""
import logging
import math
from functools import lru_cache
from typing import Iterable, List, Optional, Sequence, Tuple

import mpmath

from bipyramid.errors import InvariantViolation, LimitExceededError
from bipyramid.schemas.diagram import Face, MulticrossingDiagram
from bipyramid.schemas.report import (
    CrossingVolume,
    DensityReport,
    FaceSizeRecord,
    FaceVolume,
    Signature,
    BoundTableRow,
    VolumeBoundReport,
)
from bipyramid.services.decomposition import crossing_signature, face_sizes
from bipyramid.services.diagram import check_surface, trace_faces

logger = logging.getLogger(__name__)

# Cl_2 の Bernoulli 展開の係数 ζ(2k) / (k(2k+1))。|θ| ≤ π/2 で項は 4^-k で減衰する
_SERIES_TERMS = 40
_ZETA_COEFFICIENTS: Tuple[float, ...] = tuple(
    float(mpmath.zeta(2 * k)) / (k * (2 * k + 1)) for k in range(1, _SERIES_TERMS + 1)
)


def lobachevsky(theta: float) -> float:
    """
    Lobachevsky 関数

    Λ(θ) = ½ Σ sin(2kθ)/k² を加速した形
    Λ(x) = x - x log(2x) + x Σ_k ζ(2k)/(k(2k+1)) · (x/π)^{2k}   (0 < x ≤ π/2)
    を、周期 π と奇関数性で (−π/2, π/2] に還元して評価する。
    """
    if not math.isfinite(theta):
        raise ValueError(f"theta must be finite, got {theta}")

    t = math.fmod(theta, math.pi)
    if t > math.pi / 2:
        t -= math.pi
    elif t <= -math.pi / 2:
        t += math.pi
    if t == 0.0:
        return 0.0

    x = abs(t)
    y = (x / math.pi) ** 2
    power = 1.0
    tail = 0.0
    for coefficient in _ZETA_COEFFICIENTS:
        power *= y
        tail += coefficient * power
    value = x - x * math.log(2.0 * x) + x * tail
    return math.copysign(value, t)


@lru_cache(maxsize=1)
def lobachevsky_argmax() -> float:
    """
    (0, π) 上の最大点

    Λ'(θ) = -log|2 sin θ| は (0, π/2) で符号を一度だけ変えるので、
    その根を挟み込み法で求める（値は π/6）。
    """
    root = mpmath.findroot(lambda t: mpmath.log(2 * mpmath.sin(t)), (0.1, 1.0), solver="illinois")
    return float(root)


@lru_cache(maxsize=4096)
def maxvol(m: int) -> float:
    """サイズ m の双角錐の最大体積"""
    if m < 0:
        raise ValueError(f"bipyramid size must be non-negative, got {m}")
    if m <= 2:
        return 0.0
    volume = 2 * m * lobachevsky(math.pi / m)
    ceiling = 2 * math.pi * math.log(m / 2)
    if not volume < ceiling:
        raise InvariantViolation(f"maxvol({m}) = {volume} is not below 2π log(m/2) = {ceiling}")
    return volume


V_OCT = maxvol(4)


def bipyramid_volumes(sizes: Iterable[int]) -> Tuple[float, ...]:
    return tuple(maxvol(m) for m in sizes)


# ==================== ダイアグラムの上界 ====================

def _signatures(diagram: MulticrossingDiagram) -> List[Signature]:
    return [crossing_signature(c) for c in diagram.crossings]


def mccb(diagram: MulticrossingDiagram, signatures: Optional[List[Signature]] = None) -> float:
    """クロッシング中心の双角錐による上界"""
    if signatures is None:
        signatures = _signatures(diagram)
    return math.fsum(maxvol(m) for sig in signatures for m in sig.sizes)


def mfcb(diagram: MulticrossingDiagram, records: Optional[List[FaceSizeRecord]] = None) -> float:
    """面中心の双角錐による上界"""
    if records is None:
        records = face_sizes(diagram)
    return math.fsum(maxvol(r.size) for r in records)


def octahedral_bound(diagram: MulticrossingDiagram) -> float:
    """各 n-クロッシングを C(n,2) 個の 2-クロッシングに崩したときの八面体上界"""
    return math.fsum(math.comb(c.size, 2) * V_OCT for c in diagram.crossings)


def density_bounds(diagram: MulticrossingDiagram, mccb_value: Optional[float] = None) -> DensityReport:
    """
    体積密度の上界

    全クロッシングが 3-クロッシングなら三重密度の上界 mccb / c_3 と参照値 2·v_oct も返す。
    """
    if mccb_value is None:
        mccb_value = mccb(diagram)
    count = diagram.vertex_count
    triples = sum(1 for c in diagram.crossings if c.size == 3)

    report = DensityReport(
        crossing_count=count,
        mccb_per_crossing=mccb_value / count if count else None,
        triple_crossing_count=triples,
    )
    if count and triples == count:
        report.triple_density_bound = mccb_value / triples
        report.triple_reference = 2 * V_OCT
    return report


# ==================== 表 ====================

def worst_case_signature(n: int) -> Tuple[int, ...]:
    """和が最大の許容列 (4, 8, ..., 4⌊n/2⌋, ..., 8, 4)"""
    return tuple(4 * min(i, n - i) for i in range(1, n))


def bound_table(ns: Sequence[int]) -> List[BoundTableRow]:
    """n-クロッシング1つあたりの最良・最悪 MCCB と八面体上界"""
    rows = []
    for n in ns:
        if n < 3:
            raise LimitExceededError(f"table rows need n >= 3, got {n}")
        rows.append(
            BoundTableRow(
                n=n,
                best_mccb=(n - 1) * V_OCT,
                worst_mccb=math.fsum(bipyramid_volumes(worst_case_signature(n))),
                octahedral=math.comb(n, 2) * V_OCT,
            )
        )
    return rows


class VolumeCalculator:
    """1つのダイアグラムについて上界をまとめて計算するクラス"""

    def __init__(self, diagram: MulticrossingDiagram, faces: Optional[List[Face]] = None):
        self.diagram = diagram
        self.faces = faces if faces is not None else trace_faces(diagram)
        self.signatures = _signatures(diagram)
        self.face_records = face_sizes(diagram, self.faces)
        self.genera = check_surface(diagram)

    @property
    def genus(self) -> int:
        return sum(self.genera)

    def warnings(self) -> List[str]:
        warnings = []
        if self.genus > 0:
            warnings.append(
                f"diagram lies on a genus-{self.genus} surface; the volume-bound theorems are stated "
                "for planar projections and torus weave quotients are reported with the same counting"
            )
        degenerate = sum(1 for r in self.face_records if r.size <= 2)
        if degenerate:
            warnings.append(f"{degenerate} degenerate face bipyramid(s) of size <= 2 assigned zero volume")
        return warnings

    def calculate(self) -> VolumeBoundReport:
        crossings = self.diagram.crossing_map()
        per_crossing = []
        for sig in self.signatures:
            volumes = bipyramid_volumes(sig.sizes)
            per_crossing.append(
                CrossingVolume(
                    crossing=sig.crossing,
                    levels=crossings[sig.crossing].levels,
                    sizes=sig.sizes,
                    volumes=volumes,
                    total=math.fsum(volumes),
                )
            )
        per_face = [FaceVolume(face=r.face, size=r.size, volume=maxvol(r.size)) for r in self.face_records]

        report = VolumeBoundReport(
            mccb=mccb(self.diagram, self.signatures),
            mfcb=mfcb(self.diagram, self.face_records),
            octahedral=octahedral_bound(self.diagram),
            tetrahedron_total=sum(sig.tetrahedra for sig in self.signatures),
            per_crossing=per_crossing,
            per_face=per_face,
            genus=self.genus,
            warnings=self.warnings(),
        )
        logger.info(f"Volume bounds for {self.diagram.name}: mccb={report.mccb:.6g}, mfcb={report.mfcb:.6g}")
        return report

    def density(self) -> DensityReport:
        return density_bounds(self.diagram, mccb(self.diagram, self.signatures))
