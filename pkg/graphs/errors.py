"""
Graf ve ayrıştırma işlemleri için hata sınıfları
"""
from dataclasses import dataclass, field
from typing import Any, List, Optional, Sequence, Tuple


@dataclass(frozen=True)
class Violation:
    """Doğrulayıcıların döndürdüğü tek bir ihlal kaydı"""

    clause: str
    message: str
    witness: Tuple[int, ...] = field(default_factory=tuple)

    def __str__(self) -> str:
        if self.witness:
            return f"[{self.clause}] {self.message} (tanık: {list(self.witness)})"
        return f"[{self.clause}] {self.message}"


class GraphError(ValueError):
    """Geçersiz graf, köşe veya köşe kümesi"""


class PreconditionError(ValueError):
    """
    Bir işlemin ön koşulu sağlanmadığında fırlatılır

    Args:
        reason: Makine tarafından okunabilir neden kodu (ör. 'not-prime')
        message: İnsan tarafından okunabilir açıklama
        certificate: Ön koşulun neden bozulduğunu gösteren sertifika (tanık, homojen küme...)
    """

    def __init__(self, reason: str, message: str, certificate: Any = None):
        super().__init__(f"{reason}: {message}")
        self.reason = reason
        self.certificate = certificate


class ConsistencyError(RuntimeError):
    """İç tutarlılık hatası: bir son koşul beklenmedik şekilde bozuldu"""

    def __init__(self, message: str, violations: Optional[Sequence[Violation]] = None):
        self.violations: List[Violation] = list(violations or [])
        details = "; ".join(str(v) for v in self.violations)
        super().__init__(f"{message}: {details}" if details else message)


class TreeError(ValueError):
    """Ayrıştırma ağacı yapısal olarak bozuk"""
