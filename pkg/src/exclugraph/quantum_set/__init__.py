from .models import (
    CeilingReport,
    MembershipVerdict,
    QuantumMaxReport,
    Result1Report,
    Result2Entry,
    Result2Report,
    Result3Report,
    Witness,
    check_distribution,
)
from .membership import classify, e_product, extract_witness, membership, sample_quantum_point
from .symmetrize import symmetrize
from .maxima import complement_ceiling, quantum_max
from .verify import verify_result1, verify_result2, verify_result3

__all__ = [
    "CeilingReport",
    "MembershipVerdict",
    "QuantumMaxReport",
    "Result1Report",
    "Result2Entry",
    "Result2Report",
    "Result3Report",
    "Witness",
    "check_distribution",
    "classify",
    "e_product",
    "extract_witness",
    "membership",
    "sample_quantum_point",
    "symmetrize",
    "complement_ceiling",
    "quantum_max",
    "verify_result1",
    "verify_result2",
    "verify_result3",
]
