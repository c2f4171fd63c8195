from .handler import VerifyHandler, edge_label, mutate_structure, verify_flow
from .report import TERMINATION_NOTE, Failure, VerificationReport

__all__ = ["Failure", "TERMINATION_NOTE", "VerificationReport", "VerifyHandler", "edge_label", "mutate_structure", "verify_flow"]
