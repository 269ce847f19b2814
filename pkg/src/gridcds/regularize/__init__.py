"""Regularity frames, vertex classification, transforms, routine and audits."""

from .frames import (
    INITIAL_FRAME,
    FrameConstraints,
    RegularityFrame,
    frame_constraints,
    irregular_part,
    is_frame_regular,
    regular_part,
    regular_region,
)
from .classify import Classification, classify, find_mobiles, is_mobile, mobile_kinds
from .routine import StepRecord, RoutineTrace, apply_case, case_guards, run_routine, target_frame
from .audit import AuditReport, audit_final, audit_step
from .search import search_regularization
