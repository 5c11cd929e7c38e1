from .emit import (
    CONFIG_NAME, GEN_DIR, GENERATED_MARKER, USER_DIR, EmittedFileSet, FileKind,
    emit_rtos_config, emit_scaffolding, emit_user_stubs, template_environment,
    undefined_identifiers,
)
from .genmodel import GenerationModel, build_generation_model
from .report import LineReport, count_lines, line_report

__all__ = [
    "CONFIG_NAME", "GEN_DIR", "GENERATED_MARKER", "USER_DIR", "EmittedFileSet",
    "FileKind", "emit_rtos_config", "emit_scaffolding", "emit_user_stubs",
    "template_environment", "undefined_identifiers", "GenerationModel",
    "build_generation_model", "LineReport", "count_lines", "line_report",
]
