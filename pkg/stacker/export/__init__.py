from .handler import ExportHandler, FSA_FORMATS

__all__ = ["ExportHandler", "FSA_FORMATS"]
