"""Flow graphs for a Java subset: structure, control flow, data flow, validation."""
from .pipeline import PipelineOptions, new_context, run_source, transform_method, transform_unit

__all__ = ["PipelineOptions", "new_context", "run_source", "transform_method", "transform_unit"]
__version__ = "0.1.0"
