from .handler import DiagramHandler
from .model import (COMPOSITE, DEGENERATE, MINIMAL, Diagram, area, build_diagram, check_diagram,
                    diagram_from_dict, diagram_to_dict, diagram_to_dot, export_diagram, loop_area,
                    parse_diagram)

__all__ = [
    "COMPOSITE", "DEGENERATE", "MINIMAL", "Diagram", "DiagramHandler", "area", "build_diagram",
    "check_diagram", "diagram_from_dict", "diagram_to_dict", "diagram_to_dot", "export_diagram",
    "loop_area", "parse_diagram",
]
