"""Document parsing, suite execution and export for the command-line workbench."""

from .document import WorkbenchDocument, parse_document, print_document
from .export import export_dot, export_json
from .suites import run_suite
