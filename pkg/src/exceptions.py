"""
Custom exceptions for the metric dimension toolkit.
Provides a centralized and structured approach to error handling.
"""
from typing import Optional, Tuple


class MetricDimError(Exception):
    """Base exception for all toolkit errors."""

    def __init__(self, message: str = "An error occurred in metricdim",
                 error_code: Optional[str] = None):
        self.message = message
        self.error_code = error_code
        super().__init__(self.message)


class ConfigurationError(MetricDimError):
    """Exception raised for configuration-related errors."""

    def __init__(self, message: str = "Configuration error",
                 error_code: Optional[str] = "CONFIG"):
        super().__init__(f"Configuration Error: {message}", error_code)


class InvalidInputError(MetricDimError):
    """Exception raised for invalid user input (bad vertex sets, flags, ...)."""

    def __init__(self, message: str = "Invalid input",
                 error_code: Optional[str] = "INVALID_INPUT"):
        super().__init__(f"Invalid Input Error: {message}", error_code)


class StorageError(MetricDimError):
    """Exception raised when a graph or LP file cannot be read or written."""

    def __init__(self, message: str = "Storage error",
                 error_code: Optional[str] = "STORAGE",
                 file_path: Optional[str] = None):
        self.file_path = file_path
        super().__init__(
            f"Storage Error{'(' + file_path + ')' if file_path else ''}: {message}",
            error_code
        )


class ResourceExhaustedError(MetricDimError):
    """Exception raised when a computation would exceed a configured resource."""

    def __init__(self, message: str = "Resource exhausted",
                 error_code: Optional[str] = None,
                 resource: Optional[str] = None):
        self.resource = resource
        super().__init__(
            f"Resource Exhausted Error{'(' + resource + ')' if resource else ''}: {message}",
            error_code
        )


# Graph construction

class GraphError(MetricDimError):
    """Exception raised for invalid graph data."""

    def __init__(self, message: str = "Graph error",
                 error_code: Optional[str] = None):
        super().__init__(f"Graph Error: {message}", error_code)


class DisconnectedGraphError(GraphError):
    """Raised when a graph that must be connected is not."""

    def __init__(self, n: int, components: int):
        self.n = n
        self.components = components
        super().__init__(
            f"graph on {n} vertices has {components} connected components",
            "GRAPH_DISCONNECTED"
        )


class LoopEdgeError(GraphError):
    """Raised for an edge joining a vertex to itself."""

    def __init__(self, vertex: int, position: Optional[int] = None):
        self.vertex = vertex
        self.position = position
        where = f" at edge position {position}" if position is not None else ""
        super().__init__(f"self-loop on vertex {vertex}{where}", "GRAPH_LOOP")


class DuplicateEdgeError(GraphError):
    """Raised when the same unordered pair appears twice in an edge list."""

    def __init__(self, edge: Tuple[int, int], position: Optional[int] = None):
        self.edge = edge
        self.position = position
        where = f" at edge position {position}" if position is not None else ""
        super().__init__(f"duplicate edge {edge}{where}", "GRAPH_DUPLICATE_EDGE")


class IndexOutOfRangeError(GraphError):
    """Raised for a vertex or edge index outside the graph."""

    def __init__(self, kind: str, index: int, limit: int):
        self.kind = kind
        self.index = index
        self.limit = limit
        super().__init__(
            f"{kind} index {index} out of range [0, {limit})",
            "INDEX_OUT_OF_RANGE"
        )


class ParseError(MetricDimError):
    """Raised for malformed edge-list text."""

    def __init__(self, message: str = "Parse error",
                 line_number: Optional[int] = None):
        self.line_number = line_number
        where = f"(line {line_number})" if line_number is not None else ""
        super().__init__(f"Parse Error{where}: {message}", "PARSE")


# Catalog

class CatalogError(MetricDimError):
    """Exception raised for catalog lookups."""

    def __init__(self, message: str = "Catalog error",
                 error_code: Optional[str] = None,
                 name: Optional[str] = None):
        self.name = name
        super().__init__(
            f"Catalog Error{'(' + name + ')' if name else ''}: {message}",
            error_code
        )


class UnknownGraphError(CatalogError):
    """Raised for a graph family the catalog does not know."""

    def __init__(self, name: str):
        super().__init__("unknown graph family", "CATALOG_UNKNOWN", name)


class BadParamsError(CatalogError):
    """Raised when catalog parameters are invalid for the family."""

    def __init__(self, name: str, message: str):
        super().__init__(message, "CATALOG_PARAMS", name)


# Search and solver

class SizeCapExceededError(ResourceExhaustedError):
    """Raised when exhaustive enumeration is refused because the graph is too large."""

    def __init__(self, n: int, cap: int):
        self.n = n
        self.cap = cap
        super().__init__(
            f"{n} vertices exceeds the exhaustive search cap of {cap}; "
            f"raise max_vertices to run anyway",
            "SIZE_CAP",
            "brute_force"
        )


class SolverError(MetricDimError):
    """Exception raised by the hitting-set solver."""

    def __init__(self, message: str = "Solver error",
                 error_code: Optional[str] = None):
        super().__init__(f"Solver Error: {message}", error_code)


class InfeasibleError(SolverError):
    """Raised when an instance contains an empty constraint."""

    def __init__(self, constraint_index: int):
        self.constraint_index = constraint_index
        super().__init__(
            f"constraint {constraint_index} is empty; no hitting set exists",
            "INFEASIBLE"
        )


# Products and theorem evaluators

class ProductError(MetricDimError):
    """Exception raised when a product or formula precondition fails."""

    def __init__(self, message: str = "Product error",
                 error_code: Optional[str] = None,
                 operation: Optional[str] = None):
        self.operation = operation
        super().__init__(
            f"Product Error{'(' + operation + ')' if operation else ''}: {message}",
            error_code
        )


class RequiresMultipleRootsError(ProductError):
    """Raised when the multi-root bound is asked for a single root."""

    def __init__(self, roots: int):
        self.roots = roots
        super().__init__(
            f"bound requires |U| > 1, got |U| = {roots}",
            "MULTIPLE_ROOTS",
            "theorem1_bound"
        )


class RootedPathExcludedError(ProductError):
    """Raised when an exact single-root formula is applied to a rooted path."""

    def __init__(self, root: int, operation: Optional[str] = None):
        self.root = root
        super().__init__(
            f"G rooted at vertex {root} is a rooted path; the formula does not apply",
            "ROOTED_PATH",
            operation
        )


class HTooSmallError(ProductError):
    """Raised when the second factor has too few vertices."""

    def __init__(self, n: int, minimum: int = 2, operation: Optional[str] = None):
        self.n = n
        self.minimum = minimum
        super().__init__(
            f"second factor needs at least {minimum} vertices, got {n}",
            "H_TOO_SMALL",
            operation
        )


class TooFewComponentsError(ProductError):
    """Raised when a bridge-cycle graph is requested with fewer than three components."""

    def __init__(self, k: int):
        self.k = k
        super().__init__(
            f"bridge-cycle needs at least 3 components, got {k}",
            "TOO_FEW_COMPONENTS",
            "bridge_cycle"
        )
