"""Version information for the metric dimension toolkit."""

__version__ = "0.2.1"
__author__ = "metricdim contributors"
__author_email__ = ""
__description__ = "Edge metric dimensions of graphs, hierarchical products and an exact hitting-set ILP solver"
__url__ = ""
