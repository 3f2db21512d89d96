"""hoveylab: exact verification workbench for cotorsion pairs, Hovey triples
and quiver-representation lifts over bound quiver algebras on prime fields."""

__version__ = "0.1.0"

REPORT_SCHEMA = "hoveylab-report/1"
