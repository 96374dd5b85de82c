from qpknot.cli import entry

entry()
