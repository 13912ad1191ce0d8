"""q-series workbench for partitions with r-colored even parts and s-colored odd parts."""

__version__ = "0.1.0"
