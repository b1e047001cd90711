__all__ = ["BundleItem", "ReportBundle", "run_bundle", "render", "to_frame", "write"]

from .bundle import BundleItem, ReportBundle, run_bundle
from .render import render, to_frame, write
