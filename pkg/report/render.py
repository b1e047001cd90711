import json
import pathlib
from typing import Dict

import pandas as pds

from objects import OutputFormat


def _flatten(payload: Dict) -> pds.DataFrame:
    flat = pds.json_normalize(payload, sep=".")
    if flat.empty:
        return pds.DataFrame(columns=["key", "value"])
    row = flat.iloc[0]
    return pds.DataFrame({"key": row.index, "value": [_cell(v) for v in row.values]})


def _cell(v) -> str:
    if isinstance(v, (list, dict)):
        return json.dumps(v)
    return str(v)


def _items_frame(payload: Dict) -> pds.DataFrame:
    return pds.DataFrame([
        {"item": item["name"], "passed": item["passed"], "provenance": item["provenance"],
         "error": item.get("error", "")}
        for item in payload["items"]
    ])


def to_frame(payload: Dict) -> pds.DataFrame:
    """Bundles become one row per item; any other payload a key/value listing."""
    if "bundle" in payload and "items" in payload:
        return _items_frame(payload)
    return _flatten(payload)


def render(payload: Dict, output_format: OutputFormat = OutputFormat.JSON) -> str:
    if output_format == OutputFormat.JSON:
        return json.dumps(payload, indent=2)
    frame = to_frame(payload)
    if output_format == OutputFormat.Table:
        return frame.to_string(index=False)
    return frame.to_csv(sep="\t", index=False)


def write(payload: Dict, path: str | pathlib.Path, output_format: OutputFormat = OutputFormat.JSON):
    path = pathlib.Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w") as f:
        f.write(render(payload, output_format))
