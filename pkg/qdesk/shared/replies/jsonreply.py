import json
from datetime import datetime
from typing import Any, Dict, Optional

import numpy as np

from qdesk import __version__
from qdesk.shared.replies.reply import Reply


def to_jsonable(value: Any) -> Any:
    """
    Converts numpy values and complex numbers into plain JSON types. Complex numbers become [re, im].
    """
    if isinstance(value, dict):
        return {str(k): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_jsonable(v) for v in value]
    if isinstance(value, np.ndarray):
        return to_jsonable(value.tolist())
    if isinstance(value, (complex, np.complexfloating)):
        return [float(value.real), float(value.imag)]
    if isinstance(value, np.integer):
        return int(value)
    if isinstance(value, np.floating):
        return float(value)
    if isinstance(value, np.bool_):
        return bool(value)
    return value


class JsonReply(Reply):

    EXTENSION = ".json"
    ISO8601_FORMAT = "%Y-%m-%dT%H:%M:%SZ"

    def __init__(self, name: str, payload: Dict[str, Any], config: Optional[Dict[str, Any]] = None):
        super(JsonReply, self).__init__(name=name)
        self.payload = payload
        self.config = config or {}

    def envelope(self) -> Dict[str, Any]:
        return {
            "toolkit_version": __version__,
            "generated_at": datetime.utcnow().strftime(self.ISO8601_FORMAT),
            "config": self.config,
            "result": self.payload,
        }

    def build(self) -> str:
        return json.dumps(to_jsonable(self.envelope()), indent=2, sort_keys=True) + "\n"
