"""
Utility functions
"""

import os
import re
from typing import Any, Iterable


def format_duration(seconds: float) -> str:
    """
    Format duration in human-readable format

    Args:
        seconds: Duration in seconds

    Returns:
        Formatted string (e.g., "1.5s", "250ms", "3m 12s")
    """
    if seconds < 1:
        return f"{seconds * 1000:.0f}ms"
    if seconds < 60:
        return f"{seconds:.2f}s"
    minutes, rest = divmod(int(round(seconds)), 60)
    return f"{minutes}m {rest}s"


def expand_env_vars(value: Any) -> Any:
    """
    Expand environment variables in a string

    Supports:
    - $VAR
    - ${VAR}
    - ${VAR:-default}

    Non-string values are returned unchanged; unknown variables without a
    default are left as written.
    """
    if not isinstance(value, str):
        return value

    def replace_env(match):
        var_name = match.group(1)
        default = match.group(2)
        env_value = os.getenv(var_name)
        if env_value is not None:
            return env_value
        if default is not None:
            return default
        return match.group(0)

    value = re.sub(r'\$\{([^}:]+)(?::-([^}]*))?\}', replace_env, value)
    value = re.sub(r'\$([A-Za-z_][A-Za-z0-9_]*)', lambda m: os.getenv(m.group(1), m.group(0)), value)
    return value


def format_vertex_list(vertices: Iterable[int]) -> str:
    """Compact "{0, 2, 5}" rendering of a vertex set"""
    return "{" + ", ".join(str(v) for v in vertices) + "}"
