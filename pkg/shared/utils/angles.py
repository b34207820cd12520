import math
import re
from typing import Union

import numpy as np

from shared.constants.texts import Texts

_PI_LITERAL = re.compile(
    r"^\s*(?P<sign>[+-])?\s*(?P<num>(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?)?\s*\*?\s*pi\s*$",
    re.IGNORECASE,
)


def parse_angle(text: Union[str, float, int]) -> float:
    """
    Converte um ângulo textual em radianos.

    Aceita radianos decimais ("1.5708") ou múltiplos de pi ("0.7pi", "pi",
    "-1.5pi", "2*pi").

    Raises:
        ValueError: se o texto não representar um ângulo finito
    """
    if isinstance(text, (int, float)):
        value = float(text)
    else:
        literal = text.strip()
        match = _PI_LITERAL.match(literal)
        if match:
            sign = -1.0 if match.group("sign") == "-" else 1.0
            factor = float(match.group("num")) if match.group("num") else 1.0
            value = sign * factor * math.pi
        else:
            try:
                value = float(literal)
            except ValueError:
                raise ValueError(Texts.format(Texts.ERROR_ANGLE_LITERAL, text)) from None
    if not math.isfinite(value):
        raise ValueError(Texts.format(Texts.ERROR_ANGLE_LITERAL, text))
    return value


def wrap_phase(phase):
    """Reduz fase(s) ao intervalo (-pi, pi]."""
    wrapped = np.mod(-np.asarray(phase, dtype=float) + math.pi, 2 * math.pi)
    result = math.pi - wrapped
    if np.ndim(result) == 0:
        return float(result)
    return result


def in_pi_units(angle: float) -> float:
    return angle / math.pi
