"""Parse a system file: `P = …`, `Q = …`, `f = …` lines plus optional per-file settings."""
from pathlib import Path

from src.config_loader import parse_bound_rule
from src.errors import PolynomialSyntaxError, SystemFileError
from src.poly_parser import parse_poly
from src.types import SystemFile

FIELD_KEYS = {"P", "Q"}
CURVE_KEY = "f"
SETTING_KEYS = {"max_degree", "bound_rule", "shear_seed"}


def load_system_file(path: Path, require_field: bool = True) -> SystemFile:
    """
    Read a UTF-8 system file. Blank lines and `#` comments are ignored; every other
    line is `key = value`. Curve lines keep their order.
    """
    text = Path(path).read_text(encoding="utf-8")
    polys: dict[str, object] = {}
    settings: dict[str, object] = {}
    curves = []
    curve_texts = []
    line_no = 0

    for line_no, raw_line in enumerate(text.splitlines(), start=1):
        line = raw_line.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        key, sep, _ = line.partition("=")
        key = key.strip()
        if not sep:
            raise SystemFileError("Expected 'key = value'", line_no, _byte_offset(line, len(line) - len(line.lstrip())))
        value_start = line.index("=") + 1
        value_start += len(line[value_start:]) - len(line[value_start:].lstrip())
        value = line[value_start:]
        if not value:
            raise SystemFileError(f"Missing value for '{key}'", line_no, _byte_offset(line, len(line)))

        if key in FIELD_KEYS or key == CURVE_KEY:
            try:
                poly = parse_poly(value)
            except PolynomialSyntaxError as exc:
                raise SystemFileError(exc.reason, line_no, _byte_offset(line, value_start) + exc.offset) from exc
            if key == CURVE_KEY:
                curves.append(poly)
                curve_texts.append(value)
            elif key in polys:
                raise SystemFileError(f"Duplicate definition of '{key}'", line_no)
            else:
                polys[key] = poly
        elif key in SETTING_KEYS:
            if key in settings:
                raise SystemFileError(f"Duplicate setting '{key}'", line_no)
            settings[key] = _parse_setting(key, value, line_no, _byte_offset(line, value_start))
        else:
            raise SystemFileError(f"Unknown key '{key}'", line_no)

    if require_field:
        for key in sorted(FIELD_KEYS):
            if key not in polys:
                raise SystemFileError(f"Missing required definition '{key}'", line_no)

    return SystemFile(
        path=Path(path),
        P=polys.get("P"),
        Q=polys.get("Q"),
        curves=curves,
        curve_texts=curve_texts,
        max_degree=settings.get("max_degree"),
        bound_rule=settings.get("bound_rule"),
        shear_seed=settings.get("shear_seed"),
    )


def _byte_offset(line: str, index: int) -> int:
    return len(line[:index].encode("utf-8"))


def _parse_setting(key: str, value: str, line_no: int, offset: int):
    if key == "bound_rule":
        try:
            parse_bound_rule(value)
        except ValueError as exc:
            raise SystemFileError(str(exc), line_no, offset) from exc
        return value.strip()
    minimum = 1 if key == "max_degree" else 0
    if not value.isdigit() or int(value) < minimum:
        raise SystemFileError(f"'{key}' must be an integer >= {minimum}, got '{value}'", line_no, offset)
    return int(value)
