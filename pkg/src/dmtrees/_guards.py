import os

ENV_VAR = "MORSE_MAX_SIMPLICES"


class SizeGuardError(ValueError):
    """Input is larger than an exhaustive routine is willing to handle."""


def limit(default):
    """Simplex-count guard; ``MORSE_MAX_SIMPLICES`` overrides every default."""
    raw = os.environ.get(ENV_VAR)
    if raw is None or raw.strip() == "":
        return default
    return int(raw)


def check(n_simplices, default, what):
    cap = limit(default)
    if n_simplices > cap:
        raise SizeGuardError(
            f"{what}: {n_simplices} simplices exceeds the guard of {cap} "
            f"(set {ENV_VAR} to override)"
        )
