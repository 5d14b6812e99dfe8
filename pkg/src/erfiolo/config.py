"""Flat key=value configuration files with dotted section names.

Example::

    # which stream to play against
    env.kind = sign_adversary
    env.dim = 2
    env.seed = 7
    learner.kind = erfi_meta
    learner.eps = 1.0
    run.horizon = 10000
    run.comparators = zero, best:1, best:10
    run.out = traces/sign_d2.csv

No nesting, no quoting; values are split on commas where a list is
expected.  Unknown keys are rejected by the consumers, not the parser.
"""


class ConfigError(ValueError):
    pass


def parse_config_text(text):
    """Parse flat key=value lines into an ordered dict of strings."""
    out = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError("line %d: expected 'key = value', got %r" % (lineno, raw))
        key, value = line.split("=", 1)
        key = key.strip()
        value = value.strip()
        if not key:
            raise ConfigError("line %d: empty key" % lineno)
        if key in out:
            raise ConfigError("line %d: duplicate key %r" % (lineno, key))
        out[key] = value
    return out


def load_config(path):
    with open(path, "r", encoding="utf-8") as fh:
        return parse_config_text(fh.read())


def get_str(cfg, key, default=None):
    if key in cfg:
        return cfg[key]
    if default is None:
        raise ConfigError("missing required key %r" % key)
    return default


def get_float(cfg, key, default=None):
    raw = cfg.get(key)
    if raw is None:
        if default is None:
            raise ConfigError("missing required key %r" % key)
        return default
    try:
        return float(raw)
    except ValueError:
        raise ConfigError("key %r: expected a number, got %r" % (key, raw)) from None


def get_int(cfg, key, default=None):
    raw = cfg.get(key)
    if raw is None:
        if default is None:
            raise ConfigError("missing required key %r" % key)
        return default
    try:
        return int(raw)
    except ValueError:
        raise ConfigError("key %r: expected an integer, got %r" % (key, raw)) from None


def get_list(cfg, key, default=None):
    raw = cfg.get(key)
    if raw is None:
        if default is None:
            raise ConfigError("missing required key %r" % key)
        return list(default)
    return [item.strip() for item in raw.split(",") if item.strip()]
