r"""Settings for pyHopf, read from a TOML file. Every key has a built-in default:

.. code:: toml

    [groebner]
    order = "grevlex"  # monomial order of new polynomial rings: grevlex or lex

    [output]
    indent = 2  # JSON indentation of CLI envelopes
    schema_version = 1

    [sampling]
    seed = 0
    mutation_samples = 200
    l2_points = 100
    poly_degree = 2  # total degree of random polynomial points in l2-sample
    point_attempts = 10  # random draws per point of a variety before falling back to known points
    l2_min_points = 1  # l2-sample fails if fewer points were evaluated

    [logging]
    level = "WARNING"

Settings are looked up by dotted key, e.g. ``get("sampling.seed")``. Keys missing from the loaded file fall back to
the defaults above.
"""

try:
    import tomllib
except ModuleNotFoundError:
    import tomli as tomllib

import copy
import os
import pprint

_DEFAULTS_TOML = """
[groebner]
order = "grevlex"

[output]
indent = 2
schema_version = 1

[sampling]
seed = 0
mutation_samples = 200
l2_points = 100
poly_degree = 2
point_attempts = 10
l2_min_points = 1

[logging]
level = "WARNING"
"""

_default_settings = tomllib.loads(_DEFAULTS_TOML)

# choices checked when a file is loaded
_ALLOWED = {
    "groebner.order": ("grevlex", "lex"),
    "logging.level": ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"),
}

_config_path = None
_loaded_settings = {}


def _search_paths(config_file):
    yield config_file
    env_dir = os.environ.get("PYHOPF_CONFIG_DIR")
    if env_dir:
        yield os.path.join(env_dir, config_file)
    yield os.path.join(os.path.expanduser("~"), ".pyhopf", "config", config_file)


def use(config_file, run_post_config_hooks=True):
    """Load a settings file.

    The name is tried as given, then inside ``$PYHOPF_CONFIG_DIR`` and ``~/.pyhopf/config``.

    :param config_file: file name or path of a TOML file.
    :param run_post_config_hooks: re-apply settings that other modules derive from the configuration.
    """
    global _config_path
    for candidate in _search_paths(config_file):
        if os.path.isfile(candidate):
            _config_path = os.path.abspath(candidate)
            break
    else:
        raise FileNotFoundError(f"configuration file {config_file} not found (tried the path itself, "
                                f"$PYHOPF_CONFIG_DIR and ~/.pyhopf/config)")

    reload(run_post_config_hooks=run_post_config_hooks)


def reload(file=None, run_post_config_hooks=True):
    """Re-read the current settings file, or ``file`` if given."""
    global _loaded_settings
    if file is None:
        file = _config_path
    if file is None:
        raise RuntimeError("no configuration file in use")

    with open(file, "rb") as f:
        settings = tomllib.load(f)
    _check_choices(settings, file)
    _loaded_settings = settings

    if run_post_config_hooks:
        _post_config()


def reset(run_post_config_hooks=True):
    """Forget the loaded file and any values set at runtime."""
    global _config_path, _loaded_settings
    _config_path = None
    _loaded_settings = {}
    if run_post_config_hooks:
        _post_config()


def _check_choices(settings, source):
    for key, allowed in _ALLOWED.items():
        try:
            value = _lookup(settings, key)
        except KeyError:
            continue
        if value not in allowed:
            raise ValueError(f"{source}: {key} = {value!r}, expected one of {', '.join(allowed)}")


def print(default=False):
    pprint.pprint(_default_settings if default else _loaded_settings)


def _lookup(settings, key):
    node = settings
    for part in key.split("."):
        if not isinstance(node, dict) or part not in node:
            raise KeyError(key)
        node = node[part]
    return node


def get(key=None, default=None, do_copy=True):
    """Value of a dotted setting key; the loaded file wins over the defaults.

    :param key: dotted key; the whole loaded settings table if omitted.
    :param default: returned when neither the file nor the defaults have the key. If also ``None``, a
        :class:`KeyError` is raised.
    :param do_copy: return a deep copy, so callers cannot change the stored settings.
    """
    if key is None:
        value = _loaded_settings
    else:
        for settings in (_loaded_settings, _default_settings):
            try:
                value = _lookup(settings, key)
                break
            except KeyError:
                pass
        else:
            if default is None:
                raise KeyError(key)
            return default
    return copy.deepcopy(value) if do_copy else value


def exists(key, in_default=False):
    try:
        _lookup(_default_settings if in_default else _loaded_settings, key)
    except KeyError:
        return False
    return True


def set(key, val):
    """Override a setting for this session. Missing intermediate tables are created."""
    *parents, last = key.split(".")
    node = _loaded_settings
    for part in parents:
        node = node.setdefault(part, {})
    node[last] = val


def list_append(key, val, create_list_if_not_exist=True):
    if create_list_if_not_exist and not exists(key):
        set(key, [])
    _lookup(_loaded_settings, key).append(val)


# callbacks run whenever the settings change through use(), reload() or reset()
_post_config_hooks = []


def register_post_config_hook(func):
    _post_config_hooks.append(func)
    return func


def _post_config():
    for hook in _post_config_hooks:
        hook()
