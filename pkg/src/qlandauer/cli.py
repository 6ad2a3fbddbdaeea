"""Command-line front end.

Subcommands ``point``, ``sweep``, ``figure1``, ``figure2`` and ``oracle``.
Parameters come from (lowest to highest precedence) the built-in defaults,
a ``key = value`` file given with ``--config``, and command-line flags.

Exit status: 0 on success, 2 on usage errors, 1 on numerical failure.
"""
import argparse
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
import io
import math
import sys
import warnings

import numpy as np

from . import asymptotics, bath, processes
from .errors import DomainError, QLandauerError
from .oscillator import OscillatorParams, build_state, free_energy, stationary_variances
from .specfun import entropy_kernel
from .svg import line_chart

PRESETS = {
    # omega = 1.2, M0 = 1.1, M1 = 1.11, eta = 40 omega, omega_D = 25 eta
    "strong": dict(mass=1.1, mass1=1.11, omega=1.2, eta=48.0, omega_d=1200.0),
    # tractable for the finite bath: eta / (M omega) = 1, omega_D / omega = 10
    "moderate": dict(mass=1.0, mass1=1.01, omega=1.0, eta=1.0, omega_d=10.0),
}
DEFAULTS = dict(hbar=1.0, kb=1.0, tmin=0.01, tmax=10.0, tpoints=200, n_bath=2000,
                out=None, format="csv", temperature=None, jobs=1)
FLOAT_KEYS = {"mass", "mass1", "omega", "eta", "omega_d", "hbar", "kb", "tmin", "tmax",
              "temperature"}
INT_KEYS = {"tpoints", "n_bath", "jobs"}
CONFIG_KEYS = FLOAT_KEYS | INT_KEYS | {"out", "format", "preset"}


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    params: OscillatorParams
    M1: float
    T_grid: np.ndarray
    out: str = None
    format: str = "csv"
    n_bath: int = 2000
    temperature: float = None
    jobs: int = 1


# -- config ------------------------------------------------------------------

def read_config_file(path):
    """Parse ``key = value`` lines; ``#`` starts a comment."""
    values = {}
    try:
        text = open(path, encoding="utf-8").read()
    except OSError as exc:
        raise UsageError(f"cannot read config file: {exc}") from exc
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise UsageError(f"{path}:{lineno}: expected key = value")
        key, val = (s.strip() for s in line.split("=", 1))
        key = key.lower().replace("-", "_")
        if key not in CONFIG_KEYS:
            raise UsageError(f"{path}:{lineno}: unknown key {key!r}")
        values[key] = val
    return values


def _coerce(key, val):
    try:
        if key in FLOAT_KEYS:
            return float(val)
        if key in INT_KEYS:
            return int(val)
    except ValueError as exc:
        raise UsageError(f"bad value for {key}: {val!r}") from exc
    return val


def resolve_config(args, default_preset="strong"):
    """Merge defaults, config file and flags into a validated ``RunConfig``."""
    file_values = read_config_file(args.config) if args.config else {}
    flags = {k: v for k, v in vars(args).items() if v is not None and k in CONFIG_KEYS}
    preset = flags.get("preset") or file_values.get("preset") or default_preset
    if preset not in PRESETS:
        raise UsageError(f"unknown preset {preset!r}")
    merged = dict(DEFAULTS, **PRESETS[preset])
    for key, val in file_values.items():
        if key != "preset":
            merged[key] = _coerce(key, val)
    merged.update({k: v for k, v in flags.items() if k != "preset"})

    if merged["format"] not in ("csv", "svg"):
        raise UsageError("--format must be csv or svg")
    try:
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            params = OscillatorParams(M=merged["mass"], omega=merged["omega"], eta=merged["eta"],
                                      omega_D=merged["omega_d"], hbar=merged["hbar"],
                                      kB=merged["kb"])
    except DomainError as exc:
        raise UsageError(str(exc)) from exc
    if not merged["mass1"] > 0:
        raise UsageError("--mass1 must be positive")
    tmin, tmax, n = merged["tmin"], merged["tmax"], merged["tpoints"]
    if not (0 < tmin <= tmax) or n < 1:
        raise UsageError("temperature grid needs 0 < tmin <= tmax and tpoints >= 1")
    grid = np.array([tmin]) if n == 1 else np.geomspace(tmin, tmax, n)
    if merged["n_bath"] < 8:
        raise UsageError("--n-bath must be at least 8")
    if merged["jobs"] < 1:
        raise UsageError("--jobs must be at least 1")
    return RunConfig(params=params, M1=merged["mass1"], T_grid=grid, out=merged["out"],
                     format=merged["format"], n_bath=merged["n_bath"],
                     temperature=merged["temperature"], jobs=merged["jobs"])


# -- row builders (module-level so worker processes can pickle them) ---------

POINT_COLUMNS = ["T", "q2", "p2", "v", "S", "U", "F", "dH",
                 "Q_M", "W_M", "dS_M", "Delta_M", "Q_C", "W_C", "dS_C", "Delta_C",
                 "Q", "dS", "Delta", "clausius_margin", "clausius_ok"]


def point_row(p, M1, T):
    s = build_state(p, T)
    m = processes.mass_variation(p, M1, T)
    c = processes.coupling_process(p, T)
    tot = processes.combined_process(p, M1, T)
    verdict = processes.clausius_landauer_check(tot.Q, tot.dS, T, kB=p.kB)
    return [T, s.q2, s.p2, s.v, s.S, s.U, s.F, s.dH,
            m.Q, m.W, m.dS, m.delta, c.Q, c.W, c.dS, c.delta,
            tot.Q, tot.dS, tot.delta, verdict.margin, int(verdict.satisfied)]


def zero_temperature_row(p):
    q2, p2 = stationary_variances(p, 0.0)
    v = math.sqrt(q2 * p2) / p.hbar
    U = p2 / (2.0 * p.M) + p.M * p.omega ** 2 * q2 / 2.0
    row = [0.0, q2, p2, v, float(entropy_kernel(v)), U]
    return row + [math.nan] * (len(POINT_COLUMNS) - len(row))


FIGURE1_COLUMNS = ["T", "Delta_M_exact", "Delta_exact", "Delta_lowT"]


def figure1_row(p, M1, T):
    m = processes.mass_variation(p, M1, T)
    c = processes.coupling_process(p, T)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", asymptotics.AsymptoticValidityWarning)
        low = asymptotics.lowT_combined_delta(asymptotics.dimensionless(p, M1, T), p, T)
    return [T, m.delta, m.delta + c.delta, low]


FIGURE2_COLUMNS = ["T", "Q_C", "dS_C", "Q_M", "dS_M"]


def figure2_row(p, M1, T):
    c = processes.coupling_process(p, T)
    m = processes.mass_variation(p, M1, T)
    return [T, c.Q, c.dS, m.Q, m.dS]


ORACLE_COLUMNS = ["eta", "N", "q2_exact", "q2_oracle", "q2_rel_err",
                  "p2_exact", "p2_oracle", "p2_rel_err", "F_exact", "F_oracle", "F_rel_err"]


def oracle_rows(p, T, n_max):
    ladder = [n_max // 8, n_max // 4, n_max // 2, n_max]
    rows = []
    for params, sizes in ((p, ladder), (p.with_(eta=0.0), [n_max])):
        q2, p2 = stationary_variances(params, T)
        F = float(free_energy(params, T))
        for N in sizes:
            r = bath.reduced_state(params, T, N)
            Fo = bath.oracle_free_energy(params, T, N)
            rows.append([params.eta, N,
                         q2, r.q2, abs(r.q2 / q2 - 1.0),
                         p2, r.p2, abs(r.p2 / p2 - 1.0),
                         F, Fo, abs(Fo / F - 1.0)])
    return rows


def _map_grid(func, cfg):
    args = [(cfg.params, cfg.M1, float(T)) for T in cfg.T_grid]
    if cfg.jobs == 1:
        return [func(*a) for a in args]
    with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
        return list(pool.map(func, *zip(*args)))


# -- output ------------------------------------------------------------------

def _fmt(x):
    if isinstance(x, (bool, np.bool_)):
        return str(int(x))
    if isinstance(x, (int, np.integer)):
        return str(int(x))
    return f"{float(x):.14e}"


def to_csv(columns, rows):
    buf = io.StringIO()
    buf.write(",".join(columns) + "\n")
    for row in rows:
        buf.write(",".join(_fmt(x) for x in row) + "\n")
    return buf.getvalue()


def _emit(cfg, text):
    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _emit_table(cfg, columns, rows, title="", ylabel="", plot=None):
    if cfg.format == "svg":
        arr = np.array(rows, dtype=float)
        names = plot or columns[1:]
        series = {n: arr[:, columns.index(n)] for n in names}
        _emit(cfg, line_chart(arr[:, 0], series, title=title, xlabel="kT", ylabel=ylabel))
    else:
        _emit(cfg, to_csv(columns, rows))


# -- commands ----------------------------------------------------------------

def cmd_point(cfg, exact_limit=False):
    T = cfg.temperature
    if T is None:
        raise UsageError("point needs --temperature")
    if T < 0 or (T == 0 and not exact_limit):
        raise UsageError("temperature must be > 0 (use --exact-limit for T = 0)")
    row = zero_temperature_row(cfg.params) if T == 0 else point_row(cfg.params, cfg.M1, T)
    _emit(cfg, to_csv(POINT_COLUMNS, [row]))


def cmd_sweep(cfg):
    _emit(cfg, to_csv(POINT_COLUMNS, _map_grid(point_row, cfg)))


def cmd_figure1(cfg):
    rows = _map_grid(figure1_row, cfg)
    _emit_table(cfg, FIGURE1_COLUMNS, rows, title="Clausius excess vs temperature",
                ylabel="Delta")


def cmd_figure2(cfg):
    rows = _map_grid(figure2_row, cfg)
    _emit_table(cfg, FIGURE2_COLUMNS, rows, title="Heat and entropy change",
                ylabel="Q, dS")


def cmd_oracle(cfg):
    T = 0.5 if cfg.temperature is None else cfg.temperature
    if not T > 0:
        raise UsageError("oracle needs --temperature > 0")
    rows = oracle_rows(cfg.params, T, cfg.n_bath)
    if cfg.format == "svg":
        raise UsageError("oracle output is CSV only")
    _emit(cfg, to_csv(ORACLE_COLUMNS, rows))


# -- argument parsing --------------------------------------------------------

def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    g = common.add_argument_group("model and grid")
    g.add_argument("--mass", type=float, help="oscillator mass M0 (default 1.1)")
    g.add_argument("--mass1", type=float, help="final mass M1 (default 1.11)")
    g.add_argument("--omega", type=float, help="oscillator frequency (default 1.2)")
    g.add_argument("--eta", type=float, help="damping coefficient (default 48)")
    g.add_argument("--omega-d", dest="omega_d", type=float, help="Drude cutoff (default 1200)")
    g.add_argument("--hbar", type=float, help="reduced Planck constant (default 1)")
    g.add_argument("--kb", type=float, help="Boltzmann constant (default 1)")
    g.add_argument("--preset", choices=sorted(PRESETS), help="parameter preset")
    g.add_argument("--tmin", type=float, help="lowest temperature (default 0.01)")
    g.add_argument("--tmax", type=float, help="highest temperature (default 10)")
    g.add_argument("--tpoints", type=int, help="log-spaced grid points (default 200)")
    g.add_argument("--temperature", "-T", type=float, help="single temperature")
    g.add_argument("--n-bath", dest="n_bath", type=int, help="bath modes for the oracle (default 2000)")
    g.add_argument("--jobs", type=int, help="worker processes for sweeps (default 1)")
    o = common.add_argument_group("output")
    o.add_argument("--out", help="output file (default stdout)")
    o.add_argument("--format", choices=["csv", "svg"], help="output format (default csv)")
    o.add_argument("--config", help="key = value parameter file")

    parser = argparse.ArgumentParser(
        prog="qlandauer",
        description="Heat, entropy and Clausius/Landauer checks for a strongly damped "
                    "quantum oscillator.")
    sub = parser.add_subparsers(dest="command", required=True)
    pt = sub.add_parser("point", parents=[common], help="state and processes at one temperature")
    pt.add_argument("--exact-limit", action="store_true",
                    help="allow T = 0 (ground-state variances only)")
    sub.add_parser("sweep", parents=[common], help="point output over the temperature grid")
    sub.add_parser("figure1", parents=[common], help="Clausius excess, exact and low-T")
    sub.add_parser("figure2", parents=[common], help="heat and entropy of both steps")
    sub.add_parser("oracle", parents=[common],
                   help="closed forms vs finite bath (moderate preset by default)")
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = resolve_config(args, default_preset="moderate" if args.command == "oracle" else "strong")
        if args.command == "point":
            cmd_point(cfg, exact_limit=args.exact_limit)
        else:
            {"sweep": cmd_sweep, "figure1": cmd_figure1, "figure2": cmd_figure2,
             "oracle": cmd_oracle}[args.command](cfg)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"qlandauer: error: {exc}", file=sys.stderr)
        return 2
    except QLandauerError as exc:
        print(f"qlandauer: numerical failure: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
