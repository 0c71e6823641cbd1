"""
Kommandozeilen-Befehle des DK-STP Toolkits

Jeder Befehl liest Matrizen (Datei oder inline), rechnet und schreibt
{"command": ..., "result": ..., "meta": {...}} als JSON auf stdout.
Exit-Codes: 0 Erfolg, 1 Fachfehler (singulär, nicht invertierbar, ...), 2 Aufruf-/Parse-Fehler.
"""

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Tuple

import numpy as np
from loguru import logger

from src.utils.config_loader import ConfigLoader
from src.utils.errors import DKSTPError, DimensionError, ParseError
from src.linalg.matrix import Matrix, as_vector
from src.stp.bridge import ProductKind, bridge_matrix, check_dimension
from src.stp.products import dk_power, dk_stp, dk_stp_vector, vv_stp
from src.dynamics.space import distance, equivalent, inner_product, vec_add
from src.dynamics.norms import dk_norm_empirical, dk_norm_formula
from src.dynamics.trajectory import ct_trajectory, dt_trajectory
from src.square.restriction import square_restriction
from src.square.cayley_hamilton import annihilating_coefficients, gch_residual
from src.square.inverse import pdet, pi_eigen, pi_inverse, pi_inverse_check
from src.lie.algebra import ad_matrix, bracket, killing_form
from src.lie.center import center_dim, gamma_matrix
from src.group.element import GroupElement, group_mul
from src.group.inverse import group_inverse
from src.group.exponential import e0_map, exp_map
from .documents import MatrixDocument, load_matrix

COMMANDS = [
    'product', 'bridge', 'power', 'restrict', 'charpoly', 'gch-check', 'pdet', 'pinv',
    'pi-eigen', 'bracket', 'adjoint', 'killing', 'gamma', 'center-dim', 'group-mul',
    'group-inv', 'exp', 'e0', 'norm', 'simulate-dt', 'simulate-ct', 'vv', 'vec-add', 'inner',
]


def setup_logging(config: ConfigLoader, level: Optional[str] = None):
    """Konfiguriert Logging (stderr, optional Log-Datei)"""
    log_level = level or config.get('logging.level', 'WARNING')
    log_path = config.get('logging.path')

    # Entferne Standard-Handler
    logger.remove()

    # Console Handler
    logger.add(
        sys.stderr,
        level=log_level,
        format="<green>{time:YYYY-MM-DD HH:mm:ss}</green> | <level>{level: <8}</level> | <level>{message}</level>"
    )

    # File Handler
    if log_path:
        Path(log_path).parent.mkdir(parents=True, exist_ok=True)
        logger.add(
            log_path,
            level=log_level,
            format="{time:YYYY-MM-DD HH:mm:ss} | {level: <8} | {message}",
            rotation=config.get('logging.rotation', '10 MB'),
            retention=config.get('logging.retention', '7 days')
        )

    logger.debug("Logging configured")


def build_parser() -> argparse.ArgumentParser:
    """Argument-Parser mit allen Befehlen und Optionen"""
    parser = argparse.ArgumentParser(
        prog='dkstp',
        description='DK-STP Toolkit: dimensionserhaltende Semi-Tensor-Produkte',
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Beispiele:
  %(prog)s product --a tests/fixtures/wide_3x4.json --x "2; -1; 3"
  %(prog)s killing --a tests/fixtures/lie_A.json --b tests/fixtures/lie_B.json
  %(prog)s gamma --m 1 --n 2
  %(prog)s restrict --a "1 2 -1 4; 3 1 0 -2; 5 -2 4 -1" --weighted gauss

Matrizen:
  Datei mit {"rows": r, "cols": c, "data": [...]} oder inline "1 2; 3 4"
  Beginnt die Matrix mit einem Minus, mit = übergeben: --x="-1; 2"
        """
    )

    parser.add_argument('command', choices=COMMANDS, help='Befehl zum Ausführen')

    # Eingaben
    parser.add_argument('--a', type=str, default=None, help='Matrix A (Datei oder inline)')
    parser.add_argument('--b', type=str, default=None, help='Matrix B (Datei oder inline)')
    parser.add_argument('--x', type=str, default=None, help='Vektor x (Datei oder inline)')
    parser.add_argument('--y', type=str, default=None, help='Vektor y (Datei oder inline)')

    # Produktvariante
    parser.add_argument('--kind', choices=['left', 'right'], default='left',
                        help='Linkes oder rechtes DK-STP (default: left)')
    parser.add_argument('--weighted', choices=['ones', 'average', 'gauss'], default=None,
                        help='Gewichtsschema (default: ungewichtet)')

    # Parameter
    parser.add_argument('--tol', type=float, default=None, help='Toleranz (default: aus config; inner: Äquivalenz-Abstand)')
    parser.add_argument('--steps', type=int, default=None, help='Anzahl Schritte (simulate-dt)')
    parser.add_argument('--t', type=float, default=None, help='Zeitpunkt (simulate-ct, exp)')
    parser.add_argument('--k', type=int, default=None, help='Exponent (power)')
    parser.add_argument('--m', type=int, default=None, help='Zeilenzahl (bridge, gamma, center-dim)')
    parser.add_argument('--n', type=int, default=None, help='Spaltenzahl (bridge, gamma, center-dim)')
    parser.add_argument('--mode', choices=['formula', 'empirical'], default='formula',
                        help='DK-Norm: Formel oder empirisch (default: formula)')
    parser.add_argument('--dims', type=str, default=None,
                        help='Dimensionen der Zufallsvektoren, z.B. "2,3"')
    parser.add_argument('--samples', type=int, default=None, help='Anzahl Zufallsvektoren')
    parser.add_argument('--seed', type=int, default=None, help='Seed der Zufallsvektoren')
    parser.add_argument('--method', choices=['auto', 'series', 'closed'], default='auto',
                        help='Lösungsweg für simulate-ct (default: auto)')
    parser.add_argument('--subtract', action='store_true', help='vec-add: x ⊖ y statt x ⊕ y')

    # Ausgabe und Umgebung
    parser.add_argument('--out', type=str, default=None, help='Ergebnis in Datei statt stdout')
    parser.add_argument('--config', type=str, default=None, help='Pfad zur Konfigurationsdatei')
    parser.add_argument('--log-level', choices=['DEBUG', 'INFO', 'WARNING', 'ERROR'], default=None,
                        help='Log-Level (default: aus config)')

    return parser


def encode(value: Any) -> Any:
    """Wandelt Ergebnisse in JSON-fähige Werte (komplexe Zahlen als {"re", "im"})"""
    if isinstance(value, GroupElement):
        return encode(value.coord)
    if isinstance(value, np.ndarray):
        if np.iscomplexobj(value):
            return [encode(v) for v in value.reshape(-1)]
        return MatrixDocument.from_matrix(value).to_dict()
    if isinstance(value, (complex, np.complexfloating)):
        return {"re": float(value.real), "im": float(value.imag)}
    if isinstance(value, (np.integer, int)) and not isinstance(value, bool):
        return int(value)
    if isinstance(value, (np.floating, float)):
        return float(value)
    if isinstance(value, dict):
        return {k: encode(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [encode(v) for v in value]
    return value


@dataclass
class CommandContext:
    """Argumente, Konfiguration und Produktvariante eines Aufrufs"""
    args: argparse.Namespace
    config: ConfigLoader
    kind: ProductKind

    def require(self, name: str) -> Any:
        value = getattr(self.args, name)
        if value is None:
            raise ParseError(f"'{self.args.command}' requires --{name.replace('_', '-')}")
        return value

    def _checked(self, M: Matrix, name: str) -> Matrix:
        limit = self.config.get('limits.max_dimension', 4096)
        check_dimension(M.shape[0], f"{name} rows", limit)
        check_dimension(M.shape[1], f"{name} cols", limit)
        return M

    def matrix(self, name: str) -> Matrix:
        return self._checked(load_matrix(self.require(name)), name)

    def vector(self, name: str) -> np.ndarray:
        M = self.matrix(name)
        try:
            return as_vector(M, name)
        except DimensionError as e:
            raise ParseError(f"--{name} must be a vector: {e}") from e

    def integer(self, name: str) -> int:
        return int(self.require(name))

    def tol(self, key: str) -> float:
        return self.args.tol if self.args.tol is not None else float(self.config.get(key))

    def shape(self, M: np.ndarray) -> List[int]:
        return list(M.shape) if M.ndim == 2 else [M.size, 1]


Result = Tuple[Any, Dict[str, Any]]


def cmd_product(ctx: CommandContext) -> Result:
    A = ctx.matrix('a')
    if ctx.args.x is not None:
        x = ctx.vector('x')
        return dk_stp_vector(A, x, ctx.kind), {"a": ctx.shape(A), "x": x.size}
    B = ctx.matrix('b')
    return dk_stp(A, B, ctx.kind), {"a": ctx.shape(A), "b": ctx.shape(B)}


def cmd_bridge(ctx: CommandContext) -> Result:
    m, n = ctx.integer('m'), ctx.integer('n')
    return bridge_matrix(m, n, ctx.kind), {"m": m, "n": n}


def cmd_power(ctx: CommandContext) -> Result:
    A = ctx.matrix('a')
    k = ctx.integer('k')
    return dk_power(A, k, ctx.kind), {"a": ctx.shape(A), "k": k}


def cmd_restrict(ctx: CommandContext) -> Result:
    A = ctx.matrix('a')
    restriction = square_restriction(A, ctx.kind)
    return restriction.value, {"a": ctx.shape(A), "order": restriction.order}


def cmd_charpoly(ctx: CommandContext) -> Result:
    A = ctx.matrix('a')
    poly, restriction = annihilating_coefficients(A, ctx.kind)
    return list(poly.coeffs), {"a": ctx.shape(A), "branch": restriction.branch, "degree": poly.degree}


def cmd_gch_check(ctx: CommandContext) -> Result:
    A = ctx.matrix('a')
    poly, restriction = annihilating_coefficients(A, ctx.kind)
    meta = {"a": ctx.shape(A), "branch": restriction.branch, "coefficients": list(poly.coeffs)}
    return gch_residual(A, ctx.kind), meta


def cmd_pdet(ctx: CommandContext) -> Result:
    A = ctx.matrix('a')
    return pdet(A, ctx.kind), {"a": ctx.shape(A)}


def cmd_pinv(ctx: CommandContext) -> Result:
    A = ctx.matrix('a')
    tol = ctx.tol('tolerances.pi_invertible')
    max_condition = float(ctx.config.get('tolerances.bridge_condition'))
    B = pi_inverse(A, ctx.kind, tol=tol, max_condition=max_condition)
    check = pi_inverse_check(A, B, ctx.kind)
    meta = {
        "a": ctx.shape(A),
        "tol": tol,
        "residual": check.proven,
        "reverse_residual": check.reverse,
    }
    return B, meta


def cmd_pi_eigen(ctx: CommandContext) -> Result:
    A = ctx.matrix('a')
    pairs = pi_eigen(A, ctx.kind)
    result = [{"value": pair.value, "vector": pair.vector} for pair in pairs]
    return result, {"a": ctx.shape(A), "order": len(pairs)}


def cmd_bracket(ctx: CommandContext) -> Result:
    A, B = ctx.matrix('a'), ctx.matrix('b')
    return bracket(A, B, ctx.kind), {"a": ctx.shape(A)}


def cmd_adjoint(ctx: CommandContext) -> Result:
    A = ctx.matrix('a')
    return ad_matrix(A, ctx.kind).value, {"a": ctx.shape(A), "coordinates": "V_c"}


def cmd_killing(ctx: CommandContext) -> Result:
    A, B = ctx.matrix('a'), ctx.matrix('b')
    return killing_form(A, B, ctx.kind), {"a": ctx.shape(A)}


def cmd_gamma(ctx: CommandContext) -> Result:
    m, n = ctx.integer('m'), ctx.integer('n')
    return gamma_matrix(m, n, ctx.kind), {"m": m, "n": n, "unknowns": "V_r"}


def cmd_center_dim(ctx: CommandContext) -> Result:
    m, n = ctx.integer('m'), ctx.integer('n')
    tol = ctx.tol('tolerances.rank')
    return center_dim(m, n, ctx.kind, tol), {"m": m, "n": n, "tol": tol}


def cmd_group_mul(ctx: CommandContext) -> Result:
    A, B = ctx.matrix('a'), ctx.matrix('b')
    return group_mul(GroupElement(A), GroupElement(B), ctx.kind), {"a": ctx.shape(A)}


def cmd_group_inv(ctx: CommandContext) -> Result:
    A = ctx.matrix('a')
    tol = ctx.tol('tolerances.group_residual')
    return group_inverse(GroupElement(A), tol, ctx.kind), {"a": ctx.shape(A), "tol": tol}


def cmd_exp(ctx: CommandContext) -> Result:
    A = ctx.matrix('a')
    tol = ctx.tol('series.tol')
    t = ctx.args.t if ctx.args.t is not None else 1.0
    group_tol = float(ctx.config.get('tolerances.group_residual'))
    element = exp_map(A, tol, t=t, kind=ctx.kind, group_tol=group_tol)
    return element, {"a": ctx.shape(A), "t": t, "tol": tol}


def cmd_e0(ctx: CommandContext) -> Result:
    A = ctx.matrix('a')
    tol = ctx.tol('series.tol')
    max_terms = int(ctx.config.get('series.max_terms'))
    return e0_map(A, tol, ctx.kind, max_terms), {"a": ctx.shape(A), "tol": tol}


def cmd_norm(ctx: CommandContext) -> Result:
    A = ctx.matrix('a')
    if ctx.args.mode == 'formula':
        return dk_norm_formula(A), {"a": ctx.shape(A), "mode": "formula"}

    if ctx.args.dims:
        try:
            dims = [int(d) for d in ctx.args.dims.split(',') if d.strip()]
        except ValueError as e:
            raise ParseError(f"--dims must be a comma separated list of integers: {e}") from e
    else:
        dims = [A.shape[1]]
    samples = ctx.args.samples if ctx.args.samples is not None else int(ctx.config.get('sampling.samples'))
    seed = ctx.args.seed if ctx.args.seed is not None else int(ctx.config.get('sampling.seed'))
    value = dk_norm_empirical(A, dims, samples=samples, seed=seed, kind=ctx.kind)
    meta = {"a": ctx.shape(A), "mode": "empirical", "dims": dims, "samples": samples, "seed": seed}
    return value, meta


def cmd_simulate_dt(ctx: CommandContext) -> Result:
    A = ctx.matrix('a')
    x = ctx.vector('x')
    steps = ctx.integer('steps')
    trajectory = dt_trajectory(A, x, steps, ctx.kind)
    result = {
        "times": list(trajectory.times),
        "states": [state.entries for state in trajectory.states],
    }
    return result, {"a": ctx.shape(A), "dims": [state.dim for state in trajectory.states]}


def cmd_simulate_ct(ctx: CommandContext) -> Result:
    A = ctx.matrix('a')
    x = ctx.vector('x')
    t = float(ctx.require('t'))
    tol = ctx.tol('series.tol')
    max_terms = int(ctx.config.get('series.max_terms'))
    state = ct_trajectory(A, x, t, tol=tol, method=ctx.args.method, kind=ctx.kind, max_terms=max_terms)
    meta = {"a": ctx.shape(A), "t": t, "tol": tol, "method": ctx.args.method, "dim": state.dim}
    return state.entries, meta


def cmd_vv(ctx: CommandContext) -> Result:
    x, y = ctx.vector('x'), ctx.vector('y')
    return vv_stp(x, y, ctx.kind), {"x": x.size, "y": y.size}


def cmd_vec_add(ctx: CommandContext) -> Result:
    x, y = ctx.vector('x'), ctx.vector('y')
    sign = "-" if ctx.args.subtract else "+"
    return vec_add(x, y, sign).entries, {"x": x.size, "y": y.size, "sign": sign}


def cmd_inner(ctx: CommandContext) -> Result:
    x, y = ctx.vector('x'), ctx.vector('y')
    tol = ctx.tol('tolerances.equivalence')
    meta = {
        "x": x.size,
        "y": y.size,
        "distance": distance(x, y),
        "equivalent": equivalent(x, y, tol),
        "tol": tol,
    }
    return inner_product(x, y), meta


HANDLERS: Dict[str, Callable[[CommandContext], Result]] = {
    'product': cmd_product,
    'bridge': cmd_bridge,
    'power': cmd_power,
    'restrict': cmd_restrict,
    'charpoly': cmd_charpoly,
    'gch-check': cmd_gch_check,
    'pdet': cmd_pdet,
    'pinv': cmd_pinv,
    'pi-eigen': cmd_pi_eigen,
    'bracket': cmd_bracket,
    'adjoint': cmd_adjoint,
    'killing': cmd_killing,
    'gamma': cmd_gamma,
    'center-dim': cmd_center_dim,
    'group-mul': cmd_group_mul,
    'group-inv': cmd_group_inv,
    'exp': cmd_exp,
    'e0': cmd_e0,
    'norm': cmd_norm,
    'simulate-dt': cmd_simulate_dt,
    'simulate-ct': cmd_simulate_ct,
    'vv': cmd_vv,
    'vec-add': cmd_vec_add,
    'inner': cmd_inner,
}


def run_command(argv: List[str]) -> int:
    """
    Führt einen Befehl aus

    Args:
        argv: Argumente ohne Programmnamen, z.B. ['gamma', '--m', '1', '--n', '2']

    Returns:
        Exit-Code (0 Erfolg, 1 Fachfehler, 2 Aufruf-/Parse-Fehler)
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        # argparse: 0 bei --help, 2 bei Aufruffehlern
        return e.code if isinstance(e.code, int) else 2

    try:
        config = ConfigLoader(args.config)
    except DKSTPError as e:
        logger.error(f"error: {e}")
        return 1
    setup_logging(config, args.log_level)

    try:
        ctx = CommandContext(args=args, config=config, kind=ProductKind.parse(args.kind, args.weighted))
        logger.debug(f"Running '{args.command}' with kind {ctx.kind.label()}")
        result, meta = HANDLERS[args.command](ctx)
    except ParseError as e:
        logger.error(f"error: {e}")
        return 2
    except DKSTPError as e:
        logger.error(f"error: {e}")
        return 1

    meta = {"kind": ctx.kind.label(), **meta}
    payload = {"command": args.command, "result": encode(result), "meta": encode(meta)}
    text = json.dumps(payload, indent=2, ensure_ascii=False)

    if args.out:
        Path(args.out).write_text(text + "\n", encoding="utf-8")
        logger.info(f"Result written to {args.out}")
    else:
        print(text)
    return 0
