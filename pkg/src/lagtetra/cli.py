"""Command-line interface.

Exit codes: 0 success, 1 verification failure, 2 bad input or options,
3 geometric or numerical failure (degenerate input, ambiguity band, ...).
"""

import argparse
import json
import math
import sys
from dataclasses import dataclass

import numpy as np

from . import serialize as ser
from .errors import GeometryError
from .fibration import phi, phi_fiber, project_q
from .lagrangian import OrbitTag, classify_orbit, in_KR, in_Omega, plucker_distance, second_point
from .projective import chordal
from .tetra import DecoratedTetra, g_inverse, g_map, project_Q
from .tolerance import DEFAULT_CLUSTER_TOL, DEFAULT_TOL, tolerance
from .verify import DEFAULT_SAMPLES, DEFAULT_SEED, SUITES, VerifyConfig, run_suites

EXIT_OK, EXIT_VERIFY, EXIT_INPUT, EXIT_GEOMETRY = 0, 1, 2, 3


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class RunConfig:
    tol: float = DEFAULT_TOL
    cluster_tol: float = DEFAULT_CLUSTER_TOL
    seed: int = DEFAULT_SEED
    sample_count: int = DEFAULT_SAMPLES
    output_path: str | None = None

    def __post_init__(self):
        if not (0 < self.tol < self.cluster_tol < 1e-3):
            raise ConfigError("need 0 < tol < cluster-tol < 1e-3")
        if self.sample_count < 1:
            raise ConfigError("samples must be at least 1")
        if not (0 <= self.seed < 2**64):
            raise ConfigError("seed must be a 64-bit unsigned integer")


def _fmt_real(x):
    return "0" if abs(x) < 5e-13 else f"{x:.6g}"


def _fmt_complex(z):
    if abs(z.imag) < 5e-13 * max(1.0, abs(z)):
        return _fmt_real(z.real)
    if abs(z.real) < 5e-13 * max(1.0, abs(z)):
        return f"{_fmt_real(z.imag)}i"
    sign = "+" if z.imag >= 0 else "-"
    return f"{_fmt_real(z.real)}{sign}{_fmt_real(abs(z.imag))}i"


def _fmt_point(p):
    if abs(p.b) < 1e-12:
        return "[1:0]"
    return f"[{_fmt_complex(p.to_complex())}:1]"


def _fmt_h3(x):
    return f"({_fmt_complex(x.z)}, {_fmt_real(x.t)})"


def _bool(b):
    return "true" if b else "false"


def _read_json(path):
    try:
        if path == "-":
            text = sys.stdin.read()
        else:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
    except OSError as exc:
        raise ser.ParseError(f"cannot read {path}: {exc.strerror}") from None
    try:
        return json.loads(text, parse_constant=_reject_constant)
    except json.JSONDecodeError as exc:
        raise ser.ParseError(f"malformed JSON: {exc}") from None


def _reject_constant(name):
    raise ser.ParseError(f"{name} is not allowed")


def _require_dict(obj, *keys):
    if not isinstance(obj, dict):
        raise ser.ParseError("expected a JSON object")
    missing = [k for k in keys if k not in obj]
    if missing:
        raise ser.ParseError(f"missing key(s): {', '.join(missing)}")
    return obj


def _write(cfg, payload):
    text = json.dumps(payload, indent=2, ensure_ascii=False) + "\n"
    if cfg.output_path:
        try:
            with open(cfg.output_path, "w", encoding="utf-8") as fh:
                fh.write(text)
        except OSError as exc:
            raise ser.ParseError(f"cannot write {cfg.output_path}: {exc.strerror}") from None
    else:
        sys.stdout.write(text)


# subcommands


def cmd_classify(args, cfg):
    W = ser.lagrangian_from_json(_read_json(args.input))
    cls = classify_orbit(W)
    report = {"orbit": cls.tag.value, "lagrangian": ser.lagrangian_to_json(W)}
    if cls.tag is OrbitTag.OPEN:
        T = g_inverse(W)
        report["tetra"] = ser.tetra_to_json(T)
        report["in_Omega"] = True
        summary = f"Open; barycenter {_fmt_h3(T.barycenter)}"
    else:
        kr = in_KR(W)
        report["degenerate_barycenter"] = ser.point_to_json(cls.witness)
        report["in_KR"] = kr
        report["in_Omega"] = not kr
        summary = f"{cls.tag.value}; degenerate barycenter {_fmt_point(cls.witness)}"
        if cls.tag is OrbitTag.INTERMEDIATE:
            other = second_point(W, cls.witness)
            report["second_point"] = ser.point_to_json(other)
            summary += f"; second point {_fmt_point(other)}"
        summary += f"; in K_R: {_bool(kr)}"
    report["summary"] = summary
    _write(cfg, report)


def cmd_roundtrip(args, cfg):
    obj = _read_json(args.input)
    if isinstance(obj, dict) and "basis" in obj:
        W = ser.lagrangian_from_json(obj)
        x = g_inverse(W)
        back = g_map(x)
        err = plucker_distance(W.plucker, back.plucker)
        report = {"input": "lagrangian", "tetra": ser.tetra_to_json(x), "plucker_error": float(err)}
    else:
        T = ser.tetra_from_json(obj)
        back = g_inverse(g_map(T))
        if not isinstance(back, DecoratedTetra):
            raise GeometryError("round trip left the open orbit")
        err = max(
            max(min(chordal(v, w) for w in back.vertices) for v in T.vertices),
            max(min(chordal(d, w) for w in back.duals) for d in T.duals),
        )
        report = {"input": "tetra", "tetra": ser.tetra_to_json(back), "chordal_error": float(err)}
    report["ok"] = bool(err < 1e-8)
    _write(cfg, report)


def cmd_project(args, cfg):
    W = ser.lagrangian_from_json(_read_json(args.input))
    Q = project_Q(W)
    report = {"Q": ser.h3_to_json(Q), "in_Omega": bool(in_Omega(W))}
    if report["in_Omega"]:
        report["q"] = ser.h2_to_json(project_q(W))
    _write(cfg, report)


def cmd_fiber_sample(args, cfg):
    obj = _read_json(args.input)
    if isinstance(obj, dict) and set(obj) == {"plus"}:
        obj = obj["plus"]
    z = ser.point_from_json(obj)
    count = args.samples if args.samples is not None else 8
    tetras = phi_fiber(z, count)
    _write(
        cfg,
        {
            "target": {"plus": ser.point_to_json(z)},
            "preimages": [ser.tetra_to_json(T) for T in tetras],
        },
    )


def cmd_phi(args, cfg):
    obj = _require_dict(_read_json(args.input), "tetra", "s")
    T = ser.tetra_from_json(obj["tetra"])
    s = ser.ext_real_from_json(obj["s"])
    out = phi(T, s)
    _write(cfg, {"s": ser.ext_real_to_json(s), "image": ser.fiber_point_to_json(out)})


def _scene_range(obj):
    s_min = ser.ext_real_from_json(obj.get("s_min", -5.0))
    s_max = ser.ext_real_from_json(obj.get("s_max", 5.0))
    steps = obj.get("steps", 100)
    if isinstance(steps, bool) or not isinstance(steps, int) or not 1 <= steps <= 100000:
        raise ser.ParseError("steps must be an integer in [1, 100000]")
    if not (math.isfinite(s_min) and math.isfinite(s_max)) or s_min > s_max:
        raise ser.ParseError("need finite s_min <= s_max")
    if steps == 1:
        return [s_min]
    return [float(s) for s in np.linspace(s_min, s_max, steps)]


def cmd_scene(args, cfg):
    obj = _require_dict(_read_json(args.input), "tetra")
    T = ser.tetra_from_json(obj["tetra"])
    frames = []
    for s in _scene_range(obj):
        fp = phi(T, s)
        frame = {"s": ser.ext_real_to_json(s)}
        frame.update(ser.fiber_point_to_json(fp))
        frames.append(frame)
    _write(cfg, frames)


def cmd_verify(args, cfg):
    names = args.suite or list(SUITES)
    vcfg = VerifyConfig(cfg.tol, cfg.cluster_tol, cfg.seed, cfg.sample_count)
    reports = run_suites(names, vcfg)
    out = sys.stdout
    total = passed = 0
    for rep in reports:
        for c in rep.checks:
            out.write(c.line() + "\n")
            total += 1
            passed += c.passed
        if rep.certificate is not None:
            out.write("certificate " + json.dumps(rep.certificate, sort_keys=True) + "\n")
    out.write(f"{passed}/{total} checks passed\n")
    if cfg.output_path:
        payload = {
            "seed": cfg.seed,
            "tol": cfg.tol,
            "suites": {
                rep.name: {
                    "passed": rep.passed,
                    "checks": [
                        {"name": c.name, "passed": c.passed, "samples": c.samples, "worst": c.worst, "note": c.note}
                        for c in rep.checks
                    ],
                    **({"certificate": rep.certificate} if rep.certificate is not None else {}),
                }
                for rep in reports
            },
        }
        _write(cfg, payload)
    return EXIT_OK if passed == total else EXIT_VERIFY


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tol", type=float, default=DEFAULT_TOL, help="decision tolerance (default 1e-9)")
    common.add_argument("--cluster-tol", type=float, default=DEFAULT_CLUSTER_TOL, help="root clustering tolerance")
    common.add_argument("--seed", type=int, default=DEFAULT_SEED)
    common.add_argument("--samples", type=int, default=None, help="sample count (verify, fiber-sample)")
    common.add_argument("--out", default=None, help="write JSON output to this file")

    parser = argparse.ArgumentParser(prog="lagtetra", description="Lagrangian planes of binary cubics and regular ideal tetrahedra.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text, with_input=True):
        p = sub.add_parser(name, parents=[common], help=help_text)
        if with_input:
            p.add_argument("input", nargs="?", default="-", help="JSON input file (default stdin)")
        p.set_defaults(func=func)
        return p

    add("classify", cmd_classify, "orbit, tetrahedron or degenerate barycenter of a Lagrangian")
    add("roundtrip", cmd_roundtrip, "Lagrangian -> tetrahedron -> Lagrangian, or the reverse")
    add("project", cmd_project, "barycenter in H^3 and its projection to the real plane")
    add("fiber-sample", cmd_fiber_sample, "tetrahedra flowing to (+i, z) at +infinity")
    add("phi", cmd_phi, "flow a tetrahedron with barycenter at the origin to axis coordinate s")
    add("scene", cmd_scene, "frames of the flow over a range of s")
    v = add("verify", cmd_verify, "run the property suites", with_input=False)
    v.add_argument("--suite", action="append", choices=SUITES, help="suite to run (repeatable; default all)")
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = RunConfig(
            tol=args.tol,
            cluster_tol=args.cluster_tol,
            seed=args.seed,
            sample_count=args.samples if args.samples is not None else DEFAULT_SAMPLES,
            output_path=args.out,
        )
    except ConfigError as exc:
        parser.error(str(exc))
    try:
        with tolerance(cfg.tol, cfg.cluster_tol), np.errstate(all="ignore"):
            code = args.func(args, cfg)
    except ser.ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (GeometryError, ArithmeticError, ValueError, np.linalg.LinAlgError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_GEOMETRY
    return code or EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
