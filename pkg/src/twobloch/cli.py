"""Command-line interface: ``twobloch <command> [options]``."""

from __future__ import annotations

import argparse
import json
import sys

from . import store
from .catalog import ALIASES, StabilizerState, enumerate_catalog, lookup, replay, resolve_state, shortest_gate_path
from .errors import TwoBlochError
from .frames import AxisPermutation, fixed_axis_pairs, frame_rotation_of, group_from_frame, permute_frame
from .groups import apply_clifford, apply_rotation, group_from_strings, parse_gate
from .oracle import density_from_group
from .pauli import format_pauli, parse_pauli
from .render import SceneSpec, render_svg
from .verify import run_checks


def state_report(s: StabilizerState) -> dict:
    rho = density_from_group(s.group)
    data = store.state_to_json(s)
    data["elements"] = [format_pauli(m) for m in s.group.members]
    data["density"] = {"entries": rho.entries.tolist(), "denom": rho.denom}
    data["fixed_axes"] = [list(p) for p in fixed_axis_pairs(s.group)]
    return data


def _format_state(s: StabilizerState) -> str:
    frame = s.frame.to_json()
    frame_text = ", ".join(
        f"{k}: {v}" for k, v in (frame["alignment"] if "alignment" in frame else frame).items()
    )
    return "\n".join(
        [
            f"state {s.id}",
            f"  group    {s.group}",
            f"  class    {s.state_class}",
            f"  ket      {s.ket}",
            f"  density  {density_from_group(s.group)}",
            f"  frame    {frame_text}",
            "  fixed    " + "; ".join(" & ".join(p) for p in fixed_axis_pairs(s.group)),
        ]
    )


def _emit(args, payload, text: str) -> None:
    if args.json:
        print(json.dumps(payload, ensure_ascii=False))
    else:
        print(text)


def _state_arg(args) -> StabilizerState:
    if getattr(args, "generators", None):
        return lookup(group_from_strings(args.generators))
    if args.state is None:
        raise TwoBlochError("give --state or --generators")
    return resolve_state(args.state)


def cmd_catalog(args) -> int:
    states = enumerate_catalog()
    if args.out:
        store.write_catalog(states, args.out)
        print(f"wrote {len(states)} states to {args.out}", file=sys.stderr)
    if args.json:
        print(json.dumps(store.catalog_to_json(states)))
    elif not args.out:
        for s in states:
            print(f"{s.id:2d}  {s.state_class!s:9s}  {' '.join(s.group.generator_strings()):9s}  {s.ket}")
    return 0


def cmd_show(args) -> int:
    s = _state_arg(args)
    _emit(args, state_report(s), _format_state(s))
    return 0


def cmd_apply(args) -> int:
    s = _state_arg(args)
    if (args.gate is None) == (args.rotate is None):
        raise TwoBlochError("give exactly one of --gate or --rotate")
    if args.gate:
        gate = parse_gate(args.gate)
        out = lookup(apply_clifford(gate, s.group))
        how = f"{gate} on state {s.id}"
    else:
        p = parse_pauli(args.rotate)
        out = lookup(apply_rotation(p, args.turns, s.group))
        how = f"exp(i·{args.turns}·π/4·{format_pauli(p)}) on state {s.id}: {frame_rotation_of(p, args.turns).describe()}"
    payload = {"from": s.id, "operation": how, "state": state_report(out)}
    _emit(args, payload, f"{how}\n{_format_state(out)}")
    return 0


def cmd_permute(args) -> int:
    s = _state_arg(args)
    perm = AxisPermutation.parse_cycle(args.cycle)
    frame = s.frame
    for _ in range(args.times):
        frame = permute_frame(frame, perm)
    out = lookup(group_from_frame(frame))
    how = f"sphere-2 axis cycle {args.cycle} x{args.times} on state {s.id}"
    _emit(args, {"from": s.id, "operation": how, "state": state_report(out)}, f"{how}\n{_format_state(out)}")
    return 0


def cmd_verify(args) -> int:
    results = run_checks(seed=args.seed)
    ok = all(r.ok for r in results)
    if args.json:
        print(json.dumps({"ok": ok, "checks": [r.__dict__ for r in results]}, ensure_ascii=False))
    else:
        for r in results:
            print(f"{'PASS' if r.ok else 'FAIL'}  {r.name}" + (f"  ({r.detail})" if r.detail else ""))
    return 0 if ok else 1


def cmd_render(args) -> int:
    s = _state_arg(args)
    svg = render_svg(SceneSpec(s.frame))
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(svg)
        _emit(args, {"state": s.id, "out": args.out}, f"wrote state {s.id} to {args.out}")
    else:
        sys.stdout.write(svg)
    return 0


def cmd_path(args) -> int:
    src, dst = resolve_state(args.source), resolve_state(args.target)
    gates = shortest_gate_path(src.group, dst.group)
    landed = replay(src.group, gates)
    payload = {"from": src.id, "to": dst.id, "gates": [g.name for g in gates], "verified": landed == dst.group}
    _emit(args, payload, " ".join(g.name for g in gates) or "(already there)")
    return 0 if landed == dst.group else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized self-tests")
    common.add_argument("--out", help="output file")

    state = argparse.ArgumentParser(add_help=False)
    state.add_argument("--state", help=f"catalog id or alias ({', '.join(ALIASES)})")
    state.add_argument("--generators", help='two generators, e.g. "+ZI,+IZ"')

    parser = argparse.ArgumentParser(prog="twobloch", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("catalog", parents=[common], help="list or export the 60 states").set_defaults(func=cmd_catalog)
    sub.add_parser("show", parents=[common, state], help="group, class, ket, density, frame").set_defaults(
        func=cmd_show
    )
    p = sub.add_parser("apply", parents=[common, state], help="apply a gate or a quarter-turn rotation")
    p.add_argument("--gate", help="H1, H2, S1, S2, CNOT12 or CNOT21")
    p.add_argument("--rotate", help="positive Pauli generating the rotation, e.g. IY")
    p.add_argument("--turns", type=int, default=1, choices=(1, 2, 3))
    p.set_defaults(func=cmd_apply)
    p = sub.add_parser("permute", parents=[common, state], help="cyclically relabel sphere-2 axes")
    p.add_argument("--cycle", required=True, help='e.g. "x2>z2>y2>x2"')
    p.add_argument("--times", type=int, default=1)
    p.set_defaults(func=cmd_permute)
    sub.add_parser("verify", parents=[common], help="run every invariant check").set_defaults(func=cmd_verify)
    sub.add_parser("render", parents=[common, state], help="write an SVG picture").set_defaults(func=cmd_render)
    p = sub.add_parser("path", parents=[common], help="shortest gate sequence between two states")
    p.add_argument("--from", dest="source", required=True)
    p.add_argument("--to", dest="target", required=True)
    p.set_defaults(func=cmd_path)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (TwoBlochError, ValueError, KeyError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        if isinstance(exc, KeyError):
            msg = f"not a stabilizer state in the catalog: {msg}"
        print(f"error: {type(exc).__name__}: {msg}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: io: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
