"""Command-line experiment runner.

Every run writes its artifacts plus ``manifest.json`` (the resolved config and
artifact list) into ``--out-dir``.  Settings come from built-in defaults, then
an optional JSON ``--config`` file, then explicit flags.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from pathlib import Path

import numpy as np

from . import __version__
from .clifford import (
    build_coset_table,
    clifford_group_order,
    clifford_to_matrix,
    count_anticommuting_pairs,
    symplectic_group_array,
)
from .ditmath import require_prime
from .polar import (
    BudgetExceeded,
    base_metrics,
    classical_counterpart,
    dephasing_probs,
    depolarizing_for_coherent_info,
    depolarizing_probs,
    good_R_coset_average_check,
    make_tree,
    monte_carlo_metrics,
    one_level_crosscheck,
    polarization_statistics,
    synthesize_exact,
    validate_pauli_probs,
)
from .qchannel import check_reliability_bounds, pauli_channel
from .twirl import (
    analytic_on_inputs,
    apply_pauli_channel,
    pauli_basis_inputs,
    pauli_twirl_gamma,
    projective_clifford_unitaries,
    random_bilinear,
    symplectic_twirl_gamma,
    two_design_audit,
    unitary_2design_lower_bound,
)

SCHEMA_VERSION = 1

DEFAULTS = {
    "d": 2,
    "n": 4,
    "seed": 0,
    "threads": 1,
    "out_dir": "results",
    "base_channel": {"family": "depolarizing", "p": 0.1},
    "kernel_set": "reduced",
    "kernels": None,
    "samples": 10_000,
    "method": "auto",
    "exact_max_n": 3,
    "delta": 0.1,
    "rate": 0.4,
    "trials": 1000,
    "design_samples": 20_000,
    "twirl_set": "full",
    "maps": 20,
    "channels": 100,
}

COMMANDS = ("group-audit", "coset-build", "twirl-check", "lemma-check", "polarize", "decode-sim")


class ConfigError(ValueError):
    pass


# config


def base_channel_probs(chan: dict, d: int) -> np.ndarray:
    """Resolve ``{"family": ..., params}`` to a ``(d, d)`` Pauli probability table.

    Families: ``depolarizing`` with ``p`` or ``coherent_info``; ``dephasing``
    with ``p``; ``explicit`` with ``a`` (d*d numbers, row-major in ``(r, s)``).
    """
    fam = chan.get("family")
    if fam == "depolarizing":
        if "coherent_info" in chan:
            return depolarizing_probs(d, depolarizing_for_coherent_info(d, float(chan["coherent_info"])))
        return depolarizing_probs(d, float(chan.get("p", 0.1)))
    if fam == "dephasing":
        return dephasing_probs(d, float(chan.get("p", 0.1)))
    if fam == "explicit":
        a = validate_pauli_probs(chan.get("a", []))
        if a.shape[0] != d:
            raise ConfigError(f"explicit channel has d={a.shape[0]} but d={d} was requested")
        return a
    raise ConfigError(f"unknown base channel family {fam!r}")


def resolve_config(args: argparse.Namespace) -> dict:
    cfg = json.loads(json.dumps(DEFAULTS))
    if args.config:
        try:
            loaded = json.loads(Path(args.config).read_text())
        except (OSError, json.JSONDecodeError) as exc:
            raise ConfigError(f"cannot read config {args.config}: {exc}") from exc
        if not isinstance(loaded, dict):
            raise ConfigError("config file must hold a JSON object")
        unknown = set(loaded) - set(DEFAULTS)
        if unknown:
            raise ConfigError(f"unknown config keys: {sorted(unknown)}")
        cfg.update(loaded)
    for key in DEFAULTS:
        val = getattr(args, key, None)
        if val is not None:
            cfg[key] = val
    ch = dict(cfg["base_channel"])
    if getattr(args, "channel", None):
        ch = {"family": args.channel}
    for flag, key in (("p", "p"), ("coherent_info", "coherent_info")):
        val = getattr(args, flag, None)
        if val is not None:
            ch.pop("p", None)
            ch.pop("coherent_info", None)
            ch[key] = val
    if getattr(args, "a", None):
        ch = {"family": "explicit", "a": [float(x) for x in args.a.split(",")]}
    cfg["base_channel"] = ch
    cfg["command"] = args.command
    if int(cfg["d"]) < 2:
        raise ConfigError("d must be at least 2")
    if int(cfg["threads"]) < 1:
        raise ConfigError("threads must be at least 1")
    return cfg


# output


def _jsonable(x):
    if isinstance(x, dict):
        return {k: _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, np.ndarray):
        return _jsonable(x.tolist())
    if isinstance(x, (np.bool_,)):
        return bool(x)
    if isinstance(x, np.integer):
        return int(x)
    if isinstance(x, np.floating):
        return float(x)
    return x


class Writer:
    def __init__(self, cfg: dict):
        self.cfg = cfg
        self.dir = Path(cfg["out_dir"])
        self.dir.mkdir(parents=True, exist_ok=True)
        self.artifacts = []

    def json(self, name: str, payload: dict) -> Path:
        body = {"schema_version": SCHEMA_VERSION, "config": self.cfg, **payload}
        path = self.dir / name
        path.write_text(json.dumps(_jsonable(body), indent=2, sort_keys=True) + "\n")
        self.artifacts.append(name)
        return path

    def csv(self, name: str, header: list, rows) -> Path:
        path = self.dir / name
        with path.open("w", newline="") as fh:
            w = csv.writer(fh, quoting=csv.QUOTE_MINIMAL, lineterminator="\r\n")
            w.writerow(header)
            for row in rows:
                w.writerow([_fmt(row[h]) for h in header])
        self.artifacts.append(name)
        return path

    def manifest(self) -> Path:
        body = {
            "schema_version": SCHEMA_VERSION,
            "package_version": __version__,
            "config": self.cfg,
            "artifacts": self.artifacts,
        }
        path = self.dir / "manifest.json"
        path.write_text(json.dumps(_jsonable(body), indent=2, sort_keys=True) + "\n")
        return path


def _fmt(v):
    if isinstance(v, (float, np.floating)):
        return repr(float(v))
    if isinstance(v, (bool, np.bool_)):
        return int(v)
    return v


# commands


def cmd_group_audit(cfg: dict, out: Writer) -> dict:
    d = int(cfg["d"])
    require_prime(d, "group-audit")
    sp1 = len(symplectic_group_array(1, d))
    report = {
        "d": d,
        "symplectic_1": sp1,
        "clifford_1": sp1 * d**2,
        "clifford_1_formula": clifford_group_order(1, d),
        "anticommuting_pairs": count_anticommuting_pairs(d),
        "anticommuting_formula": d * (d * d - 1),
    }
    if d <= 3:
        sp2 = len(symplectic_group_array(2, d))
        report.update(symplectic_2=sp2, clifford_2=sp2 * d**4, method_2="enumerated")
    else:
        sp2 = clifford_group_order(2, d) // d**4
        report.update(symplectic_2=sp2, clifford_2=sp2 * d**4, method_2="formula")
    report["clifford_2_formula"] = clifford_group_order(2, d)
    report["pass"] = (
        report["clifford_1"] == report["clifford_1_formula"]
        and report["clifford_2"] == report["clifford_2_formula"]
        and report["anticommuting_pairs"] == report["anticommuting_formula"]
    )
    out.json("group_audit.json", report)
    return report


def cmd_coset_build(cfg: dict, out: Writer) -> dict:
    d = int(cfg["d"])
    table = build_coset_table(d)
    red = table.reduced_ids()
    summary = {
        "d": d,
        "cosets": len(table),
        "expected_cosets": d**4 + d**2,
        "reduced": len(red),
        "identity_id": table.identity_id,
        "swap_id": table.swap_id,
        "swap_fixed_points_in_reduced": table.swap_fixed_points(),
    }
    out.json("cosets.json", {**summary, "table": table.to_json()})
    out.csv(
        "cosets.csv",
        ["coset_id", "in_reduced", "swap_partner", "symplectic"],
        (
            {
                "coset_id": i,
                "in_reduced": i in set(red),
                "swap_partner": int(table.swap_orbit[i]),
                "symplectic": " ".join(str(v) for v in c.sympl.reshape(-1)),
            }
            for i, c in enumerate(table.reps)
        ),
    )
    return summary


def _label_level_audit(d: int, maps: int, seed: int) -> float:
    """Exact full-group twirl of Pauli-twirled maps, averaged over Sp(4, d) on labels."""
    rng = np.random.default_rng(seed)
    inputs = pauli_basis_inputs(d)
    group = symplectic_group_array(2, d)
    worst = 0.0
    for _ in range(maps):
        m = random_bilinear(d, rng)
        gamma = symplectic_twirl_gamma(pauli_twirl_gamma(m), d, group)
        got = np.stack([apply_pauli_channel(gamma, rho, d) for rho in inputs])
        worst = max(worst, float(np.abs(got - analytic_on_inputs(m)).max()))
    return worst


def cmd_twirl_check(cfg: dict, out: Writer) -> dict:
    d = int(cfg["d"])
    require_prime(d, "twirl-check")
    which = cfg["twirl_set"]
    maps, seed = int(cfg["maps"]), int(cfg["seed"])
    if which == "full" and d == 2:
        rep = two_design_audit(projective_clifford_unitaries(2), 2, maps, seed, set_name="full")
        rep["method"] = "dense unitaries (symplectic reps x Paulis)"
    elif which == "full" and d == 3:
        worst = _label_level_audit(d, maps, seed)
        size = len(symplectic_group_array(2, d)) * d**4
        bound = unitary_2design_lower_bound(d * d)
        rep = {"d": d, "set_name": "full", "set_size": size, "max_residual": worst,
               "residual_pass": worst < 1e-9, "size_lower_bound": bound,
               "bound_d8": "pass" if size >= bound else "fail", "pass": worst < 1e-9 and size >= bound,
               "method": "Pauli twirl then exact label-level average over Sp(4, d)"}
    elif which == "reduced" and d in (2, 3):
        table = build_coset_table(d)
        U = np.stack([clifford_to_matrix(c) for c in table.reduced()])
        rep = two_design_audit(U, d, maps, seed, set_name="reduced")
        rep["method"] = "dense unitaries (coset representatives)"
    elif which == "identity":
        rep = two_design_audit(np.eye(d * d)[None], d, maps, seed, set_name="identity")
        rep["method"] = "dense unitaries"
    else:
        raise ConfigError(f"twirl set {which!r} is not supported for d={d} (full/reduced need d in {{2, 3}})")
    out.json("twirl_check.json", rep)
    return rep


def cmd_lemma_check(cfg: dict, out: Writer) -> dict:
    d = int(cfg["d"])
    require_prime(d, "lemma-check")
    rng = np.random.default_rng(int(cfg["seed"]))
    rows = []
    for i in range(int(cfg["channels"])):
        a = rng.dirichlet(np.full(d * d, 0.3)).reshape(d, d)
        w = pauli_channel(a)
        for delta in (0.01, 0.1):
            r = check_reliability_bounds(w, delta)
            rows.append({"channel": i, **r})
    violations = sum(r["violated"] for r in rows)
    report = {"d": d, "bound_checks": len(rows), "bound_violations": violations}
    if d in (2, 3):
        table = build_coset_table(d)
        avg_checks = [good_R_coset_average_check(rng.dirichlet(np.ones(d * d)).reshape(d, d), table) for _ in range(3)]
        report["coset_average_R_max_residual"] = max(r["residual"] for r in avg_checks)
        kernels = table.reps if d == 2 else table.reps[:10]
        chain = 0.0
        for c in kernels:
            a = rng.dirichlet(np.ones(d * d)).reshape(d, d)
            res = one_level_crosscheck(a, c)
            chain = max(chain, abs(res["bad_quantum"] + res["good_quantum"] - 2 * base_metrics(a)["I_quantum"]))
        report["chain_rule_max_residual"] = chain
    out.json("lemma_check.json", report)
    out.csv("reliability_bounds.csv", ["channel", "delta", "R", "I", "low_applies", "low_bound", "high_applies",
                            "high_bound", "violated"], rows)
    return report


def _tree_from_cfg(cfg: dict):
    d, n = int(cfg["d"]), int(cfg["n"])
    a = base_channel_probs(cfg["base_channel"], d)
    return make_tree(d, n, a, seed=int(cfg["seed"]), kernel_set=cfg["kernel_set"], explicit=cfg["kernels"])


def _metrics(tree, cfg: dict, samples_key: str = "samples"):
    method = cfg["method"]
    if method == "exact":
        return synthesize_exact(tree, max_n=tree.n)
    if method == "auto" and tree.n <= int(cfg["exact_max_n"]):
        try:
            return synthesize_exact(tree, max_n=tree.n)
        except BudgetExceeded:
            pass
    return monte_carlo_metrics(tree, int(cfg[samples_key]), seed=int(cfg["seed"]))


def cmd_polarize(cfg: dict, out: Writer) -> dict:
    tree = _tree_from_cfg(cfg)
    metrics = _metrics(tree, cfg)
    stats = polarization_statistics(metrics, float(cfg["delta"]))
    out.csv("polarize.csv", ["index", "bit-path", "I_quantum", "Z_estimate", "stderr", "method"],
            ({**r, "bit-path": r["bit_path"]} for r in metrics.rows()))
    w = classical_counterpart(tree.a)
    report = {
        "d": tree.d,
        "n": tree.n,
        "seed": tree.seed,
        "kernel_set": tree.kernel_set,
        "kernel_ids": list(tree.kernel_ids),
        "base_channel": cfg["base_channel"],
        "base": {**base_metrics(tree.a), "I_classical": w.mutual_information()},
        "method": metrics.method,
        "samples": metrics.samples,
        "statistics": stats,
        "target_frac_good": (base_metrics(tree.a)["I_quantum"] + 1) / 2,
    }
    out.json("polarize.json", report)
    return report


def cmd_decode_sim(cfg: dict, out: Writer) -> dict:
    from .codec import code_for_rate, frame_error_rate

    tree = _tree_from_cfg(cfg)
    metrics = _metrics(tree, cfg, "design_samples")
    code = code_for_rate(tree, metrics, float(cfg["rate"]))
    res = frame_error_rate(code, int(cfg["trials"]), seed=int(cfg["seed"]))
    out.csv("decode_trials.csv", ["trial", "success", "info_symbol_errors"],
            ({"trial": t, "success": bool(s), "info_symbol_errors": int(e)}
             for t, (s, e) in enumerate(zip(res["success"], res["info_symbol_errors"]))))
    summary = {"d": tree.d, "n": tree.n, "rate": code.rate, "fer": res["fer"], "stderr": res["stderr"],
               "seed": int(cfg["seed"]), "trials": res["trials"], "frozen": list(code.frozen),
               "design_method": metrics.method}
    out.json("decode_sim.json", summary)
    return summary


HANDLERS = {
    "group-audit": cmd_group_audit,
    "coset-build": cmd_coset_build,
    "twirl-check": cmd_twirl_check,
    "lemma-check": cmd_lemma_check,
    "polarize": cmd_polarize,
    "decode-sim": cmd_decode_sim,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    g = common.add_argument_group("global")
    g.add_argument("--d", type=int, help="qudit dimension (prime for group features)")
    g.add_argument("--seed", type=int, help="base seed for every generator in the run")
    g.add_argument("--threads", type=int, help="worker-pool hint (recorded in the manifest)")
    g.add_argument("--out-dir", dest="out_dir", help="directory for artifacts")
    g.add_argument("--config", help="JSON config file; explicit flags override it")

    p = argparse.ArgumentParser(prog="qudit-polar", description="Qudit polar-code experiments.")
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)
    for name in ("group-audit", "coset-build"):
        sub.add_parser(name, parents=[common])
    tw = sub.add_parser("twirl-check", parents=[common])
    tw.add_argument("--set", dest="twirl_set", choices=["full", "reduced", "identity"])
    tw.add_argument("--maps", type=int)
    lc = sub.add_parser("lemma-check", parents=[common])
    lc.add_argument("--channels", type=int)
    for name in ("polarize", "decode-sim"):
        sp = sub.add_parser(name, parents=[common])
        sp.add_argument("--n", type=int, help="tree depth; block length 2**n")
        sp.add_argument("--channel", choices=["depolarizing", "dephasing", "explicit"])
        sp.add_argument("--p", type=float, help="error probability for depolarizing/dephasing")
        sp.add_argument("--coherent-info", dest="coherent_info", type=float,
                        help="pick the depolarizing p with this coherent information")
        sp.add_argument("--a", help="explicit Pauli probabilities, comma separated, row-major in (r, s)")
        sp.add_argument("--kernel-set", dest="kernel_set", choices=["full", "reduced", "explicit"])
        sp.add_argument("--kernels", type=lambda s: [int(x) for x in s.split(",")],
                        help="coset ids for --kernel-set explicit")
        sp.add_argument("--method", choices=["auto", "exact", "mc"])
        sp.add_argument("--samples", type=int, help="Monte Carlo samples")
        sp.add_argument("--delta", type=float)
        if name == "decode-sim":
            sp.add_argument("--rate", type=float)
            sp.add_argument("--trials", type=int)
            sp.add_argument("--design-samples", dest="design_samples", type=int)
    return p


def error_report(command, exc: Exception) -> dict:
    return {"status": "error", "command": command, "error_type": type(exc).__name__, "message": str(exc),
            "schema_version": SCHEMA_VERSION}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = resolve_config(args)
        out = Writer(cfg)
        result = HANDLERS[args.command](cfg, out)
        out.manifest()
    except (ValueError, ArithmeticError, BudgetExceeded, OSError) as exc:
        print(json.dumps(error_report(args.command, exc)), file=sys.stderr)
        return 2
    print(json.dumps(_jsonable({"status": "ok", "command": args.command, "artifacts": out.artifacts,
                                "summary": {k: v for k, v in result.items() if not isinstance(v, (list, dict))}})))
    return 0


if __name__ == "__main__":
    sys.exit(main())
