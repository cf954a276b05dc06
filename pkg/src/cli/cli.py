import argparse, sys
from os import path, makedirs
from typing import Dict, List

from .cli_constants import \
    PROG, CONTEXT, CMD_SYNTH, CMD_EVALUATE, CMD_SWEEP, CMD_COMPARE, AXES, AXIS_K, EXIT_OK, EXIT_FAILED, EXIT_USAGE
from .run_spec import RunSpec
from ..core.constants import METHODS, MODES, MODE_GLOBAL
from ..core.forecast_panel import ForecastPanel
from ..core.method_config import MethodConfig
from ..core.stack_exception import StackException
from ..dataio.dataio_constants import PANEL_SUFFIX, SYNTH_CONFIG_SUFFIX
from ..dataio.panel_io import load_panel, write_panel
from ..dataio.report_bundle import ReportBundle, write_reports
from ..dataio.synth_config import SynthConfig, load_synth_config, write_synth_config, benchmark_configs
from ..dataio.synth_panel import synth_panel
from ..db.database_service import DatabaseService
from ..etc.config_constants import DEFAULT_CONFIG_PATH
from ..etc.config_service import ConfigService
from ..evaluation.evaluation_results import EvaluationResult
from ..evaluation.evaluation_service import EvaluationService
from ..log.log_service import LogService
from ..metrics.prob_metrics import pooled_report


def _int_list(value: str) -> List[int]:
    try:
        values: List[int] = [int(v) for v in value.split(",") if v.strip() != ""]
    except ValueError:
        raise argparse.ArgumentTypeError("'{0}' is not a comma separated list of integers".format(value))

    if len(values) == 0 or any(v < 1 for v in values):
        raise argparse.ArgumentTypeError("grid '{0}' must hold positive integers".format(value))

    return values


def _positive(value: str) -> int:
    try:
        number: int = int(value)
    except ValueError:
        raise argparse.ArgumentTypeError("'{0}' is not an integer".format(value))

    if number < 1:
        raise argparse.ArgumentTypeError("'{0}' must be at least 1".format(value))

    return number


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", default=DEFAULT_CONFIG_PATH, help="config.json with run defaults (default: %(default)s)")
    common.add_argument("--seed", type=int, help="seed for forests and synthetic data")
    common.add_argument("--out", help="output directory for panels, reports and the record store")
    common.add_argument("--jobs", type=int, help="worker processes for (series, test hour) tasks, -1 for every core")

    inputs = argparse.ArgumentParser(add_help=False)
    inputs.add_argument("--panel", action="append", help="panel CSV (repeatable)")
    inputs.add_argument("--synth-config", dest="synth_config", help="synthetic panel config JSON used instead of --panel")

    method = argparse.ArgumentParser(add_help=False)
    method.add_argument("--method", action="append", choices=METHODS, help="meta-learner (repeatable)")
    method.add_argument("--mode", choices=MODES, help="global or local training (default: global)")
    method.add_argument("--k", type=_positive, help="nearest patterns used in local mode")
    method.add_argument("--q", type=_positive, help="minimum leaf size for qrs/qrf forests")
    method.add_argument("--trees", type=_positive, help="trees per forest")
    method.add_argument("--hours", type=_positive, help="test hours per series (default 100)")
    method.add_argument("--horizon", type=_positive, help="forecast horizon in hours (default 1)")
    method.add_argument("--no-rearrange", dest="no_rearrange", action="store_true", help="keep crossing qlr quantiles as fitted")

    parser = argparse.ArgumentParser(prog=PROG, description="Probabilistic load forecasting by stacking base model forecasts")
    commands = parser.add_subparsers(dest="command", required=True)

    synth = commands.add_parser(CMD_SYNTH, parents=[common], help="write synthetic panels")
    synth.add_argument("--synth-config", dest="synth_config", help="single synthetic panel config JSON")
    synth.add_argument("--series", type=_positive, help="benchmark series count (default 10)")
    synth.add_argument("--days", type=_positive, help="days per series (default 730)")
    synth.add_argument("--models", type=_positive, help="base models per series (default 8)")

    commands.add_parser(CMD_EVALUATE, parents=[common, inputs, method], help="evaluate methods on every series")

    sweep = commands.add_parser(CMD_SWEEP, parents=[common, inputs, method], help="sweep k (local vs global) or q")
    sweep.add_argument("--axis", choices=AXES, help="hyperparameter to sweep (default: k)")
    sweep.add_argument("--grid", type=_int_list, help="comma separated values, e.g. 20,40")

    commands.add_parser(CMD_COMPARE, parents=[common], help="Diebold-Mariano comparison of the stored records in --out")
    return parser


"""
Command line front door. Returns the process exit code:
0 when every artifact was written, 1 on a run error, 2 on bad usage
"""
def run(argv: List[str] = None) -> int:
    parser: argparse.ArgumentParser = build_parser()

    try:
        args: argparse.Namespace = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK

    config: ConfigService = ConfigService(args.config)
    logger: LogService = None

    try:
        logger = LogService(config.log_path)
        spec: RunSpec = RunSpec(args, config)
    except ValueError as e:
        parser.print_usage(sys.stderr)
        print("{0}: error: {1}".format(PROG, e), file=sys.stderr)
        return EXIT_USAGE
    except StackException as e:
        LogService().log_error(e.raw_message, CONTEXT)
        return EXIT_FAILED

    try:
        if spec.command == CMD_SYNTH:
            _synth(spec, logger)
        elif spec.command == CMD_EVALUATE:
            _evaluate(spec, config, logger)
        elif spec.command == CMD_SWEEP:
            _sweep(spec, config, logger)
        else:
            _compare(spec, config, logger)
    except StackException as e:
        logger.log_error(e.raw_message, CONTEXT)
        return EXIT_FAILED

    return EXIT_OK


def _synth(spec: RunSpec, logger: LogService) -> None:
    configs: List[SynthConfig] = [load_synth_config(spec.synth_config)] if spec.synth_config \
        else benchmark_configs(spec.series, spec.days, spec.models, spec.seed)

    _make_out_dir(spec.out_dir)
    for synth_config in configs:
        panel: ForecastPanel = synth_panel(synth_config)
        write_panel(panel, path.join(spec.out_dir, panel.series_id + PANEL_SUFFIX))
        write_synth_config(synth_config, path.join(spec.out_dir, panel.series_id + SYNTH_CONFIG_SUFFIX))
        logger.log_info("Wrote '{0}': {1} hours, {2} models".format(panel.series_id, panel.length, panel.n_models), CONTEXT)


def _evaluate(spec: RunSpec, config: ConfigService, logger: LogService) -> None:
    panels: List[ForecastPanel] = _load_panels(spec)
    service: EvaluationService = EvaluationService(config, logger, spec.jobs)
    configs: List[MethodConfig] = [_method_config(spec, m, spec.mode, spec.k) for m in spec.methods]

    results: Dict[str, Dict[str, EvaluationResult]] = service.evaluate_panels(panels, configs, spec.hours)
    bundle: ReportBundle = _result_bundle(results)

    for panel in panels:
        bundle.add_base_models(panel.series_id, service.base_model_report(panel, service.select_test_hours(panel, spec.hours)))

    _make_out_dir(spec.out_dir)
    DatabaseService(spec.out_dir, config, logger).save_results(results)
    _write(bundle, spec, logger)


def _sweep(spec: RunSpec, config: ConfigService, logger: LogService) -> None:
    panels: List[ForecastPanel] = _load_panels(spec)
    service: EvaluationService = EvaluationService(config, logger, spec.jobs)
    base: MethodConfig = _method_config(spec, spec.methods[0], MODE_GLOBAL, None)
    bundle: ReportBundle = ReportBundle()

    for panel in panels:
        hours: List[int] = service.select_test_hours(panel, spec.hours)

        if spec.axis == AXIS_K:
            bundle.add_sweep(service.sweep_k(panel, base, spec.grid, hours))
        else:
            bundle.add_sweep(service.sweep_q(panel, base, spec.grid, hours))

    _write(bundle, spec, logger)


def _compare(spec: RunSpec, config: ConfigService, logger: LogService) -> None:
    service: EvaluationService = EvaluationService(config, logger, spec.jobs)
    results: Dict[str, Dict[str, EvaluationResult]] = DatabaseService(spec.out_dir, config, logger).load_results(service.grid)

    bundle: ReportBundle = _result_bundle(results)
    bundle.add_comparison(service.compare_methods(results))
    _write(bundle, spec, logger)


def _method_config(spec: RunSpec, method: str, mode: str, k: int) -> MethodConfig:
    return MethodConfig.defaults(method, mode, k, spec.trees, spec.min_leaf(method), spec.horizon, spec.seed, spec.rearrange)


def _load_panels(spec: RunSpec) -> List[ForecastPanel]:
    if spec.synth_config:
        return [synth_panel(load_synth_config(spec.synth_config))]

    return [load_panel(p) for p in spec.panels]


def _result_bundle(results: Dict[str, Dict[str, EvaluationResult]]) -> ReportBundle:
    bundle: ReportBundle = ReportBundle()

    for label, by_series in results.items():
        for series_id in sorted(by_series):
            bundle.add_evaluation(by_series[series_id])

        pooled = [(r.actuals, r.forecasts) for _, r in sorted(by_series.items())]
        if pooled:
            bundle.add_pooled(label, len(pooled), pooled_report(pooled))

    return bundle


def _make_out_dir(out_dir: str) -> None:
    try:
        makedirs(out_dir, exist_ok=True)
    except OSError as e:
        raise StackException("Cannot create output directory '{0}': {1}".format(out_dir, e))


def _write(bundle: ReportBundle, spec: RunSpec, logger: LogService) -> None:
    written: List[str] = write_reports(bundle, spec.out_dir)
    logger.log_info("Wrote {0} report files to {1}".format(len(written), spec.out_dir), CONTEXT)
