import argparse

from src.application.dto import RunRequestDTO
from src.infrastructure.di import Container

from .exit_codes import ExitCode


def run_command(container: Container, args: argparse.Namespace) -> ExitCode:
    request = RunRequestDTO(
        scenario=args.scenario,
        out_dir=args.out_dir,
        seed=args.seed,
        threads=args.threads or container.config.run.default_threads(),
    )
    response = container.use_cases.run_scenario().execute(request)

    print(f"{response.scenario} ({response.engine}) -> {response.output_dir}")
    for name, verdict in response.verdicts.items():
        print(f"  {name}: {verdict}")
    for path in response.files:
        print(f"  wrote {path}")
    return ExitCode.OK


def validate_command(container: Container, args: argparse.Namespace) -> ExitCode:
    report = container.use_cases.validate_scenario().execute(args.scenario)

    print(f"{report.scenario}: {'ok' if report.ok else 'invalid'}")
    for error in report.errors:
        print(f"  error: {error}")
    for warning in report.warnings:
        print(f"  warning: {warning}")
    return ExitCode.OK if report.ok else ExitCode.INVALID


def list_command(container: Container, args: argparse.Namespace) -> ExitCode:
    scenarios = container.use_cases.list_scenarios().execute()

    width = max((len(summary.name) for summary in scenarios), default=0)
    for summary in scenarios:
        first_line = summary.description.split(". ")[0]
        print(f"{summary.name:<{width}}  {summary.engine:<6}  {first_line}")
    return ExitCode.OK
