# SPDX-License-Identifier: Apache-2.0
#
# Unless explicitly stated otherwise all files in this repository are licensed under the Apache License Version 2.0.
#
# Copyright 2026-present the qholo contributors.

# Main entry point for the qholo CLI tool

import typer

from qholo.cli.analyze_command import analyze
from qholo.cli.design_command import design
from qholo.cli.frames_command import frames
from qholo.cli.herald_command import herald
from qholo.cli.sweep_command import sweep
from qholo.cli.synth_command import synth

app = typer.Typer(add_completion=False)
app.command()(design)
app.command()(synth)
app.command()(herald)
app.command()(sweep)
app.command()(frames)
app.command()(analyze)


@app.callback(invoke_without_command=True)
def main(ctx: typer.Context) -> None:
    if ctx.invoked_subcommand is None:
        typer.echo(ctx.get_help())
        ctx.exit(2)


if __name__ == "__main__":
    app()
