"""Command line interface.

One subcommand per pipeline stage (scan, noise, filter, psnr, masks) plus
`run` for the whole benchmark, so any stage can be reproduced in
isolation. Stage commands read PGM or raw dumps (sniffed from the file
header) and write PGM by default or the lossless raw dump with --raw.

Exit codes: 0 success, 2 bad flags/config, 3 I/O failure, 4 file content
failed validation.
"""

from __future__ import annotations

import functools
import sys
from pathlib import Path

import click

from .filters import adaptive_filter, box_filter
from .imgio import ImageFormatError, read_image, read_labelmap, write_labelmap, write_pgm, write_raw
from .masks import MaskError, builtin_masks, format_masks, save_masks
from .metrics import psnr
from .noise import NoiseSpec, apply_noise
from .pipeline import PipelineConfig, format_db, load_mask_source, run_pipeline, scan_variants
from .scan import CRITERIA, pad_to_block_multiple, scan_square


def cli_errors(f):
    @functools.wraps(f)
    def wrapper(*args, **kwargs):
        try:
            return f(*args, **kwargs)
        except click.ClickException:
            raise
        except OSError as exc:
            click.echo(f"error: {exc}", err=True)
            sys.exit(3)
        except (MaskError, ImageFormatError, ValueError) as exc:
            click.echo(f"error: {exc}", err=True)
            sys.exit(4)

    return wrapper


def _odd_kernel(ctx, param, value):
    values = value if isinstance(value, tuple) else (value,)
    for k in values:
        if k < 1 or k % 2 == 0:
            raise click.BadParameter(f"kernel size must be an odd integer >= 1, got {k}")
    return value


def _write_image(img, path, raw: bool) -> None:
    if raw:
        write_raw(img, path)
    else:
        write_pgm(img, path)


@click.group()
def main():
    """Variable-pixel image scanning, noising, filtering and PSNR tables."""


@main.command("masks")
@click.option("--out", type=click.Path(path_type=Path), default=None, help="Write to a file instead of stdout.")
@cli_errors
def masks_cmd(out):
    """Dump the built-in eight-mask set in the mask text format."""
    masks = builtin_masks()
    if out is None:
        click.echo(format_masks(masks), nl=False)
    else:
        save_masks(masks, out)


@main.command("scan")
@click.argument("input", type=click.Path(exists=False, path_type=Path))
@click.option("--out", required=True, type=click.Path(path_type=Path), help="Scanned image output.")
@click.option("--labels", type=click.Path(path_type=Path), default=None, help="Also write the label map here.")
@click.option("--layout", type=click.Choice(["square", "variable"]), default="variable", show_default=True)
@click.option("--masks", "mask_path", type=click.Path(path_type=Path), default=None, help="Mask set file (default: builtin).")
@click.option("--criterion", type=click.Choice(list(CRITERIA)), default="recon-error", show_default=True)
@click.option("--raw", is_flag=True, help="Write the lossless raw dump instead of PGM.")
@cli_errors
def scan_cmd(input, out, labels, layout, mask_path, criterion, raw):
    """Form the square or variable-pixel representation of an image."""
    img = read_image(input)
    if layout == "square":
        h, w = img.shape
        scanned = scan_square(pad_to_block_multiple(img)).image[:h, :w]
        lab = None
    else:
        _, scanned, lab = scan_variants(img, load_mask_source(mask_path), criterion)
    _write_image(scanned, out, raw)
    if labels is not None:
        if lab is None:
            raise click.UsageError("--labels requires --layout variable")
        write_labelmap(lab, labels)


@main.command("noise")
@click.argument("input", type=click.Path(path_type=Path))
@click.option("--out", required=True, type=click.Path(path_type=Path))
@click.option("--kind", type=click.Choice(["salt_pepper", "gaussian", "speckle"]), required=True)
@click.option("--density", type=float, default=0.05, show_default=True, help="salt_pepper corruption probability.")
@click.option("--sigma", type=float, default=25.5, show_default=True, help="gaussian std-dev on [0,255].")
@click.option("--variance", type=float, default=0.04, show_default=True, help="speckle multiplicative variance.")
@click.option("--seed", type=int, default=42, show_default=True)
@click.option("--raw", is_flag=True)
@cli_errors
def noise_cmd(input, out, kind, density, sigma, variance, seed, raw):
    """Inject a seeded noise model into an image."""
    img = read_image(input)
    spec = NoiseSpec(kind, density=density, sigma=sigma, variance=variance, seed=seed)
    _write_image(apply_noise(img, spec), out, raw)


@main.command("filter")
@click.argument("input", type=click.Path(path_type=Path))
@click.option("--out", required=True, type=click.Path(path_type=Path))
@click.option("--kernel", type=int, default=5, show_default=True, callback=_odd_kernel)
@click.option("--statistic", type=click.Choice(["mean", "median"]), default="mean", show_default=True)
@click.option(
    "--mode",
    type=click.Choice(["square", "adaptive-literal", "adaptive-block"]),
    default="square",
    show_default=True,
)
@click.option("--labels", type=click.Path(path_type=Path), default=None, help="Label map (adaptive modes).")
@click.option("--raw", is_flag=True)
@cli_errors
def filter_cmd(input, out, kernel, statistic, mode, labels, raw):
    """Box-filter an image, or adaptively filter it along its label map."""
    img = read_image(input)
    if mode == "square":
        filtered = box_filter(img, kernel, statistic)
    else:
        if labels is None:
            raise click.UsageError(f"--mode {mode} requires --labels")
        lab = read_labelmap(labels)
        filtered = adaptive_filter(img, lab, kernel, statistic, mode.removeprefix("adaptive-"))
    _write_image(filtered, out, raw)


@main.command("psnr")
@click.argument("reference", type=click.Path(path_type=Path))
@click.argument("test", type=click.Path(path_type=Path))
@cli_errors
def psnr_cmd(reference, test):
    """Print the PSNR (dB) between two images; 'inf' for identical images."""
    report = psnr(read_image(reference), read_image(test))
    click.echo(format_db(report.psnr_db))


@main.command("run")
@click.argument("inputs", nargs=-1, required=True, type=click.Path(path_type=Path))
@click.option("--out-dir", required=True, type=click.Path(path_type=Path))
@click.option(
    "--noise",
    "noise_kinds",
    multiple=True,
    type=click.Choice(["salt_pepper", "gaussian", "speckle"]),
    help="Noise kinds to run (default: all three).",
)
@click.option("--density", type=float, default=0.05, show_default=True)
@click.option("--sigma", type=float, default=25.5, show_default=True)
@click.option("--variance", type=float, default=0.04, show_default=True)
@click.option("--seed", type=int, default=42, show_default=True)
@click.option("--kernel", "kernels", multiple=True, type=int, callback=_odd_kernel, help="Kernel sizes (default: 5).")
@click.option(
    "--statistic",
    "statistics",
    multiple=True,
    type=click.Choice(["mean", "median"]),
    help="Statistics to run (default: both).",
)
@click.option("--masks", "mask_path", type=click.Path(path_type=Path), default=None)
@click.option("--criterion", type=click.Choice(list(CRITERIA)), default="recon-error", show_default=True)
@click.option("--adaptive-mode", type=click.Choice(["literal", "block"]), default="literal", show_default=True)
@click.option("--dump-intermediates", is_flag=True, help="Write scanned/noisy/filtered images and label maps.")
@click.option("--raw-intermediates", is_flag=True, help="Dump intermediates as lossless raw dumps.")
@cli_errors
def run_cmd(
    inputs,
    out_dir,
    noise_kinds,
    density,
    sigma,
    variance,
    seed,
    kernels,
    statistics,
    mask_path,
    criterion,
    adaptive_mode,
    dump_intermediates,
    raw_intermediates,
):
    """Run the full benchmark and write psnr.csv into the output directory."""
    expanded = []
    for p in inputs:
        if p.is_dir():
            expanded.extend(sorted(q for q in p.iterdir() if q.suffix in (".pgm", ".rawimg")))
        else:
            expanded.append(p)
    if not expanded:
        raise click.UsageError("no input images found")
    cfg = PipelineConfig(
        inputs=tuple(expanded),
        mask_path=mask_path,
        criterion=criterion,
        noise_kinds=noise_kinds or ("salt_pepper", "gaussian", "speckle"),
        density=density,
        sigma=sigma,
        variance=variance,
        seed=seed,
        kernels=kernels or (5,),
        statistics=statistics or ("mean", "median"),
        adaptive_mode=adaptive_mode,
        out_dir=out_dir,
        dump_intermediates=dump_intermediates,
        raw_intermediates=raw_intermediates,
    )
    rows = run_pipeline(cfg)
    click.echo(f"wrote {len(rows)} rows to {Path(out_dir) / 'psnr.csv'}")


if __name__ == "__main__":
    main()
