"""Command line front end.

    legalsum summarize CASE.txt [--length 150] [--k K] [--seed 42] [--format text|json]
    legalsum evaluate CANDIDATE.txt REFERENCE.txt [--alpha 1.2] [--stem] [--format text|json|csv]
    legalsum compare REFERENCE.txt CANDIDATE.txt... [--format text|json|csv]

Exit status: 0 on success, 1 on unreadable or empty input, 2 on invalid flags.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass
from pathlib import Path

from legalsum.cluster import KMeansConfig, elbow_k
from legalsum.errors import EmptyDocumentError
from legalsum.preprocess import RawInput
from legalsum.rouge import DEFAULT_ALPHA, VARIANTS, RougeScore, evaluate_all
from legalsum.summarize import run_pipeline
from legalsum.wordlists import Lexicon


@dataclass(frozen=True)
class RunConfig:
    input_path: Path
    title: str | None = None
    target_sentences: int = 150
    k: int | None = None
    seed: int = 42
    alpha: float = DEFAULT_ALPHA
    output_format: str = "text"
    stem_eval: bool = False
    auto_k: str = "sqrt"
    elbow_max: int = 20


@dataclass(frozen=True)
class ComparisonReport:
    """Rows are the ROUGE variants in fixed order, columns one (P, R, F) per candidate."""

    candidates: tuple[str, ...]
    scores: tuple[dict[str, RougeScore], ...]

    def rows(self):
        for variant in VARIANTS:
            yield variant, [s[variant] for s in self.scores]

    def to_json(self) -> str:
        return json.dumps(
            {
                "candidates": list(self.candidates),
                "rows": [
                    {
                        "variant": variant,
                        "scores": [
                            {"precision": s.precision, "recall": s.recall, "f_measure": s.f_measure}
                            for s in cells
                        ],
                    }
                    for variant, cells in self.rows()
                ],
            },
            indent=2,
        )

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        header = ["variant"]
        for name in self.candidates:
            header += [f"{name} precision", f"{name} recall", f"{name} f_measure"]
        writer.writerow(header)
        for variant, cells in self.rows():
            writer.writerow([variant] + [f"{v:.2f}" for s in cells for v in s.as_percent()])
        return buf.getvalue()

    def to_text(self) -> str:
        cell = 10
        group = 3 * cell
        lines = [
            f"{'':<8}" + "".join(f"{name[:group - 2]:>{group}}" for name in self.candidates),
            f"{'':<8}" + "".join(f"{'P':>{cell}}{'R':>{cell}}{'F':>{cell}}" for _ in self.candidates),
        ]
        for variant, cells in self.rows():
            lines.append(f"{variant:<8}" + "".join(f"{v:>{cell}.2f}" for s in cells for v in s.as_percent()))
        return "\n".join(lines) + "\n"


def default_title(text: str) -> str:
    for line in text.splitlines():
        if line.strip():
            return line.strip()
    return ""


class InputError(Exception):
    pass


def _read(path: Path) -> str:
    try:
        return path.read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc


def _emit(text: str, output: Path | None) -> None:
    if output is None:
        sys.stdout.write(text)
    else:
        output.write_text(text, encoding="utf-8")


def cmd_summarize(config: RunConfig, lexicon: Lexicon | None = None, output: Path | None = None) -> int:
    text = _read(config.input_path)
    if not text.strip():
        raise InputError(f"{config.input_path} is empty")
    title = config.title if config.title is not None else default_title(text)

    k_selector = None
    if config.k is None and config.auto_k == "elbow":
        def k_selector(model, target):
            upper = min(config.elbow_max, target, model.n_sentences)
            return elbow_k(model, 1, upper, config.seed) if upper > 1 else 1

    result = run_pipeline(
        RawInput(text, title),
        KMeansConfig(k=config.k or 0, seed=config.seed),
        config.target_sentences,
        lexicon=lexicon,
        k_selector=k_selector,
    )
    summary = result.summary
    _emit(summary.to_json() + "\n" if config.output_format == "json" else summary.to_text(), output)
    return 0


def _report(reference: Path, candidates: list[Path], alpha: float, stem: bool) -> ComparisonReport:
    ref_text = _read(reference)
    scores = tuple(evaluate_all(_read(c), ref_text, alpha, stem) for c in candidates)
    return ComparisonReport(tuple(c.stem for c in candidates), scores)


def _render_single(report: ComparisonReport, fmt: str) -> str:
    if fmt == "json":
        scores = report.scores[0]
        return json.dumps(
            {v: {"precision": s.precision, "recall": s.recall, "f_measure": s.f_measure} for v, s in scores.items()},
            indent=2,
        ) + "\n"
    if fmt == "csv":
        return report.to_csv()
    lines = [f"{'':<8}{'Precision':>11}{'Recall':>11}{'F-measure':>11}"]
    for variant, (s,) in report.rows():
        p, r, f = s.as_percent()
        lines.append(f"{variant:<8}{p:>11.2f}{r:>11.2f}{f:>11.2f}")
    return "\n".join(lines) + "\n"


def cmd_evaluate(candidate: Path, reference: Path, alpha: float = DEFAULT_ALPHA, stem: bool = False,
                 fmt: str = "text", output: Path | None = None) -> int:
    report = _report(reference, [candidate], alpha, stem)
    _emit(_render_single(report, fmt), output)
    return 0


def cmd_compare(reference: Path, candidates: list[Path], alpha: float = DEFAULT_ALPHA, stem: bool = False,
                fmt: str = "text", output: Path | None = None) -> int:
    report = _report(reference, candidates, alpha, stem)
    rendered = {"json": lambda: report.to_json() + "\n", "csv": report.to_csv, "text": report.to_text}[fmt]()
    _emit(rendered, output)
    return 0


def _positive_int(value: str) -> int:
    n = int(value)
    if n < 1:
        raise argparse.ArgumentTypeError(f"expected an integer >= 1, got {value}")
    return n


def _alpha(value: str) -> float:
    a = float(value)
    if not a > 1:
        raise argparse.ArgumentTypeError(f"alpha must be > 1, got {value}")
    return a


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="legalsum", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    s = sub.add_parser("summarize", help="summarize a plain-text case file")
    s.add_argument("input", type=Path)
    s.add_argument("--title", help="case title (default: first non-empty line of the input)")
    s.add_argument("--length", type=_positive_int, default=150, help="summary length in sentences")
    s.add_argument("--k", type=_positive_int, help="number of clusters (default: automatic)")
    s.add_argument("--auto-k", choices=("sqrt", "elbow"), default="sqrt",
                   help="rule for the automatic cluster count")
    s.add_argument("--elbow-max", type=_positive_int, default=20, help="largest k tried by --auto-k elbow")
    s.add_argument("--seed", type=int, default=42)
    s.add_argument("--format", choices=("text", "json"), default="text")
    s.add_argument("--output", type=Path)
    s.add_argument("--stopwords", type=Path, help="replacement stopword list")
    s.add_argument("--non-nouns", type=Path, help="replacement tagger exclusion lexicon")

    for name, help_text in (("evaluate", "score one candidate against a reference"),
                            ("compare", "score several candidates against one reference")):
        p = sub.add_parser(name, help=help_text)
        if name == "evaluate":
            p.add_argument("candidate", type=Path)
            p.add_argument("reference", type=Path)
        else:
            p.add_argument("reference", type=Path)
            p.add_argument("candidates", type=Path, nargs="+")
        p.add_argument("--alpha", type=_alpha, default=DEFAULT_ALPHA, help="ROUGE-W weight exponent")
        p.add_argument("--stem", action="store_true", help="stem tokens before scoring")
        p.add_argument("--format", choices=("text", "json", "csv"), default="text")
        p.add_argument("--output", type=Path)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "summarize":
            lexicon = None
            if args.stopwords or args.non_nouns:
                lexicon = Lexicon.from_files(stopwords=args.stopwords, non_nouns=args.non_nouns)
            config = RunConfig(
                input_path=args.input, title=args.title, target_sentences=args.length, k=args.k,
                seed=args.seed, output_format=args.format, auto_k=args.auto_k, elbow_max=args.elbow_max,
            )
            return cmd_summarize(config, lexicon, args.output)
        if args.command == "evaluate":
            return cmd_evaluate(args.candidate, args.reference, args.alpha, args.stem, args.format, args.output)
        return cmd_compare(args.reference, args.candidates, args.alpha, args.stem, args.format, args.output)
    except (InputError, EmptyDocumentError, OSError) as exc:
        print(f"legalsum: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
