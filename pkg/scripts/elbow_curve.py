"""Print the inertia-versus-k curve for a case file and the knee the elbow rule picks."""
import argparse
from pathlib import Path

from legalsum.cluster import KMeansConfig, kmeans, knee, select_k
from legalsum.preprocess import RawInput, preprocess_document
from legalsum.synthetic import synthetic_case
from legalsum.vectorize import build_model


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("input", nargs="?", type=Path, help="UTF-8 case file (synthetic case when omitted)")
    parser.add_argument("--k-max", type=int, default=20)
    parser.add_argument("--length", type=int, default=150)
    parser.add_argument("--seed", type=int, default=42)
    args = parser.parse_args()

    if args.input:
        text = args.input.read_text(encoding="utf-8")
        title = next((line.strip() for line in text.splitlines() if line.strip()), "")
    else:
        case = synthetic_case(400, seed=3)
        text, title = case.text, case.title
    model = build_model(preprocess_document(RawInput(text, title)))
    ks = list(range(1, min(args.k_max, model.n_sentences) + 1))
    inertias = [kmeans(model, KMeansConfig(k=k, seed=args.seed)).inertia for k in ks]
    for k, value in zip(ks, inertias):
        print(f"{k:>3} {value:12.4f}")
    if len(ks) >= 2:
        print(f"knee at k={knee(ks, inertias)}")
    print(f"sqrt rule gives k={select_k(model.n_sentences, args.length)}")


if __name__ == "__main__":
    main()
