"""Time the full pipeline on a large synthetic case file."""
import argparse
import time

from legalsum.cluster import KMeansConfig
from legalsum.preprocess import RawInput
from legalsum.summarize import run_pipeline
from legalsum.synthetic import synthetic_case


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--sentences", type=int, default=10_000)
    parser.add_argument("--vocab", type=int, default=75_000, help="nominal generator vocabulary")
    parser.add_argument("--length", type=int, default=150)
    parser.add_argument("--seed", type=int, default=42)
    args = parser.parse_args()

    start = time.perf_counter()
    case = synthetic_case(args.sentences, seed=8, vocab_size=args.vocab)
    generated = time.perf_counter()
    result = run_pipeline(RawInput(case.text, case.title), KMeansConfig(seed=args.seed), args.length)
    done = time.perf_counter()

    print(f"sentences     {len(result.document)}")
    print(f"vocabulary    {len(result.model.vocabulary)}")
    print(f"k             {result.clustering.k} ({result.clustering.iterations} iterations)")
    print(f"summary       {len(result.summary.sentences)} sentences")
    print(f"generate      {generated - start:.2f}s")
    print(f"summarize     {done - generated:.2f}s")


if __name__ == "__main__":
    main()
