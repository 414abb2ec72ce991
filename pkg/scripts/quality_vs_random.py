"""ROUGE-1 recall of the pipeline against a random equal-length extract on synthetic cases."""
import argparse

import numpy as np

from legalsum.cluster import KMeansConfig
from legalsum.preprocess import RawInput
from legalsum.rouge import eval_tokens, rouge_n
from legalsum.summarize import run_pipeline
from legalsum.synthetic import synthetic_case


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--documents", type=int, default=20)
    parser.add_argument("--sentences", type=int, default=200)
    parser.add_argument("--length", type=int, default=10)
    args = parser.parse_args()

    wins = 0
    print(f"{'doc':>4} {'k':>3} {'pipeline':>9} {'random':>8}")
    for seed in range(args.documents):
        case = synthetic_case(args.sentences, seed=7000 + seed)
        result = run_pipeline(RawInput(case.text, case.title), KMeansConfig(seed=seed), args.length)
        raws = [s.raw for s in result.document.sentences]
        picked = np.sort(np.random.default_rng(seed).choice(len(raws), size=len(result.summary.sentences),
                                                            replace=False))
        ref = eval_tokens(case.reference)
        ours = rouge_n(eval_tokens(result.summary.text), ref, 1).recall
        rand = rouge_n(eval_tokens(" ".join(raws[p] for p in picked)), ref, 1).recall
        wins += ours > rand
        print(f"{seed:>4} {result.clustering.k:>3} {ours:>9.3f} {rand:>8.3f}")
    print(f"pipeline ahead on {wins}/{args.documents}")


if __name__ == "__main__":
    main()
