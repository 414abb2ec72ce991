from legalsum.preprocess import Document, Sentence

# (criterion, passed, detail) rows printed in the terminal summary
ACCEPTANCE_RESULTS: list[tuple[str, bool, str]] = []


def make_doc(token_lists, nouns=None, title_nouns=()):
    nouns = nouns or [()] * len(token_lists)
    return Document(
        title_nouns=frozenset(title_nouns),
        sentences=tuple(
            Sentence(i, f"Sentence {i}.", tuple(toks), frozenset(ns))
            for i, (toks, ns) in enumerate(zip(token_lists, nouns))
        ),
    )
