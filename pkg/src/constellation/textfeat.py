"""Character n-gram TF-IDF features and cosine similarity over model names."""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass

import numpy as np
from scipy import sparse

N_MIN_DEFAULT = 2
N_MAX_DEFAULT = 8


def extract_ngrams(name: str, n_min: int = N_MIN_DEFAULT, n_max: int = N_MAX_DEFAULT) -> Counter:
    """Multiset of lowercased contiguous substrings of length n_min..n_max.

    N-grams cross word boundaries and include punctuation; a name shorter
    than n_min yields an empty multiset.
    """
    if not (1 <= n_min <= n_max):
        raise ValueError(f"need 1 <= n_min <= n_max, got ({n_min}, {n_max})")
    s = name.lower()
    counts: Counter = Counter()
    for n in range(n_min, min(n_max, len(s)) + 1):
        for i in range(len(s) - n + 1):
            counts[s[i : i + n]] += 1
    return counts


@dataclass(frozen=True)
class NgramVocabulary:
    """Ordered n-gram terms with their column ids."""

    terms: tuple[str, ...]
    index: dict[str, int]
    n_min: int = N_MIN_DEFAULT
    n_max: int = N_MAX_DEFAULT

    def __len__(self) -> int:
        return len(self.terms)


def build_vocabulary(
    names: list[str], n_min: int = N_MIN_DEFAULT, n_max: int = N_MAX_DEFAULT
) -> NgramVocabulary:
    """Union of all n-grams across names, in byte order of the lowercased form."""
    seen: set[str] = set()
    for name in names:
        seen.update(extract_ngrams(name, n_min, n_max))
    terms = tuple(sorted(seen, key=lambda t: t.encode("utf-8")))
    return NgramVocabulary(terms=terms, index={t: i for i, t in enumerate(terms)}, n_min=n_min, n_max=n_max)


@dataclass(frozen=True)
class TfidfMatrix:
    """Sparse document x n-gram weight matrix, rows L2-normalized.

    tf is the raw in-document count, idf = ln((1+N)/(1+df)) + 1, and each
    non-empty row is scaled to unit L2 norm. Documents producing no
    n-gram keep an all-zero row.
    """

    matrix: sparse.csr_matrix
    vocabulary: NgramVocabulary

    @property
    def rows(self) -> int:
        return self.matrix.shape[0]

    @property
    def cols(self) -> int:
        return self.matrix.shape[1]


def tfidf(names: list[str], n_min: int = N_MIN_DEFAULT, n_max: int = N_MAX_DEFAULT) -> TfidfMatrix:
    """TF-IDF matrix of the names under the fixed smoothing convention."""
    if not names:
        raise ValueError("need at least one name")
    docs = [extract_ngrams(name, n_min, n_max) for name in names]
    vocab = build_vocabulary(names, n_min, n_max)
    n_docs = len(docs)
    df = Counter()
    for doc in docs:
        df.update(doc.keys())
    idf = np.empty(len(vocab), dtype=np.float64)
    for term, col in vocab.index.items():
        idf[col] = math.log((1 + n_docs) / (1 + df[term])) + 1.0

    indptr = [0]
    indices: list[int] = []
    data: list[float] = []
    for doc in docs:
        cols = sorted(vocab.index[t] for t in doc)
        row = [doc[vocab.terms[c]] * idf[c] for c in cols]
        norm = math.sqrt(sum(w * w for w in row))
        if norm > 0.0:
            row = [w / norm for w in row]
        indices.extend(cols)
        data.extend(row)
        indptr.append(len(indices))
    matrix = sparse.csr_matrix(
        (np.asarray(data, dtype=np.float64), np.asarray(indices, dtype=np.int32), np.asarray(indptr, dtype=np.int32)),
        shape=(n_docs, len(vocab)),
    )
    return TfidfMatrix(matrix=matrix, vocabulary=vocab)


def cosine_similarity(m: TfidfMatrix) -> np.ndarray:
    """Dense pairwise cosine similarity in [0, 1].

    Rows are already unit-norm, so similarity is the sparse dot product.
    Zero rows get similarity 0 everywhere, including their diagonal.
    """
    x = m.matrix
    sim = np.asarray((x @ x.T).todense(), dtype=np.float64)
    sim = 0.5 * (sim + sim.T)
    np.clip(sim, 0.0, 1.0, out=sim)
    nonzero = np.asarray(x.getnnz(axis=1) > 0)
    np.fill_diagonal(sim, np.where(nonzero, 1.0, 0.0))
    return sim


def cosine_distance(sim: np.ndarray) -> np.ndarray:
    """1 - similarity, clamped to [0, 1]; zero diagonal for non-zero rows.

    Documents with a zero feature row keep self-distance 1 (their
    similarity is 0 even to themselves).
    """
    dist = np.clip(1.0 - sim, 0.0, 1.0)
    diag = np.diagonal(sim)
    np.fill_diagonal(dist, np.where(diag > 0.0, 0.0, 1.0))
    return dist


def dump_triples(m: TfidfMatrix) -> str:
    """Debug dump: one ``doc,term,weight`` line per stored entry."""
    coo = m.matrix.tocoo()
    lines = []
    for doc, col, weight in zip(coo.row, coo.col, coo.data):
        lines.append(f"{doc},{m.vocabulary.terms[col]},{float(weight)!r}")
    return "\n".join(lines) + ("\n" if lines else "")
