#!/usr/bin/env python3
"""Regenerate the bundled snapshot fixture (src/constellation/data/fixture_models.csv).

Deterministic given the seed; the committed CSV is the artifact of record,
this script only documents how it was produced.
"""

import sys
from pathlib import Path

import numpy as np

from constellation.corpus import Corpus, ModelRecord, assign_ranks, derive_readme_link, extract_params, write_csv

FAMILIES = [
    "gpt2", "llama", "llama2", "alpaca", "vicuna", "falcon", "bloom", "bloomz",
    "pythia", "opt", "mpt", "wizardlm", "dolly", "redpajama", "codegen", "starcoder",
    "guanaco", "gpt-j", "gpt-neo", "gpt-neox", "distilgpt2", "dialogpt", "santacoder",
    "openllama", "stablelm", "cerebras-gpt", "galactica", "phoenix", "koala", "baize",
]

SIZES = ["70m", "125m", "160m", "350m", "560m", "1b", "1.3b", "2.7b", "3b", "6b", "7b", "13b", "30b", "33b", "40b", "65b"]

SUFFIXES = [
    "instruct", "chat", "hf", "lora", "ggml", "gptq", "4bit", "8bit", "finetuned",
    "v1.0", "v1.1", "v2", "uncensored", "merged", "sft", "open", "base", "small",
    "medium", "large", "xl", "deduped", "sharded", "fp16",
]

ORGS = [
    "acme-ai", "openlab", "deepforge", "modelworks", "nlp-guild", "tensor-cove",
    "brightml", "quietriver", "sunhouse", "graphloom", "corelab", "stackforge",
]


def make_name(rs: np.random.RandomState) -> str:
    parts = [FAMILIES[rs.randint(len(FAMILIES))]]
    if rs.random_sample() < 0.55:
        parts.append(SIZES[rs.randint(len(SIZES))])
    for _ in range(rs.randint(0, 3)):
        suffix = SUFFIXES[rs.randint(len(SUFFIXES))]
        if suffix not in parts:
            parts.append(suffix)
    return "-".join(parts)


def main(out_path: Path, count: int = 200, seed: int = 7) -> int:
    rs = np.random.RandomState(seed)
    links = set()
    records = []
    duplicate_names: list[str] = []
    while len(records) < count:
        name = make_name(rs)
        # a few deliberate name collisions across orgs (links stay unique)
        if duplicate_names and rs.random_sample() < 0.02:
            name = duplicate_names[rs.randint(len(duplicate_names))]
        org = ORGS[rs.randint(len(ORGS))]
        link = f"https://huggingface.co/{org}/{name}"
        if link in links:
            continue
        links.add(link)
        if len(duplicate_names) < 5:
            duplicate_names.append(name)

        roll = rs.random_sample()
        if roll < 0.04:
            downloads = None
        else:
            downloads = int(10 ** rs.uniform(2.5, 7.2))
        likes_roll = rs.random_sample()
        if roll >= 0.04 and likes_roll < 0.05:
            likes = None
        elif likes_roll < 0.10:
            likes = 0
        elif downloads is None:
            likes = int(10 ** rs.uniform(0, 2))
        else:
            likes = max(0, int(downloads ** 0.45 * rs.uniform(0.05, 1.5)))
        records.append(
            ModelRecord(
                rank=len(records) + 1,
                model_name=name,
                link=link,
                downloads=downloads,
                likes=likes,
                readme_link=derive_readme_link(link),
                params_millions=extract_params(name),
            )
        )
    corpus = assign_ranks(Corpus(records=tuple(records), snapshot_label="fixture"))
    out_path.parent.mkdir(parents=True, exist_ok=True)
    out_path.write_bytes(write_csv(corpus))
    above = sum(1 for r in corpus.records if r.downloads is not None and r.downloads >= 10000)
    missing_downloads = sum(1 for r in corpus.records if r.downloads is None)
    zero_likes = sum(1 for r in corpus.records if r.likes == 0)
    with_params = sum(1 for r in corpus.records if r.params_millions is not None)
    print(
        f"{len(corpus)} records -> {out_path} "
        f"(>=10000 downloads: {above}, absent downloads: {missing_downloads}, "
        f"zero likes: {zero_likes}, params inferred: {with_params})"
    )
    return 0


if __name__ == "__main__":
    target = Path(__file__).resolve().parents[1] / "src" / "constellation" / "data" / "fixture_models.csv"
    sys.exit(main(target))
