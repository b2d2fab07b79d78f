"""Synthetic corpus generator for desk-scale runs.

The generator plants a controllable association between class labels and the
observable features.  A "star" subset of the account-holding actors is densely
interconnected and carries large account measurements; at signal strength 1,
high-grossing movies cast mostly stars and their posts skew positive, so graph,
measurement, and sentiment features all separate the classes.  At signal 0,
casting and post polarity ignore the class entirely.

Same (config, seed) writes byte-identical files.
"""

from __future__ import annotations

import csv
import json
from dataclasses import dataclass, fields
from pathlib import Path

import numpy as np

from .corpus import (ACCOUNTS_HEADER, EDGES_HEADER, MOVIES_HEADER,
                     ACCOUNTS_FILE, EDGES_FILE, MOVIES_FILE, POSTS_FILE,
                     SENTIMENT_TRAIN_FILE, Corpus, load_corpus_dir)
from .errors import DataError

FAMILY_CHARS = "王李张刘陈杨赵黄周吴徐孙马朱胡郭何高林罗"
GIVEN_CHARS = "伟芳娜敏静丽强磊军洋勇艳杰涛明超秀兰霞平"

POSITIVE_WORDS = ["精彩", "好看", "感人", "震撼", "推荐", "喜欢", "优秀", "完美"]
NEGATIVE_WORDS = ["无聊", "失望", "难看", "糟糕", "差劲", "拖沓", "尴尬", "平庸"]
NEUTRAL_WORDS = ["剧情", "演员", "导演", "上映", "今天", "观看", "影院", "票房"]

# Box-office ranges (10K CNY) straddling the default 263.5 class boundary.
LOW_GROSS_RANGE = (1.0, 200.0)
HIGH_GROSS_RANGE = (400.0, 5000.0)


@dataclass(frozen=True)
class SynthConfig:
    n_movies: int = 200
    n_actors: int = 120
    n_accounts: int = 80
    edge_density: float = 0.05
    posts_per_movie: int = 12
    signal: float = 1.0

    def validate(self):
        if self.n_accounts > self.n_actors:
            raise DataError(
                f"n_accounts ({self.n_accounts}) cannot exceed n_actors "
                f"({self.n_actors})")
        if min(self.n_movies, self.n_actors, self.n_accounts) < 1:
            raise DataError("n_movies, n_actors, n_accounts must be >= 1")
        if self.posts_per_movie < 0:
            raise DataError("posts_per_movie must be >= 0")
        if not 0.0 <= self.edge_density <= 1.0:
            raise DataError(f"edge_density must be in [0, 1], got {self.edge_density}")
        if not 0.0 <= self.signal <= 1.0:
            raise DataError(f"signal must be in [0, 1], got {self.signal}")


SYNTH_CONFIG_FIELDS = [f.name for f in fields(SynthConfig)]


def _actor_names(n, rng):
    pool = [f + g1 + g2
            for f in FAMILY_CHARS for g1 in GIVEN_CHARS for g2 in GIVEN_CHARS]
    if n > len(pool):
        raise DataError(f"cannot generate {n} unique actor names (max {len(pool)})")
    picks = rng.choice(len(pool), size=n, replace=False)
    return [pool[int(i)] for i in picks]


def _round1(x):
    return round(float(x), 1)


def _account_row(account_id, name, is_star, rng):
    if is_star:
        stats = [int(rng.integers(20000, 80000)),   # fans
                 int(rng.integers(500, 2000)),      # followers
                 int(rng.integers(1000, 5000)),     # post_count
                 _round1(rng.uniform(1.0, 12.0)),   # avg_post_interval_hours
                 _round1(rng.uniform(60.0, 140.0)),  # avg_post_chars
                 int(rng.integers(5000, 20000)),    # retweet_count
                 int(rng.integers(50, 300))]        # movie_mention_count
    else:
        stats = [int(rng.integers(100, 2000)),
                 int(rng.integers(10, 500)),
                 int(rng.integers(20, 500)),
                 _round1(rng.uniform(6.0, 48.0)),
                 _round1(rng.uniform(10.0, 80.0)),
                 int(rng.integers(0, 300)),
                 int(rng.integers(0, 30))]
    return [account_id, name] + stats


def _post_text(polarity_words, cast, movie_name, include_name, rng):
    words = [polarity_words[int(i)]
             for i in rng.integers(0, len(polarity_words), size=int(rng.integers(3, 6)))]
    words += [NEUTRAL_WORDS[int(i)]
              for i in rng.integers(0, len(NEUTRAL_WORDS), size=int(rng.integers(1, 3)))]
    if len(cast) >= 2 and rng.random() < 0.4:
        pair = rng.choice(len(cast), size=2, replace=False)
        words += [cast[int(pair[0])], cast[int(pair[1])]]
    if include_name:
        words.insert(0, movie_name)
    return " ".join(words)


def generate_synthetic(config: SynthConfig, seed: int, out_dir) -> Corpus:
    """Write a synthetic corpus (plus labeled sentiment file) and load it back."""
    config.validate()
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    rng = np.random.default_rng(seed)

    names = _actor_names(config.n_actors, rng)
    holders = names[:config.n_accounts]
    n_stars = max(2, config.n_accounts // 4) if config.n_accounts >= 2 else 1
    n_stars = min(n_stars, config.n_accounts)
    stars = holders[:n_stars]
    non_stars = names[n_stars:]
    account_ids = [f"acc{i:05d}" for i in range(config.n_accounts)]

    account_rows = [
        _account_row(account_ids[i], holders[i], i < n_stars, rng)
        for i in range(config.n_accounts)
    ]

    edge_rows = []
    for i in range(config.n_accounts):
        for j in range(i + 1, config.n_accounts):
            p = 0.5 if (i < n_stars and j < n_stars) else config.edge_density
            if rng.random() < p:
                edge_rows.append([account_ids[i], account_ids[j]])

    # Balanced classes, randomly assigned to movie ids.
    n_high = config.n_movies // 2
    is_high = np.zeros(config.n_movies, dtype=bool)
    is_high[rng.choice(config.n_movies, size=n_high, replace=False)] = True

    movie_rows = []
    movie_casts = []
    movie_names = []
    for m in range(config.n_movies):
        name = f"电影{m + 1:04d}"
        year = int(rng.integers(2011, 2016))
        lo, hi = HIGH_GROSS_RANGE if is_high[m] else LOW_GROSS_RANGE
        box_office = _round1(rng.uniform(lo, hi))
        cast_size = int(rng.integers(3, 9))
        direction = 1.0 if is_high[m] else -1.0
        p_star = float(np.clip(0.5 + 0.45 * config.signal * direction, 0.0, 1.0))
        k_star = min(int(rng.binomial(cast_size, p_star)), len(stars))
        k_other = min(cast_size - k_star, len(non_stars))
        cast = []
        if k_star:
            cast += [stars[int(i)]
                     for i in rng.choice(len(stars), size=k_star, replace=False)]
        if k_other:
            cast += [non_stars[int(i)]
                     for i in rng.choice(len(non_stars), size=k_other, replace=False)]
        if not cast:
            cast = [names[int(rng.integers(0, len(names)))]]
        movie_rows.append([m + 1, name, year, box_office, ";".join(cast)])
        movie_casts.append(cast)
        movie_names.append(name)

    post_objs = []
    for m in range(config.n_movies):
        direction = 1.0 if is_high[m] else -1.0
        p_pos = float(np.clip(0.5 + 0.3 * config.signal * direction, 0.0, 1.0))
        for _ in range(config.posts_per_movie):
            positive = rng.random() < p_pos
            words = POSITIVE_WORDS if positive else NEGATIVE_WORDS
            tagged = rng.random() < 0.9  # else rely on the movie-name fallback
            text = _post_text(words, movie_casts[m], movie_names[m],
                              include_name=not tagged, rng=rng)
            author = (account_ids[int(rng.integers(0, len(account_ids)))]
                      if rng.random() < 0.7 else None)
            post_objs.append({
                "text": text,
                "is_retweet": bool(rng.random() < 0.3),
                "movie_id": m + 1 if tagged else None,
                "author_account": author,
            })

    sentiment_rows = []
    for i in range(400):
        positive = i % 2 == 0
        words = POSITIVE_WORDS if positive else NEGATIVE_WORDS
        text = _post_text(words, [], "", include_name=False, rng=rng)
        sentiment_rows.append([text, "pos" if positive else "neg"])

    with open(out_dir / MOVIES_FILE, "w", newline="", encoding="utf-8") as handle:
        writer = csv.writer(handle)
        writer.writerow(MOVIES_HEADER)
        writer.writerows(movie_rows)
    with open(out_dir / ACCOUNTS_FILE, "w", newline="", encoding="utf-8") as handle:
        writer = csv.writer(handle)
        writer.writerow(ACCOUNTS_HEADER)
        writer.writerows(account_rows)
    with open(out_dir / EDGES_FILE, "w", newline="", encoding="utf-8") as handle:
        writer = csv.writer(handle)
        writer.writerow(EDGES_HEADER)
        writer.writerows(edge_rows)
    with open(out_dir / POSTS_FILE, "w", encoding="utf-8") as handle:
        for obj in post_objs:
            handle.write(json.dumps(obj, ensure_ascii=False) + "\n")
    with open(out_dir / SENTIMENT_TRAIN_FILE, "w", newline="",
              encoding="utf-8") as handle:
        writer = csv.writer(handle)
        writer.writerow(["text", "label"])
        writer.writerows(sentiment_rows)

    return load_corpus_dir(out_dir)
