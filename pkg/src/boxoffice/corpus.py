"""Corpus data model: file ingestion, entity alignment, labeling, splitting.

A corpus directory holds four files (plus an optional labeled sentiment file):

    movies.csv    id,name,year,box_office_10k,cast   (cast is ';'-separated)
    accounts.csv  account_id,actor_name,fans,followers,post_count,
                  avg_post_interval_hours,avg_post_chars,retweet_count,
                  movie_mention_count
    edges.csv     src_account,dst_account             (undirected)
    posts.jsonl   {"text", "is_retweet", "movie_id", "author_account"}

Box office is in units of 10,000 CNY throughout.  The corpus is treated as
immutable once prepared; nothing in this package mutates it afterwards.
"""

from __future__ import annotations

import csv
import json
import math
from dataclasses import dataclass, replace
from enum import Enum
from pathlib import Path

import numpy as np

from .errors import DataError

MOVIES_FILE = "movies.csv"
ACCOUNTS_FILE = "accounts.csv"
EDGES_FILE = "edges.csv"
POSTS_FILE = "posts.jsonl"
SENTIMENT_TRAIN_FILE = "sentiment_train.csv"

MOVIES_HEADER = ["id", "name", "year", "box_office_10k", "cast"]
ACCOUNTS_HEADER = [
    "account_id", "actor_name", "fans", "followers", "post_count",
    "avg_post_interval_hours", "avg_post_chars", "retweet_count",
    "movie_mention_count",
]
EDGES_HEADER = ["src_account", "dst_account"]

# Default class boundary (10K CNY): the corpus median of the source data.
DEFAULT_LABEL_THRESHOLD = 263.5


class ClassLabel(Enum):
    """Binary box-office class: A = below threshold, B = at or above."""

    A = "A"
    B = "B"


@dataclass(frozen=True)
class Movie:
    id: int
    name: str
    release_year: int
    box_office: float
    cast: tuple[str, ...]  # billing order, duplicates removed keeping first slot


@dataclass(frozen=True)
class Account:
    account_id: str
    actor_name: str
    fans: int
    followers: int
    post_count: int
    avg_post_interval_hours: float
    avg_post_chars: float
    retweet_count: int
    movie_mention_count: int


@dataclass(frozen=True)
class Post:
    text: str
    is_retweet: bool = False
    movie_id: int | None = None
    author_account: str | None = None


@dataclass(frozen=True)
class ActorRecord:
    name: str
    account_id: str | None = None
    art_feature: float = 0.0  # mean box office over the actor's films
    has_social: bool = False


@dataclass
class Corpus:
    movies: list[Movie]
    accounts: list[Account]
    edges: list[tuple[str, str]]
    posts: list[Post]
    actors: dict[str, ActorRecord]  # the actor-name dictionary (all cast names)


@dataclass(frozen=True)
class DatasetSplit:
    train: tuple[int, ...]
    test: tuple[int, ...]
    seed: int


def _fail(path, line_num, message):
    raise DataError(f"{Path(path).name}:{line_num}: {message}")


def _parse_int(value, path, line_num, column, minimum=None):
    try:
        parsed = int(value)
    except ValueError:
        _fail(path, line_num, f"column '{column}': expected integer, got {value!r}")
    if minimum is not None and parsed < minimum:
        _fail(path, line_num, f"column '{column}': {parsed} is below {minimum}")
    return parsed


def _parse_float(value, path, line_num, column, minimum=None):
    try:
        parsed = float(value)
    except ValueError:
        _fail(path, line_num, f"column '{column}': expected number, got {value!r}")
    if not math.isfinite(parsed):
        _fail(path, line_num, f"column '{column}': non-finite value {value!r}")
    if minimum is not None and parsed < minimum:
        _fail(path, line_num, f"column '{column}': {parsed} is below {minimum}")
    return parsed


def _read_csv_rows(path, expected_header):
    try:
        handle = open(path, newline="", encoding="utf-8")
    except OSError as exc:
        raise DataError(f"cannot open {path}: {exc}") from exc
    with handle:
        reader = csv.reader(handle)
        try:
            header = next(reader)
        except StopIteration:
            _fail(path, 1, "empty file, expected a header row")
        if header != expected_header:
            _fail(path, 1, f"bad header {header!r}, expected {expected_header!r}")
        rows = []
        for row in reader:
            if not row:
                continue
            if len(row) != len(expected_header):
                _fail(path, reader.line_num,
                      f"expected {len(expected_header)} fields, got {len(row)}")
            rows.append((reader.line_num, row))
    return rows


def _read_movies(path):
    movies = []
    seen_ids = set()
    for line_num, row in _read_csv_rows(path, MOVIES_HEADER):
        movie_id = _parse_int(row[0], path, line_num, "id")
        if movie_id in seen_ids:
            _fail(path, line_num, f"duplicate movie id {movie_id}")
        seen_ids.add(movie_id)
        name = row[1].strip()
        if not name:
            _fail(path, line_num, "empty movie name")
        year = _parse_int(row[2], path, line_num, "year")
        box_office = _parse_float(row[3], path, line_num, "box_office_10k", minimum=0.0)
        cast = []
        for raw in row[4].split(";"):
            actor = raw.strip()
            if actor and actor not in cast:  # keep first billing slot
                cast.append(actor)
        if not cast:
            _fail(path, line_num, "empty cast list")
        movies.append(Movie(movie_id, name, year, box_office, tuple(cast)))
    return movies


def _read_accounts(path):
    accounts = []
    seen_ids = set()
    for line_num, row in _read_csv_rows(path, ACCOUNTS_HEADER):
        account_id = row[0].strip()
        if not account_id:
            _fail(path, line_num, "empty account_id")
        if account_id in seen_ids:
            _fail(path, line_num, f"duplicate account_id {account_id!r}")
        seen_ids.add(account_id)
        actor_name = row[1].strip()
        if not actor_name:
            _fail(path, line_num, "empty actor_name")
        accounts.append(Account(
            account_id=account_id,
            actor_name=actor_name,
            fans=_parse_int(row[2], path, line_num, "fans", minimum=0),
            followers=_parse_int(row[3], path, line_num, "followers", minimum=0),
            post_count=_parse_int(row[4], path, line_num, "post_count", minimum=0),
            avg_post_interval_hours=_parse_float(
                row[5], path, line_num, "avg_post_interval_hours", minimum=0.0),
            avg_post_chars=_parse_float(
                row[6], path, line_num, "avg_post_chars", minimum=0.0),
            retweet_count=_parse_int(row[7], path, line_num, "retweet_count", minimum=0),
            movie_mention_count=_parse_int(
                row[8], path, line_num, "movie_mention_count", minimum=0),
        ))
    return accounts


def _read_edges(path, known_accounts):
    edges = []
    for line_num, row in _read_csv_rows(path, EDGES_HEADER):
        src, dst = row[0].strip(), row[1].strip()
        for endpoint in (src, dst):
            if endpoint not in known_accounts:
                _fail(path, line_num, f"edge references unknown account {endpoint!r}")
        edges.append((src, dst))
    return edges


def _read_posts(path):
    posts = []
    try:
        handle = open(path, encoding="utf-8")
    except OSError as exc:
        raise DataError(f"cannot open {path}: {exc}") from exc
    with handle:
        for line_num, line in enumerate(handle, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                obj = json.loads(line)
            except json.JSONDecodeError as exc:
                _fail(path, line_num, f"bad JSON: {exc}")
            if not isinstance(obj, dict) or "text" not in obj:
                _fail(path, line_num, "post object must carry a 'text' key")
            text = str(obj["text"]).strip()
            if not text:
                _fail(path, line_num, "post text is empty after trimming")
            movie_id = obj.get("movie_id")
            if movie_id is not None and not isinstance(movie_id, int):
                _fail(path, line_num, f"movie_id must be an integer or null, got {movie_id!r}")
            author = obj.get("author_account")
            if author is not None:
                author = str(author)
            posts.append(Post(
                text=text,
                is_retweet=bool(obj.get("is_retweet", False)),
                movie_id=movie_id,
                author_account=author,
            ))
    return posts


def ingest_corpus(movies_path, accounts_path, edges_path, posts_path) -> Corpus:
    """Parse the four corpus files into an in-memory Corpus.

    Every cast name becomes an entry in the actor dictionary, initially
    unmatched (no account).  Malformed rows raise DataError naming the file
    and line.
    """
    movies = _read_movies(movies_path)
    accounts = _read_accounts(accounts_path)
    edges = _read_edges(edges_path, {a.account_id for a in accounts})
    posts = _read_posts(posts_path)
    actors: dict[str, ActorRecord] = {}
    for movie in movies:
        for name in movie.cast:
            if name not in actors:
                actors[name] = ActorRecord(name=name)
    return Corpus(movies=movies, accounts=accounts, edges=edges, posts=posts,
                  actors=actors)


def align_entities(corpus: Corpus) -> Corpus:
    """Match cast names to accounts by exact comparison of trimmed names.

    Names with no account stay unknown (has_social=False).  Two accounts
    claiming the same dictionary name is ambiguous and rejected.
    """
    accounts_by_name: dict[str, list[str]] = {}
    for account in corpus.accounts:
        accounts_by_name.setdefault(account.actor_name.strip(), []).append(
            account.account_id)
    actors: dict[str, ActorRecord] = {}
    for name, record in corpus.actors.items():
        candidates = accounts_by_name.get(name, [])
        if len(candidates) > 1:
            raise DataError(
                f"entity alignment: {len(candidates)} accounts claim actor name "
                f"{name!r}")
        if candidates:
            actors[name] = replace(record, account_id=candidates[0], has_social=True)
        else:
            actors[name] = replace(record, account_id=None, has_social=False)
    return replace(corpus, actors=actors)


def compute_art_features(corpus: Corpus) -> dict[str, float]:
    """Mean box office over each dictionary actor's films (0 if in none)."""
    totals: dict[str, float] = {name: 0.0 for name in corpus.actors}
    counts: dict[str, int] = {name: 0 for name in corpus.actors}
    for movie in corpus.movies:
        for name in movie.cast:
            if name in totals:
                totals[name] += movie.box_office
                counts[name] += 1
    return {name: (totals[name] / counts[name] if counts[name] else 0.0)
            for name in corpus.actors}


def attach_art_features(corpus: Corpus) -> Corpus:
    art = compute_art_features(corpus)
    actors = {name: replace(record, art_feature=art[name])
              for name, record in corpus.actors.items()}
    return replace(corpus, actors=actors)


def prepare_corpus(corpus: Corpus) -> Corpus:
    """Alignment plus art features; the standard post-ingestion step."""
    return attach_art_features(align_entities(corpus))


def load_corpus_dir(directory) -> Corpus:
    """Ingest and prepare a corpus from its standard directory layout."""
    directory = Path(directory)
    corpus = ingest_corpus(
        directory / MOVIES_FILE,
        directory / ACCOUNTS_FILE,
        directory / EDGES_FILE,
        directory / POSTS_FILE,
    )
    return prepare_corpus(corpus)


def label_movies(corpus: Corpus, threshold: float = DEFAULT_LABEL_THRESHOLD
                 ) -> dict[int, ClassLabel]:
    """Class A strictly below the threshold, B at or above (ties to B)."""
    if threshold <= 0:
        raise ValueError(f"threshold must be positive, got {threshold}")
    return {movie.id: (ClassLabel.A if movie.box_office < threshold else ClassLabel.B)
            for movie in corpus.movies}


def median_box_office(corpus: Corpus) -> float:
    if not corpus.movies:
        raise DataError("cannot take the median of an empty corpus")
    return float(np.median([movie.box_office for movie in corpus.movies]))


def split_dataset(movie_ids, ratio: float, seed: int) -> DatasetSplit:
    """Deterministic train/test partition; train size is floor(ratio * N).

    The floor (clamped so neither side is empty) reproduces an 80/20 split of
    1296 ids as 1036/260.
    """
    ids = list(movie_ids)
    if len(ids) < 2:
        raise DataError(f"need at least 2 movies to split, got {len(ids)}")
    if not 0.0 < ratio < 1.0:
        raise ValueError(f"split ratio must be in (0, 1), got {ratio}")
    if len(set(ids)) != len(ids):
        raise DataError("movie ids to split are not unique")
    n_train = min(max(math.floor(ratio * len(ids)), 1), len(ids) - 1)
    rng = np.random.default_rng(seed)
    order = rng.permutation(len(ids))
    train = tuple(ids[i] for i in order[:n_train])
    test = tuple(ids[i] for i in order[n_train:])
    return DatasetSplit(train=train, test=test, seed=seed)


def _format_number(value) -> str:
    if isinstance(value, int):
        return str(value)
    return repr(float(value))  # shortest round-trip decimal


def write_corpus(corpus: Corpus, directory) -> None:
    """Emit the four corpus files; re-ingesting them reproduces the corpus."""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    with open(directory / MOVIES_FILE, "w", newline="", encoding="utf-8") as handle:
        writer = csv.writer(handle)
        writer.writerow(MOVIES_HEADER)
        for movie in corpus.movies:
            writer.writerow([movie.id, movie.name, movie.release_year,
                             _format_number(movie.box_office), ";".join(movie.cast)])
    with open(directory / ACCOUNTS_FILE, "w", newline="", encoding="utf-8") as handle:
        writer = csv.writer(handle)
        writer.writerow(ACCOUNTS_HEADER)
        for account in corpus.accounts:
            writer.writerow([
                account.account_id, account.actor_name, account.fans,
                account.followers, account.post_count,
                _format_number(account.avg_post_interval_hours),
                _format_number(account.avg_post_chars),
                account.retweet_count, account.movie_mention_count,
            ])
    with open(directory / EDGES_FILE, "w", newline="", encoding="utf-8") as handle:
        writer = csv.writer(handle)
        writer.writerow(EDGES_HEADER)
        writer.writerows(corpus.edges)
    with open(directory / POSTS_FILE, "w", encoding="utf-8") as handle:
        for post in corpus.posts:
            obj = {
                "text": post.text,
                "is_retweet": post.is_retweet,
                "movie_id": post.movie_id,
                "author_account": post.author_account,
            }
            handle.write(json.dumps(obj, ensure_ascii=False) + "\n")
