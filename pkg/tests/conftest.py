import pytest

from commentmap.fixtures import generate_planted_corpus
from commentmap.pipeline import PipelineConfig


def small_config(**overrides) -> PipelineConfig:
    """Fast pipeline settings for unit tests; acceptance uses full defaults."""
    base = dict(ensemble_size=2, topics_per_model=4, lda_iters=40, min_len=3)
    base.update(overrides)
    return PipelineConfig(**base)


@pytest.fixture(scope="session")
def planted_small():
    return generate_planted_corpus(n_topics=3, n_comments=120, n_songs=1, seed=7)


@pytest.fixture(scope="session")
def planted_600():
    return generate_planted_corpus(n_topics=3, n_comments=600, n_songs=1, seed=42)


@pytest.fixture(scope="session")
def planted_multisong():
    return generate_planted_corpus(n_topics=3, n_comments=300, n_songs=13, seed=21)
