import pytest

from qsrlab.harness import RunConfig, load_corpus_dataset


@pytest.fixture(scope='session')
def config():
    return RunConfig(seed=0)


@pytest.fixture(scope='session')
def m11(config):
    return load_corpus_dataset('m11', config)


@pytest.fixture(scope='session')
def m12(config):
    return load_corpus_dataset('m12', config)


@pytest.fixture(scope='session')
def m22(config):
    return load_corpus_dataset('m22', config)


@pytest.fixture(scope='session')
def m23(config):
    return load_corpus_dataset('m23', config)
