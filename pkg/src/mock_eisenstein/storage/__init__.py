from mock_eisenstein.storage.bernoulli_cache_nosql import NoSQLBernoulliCache

__all__ = ["NoSQLBernoulliCache"]
