import logging

import dickson.lib.config as config
import dickson.lib.storage as storage

LOG = logging.getLogger(__name__)

index_data = None


def build_index(records):
    idx = {}
    for d in records:
        idx[(d["p"], d["n"], d["symbol"])] = d["poly"]
    return idx


def get(db_file=config.expansion_cache_file):
    """Get database instance

    :param db_file: Expansion store file
    """
    global index_data
    index_data = build_index(storage.stream_read(db_file))
    LOG.debug("Loaded {} stored expansions from {}".format(len(index_data), db_file))
    return {"db_file": db_file}


def store(db, records):
    """Store the records not yet present in the store

    :param db: db instance
    :param records: List of {"p", "n", "symbol", "poly"} dicts
    """
    global index_data
    if index_data is None:
        get(db["db_file"])
    fresh = [r for r in records if (r["p"], r["n"], r["symbol"]) not in index_data]
    if not fresh:
        return None
    docs = storage.store(fresh, db_file=db["db_file"])
    # Re-read the index
    index_data = build_index(storage.stream_read(db["db_file"]))
    return docs


def list_all(db):
    """Method to return all data

    :param db: db instance
    """
    return storage.stream_read(db["db_file"])


def index_count(db_file=config.expansion_cache_file):
    return len(build_index(storage.stream_read(db_file)))


def search(db, p, n):
    """All records for a given (p, n)

    :param db: db instance
    :param p: Prime
    :param n: Number of variables
    """
    return storage.stream_search(lambda d: d["p"] == p and d["n"] == n, db_file=db["db_file"])
