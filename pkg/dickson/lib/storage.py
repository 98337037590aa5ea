import os.path

import msgpack

import dickson.lib.config as config

read_size = 256


def store(records, db_file=config.expansion_cache_file):
    """Append a batch of records to the store

    :param records: List of dicts to store
    :param db_file: Store file to use
    """
    packed_obj = msgpack.packb(list(records), use_bin_type=True)
    with open(db_file, mode="ab") as fp:
        fp.write(packed_obj)
    return packed_obj


def stream_read(db_file=config.expansion_cache_file):
    """Read every record from the store, batch after batch
    """
    data_list = []
    if not os.path.isfile(db_file) or not os.path.getsize(db_file):
        return data_list
    with open(db_file, mode="rb") as fp:
        unpacker = msgpack.Unpacker(fp, read_size=read_size, use_list=1, raw=False)
        for unpacked in unpacker:
            if isinstance(unpacked, list):
                data_list += unpacked
            elif unpacked:
                data_list.append(unpacked)
    return data_list


def stream_search(key_func, db_file=config.expansion_cache_file):
    """Records for which key_func returns True
    """
    return [d for d in stream_read(db_file) if key_func(d)]
