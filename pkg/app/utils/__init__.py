from app.utils.int_codec import IntCodec

__all__ = ["IntCodec"]
