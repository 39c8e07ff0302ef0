from ._qsl2 import *  # noqa: F401,F403
