from . import json_io
