from .lrc_dataclass import LrcDataclass
