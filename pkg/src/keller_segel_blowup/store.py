# Copyright (c) keller_segel_blowup contributors
# All rights reserved.
#
# This source code is licensed under the license found in the
# MIT_LICENSE file in the root directory of this source tree.

from pathlib import Path
from typing import List, Union


def cards_dir() -> Path:
    return Path(__file__).parent.joinpath("cards")


def list_cards() -> List[str]:
    return sorted(p.stem for p in cards_dir().glob("*.yaml"))


def resolve_card(name_or_path: Union[str, Path]) -> Path:
    """Resolve ``name_or_path`` to a config file.

    Existing paths are returned as they are; otherwise the name is looked up
    among the packaged cards (``blowup``, ``bounded``).
    """
    path = Path(name_or_path)
    if path.exists():
        return path

    card = cards_dir().joinpath(f"{path.stem}.yaml")
    if card.exists():
        return card

    raise FileNotFoundError(
        f"`config` must be a file or one of {list_cards()}, but is '{name_or_path}' instead."
    )
