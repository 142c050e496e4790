# -*- coding: utf-8 -*-
"""Utilities to load the verification protocols."""
from __future__ import annotations

import pathlib
from typing import Optional, Union

import yaml

from cyclotomic_sequences.utils.general import recursive_merge


class ProtocolMixin:
    """Utility class for classes whose inputs are defined by a protocol file."""

    @classmethod
    def get_protocol_filepath(cls) -> pathlib.Path:
        """Return the ``pathlib.Path`` to the ``.yaml`` file that defines the protocols."""
        raise NotImplementedError

    @classmethod
    def get_default_protocol(cls) -> str:
        """Return the default protocol for a given class."""
        return cls._load_protocol_file()['default_protocol']

    @classmethod
    def get_available_protocols(cls) -> dict:
        """Return the available protocols for a given class, mapped to their description."""
        data = cls._load_protocol_file()
        return {key: {'description': value['description']} for key, value in data['protocols'].items()}

    @classmethod
    def get_protocol_inputs(
        cls,
        protocol: Optional[str] = None,
        overrides: Union[dict, pathlib.Path, None] = None,
    ) -> dict:
        """Return the inputs for the given protocol, with the overrides merged on top.

        :param protocol: the name of the protocol, the default protocol if not specified.
        :param overrides: dictionary, or path to a ``.yaml`` file, with inputs that take precedence.
        :raises ValueError: if ``protocol`` is not defined in the protocol file.
        """
        data = cls._load_protocol_file()
        protocol = protocol or data['default_protocol']

        try:
            protocol_inputs = data['protocols'][protocol]
        except KeyError as exception:
            raise ValueError(
                f'`{protocol}` is not a valid protocol. Call ``get_available_protocols`` to show available protocols.'
            ) from exception

        inputs = recursive_merge(data['default_inputs'], protocol_inputs)
        inputs.pop('description')

        if isinstance(overrides, pathlib.Path):
            with overrides.open() as file:
                overrides = yaml.safe_load(file)

        if overrides:
            return recursive_merge(inputs, overrides)

        return inputs

    @classmethod
    def _load_protocol_file(cls) -> dict:
        """Return the contents of the protocol file."""
        with cls.get_protocol_filepath().open() as file:
            return yaml.safe_load(file)
