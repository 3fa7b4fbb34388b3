# SPDX-License-Identifier: MIT
# Copyright (c) 2026 vcyc Authors

"""
Turns a workflow's options dataclass into click options and back.

Only the field shapes vcyc options use are supported: `int`, `float` and
`str`, optionally `| None`, with `Annotated` metadata

    max_concurrent: Annotated[int, {"help": "..."}] = 4
    format: Annotated[str, {"help": "...", "choices": ["json", "md"]}] = "json"

Anything else is a programming error in the workflow and raises `TypeError`
when the command is built.
"""

import dataclasses
from types import NoneType, UnionType
from typing import Annotated, Any, Union, get_args, get_origin, get_type_hints

import click

_SCALARS: dict[type, click.ParamType] = {int: click.INT, float: click.FLOAT, str: click.STRING}


@dataclasses.dataclass(frozen=True)
class FieldSpec:
    """What an options field says about its command-line option."""

    name: str
    base_type: type
    optional: bool
    help: str | None
    choices: list[str] | None

    @property
    def flag(self) -> str:
        return f"--{self.name.replace('_', '-')}"


def describe_field(field: dataclasses.Field, hint: Any) -> FieldSpec:
    metadata: dict[str, Any] = {}
    if get_origin(hint) is Annotated:
        hint, *extras = get_args(hint)
        for extra in extras:
            if isinstance(extra, dict):
                metadata.update(extra)

    optional = False
    if get_origin(hint) in (Union, UnionType):
        members = [arg for arg in get_args(hint) if arg is not NoneType]
        optional = len(members) < len(get_args(hint))
        hint = members[0] if len(members) == 1 else hint

    if hint not in _SCALARS:
        raise TypeError(f"Option {field.name!r} has unsupported type {hint!r}")
    return FieldSpec(field.name, hint, optional, metadata.get("help"), metadata.get("choices"))


class TyperOptionsAdapter:
    """Converts between options dataclasses and the click parameters of a Typer command."""

    def options_to_click_params(self, options_class: type) -> list[click.Option]:
        if not dataclasses.is_dataclass(options_class):
            return []

        hints = get_type_hints(options_class, include_extras=True)
        params = []
        for field in dataclasses.fields(options_class):
            spec = describe_field(field, hints[field.name])
            has_default = field.default is not dataclasses.MISSING
            default = field.default if has_default else None
            param_type = click.Choice(spec.choices, case_sensitive=False) if spec.choices else _SCALARS[spec.base_type]
            params.append(
                click.Option(
                    [spec.flag],
                    type=param_type,
                    default=default,
                    required=not has_default and not spec.optional,
                    show_default=default is not None,
                    help=spec.help or field.name.replace("_", " ").capitalize(),
                )
            )
        return params

    def extract_options(self, options_class: type, **kwargs: Any) -> Any:
        """Instantiate the options dataclass from parsed arguments, ignoring global ones."""
        names = {f.name for f in dataclasses.fields(options_class)}
        return options_class(**{k: v for k, v in kwargs.items() if k in names})
