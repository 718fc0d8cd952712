"""
Run configuration: the YAML file every subcommand reads.

Example::

    schema: 1
    channel:
      id: geometric-reference
      profile:
        head: [1.0]
        tail: {kind: geometric, ratio: 0.5}
      taps: {coefficients: [], default: 0.5}
      noise_var: 1.0
    experiment:
      n: 6
      snr_db: [0, 10, 20, 30, 40, 50, 60]
      input: {kind: onoff, p_on: 0.5}
      samples: 200000
      seed: 20240611
    bound:
      blocklengths: [10, 100, 1000000]
    output:
      directory: out/geometric
      formats: [csv, svg]

Complex tap coefficients are written as a number or as ``[re, im]``.
"""

import hashlib
import json
import logging
from pathlib import Path
from typing import Annotated, Any, Literal, Union

import yaml
from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator, model_validator

from bounds import (
    DEFAULT_DELTAS,
    DEFAULT_ETAS,
    BoundError,
    ConstantEpsilon,
    EpsilonTerm,
    GridSpec,
    MissingEpsilon,
    SmallBallEpsilon,
    TableEpsilon,
)
from bounds.floor import DEFAULT_HORIZON
from channel import (
    ChannelConfig,
    ChannelModelError,
    DecayProfile,
    DoubleExpTail,
    GeometricTail,
    SuperDoubleExpTail,
    TailModel,
    TapAssignment,
    ZeroTail,
    collect_issues,
)
from estimation import InputModel, make_input_model

from .errors import RunConfigError

logger = logging.getLogger(__name__)

SCHEMA_VERSION = 1

ComplexSpec = Union[float, tuple[float, float]]


def _to_complex(value: ComplexSpec) -> complex:
    if isinstance(value, tuple):
        return complex(value[0], value[1])
    return complex(value)


class _Section(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)


class ZeroTailSpec(_Section):
    kind: Literal["zero"] = "zero"


class GeometricTailSpec(_Section):
    kind: Literal["geometric"]
    ratio: float


class DoubleExpTailSpec(_Section):
    kind: Literal["doubleexp"]
    b: float
    c: float
    scale: float = 1.0


class SuperDoubleExpTailSpec(_Section):
    kind: Literal["superdoubleexp"]
    beta: float
    scale: float = 1.0


TailSpec = Annotated[
    Union[ZeroTailSpec, GeometricTailSpec, DoubleExpTailSpec, SuperDoubleExpTailSpec],
    Field(discriminator="kind"),
]


class ProfileSpec(_Section):
    head: list[float] = Field(min_length=1)
    tail: TailSpec = Field(default_factory=ZeroTailSpec)

    def build(self) -> DecayProfile:
        return DecayProfile(tuple(self.head), _build_tail(self.tail))


def _build_tail(spec: Any) -> TailModel:
    if isinstance(spec, GeometricTailSpec):
        return GeometricTail(ratio=spec.ratio)
    if isinstance(spec, DoubleExpTailSpec):
        return DoubleExpTail(b=spec.b, c=spec.c, scale=spec.scale)
    if isinstance(spec, SuperDoubleExpTailSpec):
        return SuperDoubleExpTail(beta=spec.beta, scale=spec.scale)
    return ZeroTail()


class NamedProfileSpec(ProfileSpec):
    id: str


class TapsSpec(_Section):
    coefficients: list[ComplexSpec] = Field(default_factory=list)
    default: ComplexSpec = 0.0

    def build(self) -> TapAssignment:
        return TapAssignment(
            coefficients=tuple(_to_complex(value) for value in self.coefficients),
            default=_to_complex(self.default),
        )


class ChannelSection(_Section):
    id: str = "channel"
    profile: ProfileSpec
    taps: TapsSpec = Field(default_factory=TapsSpec)
    noise_var: float = 1.0


class InputSpec(_Section):
    kind: Literal["onoff", "psk", "gaussian"] = "onoff"
    p_on: float = Field(0.5, gt=0.0, le=1.0)
    order: int = Field(4, ge=2)

    def build(self) -> InputModel:
        return make_input_model(self.kind, p_on=self.p_on, order=self.order)


class ExperimentSection(_Section):
    n: int = Field(ge=1)
    snr_db: list[float] = Field(default_factory=list)
    power: float | None = None
    input: InputSpec = Field(default_factory=InputSpec)
    samples: int = Field(10_000, ge=2)
    seed: int = Field(0, ge=0)
    traces: int = Field(4, ge=1)
    audit_points: list[int] | None = None

    @model_validator(mode="after")
    def _power_or_snr(self) -> "ExperimentSection":
        if self.power is not None and self.snr_db:
            raise ValueError("give either power or snr_db, not both")
        return self


class BoundSection(_Section):
    deltas: list[float] = Field(default_factory=lambda: list(DEFAULT_DELTAS))
    etas: list[float] = Field(default_factory=lambda: list(DEFAULT_ETAS))
    epsilon: Literal["small-ball", "constant", "table", "none"] = "small-ball"
    epsilon_constant: float | None = None
    epsilon_table: str | None = None
    horizon: int = Field(DEFAULT_HORIZON, ge=1)
    blocklengths: list[int] = Field(default_factory=lambda: [10, 100, 1000, 1_000_000])

    @model_validator(mode="after")
    def _epsilon_source(self) -> "BoundSection":
        if self.epsilon == "constant" and self.epsilon_constant is None:
            raise ValueError("epsilon 'constant' needs epsilon_constant")
        if self.epsilon == "table" and not self.epsilon_table:
            raise ValueError("epsilon 'table' needs epsilon_table")
        return self


class OutputSection(_Section):
    directory: str = "out"
    formats: list[Literal["csv", "svg"]] = Field(default_factory=lambda: ["csv"])


class RunConfig(_Section):
    """
    Parsed and schema-checked run configuration.

    Channel assumptions (positive noise, |a| ≤ 1, …) are checked separately
    by ``channel_config`` so that their messages carry the same field paths.
    """

    model_config = ConfigDict(extra="forbid", frozen=True, populate_by_name=True)

    schema_version: Literal[1] = Field(SCHEMA_VERSION, alias="schema")
    channel: ChannelSection
    experiment: ExperimentSection
    bound: BoundSection = Field(default_factory=BoundSection)
    output: OutputSection = Field(default_factory=OutputSection)
    profiles: list[NamedProfileSpec] = Field(default_factory=list)

    @field_validator("profiles")
    @classmethod
    def _unique_ids(cls, profiles: list[NamedProfileSpec]) -> list[NamedProfileSpec]:
        ids = [profile.id for profile in profiles]
        if len(ids) != len(set(ids)):
            raise ValueError("profile ids must be unique")
        return profiles

    @classmethod
    def load(cls, path: str | Path) -> "RunConfig":
        """
        Read and validate a YAML run configuration.

        Raises:
            RunConfigError: On unreadable YAML or schema violations
        """
        path = Path(path)
        try:
            data = yaml.safe_load(path.read_text(encoding="utf-8"))
        except OSError as e:
            raise RunConfigError([f"cannot read config: {e}"], str(path)) from e
        except yaml.YAMLError as e:
            raise RunConfigError([f"invalid YAML: {e}"], str(path)) from e
        return cls.from_dict(data, source=str(path))

    @classmethod
    def from_dict(cls, data: Any, source: str | None = None) -> "RunConfig":
        if not isinstance(data, dict):
            raise RunConfigError(["config must be a mapping"], source)
        try:
            return cls.model_validate(data)
        except ValidationError as e:
            raise RunConfigError(_flatten_errors(e), source) from e

    def to_dict(self) -> dict[str, Any]:
        return self.model_dump(mode="json", by_alias=True)

    def dump(self) -> str:
        """YAML text that ``load`` reads back to an equal RunConfig."""
        return yaml.safe_dump(self.to_dict(), sort_keys=False, allow_unicode=True)

    def sha256(self) -> str:
        """Digest of the canonical JSON form; overrides change it."""
        canonical = json.dumps(self.to_dict(), sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(canonical.encode("utf-8")).hexdigest()

    def with_overrides(
        self,
        seed: int | None = None,
        samples: int | None = None,
        out_dir: str | None = None,
    ) -> "RunConfig":
        """Copy with command-line overrides applied and re-validated."""
        data = self.to_dict()
        if seed is not None:
            data["experiment"]["seed"] = seed
        if samples is not None:
            data["experiment"]["samples"] = samples
        if out_dir is not None:
            data["output"]["directory"] = out_dir
        return RunConfig.from_dict(data, source="command-line overrides")

    def power(self) -> float:
        """Input power P; the highest SNR point when only snr_db is given."""
        if self.experiment.power is not None:
            return self.experiment.power
        if self.experiment.snr_db:
            return 10.0 ** (max(self.experiment.snr_db) / 10.0) * self.channel.noise_var
        return 1.0

    def channel_config(self) -> ChannelConfig:
        """
        ChannelConfig for this run.

        Raises:
            RunConfigError: Listing every violated channel assumption with its field path
        """
        issues: list[str] = []
        try:
            profile = self.channel.profile.build()
        except ChannelModelError as e:
            raise RunConfigError([f"channel.profile: {e}"]) from e
        try:
            taps = self.channel.taps.build()
        except ChannelModelError as e:
            raise RunConfigError([f"channel.taps: {e}"]) from e

        config = ChannelConfig(
            profile=profile,
            taps=taps,
            noise_var=self.channel.noise_var,
            power=self.power(),
            blocklength=self.experiment.n,
        )
        issues.extend(str(issue) for issue in collect_issues(config))
        if issues:
            raise RunConfigError(issues)
        return config

    def named_profiles(self) -> list[tuple[str, DecayProfile]]:
        """The channel profile followed by the extra ``profiles`` entries."""
        profiles = [(self.channel.id, self.channel.profile.build())]
        for index, spec in enumerate(self.profiles):
            try:
                profiles.append((spec.id, spec.build()))
            except ChannelModelError as e:
                raise RunConfigError([f"profiles.{index}: {e}"]) from e
        return profiles

    def input_model(self) -> InputModel:
        return self.experiment.input.build()

    def grid(self) -> GridSpec:
        try:
            return GridSpec.from_lists(self.bound.deltas, self.bound.etas)
        except BoundError as e:
            raise RunConfigError([f"bound.deltas/etas: {e}"]) from e

    def epsilon_term(self) -> EpsilonTerm:
        """
        Raises:
            RunConfigError: If the ε table cannot be loaded or the constant is invalid
        """
        try:
            if self.bound.epsilon == "constant":
                return ConstantEpsilon(self.bound.epsilon_constant)
            if self.bound.epsilon == "table":
                return TableEpsilon.from_csv(self.bound.epsilon_table)
        except (BoundError, OSError) as e:
            raise RunConfigError([f"bound.epsilon: {e}"]) from e
        if self.bound.epsilon == "none":
            return MissingEpsilon()
        return SmallBallEpsilon()


def _flatten_errors(error: ValidationError) -> list[str]:
    """Pydantic errors as ``dotted.path: message`` strings."""
    issues = []
    for item in error.errors():
        path = ".".join(str(part) for part in item["loc"]) or "<root>"
        issues.append(f"{path}: {item['msg']}")
    return issues
