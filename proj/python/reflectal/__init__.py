"""Complete-reflection control of diatomic photodissociation.

Thin wrapper re-exporting the compiled extension. The heavy lifting lives in
the C++ core; this package adds nothing beyond import convenience.
"""

from _reflectal import (  # noqa: F401
    AlignmentCandidate,
    Branching,
    CapSpec,
    CrossingFeatures,
    CurveSet,
    DressedPair,
    FieldSpec,
    GaussianDipoleParams,
    ManifoldCurve,
    ManifoldRoot,
    MorseParams,
    PropagationConfig,
    PropagationResult,
    RadialGrid,
    ReflectalError,
    RepulsiveParams,
    SurrogateParams,
    VibrationalState,
    ZnParameters,
    arg_gamma_imag,
    branching,
    convert,
    dress,
    eigensolve,
    extract_features,
    field_from_intensity,
    find_control_frequency,
    intensity_from_field,
    manifold,
    propagate,
    surrogate_hi,
    transmission,
    transmission_pi_units,
    zn_assemble,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
