"""Python interface to the Salpeter-equation wavepacket tunneling solver.

The heavy lifting happens in the compiled extension ``salpeter._core``;
this package re-exports its public surface.
"""

from ._core import (  # noqa: F401
    ConfigError,
    DeltaComparison,
    EigenBasis,
    Evolution,
    Grid,
    HamiltonianMatrix,
    IoError,
    NumericalError,
    OlcDenominator,
    OlcRecord,
    PacketSpec,
    Potential,
    RegionProbability,
    Rep,
    Units,
    Wavepacket,
    __version__,
    build_hamiltonian,
    compare_to_delta_limit,
    conditional_mean_position,
    cos8_packet,
    delta_limit_eigenfunction,
    diagonalize,
    dispersion,
    eval_position,
    evolve_series,
    free_propagate,
    load_or_diagonalize,
    make_grid,
    mean_momentum,
    mean_position,
    momentum_element,
    normalized,
    olc_fraction,
    olc_global_max,
    olc_series,
    peak_position,
    region_mass,
    run_scenario,
    spectral_propagate,
    support_edges,
    to_momentum,
    to_position,
    transmitted_cut,
)
