// Vibrational eigenstates of the field-free ground potential on the radial
// grid, from dense diagonalization of the Fourier-grid Hamiltonian.
#pragma once

#include <vector>

#include "reflectal/curves.hpp"
#include "reflectal/grid.hpp"

namespace reflectal {

struct VibrationalState {
    int v = 0;
    double energy = 0.0;        // hartree
    std::vector<double> chi;    // real amplitude, <chi|chi> dR = 1
};

/// Lowest n_states bound eigenpairs of -1/(2m) d^2/dR^2 + V1(R), kinetic part
/// applied spectrally (same momentum grid as the propagator). Eigenvalues
/// ascend; amplitudes are dR-normalized with the first lobe positive.
/// Throws ResolutionError when fewer bound levels exist than requested or a
/// returned state touches the grid boundary.
std::vector<VibrationalState> eigensolve(const Curve& v1, double mass,
                                         const RadialGrid& grid,
                                         std::size_t n_states);

/// Sign changes of chi inside the classically allowed region (diagnostic for
/// the node-count rule).
int count_nodes(const VibrationalState& state, const Curve& v1,
                const RadialGrid& grid);

}  // namespace reflectal
