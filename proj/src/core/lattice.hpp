#pragma once
#include <vector>

#include "core/symplectic.hpp"

namespace gaborlab {

/// Lattice delta^{-1/2d} S Z^{2d} of density delta, generated by a
/// symplectic matrix S. Immutable.
class Lattice {
public:
    Lattice(SymplecticMatrix generator, double delta);

    static Lattice separable(double alpha, double beta);

    int half_dim() const { return generator_.half_dim(); }
    double density() const { return delta_; }
    const Mat& basis() const { return basis_; }
    const SymplecticMatrix& generator() const { return generator_; }

    /// True when the generator is diagonal (d = 1), i.e. the lattice is
    /// alpha Z x beta Z; reports the (positive) parameters.
    bool diagonal_generator(double* alpha = nullptr, double* beta = nullptr) const;

    /// All lattice points with ||p||_2 <= radius, each exactly once, in
    /// lexicographic order of their integer coordinates.
    std::vector<Vec> enumerate(double radius) const;

private:
    SymplecticMatrix generator_;
    double delta_;
    Mat basis_;
};

Lattice from_symplectic(const SymplecticMatrix& s, double delta);

} // namespace gaborlab
