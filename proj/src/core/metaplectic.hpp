#pragma once
#include "core/symplectic.hpp"
#include "core/windows.hpp"

namespace gaborlab {

/// Modified Fourier transform J^g = i^{-1/2} F g, re-evaluated on the input
/// grid: (Fg)(t_m) = h sum_j g(t_j) e^{-2 pi i t_m t_j}. O(n^2).
SampledWindow apply_fourier(const SampledWindow& w);

/// Dilation M^_{L,m} g = i^m sqrt|L| g(L t), spline-evaluated, zero beyond
/// the grid extent. discarded_mass (optional) reports the L^2 mass lost to
/// truncation when the dilated support exceeds the grid.
SampledWindow apply_dilation(const SampledWindow& w, double scale, int maslov = 0,
                             double* discarded_mass = nullptr);

/// Chirp V^_P g = e^{pi i P t^2} g. Norm-exact.
SampledWindow apply_chirp(const SampledWindow& w, double coeff);

/// Steps applied right-to-left; parity hint of w carries over.
SampledWindow apply_chain(const SampledWindow& w, const GeneratorChain& chain);

/// apply_chain(w, decompose(S)); d = 1 only.
SampledWindow apply_symplectic(const SampledWindow& w, const SymplecticMatrix& s);

/// Quadratic Fourier transform S^_{W,m} = V^_P M^_{L,m} J^ V^_Q (d = 1).
SampledWindow quadratic_fourier(const SampledWindow& w, const QuadraticForm& form, int maslov);

/// Direct quadrature of the explicit kernel
/// i^{m-1/2} sqrt|L| int g(t') e^{2 pi i W(t,t')} dt' at one output point.
/// Independent route used to cross-validate quadratic_fourier.
cplx quadratic_fourier_kernel(const SampledWindow& w, const QuadraticForm& form, int maslov,
                              double t_out);

/// Parity defect (matching the window's hint) of apply_chain(w, chain).
double parity_preserved(const SampledWindow& w, const GeneratorChain& chain);

// Grid-weighted inner product and norm helpers shared by the test suites.
cplx inner(const SampledWindow& a, const SampledWindow& b);
double distance(const SampledWindow& a, const SampledWindow& b);

/// min over unimodular theta of ||a - theta b||; alignment via <a, b>.
double phase_aligned_distance(const SampledWindow& a, const SampledWindow& b);

} // namespace gaborlab
