#pragma once
#include <complex>
#include <span>
#include <variant>
#include <vector>

#include "core/errors.hpp"
#include "core/spline.hpp"

namespace gaborlab {

using cplx = std::complex<double>;

/// Centered uniform time grid: t_j = (j - n/2) h, j = 0..n-1.
struct TimeGrid {
    int n = 2048;
    double h = 1.0 / 64.0;

    double t(int j) const { return (j - n / 2) * h; }
    double extent() const { return n * h / 2.0; }
    bool operator==(const TimeGrid&) const = default;
};

/// Default desk-scale grid: extent 16, Nyquist 32.
TimeGrid default_grid();

enum class Parity { none, even, odd };

/// Complex samples of a window on a centered grid, with cubic-spline
/// evaluation between samples (zero beyond the extent). Immutable.
class SampledWindow {
public:
    SampledWindow(TimeGrid grid, std::vector<cplx> values, Parity parity_hint = Parity::none);

    const TimeGrid& grid() const { return grid_; }
    std::span<const cplx> values() const { return values_; }
    cplx operator[](int j) const { return values_[static_cast<std::size_t>(j)]; }
    Parity parity_hint() const { return parity_; }

    double norm() const { return norm_; } // sqrt(h sum |v|^2)

    /// Spline interpolant; exactly the sample on grid points, 0 outside.
    cplx value_at(double t) const { return {re_(t), im_(t)}; }

private:
    TimeGrid grid_;
    std::vector<cplx> values_;
    Parity parity_;
    double norm_;
    CubicSpline re_, im_;
};

// ---------------------------------------------------------------------------
// Window families
// ---------------------------------------------------------------------------

struct GaussianSpec {
    double gamma = 1.0; // 2^{1/4} sqrt(gamma) e^{-pi gamma^2 t^2}
};

struct HermiteSpec {
    int n = 0;
    double gamma = 1.0;
};

/// Odd, compactly supported C^2 window t (1-t^2)_+^3, normalized.
struct OddBumpSpec {};

struct RawSamplesSpec {
    TimeGrid grid;
    std::vector<cplx> values;
};

using WindowSpec = std::variant<GaussianSpec, HermiteSpec, OddBumpSpec, RawSamplesSpec>;

/// Evaluate the spec on the grid, L^2-normalized on-grid for the analytic
/// families, with the family's parity hint. Raw samples are spline-resampled
/// when their grid differs.
SampledWindow sample(const WindowSpec& spec, const TimeGrid& grid);

/// (even_defect, odd_defect): relative distance to the even/odd subspace,
/// ||(w -+ w^v)/2|| / ||w||, reflection by index reversal.
std::pair<double, double> parity_defect(const SampledWindow& w);

/// g^v(t) = g(-t) on the same grid.
SampledWindow reflect(const SampledWindow& w);

/// Midpoint Riemann sum of the self-STFT magnitude |V_w w| over [-K, K]^2
/// with the given spacing. A decay sanity check, not a norm.
double s0_diagnostic(const SampledWindow& w, int big_k, double step);

} // namespace gaborlab
