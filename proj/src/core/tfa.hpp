#pragma once
#include <iosfwd>
#include <utility>
#include <vector>

#include "core/windows.hpp"

namespace gaborlab {

/// Point lambda = (x, omega) in the time-frequency plane.
struct TFPoint {
    double x = 0.0;
    double omega = 0.0;
};

/// Complex values on a rectangular time-frequency grid.
class TFGrid {
public:
    TFGrid(double x0, double dx, int nx, double omega0, double domega, int nomega);

    int nx() const { return nx_; }
    int nomega() const { return nomega_; }
    double x(int ix) const { return x0_ + ix * dx_; }
    double omega(int iw) const { return omega0_ + iw * domega_; }
    double dx() const { return dx_; }
    double domega() const { return domega_; }

    cplx& at(int ix, int iw) { return values_[static_cast<std::size_t>(ix) * nomega_ + iw]; }
    cplx at(int ix, int iw) const { return values_[static_cast<std::size_t>(ix) * nomega_ + iw]; }

private:
    double x0_, dx_, omega0_, domega_;
    int nx_, nomega_;
    std::vector<cplx> values_;
};

/// V_g f(x, omega) = h sum_j f(t_j) conj(g(t_j - x)) e^{-2 pi i omega t_j}.
/// On-grid shifts (x/h integral within 1e-9) use an exact index shift;
/// otherwise g is evaluated by its cubic spline.
cplx stft(const SampledWindow& f, const SampledWindow& g, TFPoint p);

/// A_g f(x, omega) = e^{pi i x omega} V_g f(x, omega).
cplx ambiguity(const SampledWindow& f, const SampledWindow& g, TFPoint p);

/// W_g f(x, omega) = 2 A_{g^v} f(2x, 2omega)  (d = 1).
cplx wigner(const SampledWindow& f, const SampledWindow& g, TFPoint p);

/// Plain Riemann quadrature of the symplectic Fourier transform
/// integral of F over its grid rectangle, at p.
cplx symplectic_ft(const TFGrid& grid, TFPoint p);

/// (sum W_g g(k, l), sum A_g g(k, l)) over |k|, |l| <= K.
std::pair<cplx, cplx> poisson_check(const SampledWindow& g, int big_k);

/// A_g f sampled on [x0, x1] x [omega0, omega1] with inclusive endpoints.
TFGrid sample_ambiguity(const SampledWindow& f, const SampledWindow& g, double x0, double x1,
                        double omega0, double omega1, int nx, int nomega);

/// CSV rows "x,omega,re,im".
void write_csv(const TFGrid& grid, std::ostream& os);

} // namespace gaborlab
