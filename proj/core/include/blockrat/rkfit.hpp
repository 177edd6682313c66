#pragma once

#include <limits>
#include <span>
#include <vector>

#include "blockrat/samples.hpp"
#include "blockrat/vecfit.hpp"

namespace blockrat {

/// Pole value standing for a pole at infinity.
inline const Complex kInfinitePole{std::numeric_limits<double>::infinity(), 0.0};

inline bool is_infinite_pole(Complex xi) { return !std::isfinite(xi.real()) || !std::isfinite(xi.imag()); }

struct RkfitOptions {
    std::size_t degree = 0;
    std::size_t iterations = 5;
    std::vector<Complex> initial_poles;  // empty: all poles at infinity
};

/// Orthonormal basis of { p(lambda)/q(lambda) : deg p <= d } on the sample
/// points, q(z) = prod (z - xi_j) over the finite poles.
struct RationalBasis {
    std::vector<Complex> points;
    std::vector<Complex> poles;
    Matrix vectors;  // ell x (d+1), orthonormal columns
    Matrix k;        // (d+1) x d and
    Matrix h;        // (d+1) x d with diag(points) * vectors * k = vectors * h
};

/// Rational Krylov basis for A = diag(points), b = ones, built column by
/// column with one pole per step and twice-iterated Gram-Schmidt.
RationalBasis build_basis(std::span<const Complex> points, std::span<const Complex> poles);

struct Relocation {
    std::vector<Complex> poles;  // infinite entries mark poles at infinity
    double min_singular_value = 0.0;
    bool degenerate = false;     // trailing singular vector not unique
};

/// One RKFIT step: finds the unit vector v = V c minimizing
/// sum_k ||(I - V V^*) diag(f_k) v|| and returns the roots of v as a rational
/// function p/q. `functions` is ell x N, one column per scalar function.
Relocation relocate_poles(const RationalBasis& basis, const Matrix& functions);

struct RkfitResult {
    PoleResidue model;
    std::vector<double> rmse_trace;  // least-squares RMSE with the poles after each iteration
};

/// Common-denominator RKFIT over all m*n entries, final numerators by least
/// squares in the partial-fraction basis.
RkfitResult rkfit_fit(const SampleSet& samples, const RkfitOptions& opts);

} // namespace blockrat
