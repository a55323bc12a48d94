/*
   Copyright 2026 The osp-toda Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef OSPTODA_NUMERICS_HPP
#define OSPTODA_NUMERICS_HPP

#include <stdexcept>
#include <vector>

#include "osptoda/diff_operator.hpp"

namespace osptoda {

struct DegenerateWronskian : std::runtime_error {
    explicit DegenerateWronskian(const std::string& w) : std::runtime_error(w) {}
};

struct Grid1D {
    double qmin, qmax;
    int n;

    Grid1D(double a, double b, int points) : qmin(a), qmax(b), n(points) {
        if (n < 16) throw std::invalid_argument("Grid1D: need at least 16 points");
        if (!(b > a)) throw std::invalid_argument("Grid1D: empty interval");
    }
    double h() const { return (qmax - qmin) / (n - 1); }
    double point(int i) const { return qmin + h() * i; }
};

/// Modified Bessel function of imaginary order, K_{i*nu}(x) for x > 0,
/// real-valued, via panelled Gauss-Legendre quadrature of
/// integral_0^infty e^{-x cosh t} cos(nu t) dt in extended precision. This
/// is an independent special-function oracle: it never touches the
/// differential equation it is used to check.
double bessel_k_imag_order(double nu, double x);

/// Samples q -> K_{2 i mu}(2 e^{q/2}) on the grid.
std::vector<double> liouville_wave(double mu, const Grid1D& g);

/// max over interior points of | -psi'' + (b e^q + a e^{2q}) psi - mu^2 psi |
/// with a 4th-order five-point second-derivative stencil.
double ode_residual(double b, double a, double mu, const std::vector<double>& psi,
                    const Grid1D& g);

/// Numerical solution of psi'' = (b e^q + a e^{2q} - mu^2) psi by RK4 with
/// `substeps` sub-intervals per grid cell. Integrates rightward from
/// (psi0, dpsi0) at the left end, or leftward from the right end when
/// `backward`.
struct OdeSolution {
    std::vector<double> psi, dpsi;
};
OdeSolution integrate_schroedinger(double b, double a, double mu, const Grid1D& g, bool backward,
                                   double psi0, double dpsi0, int substeps = 16);

/// max |W(q) - W(q0)| / |W(q0)| with W = psi1 psi2' - psi2 psi1', the
/// derivatives taken by 4th-order central differences. Throws
/// DegenerateWronskian when |W(q0)| < 1e-12.
double wronskian_drift(const std::vector<double>& psi1, const std::vector<double>& psi2,
                       const Grid1D& g);

/// Dirichlet discretization of a 1-variable operator -d^2/dq^2 + V(q),
/// V(q) = sum of c e^{n q} with rational constant coefficients, on n
/// interior points of [qmin, qmax]. Returns a dense symmetric matrix.
std::vector<std::vector<double>> discretize(const DiffOperator& h, double qmin, double qmax,
                                            int n);

/// k smallest eigenvalues of a symmetric tridiagonal matrix (given dense;
/// off-tridiagonal entries must be zero) by Sturm-sequence bisection.
std::vector<double> lowest_eigenvalues(const std::vector<std::vector<double>>& m, int k);

}  // namespace osptoda

#endif
