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

#include "osptoda/numerics.hpp"

#include <algorithm>
#include <cmath>

namespace osptoda {

namespace {

// 16-point Gauss-Legendre nodes/weights on [-1, 1].
constexpr long double GL_X[8] = {
    0.0950125098376374401853193L, 0.2816035507792589132304605L,
    0.4580167776572273863424194L, 0.6178762444026437484466718L,
    0.7554044083550030338951012L, 0.8656312023878317438804679L,
    0.9445750230732325760779884L, 0.9894009349916499325961542L};
constexpr long double GL_W[8] = {
    0.1894506104550684962853967L, 0.1826034150449235888667637L,
    0.1691565193950025381893121L, 0.1495959888165767320815017L,
    0.1246289712555338720524763L, 0.0951585116824927848099251L,
    0.0622535239386478928628438L, 0.0271524594117540948517806L};

}  // namespace

double bessel_k_imag_order(double nu, double x) {
    if (!(x > 0)) throw std::invalid_argument("bessel_k_imag_order: x must be positive");
    const long double lx = static_cast<long double>(x);
    const long double lnu = static_cast<long double>(nu);
    // Integrand decays like e^{-x cosh t}; past T it is below 1e-60 for
    // every x used here.
    const long double T = 14.0L;
    const long double panel = 0.25L;
    long double sum = 0.0L;
    for (long double a = 0.0L; a < T; a += panel) {
        long double b = std::min(a + panel, T);
        long double mid = 0.5L * (a + b), half = 0.5L * (b - a);
        for (int k = 0; k < 8; ++k) {
            for (int s = -1; s <= 1; s += 2) {
                long double t = mid + s * half * GL_X[k];
                long double e = lx * std::cosh(t);
                if (e > 745.0L) continue;  // exp underflow, exactly 0 in double anyway
                sum += half * GL_W[k] * std::exp(-e) * std::cos(lnu * t);
            }
        }
    }
    return static_cast<double>(sum);
}

std::vector<double> liouville_wave(double mu, const Grid1D& g) {
    std::vector<double> psi(static_cast<size_t>(g.n));
    for (int i = 0; i < g.n; ++i)
        psi[static_cast<size_t>(i)] = bessel_k_imag_order(2.0 * mu, 2.0 * std::exp(g.point(i) / 2.0));
    return psi;
}

double ode_residual(double b, double a, double mu, const std::vector<double>& psi,
                    const Grid1D& g) {
    if (static_cast<int>(psi.size()) != g.n)
        throw std::invalid_argument("ode_residual: sample size mismatch");
    double h2 = g.h() * g.h();
    double worst = 0.0;
    for (int i = 2; i + 2 < g.n; ++i) {
        double d2 = (-psi[static_cast<size_t>(i - 2)] + 16.0 * psi[static_cast<size_t>(i - 1)] -
                     30.0 * psi[static_cast<size_t>(i)] + 16.0 * psi[static_cast<size_t>(i + 1)] -
                     psi[static_cast<size_t>(i + 2)]) /
                    (12.0 * h2);
        double q = g.point(i);
        double v = b * std::exp(q) + a * std::exp(2.0 * q);
        double r = -d2 + (v - mu * mu) * psi[static_cast<size_t>(i)];
        worst = std::max(worst, std::abs(r));
    }
    return worst;
}

OdeSolution integrate_schroedinger(double b, double a, double mu, const Grid1D& g, bool backward,
                                   double psi0, double dpsi0, int substeps) {
    auto second = [&](double q, double psi) {
        return (b * std::exp(q) + a * std::exp(2.0 * q) - mu * mu) * psi;
    };
    OdeSolution sol;
    sol.psi.assign(static_cast<size_t>(g.n), 0.0);
    sol.dpsi.assign(static_cast<size_t>(g.n), 0.0);

    double y = psi0, dy = dpsi0;
    int start = backward ? g.n - 1 : 0;
    int step = backward ? -1 : 1;
    double hh = step * g.h() / substeps;

    sol.psi[static_cast<size_t>(start)] = y;
    sol.dpsi[static_cast<size_t>(start)] = dy;
    for (int cell = 0; cell < g.n - 1; ++cell) {
        int i = start + cell * step;
        double q = g.point(i);
        for (int s = 0; s < substeps; ++s) {
            double q0 = q + s * hh;
            double k1y = dy, k1d = second(q0, y);
            double k2y = dy + 0.5 * hh * k1d, k2d = second(q0 + 0.5 * hh, y + 0.5 * hh * k1y);
            double k3y = dy + 0.5 * hh * k2d, k3d = second(q0 + 0.5 * hh, y + 0.5 * hh * k2y);
            double k4y = dy + hh * k3d, k4d = second(q0 + hh, y + hh * k3y);
            y += hh / 6.0 * (k1y + 2.0 * k2y + 2.0 * k3y + k4y);
            dy += hh / 6.0 * (k1d + 2.0 * k2d + 2.0 * k3d + k4d);
        }
        sol.psi[static_cast<size_t>(i + step)] = y;
        sol.dpsi[static_cast<size_t>(i + step)] = dy;
    }
    return sol;
}

double wronskian_drift(const std::vector<double>& psi1, const std::vector<double>& psi2,
                       const Grid1D& g) {
    if (static_cast<int>(psi1.size()) != g.n || static_cast<int>(psi2.size()) != g.n)
        throw std::invalid_argument("wronskian_drift: sample size mismatch");
    auto deriv = [&](const std::vector<double>& f, int i) {
        return (f[static_cast<size_t>(i - 2)] - 8.0 * f[static_cast<size_t>(i - 1)] +
                8.0 * f[static_cast<size_t>(i + 1)] - f[static_cast<size_t>(i + 2)]) /
               (12.0 * g.h());
    };
    double w0 = 0.0, drift = 0.0;
    for (int i = 2; i + 2 < g.n; ++i) {
        double w = psi1[static_cast<size_t>(i)] * deriv(psi2, i) -
                   psi2[static_cast<size_t>(i)] * deriv(psi1, i);
        if (i == 2) {
            w0 = w;
            if (std::abs(w0) < 1e-12)
                throw DegenerateWronskian("wronskian_drift: near-zero initial Wronskian");
        }
        drift = std::max(drift, std::abs(w - w0) / std::abs(w0));
    }
    return drift;
}

std::vector<std::vector<double>> discretize(const DiffOperator& h, double qmin, double qmax,
                                            int n) {
    if (h.l() != 1) throw std::invalid_argument("discretize: 1-variable operators only");
    // Split into -d^2/dq^2 and a pure potential sum c e^{m q}.
    std::vector<std::pair<int, double>> pot;
    for (const auto& [k, c] : h.terms()) {
        if (!c.is_constant() || !c.constant_term().is_rational())
            throw std::invalid_argument("discretize: non-numeric coefficient " + c.str());
        double cv = c.constant_term().rational_part().get_d();
        if (k.deriv[0] == 0) {
            pot.emplace_back(k.exp[0], cv);
        } else if (k.deriv[0] == 2 && k.exp[0] == 0) {
            if (cv != -1.0)
                throw std::invalid_argument("discretize: second-order term must be -d^2/dq^2");
        } else {
            throw std::invalid_argument("discretize: unsupported operator term");
        }
    }
    double step = (qmax - qmin) / (n + 1);
    std::vector<std::vector<double>> m(static_cast<size_t>(n),
                                       std::vector<double>(static_cast<size_t>(n), 0.0));
    for (int i = 0; i < n; ++i) {
        double q = qmin + step * (i + 1);
        double v = 0.0;
        for (const auto& [e, c] : pot) v += c * std::exp(e * q);
        m[static_cast<size_t>(i)][static_cast<size_t>(i)] = 2.0 / (step * step) + v;
        if (i + 1 < n) {
            m[static_cast<size_t>(i)][static_cast<size_t>(i + 1)] = -1.0 / (step * step);
            m[static_cast<size_t>(i + 1)][static_cast<size_t>(i)] = -1.0 / (step * step);
        }
    }
    return m;
}

std::vector<double> lowest_eigenvalues(const std::vector<std::vector<double>>& m, int k) {
    int n = static_cast<int>(m.size());
    if (k < 1 || k > n) throw std::invalid_argument("lowest_eigenvalues: bad count");
    std::vector<double> diag(static_cast<size_t>(n)), off(static_cast<size_t>(n > 0 ? n - 1 : 0));
    for (int i = 0; i < n; ++i) {
        diag[static_cast<size_t>(i)] = m[static_cast<size_t>(i)][static_cast<size_t>(i)];
        for (int j = 0; j < n; ++j)
            if (std::abs(i - j) > 1 && m[static_cast<size_t>(i)][static_cast<size_t>(j)] != 0.0)
                throw std::invalid_argument("lowest_eigenvalues: matrix is not tridiagonal");
        if (i + 1 < n) off[static_cast<size_t>(i)] = m[static_cast<size_t>(i)][static_cast<size_t>(i + 1)];
    }

    // Sturm count: eigenvalues strictly below x.
    auto count_below = [&](double x) {
        int cnt = 0;
        double q = diag[0] - x;
        if (q < 0) ++cnt;
        for (int i = 1; i < n; ++i) {
            double denom = q;
            if (denom == 0.0) denom = 1e-300;
            q = diag[static_cast<size_t>(i)] - x -
                off[static_cast<size_t>(i - 1)] * off[static_cast<size_t>(i - 1)] / denom;
            if (q < 0) ++cnt;
        }
        return cnt;
    };

    double lo = diag[0], hi = diag[0];
    for (int i = 0; i < n; ++i) {
        double r = 0.0;
        if (i > 0) r += std::abs(off[static_cast<size_t>(i - 1)]);
        if (i + 1 < n) r += std::abs(off[static_cast<size_t>(i)]);
        lo = std::min(lo, diag[static_cast<size_t>(i)] - r);
        hi = std::max(hi, diag[static_cast<size_t>(i)] + r);
    }

    std::vector<double> eigs;
    for (int idx = 1; idx <= k; ++idx) {
        double a = lo, b = hi;
        for (int it = 0; it < 200; ++it) {
            double mid = 0.5 * (a + b);
            if (count_below(mid) < idx)
                a = mid;
            else
                b = mid;
            if (b - a < 1e-13 * std::max(1.0, std::abs(b))) break;
        }
        eigs.push_back(0.5 * (a + b));
    }
    return eigs;
}

}  // namespace osptoda
