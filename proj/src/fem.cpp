#include "thinshell/fem.hpp"

#include <cmath>
#include <map>
#include <mutex>

namespace thinshell::fem {

namespace {

GaussRule compute_gauss(int npts) {
    GaussRule rule;
    rule.x.resize(npts);
    rule.w.resize(npts);
    // Newton iteration on Legendre P_n from the Chebyshev-like initial guess.
    for (int i = 0; i < npts; ++i) {
        double x = std::cos(M_PI * (i + 0.75) / (npts + 0.5));
        double p0 = 0, p1 = 0;
        for (int it = 0; it < 100; ++it) {
            p0 = 1.0;
            p1 = 0.0;
            for (int j = 0; j < npts; ++j) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
            }
            const double dp = npts * (x * p0 - p1) / (x * x - 1.0);
            const double dx = p0 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        p0 = 1.0;
        p1 = 0.0;
        for (int j = 0; j < npts; ++j) {
            const double p2 = p1;
            p1 = p0;
            p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
        }
        const double dp = npts * (x * p0 - p1) / (x * x - 1.0);
        rule.x[i] = x;
        rule.w[i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    return rule;
}

}  // namespace

const GaussRule& gauss_legendre(int npts) {
    static std::mutex mu;
    static std::map<int, GaussRule> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(npts);
    if (it == cache.end()) it = cache.emplace(npts, compute_gauss(npts)).first;
    return it->second;
}

Mesh1D uniform_mesh(double a, double b, int M, bool periodic) {
    Mesh1D mesh;
    mesh.periodic = periodic;
    mesh.boundaries.resize(M + 1);
    for (int i = 0; i <= M; ++i) mesh.boundaries[i] = a + (b - a) * i / M;
    return mesh;
}

SturmLiouvilleForms assemble_p2(const Mesh1D& mesh,
                                const std::function<double(double)>& alpha,
                                const std::function<double(double)>& gamma,
                                const std::function<double(double)>& beta,
                                int quad_pts) {
    const int n = mesh.dofs();
    SturmLiouvilleForms out;
    out.stiffness = Eigen::MatrixXd::Zero(n, n);
    out.mass = Eigen::MatrixXd::Zero(n, n);
    const GaussRule& rule = gauss_legendre(quad_pts);

    for (int e = 0; e < mesh.elements(); ++e) {
        const double xa = mesh.boundaries[e];
        const double xb = mesh.boundaries[e + 1];
        const double h = xb - xa;
        double Ke[3][3] = {};
        double Me[3][3] = {};
        for (int q = 0; q < quad_pts; ++q) {
            const double xr = 0.5 * (rule.x[q] + 1.0);  // reference in [0,1]
            const double x = xa + h * xr;
            const double wq = rule.w[q] * 0.5 * h;
            double N[3], dN[3];
            p2_shapes(xr, N, dN);
            const double a_q = alpha ? alpha(x) : 0.0;
            const double g_q = gamma ? gamma(x) : 0.0;
            const double b_q = beta ? beta(x) : 0.0;
            for (int i = 0; i < 3; ++i) {
                for (int j = 0; j < 3; ++j) {
                    Ke[i][j] += wq * (a_q * dN[i] * dN[j] / (h * h) + g_q * N[i] * N[j]);
                    Me[i][j] += wq * b_q * N[i] * N[j];
                }
            }
        }
        for (int i = 0; i < 3; ++i) {
            const int gi = mesh.global_dof(e, i);
            for (int j = 0; j < 3; ++j) {
                const int gj = mesh.global_dof(e, j);
                out.stiffness(gi, gj) += Ke[i][j];
                out.mass(gi, gj) += Me[i][j];
            }
        }
    }
    return out;
}

GeneralizedEigenSolution solve_generalized_symmetric(const Eigen::MatrixXd& A,
                                                     const Eigen::MatrixXd& B) {
    Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.compute(A, B, Eigen::ComputeEigenvectors | Eigen::Ax_lBx);
    if (solver.info() == Eigen::NumericalIssue)
        throw SolveError("mass matrix not positive definite: assembly bug");
    if (solver.info() != Eigen::Success)
        throw SolveError("generalized eigensolver failed to converge");
    return {solver.eigenvalues(), solver.eigenvectors()};
}

double integrate(const std::function<double(double)>& f, double a, double b,
                 int panels, int pts_per_panel) {
    const GaussRule& rule = gauss_legendre(pts_per_panel);
    double sum = 0.0;
    const double h = (b - a) / panels;
    for (int p = 0; p < panels; ++p) {
        const double xa = a + p * h;
        for (int q = 0; q < pts_per_panel; ++q) {
            const double x = xa + 0.5 * h * (rule.x[q] + 1.0);
            sum += f(x) * rule.w[q] * 0.5 * h;
        }
    }
    return sum;
}

}  // namespace thinshell::fem
