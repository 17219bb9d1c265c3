#include "cxosc/blocks.hpp"

#include "cxosc/hermite.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace cxosc {

namespace {

using cd = std::complex<double>;

double sqrt_number(const AlgebraParams& p, long n)
{
    return std::sqrt(double(deformed_number_ext(p, n).real()));
}

using Vec = Eigen::VectorXcd;

} // namespace

double normalized_alpha(const AlgebraParams& p, int m)
{
    const int d = p.d();
    if (m < d)
        return 0.0;
    return std::sqrt(double(deformed_falling(p, m, d).real()));
}

BlockCoefficients block_coefficients(const AlgebraParams& p, int n)
{
    if (!p.positive())
        throw ParamError("block coefficients need positive parameters");
    if (n < 0)
        throw ParamError("block index must be >= 0");
    const int d = p.d();
    BlockCoefficients b{CMatrix::Zero(d, d), CMatrix::Zero(d, d), CMatrix::Zero(d, d), CMatrix::Zero(d, d)};
    b.A(d - 1, 0) = sqrt_number(p, long(n + 1) * d);
    for (int j = 1; j < d; ++j)
        b.B(j - 1, j) = sqrt_number(p, long(n) * d + j);
    for (int j = 0; j < d; ++j) {
        if (n > 0)
            b.C(j, j) = normalized_alpha(p, n * d + j);
        b.R(j, j) = root_of_unity<double>(p.lambda(), long(n) * d + j);
    }
    return b;
}

BlockSystem assemble(const AlgebraParams& p, int nblocks)
{
    if (!p.positive())
        throw ParamError("block realization needs positive parameters");
    if (nblocks < 1)
        throw ParamError("need at least one block");
    const int d = p.d();
    const int M = nblocks * d;

    BlockSystem bs{p, nblocks, {}, CMatrix::Zero(M, M), CMatrix::Zero(M, M), CMatrix::Zero(M, M),
                   CMatrix::Zero(M, M), CMatrix::Zero(M, M)};
    for (int n = 0; n <= nblocks; ++n)
        bs.blocks.push_back(block_coefficients(p, n));

    for (int n = 0; n < nblocks; ++n) {
        const auto& b = bs.blocks[n];
        bs.X.block(n * d, n * d, d, d) = b.B;
        bs.Y.block(n * d, n * d, d, d) = b.B.transpose();
        bs.R.block(n * d, n * d, d, d) = b.R;
        if (n + 1 < nblocks) {
            bs.X.block(n * d, (n + 1) * d, d, d) = bs.blocks[n + 1].C;
            bs.X.block((n + 1) * d, n * d, d, d) = b.A;
            bs.Y.block(n * d, (n + 1) * d, d, d) = b.A.transpose();
        }
    }

    for (int m = 0; m < M; ++m) {
        if (m + 1 < M)
            bs.flat_X(m + 1, m) = sqrt_number(p, m + 1);
        if (m >= d)
            bs.flat_X(m - d, m) = normalized_alpha(p, m);
        if (m >= 1)
            bs.flat_Y(m - 1, m) = sqrt_number(p, m);
    }
    return bs;
}

CMatrix recurrence_matrix(const BlockSystem& bs)
{
    const int d = bs.params.d();
    const int M = bs.nblocks * d;
    CMatrix J = CMatrix::Zero(M, M);
    for (int n = 0; n < bs.nblocks; ++n) {
        const auto& b = bs.blocks[n];
        J.block(n * d, n * d, d, d) = b.B;
        if (n + 1 < bs.nblocks)
            J.block(n * d, (n + 1) * d, d, d) = b.A;
        if (n > 0)
            J.block(n * d, (n - 1) * d, d, d) = b.C;
    }
    return J;
}

Report verify_vector_recurrences(const BlockSystem& bs, const std::vector<cd>& samples)
{
    const auto& p = bs.params;
    const int d = p.d();
    const int top = bs.nblocks * d;
    const HermiteFamily<double> fam(p, top, HermiteRoute::operational);
    const auto Y = dunkl_op<double>(p);
    const cd eps = root_of_unity<double>(p.lambda(), 1);

    auto vec_at = [&](int n, auto&& eval) {
        Vec v = Vec::Zero(d);
        if (n < 0)
            return v;
        for (int j = 0; j < d; ++j)
            v(j) = eval(fam.normalized(n * d + j));
        return v;
    };
    auto rel = [](const Vec& lhs, const Vec& rhs) {
        const double scale = std::max({1.0, lhs.cwiseAbs().maxCoeff(), rhs.cwiseAbs().maxCoeff()});
        return (lhs - rhs).cwiseAbs().maxCoeff() / scale;
    };

    Check cx{"position_recurrence", 0, p.tol()};
    Check cy{"lowering_recurrence", 0, p.tol()};
    Check cs{"reflection_eigen", 0, p.tol()};
    for (const cd x : samples) {
        auto value = [x](const DensePoly<double>& h) { return h(x); };
        auto lowered = [&](const DensePoly<double>& h) { return Y(h)(x); };
        auto reflected = [&](const DensePoly<double>& h) { return h(eps * x); };
        for (int n = 0; n + 2 <= bs.nblocks; ++n) {
            const auto& b = bs.blocks[n];
            const Vec h_prev = vec_at(n - 1, value);
            const Vec h_n = vec_at(n, value);
            const Vec h_next = vec_at(n + 1, value);

            cx.absorb(rel(x * h_n, b.A * h_next + b.B * h_n + b.C * h_prev));

            Vec y_rhs = b.B.transpose() * h_n;
            if (n > 0)
                y_rhs += bs.blocks[n - 1].A.transpose() * h_prev;
            cy.absorb(rel(vec_at(n, lowered), y_rhs));

            cs.absorb(rel(vec_at(n, reflected), b.R * h_n));
        }
    }
    Report r("recurrences");
    r.add(cx);
    r.add(cy);
    r.add(cs);
    return r;
}

Report commutator_spectrum(const BlockSystem& bs)
{
    const auto& p = bs.params;
    const int lambda = p.lambda();
    const int M = static_cast<int>(bs.flat_X.rows());
    const int inner = M - lambda;
    const CMatrix comm = bs.flat_Y * bs.flat_X - bs.flat_X * bs.flat_Y;

    CMatrix expected = CMatrix::Zero(M, M);
    for (int m = 0; m < M; ++m)
        expected(m, m) = 1.0 + cd(p.beta_hat()[m % lambda]);

    Report r("commutator");
    Check diag{"flat_commutator_vs_beta_hat", interior_norm(comm - expected, inner), p.tol()};
    diag.count = std::max(inner, 0);
    r.add(diag);

    const auto fm = fock_matrices(p, std::max(M, lambda));
    const CMatrix fock_comm = fm.lower * fm.raise - fm.raise * fm.lower;
    Check vs{"flat_commutator_vs_fock", interior_norm(comm - fock_comm.topLeftCorner(M, M), inner), p.tol()};
    vs.count = std::max(inner, 0);
    r.add(vs);
    return r;
}

} // namespace cxosc
