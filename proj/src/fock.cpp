#include "cxosc/fock.hpp"

#include "cxosc/analytic.hpp"
#include "cxosc/poly.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace cxosc {

namespace {

using cd = std::complex<double>;

CMatrix matrix_power(const CMatrix& m, int e)
{
    CMatrix out = CMatrix::Identity(m.rows(), m.cols());
    for (int i = 0; i < e; ++i)
        out = out * m;
    return out;
}

double real_sqrt_arg(const AlgebraParams& p, long n)
{
    return double(deformed_number_ext(p, n).real());
}

} // namespace

FockMatrices fock_matrices(const AlgebraParams& p, int dim)
{
    if (!p.positive())
        throw ParamError("Fock representation needs positive parameters");
    if (dim < p.lambda())
        throw ParamError("Fock truncation must be at least lambda");

    const int lambda = p.lambda();
    FockMatrices fm{p, dim, CMatrix::Zero(dim, dim), CMatrix::Zero(dim, dim), CMatrix::Zero(dim, dim),
                    CMatrix::Zero(dim, dim), {}};
    for (int n = 0; n < dim; ++n) {
        fm.number(n, n) = double(n);
        fm.klein(n, n) = root_of_unity<double>(lambda, n);
        if (n + 1 < dim)
            fm.raise(n + 1, n) = std::sqrt(real_sqrt_arg(p, n + 1));
        if (n >= 1)
            fm.lower(n - 1, n) = std::sqrt(real_sqrt_arg(p, n));
    }

    std::vector<CMatrix> spowers;
    spowers.push_back(CMatrix::Identity(dim, dim));
    for (int j = 1; j < lambda; ++j)
        spowers.push_back(spowers.back() * fm.klein);
    for (int i = 0; i < lambda; ++i) {
        CMatrix proj = CMatrix::Zero(dim, dim);
        for (int j = 0; j < lambda; ++j)
            proj += root_of_unity<double>(lambda, -long(i) * j) * spowers[j];
        fm.projections.push_back(proj / double(lambda));
    }
    return fm;
}

double interior_norm(const CMatrix& m, int size)
{
    size = std::min<int>(size, static_cast<int>(m.rows()));
    if (size <= 0)
        return 0;
    return m.topLeftCorner(size, size).cwiseAbs().maxCoeff();
}

Report verify_algebra(const FockMatrices& fm)
{
    const auto& p = fm.params;
    const int lambda = p.lambda();
    const int dim = fm.dim;
    const int inner = dim - lambda;
    const double tol = p.tol();
    const CMatrix I = CMatrix::Identity(dim, dim);
    const cd eps = root_of_unity<double>(lambda, 1);
    const auto& am = fm.lower;
    const auto& ap = fm.raise;
    const auto& s = fm.klein;

    CMatrix beta_sum = CMatrix::Zero(dim, dim);
    CMatrix spow = I;
    for (int i = 1; i < lambda; ++i) {
        spow = spow * s;
        beta_sum += cd(p.beta()[i]) * spow;
    }
    CMatrix beta_hat_sum = CMatrix::Zero(dim, dim);
    for (int j = 0; j < lambda; ++j)
        beta_hat_sum += cd(p.beta_hat()[j]) * fm.projections[j];

    const CMatrix comm = am * ap - ap * am;

    Report r("fock");
    auto add = [&](const std::string& name, const CMatrix& residual, int size) {
        Check c{name, interior_norm(residual, size), tol};
        c.count = 1;
        r.add(c);
    };
    add("commutator_beta", comm - I - beta_sum, inner);
    add("commutator_beta_hat", comm - I - beta_hat_sum, inner);
    add("number_lower", fm.number * am - am * fm.number + am, inner);
    add("number_raise", fm.number * ap - ap * fm.number - ap, inner);
    add("lower_klein", am * s - eps * s * am, inner);
    add("raise_klein", ap * s - std::conj(eps) * s * ap, inner);

    double shift_res = 0, idem = 0, herm = 0, orth = 0;
    CMatrix total = CMatrix::Zero(dim, dim);
    for (int i = 0; i < lambda; ++i) {
        const auto& Pi = fm.projections[i];
        const auto& Pnext = fm.projections[(i + 1) % lambda];
        shift_res = std::max(shift_res, interior_norm(ap * Pi - Pnext * ap, inner));
        idem = std::max(idem, interior_norm(Pi * Pi - Pi, dim));
        herm = std::max(herm, interior_norm(Pi - Pi.adjoint(), dim));
        for (int j = 0; j < lambda; ++j)
            if (j != i)
                orth = std::max(orth, interior_norm(Pi * fm.projections[j], dim));
        total += Pi;
    }
    Check c_shift{"raise_projection_shift", shift_res, tol};
    c_shift.count = lambda;
    r.add(c_shift);
    Check c_idem{"projection_idempotent", idem, tol};
    c_idem.count = lambda;
    r.add(c_idem);
    Check c_herm{"projection_hermitian", herm, tol};
    c_herm.count = lambda;
    r.add(c_herm);
    Check c_orth{"projection_orthogonal", orth, tol};
    c_orth.count = lambda * (lambda - 1);
    r.add(c_orth);
    add("projection_resolution", total - I, dim);
    add("klein_order", matrix_power(s, lambda) - I, dim);
    if (p.hermitian())
        add("raise_is_adjoint", ap - am.adjoint(), dim);
    return r;
}

CMatrix power_commutator_weight(const FockMatrices& fm, int n)
{
    const auto& p = fm.params;
    const int lambda = p.lambda();
    CMatrix w = double(n) * CMatrix::Identity(fm.dim, fm.dim);
    CMatrix spow = CMatrix::Identity(fm.dim, fm.dim);
    for (int i = 1; i < lambda; ++i) {
        spow = spow * fm.klein;
        const cd ratio = (root_of_unity<double>(lambda, long(n) * i) - 1.0) / (root_of_unity<double>(lambda, i) - 1.0);
        w += cd(p.beta()[i]) * ratio * spow;
    }
    return w;
}

Report verify_power_commutators(const FockMatrices& fm, int n)
{
    if (n < 1 || 2 * n > fm.dim)
        throw ParamError("verify_power_commutators needs 1 <= n <= dim/2");
    const auto& p = fm.params;
    const int lambda = p.lambda();
    const int dim = fm.dim;
    const int inner = dim - std::max(lambda, n + 1);
    const double tol = p.tol();
    const auto& am = fm.lower;
    const auto& ap = fm.raise;

    const CMatrix am_n = matrix_power(am, n);
    const CMatrix ap_n = matrix_power(ap, n);
    const CMatrix am_n1 = matrix_power(am, n - 1);
    const CMatrix ap_n1 = matrix_power(ap, n - 1);
    const CMatrix w = power_commutator_weight(fm, n);

    Report r("powers");
    // residuals are relative to the largest entry of the products compared
    auto add = [&](const std::string& name, const CMatrix& lhs, const CMatrix& rhs, int size) {
        const double scale = std::max({1.0, interior_norm(lhs, size), interior_norm(rhs, size)});
        Check c{name, interior_norm(lhs - rhs, size) / scale, tol};
        c.count = 1;
        r.add(c);
    };
    const CMatrix am_n_ap = am_n * ap, ap_am_n = ap * am_n;
    const CMatrix am_ap_n = am * ap_n, ap_n_am = ap_n * am;
    add("lower_power_commutator", am_n_ap, ap_am_n + w * am_n1, inner);
    add("raise_power_commutator", am_ap_n, ap_n_am + ap_n1 * w, inner);
    add("number_lower_power", fm.number * am_n, am_n * fm.number - double(n) * am_n, inner);
    add("number_raise_power", fm.number * ap_n, ap_n * fm.number + double(n) * ap_n, inner);

    auto cyclic = [&](int e) {
        const int size = dim - lambda;
        const CMatrix am_e = matrix_power(am, e);
        const CMatrix lhs = am_e * ap;
        const CMatrix rhs = ap * am_e + double(e) * matrix_power(am, e - 1);
        return interior_norm(lhs - rhs, size) / std::max({1.0, interior_norm(lhs, size), interior_norm(rhs, size)});
    };
    Check cor{"cyclic_power_commutator", cyclic(lambda), tol};
    cor.count = 1;
    if (n % lambda == 0 && n != lambda) {
        cor.value = std::max(cor.value, cyclic(n));
        cor.count = 2;
    }
    r.add(cor);
    return r;
}

CMatrix bargmann_matrix(const AlgebraParams& p, int dim, bool lowering)
{
    const auto op = lowering ? dunkl_op<double>(p) : multiply_op<double>();
    std::vector<DensePoly<double>> basis;
    for (int n = 0; n <= dim; ++n)
        basis.push_back(orthonormal_monomial<double>(p, n));
    CMatrix m = CMatrix::Zero(dim, dim);
    for (int n = 0; n < dim; ++n) {
        const auto image = op(basis[n]);
        for (int r = 0; r < dim; ++r)
            m(r, n) = bergmann_inner<double>(p, image, basis[r]);
    }
    return m;
}

} // namespace cxosc
