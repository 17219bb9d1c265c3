#include "cxosc/suites.hpp"

#include "cxosc/analytic.hpp"
#include "cxosc/blocks.hpp"
#include "cxosc/fock.hpp"
#include "cxosc/functionals.hpp"
#include "cxosc/hermite.hpp"
#include "cxosc/poly.hpp"
#include "cxosc/sampling.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace cxosc {

namespace {

template <class C>
double rel(C a, C b)
{
    using R = typename C::value_type;
    const R scale = std::max({R(1), std::abs(a), std::abs(b)});
    return double(std::abs(a - b) / scale);
}

Check skipped(const std::string& name, double tol, const std::string& why)
{
    Check c{name, 0.0, tol};
    c.note = "skipped: " + why;
    return c;
}

template <class Real>
Report algebra_suite(const AlgebraParams& p, const SuiteOptions& opts)
{
    const int lambda = p.lambda();
    const double tol = p.tol();
    Report r("algebra");

    Check fact{"factorial_pochhammer", 0.0, tol};
    for (int s = 0; s < lambda; ++s)
        for (int n = 0; n <= 8; ++n) {
            ext_complex rhs = std::pow(ext_real(lambda), ext_real(n * lambda + s));
            for (int i = 1; i <= n; ++i)
                rhs *= ext_real(i);
            for (int k = 1; k <= s; ++k)
                rhs *= pochhammer(p.alpha(k), n + 1);
            for (int k = s + 1; k < lambda; ++k)
                rhs *= pochhammer(p.alpha(k), n);
            fact.absorb(rel(deformed_factorial_ext(p, long(n) * lambda + s), rhs));
        }
    r.add(fact);

    Check dft{"beta_hat_dft", 0.0, tol};
    for (int j = 0; j < lambda; ++j) {
        ext_complex acc = 0;
        for (int i = 0; i < lambda; ++i)
            acc += root_of_unity<ext_real>(lambda, long(i) * j) * p.beta()[i];
        dft.absorb(rel(acc, p.beta_hat()[j]));
    }
    r.add(dft);

    Check period{"deformed_number_periodicity", 0.0, tol};
    for (int n = 0; n <= opts.degree; ++n)
        period.absorb(rel(deformed_number_ext(p, n + lambda), deformed_number_ext(p, n) + ext_real(lambda)));
    r.add(period);

    const int deg = std::max(opts.degree, lambda + 1);
    Check comm{"dunkl_commutators", 0.0, tol};
    for (int n = 1; n <= lambda + 1; ++n)
        comm.absorb(double(commutator_residual<Real>(p, n, deg)));
    r.add(comm);

    BandOperator<Real> s_pow = identity_op<Real>();
    for (int j = 0; j < lambda; ++j)
        s_pow = reflection_op<Real>(lambda) * s_pow;
    Check order{"reflection_order", double(operator_residual(s_pow, identity_op<Real>(), deg)), tol};
    order.count = 1;
    r.add(order);

    Check ham{"hamiltonian_spectrum", 0.0, tol};
    for (int n = 0; n <= opts.degree; ++n)
        ham.absorb(double(hamiltonian_level<Real>(p, n).residual));
    r.add(ham);

    if (!p.positive()) {
        r.add(skipped("fock_relations", tol, "parameters not positive"));
        return r;
    }
    const int dim = std::max(2 * lambda + 2, std::min(opts.degree, 64));
    const auto fm = fock_matrices(p, dim);
    r.merge(verify_algebra(fm));
    Check powers{"fock_power_commutators", 0.0, tol};
    for (int n = 1; n <= std::min(6, dim / 2); ++n)
        powers.absorb(verify_power_commutators(fm, n).max_residual());
    r.add(powers);

    Check model{"fock_matches_bargmann", 0.0, tol};
    model.absorb(interior_norm(bargmann_matrix(p, dim, true) - fm.lower, dim));
    model.absorb(interior_norm(bargmann_matrix(p, dim, false) - fm.raise, dim));
    r.add(model);
    return r;
}

template <class Real>
Report hermite_suite(const AlgebraParams& p, const SuiteOptions& opts)
{
    using scalar = std::complex<Real>;
    const int N = std::max(opts.degree, 2);
    const int lambda = p.lambda();
    const double tol = p.tol();
    Report r("hermite");

    const HermiteFamily<Real> op(p, N, HermiteRoute::operational);
    const HermiteFamily<Real> ex(p, N, HermiteRoute::explicit_sum);
    const HermiteFamily<Real> rec(p, N, HermiteRoute::recurrence);

    Check routes{"route_equivalence", 0.0, tol};
    Check sym{"d_symmetry_exact", 0.0, 0.0};
    for (int n = 0; n <= N; ++n) {
        routes.absorb(double(poly_residual(op.monic(n), ex.monic(n))));
        routes.absorb(double(poly_residual(op.monic(n), rec.monic(n))));
        sym.absorb(is_d_symmetric(op.monic(n), n, lambda) && is_d_symmetric(rec.monic(n), n, lambda) ? 0.0 : 1.0);
    }
    r.add(routes);
    r.add(sym);

    Check lr{"lowering_raising", 0.0, tol};
    for (int n = 1; n < N; ++n)
        lr.absorb(double(lowering_raising_residual(rec, n)));
    r.add(lr);

    Check de{"differential_difference", 0.0, tol};
    for (int n = 0; n <= N - 1; ++n)
        de.absorb(double(diff_eq_residual(op, n)));
    r.add(de);

    Check gen{"generating_function", 0.0, tol};
    for (const scalar x0 : {scalar(1, 0), scalar(-2, 1)})
        gen.absorb(double(generating_function_residual<Real>(p, x0, N)));
    r.add(gen);

    Check inv{"inversion_round_trip", 0.0, tol};
    for (int m = 0; m <= N; ++m) {
        const auto c = inversion_expand<Real>(p, m);
        DensePoly<Real> sum;
        Real scale = 1;
        for (int n = 0; n < static_cast<int>(c.size()); ++n) {
            const auto term = op.monic(m - n * lambda) * c[n];
            for (int k = 0; k <= term.degree(); ++k)
                scale = std::max(scale, std::abs(term.coeff(k)));
            sum += term;
        }
        // cancellation between the summands sets the attainable accuracy
        const auto diff = sum - DensePoly<Real>::monomial(m);
        Real worst = 0;
        for (int k = 0; k <= diff.degree(); ++k)
            worst = std::max(worst, std::abs(diff.coeff(k)));
        inv.absorb(double(worst / scale));
    }
    r.add(inv);
    return r;
}

template <class Real>
Report orthogonality_suite(const AlgebraParams& p, const SuiteOptions& opts)
{
    const int lambda = p.lambda();
    const int d = p.d();
    const double tol = p.tol();
    Report r("orthogonality");
    r.merge(verify_d_orthogonality<Real>(p, opts.degree));

    // Pairing both sides of the inversion formula must reproduce the moments.
    const HermiteFamily<Real> fam(p, opts.degree, HermiteRoute::operational);
    Check cons{"moments_vs_inversion", 0.0, tol};
    for (int k = 0; k < d; ++k)
        for (int m = 0; m <= opts.degree; ++m) {
            const auto c = inversion_expand<Real>(p, m);
            std::complex<Real> acc = 0;
            for (int n = 0; n < static_cast<int>(c.size()); ++n)
                acc += c[n] * pair<Real>(p, k, fam.monic(m - n * lambda));
            cons.absorb(rel(acc, moment<Real>(p, k, m)));
        }
    r.add(cons);

    if (!p.positive()) {
        r.add(skipped("vector_orthogonality", tol, "parameters not positive"));
        return r;
    }
    Check upper{"delta_upper_triangular", 0.0, tol};
    Check diag{"delta_diagonal_regular", 0.0, tol, Check::Bound::lower};
    Check lower{"vector_orthogonality_zero_blocks", 0.0, tol};
    const int top = std::min(6, std::max(0, opts.degree / std::max(d, 1) - 1));
    bool first = true;
    for (int n = 0; n <= top; ++n) {
        const auto delta = vector_orthogonality_delta<Real>(p, n);
        Real scale = 1;
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j)
                scale = std::max(scale, std::abs(delta(i, j)));
        for (int i = 0; i < d; ++i) {
            for (int j = 0; j < i; ++j)
                upper.absorb(double(std::abs(delta(i, j)) / scale));
            const double dv = double(std::abs(delta(i, i)) / scale);
            diag.value = first ? dv : std::min(diag.value, dv);
            diag.count += 1;
            first = false;
        }
        lower.absorb(double(vector_orthogonality_lower_residual<Real>(p, n)));
    }
    r.add(upper);
    r.add(diag);
    r.add(lower);
    return r;
}

template <class Real>
Report bargmann_suite(const AlgebraParams& p, const SuiteOptions& opts)
{
    using scalar = std::complex<Real>;
    using poly = DensePoly<Real>;
    const int lambda = p.lambda();
    const double tol = p.tol();
    Report r("bargmann");

    Check agree{"series_vs_hypergeometric", 0.0, tol};
    const int T = 80;
    const auto series = SeriesFunction<Real>::gen_exp(p, T);
    for (Real radius : {Real(0.5), Real(1), Real(1.5), Real(2)})
        for (int k = 0; k < 8; ++k) {
            const scalar z = std::polar(radius, Real(2) * Real(3.14159265358979323846L) * Real(k) / Real(8));
            agree.absorb(rel(series(z), gen_exp_hypergeom<Real>(p, z)));
        }
    r.add(agree);

    Check eig{"gen_exp_eigenfunction", 0.0, tol};
    const auto Y = dunkl_op<Real>(p);
    for (const scalar rho : {scalar(1, 0), scalar(0, 2)}) {
        auto trunc = [&](int deg) {
            std::vector<scalar> c(deg + 1);
            scalar power = 1;
            for (int n = 0; n <= deg; ++n) {
                c[n] = power / deformed_factorial<Real>(p, n);
                power *= rho;
            }
            return poly(std::move(c));
        };
        eig.absorb(double(poly_residual(Y(trunc(30)), trunc(29) * rho)));
    }
    r.add(eig);

    if (!p.positive()) {
        r.add(skipped("inner_product", tol, "parameters not positive"));
        return r;
    }

    Check ortho{"orthonormality", 0.0, tol};
    const int top = std::min(25, std::max(opts.degree, 1));
    for (int n = 0; n <= top; ++n)
        for (int m = 0; m <= top; ++m) {
            const auto v = bergmann_inner<Real>(p, orthonormal_monomial<Real>(p, n), orthonormal_monomial<Real>(p, m));
            ortho.absorb(double(std::abs(v - scalar(n == m ? 1 : 0))));
        }
    r.add(ortho);

    std::mt19937_64 rng(opts.seed);
    Check adj{"adjointness", 0.0, tol};
    const int max_deg = std::min(20, std::max(opts.degree, 1));
    for (int t = 0; t < opts.random_pairs; ++t) {
        const int df = 1 + int(rng() % unsigned(max_deg));
        const int dg = 1 + int(rng() % unsigned(max_deg));
        const poly f = random_poly(df, rng).template cast<Real>();
        const poly g = random_poly(dg, rng).template cast<Real>();
        adj.absorb(rel(bergmann_inner<Real>(p, Y(f), g), bergmann_inner<Real>(p, f, g.shifted(1))));
    }
    r.add(adj);

    Check repro{"kernel_reproducing", 0.0, tol};
    const poly square = poly::monomial(2);
    const poly probe = random_poly(std::min(10, max_deg), rng).template cast<Real>();
    for (const scalar w : {scalar(0.7, 0), scalar(-0.3, 0.4)}) {
        const auto section = SeriesFunction<Real>::kernel_section(p, w, 40).as_poly();
        repro.absorb(rel(bergmann_inner<Real>(p, square, section), square(w)));
        repro.absorb(rel(bergmann_inner<Real>(p, probe, section), probe(w)));
    }
    r.add(repro);
    (void)lambda;
    return r;
}

Report blocks_suite(const AlgebraParams& p, const SuiteOptions& opts)
{
    const double tol = p.tol();
    Report r("blocks");
    if (!p.positive()) {
        r.add(skipped("block_realization", tol, "parameters not positive"));
        return r;
    }
    const int nblocks = std::max(3, std::min(12, opts.degree / p.d()));
    const auto bs = assemble(p, nblocks);
    r.merge(verify_vector_recurrences(bs, {{0.3, 0.0}, {-1.1, 0.0}, {2.7, 0.5}}));
    r.merge(commutator_spectrum(bs));

    Check layout{"blocked_matches_flat", 0.0, tol};
    layout.absorb(interior_norm(recurrence_matrix(bs).transpose() - bs.flat_X, static_cast<int>(bs.flat_X.rows())));
    r.add(layout);
    return r;
}

} // namespace

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names{"all", "algebra", "hermite", "orthogonality", "bargmann", "blocks"};
    return names;
}

template <class Real>
Report run_suite(const std::string& name, const AlgebraParams& p, const SuiteOptions& opts)
{
    if (name == "algebra")
        return algebra_suite<Real>(p, opts);
    if (name == "hermite")
        return hermite_suite<Real>(p, opts);
    if (name == "orthogonality")
        return orthogonality_suite<Real>(p, opts);
    if (name == "bargmann")
        return bargmann_suite<Real>(p, opts);
    if (name == "blocks")
        return blocks_suite(p, opts);
    if (name == "all") {
        Report all("all");
        for (const auto& n : suite_names())
            if (n != "all")
                all.merge(run_suite<Real>(n, p, opts));
        return all;
    }
    throw std::invalid_argument("unknown suite '" + name + "'");
}

template Report run_suite<double>(const std::string&, const AlgebraParams&, const SuiteOptions&);
template Report run_suite<long double>(const std::string&, const AlgebraParams&, const SuiteOptions&);

} // namespace cxosc
