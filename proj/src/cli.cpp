#include "cxosc/cli.hpp"

#include "cxosc/analytic.hpp"
#include "cxosc/blocks.hpp"
#include "cxosc/fock.hpp"
#include "cxosc/functionals.hpp"
#include "cxosc/hermite.hpp"
#include "cxosc/io.hpp"
#include "cxosc/suites.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

namespace cxosc {

using ojson = nlohmann::ordered_json;

nlohmann::ordered_json to_json(const RunConfig& cfg)
{
    ojson nu = ojson::array();
    for (auto v : cfg.nu)
        nu.push_back(format_complex(v));
    ojson j;
    j["lambda"] = cfg.lambda;
    j["nu"] = std::move(nu);
    j["precision"] = cfg.precision == Precision::extended ? "extended" : "double";
    j["tol"] = cfg.tol;
    j["degree"] = cfg.degree;
    j["format"] = cfg.format;
    j["seed"] = cfg.seed;
    return j;
}

RunConfig run_config_from_json(const nlohmann::json& j)
{
    RunConfig cfg;
    cfg.lambda = j.at("lambda").get<int>();
    cfg.nu.clear();
    for (const auto& v : j.at("nu"))
        cfg.nu.push_back(parse_complex(v.get<std::string>()));
    const auto prec = j.at("precision").get<std::string>();
    if (prec != "double" && prec != "extended")
        throw std::invalid_argument("precision must be 'double' or 'extended'");
    cfg.precision = prec == "extended" ? Precision::extended : Precision::double_precision;
    cfg.tol = j.at("tol").get<double>();
    cfg.degree = j.at("degree").get<int>();
    cfg.format = j.at("format").get<std::string>();
    cfg.seed = j.at("seed").get<std::uint64_t>();
    return cfg;
}

nlohmann::ordered_json params_to_json(const AlgebraParams& p, Precision precision)
{
    auto list = [](const std::vector<ext_complex>& v) {
        ojson a = ojson::array();
        for (auto z : v)
            a.push_back(format_complex(std::complex<double>(z)));
        return a;
    };
    ojson j;
    j["lambda"] = p.lambda();
    j["d"] = p.d();
    j["nu"] = list(p.nu());
    j["nu_hat"] = list(p.nu_hat());
    j["beta_hat"] = list(p.beta_hat());
    j["hermitian"] = p.hermitian();
    j["positive"] = p.positive();
    j["tol"] = p.tol();
    j["precision"] = precision == Precision::extended ? "extended" : "double";
    return j;
}

namespace {

struct CommandState {
    RunConfig cfg;
    std::string nu_text;
    std::string precision_text = "double";
};

void add_common(CLI::App* sub, CommandState& st)
{
    sub->add_option("--lambda", st.cfg.lambda, "order of the cyclic group (>= 2)")->required();
    sub->add_option("--nu", st.nu_text, "comma-separated complex literals a+bi (lambda or lambda-1 entries)")
        ->required()
        ->allow_extra_args(false);
    sub->add_option("--precision", st.precision_text, "double | extended")
        ->check(CLI::IsMember({"double", "extended"}));
    sub->add_option("--tol", st.cfg.tol, "relative tolerance");
    sub->add_option("--format", st.cfg.format, "json | csv")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--seed", st.cfg.seed, "seed for randomized checks");
}

void finish_config(CommandState& st)
{
    st.cfg.nu = parse_complex_list(st.nu_text);
    st.cfg.precision = st.precision_text == "extended" ? Precision::extended : Precision::double_precision;
}

ojson header(const std::string& command, const CommandState& st, const AlgebraParams& p)
{
    ojson j;
    j["command"] = command;
    j["params"] = params_to_json(p, st.cfg.precision);
    return j;
}

template <class Real>
int cmd_hermite(const CommandState& st, int n, const std::string& route_name, bool normalized, std::ostream& out)
{
    const auto p = st.cfg.params();
    static const std::map<std::string, HermiteRoute> routes{{"operational", HermiteRoute::operational},
                                                            {"explicit", HermiteRoute::explicit_sum},
                                                            {"recurrence", HermiteRoute::recurrence}};
    const HermiteFamily<Real> fam(p, n, routes.at(route_name));
    if (normalized && !fam.has_normalized())
        throw ParamError("normalized table requested but parameters are not positive");
    auto member = [&](int k) -> const DensePoly<Real>& { return normalized ? fam.normalized(k) : fam.monic(k); };

    if (st.cfg.format == "csv") {
        out << "n";
        for (int k = 0; k <= n; ++k)
            out << ",z^" << k;
        out << '\n';
        for (int row = 0; row <= n; ++row) {
            out << row;
            for (int k = 0; k <= n; ++k) {
                const auto c = std::complex<double>(member(row).coeff(k));
                out << ",\"" << c.real() << ',' << c.imag() << '"';
            }
            out << '\n';
        }
        return exit_ok;
    }
    ojson j = header("hermite", st, p);
    j["route"] = to_string(fam.route());
    j["normalized"] = normalized;
    ojson rows = ojson::array();
    for (int k = 0; k <= n; ++k) {
        ojson row = poly_to_json(member(k));
        row["n"] = k;
        rows.push_back(std::move(row));
    }
    j["rows"] = std::move(rows);
    out << j.dump(2) << '\n';
    return exit_ok;
}

ojson series_json(std::complex<double> value, int truncation, double tail)
{
    ojson j;
    j["value"] = complex_to_json(value);
    j["truncation"] = truncation;
    j["tail_bound"] = tail;
    return j;
}

template <class Real>
int cmd_genexp(const CommandState& st, std::complex<double> z, int truncation, std::ostream& out)
{
    const auto p = st.cfg.params();
    const std::complex<Real> zr(z);
    const int T = truncation > 0 ? truncation : gen_exp_truncation<Real>(p, zr) + 10;
    const auto series = gen_exp_series<Real>(p, zr, T);
    const auto hyper = gen_exp_hypergeom<Real>(p, zr);
    const double delta = double(std::abs(series.value - hyper));
    const bool pass = delta <= st.cfg.tol * std::max(1.0, double(std::abs(series.value)));

    ojson j = header("genexp", st, p);
    j["z"] = complex_to_json(z);
    j["series"] = series_json(std::complex<double>(series.value), series.truncation, double(series.tail_bound));
    j["hypergeometric"] = complex_to_json(std::complex<double>(hyper));
    j["delta"] = delta;
    j["pass"] = pass;
    out << j.dump(2) << '\n';
    return pass ? exit_ok : exit_failed;
}

template <class Real>
int cmd_kernel(const CommandState& st, std::complex<double> z, std::complex<double> w, int truncation,
               std::ostream& out)
{
    const auto p = st.cfg.params();
    const std::complex<Real> zr(z), wr(w);
    const int T = truncation > 0 ? truncation : gen_exp_truncation<Real>(p, zr * std::conj(wr)) + 10;
    const auto k = kernel_eval<Real>(p, zr, wr, T);
    ojson j = header("kernel", st, p);
    j["z"] = complex_to_json(z);
    j["w"] = complex_to_json(w);
    const ojson body = series_json(std::complex<double>(k.value), k.truncation, double(k.tail_bound));
    for (auto it = body.begin(); it != body.end(); ++it)
        j[it.key()] = it.value();
    out << j.dump(2) << '\n';
    return exit_ok;
}

template <class Real>
int cmd_moments(const CommandState& st, int max_order, std::ostream& out)
{
    const auto p = st.cfg.params();
    if (st.cfg.format == "csv") {
        out << "m";
        for (int k = 0; k < p.d(); ++k)
            out << ",u" << k;
        out << '\n';
        for (int m = 0; m <= max_order; ++m) {
            out << m;
            for (int k = 0; k < p.d(); ++k) {
                const auto v = std::complex<double>(moment<Real>(p, k, m));
                out << ",\"" << v.real() << ',' << v.imag() << '"';
            }
            out << '\n';
        }
        return exit_ok;
    }
    ojson j = header("moments", st, p);
    ojson table = ojson::array();
    for (int k = 0; k < p.d(); ++k) {
        ojson col = ojson::array();
        for (int m = 0; m <= max_order; ++m)
            col.push_back(complex_to_json(std::complex<double>(moment<Real>(p, k, m))));
        ojson entry;
        entry["k"] = k;
        entry["moments"] = std::move(col);
        table.push_back(std::move(entry));
    }
    j["functionals"] = std::move(table);
    out << j.dump(2) << '\n';
    return exit_ok;
}

int cmd_verify(const CommandState& st, const std::string& suite, int pairs, std::ostream& out, std::ostream& err)
{
    const auto p = st.cfg.params();
    SuiteOptions opts;
    opts.degree = st.cfg.degree;
    opts.seed = st.cfg.seed;
    opts.random_pairs = pairs;
    const Report r = st.cfg.precision == Precision::extended ? run_suite<long double>(suite, p, opts)
                                                              : run_suite<double>(suite, p, opts);
    ojson j = header("verify", st, p);
    j["config"] = to_json(st.cfg);
    const ojson body = r.to_json();
    for (auto it = body.begin(); it != body.end(); ++it)
        j[it.key()] = it.value();
    out << j.dump(2) << '\n';
    if (!r.pass()) {
        for (const auto& c : r.checks())
            if (!c.pass())
                err << "check failed: " << c.name << " value=" << c.value << " tol=" << c.tol << '\n';
        return exit_failed;
    }
    return exit_ok;
}

void emit_matrix(const CMatrix& m, int block_size, const std::string& format, ojson& j, std::ostream& out)
{
    if (format == "csv")
        out << matrix_to_csv(m, block_size);
    else
        j["matrix"] = matrix_to_json(m);
}

int cmd_fock(const CommandState& st, int dim, const std::string& what, int power_n, const std::string& report_path,
             std::ostream& out)
{
    const auto p = st.cfg.params();
    const auto fm = fock_matrices(p, dim);
    CMatrix m;
    if (what == "lower")
        m = fm.lower;
    else if (what == "raise")
        m = fm.raise;
    else if (what == "number")
        m = fm.number;
    else if (what == "klein")
        m = fm.klein;
    else if (what.rfind("pi", 0) == 0) {
        const int i = std::stoi(what.substr(2));
        if (i < 0 || i >= p.lambda())
            throw ParamError("projection index out of range");
        m = fm.projections[i];
    } else
        throw ParamError("unknown Fock matrix '" + what + "'");

    Report r("fock");
    r.merge(verify_algebra(fm));
    for (int n = 1; n <= std::min(power_n, dim / 2); ++n) {
        Report pr = verify_power_commutators(fm, n);
        Report tagged("n" + std::to_string(n));
        tagged.merge(pr);
        r.merge(tagged);
    }

    ojson j = header("fock", st, p);
    j["dim"] = dim;
    j["what"] = what;
    emit_matrix(m, 1, st.cfg.format, j, out);
    if (st.cfg.format == "json") {
        j["report"] = r.to_json();
        out << j.dump(2) << '\n';
    }
    if (!report_path.empty()) {
        ojson rep = header("fock", st, p);
        rep["report"] = r.to_json();
        std::ofstream f(report_path);
        if (!f)
            throw std::invalid_argument("cannot write report to '" + report_path + "'");
        f << rep.dump(2) << '\n';
    }
    return r.pass() ? exit_ok : exit_failed;
}

int cmd_matrix(const CommandState& st, int nblocks, const std::string& what, std::ostream& out)
{
    const auto p = st.cfg.params();
    const auto bs = assemble(p, nblocks);
    CMatrix m;
    int block = p.d();
    if (what == "X")
        m = bs.X;
    else if (what == "Y")
        m = bs.Y;
    else if (what == "R")
        m = bs.R;
    else if (what == "flatX") {
        m = bs.flat_X;
        block = 1;
    } else if (what == "flatY") {
        m = bs.flat_Y;
        block = 1;
    } else
        throw ParamError("unknown block matrix '" + what + "'");

    ojson j = header("matrix", st, p);
    j["blocks"] = nblocks;
    j["what"] = what;
    emit_matrix(m, block, st.cfg.format, j, out);
    if (st.cfg.format == "json")
        out << j.dump(2) << '\n';
    return exit_ok;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"C_lambda-extended oscillator: generalized Hermite families, moment functionals and matrix "
                 "realizations"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all");

    CommandState st;

    auto* hermite = app.add_subcommand("hermite", "emit the generalized Hermite coefficient table");
    add_common(hermite, st);
    int herm_n = 10;
    std::string route = "operational";
    bool normalized = false;
    hermite->add_option("--n", herm_n, "largest degree")->check(CLI::NonNegativeNumber);
    hermite->add_option("--route", route, "operational | explicit | recurrence")
        ->check(CLI::IsMember({"operational", "explicit", "recurrence"}));
    hermite->add_flag("--normalized", normalized, "emit H_n / sqrt([n]!)");

    auto* genexp = app.add_subcommand("genexp", "evaluate the generalized exponential by series and 0F(lambda-1)");
    add_common(genexp, st);
    std::string z_text = "1";
    int truncation = 0;
    genexp->add_option("--z", z_text, "evaluation point");
    genexp->add_option("--truncation", truncation, "series truncation (0 = automatic)");

    auto* kernel = app.add_subcommand("kernel", "evaluate the reproducing kernel K(z, w)");
    add_common(kernel, st);
    std::string w_text = "1";
    kernel->add_option("--z", z_text, "first argument");
    kernel->add_option("--w", w_text, "second argument (conjugated)");
    kernel->add_option("--truncation", truncation, "series truncation (0 = automatic)");

    auto* moments = app.add_subcommand("moments", "emit the moment table of u_0..u_{d-1}");
    add_common(moments, st);
    int max_order = 12;
    moments->add_option("--m", max_order, "largest moment order")->check(CLI::NonNegativeNumber);

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    add_common(verify, st);
    std::string suite = "all";
    int pairs = 100;
    verify->add_option("--suite", suite, "all | algebra | hermite | orthogonality | bargmann | blocks")
        ->check(CLI::IsMember(suite_names()));
    verify->add_option("--degree", st.cfg.degree, "largest degree exercised")->check(CLI::PositiveNumber);
    verify->add_option("--pairs", pairs, "random pairs for the adjointness check")->check(CLI::NonNegativeNumber);

    auto* fock = app.add_subcommand("fock", "export truncated Fock matrices and their residual report");
    add_common(fock, st);
    int dim = 16;
    std::string fock_what = "lower";
    int power_n = 6;
    std::string report_path;
    fock->add_option("--dim", dim, "truncation dimension");
    fock->add_option("--what", fock_what, "lower | raise | number | klein | pi<i>");
    fock->add_option("--power-n", power_n, "largest power for the commutator-power checks");
    fock->add_option("--report", report_path, "also write the JSON residual report here");

    auto* matrix = app.add_subcommand("matrix", "export the block matrices X, Y, R");
    add_common(matrix, st);
    int nblocks = 4;
    std::string matrix_what = "X";
    matrix->add_option("--blocks", nblocks, "number of d x d blocks")->check(CLI::PositiveNumber);
    matrix->add_option("--what", matrix_what, "X | Y | R | flatX | flatY")
        ->check(CLI::IsMember({"X", "Y", "R", "flatX", "flatY"}));

    auto fail_invalid = [&](const std::string& msg) {
        err << "error: " << msg << '\n';
        ojson j;
        j["error"] = msg;
        j["exit_code"] = exit_invalid;
        out << j.dump(2) << '\n';
        return exit_invalid;
    };

    std::vector<const char*> argv{"cxosc"};
    for (const auto& a : args)
        argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        return fail_invalid(e.what());
    }

    try {
        finish_config(st);
        const bool ext = st.cfg.precision == Precision::extended;
        if (hermite->parsed())
            return ext ? cmd_hermite<long double>(st, herm_n, route, normalized, out)
                       : cmd_hermite<double>(st, herm_n, route, normalized, out);
        if (genexp->parsed())
            return ext ? cmd_genexp<long double>(st, parse_complex(z_text), truncation, out)
                       : cmd_genexp<double>(st, parse_complex(z_text), truncation, out);
        if (kernel->parsed())
            return ext ? cmd_kernel<long double>(st, parse_complex(z_text), parse_complex(w_text), truncation, out)
                       : cmd_kernel<double>(st, parse_complex(z_text), parse_complex(w_text), truncation, out);
        if (moments->parsed())
            return ext ? cmd_moments<long double>(st, max_order, out) : cmd_moments<double>(st, max_order, out);
        if (verify->parsed())
            return cmd_verify(st, suite, pairs, out, err);
        if (fock->parsed())
            return cmd_fock(st, dim, fock_what, power_n, report_path, out);
        if (matrix->parsed())
            return cmd_matrix(st, nblocks, matrix_what, out);
    } catch (const ConvergenceError& e) {
        return fail_invalid(e.what());
    } catch (const std::invalid_argument& e) {
        return fail_invalid(e.what());
    } catch (const std::out_of_range& e) {
        return fail_invalid(e.what());
    }
    return fail_invalid("no subcommand");
}

} // namespace cxosc
