#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "comprat/approximant.hpp"
#include "comprat/balance.hpp"
#include "comprat/csv.hpp"
#include "comprat/errors.hpp"
#include "comprat/matfun.hpp"
#include "comprat/scan.hpp"
#include "comprat/sector.hpp"
#include "comprat/study.hpp"
#include "comprat/version.hpp"

using namespace comprat;

namespace {

// exit codes: 0 ok, 2 usage, 3 numeric domain, 4 parse, 5 linear algebra
constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;
constexpr int kExitParse = 4;
constexpr int kExitSolve = 5;

struct usage_error : std::runtime_error {
    explicit usage_error(const std::string& what) : std::runtime_error(what) {}
};

struct RunConfig {
    std::string command;
    int p = 2;
    int k = -1;
    int k_min = -1;
    int k_max = -1;
    std::string alpha;    // decimal string, parsed under the active context
    std::string epsilon;  // target accuracy for epsilon mode
    bool balance = false;
    long samples = 10000;
    long precision_bits = PrecisionContext::kDefaultBits;
    std::uint64_t seed = 0;
    long n = 8;
    bool assume_spectrum = false;
    std::string in;
    std::string out;
};

std::string mode_name(const RunConfig& cfg) {
    if (cfg.balance) return "balance";
    if (!cfg.epsilon.empty()) return "epsilon";
    return "alpha";
}

void check_modes(const RunConfig& cfg, bool allow_epsilon) {
    int modes = (cfg.alpha.empty() ? 0 : 1) + (cfg.balance ? 1 : 0) + (cfg.epsilon.empty() ? 0 : 1);
    if (modes != 1) {
        throw usage_error("exactly one of --alpha, --balance, --epsilon must be given");
    }
    if (!allow_epsilon && !cfg.epsilon.empty()) {
        throw usage_error("--epsilon is not available for this command");
    }
    if (cfg.epsilon.empty() && cfg.k < 0) {
        throw usage_error("--k is required with --alpha/--balance");
    }
}

std::string config_echo(const RunConfig& cfg) {
    std::ostringstream os;
    os << "# command=" << cfg.command << ", samples=" << cfg.samples << ", seed=" << cfg.seed
       << ", mode=" << mode_name(cfg)
       << ", epsilon_target=" << (cfg.epsilon.empty() ? "none" : cfg.epsilon)
       << ", k_min=" << cfg.k_min << ", k_max=" << cfg.k_max << ", n=" << cfg.n
       << ", in=" << (cfg.in.empty() ? "-" : cfg.in)
       << ", out=" << (cfg.out.empty() ? "-" : cfg.out) << ", version=" << kVersion << "\n";
    return os.str();
}

void emit(const RunConfig& cfg, const std::string& body) {
    if (cfg.out.empty()) {
        std::cout << body;
        return;
    }
    std::ofstream f(cfg.out, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file " + cfg.out);
    f << body;
}

// Resolve the (alpha, k) pair for the selected mode.
Approximant resolve_approximant(RunConfig& cfg, const PrecisionContext& ctx) {
    Real rel_tol = ctx.make(std::string("1e-3"));
    if (cfg.balance) {
        BalanceResult b = balance_alpha(cfg.p, cfg.k, rel_tol, ctx);
        cfg.alpha = format_real(b.alpha, ctx.bits());
        return make_approximant(cfg.p, b.alpha, cfg.k, ctx);
    }
    if (!cfg.epsilon.empty()) {
        Real target = ctx.make(cfg.epsilon);
        cfg.k = static_cast<int>(empirical_k(cfg.p, target, ctx));
        BalanceResult b = balance_alpha(cfg.p, cfg.k, rel_tol, ctx);
        cfg.alpha = format_real(b.alpha, ctx.bits());
        return make_approximant(cfg.p, b.alpha, cfg.k, ctx);
    }
    return make_approximant(cfg.p, ctx.make(cfg.alpha), cfg.k, ctx);
}

int cmd_approx(RunConfig cfg) {
    PrecisionContext ctx(cfg.precision_bits);
    check_modes(cfg, /*allow_epsilon=*/true);
    Approximant a = resolve_approximant(cfg, ctx);
    const long bits = ctx.bits();

    std::vector<Real> xs = sample_grid(ctx.make(0.0), ctx.make(1.0), cfg.samples);
    std::vector<Real> ft = map_samples([&a](const Real& x) { return eval_f_scaled(a, x); }, xs);
    std::vector<Real> roots =
        map_samples([&a](const Real& x) { return proot(x, a.p()); }, xs);

    std::ostringstream os;
    os << "# p=" << cfg.p << ", k=" << a.k() << ", alpha=" << format_real(a.alpha0(), bits)
       << ", eps=" << format_real(rel_error_bound(a), bits) << ", precision_bits=" << bits
       << "\n";
    os << config_echo(cfg);
    os << "x,ftilde,xroot,err\n";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        os << format_real(xs[i], bits) << ',' << format_real(ft[i], bits) << ','
           << format_real(roots[i], bits) << ',' << format_real(ft[i] - roots[i], bits) << "\n";
    }
    emit(cfg, os.str());
    return 0;
}

int cmd_study(RunConfig cfg) {
    PrecisionContext ctx(cfg.precision_bits);
    if (cfg.k_min < 1 || cfg.k_max < cfg.k_min) {
        throw usage_error("study requires --k-min >= 1 and --k-max >= --k-min");
    }
    if (!cfg.alpha.empty() || !cfg.epsilon.empty() || cfg.balance) {
        throw usage_error("study always balances; --alpha/--balance/--epsilon are not accepted");
    }
    StudyOptions opts;
    opts.samples = cfg.samples;
    ConvergenceTable t = convergence_study(cfg.p, cfg.k_min, cfg.k_max, ctx, opts);
    const long bits = ctx.bits();

    std::ostringstream os;
    os << "# p=" << cfg.p << ", k_min=" << cfg.k_min << ", k_max=" << cfg.k_max
       << ", c=" << format_real(t.c, bits) << ", precision_bits=" << bits << "\n";
    os << config_echo(cfg);
    os << "k,alpha,epsilon,n,p_to_ck,log_eps\n";
    for (const StudyRow& row : t.rows) {
        os << row.k << ',' << format_real(row.alpha, bits) << ','
           << format_real(row.epsilon, bits) << ',' << format_real(row.degree, bits) << ','
           << format_real(row.p_to_ck, bits) << ',' << format_real(row.log_eps, bits) << "\n";
    }
    os << "# fit_slope=" << format_real(t.fit.slope, bits) << "\n";
    os << "# fit_intercept=" << format_real(t.fit.intercept, bits) << "\n";
    os << "# fit_r2=" << format_real(t.fit.r_squared, bits) << "\n";
    emit(cfg, os.str());
    return 0;
}

int cmd_sector(RunConfig cfg) {
    PrecisionContext ctx(cfg.precision_bits);
    if (cfg.alpha.empty() || cfg.balance || !cfg.epsilon.empty()) {
        throw usage_error("sector requires --alpha (and no --balance/--epsilon)");
    }
    if (cfg.k < 0) throw usage_error("--k is required");
    Approximant a = make_approximant(cfg.p, ctx.make(cfg.alpha), cfg.k, ctx);
    const long bits = ctx.bits();

    auto [weighted, unweighted] = sector_error_scan(a, a.alpha0(), cfg.samples);
    long alternations = sector_alternation_count(a, a.alpha0(), cfg.samples);
    Real bound = max(a.alpha0(), rel_error_bound(a));

    SectorEvaluator g(a, /*scaled=*/true);
    std::vector<Real> rs = sample_grid(a.alpha0(), ctx.make(1.0), cfg.samples);
    std::vector<Real> errs = map_samples([&g](const Real& r) { return abs(g(r) - 1L); }, rs);

    std::ostringstream os;
    os << "# p=" << cfg.p << ", k=" << cfg.k << ", alpha=" << format_real(a.alpha0(), bits)
       << ", eps=" << format_real(rel_error_bound(a), bits) << ", precision_bits=" << bits
       << "\n";
    os << config_echo(cfg);
    os << "# unweighted_max=" << format_real(unweighted.max_err, bits)
       << ", unweighted_argmax=" << format_real(unweighted.arg_max, bits) << "\n";
    os << "# weighted_max=" << format_real(weighted.max_err, bits)
       << ", weighted_argmax=" << format_real(weighted.arg_max, bits)
       << ", weighted_bound=" << format_real(bound, bits) << "\n";
    os << "# alternations=" << alternations << "\n";
    os << "r,abs_err\n";
    for (std::size_t i = 0; i < rs.size(); ++i) {
        os << format_real(rs[i], bits) << ',' << format_real(errs[i], bits) << "\n";
    }
    emit(cfg, os.str());
    return 0;
}

DenseMatrix read_matrix(const std::string& path, const PrecisionContext& ctx) {
    std::ifstream f(path);
    if (!f) throw parse_error("cannot open matrix file " + path);
    long n = 0;
    if (!(f >> n) || n < 1) throw parse_error("matrix file must start with a positive dimension");
    DenseMatrix m(n, ctx.bits());
    for (long i = 0; i < n; ++i) {
        for (long j = 0; j < n; ++j) {
            std::string tok;
            if (!(f >> tok)) throw parse_error("matrix file ended before n*n entries");
            try {
                m.at(i, j) = ctx.make(tok);
            } catch (const std::domain_error&) {
                throw parse_error("bad matrix entry '" + tok + "'");
            }
        }
    }
    return m;
}

int cmd_matrix(RunConfig cfg) {
    PrecisionContext ctx(cfg.precision_bits);
    check_modes(cfg, /*allow_epsilon=*/false);
    if (cfg.out.empty()) throw usage_error("matrix requires --out for the result matrix");
    Approximant a = resolve_approximant(cfg, ctx);
    const long bits = ctx.bits();

    DenseMatrix m;
    bool generated = false;
    RandomSpd spd;
    if (!cfg.in.empty()) {
        m = read_matrix(cfg.in, ctx);
    } else {
        spd = make_random_spd(cfg.n, cfg.seed, ctx);
        m = spd.m;
        generated = true;
    }

    DenseMatrix f = matrix_proot(a, m, cfg.assume_spectrum || generated);

    std::ostringstream os;
    os << m.n() << "\n";
    for (long i = 0; i < m.n(); ++i) {
        for (long j = 0; j < m.n(); ++j) {
            if (j) os << ' ';
            os << format_real(f.at(i, j), bits);
        }
        os << "\n";
    }
    emit(cfg, os.str());

    // residual report
    Real sym(0L, bits);
    for (long i = 0; i < f.n(); ++i)
        for (long j = i + 1; j < f.n(); ++j) sym = max(sym, abs(f.at(i, j) - f.at(j, i)));
    DenseMatrix fp = f;
    for (int t = 1; t < cfg.p; ++t) fp = matmul(fp, f);
    std::cout << "# p=" << cfg.p << ", k=" << a.k() << ", alpha=" << format_real(a.alpha0(), bits)
              << ", eps=" << format_real(rel_error_bound(a), bits) << ", precision_bits=" << bits
              << "\n";
    std::cout << config_echo(cfg);
    std::cout << "# symmetry_residual=" << format_real(sym, bits) << "\n";
    std::cout << "# commutation_residual=" << format_real(commutation_residual(f, m), bits)
              << "\n";
    std::cout << "# proot_residual=" << format_real(max_abs_diff(fp, m), bits) << "\n";
    if (generated) {
        DenseMatrix ql(m.n(), bits);
        for (long i = 0; i < m.n(); ++i) {
            for (long j = 0; j < m.n(); ++j) {
                ql.at(i, j) = spd.q.at(i, j) * eval_f_scaled(a, spd.lambda[j]);
            }
        }
        DenseMatrix qt(m.n(), bits);
        for (long i = 0; i < m.n(); ++i)
            for (long j = 0; j < m.n(); ++j) qt.at(i, j) = spd.q.at(j, i);
        Real res = max_abs_diff(f, matmul(ql, qt));
        std::cout << "# spectral_reference_residual=" << format_real(res, bits) << "\n";
    }
    return 0;
}

void add_common(CLI::App* sub, RunConfig& cfg) {
    sub->add_option("--p", cfg.p, "root order p >= 2");
    sub->add_option("--k", cfg.k, "recursion count");
    sub->add_option("--alpha", cfg.alpha, "starting alpha in (0,1), decimal string");
    sub->add_option("--epsilon", cfg.epsilon, "target accuracy; picks k and a balanced alpha");
    sub->add_flag("--balance", cfg.balance, "balance alpha so that 2*alpha = eps_k(alpha)");
    sub->add_option("--samples", cfg.samples, "sample count for scans and grids")
        ->default_val(10000);
    sub->add_option("--precision-bits", cfg.precision_bits, "significand bits (>= 64)")
        ->envname("COMPRAT_PRECISION_BITS")
        ->default_val(PrecisionContext::kDefaultBits);
    sub->add_option("--seed", cfg.seed, "seed for randomized inputs")->default_val(0);
    sub->add_option("--out", cfg.out, "output file (stdout if omitted)");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"composite rational approximation of the p-th root and sector function"};
    app.require_subcommand(1);

    RunConfig cfg;
    CLI::App* approx = app.add_subcommand("approx", "emit x, ftilde, xroot, err over [0,1]");
    add_common(approx, cfg);

    CLI::App* study = app.add_subcommand("study", "balanced error history over a k range");
    add_common(study, cfg);
    study->add_option("--k-min", cfg.k_min, "first k");
    study->add_option("--k-max", cfg.k_max, "last k");

    CLI::App* sector = app.add_subcommand("sector", "sector-function error along a ray");
    add_common(sector, cfg);

    CLI::App* matrix = app.add_subcommand("matrix", "apply the approximant to a matrix");
    add_common(matrix, cfg);
    matrix->add_option("--in", cfg.in, "input matrix file (first line n, then n rows)");
    matrix->add_option("--n", cfg.n, "generated matrix dimension")->default_val(8);
    matrix->add_flag("--assume-spectrum", cfg.assume_spectrum,
                     "skip the Gershgorin check (caller attests spectrum in [0,1])");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (approx->parsed()) {
            cfg.command = "approx";
            return cmd_approx(cfg);
        }
        if (study->parsed()) {
            cfg.command = "study";
            return cmd_study(cfg);
        }
        if (sector->parsed()) {
            cfg.command = "sector";
            return cmd_sector(cfg);
        }
        cfg.command = "matrix";
        return cmd_matrix(cfg);
    } catch (const usage_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const solve_failure_error& e) {
        std::cerr << "linear algebra failure: " << e.what() << "\n";
        return kExitSolve;
    } catch (const std::domain_error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::runtime_error& e) {
        // remaining numeric failures (nonconvergence, precision, singularity)
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    }
}
