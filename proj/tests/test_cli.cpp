#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "comprat/approximant.hpp"
#include "comprat/csv.hpp"
#include "test_support.hpp"

namespace fs = std::filesystem;

namespace {

std::string g_cli;
fs::path g_dir;

int run(const std::string& args, const std::string& stdout_file = "") {
    std::string cmd = g_cli + " " + args;
    if (!stdout_file.empty()) cmd += " > " + (g_dir / stdout_file).string();
    cmd += " 2> /dev/null";
    int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
}

std::string slurp(const std::string& name) {
    std::ifstream f(g_dir / name, std::ios::binary);
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

std::string out_path(const std::string& name) { return (g_dir / name).string(); }

} // namespace

TEST_CASE("identical invocations produce identical bytes") {
    std::string flags = "approx --p 3 --k 2 --alpha 0.1 --samples 64 --out " + out_path("d.csv");
    REQUIRE(run(flags) == 0);
    std::string first = slurp("d.csv");
    REQUIRE(run(flags) == 0);
    CHECK(!first.empty());
    CHECK(first == slurp("d.csv"));

    std::string bal =
        "study --p 2 --k-min 1 --k-max 4 --samples 301 --out " + out_path("s.csv");
    REQUIRE(run(bal) == 0);
    std::string sfirst = slurp("s.csv");
    REQUIRE(run(bal) == 0);
    CHECK(sfirst == slurp("s.csv"));
}

TEST_CASE("headers echo the configuration and default precision") {
    REQUIRE(run("approx --p 2 --k 1 --alpha 0.25 --samples 16 --out " + out_path("h.csv")) == 0);
    std::string body = slurp("h.csv");
    CHECK(body.find("precision_bits=256") != std::string::npos);
    CHECK(body.find("# p=2, k=1") != std::string::npos);
    CHECK(body.find("version=comprat-0.1.0") != std::string::npos);
    CHECK(body.find("x,ftilde,xroot,err") != std::string::npos);
}

TEST_CASE("environment variable overrides the default precision") {
    std::string cmd = "COMPRAT_PRECISION_BITS=128 " + g_cli +
                      " approx --p 2 --k 1 --alpha 0.25 --samples 8 --out " + out_path("env.csv") +
                      " 2> /dev/null";
    REQUIRE(WEXITSTATUS(std::system(cmd.c_str())) == 0);
    CHECK(slurp("env.csv").find("precision_bits=128") != std::string::npos);

    // explicit flag wins over the environment
    std::string cmd2 = "COMPRAT_PRECISION_BITS=128 " + g_cli +
                       " approx --p 2 --k 1 --alpha 0.25 --samples 8 --precision-bits 192 --out " +
                       out_path("env2.csv") + " 2> /dev/null";
    REQUIRE(WEXITSTATUS(std::system(cmd2.c_str())) == 0);
    CHECK(slurp("env2.csv").find("precision_bits=192") != std::string::npos);
}

TEST_CASE("k = 0 approx is the constant column 2/3") {
    REQUIRE(run("approx --p 2 --k 0 --alpha 0.5 --samples 9 --out " + out_path("c.csv")) == 0);
    std::istringstream in(slurp("c.csv"));
    std::string line;
    std::string constant;
    int rows = 0;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#' || line[0] == 'x') continue;
        auto c1 = line.find(',');
        auto c2 = line.find(',', c1 + 1);
        std::string ft = line.substr(c1 + 1, c2 - c1 - 1);
        if (constant.empty()) {
            constant = ft;
            comprat::PrecisionContext ctx(256);
            comprat::Real parsed = ctx.make(ft);
            CHECK(testutil::rel_close(parsed, ctx.make(2.0) / 3L, ctx.make(std::string("1e-70"))));
        }
        CHECK(ft == constant);
        ++rows;
    }
    CHECK(rows == 9);
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run("approx --p 2 --k 1") == 2);                           // no mode
    CHECK(run("approx --p 2 --k 1 --alpha 0.3 --balance") == 2);     // two modes
    CHECK(run("approx --bogus-flag 1") == 2);
    CHECK(run("study --p 2 --k-min 3 --k-max 1") == 2);
    CHECK(run("sector --p 2 --k 1 --balance") == 2);
    CHECK(run("matrix --p 2 --k 1 --alpha 0.25") == 2);              // missing --out
    CHECK(run("") == 2);                                             // subcommand required
}

TEST_CASE("numeric domain errors exit with 3") {
    CHECK(run("approx --p 2 --k 1 --alpha 1.5 --samples 8") == 3);
    CHECK(run("approx --p 1 --k 1 --alpha 0.5 --samples 8") == 3);
    CHECK(run("approx --p 2 --k 1 --alpha 0.25 --precision-bits 16") == 3);
}

TEST_CASE("matrix identity input") {
    {
        std::ofstream f(g_dir / "id.txt");
        f << "3\n1 0 0\n0 1 0\n0 0 1\n";
    }
    REQUIRE(run("matrix --p 2 --k 2 --alpha 0.25 --in " + out_path("id.txt") + " --out " +
                out_path("id_out.txt"),
                "id_report.txt") == 0);
    std::istringstream in(slurp("id_out.txt"));
    long n;
    in >> n;
    REQUIRE(n == 3);
    comprat::PrecisionContext ctx(256);
    comprat::Approximant a = comprat::make_approximant(2, ctx.make(0.25), 2, ctx);
    comprat::Real want = comprat::eval_f_scaled(a, ctx.make(1.0));
    for (long i = 0; i < 3; ++i) {
        for (long j = 0; j < 3; ++j) {
            std::string tok;
            in >> tok;
            comprat::Real v = ctx.make(tok);
            if (i == j) {
                CHECK(testutil::rel_close(v, want, ctx.make(std::string("1e-70"))));
            } else {
                CHECK(v.is_zero());
            }
        }
    }
    std::string report = slurp("id_report.txt");
    CHECK(report.find("# symmetry_residual=") != std::string::npos);
    CHECK(report.find("# commutation_residual=") != std::string::npos);
    CHECK(report.find("# proot_residual=") != std::string::npos);
}

TEST_CASE("matrix file and spectrum failures") {
    {
        std::ofstream f(g_dir / "bad.txt");
        f << "2\n1 0\n0\n";  // truncated
    }
    CHECK(run("matrix --p 2 --k 1 --alpha 0.25 --in " + out_path("bad.txt") + " --out " +
              out_path("bad_out.txt")) == 4);

    {
        std::ofstream f(g_dir / "outside.txt");
        f << "2\n0.9 0.3\n0.3 0.9\n";  // Gershgorin reaches 1.2
    }
    CHECK(run("matrix --p 2 --k 1 --alpha 0.25 --in " + out_path("outside.txt") + " --out " +
              out_path("o_out.txt")) == 3);

    {
        std::ofstream f(g_dir / "negative.txt");
        f << "2\n-0.25 0\n0 0.5\n";  // f_1 vanishes at -0.25 for p=2, alpha=0.25
    }
    CHECK(run("matrix --p 2 --k 3 --alpha 0.25 --assume-spectrum --in " +
              out_path("negative.txt") + " --out " + out_path("n_out.txt")) == 5);
}

TEST_CASE("generated matrix reports the spectral reference residual") {
    REQUIRE(run("matrix --p 3 --k 2 --balance --seed 11 --n 5 --out " + out_path("g_out.txt"),
                "g_report.txt") == 0);
    std::string report = slurp("g_report.txt");
    auto pos = report.find("# spectral_reference_residual=");
    REQUIRE(pos != std::string::npos);
    // residual is rounding-level: far below 1e-40
    std::string val = report.substr(pos + 30, report.find('\n', pos) - pos - 30);
    comprat::PrecisionContext ctx(256);
    CHECK(ctx.make(val) <= ctx.make(std::string("1e-40")));
}

TEST_CASE("sector output reports alternations and the weighted bound") {
    REQUIRE(run("sector --p 2 --k 2 --alpha 0.25 --samples 401 --out " + out_path("sec.csv")) ==
            0);
    std::string body = slurp("sec.csv");
    auto pos = body.find("# alternations=");
    REQUIRE(pos != std::string::npos);
    long alt = std::stol(body.substr(pos + 15));
    CHECK(alt >= 3);
    CHECK(body.find("# weighted_max=") != std::string::npos);
    CHECK(body.find("r,abs_err") != std::string::npos);
}

TEST_CASE("sector unweighted max equals the header eps") {
    comprat::PrecisionContext ctx(256);
    for (int p : {3, 31}) {
        std::string name = "ray" + std::to_string(p) + ".csv";
        REQUIRE(run("sector --p " + std::to_string(p) + " --k 3 --alpha 0.1 --samples 2001 --out " +
                    out_path(name)) == 0);
        std::string body = slurp(name);
        auto grab = [&body](const std::string& key) {
            auto at = body.find(key);
            REQUIRE(at != std::string::npos);
            at += key.size();
            auto end = body.find_first_of(",\n", at);
            return body.substr(at, end - at);
        };
        comprat::Real eps = ctx.make(grab("eps="));
        comprat::Real got = ctx.make(grab("unweighted_max="));
        CHECK(testutil::rel_close(got, eps, ctx.make(std::string("1e-20"))));
    }
}

int main(int argc, char** argv) {
    doctest::Context context;
    if (argc > 1) {
        g_cli = argv[argc - 1];
        --argc;
    }
    context.applyCommandLine(argc, argv);
    g_dir = fs::temp_directory_path() / "comprat_cli_test";
    fs::create_directories(g_dir);
    return context.run();
}
