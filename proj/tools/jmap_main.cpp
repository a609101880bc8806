// Command-line front end: construct universal matrices, classify and verify
// matrices against a chosen phi, invert power maps, generate Jacobian
// equation systems, and run the bundled fixture corpus.

#include "jmap/fixtures.hpp"
#include "jmap/goodpair.hpp"
#include "jmap/invert.hpp"
#include "jmap/io.hpp"
#include "jmap/rng.hpp"
#include "jmap/universal.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

constexpr int kExitParse = 2;
constexpr int kExitInvariant = 3;
constexpr int kExitMode = 4;
constexpr int kExitNoStabilization = 5;
constexpr int kExitGuard = 6;

std::string slurp_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw jmap::parse_error("cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void emit(const std::string& out_path, const std::string& content) {
    if (out_path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot write '" + out_path + "'");
    out << content;
}

struct PhiChoice {
    std::string kind;  // "pow" | "exp" | "log"
    int d = 0;
};

PhiChoice parse_phi(const std::string& text) {
    if (text == "exp" || text == "log") return {text, 0};
    if (text.rfind("pow:", 0) == 0) {
        int d = 0;
        try {
            d = std::stoi(text.substr(4));
        } catch (const std::exception&) {
            throw jmap::parse_error("bad phi '" + text + "'");
        }
        if (d < 2) throw jmap::parse_error("pow degree must be at least 2");
        return {"pow", d};
    }
    throw jmap::parse_error("phi must be pow:<d>, exp, or log");
}

int cmd_construct(const std::string& spec_path, const std::string& out_path) {
    std::string text;
    try {
        text = slurp_file(spec_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    }
    jmap::UniversalSpec spec;
    try {
        spec = jmap::parse_universal_spec(text);
    } catch (const jmap::parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid spec: " << e.what() << "\n";
        return kExitInvariant;
    }
    try {
        emit(out_path, jmap::format_matrix(jmap::build_universal(spec)));
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid spec: " << e.what() << "\n";
        return kExitInvariant;
    }
    return 0;
}

int cmd_verify(const std::string& matrix_path, const std::string& phi_text, const std::string& mode) {
    jmap::RMatrix a;
    PhiChoice phi;
    try {
        a = jmap::parse_matrix(slurp_file(matrix_path));
        phi = parse_phi(phi_text);
    } catch (const std::exception& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    }
    if (mode == "exact" && phi.kind == "exp") {
        std::cerr << "error: phi' of exp is not rational; use --mode float\n";
        return kExitMode;
    }

    bool good = false;
    if (mode == "exact") {
        good = phi.kind == "pow" ? jmap::is_good_pair_monomial(a, phi.d) : jmap::is_good_pair_log(a);
    } else {
        jmap::PhiDerivativeComplex pc = phi.kind == "pow" ? jmap::PhiDerivativeComplex::pow(phi.d)
                                        : phi.kind == "log" ? jmap::PhiDerivativeComplex::log()
                                                            : jmap::PhiDerivativeComplex::exp();
        jmap::CMatrix ac = jmap::CMatrix::from_rational(a);
        jmap::Rng rng(0x7e51f7ULL);
        double worst = 0.0;
        for (int trial = 0; trial < 10; ++trial) {
            std::vector<jmap::Complex> x(a.size());
            bool valid = false;
            for (int attempt = 0; attempt < 1000 && !valid; ++attempt) {
                for (auto& c : x) c = jmap::Complex(rng.real(-1.0, 1.0), rng.real(-1.0, 1.0));
                valid = true;
                for (const auto& arg : ac * x)
                    if (std::abs(arg) < 1e-3) valid = false;
            }
            worst = std::max(worst, std::abs(jmap::jacobian_value_general(ac, pc, x) - jmap::Complex(1.0)));
        }
        good = worst < 1e-9;
    }

    jmap::OrderedForm of = jmap::ordered_form(a);
    std::cout << "universal: " << (jmap::is_universal(a) ? "yes" : "no") << "\n";
    std::string phi_label = phi.kind == "pow" ? "pow:" + std::to_string(phi.d) : phi.kind;
    std::cout << "good-pair(" << phi_label << "): " << (good ? "yes" : "no") << "\n";
    std::cout << "partition:";
    for (int p : of.partition.parts()) std::cout << " " << p;
    std::cout << "\nS:\n";
    jmap::RMatrix s = jmap::block_row_sum_matrix(a);
    for (int j = 1; j <= s.size(); ++j) {
        for (int k = 1; k <= s.size(); ++k) std::cout << (k > 1 ? " " : "") << s(j, k).str();
        std::cout << "\n";
    }
    std::cout << "rank: " << jmap::rank(a) << "\n";
    std::cout << "nilpotent: " << (jmap::is_nilpotent(a) ? "yes" : "no") << "\n";
    return 0;
}

int cmd_invert(const std::string& matrix_path, int d, int cap) {
    jmap::RMatrix a;
    try {
        a = jmap::parse_matrix(slurp_file(matrix_path));
    } catch (const std::exception& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    }
    try {
        jmap::NewtonResult res = jmap::finite_newton_inverse(a, d, cap);
        std::cout << "order: " << res.order << "\n" << jmap::format_polymap_machine(res.inverse);
        return 0;
    } catch (const jmap::newton_divergence& e) {
        std::cerr << "no stabilization: " << e.what() << "\n";
        return kExitNoStabilization;
    } catch (const jmap::expansion_overflow& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

int cmd_equations(int n, int d, const std::string& out_path) {
    try {
        jmap::JacEquationSystem sys = jmap::generate_jacobian_equations(n, d);
        emit(out_path, jmap::format_equation_system(sys));
        std::cerr << "count: " << sys.equations.size() << "\n"
                  << "max-degree: " << sys.max_total_degree() << "\n";
        return 0;
    } catch (const std::length_error& e) {
        std::cerr << "guard exceeded: " << e.what() << "\n";
        return kExitGuard;
    }
}

int cmd_fixtures(const std::string& catalog, const std::string& dir, const std::string& filter) {
    std::vector<jmap::fixtures::FixtureOutcome> outcomes;
    try {
        outcomes = jmap::fixtures::run_fixtures(catalog, dir, filter);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    }
    if (outcomes.empty()) {
        std::cerr << "warning: no fixtures matched filter '" << filter << "'\n";
        return 0;
    }
    int failures = 0;
    for (const auto& out : outcomes) {
        std::cout << (out.passed ? "PASS " : "FAIL ") << out.name << " (" << out.detail << ")\n";
        if (!out.passed) ++failures;
    }
    std::cout << outcomes.size() - failures << "/" << outcomes.size() << " fixtures passed\n";
    return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact tools for Jacobian mappings x + phi(Ax)"};
    app.require_subcommand(1);

    std::string spec_path, out_path;
    auto* construct = app.add_subcommand("construct", "build a universal matrix from a spec file");
    construct->add_option("spec", spec_path, "universal spec file")->required();
    construct->add_option("-o,--out", out_path, "output file (default stdout)");

    std::string matrix_path, phi_text = "pow:2", mode = "exact";
    auto* verify = app.add_subcommand("verify", "classify a matrix and test a good pair");
    verify->add_option("matrix", matrix_path, "matrix file")->required();
    verify->add_option("--phi", phi_text, "pow:<d>, exp, or log (default pow:2)");
    verify->add_option("--mode", mode, "exact or float (default exact)")
        ->check(CLI::IsMember({"exact", "float"}));

    std::string inv_matrix_path;
    int inv_d = 2, inv_cap = -1;
    auto* invert = app.add_subcommand("invert", "finite Newton inverse of x + (Ax)^d");
    invert->add_option("matrix", inv_matrix_path, "matrix file")->required();
    invert->add_option("-d,--d", inv_d, "monomial degree (default 2)")->check(CLI::Range(2, 1 << 20));
    invert->add_option("--cap", inv_cap, "iteration cap (default: dimension)");

    int eq_n = 2, eq_d = 2;
    std::string eq_out;
    auto* equations = app.add_subcommand("equations", "generate the Jacobian equation system");
    equations->add_option("n", eq_n, "dimension")->required();
    equations->add_option("d", eq_d, "degree")->required();
    equations->add_option("-o,--out", eq_out, "output file (default stdout)");

    std::string fx_catalog = "fixtures/catalog.json", fx_dir = "fixtures", fx_filter;
    auto* fixtures = app.add_subcommand("fixtures", "run the regression fixture corpus");
    fixtures->add_option("--catalog", fx_catalog, "catalog file");
    fixtures->add_option("--dir", fx_dir, "directory with the matrix files");
    fixtures->add_option("--filter", fx_filter, "only fixtures whose name contains this");

    CLI11_PARSE(app, argc, argv);

    if (construct->parsed()) return cmd_construct(spec_path, out_path);
    if (verify->parsed()) return cmd_verify(matrix_path, phi_text, mode);
    if (invert->parsed()) return cmd_invert(inv_matrix_path, inv_d, inv_cap);
    if (equations->parsed()) return cmd_equations(eq_n, eq_d, eq_out);
    if (fixtures->parsed()) return cmd_fixtures(fx_catalog, fx_dir, fx_filter);
    return 0;
}
