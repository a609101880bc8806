#include "jmap/io.hpp"

#include <charconv>
#include <cstdio>
#include <sstream>

namespace jmap {

namespace {

std::vector<std::string> tokens_of(const std::string& line) {
    std::istringstream is(line);
    std::vector<std::string> toks;
    std::string t;
    while (is >> t) toks.push_back(t);
    return toks;
}

long long parse_ll(const std::string& tok) {
    long long v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw parse_error("expected an integer, got '" + tok + "'");
    return v;
}

/// Shortest decimal that round-trips a double.
std::string format_double(double v) {
    char buf[40];
    for (int prec = 1; prec <= 17; ++prec) {
        std::snprintf(buf, sizeof(buf), "%.*g", prec, v);
        double back = 0.0;
        std::sscanf(buf, "%lf", &back);
        if (back == v) break;
    }
    return buf;
}

}  // namespace

std::string format_matrix(const RMatrix& a) {
    std::ostringstream os;
    os << "n " << a.size() << "\n";
    for (int j = 1; j <= a.size(); ++j) {
        for (int k = 1; k <= a.size(); ++k) os << (k > 1 ? " " : "") << a(j, k).str();
        os << "\n";
    }
    return os.str();
}

RMatrix parse_matrix(const std::string& text) {
    std::istringstream is(text);
    std::string tag;
    int n = 0;
    if (!(is >> tag >> n) || tag != "n" || n < 1) throw parse_error("matrix header must be 'n <size>'");
    RMatrix a(n);
    std::string tok;
    for (int j = 1; j <= n; ++j)
        for (int k = 1; k <= n; ++k) {
            if (!(is >> tok)) throw parse_error("matrix body ended early");
            a(j, k) = Rational::parse(tok);
        }
    return a;
}

std::string format_cmatrix(const CMatrix& a) {
    std::ostringstream os;
    os << "cn " << a.size() << "\n";
    for (int j = 1; j <= a.size(); ++j) {
        for (int k = 1; k <= a.size(); ++k) {
            const Complex& z = a(j, k);
            os << (k > 1 ? " " : "") << format_double(z.real());
            if (z.imag() != 0.0) os << "," << format_double(z.imag());
        }
        os << "\n";
    }
    return os.str();
}

CMatrix parse_cmatrix(const std::string& text) {
    std::istringstream is(text);
    std::string tag;
    int n = 0;
    if (!(is >> tag >> n) || tag != "cn" || n < 1)
        throw parse_error("complex matrix header must be 'cn <size>'");
    CMatrix a(n);
    std::string tok;
    for (int j = 1; j <= n; ++j)
        for (int k = 1; k <= n; ++k) {
            if (!(is >> tok)) throw parse_error("matrix body ended early");
            auto parse_double = [&](const std::string& s) {
                std::size_t used = 0;
                double v = 0.0;
                try {
                    v = std::stod(s, &used);
                } catch (const std::exception&) {
                    throw parse_error("bad complex entry '" + tok + "'");
                }
                if (used != s.size()) throw parse_error("bad complex entry '" + tok + "'");
                return v;
            };
            auto comma = tok.find(',');
            double re = parse_double(comma == std::string::npos ? tok : tok.substr(0, comma));
            double im = comma == std::string::npos ? 0.0 : parse_double(tok.substr(comma + 1));
            a(j, k) = Complex(re, im);
        }
    return a;
}

std::string format_universal_spec(const UniversalSpec& spec) {
    std::ostringstream os;
    os << "partition";
    for (int p : spec.partition.parts()) os << " " << p;
    os << "\nperm";
    for (int v : spec.permutation.images()) os << " " << v;
    os << "\n";
    const int m = spec.partition.block_count();
    for (int j = 1; j <= m; ++j)
        for (int k = 1; k <= m; ++k) {
            const auto& vec = spec.parameter(j, k);
            for (std::size_t i = 0; i < vec.size(); ++i) os << (i ? " " : "") << vec[i].str();
            os << "\n";
        }
    return os.str();
}

UniversalSpec parse_universal_spec(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    auto next_line = [&]() -> std::string {
        while (std::getline(is, line)) {
            if (!tokens_of(line).empty()) return line;
        }
        throw parse_error("universal spec ended early");
    };

    auto ptoks = tokens_of(next_line());
    if (ptoks.empty() || ptoks[0] != "partition") throw parse_error("expected 'partition ...'");
    std::vector<int> parts;
    for (std::size_t i = 1; i < ptoks.size(); ++i) parts.push_back(static_cast<int>(parse_ll(ptoks[i])));
    Partition partition{parts};  // invariant violations surface from the ctor

    auto qtoks = tokens_of(next_line());
    if (qtoks.empty() || qtoks[0] != "perm") throw parse_error("expected 'perm ...'");
    std::vector<int> images;
    for (std::size_t i = 1; i < qtoks.size(); ++i) images.push_back(static_cast<int>(parse_ll(qtoks[i])));
    Permutation perm{images};

    const int m = partition.block_count();
    UniversalSpec spec{partition, perm, {}};
    spec.parameters.reserve(static_cast<std::size_t>(m) * m);
    for (int j = 1; j <= m; ++j)
        for (int k = 1; k <= m; ++k) {
            auto toks = tokens_of(next_line());
            std::vector<Rational> vec;
            vec.reserve(toks.size());
            for (const auto& t : toks) vec.push_back(Rational::parse(t));
            spec.parameters.push_back(std::move(vec));
        }
    return spec;
}

std::string format_mpoly_machine(const MPoly& p) {
    std::ostringstream os;
    bool first = true;
    for (const auto& t : p.terms()) {
        os << (first ? "" : " ") << t.coeff.str();
        for (Exp e : t.exps) os << " " << e;
        first = false;
    }
    return os.str();
}

MPoly parse_mpoly_machine(const std::string& line, int nvars) {
    auto toks = tokens_of(line);
    if (toks.size() % (nvars + 1) != 0) throw parse_error("malformed machine polynomial line");
    std::vector<MPoly::Term> terms;
    for (std::size_t i = 0; i < toks.size(); i += nvars + 1) {
        MPoly::Term t;
        t.coeff = Rational::parse(toks[i]);
        t.exps.resize(nvars);
        for (int v = 0; v < nvars; ++v) {
            long long e = parse_ll(toks[i + 1 + v]);
            if (e < 0 || e > 0xffff) throw parse_error("exponent out of range");
            t.exps[v] = static_cast<Exp>(e);
        }
        terms.push_back(std::move(t));
    }
    return MPoly::from_terms(nvars, std::move(terms));
}

std::string format_polymap_machine(const PolyMap& f) {
    std::ostringstream os;
    os << "polymap " << f.dimension() << "\n";
    for (int j = 1; j <= f.dimension(); ++j) os << format_mpoly_machine(f.component(j)) << "\n";
    return os.str();
}

PolyMap parse_polymap_machine(const std::string& text) {
    std::istringstream is(text);
    std::string tag;
    int n = 0;
    if (!(is >> tag >> n) || tag != "polymap" || n < 1)
        throw parse_error("polymap header must be 'polymap <n>'");
    std::string line;
    std::getline(is, line);  // rest of header line
    std::vector<MPoly> comps;
    for (int j = 0; j < n; ++j) {
        if (!std::getline(is, line)) throw parse_error("polymap body ended early");
        comps.push_back(parse_mpoly_machine(line, n));
    }
    return PolyMap(std::move(comps));
}

std::string format_equation_system(const JacEquationSystem& sys) {
    std::ostringstream os;
    os << sys.n << " " << sys.d << " " << sys.equations.size() << "\n";
    for (const auto& eq : sys.equations) os << format_mpoly_machine(eq) << "\n";
    return os.str();
}

JacEquationSystem parse_equation_system(const std::string& text) {
    std::istringstream is(text);
    int n = 0, d = 0;
    std::size_t count = 0;
    if (!(is >> n >> d >> count) || n < 2) throw parse_error("equation system header must be 'n d count'");
    std::string line;
    std::getline(is, line);
    JacEquationSystem sys;
    sys.n = n;
    sys.d = d;
    for (std::size_t i = 0; i < count; ++i) {
        if (!std::getline(is, line)) throw parse_error("equation system ended early");
        sys.equations.push_back(parse_mpoly_machine(line, n * n));
    }
    return sys;
}

}  // namespace jmap
