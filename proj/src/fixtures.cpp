#include "jmap/fixtures.hpp"

#include "jmap/goodpair.hpp"
#include "jmap/invert.hpp"
#include "jmap/io.hpp"
#include "jmap/rng.hpp"

#include <json.hpp>

#include <cmath>
#include <fstream>
#include <sstream>

namespace jmap::fixtures {

namespace {

Rational R(long long v) { return Rational(v); }

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

}  // namespace

RMatrix numeric_universal_unordered() {
    return RMatrix::from_rows({
        {R(-3), R(4), R(2), R(6), R(5), R(1)},
        {R(-15), R(11), R(8), R(12), R(-11), R(7)},
        {R(-3), R(4), R(2), R(6), R(5), R(1)},
        {R(-19), R(13), R(10), R(0), R(-13), R(9)},
        {R(-15), R(11), R(8), R(12), R(-11), R(7)},
        {R(-3), R(4), R(2), R(6), R(5), R(1)},
    });
}

RMatrix numeric_universal_ordered() {
    return RMatrix::from_rows({
        {R(0), R(13), R(-13), R(9), R(10), R(-19)},
        {R(12), R(11), R(-11), R(7), R(8), R(-15)},
        {R(12), R(11), R(-11), R(7), R(8), R(-15)},
        {R(6), R(4), R(5), R(1), R(2), R(-3)},
        {R(6), R(4), R(5), R(1), R(2), R(-3)},
        {R(6), R(4), R(5), R(1), R(2), R(-3)},
    });
}

RMatrix numeric_universal_s_matrix() {
    return RMatrix::from_rows({
        {R(0), R(0), R(0)},
        {R(12), R(0), R(0)},
        {R(6), R(9), R(0)},
    });
}

RMatrix universal_dim5(const Rational& a, const Rational& b, const Rational& c, const Rational& s,
                       const Rational& t, const Rational& u, const Rational& v) {
    std::vector<Rational> top = {a, -a, b, c, -b - c};
    std::vector<Rational> bottom = {s, t, u, v, -u - v};
    return RMatrix::from_rows({top, top, bottom, bottom, bottom});
}

UniversalSpec universal_dim8_spec(const std::vector<Rational>& params) {
    Partition p({1, 2, 2, 3});
    Permutation pi({1, 4, 2, 3});
    UniversalSpec spec{p, pi, {}};
    std::size_t next = 0;
    auto take = [&](int count) {
        std::vector<Rational> vec;
        for (int i = 0; i < count; ++i) vec.push_back(params.at(next++));
        return vec;
    };
    for (int j = 1; j <= 4; ++j)
        for (int k = 1; k <= 4; ++k) spec.parameters.push_back(take(p.part(k)));
    return spec;
}

RMatrix idempotent_centrosymmetric(const Rational& a, const Rational& b, const Rational& c) {
    Rational q = b * b + R(2) * a * c;
    Rational p = b * b + a * c;
    Rational den = a * b * (a + b) * q;
    if (den.is_zero()) throw std::invalid_argument("parameters must satisfy ab(a+b)(2ac+b^2) != 0");
    Rational inv = den.inverse();
    Rational a2 = a * a, a3 = a2 * a, a4 = a3 * a, b2 = b * b;
    return RMatrix::from_rows({
        {inv * (a2 * b * q), inv * (-b * p * q), inv * (a * b * c * q), R(0)},
        {inv * (-a3 * p), inv * (a * b2 * q), R(0), inv * (-a4 * c)},
        {inv * (-a4 * c), R(0), inv * (a * b2 * q), inv * (-a3 * p)},
        {R(0), inv * (a * b * c * q), inv * (-b * p * q), inv * (a2 * b * q)},
    });
}

RMatrix rank2_dim6(const Rational& a, const Rational& b) {
    auto r = [&](long long ca, long long cb) { return R(ca) * a + R(cb) * b; };
    return RMatrix::from_rows({
        {r(20, 0), r(0, 0), r(8, 0), r(-4, 0), r(-3, 0), r(1, 0)},
        {r(0, 0), r(0, 20), r(0, -4), r(0, 8), r(0, 1), r(0, -3)},
        {r(40, 0), r(0, 20), r(16, -4), r(-8, 8), r(-6, 1), r(2, -3)},
        {r(20, 0), r(0, 40), r(8, -8), r(-4, 16), r(-3, 2), r(1, -6)},
        {r(60, 0), r(0, 20), r(24, -4), r(-12, 8), r(-9, 1), r(3, -3)},
        {r(20, 0), r(0, 60), r(8, -12), r(-4, 24), r(-3, 3), r(1, -9)},
    });
}

RMatrix rank2_dim8(const Rational& a, const Rational& b) {
    auto r = [&](long long ca, long long cb) { return R(ca) * a + R(cb) * b; };
    return RMatrix::from_rows({
        {r(480, 0), r(0, 0), r(-360, 0), r(-10, 0), r(32, 0), r(64, 0), r(-9, 0), r(-3, 0)},
        {r(0, 0), r(0, 480), r(0, -360), r(0, 10), r(0, 64), r(0, 32), r(0, -3), r(0, -9)},
        {r(480, 0), r(0, 480), r(-360, -360), r(-10, 10), r(32, 64), r(64, 32), r(-9, -3), r(-3, -9)},
        {r(480, 0), r(0, -480), r(-360, 360), r(-10, -10), r(32, -64), r(64, -32), r(-9, 3), r(-3, 9)},
        {r(480, 0), r(0, 960), r(-360, -720), r(-10, 20), r(32, 128), r(64, 64), r(-9, -6), r(-3, -18)},
        {r(960, 0), r(0, 480), r(-720, -360), r(-20, 10), r(64, 64), r(128, 32), r(-18, -3), r(-6, -9)},
        {r(1440, 0), r(0, 480), r(-1080, -360), r(-30, 10), r(96, 64), r(192, 32), r(-27, -3), r(-9, -9)},
        {r(480, 0), r(0, 1440), r(-360, -1080), r(-10, 30), r(32, 192), r(64, 96), r(-9, -9), r(-3, -27)},
    });
}

RMatrix cross_shaped(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    if (a.size() != b.size() || a.empty())
        throw std::invalid_argument("cross matrix needs equal-length nonempty a, b");
    const int n = static_cast<int>(a.size()) + 1;
    RMatrix m(n);
    for (int j = 2; j <= n; ++j) {
        m(1, j) = a[j - 2];
        m(j, 1) = b[j - 2];
    }
    return m;
}

RMatrix log_family_dim4(const Rational& a, const Rational& b, const Rational& s, const Rational& t) {
    return RMatrix::from_rows({
        {R(0), a, -a - b, b},
        {a * s, R(0), (-a - b) * (s + t), b * s + a * t + b * t},
        {s, -s - t, R(0), t},
        {b * s, -b * s - a * t - b * t, (a + b) * t, R(0)},
    });
}

RMatrix rational_rank2_dim4(const Rational& a, const Rational& b, const Rational& c, const Rational& d,
                            const Rational& s, const Rational& t, const Rational& u, const Rational& v) {
    Rational delta = s * v - t * u;
    Rational P = b * u * s * s + d * t * u * s + a * t * v * s + c * t * t * v;
    Rational Q = b * s * u * u + d * s * v * u + a * t * v * u + c * t * v * v;
    if (delta.is_zero() || P.is_zero() || Q.is_zero())
        throw std::invalid_argument("parameters make a denominator vanish");
    Rational dp = (delta * P).inverse(), dq = (delta * Q).inverse(), di = delta.inverse();
    return RMatrix::from_rows({
        {a, b, dp * (b * d * s * u * u - a * b * s * v * u + b * c * t * v * u - a * a * t * v * v),
         dq * (-b * d * u * s * s + a * b * t * u * s - b * c * t * v * s + a * a * t * t * v)},
        {c, d, dp * (d * d * s * u * u - b * c * s * v * u + c * d * t * v * u - a * c * t * v * v),
         dq * (-d * d * u * s * s + b * c * t * u * s - c * d * t * v * s + a * c * t * t * v)},
        {a * s + c * t, b * s + d * t, di * (d * u - a * v),
         dq * (t * (a * s + c * t) * (a * t * v + b * s * u) -
               s * (b * s + d * t) * (c * t * v + d * s * u))},
        {a * u + c * v, b * u + d * v,
         dp * (u * (b * u + d * v) * (c * t * v + d * s * u) -
               v * (a * u + c * v) * (a * t * v + b * s * u)),
         di * (a * t - d * s)},
    });
}

RMatrix homogeneity_family_dim4(const Rational& a, const Rational& b, const Rational& c,
                                const Rational& d, const std::vector<Rational>& s) {
    if (s.size() != 4) throw std::invalid_argument("need four scale parameters");
    const Rational &s1 = s[0], &s2 = s[1], &s3 = s[2], &s4 = s[3];
    auto p3 = [](const Rational& x) { return x.pow(3); };
    auto p4 = [](const Rational& x) { return x.pow(4); };
    return RMatrix::from_rows({
        {a * p3(s1) * s2 * s3 * s4, b * p4(s2) * s3 * s4, b * s2 * p4(s3) * s4, a * s2 * s3 * p4(s4)},
        {c * p4(s1) * s3 * s4, d * s1 * p3(s2) * s3 * s4, d * s1 * p4(s3) * s4, c * s1 * s3 * p4(s4)},
        {-(c * p4(s1) * s2 * s4), -(d * s1 * p4(s2) * s4), -(d * s1 * s2 * p3(s3) * s4),
         -(c * s1 * s2 * p4(s4))},
        {-(a * p4(s1) * s2 * s3), -(b * s1 * p4(s2) * s3), -(b * s1 * s2 * p4(s3)),
         -(a * s1 * s2 * s3 * p3(s4))},
    });
}

CMatrix log_circulant4_i() {
    const Complex i(0.0, 1.0);
    return circulant_c({Complex(0.0), Complex(1.0), -1.0 - i, i});
}

CMatrix log_circulant4_conj() {
    const Complex i(0.0, 1.0);
    return circulant_c({Complex(0.0), 1.0 + i, Complex(-2.0), 1.0 - i});
}

CMatrix log_circulant5_sqrt5() {
    const double r5 = std::sqrt(5.0);
    return circulant_c({Complex(0.0), Complex(2.0), Complex(-1.0 - r5), Complex(1.0 + r5), Complex(-2.0)});
}

CMatrix log_circulant5_golden() {
    const double r5 = std::sqrt(5.0);
    const double w = std::sqrt(10.0 - 2.0 * r5);
    const Complex i(0.0, 1.0);
    return circulant_c({
        Complex(0.0),
        (r5 + 1.0) * w - 2.0 * i * (r5 + 3.0),
        (r5 + 3.0) * w + 4.0 * i * (r5 + 2.0),
        -2.0 * ((r5 + 2.0) * w - i * (r5 + 1.0)),
        -4.0 * i * (r5 + 1.0),
    });
}

std::vector<FixtureRecord> load_catalog(const std::string& path) {
    nlohmann::json doc = nlohmann::json::parse(slurp(path));
    std::vector<FixtureRecord> records;
    for (const auto& item : doc) {
        FixtureRecord rec;
        rec.name = item.at("name").get<std::string>();
        rec.file = item.at("file").get<std::string>();
        rec.phi = item.at("phi").get<std::string>();
        rec.mode = item.at("mode").get<std::string>();
        rec.expect_good = item.at("good").get<bool>();
        if (item.contains("universal")) rec.expect_universal = item["universal"].get<bool>();
        if (item.contains("order")) rec.expect_order = item["order"].get<int>();
        records.push_back(std::move(rec));
    }
    return records;
}

namespace {

int parse_pow_degree(const std::string& phi) {
    std::istringstream is(phi);
    std::string word;
    int d = 0;
    if (is >> word >> d && word == "pow" && d >= 2) return d;
    throw parse_error("bad phi descriptor '" + phi + "'");
}

std::uint64_t name_seed(const std::string& name) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (char c : name) h = (h ^ static_cast<unsigned char>(c)) * 0x100000001b3ULL;
    return h;
}

FixtureOutcome run_exact(const FixtureRecord& rec, const RMatrix& a) {
    std::ostringstream detail;
    bool ok = true;

    bool good = false;
    if (rec.phi == "log") {
        good = is_good_pair_log(a);
    } else {
        good = is_good_pair_monomial(a, parse_pow_degree(rec.phi));
    }
    detail << "good=" << (good ? "yes" : "no");
    if (good != rec.expect_good) ok = false;

    if (rec.expect_universal) {
        bool uni = is_universal(a);
        detail << " universal=" << (uni ? "yes" : "no");
        if (uni != *rec.expect_universal) ok = false;
    }
    if (rec.expect_order && rec.expect_good && rec.phi != "log") {
        try {
            NewtonCore core = finite_newton_core(a, parse_pow_degree(rec.phi));
            detail << " order=" << core.order;
            if (core.order != *rec.expect_order) ok = false;
        } catch (const newton_divergence& e) {
            detail << " order=diverged";
            ok = false;
        }
    }
    return {rec.name, ok, detail.str()};
}

FixtureOutcome run_float(const FixtureRecord& rec, const CMatrix& a) {
    PhiDerivativeComplex phi = rec.phi == "log" ? PhiDerivativeComplex::log()
                               : rec.phi == "exp" ? PhiDerivativeComplex::exp()
                                                  : PhiDerivativeComplex::pow(parse_pow_degree(rec.phi));
    Rng rng(0xF1C5ULL ^ name_seed(rec.name));
    const int n = a.size();
    double worst = 0.0;
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<Complex> x(n);
        bool valid = false;
        for (int attempt = 0; attempt < 1000 && !valid; ++attempt) {
            for (auto& c : x) c = Complex(rng.real(-1.0, 1.0), rng.real(-1.0, 1.0));
            valid = true;
            for (const Complex& arg : a * x)
                if (std::abs(arg) < 1e-3) valid = false;
        }
        if (!valid) return {rec.name, false, "no sample point with arguments away from zero"};
        Complex j = jacobian_value_general(a, phi, x);
        worst = std::max(worst, std::abs(j - Complex(1.0)));
    }
    bool good = worst < 1e-9;
    std::ostringstream detail;
    detail << "max|J-1|=" << worst;
    return {rec.name, good == rec.expect_good, detail.str()};
}

}  // namespace

FixtureOutcome run_fixture(const FixtureRecord& rec, const std::string& base_dir) {
    const std::string path = base_dir.empty() ? rec.file : base_dir + "/" + rec.file;
    try {
        if (rec.mode == "exact") return run_exact(rec, parse_matrix(slurp(path)));
        if (rec.mode == "float") return run_float(rec, parse_cmatrix(slurp(path)));
        return {rec.name, false, "unknown mode '" + rec.mode + "'"};
    } catch (const std::exception& e) {
        return {rec.name, false, std::string("error: ") + e.what()};
    }
}

std::vector<FixtureOutcome> run_fixtures(const std::string& catalog_path, const std::string& base_dir,
                                         const std::string& filter) {
    std::vector<FixtureOutcome> outcomes;
    for (const auto& rec : load_catalog(catalog_path)) {
        if (!filter.empty() && rec.name.find(filter) == std::string::npos) continue;
        outcomes.push_back(run_fixture(rec, base_dir));
    }
    return outcomes;
}

}  // namespace jmap::fixtures
