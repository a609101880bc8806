#include "jmap/mpoly.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace jmap {

namespace {

void check(bool cond, const char* msg) {
    if (!cond) throw std::invalid_argument(msg);
}

int degree_of(const std::vector<Exp>& e) {
    int d = 0;
    for (Exp x : e) d += x;
    return d;
}

}  // namespace

bool grlex_less(const std::vector<Exp>& a, const std::vector<Exp>& b) {
    int da = degree_of(a), db = degree_of(b);
    if (da != db) return da < db;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

MPoly::MPoly(int nvars, const Rational& c) : nvars_(nvars) {
    if (!c.is_zero()) terms_.push_back({std::vector<Exp>(nvars, 0), c});
}

MPoly MPoly::variable(int nvars, int var) {
    check(var >= 1 && var <= nvars, "variable index out of range");
    MPoly p(nvars);
    std::vector<Exp> e(nvars, 0);
    e[var - 1] = 1;
    p.terms_.push_back({std::move(e), Rational(1)});
    return p;
}

MPoly MPoly::from_terms(int nvars, std::vector<Term> terms) {
    for (const auto& t : terms) check(static_cast<int>(t.exps.size()) == nvars, "exponent length mismatch");
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return grlex_less(b.exps, a.exps); });
    MPoly p(nvars);
    for (auto& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().exps == t.exps)
            p.terms_.back().coeff += t.coeff;
        else
            p.terms_.push_back(std::move(t));
        if (!p.terms_.empty() && p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
    }
    return p;
}

bool MPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && degree_of(terms_[0].exps) == 0);
}

Rational MPoly::constant_value() const {
    if (terms_.empty()) return Rational(0);
    const Term& last = terms_.back();
    return degree_of(last.exps) == 0 ? last.coeff : Rational(0);
}

int MPoly::total_degree() const {
    return terms_.empty() ? -1 : degree_of(terms_.front().exps);
}

MPoly MPoly::operator-() const {
    MPoly p(*this);
    for (auto& t : p.terms_) t.coeff = -t.coeff;
    return p;
}

MPoly operator+(const MPoly& a, const MPoly& b) {
    check(a.nvars_ == b.nvars_, "nvars mismatch");
    MPoly out(a.nvars_);
    out.terms_.reserve(a.terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() && j < b.terms_.size()) {
        const auto& ta = a.terms_[i];
        const auto& tb = b.terms_[j];
        if (ta.exps == tb.exps) {
            Rational c = ta.coeff + tb.coeff;
            if (!c.is_zero()) out.terms_.push_back({ta.exps, std::move(c)});
            ++i, ++j;
        } else if (grlex_less(tb.exps, ta.exps)) {
            out.terms_.push_back(ta);
            ++i;
        } else {
            out.terms_.push_back(tb);
            ++j;
        }
    }
    for (; i < a.terms_.size(); ++i) out.terms_.push_back(a.terms_[i]);
    for (; j < b.terms_.size(); ++j) out.terms_.push_back(b.terms_[j]);
    return out;
}

MPoly operator-(const MPoly& a, const MPoly& b) { return a + (-b); }

MPoly& MPoly::operator+=(const MPoly& o) { return *this = *this + o; }
MPoly& MPoly::operator-=(const MPoly& o) { return *this = *this + (-o); }

namespace {

// Multiplication accumulates into a hash map. With few variables and modest
// degrees the whole exponent vector packs into one machine word, which keeps
// the hot loop allocation-free; otherwise an ordered map on full vectors is
// used.
struct U64Hash {
    std::size_t operator()(std::uint64_t x) const {
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return static_cast<std::size_t>(x ^ (x >> 31));
    }
};

std::uint64_t pack8(const std::vector<Exp>& e) {
    std::uint64_t k = 0;
    for (std::size_t v = 0; v < e.size(); ++v) k |= static_cast<std::uint64_t>(e[v] & 0xff) << (8 * v);
    return k;
}

std::vector<Exp> unpack8(std::uint64_t k, int nvars) {
    std::vector<Exp> e(nvars);
    for (int v = 0; v < nvars; ++v) e[v] = static_cast<Exp>((k >> (8 * v)) & 0xff);
    return e;
}

}  // namespace

MPoly operator*(const MPoly& a, const MPoly& b) {
    check(a.nvars_ == b.nvars_, "nvars mismatch");
    MPoly out(a.nvars_);
    if (a.terms_.empty() || b.terms_.empty()) return out;

    const bool packable = a.nvars_ <= 8 && a.total_degree() + b.total_degree() < 256;
    std::vector<MPoly::Term> acc;
    if (packable) {
        std::unordered_map<std::uint64_t, Rational, U64Hash> sum;
        sum.reserve(a.terms_.size() + b.terms_.size());
        std::vector<std::uint64_t> bkeys(b.terms_.size());
        for (std::size_t j = 0; j < b.terms_.size(); ++j) bkeys[j] = pack8(b.terms_[j].exps);
        for (const auto& ta : a.terms_) {
            const std::uint64_t ka = pack8(ta.exps);
            for (std::size_t j = 0; j < b.terms_.size(); ++j) {
                auto [it, inserted] = sum.try_emplace(ka + bkeys[j], Rational(0));
                it->second += ta.coeff * b.terms_[j].coeff;
            }
        }
        acc.reserve(sum.size());
        for (auto& [k, c] : sum)
            if (!c.is_zero()) acc.push_back({unpack8(k, a.nvars_), std::move(c)});
    } else {
        if (a.total_degree() + b.total_degree() > 0xffff)
            throw std::length_error("polynomial product exceeds the exponent range");
        std::map<std::vector<Exp>, Rational> sum;
        std::vector<Exp> key(a.nvars_);
        for (const auto& ta : a.terms_)
            for (const auto& tb : b.terms_) {
                for (int v = 0; v < a.nvars_; ++v) key[v] = static_cast<Exp>(ta.exps[v] + tb.exps[v]);
                auto [it, inserted] = sum.try_emplace(key, Rational(0));
                it->second += ta.coeff * tb.coeff;
            }
        for (auto& [k, c] : sum)
            if (!c.is_zero()) acc.push_back({k, std::move(c)});
    }
    std::sort(acc.begin(), acc.end(),
              [](const MPoly::Term& x, const MPoly::Term& y) { return grlex_less(y.exps, x.exps); });
    out.terms_ = std::move(acc);
    return out;
}

MPoly MPoly::scaled(const Rational& c) const {
    if (c.is_zero()) return MPoly(nvars_);
    MPoly p(*this);
    for (auto& t : p.terms_) t.coeff *= c;
    return p;
}

MPoly MPoly::pow(int d) const {
    check(d >= 0, "negative power");
    MPoly acc(nvars_, Rational(1));
    MPoly base(*this);
    while (d) {
        if (d & 1) acc = acc * base;
        d >>= 1;
        if (d) base = base * base;
    }
    return acc;
}

MPoly MPoly::derivative(int var) const {
    check(var >= 1 && var <= nvars_, "variable index out of range");
    std::vector<Term> out;
    for (const auto& t : terms_) {
        Exp e = t.exps[var - 1];
        if (e == 0) continue;
        Term d{t.exps, t.coeff * Rational(static_cast<long long>(e))};
        d.exps[var - 1] = static_cast<Exp>(e - 1);
        out.push_back(std::move(d));
    }
    return from_terms(nvars_, std::move(out));
}

Rational MPoly::eval(const std::vector<Rational>& point) const {
    check(static_cast<int>(point.size()) == nvars_, "point length mismatch");
    Rational sum;
    for (const auto& t : terms_) {
        Rational v = t.coeff;
        for (int i = 0; i < nvars_; ++i)
            if (t.exps[i]) v *= point[i].pow(t.exps[i]);
        sum += v;
    }
    return sum;
}

MPoly MPoly::compose(const std::vector<MPoly>& images) const {
    check(static_cast<int>(images.size()) == nvars_, "need one image per variable");
    int img_vars = images.empty() ? 0 : images[0].nvars();
    for (const auto& g : images) check(g.nvars() == img_vars, "images must share nvars");

    // Cached powers, built as needed: powers[v][e] = images[v]^e.
    std::vector<std::vector<MPoly>> powers(nvars_);
    auto power = [&](int v, Exp e) -> const MPoly& {
        auto& chain = powers[v];
        if (chain.empty()) chain.push_back(MPoly(img_vars, Rational(1)));
        while (chain.size() <= e) chain.push_back(chain.back() * images[v]);
        return chain[e];
    };

    MPoly sum(img_vars);
    for (const auto& t : terms_) {
        MPoly prod(img_vars, t.coeff);
        for (int v = 0; v < nvars_; ++v)
            if (t.exps[v]) prod = prod * power(v, t.exps[v]);
        sum += prod;
    }
    return sum;
}

Rational MPoly::make_primitive() {
    if (terms_.empty()) return Rational(1);
    BigInt den_lcm = 1;
    for (const auto& t : terms_) den_lcm = boost::multiprecision::lcm(den_lcm, t.coeff.denominator());
    BigInt g = 0;
    for (const auto& t : terms_) {
        BigInt num = t.coeff.numerator() * (den_lcm / t.coeff.denominator());
        g = boost::multiprecision::gcd(g, num);
    }
    Rational content(g, den_lcm);
    if (terms_.front().coeff.sign() < 0) content = -content;
    for (auto& t : terms_) t.coeff /= content;
    return content;
}

std::string MPoly::str(const std::vector<std::string>& names) const {
    check(static_cast<int>(names.size()) == nvars_, "need one name per variable");
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        Rational c = t.coeff;
        if (first) {
            if (c.sign() < 0) {
                os << "-";
                c = -c;
            }
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
            if (c.sign() < 0) c = -c;
        }
        first = false;
        bool has_vars = degree_of(t.exps) > 0;
        if (c != Rational(1) || !has_vars) {
            os << c.str();
            if (has_vars) os << "*";
        }
        bool first_var = true;
        for (int v = 0; v < nvars_; ++v) {
            if (!t.exps[v]) continue;
            if (!first_var) os << "*";
            first_var = false;
            os << names[v];
            if (t.exps[v] > 1) os << "^" << t.exps[v];
        }
    }
    return os.str();
}

std::string MPoly::str() const {
    std::vector<std::string> names(nvars_);
    for (int v = 0; v < nvars_; ++v) names[v] = "x" + std::to_string(v + 1);
    return str(names);
}

bool MPoly::operator<(const MPoly& o) const {
    // Canonical order for equation systems: by leading monomial, then term
    // by term, shorter as a prefix first.
    std::size_t m = std::min(terms_.size(), o.terms_.size());
    for (std::size_t i = 0; i < m; ++i) {
        if (terms_[i].exps != o.terms_[i].exps) return grlex_less(terms_[i].exps, o.terms_[i].exps);
        if (terms_[i].coeff != o.terms_[i].coeff) return terms_[i].coeff < o.terms_[i].coeff;
    }
    return terms_.size() < o.terms_.size();
}

bool pow_equal(const MPoly& p, const MPoly& q, int d) {
    if (p == q) return true;
    return d % 2 == 0 && p == -q;
}

PolyMap::PolyMap(std::vector<MPoly> components) : components_(std::move(components)) {
    for (const auto& c : components_)
        check(c.nvars() == static_cast<int>(components_.size()), "components must have nvars = n");
}

PolyMap PolyMap::identity(int n) {
    std::vector<MPoly> comps;
    comps.reserve(n);
    for (int j = 1; j <= n; ++j) comps.push_back(MPoly::variable(n, j));
    return PolyMap(std::move(comps));
}

PolyMap PolyMap::linear(const RMatrix& a) {
    const int n = a.size();
    std::vector<MPoly> comps;
    comps.reserve(n);
    for (int j = 1; j <= n; ++j) {
        std::vector<MPoly::Term> terms;
        for (int k = 1; k <= n; ++k) {
            if (a(j, k).is_zero()) continue;
            std::vector<Exp> e(n, 0);
            e[k - 1] = 1;
            terms.push_back({std::move(e), a(j, k)});
        }
        comps.push_back(MPoly::from_terms(n, std::move(terms)));
    }
    return PolyMap(std::move(comps));
}

PolyMap PolyMap::power_map(const RMatrix& a, int d) {
    const int n = a.size();
    PolyMap lin = linear(a);
    std::vector<MPoly> comps;
    comps.reserve(n);
    for (int j = 1; j <= n; ++j) comps.push_back(MPoly::variable(n, j) + lin.component(j).pow(d));
    return PolyMap(std::move(comps));
}

std::vector<Rational> PolyMap::eval(const std::vector<Rational>& point) const {
    std::vector<Rational> out;
    out.reserve(components_.size());
    for (const auto& c : components_) out.push_back(c.eval(point));
    return out;
}

PolyMap poly_compose(const PolyMap& f, const PolyMap& g) {
    check(f.dimension() == g.dimension(), "dimension mismatch");
    std::vector<MPoly> comps;
    comps.reserve(f.dimension());
    for (int j = 1; j <= f.dimension(); ++j) comps.push_back(f.component(j).compose(g.components()));
    return PolyMap(std::move(comps));
}

MPoly poly_matrix_det(const std::vector<std::vector<MPoly>>& m) {
    const int n = static_cast<int>(m.size());
    if (n == 0) throw std::invalid_argument("empty matrix");
    if (n > 30) throw std::invalid_argument("polynomial determinant limited to n <= 30");
    const int nv = m[0][0].nvars();
    // Minor recursion over column subsets; the minor on columns S uses the
    // first |S| rows and expands along its last row.
    std::unordered_map<std::uint32_t, MPoly> memo;
    auto rec = [&](auto&& self, std::uint32_t mask) -> MPoly {
        if (auto it = memo.find(mask); it != memo.end()) return it->second;
        const int k = __builtin_popcount(mask);
        MPoly det(nv);
        if (k == 0) {
            det = MPoly(nv, Rational(1));
        } else {
            int pos = 0;
            for (int c = 0; c < n; ++c) {
                if (!(mask & (1u << c))) continue;
                const MPoly& entry = m[k - 1][c];
                if (!entry.is_zero()) {
                    MPoly contrib = entry * self(self, mask & ~(1u << c));
                    det = ((k - 1 + pos) % 2 == 0) ? det + contrib : det - contrib;
                }
                ++pos;
            }
        }
        memo.emplace(mask, det);
        return det;
    };
    return rec(rec, (1u << n) - 1);
}

MPoly jacobian_det(const PolyMap& f) {
    const int n = f.dimension();
    std::vector<std::vector<MPoly>> jac(n, std::vector<MPoly>(n));
    for (int j = 1; j <= n; ++j)
        for (int k = 1; k <= n; ++k) jac[j - 1][k - 1] = f.component(k).derivative(j);
    return poly_matrix_det(jac);
}

}  // namespace jmap
