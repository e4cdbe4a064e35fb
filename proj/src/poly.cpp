#include "retic/poly.hpp"

#include <cmath>
#include <sstream>

namespace retic {

Poly Poly::constant(const VarSpec& spec, const Rat& c) {
    Poly p(spec);
    p.add_term(Exps(spec.nvars(), 0), c);
    return p;
}

Poly Poly::var(const VarSpec& spec, int v, int power) {
    Exps e(spec.nvars(), 0);
    e[v] = power;
    return monomial(spec, e, 1);
}

Poly Poly::monomial(const VarSpec& spec, const Exps& e, const Rat& c) {
    Poly p(spec);
    p.add_term(e, c);
    return p;
}

int Poly::total_degree() const {
    if (terms_.empty()) return -1;
    return exps_degree(terms_.rbegin()->first);
}

int Poly::degree_in(int v) const {
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[v]);
    return d;
}

Rat Poly::coeff(const Exps& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rat(0) : it->second;
}

Rat Poly::constant_term() const {
    return coeff(Exps(spec_.nvars(), 0));
}

void Poly::add_term(const Exps& e, const Rat& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Poly Poly::operator-() const {
    Poly p(spec_);
    for (const auto& [e, c] : terms_) p.terms_.emplace(e, -c);
    return p;
}

Poly Poly::operator+(const Poly& o) const {
    Poly p = *this;
    p += o;
    return p;
}

Poly Poly::operator-(const Poly& o) const {
    Poly p = *this;
    p -= o;
    return p;
}

Poly& Poly::operator+=(const Poly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

Poly Poly::operator*(const Poly& o) const {
    Poly p(spec_);
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) {
            Exps e(ea);
            for (size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
            p.add_term(e, ca * cb);
        }
    return p;
}

Poly Poly::scaled(const Rat& c) const {
    Poly p(spec_);
    if (c == 0) return p;
    for (const auto& [e, k] : terms_) p.terms_.emplace(e, c * k);
    return p;
}

Poly operator*(const Rat& c, const Poly& p) { return p.scaled(c); }

Poly Poly::mul_truncate(const Poly& o, int l) const {
    Poly p(spec_);
    for (const auto& [ea, ca] : terms_) {
        int da = exps_degree(ea);
        if (da > l) continue;
        for (const auto& [eb, cb] : o.terms_) {
            if (da + exps_degree(eb) > l) continue;
            Exps e(ea);
            for (size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
            p.add_term(e, ca * cb);
        }
    }
    return p;
}

Poly Poly::truncate(int l) const {
    Poly p(spec_);
    for (const auto& [e, c] : terms_)
        if (exps_degree(e) <= l) p.terms_.emplace(e, c);
    return p;
}

Poly Poly::diff(int v) const {
    Poly p(spec_);
    for (const auto& [e, c] : terms_) {
        if (e[v] == 0) continue;
        Exps d(e);
        d[v] -= 1;
        p.add_term(d, c * e[v]);
    }
    return p;
}

Poly Poly::x_ddx(int v) const {
    Poly p(spec_);
    for (const auto& [e, c] : terms_) {
        if (e[v] == 0) continue;
        p.add_term(e, c * e[v]);
    }
    return p;
}

Poly Poly::substitute(const std::map<int, Poly>& assign, int l) const {
    Poly out(spec_);
    // cache powers of each assigned polynomial
    std::map<int, std::vector<Poly>> powers;
    for (const auto& [e, c] : terms_) {
        Poly term = Poly::constant(spec_, c);
        bool dead = false;
        for (int v = 0; v < (int)e.size() && !dead; ++v) {
            if (e[v] == 0) continue;
            auto it = assign.find(v);
            if (it == assign.end()) {
                term = term.mul_truncate(Poly::var(spec_, v, e[v]), l);
            } else {
                auto& pw = powers[v];
                if (pw.empty()) pw.push_back(it->second.truncate(l));
                while ((int)pw.size() < e[v])
                    pw.push_back(pw.back().mul_truncate(pw.front(), l));
                term = term.mul_truncate(pw[e[v] - 1], l);
            }
            if (term.is_zero()) dead = true;
        }
        out += term;
    }
    return out;
}

Poly Poly::unit_inverse(int l) const {
    Rat c0 = constant_term();
    if (c0 == 0) throw std::domain_error("unit_inverse: not a unit");
    // inv = (1/c0) * sum_j (-h)^j with h = p/c0 - 1
    Poly h = scaled(1 / c0);
    h.add_term(Exps(spec_.nvars(), 0), -1);
    Poly acc = Poly::constant(spec_, 1);
    Poly pw = Poly::constant(spec_, 1);
    for (int j = 1; j <= l; ++j) {
        pw = pw.mul_truncate(h, l);
        if (pw.is_zero()) break;
        acc += (j % 2 ? -pw : pw);
    }
    return acc.scaled(1 / c0);
}

Poly Poly::unit_sqrt(int l) const {
    Rat c0 = constant_term();
    if (!(c0 > 0)) throw std::domain_error("unit_sqrt: constant term must be positive");
    // sqrt(c0) must stay rational for exact arithmetic; callers arrange
    // c0 == 1 by scaling first.
    if (c0 != 1) throw std::domain_error("unit_sqrt: expects constant term 1");
    Poly h = *this;
    h.add_term(Exps(spec_.nvars(), 0), -1);
    // binomial series sum binom(1/2, j) h^j
    Poly acc = Poly::constant(spec_, 1);
    Poly pw = Poly::constant(spec_, 1);
    Rat binom = 1;
    for (int j = 1; j <= l; ++j) {
        pw = pw.mul_truncate(h, l);
        if (pw.is_zero()) break;
        binom *= Rat(3 - 2 * j) / Rat(2 * j);
        acc += pw.scaled(binom);
    }
    return acc;
}

Poly Poly::remap(const VarSpec& to, const std::vector<int>& var_map) const {
    Poly out(to);
    for (const auto& [e, c] : terms_) {
        Exps ne(to.nvars(), 0);
        for (int v = 0; v < (int)e.size(); ++v) {
            if (e[v] == 0) continue;
            if (var_map[v] < 0)
                throw std::domain_error("remap: polynomial uses a dropped variable");
            ne[var_map[v]] += e[v];
        }
        out.add_term(ne, c);
    }
    return out;
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    // print highest degree first, mirroring the usual germ notation
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Rat a = c;
        if (first) {
            if (a < 0) { os << "-"; a = -a; }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        std::string mon;
        for (int v = 0; v < (int)e.size(); ++v) {
            if (e[v] == 0) continue;
            if (!mon.empty()) mon += "*";
            mon += spec_.var_name(v);
            if (e[v] > 1) mon += "^" + std::to_string(e[v]);
        }
        if (mon.empty()) {
            os << rat_str(a);
        } else {
            if (a != 1) os << rat_str(a) << "*";
            os << mon;
        }
    }
    return os.str();
}

double Poly::eval(const std::vector<double>& point) const {
    double acc = 0;
    for (const auto& [e, c] : terms_) {
        double t = rat_double(c);
        for (int v = 0; v < (int)e.size(); ++v)
            for (int j = 0; j < e[v]; ++j) t *= point[v];
        acc += t;
    }
    return acc;
}

namespace {
void enumerate_rec(const VarSpec& spec, const std::vector<int>& vars, size_t i,
                   int remaining, Exps& cur, std::vector<Exps>& out) {
    if (i == vars.size()) {
        out.push_back(cur);
        return;
    }
    for (int d = 0; d <= remaining; ++d) {
        cur[vars[i]] = d;
        enumerate_rec(spec, vars, i + 1, remaining - d, cur, out);
    }
    cur[vars[i]] = 0;
}
} // namespace

std::vector<Exps> monomials_of(const VarSpec& spec, int dmin, int dmax,
                               const std::vector<int>* restrict_vars) {
    std::vector<int> vars;
    if (restrict_vars) {
        vars = *restrict_vars;
    } else {
        vars.resize(spec.nvars());
        for (int v = 0; v < spec.nvars(); ++v) vars[v] = v;
    }
    std::vector<Exps> all;
    Exps cur(spec.nvars(), 0);
    enumerate_rec(spec, vars, 0, dmax, cur, all);
    std::vector<Exps> out;
    for (auto& e : all) {
        int d = exps_degree(e);
        if (d >= dmin && d <= dmax) out.push_back(std::move(e));
    }
    std::sort(out.begin(), out.end(), GradedLex{});
    return out;
}

} // namespace retic
