#pragma once

#include <map>
#include <numeric>
#include <optional>
#include <vector>

#include "retic/rational.hpp"
#include "retic/varspec.hpp"

namespace retic {

// Exponent vector aligned with a VarSpec.
using Exps = std::vector<int>;

inline int exps_degree(const Exps& e) {
    return std::accumulate(e.begin(), e.end(), 0);
}

// Graded lexicographic order: lower total degree first, then lexicographic
// on the exponent vector. With variables laid out x-block, y-block,
// parameter-block this is the canonical term order of the whole library.
struct GradedLex {
    bool operator()(const Exps& a, const Exps& b) const {
        int da = exps_degree(a), db = exps_degree(b);
        if (da != db) return da < db;
        return a < b;
    }
};

// Sparse polynomial over exact rationals. Invariant: no zero coefficients
// stored component-wise; the term map is keyed by the canonical order.
class Poly {
public:
    Poly() = default;
    explicit Poly(VarSpec spec) : spec_(std::move(spec)) {}

    static Poly zero(const VarSpec& spec) { return Poly(spec); }
    static Poly constant(const VarSpec& spec, const Rat& c);
    static Poly var(const VarSpec& spec, int v, int power = 1);
    static Poly monomial(const VarSpec& spec, const Exps& e, const Rat& c);

    const VarSpec& spec() const { return spec_; }
    const std::map<Exps, Rat, GradedLex>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int total_degree() const;          // -1 for the zero polynomial
    int degree_in(int v) const;
    Rat coeff(const Exps& e) const;
    Rat constant_term() const;

    void add_term(const Exps& e, const Rat& c);

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    bool operator==(const Poly& o) const { return spec_ == o.spec_ && terms_ == o.terms_; }

    Poly scaled(const Rat& c) const;
    Poly mul_truncate(const Poly& o, int l) const;
    Poly truncate(int l) const;        // drop terms of total degree > l
    Poly jet(int l) const { return truncate(l); }
    Poly diff(int v) const;
    Poly x_ddx(int v) const;           // x_v * d/dx_v, the corner vector field

    // Substitute polynomials for a subset of variables, truncating at l.
    // Unassigned variables map to themselves.
    Poly substitute(const std::map<int, Poly>& assign, int l) const;

    // Multiplicative inverse of a unit germ, as a truncated series.
    Poly unit_inverse(int l) const;
    // sqrt of a unit germ with positive constant term, truncated.
    Poly unit_sqrt(int l) const;

    // Move this polynomial into another spec; var_map[i] is the index in
    // the new spec of old variable i, or -1 if the variable must be absent.
    Poly remap(const VarSpec& to, const std::vector<int>& var_map) const;

    std::string str() const;           // canonical germ-grammar printing

    double eval(const std::vector<double>& point) const;

private:
    VarSpec spec_;
    std::map<Exps, Rat, GradedLex> terms_;
};

Poly operator*(const Rat& c, const Poly& p);

// All monomials of the spec with dmin <= degree <= dmax, canonical order.
// `restrict_vars`, when given, confines the support to those variables.
std::vector<Exps> monomials_of(const VarSpec& spec, int dmin, int dmax,
                               const std::vector<int>* restrict_vars = nullptr);

} // namespace retic
