#pragma once

#include <string>

#include "retic/reduce.hpp"
#include "retic/tangent.hpp"

namespace retic {

// Simple boundary singularity classes recognized by the classifier.
enum class GermClass { A, B, C, F, OutOfCatalog, NonIsolated };

struct ComponentClass {
    GermClass cls = GermClass::OutOfCatalog;
    int index = 0;      // k of A_k / B_k / C_k
    int sign = 0;       // C_3: +1 or -1; 0 elsewhere
    int mu = -1;
    int mu_boundary = -1; // mu of the restriction to x = 0 (r = 1 residuals)
    ReductionRecord reduction;
    std::string reason; // for OutOfCatalog / NonIsolated

    bool in_catalog() const { return cls != GermClass::OutOfCatalog && cls != GermClass::NonIsolated; }
    std::string symbol() const; // "A_2", "B_3", "C_3^+", "C_4", "F_4"
};

// Stable reduction followed by recognition on the invariant tuple
// (residual r, residual k, mu, mu_boundary).
ComponentClass classify_component(const Poly& bare_germ, int cap = -1);

struct Classification {
    bool accepted = false;
    std::string reject_reason;
    int prefix = 0; // 1 iff the mu-budget is saturated
    int n = 0;
    std::vector<ComponentClass> comps;

    std::vector<int> mu_vector() const {
        std::vector<int> v;
        for (auto& c : comps) v.push_back(c.mu);
        return v;
    }
    int mu_total() const {
        int t = 0;
        for (auto& c : comps) t += c.mu;
        return t;
    }
    std::string label() const; // "^1(^0A_1^0A_2)" when accepted
};

// Classify a bare multi-germ against the catalog for ambient parameter
// dimension n: component recognition, the budget mu_1+...+mu_m <= n+2, and
// the leave-one-out codimension-0 condition.
Classification classify_multigerm(const MultiGerm& f0, int n, int cap = -1);

} // namespace retic
