#pragma once

#include <vector>

#include "retic/jetspace.hpp"
#include "retic/poly.hpp"

namespace retic {

// One component of a multi-germ: a germ on the r-corner H^r x R^k, possibly
// depending on the shared parameter block of its spec.
struct GermComponent {
    Poly f;
    int r = 0;
    int k = 0;
};

// m-tuple of germs over one shared parameter block. Components may have
// different corner/fiber counts; the parameter tail of every component spec
// is identical.
struct MultiGerm {
    std::vector<GermComponent> comps;
    std::vector<Param> shared;

    int m() const { return static_cast<int>(comps.size()); }
};

// Unfolded multi-germ F(x,y,t,q,z). The spec always carries a t-parameter
// (expressions need not use it); q/u parameters and z follow.
struct Family {
    std::vector<GermComponent> comps;
    std::vector<Param> shared; // includes t

    int m() const { return static_cast<int>(comps.size()); }
    std::vector<std::string> u_param_names() const; // everything except t
    bool has_z() const;

    // Restrict t = 0 (specs keep their parameter block).
    Family at_t0() const;
    // Base multi-germ: all parameters set to 0, parameter block dropped.
    MultiGerm base() const;
};

// Build a multi-germ from bare germ components (no parameters).
MultiGerm make_multigerm(const std::vector<Poly>& comps);

// Jet space of one component at order l.
JetSpace slot_space(const GermComponent& c, int l);
ProductJetSpace product_space(const std::vector<GermComponent>& comps, int l);

// Strip the parameters of a component and return the bare germ in
// germ_spec(r, k); parameters must not occur (substitute them away first).
Poly bare_germ(const GermComponent& c);

// Substitute 0 for every parameter of the component's spec.
GermComponent at_params_zero(const GermComponent& c);

} // namespace retic
