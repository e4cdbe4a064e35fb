#include "retic/classify.hpp"

namespace retic {

std::string ComponentClass::symbol() const {
    switch (cls) {
        case GermClass::A: return "A_" + std::to_string(index);
        case GermClass::B: return "B_" + std::to_string(index);
        case GermClass::C:
            if (index == 3) return sign > 0 ? "C_3^+" : "C_3^-";
            return "C_" + std::to_string(index);
        case GermClass::F: return "F_4";
        case GermClass::NonIsolated: return "non-isolated";
        case GermClass::OutOfCatalog: return "out-of-catalog";
    }
    return "?";
}

ComponentClass classify_component(const Poly& f, int cap) {
    if (cap < 0) cap = jet_cap(f.spec().nparams());
    ComponentClass out;

    CodimComponent cd = codim_component(f, cap);
    out.mu = cd.mu;
    if (!cd.isolated) {
        out.cls = GermClass::NonIsolated;
        out.reason = "quotient dimension does not stabilize (mu = infinity)";
        return out;
    }

    out.reduction = reduce_stably(f, cap);
    const Poly& res = out.reduction.residual;
    const int r = out.reduction.r_res, k = out.reduction.k_res;

    if (out.reduction.submersive || out.mu == 0) {
        out.cls = GermClass::OutOfCatalog;
        out.reason = "submersive germ (mu = 0)";
        return out;
    }
    if (r == 0) {
        // A-series: residual is y^{mu+1} up to equivalence (or nothing at
        // all when the quadratic form swallowed the whole germ)
        if (k <= 1 && out.mu >= 1 && out.mu <= 4) {
            out.cls = GermClass::A;
            out.index = out.mu;
            return out;
        }
        out.cls = GermClass::OutOfCatalog;
        out.reason = k > 1 ? "residual needs >= 2 fiber variables" : "mu beyond the simple range";
        return out;
    }
    if (r == 1 && k == 0) {
        if (out.mu >= 2 && out.mu <= 4) {
            out.cls = GermClass::B;
            out.index = out.mu;
            return out;
        }
        out.cls = GermClass::OutOfCatalog;
        out.reason = "boundary germ with mu outside 2..4";
        return out;
    }
    if (r == 1 && k == 1) {
        // boundary restriction invariant separates C from F
        Poly boundary = res.substitute({{res.spec().x_index(0), Poly::zero(res.spec())}}, cap);
        int rb, kb;
        {
            const VarSpec& s = res.spec();
            VarSpec to = germ_spec(0, 1);
            to.params = s.params;
            std::vector<int> map(s.nvars(), -1);
            map[s.y_index(0)] = 0;
            for (int j = 0; j < s.nparams(); ++j) map[s.param_index(j)] = 1 + j;
            boundary = boundary.remap(to, map);
            rb = 0;
            kb = 1;
            (void)rb;
            (void)kb;
        }
        CodimComponent bd = codim_component(boundary, cap);
        out.mu_boundary = bd.isolated ? bd.mu : -1;

        Exps exy(res.spec().nvars(), 0), ey3(res.spec().nvars(), 0), ex2(res.spec().nvars(), 0);
        exy[res.spec().x_index(0)] = 1;
        exy[res.spec().y_index(0)] = 1;
        ey3[res.spec().y_index(0)] = 3;
        ex2[res.spec().x_index(0)] = 2;
        Rat cxy = res.coeff(exy), cy3 = res.coeff(ey3), cx2 = res.coeff(ex2);

        if (out.mu == 3 && out.mu_boundary == 2 && cxy != 0 && cy3 != 0) {
            out.cls = GermClass::C;
            out.index = 3;
            // Normalizing the y^3 coefficient to +1 with positive corner
            // scalings leaves sign(cxy * cy3) as the residual invariant.
            out.sign = rat_sign(cxy * cy3);
            return out;
        }
        if (out.mu == 4 && out.mu_boundary == 2 && cx2 != 0) {
            out.cls = GermClass::F;
            out.index = 4;
            return out;
        }
        if (out.mu == 4 && out.mu_boundary == 3 && cxy != 0) {
            out.cls = GermClass::C;
            out.index = 4;
            return out;
        }
        out.cls = GermClass::OutOfCatalog;
        out.reason = "corner germ invariants match no simple class";
        return out;
    }
    out.cls = GermClass::OutOfCatalog;
    out.reason = "r >= 2 corners are outside the generic catalog";
    return out;
}

std::string Classification::label() const {
    std::string s = "^" + std::to_string(prefix) + "(";
    for (const auto& c : comps) s += "^0" + c.symbol();
    s += ")";
    return s;
}

Classification classify_multigerm(const MultiGerm& f0, int n, int cap) {
    Classification out;
    out.n = n;
    for (const auto& comp : f0.comps)
        out.comps.push_back(classify_component(bare_germ(at_params_zero(comp)), cap));

    for (const auto& c : out.comps) {
        if (c.cls == GermClass::NonIsolated) {
            out.reject_reason = "non-isolated: " + c.reason;
            return out;
        }
        if (c.cls == GermClass::OutOfCatalog) {
            out.reject_reason = "component out of catalog: " + c.reason;
            return out;
        }
    }
    int total = out.mu_total();
    if (total > n + 2) {
        out.reject_reason = "budget exceeded: mu_1+...+mu_m = " + std::to_string(total) +
                            " > n+2 = " + std::to_string(n + 2);
        return out;
    }
    for (size_t i = 0; i < out.comps.size(); ++i) {
        int rest = total - out.comps[i].mu;
        if (rest > n + 1) {
            out.reject_reason = "leave-one-out violated: dropping component " +
                                std::to_string(i + 1) + " leaves codimension " +
                                std::to_string(rest) + " > n+1";
            return out;
        }
    }
    out.accepted = true;
    out.prefix = (total == n + 2) ? 1 : 0;
    return out;
}

} // namespace retic
