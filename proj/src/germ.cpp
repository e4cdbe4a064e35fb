#include "retic/germ.hpp"

namespace retic {

std::vector<std::string> Family::u_param_names() const {
    std::vector<std::string> out;
    for (const auto& p : shared)
        if (p.role != Role::Time) out.push_back(p.name);
    return out;
}

bool Family::has_z() const {
    for (const auto& p : shared)
        if (p.role == Role::Z) return true;
    return false;
}

Family Family::at_t0() const {
    Family g = *this;
    for (auto& c : g.comps) {
        int t = c.f.spec().find_role(Role::Time);
        if (t >= 0) c.f = c.f.substitute({{t, Poly::zero(c.f.spec())}}, 1 << 20);
    }
    return g;
}

MultiGerm Family::base() const {
    MultiGerm mg;
    for (const auto& c : comps) {
        GermComponent b;
        b.r = c.r;
        b.k = c.k;
        b.f = bare_germ(at_params_zero(c));
        mg.comps.push_back(std::move(b));
    }
    return mg;
}

MultiGerm make_multigerm(const std::vector<Poly>& comps) {
    MultiGerm mg;
    for (const auto& f : comps) {
        if (f.spec().nparams() != 0)
            throw std::domain_error("make_multigerm: expected parameter-free germs");
        mg.comps.push_back({f, f.spec().r, f.spec().k});
    }
    return mg;
}

JetSpace slot_space(const GermComponent& c, int l) {
    return JetSpace::make(c.f.spec(), l);
}

ProductJetSpace product_space(const std::vector<GermComponent>& comps, int l) {
    std::vector<JetSpace> slots;
    for (const auto& c : comps) slots.push_back(slot_space(c, l));
    return ProductJetSpace::make(std::move(slots));
}

Poly bare_germ(const GermComponent& c) {
    const VarSpec& from = c.f.spec();
    VarSpec to = germ_spec(c.r, c.k);
    std::vector<int> map(from.nvars(), -1);
    for (int v = 0; v < c.r + c.k; ++v) map[v] = v;
    return c.f.remap(to, map);
}

GermComponent at_params_zero(const GermComponent& c) {
    GermComponent out = c;
    std::map<int, Poly> zero;
    const VarSpec& s = c.f.spec();
    for (int j = 0; j < s.nparams(); ++j)
        zero.emplace(s.param_index(j), Poly::zero(s));
    if (!zero.empty()) out.f = c.f.substitute(zero, 1 << 20);
    return out;
}

} // namespace retic
