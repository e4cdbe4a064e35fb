#include "retic/tangent.hpp"

#include <cstdlib>

namespace retic {

int jet_cap(int n) {
    if (const char* env = std::getenv("RETIC_JET_CAP")) {
        int v = std::atoi(env);
        if (v >= 2) return v;
    }
    return n + 5;
}

namespace {

ProductJetSpace single_space(const VarSpec& spec, int l) {
    return ProductJetSpace::make({JetSpace::make(spec, l)});
}

void add_orbit_gens(SpanBuilder& b, int slot, const Poly& f, const CoeffRing& ring_coeff,
                    const CoeffRing& y_coeff) {
    const VarSpec& s = f.spec();
    b.add_slot_gen(slot, f, ring_coeff);
    for (int i = 0; i < s.r; ++i) b.add_slot_gen(slot, f.x_ddx(s.x_index(i)), ring_coeff);
    for (int j = 0; j < s.k; ++j) b.add_slot_gen(slot, f.diff(s.y_index(j)), y_coeff);
}

// Check that every monomial vector of total degree exactly `deg` lies in sub.
bool covers_degree(const LinSubspace& sub, int deg) {
    for (int col : sub.red.nonpivot_columns()) {
        auto [slot, e] = sub.space.column(col);
        if (exps_degree(e) == deg) return false;
    }
    return true;
}

} // namespace

LinSubspace orbit_tangent_rk(const Poly& f, int l) {
    if (f.constant_term() != 0)
        throw std::domain_error("orbit_tangent_rk: germ must vanish at 0");
    SpanBuilder b(single_space(f.spec(), l));
    add_orbit_gens(b, 0, f, CoeffRing::E(), CoeffRing::M());
    return b.take();
}

LinSubspace ext_tangent_q(const Poly& f, int l) {
    if (f.constant_term() != 0)
        throw std::domain_error("ext_tangent_q: germ must vanish at 0");
    SpanBuilder b(single_space(f.spec(), l));
    add_orbit_gens(b, 0, f, CoeffRing::E(), CoeffRing::E());
    return b.take();
}

CodimComponent codim_component(const Poly& bare, int cap) {
    if (cap < 0) cap = jet_cap(bare.spec().nparams());
    CodimComponent out;
    int prev = -1;
    for (int l = 2; l <= cap + 1; ++l) {
        LinSubspace sub = ext_tangent_q(bare, l);
        int d = sub.codim();
        if (d == prev) {
            out.isolated = true;
            out.mu = d;
            out.l_used = l;
            for (auto& [slot, e] : quotient_basis(sub)) out.phis.push_back(e);
            // maximal degree first, constant last
            std::sort(out.phis.begin(), out.phis.end(),
                      [](const Exps& a, const Exps& b) { return GradedLex{}(b, a); });
            return out;
        }
        prev = d;
    }
    out.isolated = false;
    out.mu = -1;
    out.l_used = cap + 1;
    return out;
}

CodimReport codim_report(const MultiGerm& f0, int cap) {
    CodimReport rep;
    for (const auto& c : f0.comps)
        rep.comps.push_back(codim_component(bare_germ(at_params_zero(c)), cap));
    return rep;
}

DeterminacyTest rk_determinacy(const Poly& f, int l) {
    DeterminacyTest t;
    const VarSpec& s = f.spec();
    {
        // sufficient: M^{l+1} in M(<f, x df/dx> + M<df/dy>) + M^{l+2}, read in J^{l+1}
        SpanBuilder b(single_space(s, l + 1));
        add_orbit_gens(b, 0, f, CoeffRing::M(), CoeffRing::M_pow(2));
        LinSubspace sub = b.take();
        t.sufficient = covers_degree(sub, l + 1);
    }
    {
        // necessary, applied to the l-jet: M^{l+1} in <g, x dg/dx>_E + M<dg/dy>
        Poly g = f.jet(l);
        SpanBuilder b(single_space(s, l + 1));
        add_orbit_gens(b, 0, g, CoeffRing::E(), CoeffRing::M());
        LinSubspace sub = b.take();
        t.necessary = covers_degree(sub, l + 1);
    }
    if (t.sufficient) t.verdict = Verdict::True;
    else if (!t.necessary) t.verdict = Verdict::False;
    else t.verdict = Verdict::Inconclusive;
    return t;
}

std::optional<int> rk_determinacy_order(const Poly& f, int cap) {
    if (cap < 0) cap = jet_cap(f.spec().nparams());
    for (int l = 1; l <= cap; ++l)
        if (rk_determinacy(f, l).sufficient) return l;
    return std::nullopt;
}

Verdict pk_l_determined(const MultiGerm& f, int l) {
    ProductJetSpace space = product_space(f.comps, l);
    SpanBuilder b(space);
    for (int i = 0; i < f.m(); ++i)
        add_orbit_gens(b, i, f.comps[i].f, CoeffRing::E(), CoeffRing::M());
    std::vector<std::string> unames;
    for (const auto& p : f.shared) unames.push_back(p.name);
    for (const auto& name : unames) {
        std::vector<Poly> row;
        for (const auto& c : f.comps) row.push_back(c.f.diff(c.f.spec().find_var(name)));
        b.add_coupled_gen(row, CoeffRing::M_of(unames));
    }
    LinSubspace sub = b.take();
    return covers_degree(sub, l) ? Verdict::True : Verdict::Inconclusive;
}

namespace {

struct VersalitySetup {
    bool stable_test = false;      // stable: use F and t-function coefficients
    VersalityOptions opt;
};

// Remap every component onto a spec without the t-parameter. Expressions
// must already be t-free (apply at_t0 first).
Family drop_t_var(const Family& F) {
    Family G;
    for (const auto& p : F.shared)
        if (p.role != Role::Time) G.shared.push_back(p);
    for (const auto& c : F.comps) {
        const VarSpec& from = c.f.spec();
        VarSpec to = germ_spec(c.r, c.k);
        for (const auto& p : from.params)
            if (p.role != Role::Time) to.params.push_back(p);
        std::vector<int> map(from.nvars(), -1);
        for (int v = 0; v < c.r + c.k; ++v) map[v] = v;
        int out = c.r + c.k;
        for (int j = 0; j < from.nparams(); ++j)
            if (from.params[j].role != Role::Time) map[from.param_index(j)] = out++;
        G.comps.push_back({c.f.remap(to, map), c.r, c.k});
    }
    return G;
}

bool versal_at_order(const Family& F, int l, const VersalitySetup& vs, std::string* witness) {
    const Family G = vs.stable_test ? F : drop_t_var(F.at_t0());
    ProductJetSpace space = product_space(G.comps, l);
    SpanBuilder b(space);
    for (int i = 0; i < G.m(); ++i)
        add_orbit_gens(b, i, G.comps[i].f, CoeffRing::E(), CoeffRing::E());

    std::vector<std::string> unames = G.u_param_names();
    std::vector<std::string> u_coeff = unames;
    const bool have_t = F.comps.empty() ? false : F.comps[0].f.spec().find_role(Role::Time) >= 0;
    if (vs.stable_test && have_t) u_coeff.insert(u_coeff.begin(), "t");
    for (int j = 0; j < (int)unames.size(); ++j) {
        if (!vs.stable_test && j == vs.opt.drop_u) continue;
        std::vector<Poly> row;
        for (const auto& c : G.comps) row.push_back(c.f.diff(c.f.spec().find_var(unames[j])));
        b.add_coupled_gen(row, CoeffRing::E_of(u_coeff));
    }

    if (have_t && vs.stable_test) {
        std::vector<Poly> row;
        for (const auto& c : F.comps) row.push_back(c.f.diff(c.f.spec().find_role(Role::Time)));
        b.add_coupled_gen(row, CoeffRing::E_of({"t"}));
    } else if (have_t && vs.opt.include_t_row) {
        // single R-row: dF/dt restricted to t = 0, mapped into the t-free spec
        std::vector<Poly> row;
        for (int i = 0; i < F.m(); ++i) {
            const auto& c = F.comps[i];
            int t = c.f.spec().find_role(Role::Time);
            Poly d = c.f.diff(t).substitute({{t, Poly::zero(c.f.spec())}}, l);
            GermComponent tmp{d, c.r, c.k};
            Family wrap;
            wrap.comps = {tmp};
            wrap.shared = F.shared;
            row.push_back(drop_t_var(wrap).comps[0].f);
        }
        b.add_coupled_gen(row, CoeffRing::R());
    }

    LinSubspace sub = b.take();
    if (sub.red.full()) return true;
    if (witness) {
        int col = sub.red.nonpivot_columns().front();
        *witness = sub.space.column_str(col);
    }
    return false;
}

VersalityResult run_versality(const Family& F, const VersalitySetup& vs, int cap) {
    if (cap < 0) {
        int n = 0;
        for (const auto& p : F.shared)
            if (p.role == Role::Q || p.role == Role::U) ++n;
        cap = jet_cap(n);
    }
    VersalityResult res;
    if (vs.opt.force_l > 0) {
        res.l_used = vs.opt.force_l;
        res.ok = versal_at_order(F, vs.opt.force_l, vs, &res.witness);
        return res;
    }
    bool prev = false, have_prev = false;
    for (int l = 3; l <= cap; ++l) {
        std::string witness;
        bool ok = versal_at_order(F, l, vs, &witness);
        if (have_prev && ok == prev) {
            res.ok = ok;
            res.l_used = l;
            res.witness = witness;
            return res;
        }
        prev = ok;
        have_prev = true;
        res.witness = witness;
    }
    res.ok = prev;
    res.l_used = cap;
    res.stabilized = false;
    return res;
}

} // namespace

VersalityResult is_inf_versal(const Family& F, VersalityOptions opt, int cap) {
    VersalitySetup vs;
    vs.stable_test = false;
    vs.opt = opt;
    return run_versality(F, vs, cap);
}

VersalityResult is_inf_stable(const Family& F, int cap) {
    VersalitySetup vs;
    vs.stable_test = true;
    return run_versality(F, vs, cap);
}

} // namespace retic
