#pragma once

#include <optional>
#include <string>

#include "retic/germ.hpp"

namespace retic {

// Truncation-order cap; n is the available parameter dimension. The default
// n+5 can be overridden through the RETIC_JET_CAP environment variable.
int jet_cap(int n);

// Tangent space to the reticular K-orbit of a single germ at order l:
//   <f, x1 df/dx1, ..., xr df/dxr>_E  +  M . <df/dy1, ..., df/dyk>
LinSubspace orbit_tangent_rk(const Poly& f, int l);

// Extended module Q_f with ring coefficients on all generators:
//   <f, x df/dx, df/dy>_E
LinSubspace ext_tangent_q(const Poly& f, int l);

struct CodimComponent {
    bool isolated = true;
    int mu = -1;               // -1 encodes infinity
    std::vector<Exps> phis;    // monomial basis, maximal degree first, 1 last
    int l_used = 0;
};

struct CodimReport {
    std::vector<CodimComponent> comps;
    bool finite() const {
        for (auto& c : comps) if (!c.isolated) return false;
        return true;
    }
    int total() const {
        int t = 0;
        for (auto& c : comps) t += c.mu;
        return t;
    }
    std::vector<int> mu_vector() const {
        std::vector<int> v;
        for (auto& c : comps) v.push_back(c.mu);
        return v;
    }
};

// mu and phi-basis per component, stabilized over two consecutive jet
// orders; non-isolated components are reported rather than raised.
CodimComponent codim_component(const Poly& bare, int cap = -1);
CodimReport codim_report(const MultiGerm& f0, int cap = -1);

enum class Verdict { True, False, Inconclusive };

struct DeterminacyTest {
    bool sufficient = false; // M^{l+1} in M(<f,x df/dx> + M<df/dy>) + M^{l+2}
    bool necessary = false;  // same inclusion for <j^l f, ...>_E + M<d j^l f/dy>
    Verdict verdict = Verdict::Inconclusive;
};

// Reticular K-determinacy tests for one germ at order l. The sufficient test
// follows the finite-determinacy lemma; the necessary direction is applied
// to the l-jet of f (an l-determined germ is equivalent to its l-jet, which
// must then satisfy the lemma's necessary inclusion).
DeterminacyTest rk_determinacy(const Poly& f, int l);

// Smallest l <= cap whose sufficient test passes; nullopt if none.
std::optional<int> rk_determinacy_order(const Poly& f, int cap = -1);

// Reticular (P-K)_m determinacy sufficient test at order l for a
// parametrized multi-germ f(x, y, u).
Verdict pk_l_determined(const MultiGerm& f, int l);

struct VersalityOptions {
    bool include_t_row = true;
    int drop_u = -1;       // index into Family::u_param_names(), or -1
    int force_l = -1;      // skip stabilization and test at this order
};

struct VersalityResult {
    bool ok = false;
    int l_used = 0;
    bool stabilized = true;
    std::string witness;   // a missing quotient direction when !ok

    explicit operator bool() const { return ok; }
};

// Infinitesimal reticular t-(P-K)_m-versality of F as an unfolding of
// F|_{t=0}, evaluated at a stabilized truncation order.
VersalityResult is_inf_versal(const Family& F, VersalityOptions opt = {}, int cap = -1);

// Infinitesimal reticular t-(P-K)_m-stability of F.
VersalityResult is_inf_stable(const Family& F, int cap = -1);

} // namespace retic
