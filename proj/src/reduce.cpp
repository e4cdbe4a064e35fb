#include "retic/reduce.hpp"

namespace retic {

namespace {

// Drop variable `v` from the spec of `f`; f must not use it.
Poly drop_var(const Poly& f, int v, int& r, int& k) {
    const VarSpec& from = f.spec();
    VarSpec to = germ_spec(from.r - (from.is_x(v) ? 1 : 0),
                           from.k - (from.is_y(v) ? 1 : 0));
    to.params = from.params;
    std::vector<int> map(from.nvars(), -1);
    int out = 0;
    for (int w = 0; w < from.nvars(); ++w) {
        if (w == v) continue;
        map[w] = out++;
    }
    r = to.r;
    k = to.k;
    return f.remap(to, map);
}

// Solve d f/d y_v (y_v = phi) == 0 mod degree l for phi in the remaining
// variables; Newton iteration with exact series inversion.
Poly critical_shift(const Poly& f, int v, int l) {
    const VarSpec& s = f.spec();
    Poly g = f.diff(v);
    Poly phi = Poly::zero(s);
    for (int it = 0; it < l + 2; ++it) {
        Poly gv = g.substitute({{v, phi}}, l);
        if (gv.is_zero()) break;
        Poly dgv = g.diff(v).substitute({{v, phi}}, l);
        phi = (phi - gv.mul_truncate(dgv.unit_inverse(l), l)).truncate(l);
    }
    return phi;
}

} // namespace

ReductionRecord reduce_stably(const Poly& f, int l) {
    ReductionRecord rec;
    rec.l_used = l;
    Poly cur = f.truncate(l);
    int r = cur.spec().r, k = cur.spec().k;

    bool changed = true;
    while (changed) {
        changed = false;

        // corner variables with a unit linear coefficient split off;
        // the residual is the restriction to x_i = 0
        for (int i = 0; i < r; ++i) {
            Exps lin(cur.spec().nvars(), 0);
            lin[cur.spec().x_index(i)] = 1;
            Rat c = cur.coeff(lin);
            if (c == 0) continue;
            Poly restricted = cur.substitute({{cur.spec().x_index(i), Poly::zero(cur.spec())}}, l);
            cur = drop_var(restricted, cur.spec().x_index(i), r, k);
            rec.removed_x.push_back(c);
            changed = true;
            break;
        }
        if (changed) continue;

        // a linear y-part blocks the quadratic split (and means mu = 0)
        bool linear_y = false;
        for (int j = 0; j < k; ++j) {
            Exps lin(cur.spec().nvars(), 0);
            lin[cur.spec().y_index(j)] = 1;
            if (cur.coeff(lin) != 0) linear_y = true;
        }
        if (linear_y) {
            rec.submersive = true;
            break;
        }

        // quadratic split: prefer a diagonal Hessian entry, otherwise
        // rotate one hyperbolic pair onto the diagonal first
        int diag = -1, oi = -1, oj = -1;
        for (int i = 0; i < k && diag < 0; ++i) {
            Exps e(cur.spec().nvars(), 0);
            e[cur.spec().y_index(i)] = 2;
            if (cur.coeff(e) != 0) diag = i;
        }
        if (diag < 0) {
            for (int i = 0; i < k && oi < 0; ++i)
                for (int j = i + 1; j < k; ++j) {
                    Exps e(cur.spec().nvars(), 0);
                    e[cur.spec().y_index(i)] = 1;
                    e[cur.spec().y_index(j)] = 1;
                    if (cur.coeff(e) != 0) { oi = i; oj = j; break; }
                }
            if (oi >= 0) {
                // (y_i, y_j) -> (y_i + y_j, y_i - y_j) turns the cross term
                // into a difference of squares
                const VarSpec& s = cur.spec();
                Poly yi = Poly::var(s, s.y_index(oi));
                Poly yj = Poly::var(s, s.y_index(oj));
                cur = cur.substitute({{s.y_index(oi), yi + yj}, {s.y_index(oj), yi - yj}}, l);
                changed = true;
                continue;
            }
        }
        if (diag >= 0) {
            const VarSpec& s = cur.spec();
            int v = s.y_index(diag);
            Exps e(s.nvars(), 0);
            e[v] = 2;
            Rat c = cur.coeff(e);
            Poly phi = critical_shift(cur, v, l);
            Poly residual = cur.substitute({{v, phi}}, l);
            cur = drop_var(residual, v, r, k);
            rec.removed_quad.push_back(c);
            changed = true;
        }
    }

    rec.residual = cur;
    rec.r_res = r;
    rec.k_res = k;
    return rec;
}

} // namespace retic
