#include "retic/jetspace.hpp"

#include <algorithm>

namespace retic {

JetSpace JetSpace::make(const VarSpec& spec, int l) {
    JetSpace js;
    js.spec = spec;
    js.l = l;
    js.monos = monomials_of(spec, 0, l);
    std::sort(js.monos.begin(), js.monos.end(), CornerGradedLex(&js.spec));
    for (int i = 0; i < (int)js.monos.size(); ++i) js.index.emplace(js.monos[i], i);
    return js;
}

ProductJetSpace ProductJetSpace::make(std::vector<JetSpace> slots) {
    ProductJetSpace ps;
    ps.slots = std::move(slots);
    int off = 0;
    for (auto& s : ps.slots) {
        ps.offset.push_back(off);
        off += s.dim();
    }
    ps.total = off;
    return ps;
}

std::pair<int, Exps> ProductJetSpace::column(int col) const {
    for (int s = nslots() - 1; s >= 0; --s)
        if (col >= offset[s]) return {s, slots[s].monos[col - offset[s]]};
    throw std::out_of_range("column");
}

std::string ProductJetSpace::column_str(int col) const {
    auto [s, e] = column(col);
    std::string mon = Poly::monomial(slots[s].spec, e, 1).str();
    if (nslots() == 1) return mon;
    return "slot" + std::to_string(s + 1) + ":" + mon;
}

namespace {

// v -= c * row, both sorted sparse
void axpy(std::map<int, Rat>& v, const Rat& c, const SparseVec& row) {
    for (const auto& [col, val] : row) {
        auto [it, inserted] = v.emplace(col, -c * val);
        if (!inserted) {
            it->second -= c * val;
            if (it->second == 0) v.erase(it);
        } else if (it->second == 0) {
            v.erase(it);
        }
    }
}

SparseVec from_map(const std::map<int, Rat>& m) {
    SparseVec v(m.begin(), m.end());
    return v;
}

} // namespace

SparseVec RowReducer::reduce(const SparseVec& v) const {
    std::map<int, Rat> work(v.begin(), v.end());
    for (auto it = work.begin(); it != work.end();)
        it = (it->second == 0) ? work.erase(it) : std::next(it);
    while (!work.empty()) {
        int lead = work.rbegin()->first;
        auto rit = rows_.find(lead);
        if (rit == rows_.end()) break;
        Rat c = work.rbegin()->second; // copy; axpy erases the lead entry
        axpy(work, c, rit->second);
    }
    return from_map(work);
}

bool RowReducer::add(const SparseVec& v) {
    SparseVec red = reduce(v);
    if (red.empty()) return false;
    // normalize pivot (largest column) to 1
    Rat piv = red.back().second;
    if (piv != 1)
        for (auto& [c, val] : red) val /= piv;
    rows_.emplace(red.back().first, std::move(red));
    return true;
}

std::vector<int> RowReducer::nonpivot_columns() const {
    std::vector<int> out;
    auto it = rows_.begin();
    for (int c = 0; c < dim_; ++c) {
        while (it != rows_.end() && it->first < c) ++it;
        if (it == rows_.end() || it->first != c) out.push_back(c);
    }
    return out;
}

void RowReducer::finalize() {
    // eliminate every pivot from the other rows, highest pivot first
    for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
        const int piv = it->first;
        for (auto& [p2, row] : rows_) {
            if (p2 == piv) continue;
            auto found = std::lower_bound(row.begin(), row.end(),
                                          std::make_pair(piv, Rat(0)),
                                          [](const auto& a, const auto& b) { return a.first < b.first; });
            if (found == row.end() || found->first != piv) continue;
            std::map<int, Rat> work(row.begin(), row.end());
            axpy(work, found->second, it->second);
            row = from_map(work);
        }
    }
}

SparseVec to_sparse(const ProductJetSpace& space, const std::vector<Poly>& vec) {
    SparseVec out;
    for (int s = 0; s < space.nslots(); ++s) {
        if (s >= (int)vec.size() || vec[s].is_zero()) continue;
        const JetSpace& js = space.slots[s];
        for (const auto& [e, c] : vec[s].terms()) {
            auto it = js.index.find(e);
            if (it == js.index.end()) continue; // beyond truncation
            out.emplace_back(space.offset[s] + it->second, c);
        }
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

bool LinSubspace::member(const std::vector<Poly>& vec) const {
    return red.contains(to_sparse(space, vec));
}

namespace {

std::vector<int> resolve_vars(const VarSpec& spec, const CoeffRing& coeff) {
    std::vector<int> vars;
    if (coeff.vars.empty()) {
        vars.resize(spec.nvars());
        for (int v = 0; v < spec.nvars(); ++v) vars[v] = v;
    } else {
        for (const auto& name : coeff.vars) {
            int v = spec.find_var(name);
            if (v < 0) throw std::domain_error("coefficient variable '" + name + "' not in spec");
            vars.push_back(v);
        }
    }
    return vars;
}

} // namespace

void SpanBuilder::add_slot_gen(int slot, const Poly& g, const CoeffRing& coeff) {
    if (g.is_zero()) return;
    const JetSpace& js = sub_.space.slots[slot];
    if (!(g.spec() == js.spec))
        throw std::domain_error("slot generator spec mismatch");
    if (coeff.kind == CoeffRing::Scalars) {
        std::vector<Poly> vec(sub_.space.nslots(), Poly());
        for (int s = 0; s < sub_.space.nslots(); ++s) vec[s] = Poly::zero(sub_.space.slots[s].spec);
        vec[slot] = g.truncate(js.l);
        sub_.red.add(to_sparse(sub_.space, vec));
        return;
    }
    auto vars = resolve_vars(js.spec, coeff);
    for (const Exps& mon : monomials_of(js.spec, coeff.min_deg(), js.l, &vars)) {
        if (sub_.red.full()) return;
        Poly row = Poly::monomial(js.spec, mon, 1).mul_truncate(g, js.l);
        if (row.is_zero()) continue;
        SparseVec sv;
        for (const auto& [e, c] : row.terms())
            sv.emplace_back(sub_.space.offset[slot] + js.index.at(e), c);
        sub_.red.add(sv);
    }
}

void SpanBuilder::add_coupled_gen(const std::vector<Poly>& g, const CoeffRing& coeff) {
    const int m = sub_.space.nslots();
    bool all_zero = true;
    for (const auto& p : g) all_zero = all_zero && p.is_zero();
    if (all_zero) return;
    if (coeff.kind == CoeffRing::Scalars) {
        std::vector<Poly> vec;
        for (int s = 0; s < m; ++s) vec.push_back(g[s].truncate(sub_.space.slots[s].l));
        sub_.red.add(to_sparse(sub_.space, vec));
        return;
    }
    // Coefficient monomials live in shared parameters; enumerate them once
    // against slot 0 and translate per slot by name.
    const VarSpec& s0 = sub_.space.slots[0].spec;
    auto vars0 = resolve_vars(s0, coeff);
    int l = sub_.space.slots[0].l;
    for (const Exps& mon0 : monomials_of(s0, coeff.min_deg(), l, &vars0)) {
        if (sub_.red.full()) return;
        std::vector<Poly> vec;
        bool nonzero = false;
        for (int s = 0; s < m; ++s) {
            const JetSpace& js = sub_.space.slots[s];
            Exps mon(js.spec.nvars(), 0);
            for (int v = 0; v < s0.nvars(); ++v) {
                if (mon0[v] == 0) continue;
                int tv = js.spec.find_var(s0.var_name(v));
                if (tv < 0) throw std::domain_error("coupled coefficient variable missing in slot");
                mon[tv] = mon0[v];
            }
            Poly row = Poly::monomial(js.spec, mon, 1).mul_truncate(g[s], js.l);
            nonzero = nonzero || !row.is_zero();
            vec.push_back(std::move(row));
        }
        if (nonzero) sub_.red.add(to_sparse(sub_.space, vec));
    }
}

LinSubspace module_span(const std::vector<std::vector<Poly>>& gens,
                        const CoeffRing& coeff, const ProductJetSpace& space) {
    SpanBuilder b(space);
    for (const auto& g : gens) {
        if ((int)g.size() != space.nslots())
            throw std::domain_error("generator arity does not match product space");
        int nz = 0, where = -1;
        for (int s = 0; s < space.nslots(); ++s)
            if (!g[s].is_zero()) { ++nz; where = s; }
        if (nz == 0) continue;
        if (nz == 1 && coeff.vars.empty() && coeff.kind != CoeffRing::Scalars)
            b.add_slot_gen(where, g[where], coeff);
        else
            b.add_coupled_gen(g, coeff);
    }
    return b.take();
}

std::vector<std::pair<int, Exps>> quotient_basis(const LinSubspace& sub) {
    std::vector<std::pair<int, Exps>> out;
    for (int col : sub.red.nonpivot_columns()) out.push_back(sub.space.column(col));
    return out;
}

} // namespace retic
