#pragma once

#include <map>
#include <optional>
#include <vector>

#include "retic/poly.hpp"

namespace retic {

// Column order used by the row reduction: corner degree first, then graded
// lexicographic. Pivots sit on the largest column, so monomials with
// x-content get eliminated in preference to fiber/parameter monomials and
// quotient bases come out as the paper's phi-lists (y-powers down to 1).
struct CornerGradedLex {
    const VarSpec* spec;
    explicit CornerGradedLex(const VarSpec* s = nullptr) : spec(s) {}
    int corner_deg(const Exps& e) const {
        int d = 0;
        for (int i = 0; i < spec->r; ++i) d += e[i];
        return d;
    }
    bool operator()(const Exps& a, const Exps& b) const {
        int ca = corner_deg(a), cb = corner_deg(b);
        if (ca != cb) return ca < cb;
        return GradedLex{}(a, b);
    }
};

// Finite-dimensional space of l-jets over one VarSpec. Columns are the
// monomials of degree <= l in the corner-weighted order above.
struct JetSpace {
    VarSpec spec;
    int l = 0;
    std::vector<Exps> monos;
    std::map<Exps, int, GradedLex> index;

    static JetSpace make(const VarSpec& spec, int l);
    int dim() const { return static_cast<int>(monos.size()); }
};

// m-fold product of jet spaces; the coefficient vector is the concatenation
// of the slot vectors. Slots may differ in (r, k) but share parameters.
struct ProductJetSpace {
    std::vector<JetSpace> slots;
    std::vector<int> offset;
    int total = 0;

    static ProductJetSpace make(std::vector<JetSpace> slots);
    int nslots() const { return static_cast<int>(slots.size()); }
    std::pair<int, Exps> column(int col) const; // (slot, monomial)
    std::string column_str(int col) const;
};

// Sorted sparse coefficient vector over the rationals.
using SparseVec = std::vector<std::pair<int, Rat>>;

// Incremental exact row reduction. Pivots sit on the *largest* column of
// each stored row (a local-order convention), which makes the non-pivot
// columns exactly the greedy lowest-degree complement of the row space.
class RowReducer {
public:
    explicit RowReducer(int dim) : dim_(dim) {}

    int dim() const { return dim_; }
    int rank() const { return static_cast<int>(rows_.size()); }
    bool full() const { return rank() == dim_; }

    SparseVec reduce(const SparseVec& v) const;
    bool contains(const SparseVec& v) const { return reduce(v).empty(); }
    bool add(const SparseVec& v); // true if the rank grew

    const std::map<int, SparseVec>& rows() const { return rows_; }
    std::vector<int> nonpivot_columns() const;

    // Back-eliminate pivots from all other rows (full RREF).
    void finalize();

private:
    int dim_;
    std::map<int, SparseVec> rows_; // pivot column -> normalized row
};

// Row-reduced exact subspace of a product jet space.
struct LinSubspace {
    ProductJetSpace space;
    RowReducer red;

    explicit LinSubspace(ProductJetSpace s) : space(std::move(s)), red(space.total) {}
    int dim() const { return red.rank(); }
    int codim() const { return space.total - red.rank(); }
    bool member(const std::vector<Poly>& vec) const;
};

SparseVec to_sparse(const ProductJetSpace& space, const std::vector<Poly>& vec);

// Coefficient ring descriptor for module spans: the full ring E over a
// variable subset, its maximal ideal M, or bare scalars.
struct CoeffRing {
    enum Kind { Ring, MaxIdeal, Scalars } kind = Ring;
    // Variable names (resolved per slot); empty means all slot variables.
    std::vector<std::string> vars;
    // Minimum coefficient degree; MaxIdeal means >= 1, and powers of the
    // maximal ideal raise it further (M^2 in the determinacy tests).
    int min = 0;

    static CoeffRing E() { return {Ring, {}, 0}; }
    static CoeffRing E_of(std::vector<std::string> names) { return {Ring, std::move(names), 0}; }
    static CoeffRing M() { return {MaxIdeal, {}, 1}; }
    static CoeffRing M_of(std::vector<std::string> names) { return {MaxIdeal, std::move(names), 1}; }
    static CoeffRing M_pow(int p) { return {MaxIdeal, {}, p}; }
    static CoeffRing R() { return {Scalars, {}, 0}; }

    int min_deg() const { return min; }
};

// Accumulates {coefficient monomial x generator} rows into a subspace.
class SpanBuilder {
public:
    explicit SpanBuilder(ProductJetSpace space) : sub_(std::move(space)) {}

    // Generator living in one slot; zero elsewhere.
    void add_slot_gen(int slot, const Poly& g, const CoeffRing& coeff);
    // Generator coupling all slots (e.g. dF/du); coefficients range over
    // shared parameter monomials, interpreted slot-wise.
    void add_coupled_gen(const std::vector<Poly>& g, const CoeffRing& coeff);

    LinSubspace take() { return std::move(sub_); }
    LinSubspace& sub() { return sub_; }

private:
    LinSubspace sub_;
};

// Spec-level operation: span of an arbitrary generator list under one
// coefficient ring, row-reduced.
LinSubspace module_span(const std::vector<std::vector<Poly>>& gens,
                        const CoeffRing& coeff, const ProductJetSpace& space);

// Monomial vectors whose classes form a basis of ambient/sub, lowest degree
// first; the representative of 1 is preferred whenever available.
std::vector<std::pair<int, Exps>> quotient_basis(const LinSubspace& sub);

} // namespace retic
