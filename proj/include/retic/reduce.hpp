#pragma once

#include "retic/germ.hpp"

namespace retic {

// Outcome of splitting off non-degenerate quadratic y-blocks and corner
// variables with nonzero linear coefficient. The residual germ lives in
// germ_spec(r_res, k_res) and is stably reticular K-equivalent to the input
// at the recorded jet order.
struct ReductionRecord {
    Poly residual;
    int r_res = 0;
    int k_res = 0;
    std::vector<Rat> removed_x;    // linear corner coefficients, in split order
    std::vector<Rat> removed_quad; // y^2 block coefficients (their signs matter)
    bool submersive = false;       // residual had a nonzero linear y-part
    int l_used = 0;
};

// Formal splitting to order l: complete the square in every y-direction
// with a non-degenerate quadratic term, and split off corner variables that
// appear with a nonzero linear coefficient.
ReductionRecord reduce_stably(const Poly& f, int l);

} // namespace retic
