#pragma once

#include <optional>
#include <vector>

#include "emvkit/algebra.hpp"

namespace emvkit {

/// Partial addition table of a generalized effect algebra on 0..n-1,
/// with -1 marking undefined sums.
struct GeaTable {
    int n = 0;
    std::vector<std::vector<int>> plus;

    bool defined(int x, int y) const { return plus[x][y] >= 0; }
    int add(int x, int y) const { return plus[x][y]; }
    /// The unique z with y + z = x, when one exists.
    std::optional<int> diff(int x, int y) const;
};

/// Partial + of a carrier: x + y defined iff x . y = 0, then x + y = x (+) y.
/// The Riesz Decomposition Property is verified exhaustively for carriers of
/// at most 9 elements.
GeaTable to_gea(const FiniteEmv& M);

/// Rebuilds the total (+) from a lattice GEA with RDP via
/// x (+) y = x + (y ^ (a - x)) over Boolean elements a above x and y.
/// Independence of the chosen a is asserted.
FiniteEmv gea_to_emv(const GeaTable& E);

/// Reconstructs join and meet from the oplus reduct alone,
/// x v y = (x . lambda_a(y)) (+) y and x ^ y = x . (lambda_a(x) (+) y),
/// after checking the naturally-ordered-monoid hypotheses. The result is
/// asserted equal to the derived-order tables.
struct LatticeTables {
    std::vector<std::vector<int>> join;
    std::vector<std::vector<int>> meet;
};
LatticeTables monoid_reconstruct(const FiniteEmv& M);

}  // namespace emvkit
