#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rgate/exact.hpp"

namespace rgate::abelian {

// Dense integer matrix with exact entries, row-major.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), entries_(static_cast<std::size_t>(rows) * cols) {}
    IntMatrix(int rows, int cols, std::vector<Int> entries);

    static IntMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Int& at(int r, int c) { return entries_[static_cast<std::size_t>(r) * cols_ + c]; }
    const Int& at(int r, int c) const { return entries_[static_cast<std::size_t>(r) * cols_ + c]; }

    bool operator==(const IntMatrix& other) const = default;

    bool is_zero() const;
    bool is_square() const { return rows_ == cols_; }

    IntMatrix operator*(const IntMatrix& rhs) const;

    // Signed determinant by fraction-free (Bareiss) elimination; square only.
    Int determinant() const;

    std::string to_string() const;

    void swap_rows(int i, int j);
    void swap_cols(int i, int j);
    // row_i += k * row_j  /  col_i += k * col_j
    void add_row(int i, int j, const Int& k);
    void add_col(int i, int j, const Int& k);
    void negate_row(int i);
    void negate_col(int i);

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Int> entries_;
};

// U * A * V = S with U, V unimodular and S diagonal, d_i | d_{i+1}, zeros last.
struct SnfDecomposition {
    IntMatrix u;
    IntMatrix s;
    IntMatrix v;

    std::vector<Int> diagonal() const;
};

// Finitely generated abelian group in invariant-factor form:
// Z^free_rank + Z/d_1 + ... + Z/d_k with 2 <= d_1 | d_2 | ... | d_k.
struct FgAbelianGroup {
    int free_rank = 0;
    std::vector<Int> torsion;

    bool operator==(const FgAbelianGroup& other) const = default;

    bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
    bool is_finite() const { return free_rank == 0; }

    std::string to_string() const;
};

SnfDecomposition smith_normal_form(const IntMatrix& a);

// Cokernel of A: Z^cols -> Z^rows (rows are generators, columns relations).
FgAbelianGroup cokernel(const IntMatrix& a);

// Product of torsion orders, or nullopt when the group is infinite.
std::optional<Int> order(const FgAbelianGroup& g);

// True iff H is isomorphic to a subgroup of G. For each prime p the sorted
// p-exponent multisets must compare componentwise, and free ranks must fit.
bool embeds_into(const FgAbelianGroup& h, const FgAbelianGroup& g);

// True ("obstructed") iff |Gm| * |Gp| is not a perfect square. Both groups
// must be finite; throws infinite_order otherwise.
bool square_order_obstruction(const FgAbelianGroup& gm, const FgAbelianGroup& gp);

// True iff Gm and Gp are isomorphic, in which case a ribbon Q-homology
// cobordism between manifolds with these H_1's is a Z-homology cobordism and
// downstream criteria may use integral strength.
bool zhc_upgrade(const FgAbelianGroup& gm, const FgAbelianGroup& gp);

// Exponents of p in the invariant factors of g, sorted descending.
std::vector<int> p_exponents(const FgAbelianGroup& g, const Int& p);

// Canonicalizes an arbitrary list of cyclic orders (>= 0, 0 meaning Z) into
// invariant-factor form.
FgAbelianGroup from_cyclic_orders(const std::vector<Int>& orders);

}  // namespace rgate::abelian
