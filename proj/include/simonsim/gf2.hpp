#pragma once

#include "simonsim/bits.hpp"
#include "simonsim/oracle.hpp"

#include <array>
#include <vector>

namespace simonsim {

/// Row-echelon basis over GF(2) of sampled constraint vectors z with r.z = 0.
///
/// Rows are bit strings indexed by their pivot (highest set bit); each stored
/// row has a distinct pivot, so the rows are linearly independent.
class ConstraintSystem {
  public:
    explicit ConstraintSystem(int n);

    /// Reduces z against the basis; stores the residue when it is nonzero.
    /// Returns true iff the rank increased.
    bool add_row(Bits z);

    [[nodiscard]] int n() const noexcept { return n_; }
    [[nodiscard]] int rank() const noexcept { return rank_; }
    /// Stored rows, ordered by descending pivot.
    [[nodiscard]] std::vector<Bits> rows() const;
    /// z reduced against the current basis (zero iff z is in the row space).
    [[nodiscard]] Bits reduce(Bits z) const noexcept;

  private:
    int n_;
    int rank_ = 0;
    std::array<Bits, kMaxWordBits + 1> by_pivot_{};
};

/// Every nonzero v with row.v = 0 for all rows, ascending; 2^(n-rank) - 1
/// entries.
[[nodiscard]] std::vector<Bits> null_space_nonzero(const ConstraintSystem &system);

/// The unique nonzero null-space element. Throws InsufficientRankError while
/// rank < n - 1.
[[nodiscard]] HiddenShift solve_hidden_shift(const ConstraintSystem &system);

} // namespace simonsim
