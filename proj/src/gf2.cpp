#include "simonsim/gf2.hpp"

#include "simonsim/errors.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace simonsim {

ConstraintSystem::ConstraintSystem(int n) : n_(n) {
    if (n < 1 || n > kMaxWordBits) {
        throw ArgumentError("constraint width must be in [1, " +
                            std::to_string(kMaxWordBits) + "], got " +
                            std::to_string(n));
    }
}

Bits ConstraintSystem::reduce(Bits z) const noexcept {
    for (int pivot = n_ - 1; pivot >= 0; --pivot) {
        if (((z >> pivot) & 1U) != 0 && by_pivot_[pivot] != 0) {
            z ^= by_pivot_[pivot];
        }
    }
    return z;
}

bool ConstraintSystem::add_row(Bits z) {
    z &= dimension(n_) - 1;
    const Bits residue = reduce(z);
    if (residue == 0) {
        return false;
    }
    by_pivot_[std::bit_width(residue) - 1] = residue;
    ++rank_;
    return true;
}

std::vector<Bits> ConstraintSystem::rows() const {
    std::vector<Bits> out;
    for (int pivot = n_ - 1; pivot >= 0; --pivot) {
        if (by_pivot_[pivot] != 0) {
            out.push_back(by_pivot_[pivot]);
        }
    }
    return out;
}

std::vector<Bits> null_space_nonzero(const ConstraintSystem &system) {
    const int n = system.n();

    // Reduced row echelon form: each pivot bit appears in exactly one row.
    std::vector<Bits> reduced = system.rows();
    std::vector<int> pivots;
    for (Bits row : reduced) {
        pivots.push_back(std::bit_width(row) - 1);
    }
    for (std::size_t i = 0; i < reduced.size(); ++i) {
        const Bits mask = Bits{1} << pivots[i];
        for (std::size_t j = 0; j < reduced.size(); ++j) {
            if (j != i && (reduced[j] & mask) != 0) {
                reduced[j] ^= reduced[i];
            }
        }
    }

    Bits pivot_mask = 0;
    for (int p : pivots) {
        pivot_mask |= Bits{1} << p;
    }
    std::vector<int> free_bits;
    for (int bit = 0; bit < n; ++bit) {
        if ((pivot_mask >> bit & 1U) == 0) {
            free_bits.push_back(bit);
        }
    }

    std::vector<Bits> solutions;
    const Bits combos = dimension(static_cast<int>(free_bits.size()));
    solutions.reserve(combos);
    for (Bits combo = 1; combo < combos; ++combo) {
        Bits v = 0;
        for (std::size_t i = 0; i < free_bits.size(); ++i) {
            if ((combo >> i) & 1U) {
                v |= Bits{1} << free_bits[i];
            }
        }
        // Pivot variable equals the parity of the free bits its row touches.
        for (std::size_t i = 0; i < reduced.size(); ++i) {
            if (dot_mod2(reduced[i], v) != 0) {
                v |= Bits{1} << pivots[i];
            }
        }
        solutions.push_back(v);
    }
    std::sort(solutions.begin(), solutions.end());
    return solutions;
}

HiddenShift solve_hidden_shift(const ConstraintSystem &system) {
    if (system.rank() < system.n() - 1) {
        throw InsufficientRankError(
            "rank " + std::to_string(system.rank()) + " < n - 1 = " +
            std::to_string(system.n() - 1) + "; gather more samples");
    }
    const auto solutions = null_space_nonzero(system);
    if (solutions.empty()) {
        throw ArgumentError("constraints have full rank; no nonzero shift "
                            "satisfies them");
    }
    return HiddenShift(solutions.front());
}

} // namespace simonsim
