#include "simonsim/oracle.hpp"

#include "simonsim/errors.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace simonsim {

HiddenShift::HiddenShift(Bits value) : value_(value) {
    if (value == 0) {
        throw InvalidShiftError("hidden shift must be nonzero");
    }
}

SimonFunction::SimonFunction(int n, std::vector<Bits> table,
                             std::optional<HiddenShift> shift)
    : n_(n), table_(std::move(table)), shift_(shift) {
    if (n < 1 || n > kMaxWordBits) {
        throw ArgumentError("register width n must be in [1, " +
                            std::to_string(kMaxWordBits) + "], got " +
                            std::to_string(n));
    }
    if (table_.size() != dimension(n)) {
        throw DimensionError("table has " + std::to_string(table_.size()) +
                             " entries, expected 2^" + std::to_string(n));
    }
    for (std::size_t x = 0; x < table_.size(); ++x) {
        if (table_[x] >= dimension(n)) {
            throw ArgumentError("table[" + std::to_string(x) +
                                "] does not fit in " + std::to_string(n) +
                                " bits");
        }
    }
    if (shift_ && shift_->value() >= dimension(n)) {
        throw ArgumentError("shift does not fit in " + std::to_string(n) +
                            " bits");
    }
}

SimonFunction generate(int n, HiddenShift r, std::uint64_t seed) {
    if (n < 1 || n > kMaxWordBits) {
        throw ArgumentError("register width n must be in [1, " +
                            std::to_string(kMaxWordBits) + "]");
    }
    const Bits size = dimension(n);
    if (r.value() >= size) {
        throw InvalidShiftError("shift " + std::to_string(r.value()) +
                                " does not fit in " + std::to_string(n) +
                                " bits");
    }

    std::vector<Bits> values(size);
    std::iota(values.begin(), values.end(), Bits{0});
    Rng rng(seed);
    // Partial Fisher-Yates: the first 2^(n-1) slots become the coset values.
    const Bits cosets = size / 2;
    for (Bits i = 0; i < cosets; ++i) {
        const Bits j = i + uniform_below(rng, size - i);
        std::swap(values[i], values[j]);
    }

    std::vector<Bits> table(size);
    Bits next = 0;
    for (Bits x = 0; x < size; ++x) {
        const Bits partner = x ^ r.value();
        if (x < partner) {
            table[x] = values[next];
            table[partner] = values[next];
            ++next;
        }
    }
    return SimonFunction(n, std::move(table), r);
}

HiddenShift verify_promise(const SimonFunction &f) {
    const Bits size = f.size();
    constexpr Bits kEmpty = ~Bits{0};
    std::vector<std::uint8_t> count(size, 0);
    std::vector<Bits> first(size, kEmpty);
    std::vector<Bits> second(size, kEmpty);
    for (Bits x = 0; x < size; ++x) {
        const Bits y = f(x);
        if (count[y] == 0) {
            first[y] = x;
        } else if (count[y] == 1) {
            second[y] = x;
        }
        if (count[y] < 3) {
            ++count[y];
        }
    }

    Bits r = 0;
    for (Bits x = 0; x < size; ++x) {
        const Bits y = f(x);
        if (count[y] == 1) {
            throw PromiseViolationError(x, "argument " + to_hex(x, f.n()) +
                                               " has no collision partner");
        }
        if (count[y] > 2) {
            throw PromiseViolationError(
                x, "argument " + to_hex(x, f.n()) +
                       " has more than one collision partner");
        }
        const Bits partner = first[y] == x ? second[y] : first[y];
        const Bits d = x ^ partner;
        if (r == 0) {
            r = d;
        } else if (d != r) {
            throw PromiseViolationError(
                x, "argument " + to_hex(x, f.n()) + " collides at shift " +
                       to_hex(d, f.n()) + ", expected " + to_hex(r, f.n()));
        }
    }

    HiddenShift found(r);
    if (f.shift() && *f.shift() != found) {
        throw PromiseViolationError(
            0, "table pairs arguments by shift " + to_hex(r, f.n()) +
                   " but declares " + to_hex(f.shift()->value(), f.n()));
    }
    return found;
}

std::size_t range_size(const SimonFunction &f) {
    std::vector<Bits> values(f.table().begin(), f.table().end());
    std::sort(values.begin(), values.end());
    return static_cast<std::size_t>(
        std::unique(values.begin(), values.end()) - values.begin());
}

Bits CountingOracle::evaluate(Bits x) {
    if (x >= inner_.size()) {
        throw ArgumentError("oracle argument " + std::to_string(x) +
                            " out of range for n = " +
                            std::to_string(inner_.n()));
    }
    ++queries_;
    return inner_(x);
}

} // namespace simonsim
