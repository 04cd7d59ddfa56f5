#pragma once

#include "homlab/linalg.hpp"

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace homlab {

struct ModP {
    std::uint32_t p;

    std::uint32_t reduce(std::int64_t v) const
    {
        std::int64_t r = v % std::int64_t(p);
        return std::uint32_t(r < 0 ? r + p : r);
    }
    std::uint32_t reduce(const BigInt& v) const
    {
        BigInt r = v % p;
        if (r < 0)
            r += p;
        return r.convert_to<std::uint32_t>();
    }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return std::uint32_t(std::uint64_t(a) * b % p); }
    std::uint32_t add(std::uint32_t a, std::uint32_t b) const
    {
        std::uint64_t s = std::uint64_t(a) + b;
        return std::uint32_t(s >= p ? s - p : s);
    }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return a >= b ? a - b : a + (p - b); }
    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;
    std::uint32_t inv(std::uint32_t a) const { return pow(a, p - 2); }
};

using ModPEntry = std::pair<std::uint32_t, std::int64_t>;

// Streaming rank over GF(p): columns are reduced one at a time against the
// stored pivots (keyed by their largest row) and only independent columns are
// kept, so memory stays bounded by rank * rows no matter how many columns are
// fed. Used for boundary matrices too large to materialize.
class ModPColumnReducer {
public:
    explicit ModPColumnReducer(std::size_t rows, std::uint32_t p = default_prime);

    // Entries may be unsorted and repeated. Returns true when the rank went up.
    bool add_column(std::span<const ModPEntry> column);

    std::size_t rank() const { return pivots_.size(); }
    std::size_t rows() const { return pivot_of_row_.size(); }
    std::size_t stored_entries() const { return stored_; }

private:
    ModP field_;
    std::vector<std::int64_t> pivot_of_row_;
    // (row, value) sorted by row; the last entry is the key, normalized to 1.
    std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> pivots_;
    std::vector<std::uint32_t> work_;
    std::vector<std::uint32_t> heap_;
    std::vector<bool> in_heap_;
    std::size_t stored_ = 0;
};

} // namespace homlab
