#include "homlab/modp.hpp"

#include <algorithm>
#include <stdexcept>

namespace homlab {

std::uint32_t ModP::pow(std::uint32_t a, std::uint64_t e) const
{
    std::uint64_t result = 1, base = a % p;
    while (e) {
        if (e & 1)
            result = result * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return std::uint32_t(result);
}

bool is_prime(std::uint64_t n)
{
    if (n < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

ModPColumnReducer::ModPColumnReducer(std::size_t rows, std::uint32_t p)
    : field_{p}, pivot_of_row_(rows, -1), work_(rows, 0), in_heap_(rows, false)
{
    if (!is_prime(p))
        throw std::invalid_argument("modulus " + std::to_string(p) + " is not prime");
}

bool ModPColumnReducer::add_column(std::span<const ModPEntry> column)
{
    // work_ is a dense scratch column; heap_ holds the touched rows so the
    // current key (largest nonzero row) can be popped.
    heap_.clear();
    std::vector<std::uint32_t> touched;
    auto touch = [&](std::uint32_t row) {
        if (!in_heap_[row]) {
            in_heap_[row] = true;
            touched.push_back(row);
            heap_.push_back(row);
            std::push_heap(heap_.begin(), heap_.end());
        }
    };
    for (auto [row, value] : column) {
        if (row >= rows())
            throw std::out_of_range("column entry row out of range");
        work_[row] = field_.add(work_[row], field_.reduce(value));
        touch(row);
    }

    bool independent = false;
    while (!heap_.empty()) {
        std::pop_heap(heap_.begin(), heap_.end());
        const std::uint32_t row = heap_.back();
        heap_.pop_back();
        in_heap_[row] = false;
        const std::uint32_t factor = work_[row];
        if (factor == 0)
            continue;
        const std::int64_t slot = pivot_of_row_[row];
        if (slot < 0) {
            // New pivot: collect the remaining support (all rows <= row).
            std::vector<std::pair<std::uint32_t, std::uint32_t>> pivot;
            const std::uint32_t scale = field_.inv(factor);
            std::sort(touched.begin(), touched.end());
            touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
            for (std::uint32_t r : touched)
                if (r <= row && work_[r] != 0)
                    pivot.emplace_back(r, field_.mul(work_[r], scale));
            std::sort(pivot.begin(), pivot.end());
            stored_ += pivot.size();
            pivot_of_row_[row] = std::int64_t(pivots_.size());
            pivots_.push_back(std::move(pivot));
            independent = true;
            break;
        }
        for (auto [r, v] : pivots_[std::size_t(slot)]) {
            work_[r] = field_.sub(work_[r], field_.mul(factor, v));
            if (r != row)
                touch(r);
        }
        work_[row] = 0;
    }
    for (std::uint32_t r : touched) {
        work_[r] = 0;
        in_heap_[r] = false;
    }
    heap_.clear();
    return independent;
}

} // namespace homlab
