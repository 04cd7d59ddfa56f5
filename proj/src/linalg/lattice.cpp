#include "homlab/lattice.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace homlab {

void extended_gcd(const BigInt& a, const BigInt& b, BigInt& g, BigInt& x, BigInt& y)
{
    BigInt old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
    while (!r.is_zero()) {
        BigInt q = old_r / r;
        BigInt tmp = old_r - q * r;
        old_r = std::move(r);
        r = std::move(tmp);
        tmp = old_s - q * s;
        old_s = std::move(s);
        s = std::move(tmp);
        tmp = old_t - q * t;
        old_t = std::move(t);
        t = std::move(tmp);
    }
    if (old_r < 0) {
        old_r = -old_r;
        old_s = -old_s;
        old_t = -old_t;
    }
    g = std::move(old_r);
    x = std::move(old_s);
    y = std::move(old_t);
}

LatticeEchelon::LatticeEchelon(std::size_t dimension, bool track_transforms)
    : track_(track_transforms), slot_of_row_(dimension, -1)
{
}

namespace {

void negate(SparseVector& v)
{
    for (auto& e : v)
        e.value = -e.value;
}

} // namespace

bool LatticeEchelon::insert(SparseVector v, SparseVector transform)
{
    normalize(v);
    if (track_)
        normalize(transform);
    if (!v.empty() && v.back().row >= dimension())
        throw std::out_of_range("lattice vector index out of range");

    const BigInt one(1);
    while (!v.empty()) {
        const std::uint32_t key = v.back().row;
        const std::ptrdiff_t slot = slot_of_row_[key];
        if (slot < 0) {
            if (v.back().value < 0) {
                negate(v);
                negate(transform);
            }
            slot_of_row_[key] = std::ptrdiff_t(pivots_.size());
            pivots_.push_back({std::move(v), track_ ? std::move(transform) : SparseVector{}});
            return true;
        }
        Pivot& p = pivots_[std::size_t(slot)];
        const BigInt a = p.vec.back().value;
        const BigInt b = v.back().value;
        if (b % a == 0) {
            const BigInt q = -(b / a);
            v = combine(one, v, q, p.vec);
            if (track_)
                transform = combine(one, transform, q, p.transform);
            continue;
        }
        // Replace the pivot by the gcd combination; the complementary
        // combination has a zero key entry and keeps being reduced.
        BigInt g, x, y;
        extended_gcd(a, b, g, x, y);
        const BigInt ag = a / g, bg = -(b / g);
        SparseVector new_pivot = combine(x, p.vec, y, v);
        SparseVector rest = combine(ag, v, bg, p.vec);
        if (track_) {
            SparseVector new_t = combine(x, p.transform, y, transform);
            transform = combine(ag, transform, bg, p.transform);
            p.transform = std::move(new_t);
        }
        p.vec = std::move(new_pivot);
        v = std::move(rest);
    }
    if (track_)
        relations_.push_back(std::move(transform));
    return false;
}

std::vector<std::size_t> LatticeEchelon::sorted_slots() const
{
    std::vector<std::size_t> slots;
    slots.reserve(pivots_.size());
    for (std::ptrdiff_t s : slot_of_row_)
        if (s >= 0)
            slots.push_back(std::size_t(s));
    return slots;
}

std::vector<SparseVector> LatticeEchelon::basis() const
{
    std::vector<SparseVector> out;
    for (std::size_t s : sorted_slots())
        out.push_back(pivots_[s].vec);
    return out;
}

std::vector<SparseVector> LatticeEchelon::basis_transforms() const
{
    std::vector<SparseVector> out;
    for (std::size_t s : sorted_slots())
        out.push_back(pivots_[s].transform);
    return out;
}

std::vector<std::uint32_t> LatticeEchelon::keys() const
{
    std::vector<std::uint32_t> out;
    for (std::size_t r = 0; r < slot_of_row_.size(); ++r)
        if (slot_of_row_[r] >= 0)
            out.push_back(std::uint32_t(r));
    return out;
}

std::optional<std::vector<BigRational>> LatticeEchelon::coordinates(const SparseVector& v) const
{
    std::vector<std::size_t> position_of_slot(pivots_.size());
    {
        std::size_t k = 0;
        for (std::size_t s : sorted_slots())
            position_of_slot[s] = k++;
    }
    std::map<std::uint32_t, BigRational> work;
    for (const auto& e : v) {
        if (e.row >= dimension())
            throw std::out_of_range("lattice vector index out of range");
        work[e.row] += BigRational(e.value);
    }
    std::vector<BigRational> coeff(pivots_.size());
    while (!work.empty()) {
        auto last = std::prev(work.end());
        if (last->second == 0) {
            work.erase(last);
            continue;
        }
        const std::ptrdiff_t slot = slot_of_row_[last->first];
        if (slot < 0)
            return std::nullopt;
        const Pivot& p = pivots_[std::size_t(slot)];
        const BigRational c = last->second / BigRational(p.vec.back().value);
        for (const auto& e : p.vec)
            work[e.row] -= c * BigRational(e.value);
        work.erase(p.vec.back().row);
        coeff[position_of_slot[std::size_t(slot)]] = c;
    }
    return coeff;
}

} // namespace homlab
