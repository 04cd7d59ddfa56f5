#pragma once

#include "homlab/linalg.hpp"

#include <optional>
#include <vector>

namespace homlab {

// Incremental integer column echelon form of the lattice spanned by the
// inserted vectors. Every basis vector is keyed by its lowest nonzero entry
// (the largest index); keys are distinct and the key entry is positive.
//
// Insertion uses only unimodular column operations (exact division steps and
// extended-gcd 2x2 steps), so with transform tracking enabled the transforms
// of vectors that reduce to zero form a Z-basis of the relation module.
class LatticeEchelon {
public:
    explicit LatticeEchelon(std::size_t dimension, bool track_transforms = false);

    // Returns true when the rank went up.
    bool insert(SparseVector v, SparseVector transform = {});

    std::size_t dimension() const { return slot_of_row_.size(); }
    std::size_t rank() const { return pivots_.size(); }

    // Basis vectors (and their transforms), sorted by key.
    std::vector<SparseVector> basis() const;
    std::vector<SparseVector> basis_transforms() const;
    std::vector<std::uint32_t> keys() const;

    // Transforms of inserted vectors that reduced to zero.
    const std::vector<SparseVector>& relations() const { return relations_; }

    // Unique rational coefficients of v with respect to basis(); nullopt when
    // v is outside the rational span.
    std::optional<std::vector<BigRational>> coordinates(const SparseVector& v) const;

private:
    struct Pivot {
        SparseVector vec;
        SparseVector transform;
    };

    std::vector<std::size_t> sorted_slots() const;

    bool track_;
    std::vector<std::ptrdiff_t> slot_of_row_;
    std::vector<Pivot> pivots_;
    std::vector<SparseVector> relations_;
};

// g = x*a + y*b with g = gcd(a, b) >= 0.
void extended_gcd(const BigInt& a, const BigInt& b, BigInt& g, BigInt& x, BigInt& y);

} // namespace homlab
