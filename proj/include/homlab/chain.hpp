#pragma once

#include "homlab/graph.hpp"
#include "homlab/linalg.hpp"

#include <map>
#include <string>
#include <vector>

namespace homlab {

// A vertex tuple: the label sequence of a cube or the vertices of a path.
using Tuple = std::vector<Vertex>;

// Finite formal Z-combination of tuples. Zero coefficients are never stored.
class TupleChain {
public:
    TupleChain() = default;
    explicit TupleChain(Tuple t, BigInt coefficient = 1) { add(std::move(t), coefficient); }

    void add(const Tuple& t, const BigInt& coefficient);
    void add(const TupleChain& other, const BigInt& scale = 1);

    BigInt coefficient(const Tuple& t) const;
    const std::map<Tuple, BigInt>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    friend TupleChain operator+(TupleChain a, const TupleChain& b)
    {
        a.add(b);
        return a;
    }
    friend TupleChain operator-(TupleChain a, const TupleChain& b)
    {
        a.add(b, -1);
        return a;
    }
    friend bool operator==(const TupleChain&, const TupleChain&) = default;

private:
    std::map<Tuple, BigInt> terms_;
};

// "(1,2,3) - 2(1,4,3)". With one_based every label is printed as v+1.
std::string format_tuple(const Tuple& t, bool one_based = true);
std::string format_chain(const TupleChain& c, bool one_based = true);

} // namespace homlab
