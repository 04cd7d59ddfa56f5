#pragma once

#include "homlab/linalg.hpp"

#include <span>
#include <string>
#include <vector>

namespace homlab {

struct Coefficients {
    enum class Kind { integers, rationals, mod_p } kind = Kind::integers;
    std::uint32_t p = default_prime;

    static Coefficients integers() { return {}; }
    static Coefficients rationals() { return {Kind::rationals, default_prime}; }
    static Coefficients mod(std::uint32_t p) { return {Kind::mod_p, p}; }

    // Field used for ranks; Z ranks are rational ranks.
    Field field() const { return kind == Kind::mod_p ? Field::mod(p) : Field::rational(); }
    std::string name() const;
    friend bool operator==(const Coefficients&, const Coefficients&) = default;
};

// Throws ParseError for anything but "z", "q", "mod_p" or "mod_<prime>".
Coefficients parse_coefficients(const std::string& text);

struct DimensionReport {
    unsigned dim = 0;
    std::size_t generators = 0;
    // rank of d_n and of d_{n+1}
    std::size_t boundary_rank = 0;
    std::size_t next_rank = 0;
    HomologyGroup group;
    // False when d_{n+1} was only ranked mod p, so torsion prime to p could
    // have been missed.
    bool torsion_known = true;
    // "snf", "rank" or "streamed_mod_p"
    std::string method;

    friend bool operator==(const DimensionReport&, const DimensionReport&) = default;
};

// d[k] is the boundary C_k -> C_{k-1} for k = 0..top, d[0] having no rows.
// Reports dimensions 0..top-1 after checking every d_k d_{k+1} = 0.
std::vector<DimensionReport> homology_report(std::span<const IntMatrix> d, Coefficients c);

// Throws ContractViolation when d_n d_{n+1} != 0 and std::invalid_argument
// on a shape mismatch.
void verify_composable(const IntMatrix& d_n, const IntMatrix& d_np1);

} // namespace homlab
