#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace homlab {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

struct MatrixEntry {
    std::uint32_t row;
    BigInt value;

    friend bool operator==(const MatrixEntry&, const MatrixEntry&) = default;
};

// Sparse vector: entries sorted by strictly increasing index, no zeros.
using SparseVector = std::vector<MatrixEntry>;

// Sorts, merges duplicate indices and drops zeros.
void normalize(SparseVector& v);
// a * x + b * y
SparseVector combine(const BigInt& a, const SparseVector& x, const BigInt& b, const SparseVector& y);

// Sparse column-major integer matrix with exact entries.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), columns_(cols) {}

    // Row-major dense literal, mostly for tests.
    static IntMatrix from_dense(const std::vector<std::vector<long long>>& rows);
    static IntMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return columns_.size(); }
    std::size_t nonzeros() const;

    std::span<const MatrixEntry> column(std::size_t j) const { return columns_[j]; }
    // Normalizes the entries; throws std::out_of_range on a bad row index.
    void set_column(std::size_t j, SparseVector entries);
    void push_column(SparseVector entries);

    BigInt at(std::size_t row, std::size_t col) const;
    bool is_zero() const;

    IntMatrix transpose() const;
    IntMatrix select_columns(std::span<const std::size_t> which) const;
    std::vector<BigInt> apply(std::span<const BigInt> x) const;
    SparseVector apply(const SparseVector& x) const;

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::vector<SparseVector> columns_;
};

void write_matrix_market(std::ostream& out, const IntMatrix& m);

struct SNFResult {
    // d_1 | d_2 | ... | d_r, all positive.
    std::vector<BigInt> diagonal;
    std::size_t rank = 0;
};

SNFResult snf(const IntMatrix& m);

// Free rank plus invariant factors (> 1, each dividing the next).
struct HomologyGroup {
    std::size_t betti = 0;
    std::vector<BigInt> torsion;

    bool trivial() const { return betti == 0 && torsion.empty(); }
    friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;
};

inline constexpr std::uint32_t default_prime = 2147483647u;

struct Field {
    enum class Kind { rational, mod_p } kind = Kind::rational;
    std::uint32_t p = 0;

    static Field rational() { return {}; }
    static Field mod(std::uint32_t p) { return {Kind::mod_p, p}; }
};

bool is_prime(std::uint64_t n);

// Rank over Q or GF(p). Throws std::invalid_argument when p is not prime.
std::size_t rank(const IntMatrix& m, Field field);

// Columns form a Z-basis of ker(m), echelonized by lowest-nonzero row.
IntMatrix integer_kernel_basis(const IntMatrix& m);

// H_n = ker d_n / im d_{n+1} over Z. d_n has dim C_n columns, d_np1 has
// dim C_n rows. Throws ContractViolation when d_n * d_np1 != 0 and
// std::invalid_argument on a shape mismatch.
HomologyGroup homology_of_pair(const IntMatrix& d_n, const IntMatrix& d_np1);
// Betti number over a field; torsion is left empty.
HomologyGroup homology_of_pair(const IntMatrix& d_n, const IntMatrix& d_np1, Field field);

struct ImageSolution {
    std::vector<BigRational> x;
    // True when every entry of x is an integer.
    bool integral = false;
};

// Some x with m x = b, or nullopt when b is outside the rational column
// space. An integral x is returned whenever b lies in the integer column
// lattice. Throws std::invalid_argument on a dimension mismatch.
std::optional<ImageSolution> solve_in_image(const IntMatrix& m, std::span<const BigInt> b);

} // namespace homlab
