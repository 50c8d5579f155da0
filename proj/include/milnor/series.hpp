#ifndef MILNOR_SERIES_HPP
#define MILNOR_SERIES_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "milnor/errors.hpp"
#include "milnor/group_word.hpp"

namespace milnor {

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

// Noncommutative monomial X_{i1}X_{i2}…X_{ik}; the empty product is the
// constant term.
struct Monomial {
    std::vector<int> vars;  // entries in 1..rank

    std::size_t length() const { return vars.size(); }
    std::string to_text() const;

    friend bool operator==(const Monomial &, const Monomial &) = default;
};

// Integer noncommutative power series in X_1..X_rank, truncated at the
// given degree bound: every monomial of length > degree is dropped.
// Coefficients are overflow-checked 64-bit integers; any overflow raises
// OverflowError rather than wrapping.
//
// Storage is a flat vector indexed by monomial in (length, lex) order,
// which is also the stable printing order.
class TruncatedSeries {
  public:
    TruncatedSeries(int rank, int degree);

    static TruncatedSeries one(int rank, int degree);

    int rank() const { return rank_; }
    int degree() const { return degree_; }

    std::int64_t coefficient(const Monomial &m) const;
    void set_coefficient(const Monomial &m, std::int64_t c);

    TruncatedSeries operator+(const TruncatedSeries &rhs) const;
    TruncatedSeries operator-(const TruncatedSeries &rhs) const;
    TruncatedSeries operator-() const;
    TruncatedSeries operator*(const TruncatedSeries &rhs) const;

    // Multiplicative inverse; requires constant term ±1.
    TruncatedSeries inverse() const;

    // this × (1+X_i)^e for any integer e (negative powers via the
    // truncated geometric series).
    TruncatedSeries times_generator_power(int i, std::int64_t e) const;

    bool is_zero() const;
    bool is_one() const;

    // `1 + X1X2 - X2X1`, monomials in length-then-lex order; `0` if empty.
    std::string to_text() const;

    friend bool operator==(const TruncatedSeries &, const TruncatedSeries &) =
        default;

  private:
    int rank_;
    int degree_;
    std::vector<std::int64_t> coef_;  // flat (length, lex) table

    friend class SeriesIndexer;
    void check_compatible(const TruncatedSeries &other) const;
};

// Magnus expansion E: x_i ↦ 1+X_i, x_i⁻¹ ↦ 1−X_i+X_i²−⋯, extended
// multiplicatively with truncation at every step.
TruncatedSeries expand(const GroupWord &w, int degree);

}  // namespace milnor

#endif
