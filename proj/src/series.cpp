#include "milnor/series.hpp"

#include <sstream>

namespace milnor {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw OverflowError("integer overflow in series arithmetic");
    return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw OverflowError("integer overflow in series arithmetic");
    return r;
}

namespace {

constexpr std::size_t kMaxTableSize = std::size_t(1) << 21;

// Flat layout: all monomials of length d occupy one block, blocks ordered
// by d, entries within a block ordered lexicographically (base-rank digits).
struct Layout {
    int rank;
    int degree;
    std::vector<std::size_t> offset;  // offset[d] = first index of length-d block
    std::vector<std::size_t> pw;      // pw[d] = rank^d (block sizes)

    Layout(int rank_, int degree_) : rank(rank_), degree(degree_) {
        if (rank < 0) throw IndexError("series: negative rank");
        if (degree < 0) throw TruncationError("series: negative degree bound");
        pw.resize(degree + 1);
        offset.resize(degree + 2);
        pw[0] = 1;
        offset[0] = 0;
        offset[1] = 1;
        for (int d = 1; d <= degree; ++d) {
            pw[d] = pw[d - 1] * std::size_t(rank);
            offset[d + 1] = offset[d] + pw[d];
            if (offset[d + 1] > kMaxTableSize)
                throw TruncationError(
                    "series: truncation table too large for this rank/degree");
        }
    }

    std::size_t size() const { return offset[degree + 1]; }
};

}  // namespace

TruncatedSeries::TruncatedSeries(int rank, int degree)
    : rank_(rank), degree_(degree) {
    Layout lay(rank, degree);
    coef_.assign(lay.size(), 0);
}

TruncatedSeries TruncatedSeries::one(int rank, int degree) {
    TruncatedSeries s(rank, degree);
    s.coef_[0] = 1;
    return s;
}

void TruncatedSeries::check_compatible(const TruncatedSeries &other) const {
    if (rank_ != other.rank_ || degree_ != other.degree_)
        throw MismatchError("series: rank/degree mismatch");
}

std::int64_t TruncatedSeries::coefficient(const Monomial &m) const {
    if (static_cast<int>(m.length()) > degree_)
        throw TruncationError(
            "series: monomial length exceeds the truncation degree");
    Layout lay(rank_, degree_);
    std::size_t idx = lay.offset[m.length()];
    std::size_t digits = 0;
    for (int v : m.vars) {
        if (v < 1 || v > rank_)
            throw IndexError("series: monomial variable out of range");
        digits = digits * std::size_t(rank_) + std::size_t(v - 1);
    }
    return coef_[idx + digits];
}

void TruncatedSeries::set_coefficient(const Monomial &m, std::int64_t c) {
    if (static_cast<int>(m.length()) > degree_)
        throw TruncationError(
            "series: monomial length exceeds the truncation degree");
    Layout lay(rank_, degree_);
    std::size_t idx = lay.offset[m.length()];
    std::size_t digits = 0;
    for (int v : m.vars) {
        if (v < 1 || v > rank_)
            throw IndexError("series: monomial variable out of range");
        digits = digits * std::size_t(rank_) + std::size_t(v - 1);
    }
    coef_[idx + digits] = c;
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries &rhs) const {
    check_compatible(rhs);
    TruncatedSeries out(rank_, degree_);
    for (std::size_t k = 0; k < coef_.size(); ++k)
        out.coef_[k] = checked_add(coef_[k], rhs.coef_[k]);
    return out;
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries &rhs) const {
    check_compatible(rhs);
    TruncatedSeries out(rank_, degree_);
    for (std::size_t k = 0; k < coef_.size(); ++k)
        out.coef_[k] = checked_add(coef_[k], checked_mul(rhs.coef_[k], -1));
    return out;
}

TruncatedSeries TruncatedSeries::operator-() const {
    TruncatedSeries out(rank_, degree_);
    for (std::size_t k = 0; k < coef_.size(); ++k)
        out.coef_[k] = checked_mul(coef_[k], -1);
    return out;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries &rhs) const {
    check_compatible(rhs);
    Layout lay(rank_, degree_);
    TruncatedSeries out(rank_, degree_);
    for (int da = 0; da <= degree_; ++da) {
        const std::size_t abase = lay.offset[da];
        for (std::size_t ia = 0; ia < lay.pw[da]; ++ia) {
            const std::int64_t ca = coef_[abase + ia];
            if (ca == 0) continue;
            for (int db = 0; db + da <= degree_; ++db) {
                const std::size_t bbase = lay.offset[db];
                const std::size_t obase =
                    lay.offset[da + db] + ia * lay.pw[db];
                for (std::size_t ib = 0; ib < lay.pw[db]; ++ib) {
                    const std::int64_t cb = rhs.coef_[bbase + ib];
                    if (cb == 0) continue;
                    std::int64_t &slot = out.coef_[obase + ib];
                    slot = checked_add(slot, checked_mul(ca, cb));
                }
            }
        }
    }
    return out;
}

TruncatedSeries TruncatedSeries::inverse() const {
    const std::int64_t c0 = coef_[0];
    if (c0 != 1 && c0 != -1)
        throw Error("series: inverse requires constant term ±1");
    // a = c0(1 + c0·M) with M the positive-degree part, so
    // a⁻¹ = c0·Σ_k (−c0·M)^k.
    TruncatedSeries m = *this;
    m.coef_[0] = 0;
    for (auto &c : m.coef_) c = checked_mul(c, -c0);
    TruncatedSeries acc = one(rank_, degree_);
    TruncatedSeries power = one(rank_, degree_);
    for (int k = 1; k <= degree_; ++k) {
        power = power * m;
        if (power.is_zero()) break;
        acc = acc + power;
    }
    for (auto &c : acc.coef_) c = checked_mul(c, c0);
    return acc;
}

TruncatedSeries TruncatedSeries::times_generator_power(int i,
                                                       std::int64_t e) const {
    if (i < 1 || i > rank_)
        throw IndexError("series: generator index out of range");
    // (1+X_i)^e = Σ_k C(e,k) X_i^k, with the generalized binomial for e < 0.
    TruncatedSeries pow_series(rank_, degree_);
    std::int64_t binom = 1;
    pow_series.set_coefficient(Monomial{}, 1);
    Monomial m;
    for (int k = 1; k <= degree_; ++k) {
        binom = checked_mul(binom, e - (k - 1));
        binom /= k;  // exact: C(e,k) is an integer
        m.vars.push_back(i);
        pow_series.set_coefficient(m, binom);
    }
    return *this * pow_series;
}

bool TruncatedSeries::is_zero() const {
    for (std::int64_t c : coef_)
        if (c != 0) return false;
    return true;
}

bool TruncatedSeries::is_one() const {
    if (coef_[0] != 1) return false;
    for (std::size_t k = 1; k < coef_.size(); ++k)
        if (coef_[k] != 0) return false;
    return true;
}

std::string Monomial::to_text() const {
    std::string s;
    for (int v : vars) {
        s += 'X';
        s += std::to_string(v);
    }
    return s;
}

std::string TruncatedSeries::to_text() const {
    Layout lay(rank_, degree_);
    std::ostringstream os;
    bool first = true;
    for (int d = 0; d <= degree_; ++d) {
        for (std::size_t k = 0; k < lay.pw[d]; ++k) {
            const std::int64_t c = coef_[lay.offset[d] + k];
            if (c == 0) continue;
            std::string mono;
            std::size_t digits = k;
            for (int t = d - 1; t >= 0; --t) {
                // reconstruct base-rank digits, most significant first
                std::size_t div = lay.pw[t];
                std::size_t digit = digits / div;
                digits %= div;
                mono += 'X';
                mono += std::to_string(digit + 1);
            }
            const std::int64_t mag = c < 0 ? -c : c;
            if (first) {
                if (c < 0) os << '-';
                first = false;
            } else {
                os << (c < 0 ? " - " : " + ");
            }
            if (mag != 1 || d == 0) os << mag;
            os << mono;
        }
    }
    if (first) return "0";
    return os.str();
}

TruncatedSeries expand(const GroupWord &w, int degree) {
    const int n = w.rank();
    TruncatedSeries acc = TruncatedSeries::one(n, degree);
    for (const Letter &l : w.letters())
        acc = acc.times_generator_power(l.gen, l.sign);
    return acc;
}

}  // namespace milnor
