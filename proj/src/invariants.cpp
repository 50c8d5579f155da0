#include "milnor/invariants.hpp"

#include <cassert>
#include <cstdlib>
#include <numeric>
#include <sstream>

namespace milnor {

bool SequenceIndex::non_repeated() const {
    for (std::size_t a = 0; a < entries.size(); ++a)
        for (std::size_t b = a + 1; b < entries.size(); ++b)
            if (entries[a] == entries[b]) return false;
    return true;
}

std::string SequenceIndex::to_text() const {
    bool digits = true;
    for (int e : entries)
        if (e > 9) digits = false;
    std::string s;
    for (std::size_t k = 0; k < entries.size(); ++k) {
        if (!digits && k > 0) s += ',';
        s += std::to_string(entries[k]);
    }
    return s;
}

SequenceIndex SequenceIndex::from_text(const std::string &text) {
    SequenceIndex I;
    if (text.find(',') != std::string::npos) {
        std::istringstream is(text);
        std::string part;
        while (std::getline(is, part, ','))
            I.entries.push_back(std::stoi(part));
        return I;
    }
    for (char c : text) {
        if (c < '1' || c > '9')
            throw ParseError("sequence: bad character in '" + text + "'");
        I.entries.push_back(c - '0');
    }
    return I;
}

std::size_t effective_word_cap() {
    if (const char *env = std::getenv("MILNOR_WORD_CAP")) {
        char *end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    return 1'000'000;
}

namespace {

// Past this total word length the series sweep beats expanding the exact
// longitude words.
constexpr std::size_t kExpandThreshold = 20'000;

// Meridian sweep over a braid-encoded tangle, in the truncated series
// ring. Every position carries the meridian series of its current
// occupant, its inverse, and the conjugator relating it to the occupant's
// bottom meridian; the top conjugators are the longitudes.
//
// Doubled layouts have bottom meridians 1+X_i on the odd strands and the
// unknown cap-solutions Y_i on the even strands; the top-cap relations
// m_top[2i−1]·m_top[2i] = 1 are solved for the Y_i by fixed-point
// iteration. Each pass is correct to at least one more degree, so q+2
// passes always converge.
class Sweep {
  public:
    Sweep(const TangleRep &t, int degree)
        : n_(t.components()),
          positions_(t.braid().strands()),
          doubled_(t.doubled()),
          q_(degree),
          word_(&t.braid().word()) {
        base_.reserve(positions_);
        for (int p = 1; p <= positions_; ++p) {
            if (!doubled_)
                base_.push_back(gen_pow(p, +1));
            else if (p % 2 == 1)
                base_.push_back(gen_pow((p + 1) / 2, +1));
            else
                base_.push_back(gen_pow(p / 2, -1));  // initial cap guess
        }
    }

    // Un-normalized longitude series per component. The top conjugator of
    // a strand is its longitude; a doubled component traverses its odd
    // strand upward and its even strand downward, so the two conjugators
    // compose as C_even⁻¹ · C_odd.
    std::vector<TruncatedSeries> longitudes() {
        if (doubled_) solve_caps();
        PassData d = pass();
        std::vector<TruncatedSeries> out;
        out.reserve(n_);
        for (int i = 1; i <= n_; ++i) {
            if (!doubled_)
                out.push_back(std::move(d.conj[i - 1]));
            else
                out.push_back(d.conj[2 * i - 1].inverse() * d.conj[2 * i - 2]);
        }
        return out;
    }

  private:
    int n_;
    int positions_;
    bool doubled_;
    int q_;
    const BraidWord *word_;
    std::vector<TruncatedSeries> base_;

    TruncatedSeries one() const { return TruncatedSeries::one(n_, q_); }
    TruncatedSeries gen_pow(int i, std::int64_t e) const {
        return one().times_generator_power(i, e);
    }

    struct PassData {
        std::vector<TruncatedSeries> conj;      // per position, at the top
        std::vector<TruncatedSeries> merid_inv; // per position, at the top
    };

    PassData pass() const {
        std::vector<int> occupant(positions_);
        std::iota(occupant.begin(), occupant.end(), 1);
        std::vector<TruncatedSeries> C(positions_, one());
        std::vector<TruncatedSeries> M, Minv;
        M.reserve(positions_);
        Minv.reserve(positions_);
        for (int p = 0; p < positions_; ++p) {
            M.push_back(base_[p]);
            Minv.push_back(base_[p].inverse());
        }

        for (const BraidLetter &l : word_->letters()) {
            const int p = l.base ? 2 * l.pos - 2 : l.pos - 1;  // 0-based
            const int r = l.base ? p + 2 : p + 1;
            if (l.sign > 0) {
                // occupant(p) over; occupant(r) moves to p underneath
                TruncatedSeries uM = M[p] * M[r] * Minv[p];
                TruncatedSeries uMinv = M[p] * Minv[r] * Minv[p];
                TruncatedSeries uC = M[p] * C[r];
                M[r] = std::move(M[p]);
                Minv[r] = std::move(Minv[p]);
                C[r] = std::move(C[p]);
                M[p] = std::move(uM);
                Minv[p] = std::move(uMinv);
                C[p] = std::move(uC);
            } else {
                // occupant(r) over; occupant(p) moves to r underneath
                TruncatedSeries uM = Minv[r] * M[p] * M[r];
                TruncatedSeries uMinv = Minv[r] * Minv[p] * M[r];
                TruncatedSeries uC = Minv[r] * C[p];
                M[p] = std::move(M[r]);
                Minv[p] = std::move(Minv[r]);
                C[p] = std::move(C[r]);
                M[r] = std::move(uM);
                Minv[r] = std::move(uMinv);
                C[r] = std::move(uC);
            }
            std::swap(occupant[p], occupant[r]);
        }
        for (int p = 0; p < positions_; ++p) assert(occupant[p] == p + 1);

        PassData out;
        out.conj = std::move(C);
        out.merid_inv = std::move(Minv);
        return out;
    }

    void solve_caps() {
        for (int iter = 0; iter < q_ + 2; ++iter) {
            PassData d = pass();
            bool stable = true;
            for (int i = 1; i <= n_; ++i) {
                const TruncatedSeries &B = d.conj[2 * i - 1];
                // caps force m_top[2i] = m_top[2i−1]⁻¹, so
                // Y_i = B⁻¹ · m_top[2i−1]⁻¹ · B
                TruncatedSeries y =
                    B.inverse() * d.merid_inv[2 * i - 2] * B;
                if (!(y == base_[2 * i - 1])) stable = false;
                base_[2 * i - 1] = std::move(y);
            }
            if (stable) return;
        }
    }
};

std::vector<TruncatedSeries> normalize_longitudes(
    std::vector<TruncatedSeries> raw) {
    for (std::size_t i = 0; i < raw.size(); ++i) {
        const std::int64_t e =
            raw[i].coefficient(Monomial{{static_cast<int>(i) + 1}});
        if (e != 0)
            raw[i] = raw[i].times_generator_power(static_cast<int>(i) + 1, -e);
    }
    return raw;
}

std::vector<TruncatedSeries> series_longitudes(const TangleRep &t, int q) {
    Sweep sweep(t, q);
    return normalize_longitudes(sweep.longitudes());
}

}  // namespace

std::vector<GroupWord> longitude_words(const TangleRep &t,
                                       std::optional<std::size_t> word_cap) {
    if (t.doubled())
        throw WordCapError(
            "longitude_words: doubled encodings have no exact-word form; "
            "use the series mode");
    const std::size_t cap = word_cap.value_or(effective_word_cap());
    const int n = t.components();
    std::vector<GroupWord> out;
    out.reserve(n);
    for (int i = 1; i <= n; ++i) {
        GroupWord img = artin_image_word(t.braid().word(), i, cap);
        GroupWord c = img.strip_conjugator(i);
        const std::int64_t e = c.exponent_sum(i);
        GroupWord norm = c;
        for (std::int64_t k = 0; k < (e >= 0 ? e : -e); ++k)
            norm = norm * GroupWord::generator(n, i, e >= 0 ? -1 : +1);
        out.push_back(std::move(norm));
    }
    return out;
}

std::vector<TruncatedSeries> longitudes(const TangleRep &t, int q) {
    if (q < 1) throw TruncationError("longitudes: need q >= 1");
    return series_longitudes(t, q);
}

MilnorTable MilnorTable::compute(const TangleRep &t, int q) {
    if (q < 1) throw TruncationError("MilnorTable: need q >= 1");
    if (!t.doubled()) {
        try {
            std::vector<GroupWord> words = longitude_words(t);
            std::size_t total = 0;
            for (const GroupWord &w : words) total += w.size();
            if (total <= kExpandThreshold) {
                std::vector<TruncatedSeries> lambda;
                lambda.reserve(words.size());
                for (const GroupWord &w : words) lambda.push_back(expand(w, q));
                return MilnorTable(q, std::move(lambda), /*exact=*/true);
            }
        } catch (const WordCapError &) {
            // fall through to the series sweep
        }
    }
    return MilnorTable(q, series_longitudes(t, q), /*exact=*/false);
}

const TruncatedSeries &MilnorTable::longitude(int i) const {
    if (i < 1 || i > components())
        throw IndexError("MilnorTable: component index out of range");
    return lambda_[i - 1];
}

std::int64_t MilnorTable::mu(const SequenceIndex &I) const {
    if (I.entries.empty())
        throw IndexError("mu: empty sequence");
    for (int e : I.entries)
        if (e < 1 || e > components())
            throw IndexError("mu: sequence entry out of range");
    if (static_cast<int>(I.length()) > q_)
        throw TruncationError("mu: sequence longer than the truncation degree");
    if (I.length() == 1) return 0;
    Monomial m;
    m.vars.assign(I.entries.begin(), I.entries.end() - 1);
    return lambda_[I.entries.back() - 1].coefficient(m);
}

std::int64_t mu(const TangleRep &t, const SequenceIndex &I, int q) {
    if (t.kind() == TangleKind::link_closure)
        throw KindError(
            "mu: plain Milnor numbers of a link closure are representative-"
            "dependent; use mu_bar or representative_mu");
    return MilnorTable::compute(t, q).mu(I);
}

std::int64_t representative_mu(const TangleRep &t, const SequenceIndex &I,
                               int q) {
    return MilnorTable::compute(t, q).mu(I);
}

std::int64_t delta(const MilnorTable &table, const SequenceIndex &I) {
    const std::size_t k = I.length();
    std::int64_t g = 0;
    // every proper subsequence (delete at least one entry, keep order),
    // then every cyclic rotation of it
    for (std::size_t mask = 1; mask + 1 < (std::size_t(1) << k); ++mask) {
        SequenceIndex sub;
        for (std::size_t t = 0; t < k; ++t)
            if (mask & (std::size_t(1) << t)) sub.entries.push_back(I.entries[t]);
        const std::size_t len = sub.entries.size();
        for (std::size_t r = 0; r < len; ++r) {
            SequenceIndex rot;
            for (std::size_t t = 0; t < len; ++t)
                rot.entries.push_back(sub.entries[(t + r) % len]);
            const std::int64_t v = table.mu(rot);
            g = std::gcd(g, v);
        }
    }
    return g;
}

ResidueValue mu_bar(const MilnorTable &table, const SequenceIndex &I) {
    const std::int64_t d = delta(table, I);
    std::int64_t v = table.mu(I);
    if (d > 0) v = ((v % d) + d) % d;
    return ResidueValue{d, v};
}

std::int64_t delta(const TangleRep &closure, const SequenceIndex &I, int q) {
    if (closure.kind() != TangleKind::link_closure)
        throw KindError("delta: expected a link closure");
    return delta(MilnorTable::compute(closure, q), I);
}

ResidueValue mu_bar(const TangleRep &closure, const SequenceIndex &I, int q) {
    if (closure.kind() != TangleKind::link_closure)
        throw KindError("mu_bar: expected a link closure");
    return mu_bar(MilnorTable::compute(closure, q), I);
}

std::vector<SequenceIndex> enumerate_sequences(int n, int maxlen,
                                               bool non_repeated) {
    if (maxlen < 1)
        throw IndexError("enumerate_sequences: maxlen must be >= 1");
    std::vector<SequenceIndex> out;
    SequenceIndex cur;
    for (int len = 1; len <= maxlen; ++len) {
        cur.entries.assign(len, 0);
        // odometer over 1..n per slot, lexicographic
        std::vector<int> slot(len, 1);
        while (true) {
            cur.entries = slot;
            if (!non_repeated || cur.non_repeated()) out.push_back(cur);
            int t = len - 1;
            while (t >= 0 && slot[t] == n) slot[t--] = 1;
            if (t < 0) break;
            ++slot[t];
        }
    }
    return out;
}

VanishingDepth vanishing_depth(const MilnorTable &table, int bound) {
    if (bound < 1)
        throw IndexError("vanishing_depth: bound must be >= 1");
    if (table.truncation() <= bound)
        throw TruncationError("vanishing_depth: truncation must exceed bound");
    const int n = table.components();
    for (int len = 2; len <= bound; ++len) {
        std::vector<int> slot(len, 1);
        while (true) {
            SequenceIndex J{slot};
            if (!mu_bar(table, J).is_zero()) return {len - 1, false};
            int t = len - 1;
            while (t >= 0 && slot[t] == n) slot[t--] = 1;
            if (t < 0) break;
            ++slot[t];
        }
    }
    return {bound, true};
}

VanishingDepth vanishing_depth(const TangleRep &closure, int bound) {
    if (closure.kind() != TangleKind::link_closure)
        throw KindError("vanishing_depth: expected a link closure");
    return vanishing_depth(MilnorTable::compute(closure, bound + 1), bound);
}

}  // namespace milnor
