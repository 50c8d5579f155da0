#include "milnor/braid.hpp"

#include <numeric>
#include <sstream>

namespace milnor {

void BraidWord::check_letter(const BraidLetter &l) const {
    const int maxpos = l.base ? (strands_ / 2) - 1 : strands_ - 1;
    if (l.pos < 1 || l.pos > maxpos)
        throw IndexError("BraidWord: letter position out of range");
    if (l.sign != 1 && l.sign != -1)
        throw IndexError("BraidWord: letter sign must be +1 or -1");
}

BraidWord::BraidWord(int strands, std::vector<BraidLetter> letters)
    : strands_(strands), letters_(std::move(letters)) {
    if (strands < 1) throw IndexError("BraidWord: strands must be >= 1");
    for (const BraidLetter &l : letters_) check_letter(l);
}

bool BraidWord::has_base_letters() const {
    for (const BraidLetter &l : letters_)
        if (l.base) return true;
    return false;
}

void BraidWord::append(BraidLetter l) {
    check_letter(l);
    letters_.push_back(l);
}

BraidWord BraidWord::operator*(const BraidWord &rhs) const {
    if (strands_ != rhs.strands_)
        throw MismatchError("BraidWord: strand count mismatch");
    BraidWord out = *this;
    out.letters_.insert(out.letters_.end(), rhs.letters_.begin(),
                        rhs.letters_.end());
    return out;
}

BraidWord BraidWord::inverse() const {
    BraidWord out(strands_);
    out.letters_.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
        out.letters_.push_back({it->pos, -it->sign, it->base});
    return out;
}

BraidWord BraidWord::power(std::int64_t e) const {
    const BraidWord &unit = e >= 0 ? *this : this->inverse();
    BraidWord out(strands_);
    for (std::int64_t k = 0; k < (e >= 0 ? e : -e); ++k) out = out * unit;
    return out;
}

namespace {

// The two strand positions a letter swaps.
std::pair<int, int> letter_positions(const BraidLetter &l) {
    if (l.base) return {2 * l.pos - 1, 2 * l.pos + 1};
    return {l.pos, l.pos + 1};
}

}  // namespace

std::vector<int> permutation(const BraidWord &b) {
    std::vector<int> occupant(b.strands());  // occupant[p-1] = strand at position p
    std::iota(occupant.begin(), occupant.end(), 1);
    for (const BraidLetter &l : b.letters()) {
        auto [p, q] = letter_positions(l);
        std::swap(occupant[p - 1], occupant[q - 1]);
    }
    std::vector<int> result(b.strands());
    for (int p = 1; p <= b.strands(); ++p) result[occupant[p - 1] - 1] = p;
    return result;
}

bool is_pure(const BraidWord &b) {
    const std::vector<int> perm = permutation(b);
    for (int i = 1; i <= b.strands(); ++i)
        if (perm[i - 1] != i) return false;
    return true;
}

PureBraid::PureBraid(BraidWord w) : word_(std::move(w)) {
    if (!is_pure(word_))
        throw Error("PureBraid: induced permutation is not the identity");
}

GroupWord artin_image_word(const BraidWord &b, int i, std::size_t word_cap) {
    const int n = b.strands();
    if (i < 1 || i > n)
        throw IndexError("artin_image: strand index out of range");
    if (b.has_base_letters())
        throw Error("artin_image: doubled-encoding base letters not allowed");
    std::vector<GroupWord> img;
    img.reserve(n);
    for (int j = 1; j <= n; ++j) img.push_back(GroupWord::generator(n, j));
    std::size_t total = n;
    for (const BraidLetter &l : b.letters()) {
        const int k = l.pos;
        if (l.sign > 0) {
            GroupWord moved = img[k - 1] * img[k] * img[k - 1].inverse();
            img[k] = img[k - 1];
            img[k - 1] = std::move(moved);
        } else {
            GroupWord moved = img[k].inverse() * img[k - 1] * img[k];
            img[k - 1] = img[k];
            img[k] = std::move(moved);
        }
        total = 0;
        for (const GroupWord &w : img) total += w.size();
        if (total > word_cap)
            throw WordCapError("artin_image: word length cap exceeded");
    }
    return img[i - 1];
}

TruncatedSeries artin_image_series(const BraidWord &b, int i, int degree) {
    const int n = b.strands();
    if (i < 1 || i > n)
        throw IndexError("artin_image: strand index out of range");
    if (b.has_base_letters())
        throw Error("artin_image: doubled-encoding base letters not allowed");
    std::vector<TruncatedSeries> img;
    img.reserve(n);
    for (int j = 1; j <= n; ++j)
        img.push_back(TruncatedSeries::one(n, degree).times_generator_power(j, 1));
    for (const BraidLetter &l : b.letters()) {
        const int k = l.pos;
        if (l.sign > 0) {
            TruncatedSeries moved = img[k - 1] * img[k] * img[k - 1].inverse();
            img[k] = img[k - 1];
            img[k - 1] = std::move(moved);
        } else {
            TruncatedSeries moved = img[k].inverse() * img[k - 1] * img[k];
            img[k - 1] = img[k];
            img[k] = std::move(moved);
        }
    }
    return img[i - 1];
}

PureBraid pure_generator(int i, int j, int n) {
    if (!(1 <= i && i < j && j <= n))
        throw IndexError("pure_generator: need 1 <= i < j <= n");
    BraidWord w(n);
    for (int k = j - 1; k >= i + 1; --k) w.append({k, +1});
    w.append({i, +1});
    w.append({i, +1});
    for (int k = i + 1; k <= j - 1; ++k) w.append({k, -1});
    return PureBraid(std::move(w));
}

BraidWord cable2(const BraidWord &b, std::span<const std::int64_t> twists) {
    if (b.has_base_letters())
        throw Error("cable2: doubled-encoding base letters not allowed");
    const int n = b.strands();
    if (!twists.empty() && static_cast<int>(twists.size()) != n)
        throw MismatchError("cable2: twist vector length must equal strands");
    BraidWord out(2 * n);
    for (const BraidLetter &l : b.letters()) {
        const int p = 2 * l.pos - 1;
        if (l.sign > 0) {
            out.append({p + 1, +1});
            out.append({p + 2, +1});
            out.append({p, +1});
            out.append({p + 1, +1});
        } else {
            out.append({p + 1, -1});
            out.append({p, -1});
            out.append({p + 2, -1});
            out.append({p + 1, -1});
        }
    }
    for (int i = 1; i <= n && !twists.empty(); ++i) {
        const std::int64_t t = twists[i - 1];
        const int sign = t >= 0 ? +1 : -1;
        for (std::int64_t k = 0; k < 2 * (t >= 0 ? t : -t); ++k)
            out.append({2 * i - 1, sign});
    }
    return out;
}

namespace {

// Strand j travels to sit beside strand m (passing over everything),
// clasps it, and travels back. The first clasp crossing has j passing
// under strand m while m's meridian is still the plain generator, so the
// longitude of strand j picks up exactly x_m^{±1}.
BraidWord encircle(int j, int m, int sign, int n) {
    BraidWord w(n);
    if (m < j) {
        for (int p = j - 1; p >= m + 1; --p) w.append({p, -1});
        w.append({m, sign});
        w.append({m, sign});
        for (int p = m + 1; p <= j - 1; ++p) w.append({p, +1});
    } else {
        for (int p = j; p <= m - 2; ++p) w.append({p, +1});
        w.append({m - 1, sign});
        w.append({m - 1, sign});
        for (int p = m - 2; p >= j; --p) w.append({p, -1});
    }
    return w;
}

}  // namespace

PureBraid realize_longitude(int j, const GroupWord &w, int n) {
    if (j < 1 || j > n)
        throw IndexError("realize_longitude: strand index out of range");
    if (w.rank() > n)
        throw IndexError("realize_longitude: word rank exceeds strand count");
    // The longitude conjugator reads the stacked blocks top to bottom, so
    // the blocks are stacked in reverse letter order.
    BraidWord out(n);
    const auto &letters = w.letters();
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
        if (it->gen == j)
            throw IndexError(
                "realize_longitude: word must not mention the target strand");
        out = out * encircle(j, it->gen, it->sign, n);
    }
    return PureBraid(std::move(out));
}

std::string braid_to_text(const BraidWord &b) {
    std::ostringstream os;
    bool first = true;
    for (const BraidLetter &l : b.letters()) {
        if (!first) os << ' ';
        first = false;
        char c = l.base ? 'b' : 's';
        if (l.sign < 0) c = static_cast<char>(c - 'a' + 'A');
        os << c << l.pos;
    }
    return os.str();
}

BraidWord braid_from_text(int strands, const std::string &text) {
    BraidWord out(strands);
    std::istringstream is(text);
    std::string tok;
    while (is >> tok) {
        if (tok[0] == 'A') {
            // A[i,j] or A[i,j]^-1
            int sign = +1;
            std::string body = tok;
            if (auto pos = body.find("^-1"); pos != std::string::npos) {
                if (pos + 3 != body.size())
                    throw ParseError("braid: bad token '" + tok + "'");
                sign = -1;
                body = body.substr(0, pos);
            }
            int i = 0, jj = 0;
            char lb = 0, comma = 0, rb = 0;
            std::istringstream ts(body.substr(1));
            ts >> lb >> i >> comma >> jj >> rb;
            if (ts.fail() || lb != '[' || comma != ',' || rb != ']')
                throw ParseError("braid: bad token '" + tok + "'");
            PureBraid gen = pure_generator(i, jj, strands);
            const BraidWord gw =
                sign > 0 ? gen.word() : gen.word().inverse();
            out = out * gw;
            continue;
        }
        const char c = tok[0];
        bool base = (c == 'b' || c == 'B');
        bool lower = (c == 's' || c == 'b');
        if (!base && c != 's' && c != 'S')
            throw ParseError("braid: bad token '" + tok + "'");
        int pos = 0;
        try {
            pos = std::stoi(tok.substr(1));
        } catch (const std::exception &) {
            throw ParseError("braid: bad position in '" + tok + "'");
        }
        out.append({pos, lower ? +1 : -1, base});
    }
    return out;
}

}  // namespace milnor
