#include "milnor/group_word.hpp"

#include <sstream>

namespace milnor {

namespace {

void push_reduced(std::vector<Letter> &out, Letter l) {
    if (!out.empty() && out.back().gen == l.gen && out.back().sign == -l.sign)
        out.pop_back();
    else
        out.push_back(l);
}

}  // namespace

GroupWord GroupWord::reduce(int rank, std::span<const Letter> raw) {
    GroupWord w(rank);
    w.letters_.reserve(raw.size());
    for (const Letter &l : raw) {
        if (l.gen < 1 || l.gen > rank)
            throw IndexError("GroupWord: generator index out of range");
        if (l.sign != 1 && l.sign != -1)
            throw IndexError("GroupWord: letter sign must be +1 or -1");
        push_reduced(w.letters_, l);
    }
    return w;
}

GroupWord GroupWord::generator(int rank, int i, int sign) {
    Letter l{i, sign};
    return reduce(rank, std::span<const Letter>(&l, 1));
}

GroupWord GroupWord::operator*(const GroupWord &rhs) const {
    check_rank(rhs);
    GroupWord out(rank_);
    out.letters_ = letters_;
    out.letters_.reserve(letters_.size() + rhs.letters_.size());
    for (const Letter &l : rhs.letters_) push_reduced(out.letters_, l);
    return out;
}

GroupWord GroupWord::inverse() const {
    GroupWord out(rank_);
    out.letters_.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
        out.letters_.push_back(milnor::inverse(*it));
    return out;
}

std::int64_t GroupWord::exponent_sum(int i) const {
    if (i < 1 || i > rank_)
        throw IndexError("exponent_sum: generator index out of range");
    std::int64_t s = 0;
    for (const Letter &l : letters_)
        if (l.gen == i) s += l.sign;
    return s;
}

GroupWord GroupWord::strip_conjugator(int i) const {
    if (i < 1 || i > rank_)
        throw IndexError("strip_conjugator: generator index out of range");
    if (letters_.size() % 2 == 0)
        throw NotConjugateError(
            "strip_conjugator: not a conjugate of the requested generator");
    const std::size_t m = letters_.size() / 2;
    if (!(letters_[m] == Letter{i, +1}))
        throw NotConjugateError(
            "strip_conjugator: not a conjugate of the requested generator");
    for (std::size_t t = 0; t < m; ++t)
        if (!(letters_[m - 1 - t] == milnor::inverse(letters_[m + 1 + t])))
            throw NotConjugateError(
                "strip_conjugator: not a conjugate of the requested generator");
    GroupWord c(rank_);
    c.letters_.assign(letters_.begin(), letters_.begin() + m);
    return c;
}

std::string GroupWord::to_text() const {
    if (letters_.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const Letter &l : letters_) {
        if (!first) os << ' ';
        first = false;
        os << 'x' << l.gen;
        if (l.sign < 0) os << "^-1";
    }
    return os.str();
}

GroupWord GroupWord::from_text(int rank, const std::string &text) {
    std::istringstream is(text);
    std::vector<Letter> raw;
    std::string tok;
    while (is >> tok) {
        if (tok == "1") continue;
        if (tok.size() < 2 || tok[0] != 'x')
            throw ParseError("word: bad token '" + tok + "'");
        int sign = +1;
        std::string body = tok.substr(1);
        if (auto pos = body.find("^-1"); pos != std::string::npos) {
            if (pos + 3 != body.size())
                throw ParseError("word: bad token '" + tok + "'");
            sign = -1;
            body = body.substr(0, pos);
        }
        try {
            raw.push_back(Letter{std::stoi(body), sign});
        } catch (const std::exception &) {
            throw ParseError("word: bad generator index in '" + tok + "'");
        }
    }
    return reduce(rank, raw);
}

GroupWord conjugate(const GroupWord &a, const GroupWord &by) {
    return by * a * by.inverse();
}

GroupWord commutator(const GroupWord &a, const GroupWord &b) {
    return a.inverse() * b.inverse() * a * b;
}

GroupWord left_normed_commutator(int rank, std::span<const int> indices) {
    if (indices.empty())
        throw IndexError("left_normed_commutator: empty index list");
    GroupWord w = GroupWord::generator(rank, indices[0]);
    for (std::size_t t = 1; t < indices.size(); ++t)
        w = commutator(w, GroupWord::generator(rank, indices[t]));
    return w;
}

}  // namespace milnor
