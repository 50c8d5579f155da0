#include "milnor/clover.hpp"

#include <algorithm>

namespace milnor {

CloverLink CloverLink::make(TangleRep representative, std::string label,
                            std::string provenance) {
    if (representative.kind() != TangleKind::bottom_tangle)
        throw KindError("CloverLink: representative must be a bottom tangle");
    CloverLink c{representative.components(), std::move(representative),
                 std::move(label), std::move(provenance)};
    return c;
}

CloverLink CloverLink::trivial(int n) {
    return make(TangleRep::trivial(TangleKind::bottom_tangle, n), "trivial");
}

std::vector<CloverMuValue> clover_mu_all(const CloverLink &c,
                                         const std::vector<SequenceIndex> &Is,
                                         int q) {
    int maxlen = 1;
    for (const SequenceIndex &I : Is)
        maxlen = std::max(maxlen, static_cast<int>(I.length()));
    if (maxlen > q - 1)
        throw TruncationError("clover_mu: need q > max |I|");
    const MilnorTable table = MilnorTable::compute(c.representative, q);
    const VanishingDepth vd = vanishing_depth(
        MilnorTable::compute(close(c.representative), maxlen + 1), maxlen);
    std::vector<CloverMuValue> out;
    out.reserve(Is.size());
    for (const SequenceIndex &I : Is) {
        const int len = static_cast<int>(I.length());
        const int k = std::min(vd.depth, len);  // depth = bound when saturated
        out.push_back({table.mu(I), len <= 2 * k + 1});
    }
    return out;
}

CloverMuValue clover_mu(const CloverLink &c, const SequenceIndex &I, int q) {
    return clover_mu_all(c, {I}, q).front();
}

namespace {

Verdict compare_tables(const CloverLink &c, const CloverLink &cp, int maxlen,
                       std::string relation, int depth_left, int depth_right) {
    const int q = maxlen + 1;
    const MilnorTable left = MilnorTable::compute(c.representative, q);
    const MilnorTable right = MilnorTable::compute(cp.representative, q);
    Verdict v;
    v.relation = std::move(relation);
    v.certified_length = maxlen;
    v.depth_left = depth_left;
    v.depth_right = depth_right;
    for (const SequenceIndex &I :
         enumerate_sequences(c.components, maxlen, /*non_repeated=*/true)) {
        const std::int64_t a = left.mu(I);
        const std::int64_t b = right.mu(I);
        if (a != b) v.witnesses.push_back({I, a, b});
    }
    v.status = v.witnesses.empty() ? VerdictStatus::equivalent
                                   : VerdictStatus::distinguished;
    return v;
}

// First sequence J with μ̄(J) ≠ 0, |J| ≤ bound, if any; used to report a
// failed comparator hypothesis.
std::vector<Witness> hypothesis_failures(const CloverLink &c,
                                         const CloverLink &cp, int bound) {
    const MilnorTable lt =
        MilnorTable::compute(close(c.representative), bound + 1);
    const MilnorTable rt =
        MilnorTable::compute(close(cp.representative), bound + 1);
    for (const SequenceIndex &J :
         enumerate_sequences(c.components, bound, /*non_repeated=*/false)) {
        const ResidueValue a = mu_bar(lt, J);
        const ResidueValue b = mu_bar(rt, J);
        if (!a.is_zero() || !b.is_zero()) return {{J, a.value, b.value}};
    }
    return {};
}

}  // namespace

Verdict compare_edge_homotopy(const CloverLink &c, const CloverLink &cp,
                              CompareMode mode, int k) {
    if (c.components != cp.components)
        throw MismatchError("compare: component count mismatch");
    const int n = c.components;
    if (mode == CompareMode::automatic)
        mode = (n == 3) ? CompareMode::three_component
                        : CompareMode::half_vanishing;

    switch (mode) {
        case CompareMode::three_component: {
            if (n != 3)
                throw MismatchError("compare: three-component mode needs n = 3");
            return compare_tables(c, cp, 3, "edge-homotopy", 1, 1);
        }
        case CompareMode::half_vanishing: {
            const int bound = n / 2;
            if (bound >= 1) {
                std::vector<Witness> bad = hypothesis_failures(c, cp, bound);
                if (!bad.empty()) {
                    Verdict v;
                    v.status = VerdictStatus::inconclusive;
                    v.relation = "edge-homotopy";
                    v.certified_length = 0;
                    v.witnesses = std::move(bad);
                    v.depth_left = v.depth_right = 0;
                    return v;
                }
            }
            return compare_tables(c, cp, n, "edge-homotopy", bound, bound);
        }
        case CompareMode::eh_ck: {
            if (k < 1) throw IndexError("compare: eh-ck mode needs k >= 1");
            const VanishingDepth dl =
                vanishing_depth(close(c.representative), k);
            const VanishingDepth dr =
                vanishing_depth(close(cp.representative), k);
            const int keff = std::min(dl.depth, dr.depth);
            return compare_tables(
                c, cp, 2 * keff + 1,
                "edge-homotopy+C_" + std::to_string(2 * keff + 1), dl.depth,
                dr.depth);
        }
        case CompareMode::automatic:
            break;
    }
    throw Error("compare: unreachable mode");
}

namespace {

// Injections π: {1..k} → {1..n} with π(1) minimal and π(k) maximal among
// the images; ordered by image set, then lexicographically by the interior
// arrangement.
std::vector<std::vector<int>> injections(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> set(k);
    // enumerate k-subsets of 1..n in lex order
    for (int i = 0; i < k; ++i) set[i] = i + 1;
    while (true) {
        std::vector<int> interior(set.begin() + 1, set.end() - 1);
        std::sort(interior.begin(), interior.end());
        do {
            std::vector<int> pi;
            pi.push_back(set.front());
            pi.insert(pi.end(), interior.begin(), interior.end());
            pi.push_back(set.back());
            out.push_back(std::move(pi));
        } while (std::next_permutation(interior.begin(), interior.end()));
        int t = k - 1;
        while (t >= 0 && set[t] == n - (k - 1 - t)) --t;
        if (t < 0) break;
        ++set[t];
        for (int u = t + 1; u < k; ++u) set[u] = set[u - 1] + 1;
    }
    return out;
}

}  // namespace

NormalFormResult normal_form(const TangleRep &s, int up_to, int q) {
    if (s.kind() != TangleKind::string_link)
        throw KindError("normal_form: expected a string link");
    if (s.doubled())
        throw KindError("normal_form: doubled encodings are not supported");
    const int n = s.components();
    if (up_to < 2 || up_to > n)
        throw IndexError("normal_form: need 2 <= up_to <= components");
    if (q <= up_to)
        throw TruncationError("normal_form: need q > up_to");

    const MilnorTable target = MilnorTable::compute(s, q);
    NormalFormResult result{{}, TangleRep::trivial(TangleKind::string_link, n)};

    for (int i = 1; i <= up_to - 1; ++i) {
        const MilnorTable before = MilnorTable::compute(result.accumulated, q);
        std::vector<NormalFormTerm> stage;
        TangleRep stage_sl = TangleRep::trivial(TangleKind::string_link, n);
        for (const std::vector<int> &pi : injections(n, i + 1)) {
            const SequenceIndex I{pi};
            std::int64_t x = target.mu(I);
            if (i >= 2) x -= before.mu(I);
            if (x != 0) {
                std::vector<int> commutator_indices(pi.begin(), pi.end() - 1);
                const PureBraid v = realize_longitude(
                    pi.back(), left_normed_commutator(n, commutator_indices), n);
                stage_sl = product(
                    stage_sl, TangleRep::make(TangleKind::string_link, n,
                                              v.power(x), {}));
            }
            stage.push_back({pi, x});
        }
        result.accumulated = product(result.accumulated, stage_sl);
        result.stages.push_back(std::move(stage));
    }
    return result;
}

}  // namespace milnor
