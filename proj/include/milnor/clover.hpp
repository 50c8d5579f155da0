#ifndef MILNOR_CLOVER_HPP
#define MILNOR_CLOVER_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "milnor/invariants.hpp"
#include "milnor/tangle.hpp"

namespace milnor {

// An n-clover link, given by a bottom-tangle representative. The
// representative is unique only up to SL-moves; certification of μ values
// accounts for that. The provenance note records how the user extracted
// the representative; it is never interpreted.
struct CloverLink {
    int components = 0;
    TangleRep representative;  // kind bottom_tangle
    std::string label;
    std::string provenance;

    static CloverLink make(TangleRep representative, std::string label = "",
                           std::string provenance = "");
    static CloverLink trivial(int n);
};

struct CloverMuValue {
    std::int64_t value = 0;
    bool certified = false;
};

CloverMuValue clover_mu(const CloverLink &c, const SequenceIndex &I, int q);

// Bulk variant: one longitude table and one vanishing-depth pass for the
// whole sequence list.
std::vector<CloverMuValue> clover_mu_all(const CloverLink &c,
                                         const std::vector<SequenceIndex> &Is,
                                         int q);

enum class CompareMode { automatic, three_component, half_vanishing, eh_ck };

enum class VerdictStatus { equivalent, distinguished, inconclusive };

struct Witness {
    SequenceIndex I;
    std::int64_t left = 0;
    std::int64_t right = 0;
};

struct Verdict {
    VerdictStatus status = VerdictStatus::equivalent;
    std::string relation;
    std::vector<Witness> witnesses;  // differing sequences, enumeration order
    int certified_length = 0;        // maximum compared length
    int depth_left = 0;              // vanishing depths actually used
    int depth_right = 0;
};

// Comparators backed by the classification results:
//   three_component — n = 3, unconditional, non-repeated |I| ≤ 3;
//   half_vanishing  — hypothesis μ̄ = 0 through ⌊n/2⌋ on both closures,
//                     then non-repeated |I| ≤ n;
//   eh_ck           — hypothesis through k, then non-repeated |I| ≤ 2k+1
//                     for (edge-homotopy + C_{2k+1})-equivalence; if the
//                     two depths differ the smaller one is used and both
//                     are recorded.
// automatic picks three_component when n = 3, else half_vanishing.
Verdict compare_edge_homotopy(const CloverLink &c, const CloverLink &cp,
                              CompareMode mode, int k = 0);

struct NormalFormTerm {
    std::vector<int> pi;  // injection values π(1)..π(i+1)
    std::int64_t exponent = 0;
};

struct NormalFormResult {
    std::vector<std::vector<NormalFormTerm>> stages;  // stage i at index i−1
    TangleRep accumulated;                            // sl_1 ∗ ⋯ ∗ sl_{m−1}
};

// Link-homotopy normal form: stage i collects V_π^{x_π} over the
// injections π: {1..i+1} → {1..n} with π(1) minimal and π(i+1) maximal
// among the images. The accumulated product reproduces every non-repeated
// μ(I) of s for |I| ≤ up_to.
NormalFormResult normal_form(const TangleRep &s, int up_to, int q);

}  // namespace milnor

#endif
