#ifndef MILNOR_CLI_HPP
#define MILNOR_CLI_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "milnor/io.hpp"

namespace milnor::cli {

// Exit codes shared by all commands: 0 success (compare: equivalent),
// 1 distinguished, 2 inconclusive, 3 invalid input or computation error.
struct Outcome {
    Json report;
    int exit_code = 0;
};

struct ComputeFlags {
    bool non_repeated = false;
    bool mu_bar = false;             // close the tangle and report μ̄
    bool representative_mu = false;  // plain μ of a closure, with caveat
};

Outcome run_compute(const std::string &file, int length, ComputeFlags flags);

// mode: "auto", "n3", "half", or "ehck:K".
Outcome run_compare(const std::string &file1, const std::string &file2,
                    const std::string &mode, int length);

Outcome run_slmove(const std::string &file, const std::string &pattern_file,
                   const std::vector<std::int64_t> &twists);

Outcome run_normal_form(const std::string &file, int length);

Outcome run_certify(const std::string &file, int bound);

}  // namespace milnor::cli

#endif
