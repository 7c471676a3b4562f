#pragma once

#include <string>
#include <vector>

namespace lmov::braid {

// Word in the braid group B_m: letter +i / -i stands for sigma_i^{+-1},
// 1 <= i < m.
struct BraidWord {
    int strands = 1;
    std::vector<int> letters;

    BraidWord() = default;
    BraidWord(int m, std::vector<int> ls);

    // "s1 s2 -s1" or "1 2 -1"; empty string is the identity word.
    static BraidWord parse(int strands, const std::string& word);
    std::string str() const;

    int exponent_sum() const;
    BraidWord free_reduced() const;  // cancels adjacent sigma_i sigma_i^{-1}
};

// Closure data: components are cycles of the underlying permutation,
// numbered by their smallest strand id (0-based).
struct ClosureInfo {
    int components = 0;
    std::vector<int> component_of;           // strand id -> component
    std::vector<int> strand_count;           // per component
    std::vector<int> writhe;                 // signed self-crossings
    std::vector<std::vector<int>> linking;   // lk(a,b), symmetric, 0 on diagonal
};

ClosureInfo analyze_closure(const BraidWord& b);

// Replaces strand i by widths[i] parallel strands (width 0 deletes it); each
// crossing expands to the block transposition word. Widths must be constant
// on closure components for the result to close up to the cabled link.
BraidWord cable(const BraidWord& b, const std::vector<int>& widths);

// 1-based start position of each strand's block at the bottom of the cable.
std::vector<int> cable_offsets(const BraidWord& b, const std::vector<int>& widths);

// Full twist on the n strands starting at 1-based position `offset`.
std::vector<int> full_twist_word(int offset, int n);

struct Link {
    std::string name;
    BraidWord braid;
};

// Accepts "unknot", "unlink2", "hopf", "trefoil", "torus(a,b)" / "t(a,b)",
// or "braid:<strands>:<word>".
Link lookup_link(const std::string& spec);

}  // namespace lmov::braid
