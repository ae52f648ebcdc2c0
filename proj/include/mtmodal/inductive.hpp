#pragma once

#include <optional>

#include "mtmodal/syntax.hpp"

namespace mtm {

// node capabilities per Skeleton/PIA table, under the node's sign
enum NodeCaps : unsigned {
    kCapNone = 0,
    kCapDeltaAdjoint = 1,  // skeleton
    kCapSLR = 2,           // skeleton
    kCapSRA = 4,           // PIA
    kCapSRR = 8,           // PIA
    kCapLeaf = 16,
};

struct SignedTree {
    MF node;
    int sign;  // +1 / -1
    unsigned caps;
    std::vector<SignedTree> children;
};

SignedTree signed_tree(const MF& t, int sign);
unsigned node_caps(MK k, int sign);
std::string caps_name(unsigned caps);

// a branch is the list of signed connective nodes from a leaf upward (leaf excluded)
struct Branch {
    std::vector<const SignedTree*> nodes;  // leaf side first
    const SignedTree* leaf = nullptr;
};
std::vector<Branch> branches(const SignedTree& t);

// good = PIA segment (possibly empty) below a Skeleton segment (possibly empty)
bool is_good_branch(const Branch& b);

// strict order on proposition indices: order[i][j] means p_i <_Omega p_j
using PropOrder = std::vector<std::vector<bool>>;

struct ClassifierInput {
    MF lhs, rhs;  // lhs <= rhs
    std::optional<std::vector<int>> epsilon;  // 1 or -1 (for the dual order) per prop
    std::optional<PropOrder> omega;
};

struct ClassifyResult {
    enum class Verdict { AnalyticInductive, NotAnalytic } verdict;
    std::vector<std::string> props;
    std::vector<int> epsilon;  // witness, 1 / -1
    PropOrder omega;           // witness
};

constexpr int kMaxClassifierProps = 4;

ClassifyResult classify(const ClassifierInput& in);

}  // namespace mtm
