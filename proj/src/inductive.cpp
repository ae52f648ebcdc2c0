#include "mtmodal/inductive.hpp"

#include <algorithm>
#include <functional>

namespace mtm {

// Skeleton: Delta-adjoints  +{or, cup}  -{and, cap}
//           SLR             +{and, cap, <nu>, <nni>, ~, sim}
//                           -{or, cup, [ni], [nuc], |>, [nni>, ~, sim}
// PIA:      SRA             +{and, cap, [ni], [nuc], |>, [nni>, ~, sim}
//                           -{or, cup, <nu>, <nni>, ~, sim}
//           SRR             +{or, cup}  -{and, cap}
unsigned node_caps(MK k, int sign) {
    bool pos = sign > 0;
    switch (k) {
        case MK::Prop: case MK::Top: case MK::Bot: case MK::One: case MK::Zero:
        case MK::SNom: case MK::SCoNom: case MK::NNom: case MK::NCoNom:
        case MK::MetaFS: case MK::MetaFN: case MK::MetaProp:
            return kCapLeaf;
        case MK::And: case MK::Cap:
            return pos ? (kCapSLR | kCapSRA) : (kCapDeltaAdjoint | kCapSRR);
        case MK::Or: case MK::Cup:
            return pos ? (kCapDeltaAdjoint | kCapSRR) : (kCapSLR | kCapSRA);
        case MK::Neg: case MK::SimNeg:
            return kCapSLR | kCapSRA;
        case MK::DiamNu: case MK::DiamNotNi:
            return pos ? kCapSLR : kCapSRA;
        case MK::BoxNi: case MK::BoxNuc: case MK::Triangle: case MK::BoxArrNotNi:
            return pos ? kCapSRA : kCapSLR;
        default:
            // adjoint connectives do not occur in classifier inputs
            return kCapNone;
    }
}

std::string caps_name(unsigned caps) {
    if (caps & kCapLeaf) return "Leaf";
    std::string s;
    auto add = [&](const char* n) {
        if (!s.empty()) s += "|";
        s += n;
    };
    if (caps & kCapDeltaAdjoint) add("DeltaAdjoint");
    if (caps & kCapSLR) add("SLR");
    if (caps & kCapSRA) add("SRA");
    if (caps & kCapSRR) add("SRR");
    if (s.empty()) s = "None";
    return s;
}

SignedTree signed_tree(const MF& t, int sign) {
    SignedTree out{t, sign, node_caps(t->k, sign), {}};
    int ar = arity(t->k);
    for (int i = 0; i < ar; ++i) {
        const MF& c = i == 0 ? t->a : t->b;
        int csign = coord_positive(t->k, i) ? sign : -sign;
        out.children.push_back(signed_tree(c, csign));
    }
    return out;
}

std::vector<Branch> branches(const SignedTree& t) {
    std::vector<Branch> out;
    std::vector<const SignedTree*> path;
    std::function<void(const SignedTree&)> walk = [&](const SignedTree& n) {
        if (n.children.empty()) {
            Branch b;
            b.leaf = &n;
            b.nodes.assign(path.rbegin(), path.rend());  // leaf side first
            out.push_back(std::move(b));
            return;
        }
        path.push_back(&n);
        for (const auto& c : n.children) walk(c);
        path.pop_back();
    };
    walk(t);
    return out;
}

static bool pia_capable(unsigned c) { return c & (kCapSRA | kCapSRR); }
static bool skeleton_capable(unsigned c) { return c & (kCapDeltaAdjoint | kCapSLR); }

bool is_good_branch(const Branch& b) {
    // try every split point: nodes before it must be PIA, after it Skeleton
    int n = (int)b.nodes.size();
    for (int split = 0; split <= n; ++split) {
        bool ok = true;
        for (int i = 0; i < split && ok; ++i)
            if (!pia_capable(b.nodes[i]->caps)) ok = false;
        for (int i = split; i < n && ok; ++i)
            if (!skeleton_capable(b.nodes[i]->caps)) ok = false;
        if (ok) return true;
    }
    return false;
}

// a node counts as "in the skeleton segment" if the branch admits a good split
// with the node on the skeleton side
static bool branch_node_in_skeleton(const Branch& b, const SignedTree* n) {
    int idx = -1;
    for (int i = 0; i < (int)b.nodes.size(); ++i)
        if (b.nodes[i] == n) idx = i;
    for (int split = 0; split <= idx; ++split) {
        bool ok = true;
        for (int i = 0; i < split && ok; ++i)
            if (!pia_capable(b.nodes[i]->caps)) ok = false;
        for (int i = split; i < (int)b.nodes.size() && ok; ++i)
            if (!skeleton_capable(b.nodes[i]->caps)) ok = false;
        if (ok) return true;
    }
    return false;
}

namespace {

// every leaf of the signed subtree is epsilon^d-critical
bool agrees_with_eps_dual(const SignedTree& t, const std::vector<std::string>& props,
                          const std::vector<int>& eps) {
    if (t.children.empty()) {
        if (t.node->k != MK::Prop) return true;  // constants do not block agreement
        auto it = std::find(props.begin(), props.end(), t.node->name);
        int i = (int)(it - props.begin());
        // epsilon^d-critical: +p with eps = d, or -p with eps = 1
        return (t.sign > 0) == (eps[i] < 0);
    }
    for (const auto& c : t.children)
        if (!agrees_with_eps_dual(c, props, eps)) return false;
    return true;
}

bool props_below(const SignedTree& t, const std::vector<std::string>& props,
                 std::vector<bool>& seen) {
    if (t.children.empty()) {
        if (t.node->k == MK::Prop) {
            auto it = std::find(props.begin(), props.end(), t.node->name);
            seen[it - props.begin()] = true;
        }
        return true;
    }
    for (const auto& c : t.children) props_below(c, props, seen);
    return true;
}

// check one signed generation tree against (omega, eps)
bool tree_ok(const SignedTree& root, const std::vector<std::string>& props,
             const std::vector<int>& eps, const PropOrder& omega) {
    for (const Branch& b : branches(root)) {
        if (!is_good_branch(b)) return false;
        // side conditions apply to SRR nodes on epsilon-critical branches
        if (b.leaf->node->k != MK::Prop) continue;
        auto it = std::find(props.begin(), props.end(), b.leaf->node->name);
        int pi = (int)(it - props.begin());
        bool critical = (b.leaf->sign > 0) == (eps[pi] > 0);
        if (!critical) continue;
        const SignedTree* prev = b.leaf;
        for (const SignedTree* n : b.nodes) {
            // a node in the PIA segment of a critical branch that is SRR-typed
            // (binary with both-PIA reading forced only when not skeleton-capable
            //  above the split; conservatively: any SRR-capable node that is not
            //  skeleton-capable, or is below a PIA node, triggers the condition)
            if ((n->caps & kCapSRR) && !branch_node_in_skeleton(b, n)) {
                // the other child
                const SignedTree* other = nullptr;
                for (const auto& c : n->children)
                    if (&c != prev) other = &c;
                if (other) {
                    if (!agrees_with_eps_dual(*other, props, eps)) return false;
                    std::vector<bool> seen(props.size(), false);
                    props_below(*other, props, seen);
                    for (std::size_t k = 0; k < props.size(); ++k)
                        if (seen[k] && !omega[k][pi]) return false;
                }
            }
            prev = n;
        }
    }
    return true;
}

}  // namespace

ClassifyResult classify(const ClassifierInput& in) {
    std::vector<std::string> props;
    collect_props(in.lhs, props);
    collect_props(in.rhs, props);
    std::sort(props.begin(), props.end());
    if ((int)props.size() > kMaxClassifierProps)
        throw ResourceLimit("classify: too many proposition variables");

    SignedTree left = signed_tree(in.lhs, +1);
    SignedTree right = signed_tree(in.rhs, -1);

    int n = (int)props.size();
    std::vector<std::vector<int>> eps_cands;
    if (in.epsilon) {
        eps_cands.push_back(*in.epsilon);
    } else {
        for (int code = 0; code < (1 << n); ++code) {
            std::vector<int> e(n);
            for (int i = 0; i < n; ++i) e[i] = (code >> i) & 1 ? -1 : 1;
            eps_cands.push_back(e);
        }
        if (n == 0) eps_cands.push_back({});
    }

    std::vector<PropOrder> omega_cands;
    if (in.omega) {
        omega_cands.push_back(*in.omega);
    } else {
        // all strict (irreflexive, transitive) orders over n <= 4 props
        int pairs = n * n;
        for (int code = 0; code < (1 << pairs); ++code) {
            PropOrder om(n, std::vector<bool>(n, false));
            bool ok = true;
            for (int i = 0; i < n && ok; ++i)
                for (int j = 0; j < n && ok; ++j) {
                    om[i][j] = (code >> (i * n + j)) & 1;
                    if (i == j && om[i][j]) ok = false;
                }
            if (!ok) continue;
            for (int i = 0; i < n && ok; ++i)
                for (int j = 0; j < n && ok; ++j)
                    for (int k = 0; k < n && ok; ++k)
                        if (om[i][j] && om[j][k] && !om[i][k]) ok = false;
            if (ok) omega_cands.push_back(om);
        }
        if (n == 0) omega_cands.push_back({});
    }

    for (const auto& eps : eps_cands)
        for (const auto& om : omega_cands)
            if (tree_ok(left, props, eps, om) && tree_ok(right, props, eps, om))
                return {ClassifyResult::Verdict::AnalyticInductive, props, eps, om};

    return {ClassifyResult::Verdict::NotAnalytic, props, {}, {}};
}

}  // namespace mtm
