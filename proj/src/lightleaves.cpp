#include "rtilde/lightleaves.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace rtilde {

std::string LightLeaf::steps_string() const {
    std::string s;
    s.reserve(steps.size());
    for (const auto& step : steps) {
        switch (step.kind) {
            case StepKind::Dot: s += 'D'; break;
            case StepKind::Through: s += 'T'; break;
            case StepKind::Merge: s += 'M'; break;
        }
    }
    return s;
}

std::size_t high_valent_count(const LightLeaf& leaf) { return leaf.high_valent_count; }

std::size_t LeafTree::leaf_count() const {
    std::size_t n = 0;
    for (const auto& node : nodes)
        if (node.depth == word.size()) ++n;
    return n;
}

namespace {

struct WalkState {
    std::vector<LeafStep> steps;
    Word state_word;
    std::size_t degree = 0;
    std::size_t high_valent = 0;
};

// Depth-first walk over the decision tree. Ascent letters branch into
// Dot/Through; descent letters force a Merge whose plan comes from the
// policy.
template <typename Visit>
void walk(const CoxeterSystem& sys, const Word& word, const MergePolicy& policy,
          std::size_t depth, WalkState& st, Visit&& visit) {
    visit(depth, st);
    if (depth == word.size()) return;
    int s = word[depth];
    Element state = sys.canonicalize(st.state_word);
    if (!sys.is_descent(state, s)) {
        st.steps.push_back({StepKind::Dot, {}});
        ++st.degree;
        walk(sys, word, policy, depth + 1, st, visit);
        --st.degree;
        st.steps.pop_back();

        st.steps.push_back({StepKind::Through, {}});
        st.state_word.push_back(s);
        walk(sys, word, policy, depth + 1, st, visit);
        st.state_word.pop_back();
        st.steps.pop_back();
    } else {
        std::vector<BraidMove> plan = policy(sys, st.state_word, s);
        Word rearranged = st.state_word;
        std::size_t high = 0;
        for (const auto& move : plan) {
            rearranged = sys.apply_braid_move(rearranged, move);
            if (move.order >= 3) ++high;
        }
        if (rearranged.empty() || rearranged.back() != s)
            throw std::logic_error("merge plan does not expose the target letter");
        Word saved = std::move(st.state_word);
        st.state_word = rearranged;
        st.state_word.pop_back();
        st.steps.push_back({StepKind::Merge, std::move(plan)});
        st.high_valent += high;
        walk(sys, word, policy, depth + 1, st, visit);
        st.high_valent -= high;
        st.steps.pop_back();
        st.state_word = std::move(saved);
    }
}

std::vector<BraidMove> default_policy(const CoxeterSystem& sys, const Word& state, int s) {
    return sys.braid_plan(state, s);
}

}  // namespace

LeafTree build_tree(const CoxeterSystem& sys, const Word& word) {
    LeafTree tree;
    tree.word = word;
    WalkState st;
    walk(sys, word, default_policy, 0, st, [&](std::size_t depth, const WalkState& s) {
        tree.nodes.push_back(
            {depth, s.steps, s.state_word, sys.canonicalize(s.state_word), s.degree});
    });
    return tree;
}

std::vector<LightLeaf> all_leaves_with_policy(const CoxeterSystem& sys, const Word& word,
                                              const MergePolicy& policy) {
    std::vector<LightLeaf> out;
    WalkState st;
    walk(sys, word, policy, 0, st, [&](std::size_t depth, const WalkState& s) {
        if (depth != word.size()) return;
        LightLeaf leaf;
        leaf.word = word;
        leaf.steps = s.steps;
        leaf.top_word = s.state_word;
        leaf.top = sys.canonicalize(s.state_word);
        leaf.degree = s.degree;
        leaf.high_valent_count = s.high_valent;
        out.push_back(std::move(leaf));
    });
    std::sort(out.begin(), out.end(), [](const LightLeaf& a, const LightLeaf& b) {
        return a.steps_string() < b.steps_string();
    });
    return out;
}

std::vector<LightLeaf> all_leaves(const CoxeterSystem& sys, const Word& word) {
    return all_leaves_with_policy(sys, word, default_policy);
}

std::vector<LightLeaf> leaves(const CoxeterSystem& sys, const Word& word, const Element& u) {
    std::vector<LightLeaf> out = all_leaves(sys, word);
    std::erase_if(out, [&](const LightLeaf& l) { return !(l.top == u); });
    return out;
}

IntPolynomial diagrammatic_rtilde(const CoxeterSystem& sys, const Element& u, const Word& word) {
    if (word.empty())
        return u.is_identity() ? IntPolynomial::one() : IntPolynomial::zero();
    IntPolynomial acc;
    for (const auto& leaf : leaves(sys, word, u))
        acc = acc + IntPolynomial::t_power(leaf.degree);
    return acc;
}

IntPolynomial word_rtilde_recursive(const CoxeterSystem& sys, const Element& u, const Word& word) {
    if (word.empty())
        return u.is_identity() ? IntPolynomial::one() : IntPolynomial::zero();
    Word prefix(word.begin(), word.end() - 1);
    int s = word.back();
    Element us = sys.multiply(u, s);
    if (us.length() < u.length()) return word_rtilde_recursive(sys, us, prefix);
    return word_rtilde_recursive(sys, us, prefix) +
           word_rtilde_recursive(sys, u, prefix).scaled_by_t_power(1);
}

std::string serialize_leaf(const LightLeaf& leaf) {
    std::ostringstream os;
    os << "steps=" << leaf.steps_string() << " top=" << word_to_string(leaf.top_word)
       << " deg=" << leaf.degree;
    return os.str();
}

}  // namespace rtilde
