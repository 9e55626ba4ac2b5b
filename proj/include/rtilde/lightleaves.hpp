#ifndef RTILDE_LIGHTLEAVES_HPP
#define RTILDE_LIGHTLEAVES_HPP

#include "rtilde/coxeter.hpp"
#include "rtilde/hecke.hpp"
#include "rtilde/poly.hpp"

#include <string>
#include <vector>

namespace rtilde {

enum class StepKind { Dot, Through, Merge };

/// One decision per letter of the bottom word. A Merge carries the braid
/// plan that was applied to bring the merged letter to the rightmost
/// position of the state word.
struct LeafStep {
    StepKind kind;
    std::vector<BraidMove> plan;  // Merge only
};

/// A root-to-leaf decision path: Dot keeps the state and raises the degree,
/// Through appends an ascent letter, Merge removes a descent letter.
struct LightLeaf {
    Word word;                        // bottom sequence
    std::vector<LeafStep> steps;      // one per letter
    Word top_word;                    // reduced expression reached by the replay
    Element top;                      // its canonical element
    std::size_t degree = 0;           // number of dots
    std::size_t high_valent_count = 0;  // braid moves with m_st >= 3 across all plans

    std::string steps_string() const;  // e.g. "DTM"
};

std::size_t high_valent_count(const LightLeaf& leaf);

/// The decision tree over all prefixes of a word, materialized as a node
/// list in depth-first order.
struct LeafTree {
    struct Node {
        std::size_t depth;
        std::vector<LeafStep> steps;
        Word state_word;
        Element state;
        std::size_t degree;
    };
    Word word;
    std::vector<Node> nodes;

    std::size_t leaf_count() const;
};

LeafTree build_tree(const CoxeterSystem& sys, const Word& word);

/// All light leaves of the word, in a stable order (lexicographic on the
/// step strings).
std::vector<LightLeaf> all_leaves(const CoxeterSystem& sys, const Word& word);

/// The leaves whose top element is u.
std::vector<LightLeaf> leaves(const CoxeterSystem& sys, const Word& word, const Element& u);

/// Sum of t^degree over leaves with top u; 1 for (e, empty word).
IntPolynomial diagrammatic_rtilde(const CoxeterSystem& sys, const Element& u, const Word& word);

/// The rightmost-letter recursion on words, independent of the tree walk.
IntPolynomial word_rtilde_recursive(const CoxeterSystem& sys, const Element& u, const Word& word);

/// `steps=DTM top=1 2 deg=1` — one line per leaf.
std::string serialize_leaf(const LightLeaf& leaf);

/// Braid-plan policy for Merge steps, so invariance under the plan choice
/// can be tested. Maps (state word, target letter) to a valid plan.
using MergePolicy =
    std::function<std::vector<BraidMove>(const CoxeterSystem&, const Word&, int)>;

std::vector<LightLeaf> all_leaves_with_policy(const CoxeterSystem& sys, const Word& word,
                                              const MergePolicy& policy);

}  // namespace rtilde

#endif
