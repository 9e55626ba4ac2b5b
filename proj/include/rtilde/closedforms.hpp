#ifndef RTILDE_CLOSEDFORMS_HPP
#define RTILDE_CLOSEDFORMS_HPP

#include "rtilde/coxeter.hpp"
#include "rtilde/hecke.hpp"
#include "rtilde/poly.hpp"

#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace rtilde {

/// A word ascending to a unique peak letter, then descending. Degenerate
/// empty words (no peak) are accepted.
struct UDWord {
    Word ascending;
    std::optional<int> peak;
    Word descending;

    Word flatten() const;
};

/// Parses a word into UD shape, or reports that it is not one.
std::optional<UDWord> is_ud_word(const Word& w);

enum class UDCase { A1, A2, B1, C1, C2, C3, D1, D2 };
std::string to_string(UDCase c);

/// Per-letter case assignment of the UD analysis; c is the summed t-exponent
/// and d2_count the number of (t^2+1) factors.
struct CaseTable {
    std::map<int, UDCase> cases;  // letter (0-based) -> case
    std::size_t c = 0;
    std::size_t d2_count = 0;
};

/// Letter-by-letter closed form t^c (t^2+1)^d2 for UD words; the zero
/// polynomial with an empty table when u admits no UD subword of the word.
std::pair<IntPolynomial, CaseTable> ud_rtilde(const CoxeterSystem& sys, const Element& u,
                                              const Word& ud_word);

/// F_n for u = e, F_{n-1} for u = s, zero otherwise.
IntPolynomial power_word_rtilde(const CoxeterSystem& sys, const Element& u, std::size_t n, int s);

/// Fibonacci tree: left-brother leaves get one (central) child, other
/// leaves get a left and a right child.
struct FibTree {
    struct Node {
        int parent;     // -1 for root
        char step;      // 'L', 'R', 'C'; unused at root
        std::size_t depth;
        std::vector<int> children;
    };
    std::size_t generations = 0;
    std::vector<Node> nodes;
};

/// Root-to-leaf step string over {L, R, C}.
using FibPath = std::string;

FibTree build_fib_tree(std::size_t n);
std::vector<FibPath> fib_paths(std::size_t n);
/// Paths whose last step is not a left step.
std::vector<FibPath> restricted_fib_paths(std::size_t n);

std::size_t right_steps(const FibPath& p);
std::size_t left_steps(const FibPath& p);

/// The reduced word s_2 s_1 s_3 s_2 ... s_{n-1} s_{n-2} of 34...n12.
Word pagliacci_word(std::size_t n);
/// t^{n-2} F_{n-2}, n >= 3.
IntPolynomial pagliacci_rtilde(std::size_t n);

/// Words over {C, L, R} of length n-3: first letter R or L, every non-final
/// L followed by C, every C immediately preceded by L.
using CLRWord = std::string;
std::vector<CLRWord> clr_words(std::size_t n);
/// L -> left, C -> central, R -> right.
FibPath clr_to_path(const CLRWord& w);
std::size_t clr_degree(const CLRWord& w, std::size_t n);

/// Lattice points (i, j) with j <= 0, |i| <= |j|, i = j mod 2. The point
/// (i, j) carries the letter with 0-based index -j.
struct PointConfiguration {
    std::set<std::pair<int, int>> points;
    bool operator==(const PointConfiguration& o) const = default;
};

bool in_point_cone(int i, int j);

/// Throws std::domain_error for points outside the cone.
bool config_is_admissible(const PointConfiguration& c);

/// Reads points by ascending i, then descending j; requires admissibility.
Word config_to_word(const PointConfiguration& c);

/// One `i j` pair per line, `#` comments.
PointConfiguration parse_config(std::istream& in);

/// An admissible configuration whose word equals v; v must be 321-avoiding
/// and 2-repeating.
PointConfiguration heap_of(const CoxeterSystem& sys, const Element& v);

/// Letters occurring once, and the maximal runs of letters occurring twice.
struct ChainDecomposition {
    std::vector<int> singles;                      // 0-based letters, ascending
    std::vector<std::pair<int, int>> chains;       // inclusive [a, b], ascending
    std::size_t single_count() const { return singles.size(); }
    std::size_t chain_count() const { return chains.size(); }
    std::vector<std::size_t> chain_sizes() const;
};

ChainDecomposition chain_stats(const CoxeterSystem& sys, const Element& v);

/// t^{n_v^1} * prod_i F-tilde_{lambda_i}.
IntPolynomial general_rtilde_e(const CoxeterSystem& sys, const Element& v);

/// Attempted factorization of one R-tilde polynomial as t^a * prod F-tilde_{c_i}.
struct ScanEntry {
    Element u;
    Element v;
    IntPolynomial poly;
    bool factored = false;
    std::size_t a = 0;
    std::vector<std::size_t> cs;
};

struct ScanReport {
    Element w;
    std::vector<ScanEntry> entries;
};

/// Greedy factorization scan over all u <= v <= w. A failure to factor is
/// reported as a candidate, not as a disproof.
ScanReport conjecture_scan(const CoxeterSystem& sys, const Element& w, RtildeCache& cache);

std::string scan_entry_line(const ScanEntry& e);

/// Exact division by a monic divisor; nullopt when the remainder is nonzero.
std::optional<IntPolynomial> divide_exact(const IntPolynomial& p, const IntPolynomial& monic);

}  // namespace rtilde

#endif
