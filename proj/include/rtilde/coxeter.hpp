#ifndef RTILDE_COXETER_HPP
#define RTILDE_COXETER_HPP

#include <compare>
#include <cstddef>
#include <memory>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace rtilde {

/// Generators are 0-based indices internally; the CLI and file formats
/// speak 1-based.
using Word = std::vector<int>;

/// Coxeter matrix: m[s][s] = 1, m[s][t] = m[t][s] >= 2 for s != t.
/// The entry 0 encodes an infinite order.
class CoxeterMatrix {
public:
    static constexpr int kInfinite = 0;

    CoxeterMatrix(int rank, std::vector<int> entries);

    /// Type A_n, i.e. the symmetric group S_{n+1} (rank n).
    static CoxeterMatrix type_a(int n);
    /// Dihedral group I2(m); m = 0 for the infinite dihedral group.
    static CoxeterMatrix dihedral(int m);

    /// Parses `A<n>`, `I2(<m>)`, `Sym<n>`, or a matrix file path.
    static CoxeterMatrix from_spec(const std::string& spec);
    /// Plain-text format: line `rank N`, then N rows of N entries, 0 = infinity.
    static CoxeterMatrix from_stream(std::istream& in);

    int rank() const { return rank_; }
    int order(int s, int t) const;
    bool operator==(const CoxeterMatrix& o) const = default;

private:
    int rank_;
    std::vector<int> entries_;
};

/// A group element in canonical form: the lexicographically least reduced
/// word. Elements of a symmetric-group system also carry one-line notation.
struct Element {
    Word canonical;
    std::optional<std::vector<int>> one_line;

    std::size_t length() const { return canonical.size(); }
    bool is_identity() const { return canonical.empty(); }

    bool operator==(const Element& o) const { return canonical == o.canonical; }
    auto operator<=>(const Element& o) const { return canonical <=> o.canonical; }
};

/// One application of a braid relation: the window [position, position+order)
/// reads s t s t ... and is rewritten as t s t s ...
struct BraidMove {
    std::size_t position;
    int s;
    int t;
    int order;
    bool operator==(const BraidMove& o) const = default;
};

/// A Coxeter system with a canonicalization backend. The generic backend
/// solves the word problem by braid-orbit search with nil-move deletion;
/// the symmetric backend goes through one-line permutations.
class CoxeterSystem {
public:
    enum class Backend { generic, symmetric };

    explicit CoxeterSystem(CoxeterMatrix matrix);
    /// Symmetric group S_n with the permutation backend (rank n-1).
    static CoxeterSystem symmetric_group(int n);
    static CoxeterSystem from_spec(const std::string& spec);

    const CoxeterMatrix& matrix() const { return matrix_; }
    int rank() const { return matrix_.rank(); }
    Backend backend() const { return backend_; }

    Element identity() const;
    Element generator(int s) const;
    Element canonicalize(const Word& w) const;
    Element multiply(const Element& u, int s) const;
    Element multiply(const Element& u, const Element& v) const;
    Element inverse(const Element& u) const;

    static std::size_t length(const Element& u) { return u.length(); }
    /// True iff l(us) < l(u).
    bool is_descent(const Element& u, int s) const;
    bool is_left_descent(const Element& u, int s) const;

    bool bruhat_leq(const Element& u, const Element& v) const;

    /// All reduced words for u, by braid-move closure of the canonical form.
    std::vector<Word> reduced_expressions(const Element& u) const;

    /// Shortest braid-move sequence turning the reduced word w into a
    /// reduced word ending in s; ties prefer smaller m_st, then leftmost
    /// position. Precondition: s is a descent of the element of w.
    std::vector<BraidMove> braid_plan(const Word& reduced, int s) const;
    Word apply_braid_move(const Word& w, const BraidMove& move) const;

    /// Symmetric backend only.
    Element element_from_permutation(const std::vector<int>& one_line) const;
    std::vector<int> permutation_of(const Element& u) const;
    bool is_321_avoiding(const Element& u) const;
    /// Occurrence count of each generator in any reduced word; requires a
    /// 321-avoiding element, where the counts are well defined.
    std::vector<std::size_t> letter_multiplicities(const Element& u) const;
    bool is_2_repeating(const Element& u) const;

    /// Breadth-first enumeration by length; length_cap bounds the search
    /// for infinite groups.
    std::vector<Element> all_elements(std::size_t length_cap = SIZE_MAX) const;

private:
    Word canonical_word(const Word& w) const;
    Word canonical_word_generic(const Word& w) const;
    Word lex_min_word_of_permutation(std::vector<int> p) const;
    std::vector<int> permutation_of_word(const Word& w) const;
    std::set<Word> braid_closure(const Word& w) const;
    void braid_neighbors(const Word& w, std::vector<std::pair<BraidMove, Word>>& out) const;

    CoxeterMatrix matrix_;
    Backend backend_;

    // Behind a pointer so the system stays movable despite the mutex.
    struct Caches {
        std::mutex mutex;
        std::map<Word, Word> canon;
        std::map<std::pair<Word, int>, std::vector<BraidMove>> plans;
    };
    std::unique_ptr<Caches> caches_ = std::make_unique<Caches>();
};

std::string word_to_string(const Word& w);
Word word_from_string(const std::string& text, int rank);

bool is_321_avoiding_pattern(const std::vector<int>& one_line);

}  // namespace rtilde

#endif
