#include "rtilde/coxeter.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace rtilde {

CoxeterMatrix::CoxeterMatrix(int rank, std::vector<int> entries)
    : rank_(rank), entries_(std::move(entries)) {
    if (rank < 1) throw std::invalid_argument("rank must be positive");
    if (entries_.size() != static_cast<std::size_t>(rank) * rank)
        throw std::invalid_argument("entry count does not match rank");
    for (int s = 0; s < rank; ++s) {
        if (order(s, s) != 1) throw std::invalid_argument("diagonal entries must be 1");
        for (int t = s + 1; t < rank; ++t) {
            if (order(s, t) != order(t, s)) throw std::invalid_argument("matrix must be symmetric");
            if (order(s, t) != kInfinite && order(s, t) < 2)
                throw std::invalid_argument("off-diagonal entries must be >= 2 or 0 (infinity)");
        }
    }
}

int CoxeterMatrix::order(int s, int t) const {
    if (s < 0 || t < 0 || s >= rank_ || t >= rank_)
        throw std::out_of_range("generator index out of range");
    return entries_[static_cast<std::size_t>(s) * rank_ + t];
}

CoxeterMatrix CoxeterMatrix::type_a(int n) {
    std::vector<int> e(static_cast<std::size_t>(n) * n, 2);
    for (int s = 0; s < n; ++s) {
        e[static_cast<std::size_t>(s) * n + s] = 1;
        if (s + 1 < n) {
            e[static_cast<std::size_t>(s) * n + s + 1] = 3;
            e[static_cast<std::size_t>(s + 1) * n + s] = 3;
        }
    }
    return CoxeterMatrix(n, std::move(e));
}

CoxeterMatrix CoxeterMatrix::dihedral(int m) {
    if (m != kInfinite && m < 2) throw std::invalid_argument("dihedral order must be >= 2 or 0");
    return CoxeterMatrix(2, {1, m, m, 1});
}

CoxeterMatrix CoxeterMatrix::from_stream(std::istream& in) {
    std::string keyword;
    int rank = 0;
    if (!(in >> keyword >> rank) || keyword != "rank")
        throw std::invalid_argument("matrix file must start with 'rank N'");
    std::vector<int> entries(static_cast<std::size_t>(rank) * rank);
    for (auto& e : entries)
        if (!(in >> e)) throw std::invalid_argument("matrix file truncated");
    return CoxeterMatrix(rank, std::move(entries));
}

CoxeterMatrix CoxeterMatrix::from_spec(const std::string& spec) {
    if (spec.size() > 1 && spec[0] == 'A' && std::isdigit(static_cast<unsigned char>(spec[1])))
        return type_a(std::stoi(spec.substr(1)));
    if (spec.rfind("Sym", 0) == 0) return type_a(std::stoi(spec.substr(3)) - 1);
    if (spec.rfind("I2(", 0) == 0 && spec.back() == ')')
        return dihedral(std::stoi(spec.substr(3, spec.size() - 4)));
    std::ifstream f(spec);
    if (!f) throw std::invalid_argument("unknown group spec and unreadable file: " + spec);
    return from_stream(f);
}

CoxeterSystem::CoxeterSystem(CoxeterMatrix matrix)
    : matrix_(std::move(matrix)), backend_(Backend::generic) {}

CoxeterSystem CoxeterSystem::symmetric_group(int n) {
    if (n < 2) throw std::invalid_argument("symmetric group needs n >= 2");
    CoxeterSystem sys(CoxeterMatrix::type_a(n - 1));
    sys.backend_ = Backend::symmetric;
    return sys;
}

CoxeterSystem CoxeterSystem::from_spec(const std::string& spec) {
    if (spec.size() > 1 && spec[0] == 'A' && std::isdigit(static_cast<unsigned char>(spec[1])))
        return symmetric_group(std::stoi(spec.substr(1)) + 1);
    if (spec.rfind("Sym", 0) == 0) return symmetric_group(std::stoi(spec.substr(3)));
    return CoxeterSystem(CoxeterMatrix::from_spec(spec));
}

Element CoxeterSystem::identity() const { return canonicalize({}); }

Element CoxeterSystem::generator(int s) const { return canonicalize({s}); }

Element CoxeterSystem::canonicalize(const Word& w) const {
    for (int letter : w)
        if (letter < 0 || letter >= rank()) throw std::out_of_range("letter index out of range");
    Element e;
    if (backend_ == Backend::symmetric) {
        e.one_line = permutation_of_word(w);
        e.canonical = lex_min_word_of_permutation(*e.one_line);
    } else {
        e.canonical = canonical_word(w);
    }
    return e;
}

std::vector<int> CoxeterSystem::permutation_of_word(const Word& w) const {
    // Right multiplication by s_i swaps positions i, i+1; folding the word
    // left to right composes the letters with the left-action convention.
    int n = rank() + 1;
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 1);
    for (int letter : w) std::swap(p[letter], p[letter + 1]);
    return p;
}

Word CoxeterSystem::lex_min_word_of_permutation(std::vector<int> p) const {
    int n = static_cast<int>(p.size());
    std::vector<int> pos(n + 1);
    for (int i = 0; i < n; ++i) pos[p[i]] = i;
    Word out;
    for (;;) {
        int s = -1;
        for (int i = 0; i + 1 < n; ++i) {
            if (pos[i + 2] < pos[i + 1]) {  // left descent: value i+2 precedes i+1
                s = i;
                break;
            }
        }
        if (s < 0) break;
        out.push_back(s);
        std::swap(p[pos[s + 1]], p[pos[s + 2]]);
        std::swap(pos[s + 1], pos[s + 2]);
    }
    return out;
}

void CoxeterSystem::braid_neighbors(const Word& w,
                                    std::vector<std::pair<BraidMove, Word>>& out) const {
    out.clear();
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        int s = w[i], t = w[i + 1];
        if (s == t) continue;
        int m = matrix_.order(s, t);
        if (m == CoxeterMatrix::kInfinite || i + m > w.size()) continue;
        bool alternates = true;
        for (int k = 0; k < m; ++k)
            if (w[i + k] != (k % 2 == 0 ? s : t)) {
                alternates = false;
                break;
            }
        if (!alternates) continue;
        BraidMove move{i, s, t, m};
        out.emplace_back(move, apply_braid_move(w, move));
    }
    std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return std::pair(a.first.order, a.first.position) <
               std::pair(b.first.order, b.first.position);
    });
}

Word CoxeterSystem::apply_braid_move(const Word& w, const BraidMove& move) const {
    Word out = w;
    for (int k = 0; k < move.order; ++k)
        out[move.position + k] = (k % 2 == 0 ? move.t : move.s);
    return out;
}

std::set<Word> CoxeterSystem::braid_closure(const Word& w) const {
    std::set<Word> seen{w};
    std::deque<Word> queue{w};
    std::vector<std::pair<BraidMove, Word>> nbrs;
    while (!queue.empty()) {
        Word cur = std::move(queue.front());
        queue.pop_front();
        braid_neighbors(cur, nbrs);
        for (auto& [move, next] : nbrs)
            if (seen.insert(next).second) queue.push_back(next);
    }
    return seen;
}

namespace {

// Position of an adjacent equal pair, or npos.
std::size_t nil_position(const Word& w) {
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] == w[i + 1]) return i;
    return static_cast<std::size_t>(-1);
}

}  // namespace

Word CoxeterSystem::canonical_word_generic(const Word& w) const {
    // Tits: search the braid orbit for a nil move (adjacent equal pair),
    // delete it, and repeat; when none exists the word is reduced and the
    // canonical form is the lexicographic minimum of the orbit.
    Word cur = w;
    for (;;) {
        if (std::size_t p = nil_position(cur); p != static_cast<std::size_t>(-1)) {
            cur.erase(cur.begin() + p, cur.begin() + p + 2);
            continue;
        }
        std::set<Word> seen{cur};
        std::deque<Word> queue{cur};
        std::vector<std::pair<BraidMove, Word>> nbrs;
        std::optional<Word> shortened;
        while (!queue.empty() && !shortened) {
            Word node = std::move(queue.front());
            queue.pop_front();
            braid_neighbors(node, nbrs);
            for (auto& [move, next] : nbrs) {
                if (!seen.insert(next).second) continue;
                if (std::size_t p = nil_position(next); p != static_cast<std::size_t>(-1)) {
                    next.erase(next.begin() + p, next.begin() + p + 2);
                    shortened = std::move(next);
                    break;
                }
                queue.push_back(next);
            }
        }
        if (shortened) {
            cur = std::move(*shortened);
            continue;
        }
        return *seen.begin();
    }
}

Word CoxeterSystem::canonical_word(const Word& w) const {
    {
        std::lock_guard lock(caches_->mutex);
        if (auto it = caches_->canon.find(w); it != caches_->canon.end()) return it->second;
    }
    Word result = canonical_word_generic(w);
    {
        std::lock_guard lock(caches_->mutex);
        caches_->canon.emplace(w, result);
    }
    return result;
}

Element CoxeterSystem::multiply(const Element& u, int s) const {
    if (s < 0 || s >= rank()) throw std::out_of_range("generator index out of range");
    if (backend_ == Backend::symmetric) {
        std::vector<int> p = u.one_line ? *u.one_line : permutation_of_word(u.canonical);
        std::swap(p[s], p[s + 1]);
        return element_from_permutation(p);
    }
    Word w = u.canonical;
    w.push_back(s);
    return canonicalize(w);
}

Element CoxeterSystem::multiply(const Element& u, const Element& v) const {
    Element acc = u;
    for (int s : v.canonical) acc = multiply(acc, s);
    return acc;
}

Element CoxeterSystem::inverse(const Element& u) const {
    Word w(u.canonical.rbegin(), u.canonical.rend());
    return canonicalize(w);
}

bool CoxeterSystem::is_descent(const Element& u, int s) const {
    if (s < 0 || s >= rank()) throw std::out_of_range("generator index out of range");
    if (backend_ == Backend::symmetric) {
        std::vector<int> p = u.one_line ? *u.one_line : permutation_of_word(u.canonical);
        return p[s] > p[s + 1];
    }
    return multiply(u, s).length() < u.length();
}

bool CoxeterSystem::is_left_descent(const Element& u, int s) const {
    return is_descent(inverse(u), s);
}

bool CoxeterSystem::bruhat_leq(const Element& u, const Element& v) const {
    // Lifting recursion: strip a descent s of v, following us when s is
    // also a descent of u.
    Element a = u, b = v;
    while (!b.is_identity()) {
        if (a.is_identity()) return true;
        if (a.length() > b.length()) return false;
        int s = b.canonical.back();
        b = multiply(b, s);
        if (is_descent(a, s)) a = multiply(a, s);
    }
    return a.is_identity();
}

std::vector<Word> CoxeterSystem::reduced_expressions(const Element& u) const {
    auto closure = braid_closure(u.canonical);
    return {closure.begin(), closure.end()};
}

std::vector<BraidMove> CoxeterSystem::braid_plan(const Word& reduced, int s) const {
    {
        std::lock_guard lock(caches_->mutex);
        if (auto it = caches_->plans.find({reduced, s}); it != caches_->plans.end()) return it->second;
    }
    Element u = canonicalize(reduced);
    if (u.length() != reduced.size()) throw std::invalid_argument("word is not reduced");
    if (!is_descent(u, s)) throw std::invalid_argument("target letter is not a descent");

    // BFS with neighbors ordered by (m_st, position) yields the shortest
    // plan with the stated tie-breaking.
    std::map<Word, std::pair<Word, BraidMove>> parent;
    std::deque<Word> queue{reduced};
    std::set<Word> seen{reduced};
    std::vector<std::pair<BraidMove, Word>> nbrs;
    Word target;
    bool found = !reduced.empty() && reduced.back() == s;
    if (found) target = reduced;
    while (!queue.empty() && !found) {
        Word cur = std::move(queue.front());
        queue.pop_front();
        braid_neighbors(cur, nbrs);
        for (auto& [move, next] : nbrs) {
            if (!seen.insert(next).second) continue;
            parent.emplace(next, std::make_pair(cur, move));
            if (next.back() == s) {
                target = next;
                found = true;
                break;
            }
            queue.push_back(next);
        }
    }
    if (!found) throw std::logic_error("no braid plan found for a valid descent");

    std::vector<BraidMove> plan;
    for (Word cur = target; cur != reduced;) {
        auto& [prev, move] = parent.at(cur);
        plan.push_back(move);
        cur = prev;
    }
    std::reverse(plan.begin(), plan.end());
    {
        std::lock_guard lock(caches_->mutex);
        caches_->plans.emplace(std::make_pair(reduced, s), plan);
    }
    return plan;
}

Element CoxeterSystem::element_from_permutation(const std::vector<int>& one_line) const {
    if (backend_ != Backend::symmetric)
        throw std::logic_error("permutations require the symmetric backend");
    int n = rank() + 1;
    if (static_cast<int>(one_line.size()) != n)
        throw std::invalid_argument("permutation size does not match group");
    std::vector<bool> used(n + 1, false);
    for (int v : one_line) {
        if (v < 1 || v > n || used[v]) throw std::invalid_argument("malformed permutation");
        used[v] = true;
    }
    Element e;
    e.one_line = one_line;
    e.canonical = lex_min_word_of_permutation(one_line);
    return e;
}

std::vector<int> CoxeterSystem::permutation_of(const Element& u) const {
    if (backend_ != Backend::symmetric)
        throw std::logic_error("permutations require the symmetric backend");
    return u.one_line ? *u.one_line : permutation_of_word(u.canonical);
}

bool is_321_avoiding_pattern(const std::vector<int>& one_line) {
    // No i < j < k with p(i) > p(j) > p(k): scan for a descent pair with a
    // later smaller value.
    int n = static_cast<int>(one_line.size());
    for (int j = 1; j + 1 < n + 1; ++j) {
        int best_before = 0;
        for (int i = 0; i < j; ++i) best_before = std::max(best_before, one_line[i]);
        if (best_before <= one_line[j]) continue;
        for (int k = j + 1; k < n; ++k)
            if (one_line[k] < one_line[j]) return false;
    }
    return true;
}

bool CoxeterSystem::is_321_avoiding(const Element& u) const {
    return is_321_avoiding_pattern(permutation_of(u));
}

std::vector<std::size_t> CoxeterSystem::letter_multiplicities(const Element& u) const {
    if (!is_321_avoiding(u))
        throw std::domain_error("letter multiplicities are only well defined for 321-avoiding elements");
    std::vector<std::size_t> counts(rank(), 0);
    for (int s : u.canonical) ++counts[s];
    return counts;
}

bool CoxeterSystem::is_2_repeating(const Element& u) const {
    // Letter counts are reduced-word invariants only in the 321-avoiding
    // case; outside it the notion is not used and we report false.
    if (!is_321_avoiding(u)) return false;
    for (std::size_t c : letter_multiplicities(u))
        if (c > 2) return false;
    return true;
}

std::vector<Element> CoxeterSystem::all_elements(std::size_t length_cap) const {
    std::vector<Element> out;
    std::set<Word> seen;
    std::deque<Element> queue{identity()};
    seen.insert({});
    while (!queue.empty()) {
        Element cur = std::move(queue.front());
        queue.pop_front();
        out.push_back(cur);
        if (cur.length() >= length_cap) continue;
        for (int s = 0; s < rank(); ++s) {
            Element next = multiply(cur, s);
            if (next.length() > cur.length() && seen.insert(next.canonical).second)
                queue.push_back(next);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string word_to_string(const Word& w) {
    if (w.empty()) return "e";
    std::ostringstream os;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) os << " ";
        os << w[i] + 1;
    }
    return os.str();
}

Word word_from_string(const std::string& text, int rank) {
    Word w;
    if (text == "e") return w;
    std::istringstream is(text);
    int letter;
    while (is >> letter) {
        if (letter < 1 || letter > rank) throw std::out_of_range("letter index out of range");
        w.push_back(letter - 1);
    }
    return w;
}

}  // namespace rtilde
