#include "rtilde/closedforms.hpp"

#include <algorithm>
#include <bit>
#include <climits>
#include <cstdint>
#include <istream>
#include <sstream>
#include <stdexcept>

namespace rtilde {

Word UDWord::flatten() const {
    Word w = ascending;
    if (peak) w.push_back(*peak);
    w.insert(w.end(), descending.begin(), descending.end());
    return w;
}

std::optional<UDWord> is_ud_word(const Word& w) {
    if (w.empty()) return UDWord{};
    int peak = *std::max_element(w.begin(), w.end());
    if (std::count(w.begin(), w.end(), peak) != 1) return std::nullopt;
    auto peak_it = std::find(w.begin(), w.end(), peak);
    UDWord ud;
    ud.ascending.assign(w.begin(), peak_it);
    ud.peak = peak;
    ud.descending.assign(peak_it + 1, w.end());
    for (std::size_t i = 0; i + 1 < ud.ascending.size(); ++i)
        if (ud.ascending[i] >= ud.ascending[i + 1]) return std::nullopt;
    for (std::size_t i = 0; i + 1 < ud.descending.size(); ++i)
        if (ud.descending[i] <= ud.descending[i + 1]) return std::nullopt;
    return ud;
}

std::string to_string(UDCase c) {
    switch (c) {
        case UDCase::A1: return "A1";
        case UDCase::A2: return "A2";
        case UDCase::B1: return "B1";
        case UDCase::C1: return "C1";
        case UDCase::C2: return "C2";
        case UDCase::C3: return "C3";
        case UDCase::D1: return "D1";
        case UDCase::D2: return "D2";
    }
    return "?";
}

namespace {

// First UD subword of w (by subset-mask order) that is a reduced word of u.
std::optional<Word> ud_subword_for(const CoxeterSystem& sys, const Element& u, const Word& w) {
    const std::size_t n = w.size();
    if (u.length() > n) return std::nullopt;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        if (static_cast<std::size_t>(std::popcount(mask)) != u.length()) continue;
        Word sub;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (std::uint64_t{1} << i)) sub.push_back(w[i]);
        if (!is_ud_word(sub)) continue;
        if (sys.canonicalize(sub) == u) return sub;
    }
    return std::nullopt;
}

}  // namespace

std::pair<IntPolynomial, CaseTable> ud_rtilde(const CoxeterSystem& sys, const Element& u,
                                              const Word& word) {
    if (!is_ud_word(word)) throw std::invalid_argument("word is not a UD-word");
    auto sub = ud_subword_for(sys, u, word);
    if (!sub) return {IntPolynomial::zero(), CaseTable{}};

    auto count_in = [](const Word& w, int letter) {
        return std::count(w.begin(), w.end(), letter);
    };
    CaseTable table;
    std::set<int, std::greater<int>> letters(word.begin(), word.end());
    for (int letter : letters) {
        auto mv = count_in(word, letter);
        auto mu = count_in(*sub, letter);
        bool next_in_u = count_in(*sub, letter + 1) > 0;
        UDCase c;
        std::size_t exponent = 0;
        if (mv == 1) {
            c = mu == 0 ? UDCase::A1 : UDCase::A2;
            exponent = mu == 0 ? 1 : 0;
        } else if (mu == 2) {
            c = UDCase::B1;
        } else if (mu == 1) {
            if (!next_in_u) {
                c = UDCase::C3;
            } else {
                auto pos_i = std::find(sub->begin(), sub->end(), letter);
                auto pos_next = std::find(sub->begin(), sub->end(), letter + 1);
                c = pos_i < pos_next ? UDCase::C1 : UDCase::C2;
            }
            exponent = 1;
        } else if (next_in_u) {
            c = UDCase::D1;
            exponent = 2;
        } else {
            c = UDCase::D2;
            ++table.d2_count;
        }
        table.cases[letter] = c;
        table.c += exponent;
    }
    IntPolynomial factor = IntPolynomial(std::vector<Coeff>{1, 0, 1});  // t^2 + 1
    IntPolynomial result = IntPolynomial::t_power(table.c);
    for (std::size_t i = 0; i < table.d2_count; ++i) result = result * factor;
    return {result, table};
}

IntPolynomial power_word_rtilde(const CoxeterSystem& sys, const Element& u, std::size_t n,
                                int s) {
    if (u.is_identity()) return fibonacci(n);
    if (u == sys.generator(s)) return n == 0 ? IntPolynomial::zero() : fibonacci(n - 1);
    return IntPolynomial::zero();
}

FibTree build_fib_tree(std::size_t n) {
    if (n == 0) throw std::invalid_argument("Fibonacci tree needs n >= 1");
    FibTree tree;
    tree.nodes.push_back({-1, ' ', 0, {}});
    std::vector<int> leaves{0};
    for (std::size_t gen = 1; gen <= n; ++gen) {
        std::vector<int> next;
        for (int leaf : leaves) {
            auto add_child = [&](char step) {
                int id = static_cast<int>(tree.nodes.size());
                tree.nodes.push_back({leaf, step, gen, {}});
                tree.nodes[leaf].children.push_back(id);
                next.push_back(id);
            };
            if (tree.nodes[leaf].parent >= 0 && tree.nodes[leaf].step == 'L') {
                add_child('C');  // left brothers get a single child
            } else {
                add_child('L');
                add_child('R');
            }
        }
        leaves = std::move(next);
    }
    tree.generations = n;
    return tree;
}

std::vector<FibPath> fib_paths(std::size_t n) {
    if (n == 0) return {""};
    FibTree tree = build_fib_tree(n);
    std::vector<FibPath> out;
    for (std::size_t i = 0; i < tree.nodes.size(); ++i) {
        if (tree.nodes[i].depth != n) continue;
        FibPath p;
        for (int cur = static_cast<int>(i); tree.nodes[cur].parent >= 0;
             cur = tree.nodes[cur].parent)
            p += tree.nodes[cur].step;
        std::reverse(p.begin(), p.end());
        out.push_back(std::move(p));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<FibPath> restricted_fib_paths(std::size_t n) {
    std::vector<FibPath> out = fib_paths(n);
    std::erase_if(out, [](const FibPath& p) { return !p.empty() && p.back() == 'L'; });
    return out;
}

std::size_t right_steps(const FibPath& p) {
    return static_cast<std::size_t>(std::count(p.begin(), p.end(), 'R'));
}

std::size_t left_steps(const FibPath& p) {
    return static_cast<std::size_t>(std::count(p.begin(), p.end(), 'L'));
}

Word pagliacci_word(std::size_t n) {
    if (n < 3) throw std::invalid_argument("pagliacci word needs n >= 3");
    Word w;
    for (std::size_t k = 2; k <= n - 1; ++k) {
        w.push_back(static_cast<int>(k) - 1);  // s_k, 0-based
        w.push_back(static_cast<int>(k) - 2);  // s_{k-1}
    }
    return w;
}

IntPolynomial pagliacci_rtilde(std::size_t n) {
    if (n < 3) throw std::invalid_argument("pagliacci formula needs n >= 3");
    return fibonacci(n - 2).scaled_by_t_power(n - 2);
}

std::vector<CLRWord> clr_words(std::size_t n) {
    if (n < 3) throw std::invalid_argument("CLR words need n >= 3");
    // Same successor structure as Fibonacci-tree paths; a trailing L is
    // legal because its forced C would fall past the last letter.
    return fib_paths(n - 3);
}

FibPath clr_to_path(const CLRWord& w) { return w; }

std::size_t clr_degree(const CLRWord& w, std::size_t n) {
    return 2 + 2 * ((n - 3) - left_steps(w));
}

bool in_point_cone(int i, int j) {
    return j <= 0 && std::abs(i) <= -j && ((i - j) % 2 == 0);
}

bool config_is_admissible(const PointConfiguration& c) {
    std::map<int, std::vector<int>> rows;  // j -> sorted i's
    for (const auto& [i, j] : c.points) {
        if (!in_point_cone(i, j)) throw std::domain_error("point outside the cone");
        rows[j].push_back(i);
    }
    for (auto& [j, is] : rows) {
        std::sort(is.begin(), is.end());
        if (is.size() > 2) return false;
        if (is.size() == 2) {
            if (is[1] - is[0] != 2) return false;
            if (!c.points.count({is[0] + 1, j + 1}) || !c.points.count({is[0] + 1, j - 1}))
                return false;
        }
    }
    return true;
}

Word config_to_word(const PointConfiguration& c) {
    if (!config_is_admissible(c)) throw std::domain_error("configuration is not admissible");
    std::vector<std::pair<int, int>> pts(c.points.begin(), c.points.end());
    std::sort(pts.begin(), pts.end(), [](const auto& a, const auto& b) {
        return std::pair(a.first, -a.second) < std::pair(b.first, -b.second);
    });
    Word w;
    for (const auto& [i, j] : pts) w.push_back(-j);
    return w;
}

PointConfiguration parse_config(std::istream& in) {
    PointConfiguration c;
    std::string line;
    while (std::getline(in, line)) {
        if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
        std::istringstream ls(line);
        int i, j;
        if (ls >> i >> j) c.points.insert({i, j});
    }
    return c;
}

PointConfiguration heap_of(const CoxeterSystem& sys, const Element& v) {
    if (!sys.is_321_avoiding(v) || !sys.is_2_repeating(v))
        throw std::domain_error("heap embedding needs a 321-avoiding 2-repeating element");
    // A doubled letter s forces a rigid block: its two points at distance 2
    // with the unique occurrences of s-1 and s+1 between them in the middle
    // column. Blocks (and loose single points) are then shifted right as
    // little as possible so that reading by ascending column, top to bottom,
    // replays the canonical word.
    const Word& w = v.canonical;
    const std::size_t n = w.size();

    std::vector<std::size_t> parent(n);
    std::vector<int> delta(n, 0);  // x[i] = x[root] + delta[i]
    for (std::size_t i = 0; i < n; ++i) parent[i] = i;
    auto find = [&](std::size_t i) {
        int off = 0;
        while (parent[i] != i) {
            off += delta[i];
            i = parent[i];
        }
        return std::pair(i, off);
    };
    auto unite = [&](std::size_t i, std::size_t j, int d) {
        auto [ri, oi] = find(i);
        auto [rj, oj] = find(j);
        if (ri == rj) {
            if (oj - oi != d) throw std::logic_error("inconsistent heap block");
            return;
        }
        parent[rj] = ri;
        delta[rj] = oi + d - oj;
    };

    std::map<int, std::vector<std::size_t>> occ;
    for (std::size_t i = 0; i < n; ++i) occ[w[i]].push_back(i);
    for (const auto& [s, ps] : occ) {
        if (ps.size() != 2) continue;
        unite(ps[0], ps[1], 2);
        for (int t : {s - 1, s + 1}) {
            std::size_t middle = n;
            for (std::size_t i = ps[0] + 1; i < ps[1]; ++i)
                if (w[i] == t) middle = i;
            if (middle == n) throw std::logic_error("doubled letter lacks a middle neighbor");
            unite(ps[0], middle, 1);
        }
    }

    // Reading-order lower bounds between non-commuting occurrences: i is
    // read before j iff x_i < x_j, or x_i = x_j with the smaller letter on
    // top.
    std::vector<int> shift(n, INT_MIN);
    auto parity_raise = [&](std::size_t root, int bound) {
        int have = shift[root];
        if (have >= bound) return false;
        int up = bound;
        if (have != INT_MIN && ((up - have) % 2 + 2) % 2 != 0) ++up;
        shift[root] = up;
        return true;
    };
    for (std::size_t i = 0; i < n; ++i) {
        auto [r, off] = find(i);
        if (shift[r] == INT_MIN) shift[r] = -w[i] - off;  // cone left wall
        else
            parity_raise(r, -w[i] - off);
    }
    // Fix parity seeds: align each root so every member has x = -letter mod 2.
    for (std::size_t i = 0; i < n; ++i) {
        auto [r, off] = find(i);
        if ((((shift[r] + off + w[i]) % 2) + 2) % 2 != 0) ++shift[r];
    }
    for (std::size_t round = 0; round <= n + 1; ++round) {
        bool changed = false;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                if (std::abs(w[i] - w[j]) != 1) continue;
                auto [ri, oi] = find(i);
                auto [rj, oj] = find(j);
                if (ri == rj) continue;
                int need = shift[ri] + oi + (w[j] < w[i] ? 1 : 0) - oj;
                changed |= parity_raise(rj, need);
            }
        if (!changed) break;
        if (round == n + 1) throw std::logic_error("heap shift relaxation did not settle");
    }

    PointConfiguration c;
    for (std::size_t i = 0; i < n; ++i) {
        auto [r, off] = find(i);
        int x = shift[r] + off;
        if (std::abs(x) > w[i]) throw std::logic_error("heap placement escaped the cone");
        c.points.insert({x, -w[i]});
    }
    if (!config_is_admissible(c)) throw std::logic_error("heap placement is not admissible");
    if (!(sys.canonicalize(config_to_word(c)) == v))
        throw std::logic_error("heap placement does not read back to the element");
    return c;
}

std::vector<std::size_t> ChainDecomposition::chain_sizes() const {
    std::vector<std::size_t> out;
    for (const auto& [a, b] : chains) out.push_back(static_cast<std::size_t>(b - a + 1));
    return out;
}

ChainDecomposition chain_stats(const CoxeterSystem& sys, const Element& v) {
    if (!sys.is_321_avoiding(v) || !sys.is_2_repeating(v))
        throw std::domain_error("chain statistics need a 321-avoiding 2-repeating element");
    auto counts = sys.letter_multiplicities(v);
    ChainDecomposition d;
    for (int s = 0; s < static_cast<int>(counts.size()); ++s) {
        if (counts[s] == 1) d.singles.push_back(s);
        if (counts[s] == 2) {
            if (!d.chains.empty() && d.chains.back().second == s - 1)
                d.chains.back().second = s;
            else
                d.chains.emplace_back(s, s);
        }
    }
    return d;
}

IntPolynomial general_rtilde_e(const CoxeterSystem& sys, const Element& v) {
    ChainDecomposition d = chain_stats(sys, v);
    IntPolynomial result = IntPolynomial::t_power(d.single_count());
    for (std::size_t lambda : d.chain_sizes()) result = result * modified_fibonacci(lambda);
    return result;
}

std::optional<IntPolynomial> divide_exact(const IntPolynomial& p, const IntPolynomial& monic) {
    if (!monic.is_monic()) throw std::invalid_argument("divisor must be monic");
    if (p.is_zero()) return IntPolynomial::zero();
    auto dp = *p.degree();
    auto dm = *monic.degree();
    if (dp < dm) return std::nullopt;
    std::vector<Coeff> rem = p.coefficients();
    std::vector<Coeff> quot(dp - dm + 1, 0);
    for (std::size_t k = dp + 1; k-- > dm;) {
        Coeff c = rem[k];
        if (c == 0) continue;
        quot[k - dm] = c;
        for (std::size_t j = 0; j <= dm; ++j) rem[k - dm + j] -= c * monic.coefficient(j);
    }
    for (const Coeff& c : rem)
        if (c != 0) return std::nullopt;
    return IntPolynomial(std::move(quot));
}

ScanReport conjecture_scan(const CoxeterSystem& sys, const Element& w, RtildeCache& cache) {
    if (!sys.is_321_avoiding(w) || !sys.is_2_repeating(w))
        throw std::domain_error("scan needs a 321-avoiding 2-repeating element");
    std::vector<Element> below;
    for (const Element& x : sys.all_elements(w.length()))
        if (sys.bruhat_leq(x, w)) below.push_back(x);

    ScanReport report;
    report.w = w;
    for (const Element& v : below) {
        for (const Element& u : below) {
            if (!sys.bruhat_leq(u, v)) continue;
            ScanEntry entry;
            entry.u = u;
            entry.v = v;
            entry.poly = cache.rtilde(sys, u, v);
            // Peel modified Fibonacci factors greedily from the largest
            // plausible size down; what remains must be a bare power of t.
            IntPolynomial rest = entry.poly;
            std::size_t cmax = rest.is_zero() ? 0 : *rest.degree() / 2;
            for (std::size_t csize = cmax; csize >= 1; --csize) {
                for (;;) {
                    auto q = divide_exact(rest, modified_fibonacci(csize));
                    if (!q) break;
                    entry.cs.push_back(csize);
                    rest = *q;
                }
            }
            if (auto d = rest.degree(); d && rest == IntPolynomial::t_power(*d)) {
                entry.factored = true;
                entry.a = *d;
            }
            report.entries.push_back(std::move(entry));
        }
    }
    return report;
}

std::string scan_entry_line(const ScanEntry& e) {
    std::ostringstream os;
    os << "u=" << word_to_string(e.u.canonical) << " v=" << word_to_string(e.v.canonical)
       << " poly=" << e.poly.to_machine_string()
       << " status=" << (e.factored ? "factored" : "candidate") << " a=" << e.a << " cs=[";
    for (std::size_t i = 0; i < e.cs.size(); ++i) {
        if (i) os << ", ";
        os << e.cs[i];
    }
    os << "]";
    return os.str();
}

}  // namespace rtilde
