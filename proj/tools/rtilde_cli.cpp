#include "rtilde/closedforms.hpp"
#include "rtilde/coxeter.hpp"
#include "rtilde/diagrams.hpp"
#include "rtilde/hecke.hpp"
#include "rtilde/lightleaves.hpp"
#include "rtilde/poly.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <thread>

namespace {

using namespace rtilde;

// `p:4321` or `p:10,4,...` one-line permutations; otherwise a word of
// 1-based generator indices.
Element parse_element(const CoxeterSystem& sys, const std::string& text) {
    if (text.rfind("p:", 0) == 0) {
        std::string body = text.substr(2);
        std::vector<int> one_line;
        if (body.find(',') != std::string::npos) {
            std::istringstream is(body);
            std::string tok;
            while (std::getline(is, tok, ',')) one_line.push_back(std::stoi(tok));
        } else {
            for (char ch : body) one_line.push_back(ch - '0');
        }
        return sys.element_from_permutation(one_line);
    }
    return sys.canonicalize(word_from_string(text, sys.rank()));
}

int worker_count() {
    if (const char* env = std::getenv("RTILDE_WORKERS")) {
        int n = std::atoi(env);
        if (n > 0) return n;
    }
    return 1;
}

int run_compute(const std::string& group, const std::string& u_text, const std::string& v_text,
                const std::string& method) {
    CoxeterSystem sys = CoxeterSystem::from_spec(group);
    Element u = parse_element(sys, u_text);
    Word v_word = word_from_string(v_text, sys.rank());
    Element v = sys.canonicalize(v_word);
    bool reduced = v.length() == v_word.size();

    std::map<std::string, IntPolynomial> results;
    auto want = [&](const std::string& m) { return method == "all" || method == m; };

    if (want("diagrammatic")) results["diagrammatic"] = diagrammatic_rtilde(sys, u, v_word);
    if (want("recursive")) {
        if (reduced) {
            results["recursive"] = rtilde_recursive(sys, u, v);
        } else if (method == "recursive") {
            results["recursive"] = word_rtilde_recursive(sys, u, v_word);
        }
    }
    if (want("hecke") && reduced) {
        try {
            results["hecke"] =
                express_in_t_minus_tinv(r_polynomial(sys, u, v, 200000));
        } catch (const std::length_error&) {
            if (method == "hecke") throw;
        }
    }
    if (want("closed")) {
        if (is_ud_word(v_word)) {
            results["closed"] = ud_rtilde(sys, u, v_word).first;
        } else if (method == "closed") {
            std::cerr << "closed method: word is not a UD-word\n";
            return 2;
        }
    }
    if (results.empty()) {
        std::cerr << "no applicable method\n";
        return 2;
    }
    const IntPolynomial& first = results.begin()->second;
    for (const auto& [name, poly] : results) {
        if (!(poly == first)) {
            std::cerr << "method disagreement:\n";
            for (const auto& [n2, p2] : results)
                std::cerr << "  " << n2 << ": " << p2.to_string() << "\n";
            return 1;
        }
    }
    std::cout << first.to_string() << "\n";
    return 0;
}

int run_leaves(const std::string& group, const std::string& v_text) {
    CoxeterSystem sys = CoxeterSystem::from_spec(group);
    Word v_word = word_from_string(v_text, sys.rank());
    for (const LightLeaf& leaf : all_leaves(sys, v_word))
        std::cout << serialize_leaf(leaf) << "\n";
    return 0;
}

int run_verify(const std::string& group, std::size_t length_cap) {
    CoxeterSystem sys = CoxeterSystem::from_spec(group);
    std::vector<Element> elements = sys.all_elements(length_cap);

    struct Mismatch {
        std::string line;
    };
    std::vector<std::vector<std::string>> mismatches(elements.size());
    std::vector<RtildeCache> caches(static_cast<std::size_t>(worker_count()));

    auto check_v = [&](std::size_t vi, RtildeCache& cache) {
        const Element& v = elements[vi];
        HeckeElement inv = standard_basis_inverse(sys, v, 200000);
        std::map<Element, IntPolynomial> diag;
        for (const LightLeaf& leaf : all_leaves(sys, v.canonical))
            diag[leaf.top] = diag[leaf.top] + IntPolynomial::t_power(leaf.degree);
        for (const Element& u : elements) {
            IntPolynomial rec = cache.rtilde(sys, u, v);
            IntPolynomial dia = diag.count(u) ? diag[u] : IntPolynomial::zero();
            IntPolynomial hec = express_in_t_minus_tinv(inv.coefficient(u));
            if (!(rec == dia) || !(rec == hec)) {
                std::ostringstream os;
                os << "MISMATCH u=" << word_to_string(u.canonical)
                   << " v=" << word_to_string(v.canonical) << " recursive=" << rec.to_string()
                   << " diagrammatic=" << dia.to_string() << " hecke=" << hec.to_string();
                mismatches[vi].push_back(os.str());
            }
        }
    };

    int workers = worker_count();
    if (workers <= 1) {
        for (std::size_t vi = 0; vi < elements.size(); ++vi) check_v(vi, caches[0]);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&, w] {
                for (std::size_t vi = w; vi < elements.size(); vi += workers)
                    check_v(vi, caches[w]);
            });
        for (auto& th : pool) th.join();
    }

    std::size_t bad = 0;
    for (const auto& group_lines : mismatches)
        for (const auto& line : group_lines) {
            std::cout << line << "\n";
            ++bad;
        }
    std::cout << "verified " << elements.size() * elements.size() << " pairs, " << bad
              << " mismatches\n";
    return bad == 0 ? 0 : 1;
}

int run_render(const std::string& group, const std::string& v_text, const std::string& out_dir,
               const std::string& u_text) {
    CoxeterSystem sys = CoxeterSystem::from_spec(group);
    Word v_word = word_from_string(v_text, sys.rank());
    std::filesystem::create_directories(out_dir);
    std::vector<LightLeaf> all = all_leaves(sys, v_word);
    if (!u_text.empty()) {
        Element u = parse_element(sys, u_text);
        std::erase_if(all, [&](const LightLeaf& l) { return !(l.top == u); });
    }
    for (std::size_t i = 0; i < all.size(); ++i) {
        SGraph g = leaf_to_sgraph(sys, all[i]);
        std::ostringstream name;
        name << "leaf_" << std::setw(3) << std::setfill('0') << i << ".svg";
        std::ofstream f(std::filesystem::path(out_dir) / name.str());
        f << sgraph_to_svg(g);
    }
    std::cout << "wrote " << all.size() << " files to " << out_dir << "\n";
    return 0;
}

int run_scan(const std::string& group, const std::string& w_text) {
    CoxeterSystem sys = CoxeterSystem::from_spec(group);
    Element w = parse_element(sys, w_text);
    RtildeCache cache;
    ScanReport report = conjecture_scan(sys, w, cache);
    std::sort(report.entries.begin(), report.entries.end(),
              [](const ScanEntry& a, const ScanEntry& b) {
                  return std::pair(a.v.canonical, a.u.canonical) <
                         std::pair(b.v.canonical, b.u.canonical);
              });
    for (const ScanEntry& e : report.entries) std::cout << scan_entry_line(e) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"R-tilde polynomial calculator for Coxeter systems"};
    app.require_subcommand(1);

    std::string group, u_text = "e", v_text, w_text, method = "all", out_dir = "leaves_svg";
    std::size_t length_cap = SIZE_MAX, n = 0;
    bool all_pairs = false;

    auto* compute = app.add_subcommand("compute", "compute one R-tilde polynomial");
    compute->add_option("--group", group)->required();
    compute->add_option("--u", u_text);
    compute->add_option("--v", v_text)->required();
    compute->add_option("--method", method)
        ->check(CLI::IsMember({"all", "diagrammatic", "recursive", "hecke", "closed"}));

    auto* leaves_cmd = app.add_subcommand("leaves", "list the light leaves of a word");
    leaves_cmd->add_option("--group", group)->required();
    leaves_cmd->add_option("--v", v_text)->required();

    auto* verify = app.add_subcommand("verify", "cross-check all methods over a group");
    verify->add_option("--group", group)->required();
    verify->add_option("--length-cap", length_cap);
    verify->add_flag("--all-pairs", all_pairs, "check every pair (the default)");

    auto* closed = app.add_subcommand("closed", "closed formulas");
    closed->require_subcommand(1);
    auto* pag = closed->add_subcommand("pagliacci", "R-tilde(e, 34...n12)");
    pag->add_option("--n", n)->required();
    auto* power = closed->add_subcommand("power", "R-tilde(u, s^n)");
    power->add_option("--n", n)->required();
    power->add_option("--u", u_text);
    auto* ud = closed->add_subcommand("ud", "UD-word case analysis");
    ud->add_option("--group", group)->required();
    ud->add_option("--u", u_text);
    ud->add_option("--v", v_text)->required();
    auto* general = closed->add_subcommand("general", "321-avoiding 2-repeating closed form");
    general->add_option("--group", group)->required();
    general->add_option("--v", v_text)->required();

    auto* render = app.add_subcommand("render", "write SVG diagrams for light leaves");
    render->add_option("--group", group)->required();
    render->add_option("--v", v_text)->required();
    render->add_option("--out", out_dir);
    std::string u_filter;
    render->add_option("--u", u_filter);

    auto* scan = app.add_subcommand("scan", "conjecture factorization scan below w");
    scan->add_option("--group", group)->required();
    scan->add_option("--w", w_text)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (compute->parsed()) return run_compute(group, u_text, v_text, method);
        if (leaves_cmd->parsed()) return run_leaves(group, v_text);
        if (verify->parsed()) return run_verify(group, length_cap);
        if (closed->parsed()) {
            if (pag->parsed()) {
                std::cout << pagliacci_rtilde(n).to_string() << "\n";
                return 0;
            }
            if (power->parsed()) {
                CoxeterSystem sys(CoxeterMatrix::dihedral(2));
                Element u = u_text == "s" ? sys.generator(0) : parse_element(sys, u_text);
                std::cout << power_word_rtilde(sys, u, n, 0).to_string() << "\n";
                return 0;
            }
            if (ud->parsed()) {
                CoxeterSystem sys = CoxeterSystem::from_spec(group);
                Word v_word = word_from_string(v_text, sys.rank());
                if (!is_ud_word(v_word)) {
                    std::cerr << "word is not a UD-word\n";
                    return 2;
                }
                auto [poly, table] = ud_rtilde(sys, parse_element(sys, u_text), v_word);
                std::cout << poly.to_string() << "\n";
                for (auto it = table.cases.rbegin(); it != table.cases.rend(); ++it)
                    std::cout << "s" << it->first + 1 << ": " << to_string(it->second) << "\n";
                return 0;
            }
            if (general->parsed()) {
                CoxeterSystem sys = CoxeterSystem::from_spec(group);
                Element v = parse_element(sys, v_text);
                std::cout << general_rtilde_e(sys, v).to_string() << "\n";
                return 0;
            }
        }
        if (render->parsed()) return run_render(group, v_text, out_dir, u_filter);
        if (scan->parsed()) return run_scan(group, w_text);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
