#include "rtilde/diagrams.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

namespace rtilde {

namespace {

constexpr double kEps = 1e-9;

struct Builder {
    const CoxeterSystem& sys;
    SGraph g;
    // Open strand ends, left to right; each refers into g.strands.
    struct Active {
        std::size_t strand;
        int color;
        double x;
    };
    std::vector<Active> active;

    std::size_t start_strand(int color, Point p) {
        g.strands.push_back({color, {p}});
        return g.strands.size() - 1;
    }
    void extend(std::size_t strand, Point p) { g.strands[strand].path.push_back(p); }
};

}  // namespace

SGraph leaf_to_sgraph(const CoxeterSystem& sys, const LightLeaf& leaf) {
    Builder b{sys};
    const std::size_t n = leaf.word.size();
    b.g.bottom = leaf.word;
    b.g.top = leaf.top_word;
    b.g.height = static_cast<double>(n) + 1.0;

    for (std::size_t k = 0; k < n; ++k) {
        int s = leaf.word[k];
        double xb = static_cast<double>(k) + 1.0;
        double band = static_cast<double>(k);
        const LeafStep& step = leaf.steps[k];
        switch (step.kind) {
            case StepKind::Dot: {
                std::size_t id = b.start_strand(s, {xb, 0.0});
                b.extend(id, {xb, band + 0.5});
                b.g.dots.push_back({xb, band + 0.5});
                break;
            }
            case StepKind::Through: {
                std::size_t id = b.start_strand(s, {xb, 0.0});
                b.active.push_back({id, s, xb});
                break;
            }
            case StepKind::Merge: {
                // Braid-move vertices first, staggered inside the band.
                const auto& plan = step.plan;
                for (std::size_t j = 0; j < plan.size(); ++j) {
                    const BraidMove& move = plan[j];
                    double y = band + 0.6 * (static_cast<double>(j) + 1.0) /
                                          (static_cast<double>(plan.size()) + 1.0);
                    double cx = 0.0;
                    for (int i = 0; i < move.order; ++i) cx += b.active[move.position + i].x;
                    cx /= move.order;
                    b.g.vertices.push_back({move.s, move.t, move.order, {cx, y}});
                    for (int i = 0; i < move.order; ++i) {
                        Builder::Active& a = b.active[move.position + i];
                        b.extend(a.strand, {a.x, y - 0.05});
                        b.extend(a.strand, {cx, y});
                        int color = (i % 2 == 0) ? move.t : move.s;
                        std::size_t id = b.start_strand(color, {cx, y});
                        b.extend(id, {a.x, y + 0.05});
                        a.strand = id;
                        a.color = color;
                    }
                }
                // The rightmost strand now carries s; close it onto the
                // bottom point with an arc.
                Builder::Active a = b.active.back();
                b.active.pop_back();
                b.extend(a.strand, {a.x, band + 0.75});
                b.extend(a.strand, {(a.x + xb) / 2.0, band + 0.9});
                b.extend(a.strand, {xb, band + 0.75});
                b.extend(a.strand, {xb, 0.0});
                break;
            }
        }
    }
    // Route survivors to the top boundary in order.
    for (std::size_t i = 0; i < b.active.size(); ++i) {
        Builder::Active& a = b.active[i];
        double xt = static_cast<double>(i) + 1.0;
        b.extend(a.strand, {a.x, b.g.height - 0.5});
        b.extend(a.strand, {xt, b.g.height});
    }
    return b.g;
}

Word bottom_word_of(const SGraph& g) {
    std::vector<std::pair<double, int>> pts;
    for (const auto& s : g.strands) {
        if (s.path.empty()) continue;
        if (std::abs(s.path.front().y) < kEps) pts.emplace_back(s.path.front().x, s.color);
        if (std::abs(s.path.back().y) < kEps) pts.emplace_back(s.path.back().x, s.color);
    }
    std::sort(pts.begin(), pts.end());
    Word w;
    for (auto& [x, c] : pts) w.push_back(c);
    return w;
}

Word top_word_of(const SGraph& g) {
    std::vector<std::pair<double, int>> pts;
    for (const auto& s : g.strands) {
        if (s.path.empty()) continue;
        if (std::abs(s.path.front().y - g.height) < kEps)
            pts.emplace_back(s.path.front().x, s.color);
        if (std::abs(s.path.back().y - g.height) < kEps)
            pts.emplace_back(s.path.back().x, s.color);
    }
    std::sort(pts.begin(), pts.end());
    Word w;
    for (auto& [x, c] : pts) w.push_back(c);
    return w;
}

namespace {

// 10 distinguishable colors, cycling by generator index.
const char* kPalette[10] = {"#e6194b", "#3c89d0", "#3cb44b", "#f58231", "#911eb4",
                            "#46f0f0", "#f032e6", "#808000", "#9a6324", "#000075"};

std::string fmt(double v) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(2) << v;
    return os.str();
}

}  // namespace

std::string sgraph_to_svg(const SGraph& g) {
    const double unit = 40.0;
    const double margin = 20.0;
    double width = (static_cast<double>(std::max<std::size_t>(g.bottom.size(), 1)) + 1.0) * unit +
                   2.0 * margin;
    double height = g.height * unit + 2.0 * margin;
    auto tx = [&](double x) { return margin + x * unit; };
    auto ty = [&](double y) { return margin + (g.height - y) * unit; };

    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << fmt(width)
       << "\" height=\"" << fmt(height) << "\">\n";
    for (const auto& s : g.strands) {
        os << "  <polyline fill=\"none\" stroke=\"" << kPalette[s.color % 10]
           << "\" stroke-width=\"2\" points=\"";
        for (std::size_t i = 0; i < s.path.size(); ++i) {
            if (i) os << " ";
            os << fmt(tx(s.path[i].x)) << "," << fmt(ty(s.path[i].y));
        }
        os << "\"/>\n";
    }
    for (const auto& d : g.dots)
        os << "  <circle cx=\"" << fmt(tx(d.x)) << "\" cy=\"" << fmt(ty(d.y))
           << "\" r=\"4\" fill=\"black\"/>\n";
    for (const auto& v : g.vertices)
        os << "  <circle cx=\"" << fmt(tx(v.position.x)) << "\" cy=\"" << fmt(ty(v.position.y))
           << "\" r=\"5\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
    os << "</svg>\n";
    return os.str();
}

std::string sgraph_to_text(const SGraph& g) {
    // Two columns per unit of x, one row per half unit of y.
    std::size_t cols = 2 * (g.bottom.size() + 2);
    std::size_t rows = static_cast<std::size_t>(g.height * 2.0) + 1;
    std::vector<std::string> grid(rows, std::string(cols, ' '));
    auto put = [&](double x, double y, char c) {
        auto col = static_cast<std::size_t>(std::lround(x * 2.0));
        auto row = static_cast<std::size_t>(std::lround((g.height - y) * 2.0));
        if (row < rows && col < cols) grid[row][col] = c;
    };
    for (const auto& s : g.strands) {
        for (std::size_t i = 0; i + 1 < s.path.size(); ++i) {
            Point a = s.path[i], b2 = s.path[i + 1];
            double dy = b2.y - a.y, dx = b2.x - a.x;
            int steps = std::max(1, static_cast<int>(std::ceil(std::max(std::abs(dx), std::abs(dy)) * 2.0)));
            for (int k = 0; k <= steps; ++k) {
                double f = static_cast<double>(k) / steps;
                char c = '|';
                if (std::abs(dx) > kEps) c = dx > 0 ? ')' : '(';
                put(a.x + f * dx, a.y + f * dy, c);
            }
        }
    }
    for (const auto& v : g.vertices)
        if (v.order >= 3) put(v.position.x, v.position.y, 'X');
    for (const auto& d : g.dots) put(d.x, d.y, '.');
    std::string out;
    for (auto& row : grid) {
        while (!row.empty() && row.back() == ' ') row.pop_back();
        out += row;
        out += '\n';
    }
    return out;
}

}  // namespace rtilde
