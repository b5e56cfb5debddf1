#include "lincolor/coloring.hpp"

#include <algorithm>
#include <set>

namespace lincolor {

Coloring::Coloring(std::vector<int> colors) : colors_(std::move(colors)) {
    for (int c : colors_)
        if (c < 1) throw PreconditionError("colors must be positive");
}

int Coloring::color(int v) const {
    if (v < 0 || v >= vertex_count()) throw PreconditionError("vertex id out of range");
    return colors_[v];
}

int Coloring::size() const {
    std::set<int> s(colors_.begin(), colors_.end());
    return static_cast<int>(s.size());
}

int Coloring::max_color() const {
    return colors_.empty() ? 0 : *std::max_element(colors_.begin(), colors_.end());
}

bool Coloring::is_proper(const Graph& g) const {
    for (auto [u, v] : g.edges())
        if (colors_[u] == colors_[v]) return false;
    return true;
}

Coloring restrict_coloring(const Coloring& c, const std::vector<int>& to_parent) {
    std::vector<int> out(to_parent.size());
    for (std::size_t i = 0; i < to_parent.size(); ++i) out[i] = c.color(to_parent[i]);
    return Coloring(std::move(out));
}

}  // namespace lincolor
