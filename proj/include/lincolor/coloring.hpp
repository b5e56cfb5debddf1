#pragma once

#include <vector>

#include "lincolor/graph.hpp"

namespace lincolor {

// Total map vertex -> positive color. Colors need not be contiguous; size()
// is the number of distinct colors actually used.
class Coloring {
  public:
    Coloring() = default;
    explicit Coloring(std::vector<int> colors);

    int vertex_count() const { return static_cast<int>(colors_.size()); }
    int color(int v) const;
    const std::vector<int>& colors() const { return colors_; }
    int size() const;
    int max_color() const;

    bool is_proper(const Graph& g) const;

  private:
    std::vector<int> colors_;
};

// Coloring of an induced subgraph, colors inherited through the remap table.
Coloring restrict_coloring(const Coloring& c, const std::vector<int>& to_parent);

}  // namespace lincolor
