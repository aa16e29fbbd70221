#include "sumcol/coloring.hpp"

#include <stdexcept>

namespace sumcol {

Coloring::Coloring(Graph host, std::vector<int> colors)
    : host_(std::move(host)), colors_(std::move(colors)), sum_(0), num_colors_(0) {
    if (colors_.size() != static_cast<size_t>(host_.vertex_count()))
        throw std::invalid_argument("Coloring: color vector size mismatch");
    for (int v = 0; v < host_.vertex_count(); ++v) {
        int c = colors_[static_cast<size_t>(v)];
        if (c < 1) throw std::invalid_argument("Coloring: colors must be positive");
        sum_ += c;
        if (c > num_colors_) num_colors_ = c;
        for (int w : host_.neighbors(v)) {
            if (w > v && colors_[static_cast<size_t>(w)] == c)
                throw std::invalid_argument("Coloring: adjacent vertices share a color");
        }
    }
}

}  // namespace sumcol
