#pragma once

#include <string>

#include "gmmn/network.hpp"

namespace gmmn {

// Dashed Hanan grid, one polyline per path, terminals labelled s<i>/t<i>.
// Pass a null network to draw the instance alone. Output is deterministic.
std::string render_svg(const Instance& instance, const GridNetwork* network);

}  // namespace gmmn
