#pragma once

#include <string>

#include "zonorec/zonogon.hpp"

namespace zonorec {

struct SvgOptions {
    double scale = 40.0;  // pixels per longest edge
    bool labels = false;
    bool forest = false;
};

// SVG 1.1 drawing of the projected tiling. Output depends only on the inputs.
std::string render_svg(const Tiling& t, const SvgOptions& opt = {});

}  // namespace zonorec
