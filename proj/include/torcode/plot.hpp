#pragma once

#include "torcode/coding.hpp"

#include <string>
#include <vector>

namespace torcode {

/*
 * SVG 1.1 picture of a coding: the unit square, the domain b(Pi) in the
 * plane, the outline of Pi in split coordinates, and labelled torus points.
 * Output depends only on the arguments.
 */
std::string render_svg(const CodingSpec &spec, const std::vector<TorusRat> &points);

} // namespace torcode
