#pragma once

#include "torcode/coding.hpp"

#include <json.hpp>

namespace torcode {

using json = nlohmann::ordered_json;

inline constexpr const char *kSchema = "torcode/1";

/* Integers that fit in 64 bits become JSON numbers, larger ones strings. */
json to_json(const Int &x);
json to_json(const Rat &x);
json to_json(const QuadExt &x);
json to_json(const Mat2 &m);
json to_json(const Vec2 &v);
json to_json(const BinForm &f);
json to_json(const FormTransform &t);
json to_json(const KernelGroup &k);
json to_json(const HomoclinicPoint &h);
json to_json(const CodingSpec &s);
json to_json(const QPoint &P);
json to_json(const SymWord &w);
json to_json(const DomainPolygon &p);

std::string rat_str(const Rat &x);
std::string torus_rat_str(const TorusRat &v);
std::string point_str(const QPoint &P);
std::string vec_str(const Vec2 &v);

/* Parses "x,y" with rational or integer entries. */
TorusRat parse_torus_rat(const std::string &s);
Vec2 parse_vec2(const std::string &s);
BinForm parse_form(const std::string &s);

} // namespace torcode
